//! Ballot and q-ballot numbers, lattice paths and q-Catalan numbers.

mod andrews;
mod checks;
mod numbers;
mod path;
mod table;

pub use andrews::{andrews_check, andrews_rhs, AndrewsReading, AndrewsRow};
pub use checks::{
    catalan_q1_identity, key_identity_crossing, key_identity_crossing_shifted, pointed_path_identity, verify_carlitz_convolution,
    verify_carlitz_convolution_with,
};
pub use numbers::{ballot, catalan, qballot, qcatalan, tilde_f, tilde_qcatalan};
pub use path::{lattice_paths, qballot_paths, tilde_f_paths, LatticePath, Step, DEFAULT_PATH_CAP};
pub use table::{BallotCache, BallotTable};
