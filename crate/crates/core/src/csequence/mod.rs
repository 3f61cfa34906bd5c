//! The interpolating family `C_n(x|q)`, built three independent ways.

mod family;
mod q1;
mod theorem1;

pub use family::{c_difference, c_recurrence, difference_step, recurrence_step, CFamily, Method};
pub use q1::{c_q1, c_q1_binomial_at, crossing_identity_q1, shifted_crossing_identity_q1};
pub use theorem1::{
    c_eval_qint, c_shifted_theorem1, c_theorem1, expected_leading_coeff, prop1_value, theorem1_expansion,
    theorem1_coeffs_in_nq,
};
