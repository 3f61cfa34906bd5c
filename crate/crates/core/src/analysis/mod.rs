//! Numerators of `C_n(x|q)`, their Newton polytopes, and the named check
//! suites that tie every module together.

mod numerator;
mod polytope;
mod suite;

pub use numerator::{numerator, theorem1_numerator, NumeratorReport};
pub use polytope::{newton_polytope, NewtonPolytope};
pub use suite::{run_suite, run_suite_item, Suite, SuiteOptions, SuiteReport, SuiteStatus};
