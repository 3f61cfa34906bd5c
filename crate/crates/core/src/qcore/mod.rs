//! q-integers, Gaussian binomials, polynomials in `x` over `Q(q)` and the
//! operators acting on them.

mod basis;
mod interp;
mod operators;
mod qnum;
mod stirling;
mod xpoly;

pub use basis::{
    from_p_basis, from_qbinom_basis, newton_p, qbinom_at, qbinom_x, to_p_basis, to_qbinom_basis, QBinomExpansion,
};
pub(crate) use basis::qbinom_numerators;
pub use interp::newton_interpolate;
pub use operators::{hahn_delta, q_deriv, subst_affine};
pub use qnum::{binomial, gauss_binom, q_factorial, q_int, q_pochhammer};
pub use stirling::q_stirling;
pub use xpoly::XPoly;
