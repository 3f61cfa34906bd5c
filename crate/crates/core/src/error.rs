use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("cannot evaluate a Laurent polynomial with negative exponents at q = 0")]
    EvalAtZero,
    #[error("evaluation point is a pole of the rational function")]
    Pole,
    #[error("path enumeration for n = {n}, k = {k} needs {steps} free steps, above the cap of {cap}")]
    PathCapExceeded { n: u32, k: u32, steps: u32, cap: u32 },
    #[error("tilde_f(m, n) needs m >= n, got m = {m}, n = {n}")]
    InvalidTildeIndex { m: u32, n: u32 },
    #[error("interpolation nodes {0} and {1} coincide")]
    RepeatedNode(usize, usize),
    #[error("{nodes} interpolation nodes but {values} values")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("numerator of C_{0}(x|q) is not a polynomial")]
    NotPolynomial(u32),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
