//! Outcome records shared by every identity check.

use alloc::string::String;

/// One checked instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub n: u32,
    pub k: Option<u32>,
    pub pass: bool,
    /// Differing sides on failure, or an observation.
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(id: &str, n: u32, k: Option<u32>) -> Self {
        CheckResult { id: id.into(), n, k, pass: true, detail: None }
    }

    pub fn fail(id: &str, n: u32, k: Option<u32>, detail: String) -> Self {
        CheckResult { id: id.into(), n, k, pass: false, detail: Some(detail) }
    }

    /// Passes iff `lhs == rhs`; records both sides otherwise.
    pub fn compare<T: PartialEq + core::fmt::Display>(id: &str, n: u32, k: Option<u32>, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Self::pass(id, n, k)
        } else {
            Self::fail(id, n, k, alloc::format!("lhs = {lhs}; rhs = {rhs}"))
        }
    }

    /// An observation that is recorded but never counts as a failure.
    pub fn observe(id: &str, n: u32, k: Option<u32>, detail: String) -> Self {
        CheckResult { id: id.into(), n, k, pass: true, detail: Some(detail) }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}
