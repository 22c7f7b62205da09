use serde::Serialize;

use crate::scalar::{Backend, Scalar};
use crate::theta::ThetaPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status", content = "reason")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

/// One side-by-side comparison. `lhs`/`rhs` list θ-coefficients.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub path: String,
    pub words: Vec<String>,
    pub n: i64,
    pub seed: Option<u64>,
    pub trial: Option<usize>,
    pub backend: Backend,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    /// Only set on the exact backend.
    pub exact_equal: Option<bool>,
    pub residual: f64,
    #[serde(flatten)]
    pub status: Status,
}

/// Relative tolerance for float-backend comparisons of finite identities.
pub const FLOAT_TOL: f64 = 1e-9;

impl IdentityReport {
    pub fn compare<S: Scalar>(
        identity: &str,
        path: String,
        words: Vec<String>,
        n: i64,
        lhs: &ThetaPoly<S>,
        rhs: &ThetaPoly<S>,
    ) -> Self {
        let diff = lhs - rhs;
        let residual = diff.max_magnitude();
        let exact_equal = (S::BACKEND == Backend::Exact).then(|| diff.is_zero());
        let pass = match exact_equal {
            Some(eq) => eq,
            None => residual <= FLOAT_TOL * lhs.max_magnitude().max(rhs.max_magnitude()).max(1.0),
        };
        IdentityReport {
            identity: identity.to_string(),
            path,
            words,
            n,
            seed: None,
            trial: None,
            backend: S::BACKEND,
            lhs: lhs.render(),
            rhs: rhs.render(),
            exact_equal,
            residual,
            status: if pass { Status::Pass } else { Status::Fail },
        }
    }

    pub fn skipped(identity: &str, path: String, words: Vec<String>, n: i64, backend: Backend, reason: String) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            path,
            words,
            n,
            seed: None,
            trial: None,
            backend,
            lhs: Vec::new(),
            rhs: Vec::new(),
            exact_equal: None,
            residual: 0.0,
            status: Status::Skipped(reason),
        }
    }

    pub fn with_trial(mut self, seed: u64, trial: usize) -> Self {
        self.seed = Some(seed);
        self.trial = Some(trial);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
