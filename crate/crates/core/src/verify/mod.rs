//! Independent numerical oracles.
//!
//! Every radius constant is re-derived by sampling images of circles
//! `|z| = r` under an extremal function and searching for the largest `r`
//! whose image stays in the target region. Inclusion relations and geometric
//! invariants of the petal are checked the same way, by dense sampling.
//! All grids are fixed, so reports are reproducible bit for bit.

mod caratheodory;
mod certify;
mod inclusion;
mod oracle;
mod suite;

use serde::Serialize;

pub use caratheodory::{janowski_subset, pn_alpha_bound, pn_cd_disk};
pub use certify::{certify, certify_with, estimate_k0_radius, f0_convexity_map, K0Estimate};
pub use inclusion::{check_inclusion, parabola_containment_violation, InclusionRelation};
pub use oracle::{sup_radius_oracle, OracleGrid, Regime, SupRadius};
pub use suite::{radius_claims, run_suite, Scope, SuiteOptions};

/// Agreement required between a closed-form radius and its oracle.
pub const AGREEMENT_TOL: f64 = 1e-4;
/// Distance allowed between a witness value and the boundary point it should hit.
pub const TOUCH_TOL: f64 = 1e-6;

/// How `claimed` and `oracle` are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    /// `|claimed - oracle|`
    Equal,
    /// The claim is a lower bound: `max(0, claimed - oracle)`.
    ClaimBelowOracle,
    /// The claim is an upper bound: `max(0, oracle - claimed)`.
    OracleBelowClaim,
}

impl CheckMode {
    pub fn defect(&self, claimed: f64, oracle: f64) -> f64 {
        let d = match self {
            Self::Equal => (claimed - oracle).abs(),
            Self::ClaimBelowOracle => (claimed - oracle).max(0.0),
            Self::OracleBelowClaim => (oracle - claimed).max(0.0),
        };
        if d.is_nan() {
            f64::INFINITY
        } else {
            d
        }
    }
}

/// One checked claim.
///
/// `passed` holds when `abs_diff <= tol` and, if a sharpness touch point was
/// evaluated, its residual is below [`TOUCH_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub claimed: f64,
    pub oracle: f64,
    pub abs_diff: f64,
    pub passed: bool,
    pub samples: usize,
    pub tol: f64,
    pub mode: CheckMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<Regime>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub touch_residual: Option<f64>,
}

impl VerificationReport {
    pub fn new(
        claim: impl Into<String>,
        claimed: f64,
        oracle: f64,
        mode: CheckMode,
        samples: usize,
        tol: f64,
    ) -> Self {
        let abs_diff = mode.defect(claimed, oracle);
        Self {
            claim: claim.into(),
            claimed,
            oracle,
            abs_diff,
            passed: abs_diff <= tol,
            samples,
            tol,
            mode,
            regime: None,
            touch_residual: None,
        }
    }

    pub(crate) fn with_touch(mut self, residual: f64) -> Self {
        self.touch_residual = Some(residual);
        self.passed = self.abs_diff <= self.tol && residual < TOUCH_TOL;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes() {
        assert_eq!(CheckMode::Equal.defect(1.0, 1.5), 0.5);
        assert_eq!(CheckMode::ClaimBelowOracle.defect(1.0, 1.5), 0.0);
        assert_eq!(CheckMode::ClaimBelowOracle.defect(2.0, 1.5), 0.5);
        assert_eq!(CheckMode::OracleBelowClaim.defect(1.0, 1.5), 0.5);
        assert_eq!(CheckMode::Equal.defect(f64::NAN, 1.0), f64::INFINITY);
    }

    #[test]
    fn passed_tracks_tolerance() {
        let r = VerificationReport::new("x", 1.0, 1.0 + 1e-5, CheckMode::Equal, 10, 1e-4);
        assert!(r.passed);
        assert!(!r.clone().with_touch(1e-3).passed);
        let r = VerificationReport::new("x", 1.0, 1.1, CheckMode::Equal, 10, 1e-4);
        assert!(!r.passed);
    }
}
