use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns [`Result`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("z = {re} + {im}i lies on the asinh branch cut (imaginary axis, |Im z| > 1)")]
    BranchCut { re: f64, im: f64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("no sign change on [{lo}, {hi}]")]
    Bracketing { lo: f64, hi: f64 },

    #[error("quadrature did not converge: achieved {achieved:e}, target {target:e}")]
    Quadrature { achieved: f64, target: f64 },

    #[error("target is not monotone in r: passes at {r_pass} after failing at {r_fail}")]
    NonMonotone { r_fail: f64, r_pass: f64 },

    #[error("computation failed: {0}")]
    Computation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Error {
    Error::Domain {
        what,
        value,
        domain,
    }
}
