use std::fmt;

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// The six classes with a named generator and a closed-form radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum NamedClass {
    /// `sqrt(1 + z)`
    Lemniscate,
    /// `sqrt 2 - (sqrt 2 - 1) sqrt((1 - z)/(1 + 2(sqrt 2 - 1) z))`
    Rl,
    /// `1 + 4z/3 + 2z^2/3`
    Cardioid,
    /// `e^z`
    Exponential,
    /// `z + sqrt(1 + z^2)`
    Crescent,
    /// `1 + z/(1 - α z^2)`, `α ∈ [0, 1]`
    Booth { alpha: f64 },
}

/// Ratio classes `f = z·(g/z)·(f/g)` with constraints on both factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioClass {
    /// `Re(f/g) > 0`, `Re(g/z) > 0`
    F1,
    /// `Re(f/g) > 0`, `Re(g/z) > 1/2`
    F2,
    /// `|f/g - 1| < 1`, `Re(g/z) > 0`
    F3,
}

/// Function classes appearing on either side of a radius statement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassId {
    /// The petal class itself; for `n`-fold classes this stands for `A_n ∩ S*_ρ`.
    SRho,
    SAlpha {
        alpha: f64,
    },
    MBeta {
        beta: f64,
    },
    KSt {
        k: f64,
    },
    KAlpha {
        alpha: f64,
    },
    Sn {
        n: u32,
    },
    CSn {
        n: u32,
        alpha: f64,
    },
    JanowskiN {
        n: u32,
        c: f64,
        d: f64,
    },
    Named(NamedClass),
    F,
    Ratio {
        kind: RatioClass,
        n: u32,
    },
}

pub(crate) fn check_order(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(domain("alpha", alpha, "[0, 1)"))
    }
}

pub(crate) fn check_n(n: u32) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(domain("n", n as f64, "integers >= 1"))
    }
}

pub(crate) fn check_janowski(c: f64, d: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&d) {
        return Err(domain("D", d, "[-1, 1)"));
    }
    if !(c <= 1.0) {
        return Err(domain("C", c, "(D, 1]"));
    }
    if !(c > d) {
        return Err(Error::Domain {
            what: "C - D",
            value: c - d,
            domain: "(0, 2]",
        });
    }
    Ok(())
}

impl NamedClass {
    pub fn validate(&self) -> Result<()> {
        if let Self::Booth { alpha } = *self {
            if !(0.0..=1.0).contains(&alpha) {
                return Err(domain("Booth alpha", alpha, "[0, 1]"));
            }
        }
        Ok(())
    }

    pub fn id(&self) -> &'static str {
        match self {
            Self::Lemniscate => "lemniscate",
            Self::Rl => "rl",
            Self::Cardioid => "cardioid",
            Self::Exponential => "exponential",
            Self::Crescent => "crescent",
            Self::Booth { .. } => "booth",
        }
    }
}

impl RatioClass {
    pub fn id(&self) -> &'static str {
        match self {
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F3 => "f3",
        }
    }
}

impl ClassId {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::SRho | Self::F => Ok(()),
            Self::SAlpha { alpha } | Self::KAlpha { alpha } => check_order(alpha),
            Self::MBeta { beta } => {
                if beta > 1.0 {
                    Ok(())
                } else {
                    Err(domain("beta", beta, "(1, inf)"))
                }
            }
            Self::KSt { k } => {
                if k >= 0.0 && k.is_finite() {
                    Ok(())
                } else {
                    Err(domain("k", k, "[0, inf)"))
                }
            }
            Self::Sn { n } | Self::Ratio { n, .. } => check_n(n),
            Self::CSn { n, alpha } => {
                check_n(n)?;
                check_order(alpha)
            }
            Self::JanowskiN { n, c, d } => {
                check_n(n)?;
                check_janowski(c, d)
            }
            Self::Named(named) => named.validate(),
        }
    }

    /// Short identifier, the same string the command line accepts.
    pub fn id(&self) -> &'static str {
        match self {
            Self::SRho => "s-rho",
            Self::SAlpha { .. } => "s-alpha",
            Self::MBeta { .. } => "m-beta",
            Self::KSt { .. } => "k-st",
            Self::KAlpha { .. } => "k-alpha",
            Self::Sn { .. } => "s-n",
            Self::CSn { .. } => "cs-n",
            Self::JanowskiN { .. } => "janowski",
            Self::Named(named) => named.id(),
            Self::F => "f",
            Self::Ratio { kind, .. } => kind.id(),
        }
    }

    /// Named parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Self::SRho | Self::F => vec![],
            Self::SAlpha { alpha } | Self::KAlpha { alpha } => vec![("alpha", alpha)],
            Self::MBeta { beta } => vec![("beta", beta)],
            Self::KSt { k } => vec![("k", k)],
            Self::Sn { n } => vec![("n", n as f64)],
            Self::CSn { n, alpha } => vec![("n", n as f64), ("alpha", alpha)],
            Self::JanowskiN { n, c, d } => vec![("n", n as f64), ("C", c), ("D", d)],
            Self::Named(NamedClass::Booth { alpha }) => vec![("alpha", alpha)],
            Self::Named(_) => vec![],
            Self::Ratio { n, .. } => vec![("n", n as f64)],
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())?;
        let params = self.params();
        if !params.is_empty() {
            let list: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", list.join(";"))?;
        }
        Ok(())
    }
}
