use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::kernel::{asinh_principal, ComplexValue};
use crate::radii::NamedClass;

/// Ma–Minda generators `q` with `q(0) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// `1 + asinh z`
    Petal,
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
    /// `1 + sin z`
    Sine,
    /// `1 + z/(1 - α z^2)`
    Booth { alpha: f64 },
    /// `(1 + C z)/(1 + D z)`
    Janowski { c: f64, d: f64 },
    /// `((1 + z)/(1 - z))^γ`
    StrongPower { gamma: f64 },
}

const RL_C: f64 = 2.0 * (SQRT_2 - 1.0);

fn one() -> ComplexValue {
    ComplexValue::new(1.0, 0.0)
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Booth { alpha } if !(0.0..=1.0).contains(&alpha) => {
                Err(domain("Booth alpha", alpha, "[0, 1]"))
            }
            Self::Janowski { c, d } => {
                if !(-1.0..=1.0).contains(&d) || !(c <= 1.0) || !(c > d) {
                    Err(Error::Domain {
                        what: "Janowski (C, D)",
                        value: c - d,
                        domain: "-1 <= D < C <= 1",
                    })
                } else {
                    Ok(())
                }
            }
            Self::StrongPower { gamma } if !(gamma > 0.0 && gamma <= 1.0) => {
                Err(domain("gamma", gamma, "(0, 1]"))
            }
            _ => Ok(()),
        }?;
        let q0 = self.eval(ComplexValue::new(0.0, 0.0))?;
        if (q0 - 1.0).norm() > 1e-15 {
            return Err(Error::Contract(format!(
                "generator has q(0) = {q0}, expected 1"
            )));
        }
        Ok(())
    }

    /// `q(z)` on the open unit disk.
    pub fn eval(&self, z: ComplexValue) -> Result<ComplexValue> {
        Ok(match *self {
            Self::Petal => 1.0 + asinh_principal(z)?,
            Self::Lemniscate => (1.0 + z).sqrt(),
            Self::Rl => {
                let den = 1.0 + RL_C * z;
                if den.re <= 0.0 && den.im == 0.0 {
                    return Err(Error::Computation(format!(
                        "RL generator factor 1 + 2(sqrt2 - 1)z is non-positive at z = {z}"
                    )));
                }
                SQRT_2 - (SQRT_2 - 1.0) * ((1.0 - z) / den).sqrt()
            }
            Self::Cardioid => 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0,
            Self::Exponential => z.exp(),
            Self::Crescent => z + (1.0 + z * z).sqrt(),
            Self::Sine => 1.0 + z.sin(),
            Self::Booth { alpha } => 1.0 + z / (1.0 - alpha * z * z),
            Self::Janowski { c, d } => (1.0 + c * z) / (1.0 + d * z),
            Self::StrongPower { gamma } => ((1.0 + z) / (1.0 - z)).powf(gamma),
        })
    }

    /// `(q'(0), q''(0))`, used to integrate `(q(t) - 1)/t` near `t = 0`.
    pub fn derivatives_at_zero(&self) -> (f64, f64) {
        match *self {
            Self::Petal => (1.0, 0.0),
            Self::Lemniscate => (0.5, -0.25),
            Self::Rl => {
                // h = (1 - z)/(1 + cz): h'(0) = -(1 + c), h''(0) = 2c(1 + c)
                let h1 = -(1.0 + RL_C);
                let h2 = 2.0 * RL_C * (1.0 + RL_C);
                let k = SQRT_2 - 1.0;
                (-k * 0.5 * h1, -k * (0.5 * h2 - 0.25 * h1 * h1))
            }
            Self::Cardioid => (4.0 / 3.0, 4.0 / 3.0),
            Self::Exponential => (1.0, 1.0),
            Self::Crescent => (1.0, 1.0),
            Self::Sine => (1.0, 0.0),
            Self::Booth { .. } => (1.0, 0.0),
            Self::Janowski { c, d } => (c - d, -2.0 * d * (c - d)),
            Self::StrongPower { gamma } => (2.0 * gamma, 4.0 * gamma * gamma),
        }
    }

    /// `(q(t) - 1)/t`, switching to the two-term expansion for `|t| < 1e-4`.
    pub(crate) fn log_integrand(&self, t: ComplexValue) -> Result<ComplexValue> {
        if t.norm() < 1e-4 {
            let (d1, d2) = self.derivatives_at_zero();
            return Ok(d1 + 0.5 * d2 * t);
        }
        Ok((self.eval(t)? - one()) / t)
    }
}

impl From<NamedClass> for GeneratorSpec {
    fn from(c: NamedClass) -> Self {
        match c {
            NamedClass::Lemniscate => Self::Lemniscate,
            NamedClass::Rl => Self::Rl,
            NamedClass::Cardioid => Self::Cardioid,
            NamedClass::Exponential => Self::Exponential,
            NamedClass::Crescent => Self::Crescent,
            NamedClass::Booth { alpha } => Self::Booth { alpha },
        }
    }
}

/// Generators of the three tabulated members of the petal class.
pub fn table1_generators() -> [GeneratorSpec; 3] {
    [
        GeneratorSpec::Janowski { c: 0.2, d: 0.0 },
        GeneratorSpec::Janowski { c: 0.4, d: 0.2 },
        GeneratorSpec::Janowski {
            c: 4.0 / 7.0,
            d: 1.0 / 7.0,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [GeneratorSpec; 10] = [
        GeneratorSpec::Petal,
        GeneratorSpec::Lemniscate,
        GeneratorSpec::Rl,
        GeneratorSpec::Cardioid,
        GeneratorSpec::Exponential,
        GeneratorSpec::Crescent,
        GeneratorSpec::Sine,
        GeneratorSpec::Booth { alpha: 0.6 },
        GeneratorSpec::Janowski { c: 0.7, d: -0.4 },
        GeneratorSpec::StrongPower { gamma: 0.5 },
    ];

    #[test]
    fn all_generators_are_normalized() {
        for g in ALL {
            g.validate().unwrap();
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = 1e-4;
        for g in ALL {
            let f = |x: f64| g.eval(ComplexValue::new(x, 0.0)).unwrap().re;
            let d1 = (f(h) - f(-h)) / (2.0 * h);
            let d2 = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
            let (e1, e2) = g.derivatives_at_zero();
            assert!((d1 - e1).abs() < 1e-7, "{g:?}: {d1} vs {e1}");
            assert!((d2 - e2).abs() < 1e-5, "{g:?}: {d2} vs {e2}");
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(GeneratorSpec::Booth { alpha: 1.2 }.validate().is_err());
        assert!(GeneratorSpec::Janowski { c: 0.2, d: 0.3 }
            .validate()
            .is_err());
        assert!(GeneratorSpec::StrongPower { gamma: 0.0 }
            .validate()
            .is_err());
    }

    #[test]
    fn table_generators_have_the_tabulated_form() {
        let z = ComplexValue::new(0.3, -0.2);
        let [q1, q2, q3] = table1_generators();
        assert!((q1.eval(z).unwrap() - (1.0 + z / 5.0)).norm() < 1e-15);
        assert!((q2.eval(z).unwrap() - (5.0 + 2.0 * z) / (5.0 + z)).norm() < 1e-15);
        assert!((q3.eval(z).unwrap() - (7.0 + 4.0 * z) / (7.0 + z)).norm() < 1e-15);
    }
}
