use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::kernel::ComplexValue;

/// Sampling density of [`sup_radius_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleGrid {
    /// Radii of the coarse scan, equispaced in `(0, 1 - r_tol]`.
    pub radii: usize,
    /// Angles per circle, `2πj/angles`.
    pub angles: usize,
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self {
            radii: 64,
            angles: 1024,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// The target first fails strictly inside the disk.
    Interior,
    /// The target holds up to the search cap `1 - r_tol`.
    WholeDisk,
    /// The target already fails at `r = r_tol`; the radius is reported as 0.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupRadius {
    pub radius: f64,
    pub regime: Regime,
}

/// Largest `r` for which every sampled point `w_map(r, θ)` satisfies `target`.
///
/// A coarse scan over `grid.radii` circles locates the first failure and
/// checks that every larger scanned radius also fails; bisection then
/// narrows the bracket to `r_tol`. The returned radius is the passing end.
pub fn sup_radius_oracle<M, T>(
    w_map: M,
    target: T,
    grid: OracleGrid,
    r_tol: f64,
) -> Result<SupRadius>
where
    M: Fn(f64, f64) -> Result<ComplexValue>,
    T: Fn(ComplexValue) -> bool,
{
    if !(r_tol > 0.0 && r_tol < 0.5) {
        return Err(domain("r_tol", r_tol, "(0, 0.5)"));
    }
    if grid.radii < 2 || grid.angles < 4 {
        return Err(Error::Contract(format!(
            "oracle grid needs at least 2 radii and 4 angles, got {grid:?}"
        )));
    }
    let angles: Vec<f64> = (0..grid.angles)
        .map(|j| 2.0 * PI * j as f64 / grid.angles as f64)
        .collect();
    let circle_ok = |r: f64| -> Result<bool> {
        for &t in &angles {
            if !target(w_map(r, t)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };

    if !circle_ok(r_tol)? {
        return Ok(SupRadius {
            radius: 0.0,
            regime: Regime::Degenerate,
        });
    }
    let cap = 1.0 - r_tol;
    let coarse: Vec<f64> = (1..=grid.radii)
        .map(|i| r_tol + (cap - r_tol) * i as f64 / grid.radii as f64)
        .collect();
    let mut status = Vec::with_capacity(coarse.len());
    for &r in &coarse {
        status.push(circle_ok(r)?);
    }
    let Some(first_fail) = status.iter().position(|ok| !ok) else {
        return Ok(SupRadius {
            radius: cap,
            regime: Regime::WholeDisk,
        });
    };
    if let Some(k) = status[first_fail..].iter().position(|ok| *ok) {
        return Err(Error::NonMonotone {
            r_fail: coarse[first_fail],
            r_pass: coarse[first_fail + k],
        });
    }
    let mut lo = if first_fail == 0 {
        r_tol
    } else {
        coarse[first_fail - 1]
    };
    let mut hi = coarse[first_fail];
    while hi - lo > r_tol {
        let mid = 0.5 * (lo + hi);
        if circle_ok(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(SupRadius {
        radius: lo,
        regime: Regime::Interior,
    })
}
