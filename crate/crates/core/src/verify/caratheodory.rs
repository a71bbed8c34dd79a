//! Bounds for functions of positive real part and the Janowski subclass test.

use crate::error::{domain, Error, Result};
use crate::kernel::ASINH_ONE;
use crate::petal::DiskSpec;
use crate::radii::ClassId;

const A: f64 = ASINH_ONE;

fn check_r(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(domain("r", r, "[0, 1)"))
    }
}

/// Whether the Janowski class `S*[C, D]` is contained in the petal class,
/// by the two sufficient disk conditions (left end or right end binding).
pub fn janowski_subset(c: f64, d: f64) -> Result<bool> {
    if !(d > -1.0 && d < c && c <= 1.0) {
        return Err(Error::Domain {
            what: "Janowski (C, D)",
            value: c - d,
            domain: "-1 < D < C <= 1",
        });
    }
    let one_cd = 1.0 - c * d;
    let one_d2 = 1.0 - d * d;
    let left = (1.0 - A) * one_d2 < one_cd && one_cd <= one_d2 && c - d <= (1.0 - d) * A;
    let right = one_d2 <= one_cd && one_cd < (1.0 + A) * one_d2 && c - d <= (1.0 + d) * A;
    Ok(left || right)
}

/// Bound on `|zp'/p|`-type quantities for `p ∈ P_n(α)` on `|z| = r`:
/// `2(1 - α) n r^n / ((1 - r^n)(1 + (1 - 2α) r^n))`.
pub fn pn_alpha_bound(n: u32, alpha: f64, r: f64) -> Result<f64> {
    ClassId::CSn { n, alpha }.validate()?;
    check_r(r)?;
    let rn = r.powi(n as i32);
    Ok(2.0 * (1.0 - alpha) * n as f64 * rn / ((1.0 - rn) * (1.0 + (1.0 - 2.0 * alpha) * rn)))
}

/// The disk containing `p(|z| <= r)` for `p ∈ P_n[C, D]`.
pub fn pn_cd_disk(n: u32, c: f64, d: f64, r: f64) -> Result<DiskSpec> {
    ClassId::JanowskiN { n, c, d }.validate()?;
    check_r(r)?;
    let r2n = r.powi(2 * n as i32);
    let den = 1.0 - d * d * r2n;
    DiskSpec::new((1.0 - c * d * r2n) / den, (c - d) * r.powi(n as i32) / den)
}
