use crate::error::{Error, Result};

/// Root of `f` in a sign-changing bracket `[lo, hi]`.
///
/// Pure bisection until the bracket is narrower than `tol`, then a single
/// secant step across the final bracket. The secant point is kept only if it
/// stays inside the bracket and lowers `|f|`. Deterministic for a given `f`.
pub fn solve_bracketed<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.signum() != fb.signum()) || fa.is_nan() || fb.is_nan() {
        return Err(Error::Bracketing { lo: a, hi: b });
    }
    let tol = tol.max(f64::EPSILON * a.abs().max(b.abs()));
    let mut fb = fb;
    // bisection halves the width; 2000 iterations is far more than any f64 bracket needs
    for _ in 0..2000 {
        if b - a < tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    let mid = 0.5 * (a + b);
    let fmid = f(mid);
    let secant = b - fb * (b - a) / (fb - fa);
    if secant.is_finite() && secant >= a && secant <= b {
        let fs = f(secant);
        if fs.abs() < fmid.abs() {
            return Ok(secant);
        }
    }
    Ok(mid)
}
