use std::sync::LazyLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and weights of an n-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on `P_n` from the Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a Gauss rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// One application of the rule on `[a, b]`.
    pub fn apply<F>(&self, f: &F, a: f64, b: f64) -> Complex64
    where
        F: Fn(f64) -> Complex64,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(mid + half * x) * w)
            .sum::<Complex64>()
            * half
    }
}

// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

static RULE: LazyLock<GaussLegendre> = LazyLock::new(|| GaussLegendre::new(10));

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    /// Absolute error target for the whole interval.
    pub tol: f64,
    pub max_depth: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_depth: 40,
        }
    }
}

/// Adaptive panel-halving Gauss–Legendre quadrature of a complex-valued
/// integrand over the real interval `[a, b]`.
///
/// A panel is accepted when the single-panel estimate and the sum over its
/// two halves agree to the panel's share of the tolerance.
pub fn integrate_segment<F>(f: F, a: f64, b: f64, opts: QuadOptions) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let whole = RULE.apply(&f, a, b);
    let mut worst = 0.0_f64;
    let value = refine(&f, a, b, whole, opts.tol, opts.max_depth, &mut worst);
    if worst > 0.0 {
        return Err(Error::Quadrature {
            achieved: worst,
            target: opts.tol,
        });
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Computation("non-finite quadrature result".into()));
    }
    Ok(value)
}

fn refine<F>(
    f: &F,
    a: f64,
    b: f64,
    whole: Complex64,
    tol: f64,
    depth: u32,
    worst: &mut f64,
) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let mid = 0.5 * (a + b);
    let left = RULE.apply(f, a, mid);
    let right = RULE.apply(f, mid, b);
    let split = left + right;
    let err = (split - whole).norm();
    if err <= tol {
        return split;
    }
    if depth == 0 {
        *worst = worst.max(err);
        return split;
    }
    refine(f, a, mid, left, 0.5 * tol, depth - 1, worst)
        + refine(f, mid, b, right, 0.5 * tol, depth - 1, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let g = GaussLegendre::new(10);
        let sum: f64 = g.weights().iter().sum();
        assert!((sum - 2.0).abs() < 1e-14);
        // degree 19 is exact for 10 nodes
        let v = g.apply(&|x: f64| Complex64::new(x.powi(18), 0.0), -1.0, 1.0);
        assert!((v.re - 2.0 / 19.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        // ∫_0^1 1/(1e-4 + x^2) dx = atan(100)/0.01... scaled
        let eps: f64 = 1e-2;
        let f = |x: f64| Complex64::new(1.0 / (eps * eps + x * x), 0.0);
        let exact = (1.0 / eps).atan() / eps;
        let v = integrate_segment(f, 0.0, 1.0, QuadOptions::default()).unwrap();
        assert!((v.re - exact).abs() < 1e-9);
    }

    #[test]
    fn non_convergence_is_reported() {
        let f = |x: f64| Complex64::new(if x < 0.3 { 0.0 } else { 1.0 }, 0.0);
        let opts = QuadOptions {
            tol: 1e-15,
            max_depth: 3,
        };
        assert!(matches!(
            integrate_segment(f, 0.0, 1.0, opts),
            Err(Error::Quadrature { .. })
        ));
    }
}
