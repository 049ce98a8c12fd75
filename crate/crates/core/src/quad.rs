//! Composite Gauss-Legendre quadrature with panel doubling.

use nalgebra::DVector;

use crate::error::{Error, Result};

/// Truncation and resolution parameters for the improper integrals.
#[derive(Clone, Copy, Debug)]
pub struct QuadSpec {
    /// Truncation point for [0, inf) integrands (cut further by the
    /// integrand's own decay cutoff where one is known).
    pub z_max: f64,
    /// Initial panel count; doubled until the estimate stabilizes.
    pub panels: usize,
    /// Gauss-Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Absolute tolerance on the difference of successive refinements.
    pub tol: f64,
}

impl QuadSpec {
    pub fn new(z_max: f64, panels: usize, nodes_per_panel: usize, tol: f64) -> Result<QuadSpec> {
        if !(z_max > 0.0) || !(tol > 0.0) {
            return Err(Error::Domain(format!(
                "quad spec requires z_max > 0 and tol > 0, got z_max={z_max}, tol={tol}"
            )));
        }
        Ok(QuadSpec {
            z_max,
            panels: panels.max(1),
            nodes_per_panel: nodes_per_panel.clamp(2, 64),
            tol,
        })
    }

    /// Tolerance override keeping the other knobs.
    pub fn with_tol(mut self, tol: f64) -> QuadSpec {
        self.tol = tol;
        self
    }
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            z_max: 1e9,
            panels: 4,
            nodes_per_panel: 16,
            tol: 1e-10,
        }
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let mut p0 = 1.0f64;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn composite<F>(f: &F, a: f64, b: f64, panels: usize, nodes: &[f64], weights: &[f64]) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        for (x, w) in nodes.iter().zip(weights) {
            total += w * half * f(mid + half * x)?;
        }
    }
    Ok(total)
}

/// Integrate `f` over [a, b], doubling the panel count until two successive
/// composite estimates differ by less than `spec.tol` (absolute).
pub fn adaptive_composite<F>(f: &F, a: f64, b: f64, spec: &QuadSpec) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (nodes, weights) = gauss_legendre(spec.nodes_per_panel);
    let mut panels = spec.panels;
    let mut prev = composite(f, a, b, panels, &nodes, &weights)?;
    loop {
        panels *= 2;
        let next = composite(f, a, b, panels, &nodes, &weights)?;
        if (next - prev).abs() < spec.tol {
            return Ok(next);
        }
        if panels >= 1 << 14 {
            return Err(Error::QuadratureFailure(format!(
                "composite rule not converged at {panels} panels: |delta|={:.3e} vs tol {:.1e}",
                (next - prev).abs(),
                spec.tol
            )));
        }
        prev = next;
    }
}

/// Vector-valued variant used for semigroup actions under the integral sign.
/// The convergence test is on the Euclidean norm of the difference, relative
/// to the current estimate (with `spec.tol` as the scale).
pub fn adaptive_composite_vec<F>(f: &F, a: f64, b: f64, spec: &QuadSpec) -> Result<DVector<f64>>
where
    F: Fn(f64) -> Result<DVector<f64>>,
{
    let (nodes, weights) = gauss_legendre(spec.nodes_per_panel);
    let run = |panels: usize| -> Result<DVector<f64>> {
        let (nodes, weights) = (&nodes, &weights);
        let h = (b - a) / panels as f64;
        let mut total: Option<DVector<f64>> = None;
        for p in 0..panels {
            let lo = a + p as f64 * h;
            let mid = lo + 0.5 * h;
            let half = 0.5 * h;
            for (x, w) in nodes.iter().zip(weights.iter()) {
                let v = f(mid + half * x)? * (w * half);
                total = Some(match total {
                    Some(acc) => acc + v,
                    None => v,
                });
            }
        }
        Ok(total.expect("at least one panel"))
    };
    let mut panels = spec.panels;
    let mut prev = run(panels)?;
    loop {
        panels *= 2;
        let next = run(panels)?;
        let delta = (&next - &prev).norm();
        if delta < spec.tol * next.norm().max(1.0) {
            return Ok(next);
        }
        if panels >= 1 << 14 {
            return Err(Error::QuadratureFailure(format!(
                "vector composite rule not converged at {panels} panels: |delta|={delta:.3e}"
            )));
        }
        prev = next;
    }
}
