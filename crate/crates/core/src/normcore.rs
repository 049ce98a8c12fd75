//! Norms, the right-defined semi-inner-product, its one-sided-limit
//! definition, and logarithmic norms of matrices.
//!
//! The semi-inner-product of vectors v, w is
//! `[lim_{eps->0+} (||w + eps v|| - ||w||)/eps] ||w||`; for the p = 1, 2, inf
//! norms the one-sided limit has a closed form, and `semi_inner_limit`
//! evaluates the defining limit numerically as the independent route.
//! Logarithmic norms get the same dual treatment: closed forms per norm vs
//! the operator-norm limit `(||I + eps A|| - 1)/eps`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Which vector norm a computation runs under.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormSpec {
    P1,
    P2,
    PInf,
    /// General p in [1, inf); supported by `norm` and `semi_inner_limit` only.
    General(f64),
}

impl NormSpec {
    pub fn validate(&self) -> Result<()> {
        if let NormSpec::General(p) = self {
            if !(*p >= 1.0) || !p.is_finite() {
                return Err(Error::Domain(format!("General(p) requires p >= 1, got {p}")));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        match self {
            NormSpec::P1 => "p1".into(),
            NormSpec::P2 => "p2".into(),
            NormSpec::PInf => "pinf".into(),
            NormSpec::General(p) => format!("p{p}"),
        }
    }
}

/// Vector norm selected by `spec`.
pub fn norm(v: &DVector<f64>, spec: NormSpec) -> f64 {
    match spec {
        NormSpec::P1 => v.iter().map(|x| x.abs()).sum(),
        NormSpec::P2 => v.norm(),
        NormSpec::PInf => v.iter().fold(0.0f64, |m, x| m.max(x.abs())),
        NormSpec::General(p) => v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p),
    }
}

/// Relative tolerance for deciding which coordinates attain the max norm.
const MAX_SET_RTOL: f64 = 1e-12;

/// Closed-form semi-inner-product for the p = 1, 2, inf norms.
pub fn semi_inner(v: &DVector<f64>, w: &DVector<f64>, spec: NormSpec) -> Result<f64> {
    if v.len() != w.len() {
        return Err(Error::Dimension(format!("{} vs {}", v.len(), w.len())));
    }
    let nw = norm(w, spec);
    if nw == 0.0 {
        return Ok(0.0);
    }
    match spec {
        NormSpec::P2 => Ok(v.dot(w)),
        NormSpec::P1 => {
            let s: f64 = v
                .iter()
                .zip(w.iter())
                .map(|(vi, wi)| if *wi != 0.0 { wi.signum() * vi } else { vi.abs() })
                .sum();
            Ok(nw * s)
        }
        NormSpec::PInf => {
            // one-sided growth is governed by the max-attaining index set
            let mut best = f64::NEG_INFINITY;
            for (vi, wi) in v.iter().zip(w.iter()) {
                if wi.abs() >= nw * (1.0 - MAX_SET_RTOL) {
                    best = best.max(wi.signum() * vi);
                }
            }
            Ok(nw * best)
        }
        NormSpec::General(p) => Err(Error::UnsupportedNorm(format!(
            "semi_inner closed form undefined for General({p}); use semi_inner_limit"
        ))),
    }
}

/// Geometric schedule for the one-sided difference quotients: 1e-2 * 2^-k.
const EPS_LEVELS: usize = 21;

/// Two-level Richardson extrapolation of a one-sided difference quotient.
/// `q` maps eps to the raw quotient; returns (extrapolated value, spread).
fn one_sided_limit<F: Fn(f64) -> f64>(q: F, noise_scale: f64) -> (f64, f64) {
    let mut prev_q: Option<f64> = None;
    let mut prev_r: Option<f64> = None;
    let mut best = 0.0;
    let mut unc = f64::INFINITY;
    for k in 0..EPS_LEVELS {
        let eps = 1e-2 * 0.5f64.powi(k as i32);
        let qk = q(eps);
        if let Some(q0) = prev_q {
            // error ~ C eps for one-sided limits: R = 2 q(eps) - q(2 eps)
            let r = 2.0 * qk - q0;
            let cancel = 4.0 * noise_scale * f64::EPSILON / eps;
            if let Some(r0) = prev_r {
                let spread = (r - r0).abs() + cancel;
                if spread < unc {
                    unc = spread;
                    best = r;
                }
                if spread < 1e-9 {
                    return (r, spread.max(cancel));
                }
            }
            prev_r = Some(r);
        }
        prev_q = Some(qk);
    }
    (best, unc)
}

/// The defining one-sided limit of the semi-inner-product, evaluated
/// numerically with Richardson extrapolation.
///
/// Returns (value, uncertainty estimate). Supports every `NormSpec`.
pub fn semi_inner_limit(v: &DVector<f64>, w: &DVector<f64>, spec: NormSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    if v.len() != w.len() {
        return Err(Error::Dimension(format!("{} vs {}", v.len(), w.len())));
    }
    let nw = norm(w, spec);
    if nw == 0.0 {
        return Ok((0.0, 0.0));
    }
    let nv = norm(v, spec);
    let q = |eps: f64| (norm(&(w + v * eps), spec) - nw) / eps;
    let (lim, unc) = one_sided_limit(q, nw + nv);
    Ok((lim * nw, unc * nw))
}

/// Residual of the Dini-derivative identity
/// `D_t^+ ||v(t)|| = <v'(t), v(t)> / ||v(t)||`
/// at time `t`: forward-difference estimate of the left side minus the
/// closed-form right side, in absolute value.
pub fn dini_derivative_check<V, DV>(v: V, dv: DV, t: f64, spec: NormSpec) -> Result<f64>
where
    V: Fn(f64) -> DVector<f64>,
    DV: Fn(f64) -> DVector<f64>,
{
    let vt = v(t);
    let nvt = norm(&vt, spec);
    if nvt == 0.0 {
        return Err(Error::Singular(format!("||v({t})|| = 0")));
    }
    let rhs = match spec {
        NormSpec::General(_) => semi_inner_limit(&dv(t), &vt, spec)?.0,
        _ => semi_inner(&dv(t), &vt, spec)?,
    } / nvt;
    let q = |h: f64| (norm(&v(t + h), spec) - nvt) / h;
    let (dini, _) = one_sided_limit(q, nvt);
    Ok((dini - rhs).abs())
}

/// Logarithmic norm by closed form: p=2 the largest eigenvalue of the
/// symmetric part, p=1 column sums, p=inf row sums.
pub fn log_norm(a: &DMatrix<f64>, spec: NormSpec) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::Dimension("log_norm of non-square matrix".into()));
    }
    let n = a.nrows();
    match spec {
        NormSpec::P2 => {
            let sym = (a + a.transpose()) * 0.5;
            let eig = sym
                .try_symmetric_eigen(f64::EPSILON, 0)
                .ok_or_else(|| Error::NonConvergence("symmetric eigensolver".into()))?;
            Ok(eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max))
        }
        NormSpec::P1 => Ok((0..n)
            .map(|j| {
                let mut s = a[(j, j)];
                for i in 0..n {
                    if i != j {
                        s += a[(i, j)].abs();
                    }
                }
                s
            })
            .fold(f64::NEG_INFINITY, f64::max)),
        NormSpec::PInf => Ok((0..n)
            .map(|i| {
                let mut s = a[(i, i)];
                for j in 0..n {
                    if j != i {
                        s += a[(i, j)].abs();
                    }
                }
                s
            })
            .fold(f64::NEG_INFINITY, f64::max)),
        NormSpec::General(p) => Err(Error::UnsupportedNorm(format!(
            "log_norm closed form undefined for General({p})"
        ))),
    }
}

/// Induced operator norm for p in {1, 2, inf}. The 2-norm is the largest
/// singular value obtained by power iteration on the Gram matrix.
fn operator_norm(a: &DMatrix<f64>, spec: NormSpec) -> Result<f64> {
    let n = a.nrows();
    match spec {
        NormSpec::P1 => Ok((0..a.ncols())
            .map(|j| (0..n).map(|i| a[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)),
        NormSpec::PInf => Ok((0..n)
            .map(|i| (0..a.ncols()).map(|j| a[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)),
        NormSpec::P2 => {
            let gram = a.transpose() * a;
            Ok(power_iteration_max_eigenvalue(&gram, 0.0)?.max(0.0).sqrt())
        }
        NormSpec::General(p) => Err(Error::UnsupportedNorm(format!(
            "operator norm unsupported for General({p})"
        ))),
    }
}

/// Largest eigenvalue of a symmetric positive-semidefinite-after-shift
/// matrix by power iteration with a Rayleigh-quotient readout.
fn power_iteration_max_eigenvalue(m: &DMatrix<f64>, shift: f64) -> Result<f64> {
    let n = m.nrows();
    let mut v = DVector::from_fn(n, |i, _| 1.0 + 0.618 * ((i + 1) as f64).sin());
    v /= v.norm();
    let mut lambda = 0.0f64;
    for it in 0..10_000 {
        let mut w = m * &v;
        if shift != 0.0 {
            w += &v * shift;
        }
        let nw = w.norm();
        if nw == 0.0 {
            return Ok(-shift); // m acts as zero on the iterate
        }
        w /= nw;
        let mut mw = m * &w;
        if shift != 0.0 {
            mw += &w * shift;
        }
        let rq = w.dot(&mw);
        if it > 2 && (rq - lambda).abs() <= 1e-12 * rq.abs().max(1e-300) {
            return Ok(rq - shift);
        }
        lambda = rq;
        v = w;
    }
    Ok(lambda - shift)
}

/// Logarithmic norm through its limit definition
/// `lim_{eps->0+} (||I + eps A||_op - 1)/eps`, with Richardson extrapolation.
/// Returns (value, uncertainty estimate).
pub fn log_norm_limit(a: &DMatrix<f64>, spec: NormSpec) -> Result<(f64, f64)> {
    if !a.is_square() {
        return Err(Error::Dimension("log_norm_limit of non-square matrix".into()));
    }
    match spec {
        NormSpec::P1 | NormSpec::PInf => {
            let eye = DMatrix::<f64>::identity(a.nrows(), a.ncols());
            let q = |eps: f64| (operator_norm(&(&eye + a * eps), spec).unwrap() - 1.0) / eps;
            Ok(one_sided_limit(q, 1.0 + a.norm()))
        }
        NormSpec::P2 => {
            // ||I + eps A||_2^2 - 1 = lambda_max(eps (A + A^T) + eps^2 A^T A),
            // formed directly so no digits are lost to the subtraction
            let sym = a + a.transpose();
            let gram = a.transpose() * a;
            let shift_base = 2.0 * operator_norm(a, NormSpec::P1)? + 1.0;
            let q = |eps: f64| {
                let m = &sym * eps + &gram * (eps * eps);
                let lam = power_iteration_max_eigenvalue(&m, eps * shift_base).unwrap();
                // (sqrt(1 + lam) - 1)/eps without cancellation
                lam / (eps * (1.0 + (1.0 + lam).max(0.0).sqrt()))
            };
            Ok(one_sided_limit(q, 1.0 + a.norm()))
        }
        NormSpec::General(p) => Err(Error::UnsupportedNorm(format!(
            "log_norm_limit unsupported for General({p})"
        ))),
    }
}
