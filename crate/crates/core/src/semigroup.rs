//! Matrix semigroups: the classical action exp(tA)x, the fractional action
//! E_{alpha,beta}(t^alpha A)x by two independent routes, and the growth-bound
//! check `||S_t x|| <= E_{alpha,beta}(t^alpha mu(A)) ||x||`.
//!
//! The spectral route applies the scalar Mittag-Leffler function to the
//! eigenvalues through the eigendecomposition; the subordination route never
//! touches eigenvectors and instead integrates the classical semigroup
//! against the Wright kernel,
//! `S_t x = int_0^inf Psi_{-alpha,beta-alpha}(z) exp(t^alpha z A) x dz`,
//! which makes the two evaluators a genuine cross-check of each other.

use nalgebra::{Complex, DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::normcore::{log_norm, norm, NormSpec};
use crate::quad::{adaptive_composite_vec, QuadSpec};
use crate::specfun::ml::{ml_eval, ml_eval_real, MlParams};
use crate::specfun::wright::{wright_eval, z_cut};

/// Eigendecomposition data cached on a generator.
#[derive(Clone, Debug)]
pub struct SpectralCache {
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: DMatrix<Complex64>,
    pub inverse: DMatrix<Complex64>,
    /// 1-norm condition estimate of the eigenvector matrix.
    pub condition: f64,
    /// Frobenius reconstruction error relative to ||A||.
    pub reconstruction: f64,
}

/// Dense real generator with optional spectral data.
#[derive(Clone, Debug)]
pub struct Generator {
    matrix: DMatrix<f64>,
    spectral: Option<SpectralCache>,
    diagonalizable: bool,
}

const COND_LIMIT: f64 = 1e8;
const RECON_LIMIT: f64 = 1e-10;

impl Generator {
    /// Builds the generator and attempts the eigendecomposition once.
    /// Symmetric inputs go through the symmetric eigensolver (orthogonal
    /// eigenvectors); the general path runs a complex Schur decomposition
    /// and back-substitutes for eigenvectors.
    pub fn new(matrix: DMatrix<f64>) -> Result<Generator> {
        if !matrix.is_square() {
            return Err(Error::Dimension("generator must be square".into()));
        }
        if matrix.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("generator entries must be finite".into()));
        }
        let spectral = spectral_decompose(&matrix);
        let diagonalizable = spectral
            .as_ref()
            .map(|s| s.condition < COND_LIMIT && s.reconstruction <= RECON_LIMIT)
            .unwrap_or(false);
        Ok(Generator {
            matrix,
            spectral,
            diagonalizable,
        })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn spectral(&self) -> Option<&SpectralCache> {
        self.spectral.as_ref()
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.diagonalizable
    }
}

fn to_complex(a: &DMatrix<f64>) -> DMatrix<Complex64> {
    DMatrix::from_fn(a.nrows(), a.ncols(), |i, j| Complex::new(a[(i, j)], 0.0))
}

fn one_norm_c(a: &DMatrix<Complex64>) -> f64 {
    (0..a.ncols())
        .map(|j| (0..a.nrows()).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn spectral_decompose(a: &DMatrix<f64>) -> Option<SpectralCache> {
    let n = a.nrows();
    let fro = a.norm().max(1e-300);
    let sym_defect = (a - a.transpose()).norm();
    if sym_defect <= 1e-13 * fro {
        let eig = a.clone().try_symmetric_eigen(f64::EPSILON, 0)?;
        let vals: Vec<Complex64> = eig
            .eigenvalues
            .iter()
            .map(|l| Complex::new(*l, 0.0))
            .collect();
        let v = to_complex(&eig.eigenvectors);
        let inv = v.adjoint();
        let recon = reconstruction_error(a, &vals, &v, &inv, fro);
        return Some(SpectralCache {
            eigenvalues: vals,
            eigenvectors: v,
            inverse: inv,
            condition: 1.0,
            reconstruction: recon,
        });
    }
    let schur = to_complex(a).try_schur(f64::EPSILON, 0)?;
    let (q, t) = schur.unpack();
    // eigenvectors of the triangular factor by back-substitution
    let mut y = DMatrix::<Complex64>::zeros(n, n);
    for k in 0..n {
        let lam = t[(k, k)];
        y[(k, k)] = Complex::new(1.0, 0.0);
        for i in (0..k).rev() {
            let mut s = Complex::new(0.0, 0.0);
            for j in (i + 1)..=k {
                s += t[(i, j)] * y[(j, k)];
            }
            let mut den = t[(i, i)] - lam;
            // clustered eigenvalues: nudge the pivot; the condition estimate
            // downstream decides whether the basis is usable
            let floor = f64::EPSILON * one_norm_c(&t).max(1.0);
            if den.norm() < floor {
                den = Complex::new(floor, 0.0);
            }
            y[(i, k)] = -s / den;
        }
        let col_norm = y.column(k).norm();
        for i in 0..=k {
            y[(i, k)] /= Complex::new(col_norm, 0.0);
        }
    }
    let v = &q * y;
    let inv = v.clone().lu().try_inverse()?;
    let condition = one_norm_c(&v) * one_norm_c(&inv);
    let vals: Vec<Complex64> = (0..n).map(|k| t[(k, k)]).collect();
    let recon = reconstruction_error(a, &vals, &v, &inv, fro);
    Some(SpectralCache {
        eigenvalues: vals,
        eigenvectors: v,
        inverse: inv,
        condition,
        reconstruction: recon,
    })
}

fn reconstruction_error(
    a: &DMatrix<f64>,
    vals: &[Complex64],
    v: &DMatrix<Complex64>,
    inv: &DMatrix<Complex64>,
    fro: f64,
) -> f64 {
    let n = a.nrows();
    let mut vl = v.clone();
    for (j, lam) in vals.iter().enumerate() {
        for i in 0..n {
            vl[(i, j)] *= lam;
        }
    }
    let recon = vl * inv;
    let mut err = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            err += (recon[(i, j)] - Complex::new(a[(i, j)], 0.0)).norm_sqr();
        }
    }
    err.sqrt() / fro
}

// Pade order-13 numerator coefficients for the matrix exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

fn one_norm(a: &DMatrix<f64>) -> f64 {
    (0..a.ncols())
        .map(|j| (0..a.nrows()).map(|i| a[(i, j)].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// exp(M) by scaling and squaring with the fixed order-13 Pade kernel.
pub fn expm(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    let norm1 = one_norm(m);
    if !norm1.is_finite() {
        return Err(Error::Overflow("expm of non-finite matrix".into()));
    }
    let s = if norm1 > THETA13 {
        (norm1 / THETA13).log2().ceil() as i32
    } else {
        0
    };
    if s > 60 {
        return Err(Error::Overflow(format!(
            "expm: ||A||_1 = {norm1:.3e} beyond the scaling range"
        )));
    }
    let a = m / 2f64.powi(s);
    let eye = DMatrix::<f64>::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let b = &PADE13;
    let u_inner = &a6 * (&a6 * b[13] + &a4 * b[11] + &a2 * b[9])
        + &a6 * b[7]
        + &a4 * b[5]
        + &a2 * b[3]
        + &eye * b[1];
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b[12] + &a4 * b[10] + &a2 * b[8])
        + &a6 * b[6]
        + &a4 * b[4]
        + &a2 * b[2]
        + &eye * b[0];
    let denom = &v - &u;
    let numer = &v + &u;
    let mut r = denom
        .lu()
        .solve(&numer)
        .ok_or_else(|| Error::LinearSolve("Pade denominator is singular".into()))?;
    for _ in 0..s {
        r = &r * &r;
    }
    Ok(r)
}

/// exp(tA) x.
pub fn expm_action(gen: &Generator, t: f64, x: &DVector<f64>) -> Result<DVector<f64>> {
    if x.len() != gen.dim() {
        return Err(Error::Dimension(format!(
            "vector length {} vs generator dim {}",
            x.len(),
            gen.dim()
        )));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("expm_action: t={t} must be >= 0")));
    }
    if t == 0.0 {
        return Ok(x.clone());
    }
    Ok(expm(&(gen.matrix() * t))? * x)
}

/// Fractional action by spectral calculus:
/// V diag(E_{alpha,beta}(t^alpha lambda_k)) V^{-1} x.
pub fn frac_action_spectral(
    gen: &Generator,
    alpha: f64,
    beta: f64,
    t: f64,
    x: &DVector<f64>,
) -> Result<DVector<f64>> {
    let params = MlParams::new(alpha, beta)?;
    if !(beta <= 1.0) {
        return Err(Error::Domain(format!(
            "frac_action_spectral: beta={beta} not in (0,1]"
        )));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("t={t} must be >= 0")));
    }
    if x.len() != gen.dim() {
        return Err(Error::Dimension(format!(
            "vector length {} vs generator dim {}",
            x.len(),
            gen.dim()
        )));
    }
    let cache = match (gen.is_diagonalizable(), gen.spectral()) {
        (true, Some(c)) => c,
        _ => {
            let cond = gen.spectral().map(|c| c.condition).unwrap_or(f64::INFINITY);
            return Err(Error::NonDiagonalizable(cond));
        }
    };
    let ta = t.powf(alpha);
    let xc = DVector::from_fn(x.len(), |i, _| Complex::new(x[i], 0.0));
    let mut w = &cache.inverse * xc;
    for (k, lam) in cache.eigenvalues.iter().enumerate() {
        w[k] *= ml_eval(params, lam * ta)?;
    }
    let y = &cache.eigenvectors * w;
    let re = DVector::from_fn(y.len(), |i, _| y[i].re);
    let im_mass = y.iter().map(|c| c.im * c.im).sum::<f64>().sqrt();
    let scale = re.norm();
    if scale.is_finite() && im_mass > 1e-9 * scale.max(1e-30) {
        return Err(Error::NonConvergence(format!(
            "spectral action of a real generator has imaginary residue {im_mass:.3e} vs ||y||={scale:.3e}"
        )));
    }
    Ok(re)
}

/// Fractional action by subordination: quadrature of
/// Psi_{-alpha,beta-alpha}(z) exp(t^alpha z A) x over z in [0, z_max].
pub fn frac_action_subordination(
    gen: &Generator,
    alpha: f64,
    beta: f64,
    t: f64,
    x: &DVector<f64>,
    quad: &QuadSpec,
) -> Result<DVector<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "frac_action_subordination: alpha={alpha} must lie strictly in (0,1)"
        )));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!(
            "frac_action_subordination: beta={beta} not in (0,1]"
        )));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("t={t} must be >= 0")));
    }
    if x.len() != gen.dim() {
        return Err(Error::Dimension(format!(
            "vector length {} vs generator dim {}",
            x.len(),
            gen.dim()
        )));
    }
    let kernel_beta = beta - alpha;
    let ta = t.powf(alpha);
    let mu2 = log_norm(gen.matrix(), NormSpec::P2)?;
    let growth = mu2.max(0.0);

    // truncation by doubling search: Wright decay eventually beats any
    // exponential growth of the semigroup factor
    let cut = z_cut(alpha);
    let target = quad.tol * 1e-2;
    let mut z_max = 1.0f64;
    while z_max < cut {
        let kernel = wright_eval(alpha, kernel_beta, z_max)?.abs();
        let grow = (ta * z_max * growth).min(700.0).exp();
        if kernel * grow < target {
            break;
        }
        z_max *= 2.0;
    }
    if z_max >= cut {
        z_max = cut;
    } else {
        let tail = wright_eval(alpha, kernel_beta, z_max)?.abs() * (ta * z_max * growth).min(700.0).exp();
        if tail >= quad.tol {
            return Err(Error::QuadratureFailure(format!(
                "subordination tail {tail:.3e} exceeds tol at z_max={z_max}"
            )));
        }
    }

    let f = |z: f64| -> Result<DVector<f64>> {
        let kernel = wright_eval(alpha, kernel_beta, z)?;
        if kernel == 0.0 {
            return Ok(DVector::zeros(x.len()));
        }
        Ok(expm_action(gen, ta * z, x)? * kernel)
    };
    adaptive_composite_vec(&f, 0.0, z_max, quad)
}

/// How a fractional action is computed in a bound check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ActionMethod {
    Spectral,
    Subordination,
}

/// One row of a growth-bound verification: inputs, both sides of
/// `||S_t x|| <= E_{alpha,beta}(t^alpha mu(A)) ||x||`, and the verdict.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub alpha: f64,
    pub beta: f64,
    pub t: f64,
    pub norm_kind: NormSpec,
    pub mu: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

/// Default relative tolerance for the bound verdict.
pub const BOUND_REL_TOL: f64 = 1e-8;
/// Absolute slack so bound checks of exponentially tiny sides stay meaningful.
pub const BOUND_ABS_SLACK: f64 = 1e-12;

impl BoundReport {
    pub fn evaluate(
        alpha: f64,
        beta: f64,
        t: f64,
        norm_kind: NormSpec,
        mu: f64,
        lhs: f64,
        rhs: f64,
        rel_tol: f64,
    ) -> BoundReport {
        BoundReport {
            alpha,
            beta,
            t,
            norm_kind,
            mu,
            lhs,
            rhs,
            margin: rhs - lhs,
            holds: lhs <= rhs * (1.0 + rel_tol) + BOUND_ABS_SLACK,
        }
    }

    /// Relative excess of the left side over the right, positive only for
    /// violated rows.
    pub fn rel_excess(&self) -> f64 {
        if self.holds || !self.lhs.is_finite() {
            0.0
        } else {
            (self.lhs - self.rhs) / self.lhs.abs().max(1e-300)
        }
    }
}

/// Evaluates the growth bound for one case.
pub fn bound_check(
    gen: &Generator,
    alpha: f64,
    beta: f64,
    t: f64,
    x: &DVector<f64>,
    spec: NormSpec,
    method: ActionMethod,
) -> Result<BoundReport> {
    let action = match method {
        ActionMethod::Spectral => frac_action_spectral(gen, alpha, beta, t, x)?,
        ActionMethod::Subordination => {
            frac_action_subordination(gen, alpha, beta, t, x, &QuadSpec::default().with_tol(1e-8))?
        }
    };
    let lhs = norm(&action, spec);
    let mu = log_norm(gen.matrix(), spec)?;
    let rhs = ml_eval_real(MlParams::new(alpha, beta)?, t.powf(alpha) * mu)? * norm(x, spec);
    Ok(BoundReport::evaluate(
        alpha,
        beta,
        t,
        spec,
        mu,
        lhs,
        rhs,
        BOUND_REL_TOL,
    ))
}
