//! Trapezoid rule on a symmetric interval with step halving.
//!
//! The contour integrands in this crate are restrictions of analytic
//! functions to a parabola, so the trapezoid sum converges geometrically in
//! 1/h and the difference between successive refinements is a reliable error
//! estimate.

use num_complex::Complex64;

/// Integrate `g` over [-u_max, u_max], halving the step until two successive
/// trapezoid sums agree to `tol_rel` (relative, with a tiny absolute floor)
/// or `max_levels` halvings have been spent.
///
/// Returns (value, error estimate, nodes used).
pub fn trapezoid_refine<F>(g: &F, u_max: f64, tol_rel: f64, max_levels: u32) -> (Complex64, f64, usize)
where
    F: Fn(f64) -> Complex64,
{
    let mut n = 24usize; // panels per half-interval at the coarsest level
    let mut h = u_max / n as f64;
    let mut sum = 0.5 * (g(-u_max) + g(u_max));
    for k in 1..(2 * n) {
        sum += g(-u_max + k as f64 * h);
    }
    let mut t_prev = sum * h;
    let mut nodes = 2 * n + 1;
    let mut err = f64::INFINITY;
    for _ in 0..max_levels {
        // refine: add midpoints of the current grid
        let mut mid = Complex64::new(0.0, 0.0);
        for k in 0..(2 * n) {
            mid += g(-u_max + (k as f64 + 0.5) * h);
        }
        let t_next = 0.5 * t_prev + 0.5 * h * mid;
        nodes += 2 * n;
        err = (t_next - t_prev).norm();
        n *= 2;
        h *= 0.5;
        t_prev = t_next;
        if err <= tol_rel * t_prev.norm() + 1e-306 {
            break;
        }
    }
    (t_prev, err, nodes)
}
