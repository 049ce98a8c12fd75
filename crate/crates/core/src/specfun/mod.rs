//! Scalar special functions: Gamma, Mittag-Leffler, Wright, and the
//! executable identities tying them together.

mod contour;
pub mod gamma;
pub mod ml;
pub mod wright;

pub use gamma::{gamma as gamma_fn, ln_gamma, rgamma, sin_pi};
pub use ml::{ml_deriv, ml_eval, ml_eval_real, MlParams};
pub use wright::{laplace_identity_residual, wright_eval, wright_moment, z_cut};
