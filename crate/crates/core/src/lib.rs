//! Finite-dimensional numerics for fractional semigroups: Mittag-Leffler and
//! Wright special functions, semi-inner-products and logarithmic norms, two
//! independent evaluators of the fractional action E_{alpha,beta}(t^alpha A),
//! and the machinery verifying the growth bound
//! `||S_t^{alpha,beta}(A) x|| <= E_{alpha,beta}(t^alpha mu(A)) ||x||`
//! together with its classical (alpha = beta = 1) limit.

pub mod dd;
pub mod error;
pub mod fracode;
pub mod normcore;
pub mod quad;
pub mod rng;
pub mod semigroup;
pub mod specfun;

pub use error::{Error, Result};
pub use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64;
