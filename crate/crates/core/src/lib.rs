//! Minimal-degree solutions of the polynomial Bezout identity `RA + SB = 1`,
//! their coefficient estimates, a several-polynomial extension, and the
//! de Branges–Rovnyak data attached to a rational Schur-class symbol.
//!
//! Everything algebraic is generic over [`Scalar`]: approximate complex
//! numbers (`Complex<f32>`, `Complex<f64>`) or exact Gaussian rationals.
//! Analytic routines (roots, circle norms, spectral factorization) need an
//! approximate scalar `Complex<F>` with `F: Real`.

pub mod debranges;
pub mod error;
pub mod estimates;
pub mod interpolation;
pub mod json;
pub mod linalg;
pub mod multi;
pub mod poly;
pub mod scalar;
pub mod sylvester;
pub mod tol;

pub use error::{Error, Result};
pub use poly::{Polynomial, Root, RootSet};
pub use scalar::{GaussianRational, Real, Scalar};

pub use num_complex::{Complex, Complex32, Complex64};

/// Double-precision complex polynomial, the default carrier.
pub type Poly = Polynomial<Complex64>;
/// Single-precision complex polynomial.
pub type Poly32 = Polynomial<Complex32>;
/// Polynomial with exact Gaussian-rational coefficients.
pub type ExactPoly = Polynomial<GaussianRational>;
