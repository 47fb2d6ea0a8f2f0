//! Numerical tolerances, stated for `f64`.
//!
//! Approximate code paths convert these with [`Real::tol`](crate::Real::tol)
//! so that `f32` instantiations get proportionally looser thresholds.

/// Trailing coefficients below `TRIM_EPS * norm_coeff` are dropped.
pub const TRIM_EPS: f64 = 1e-13;
/// `divide_by_linear` accepts `u` as a root when `|p(u)| <= DIV_EPS * scale`.
pub const DIV_EPS: f64 = 1e-9;
/// Root approximations closer than this are always merged.
pub const CLUSTER_EPS: f64 = 1e-6;
/// Root approximations within this distance are merged when the merged
/// centre passes the multiplicity test.
pub const CLUSTER_WIDE: f64 = 1e-2;
/// Relative size of the Taylor coefficients below the multiplicity at a
/// merged cluster centre.
pub const MULTIPLICITY_TOL: f64 = 1e-9;
pub const ROOT_MAX_ITER: usize = 200;
pub const ROOT_CONVERGENCE: f64 = 1e-13;
/// Sample count for sup norms on circles.
pub const N_SAMPLES: usize = 4096;
/// Reciprocal condition number below which the Sylvester system is treated
/// as numerically singular.
pub const SINGULAR_TOL: f64 = 1e-12;
/// Residual bound for Bezout identities, relative to `1 + joint norm`.
pub const BEZOUT_TOL: f64 = 1e-9;
/// Distance from the unit circle under which a root is unimodular.
pub const CIRCLE_TOL: f64 = 1e-7;
/// Tolerance on `|a|^2 + |b|^2 = 1` along the circle.
pub const FR_TOL: f64 = 1e-8;
/// Slack allowed on norm hypotheses such as `||B|| <= 1`.
pub const HYPOTHESIS_SLACK: f64 = 1e-12;
