//! Size of minimal Bezout solutions against the separation `delta`, and
//! sweeps over `delta` estimating the growth exponent.

use crate::error::{Error, Result};
use crate::interpolation::bezout_by_interpolation_with_roots;
use crate::poly::{Polynomial, RootSet};
use crate::scalar::Real;
use crate::sylvester::{rough_bound, solve_minimal_bezout, BezoutSolution, Method};
use crate::tol;
use crate::Poly;
use num_complex::{Complex, Complex64};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// `min |B(alpha)|` over the distinct roots `alpha` of `A`.
pub fn delta_of<F: Real>(a: &Polynomial<Complex<F>>, b: &Polynomial<Complex<F>>) -> Result<f64> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    delta_with_roots(&a.roots()?, b)
}

pub fn delta_with_roots<F: Real>(roots_a: &RootSet<Complex<F>>, b: &Polynomial<Complex<F>>) -> Result<f64> {
    let scale = b.norm_coeff();
    let k = b.degree_or_zero() as i32;
    let mut delta = f64::INFINITY;
    for alpha in roots_a.values() {
        let v = b.eval(alpha).norm();
        let grow = alpha.norm().max(F::one()).powi(k);
        if v <= F::tol(tol::DIV_EPS) * scale * grow {
            return Err(Error::CommonRoots { rcond: None });
        }
        delta = delta.min(v.as_f64());
    }
    Ok(delta)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Hypotheses {
    /// `||A|| <= 1`
    pub a_norm_ok: bool,
    /// `||B|| <= 1`
    pub b_norm_ok: bool,
    pub delta_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateReport {
    pub delta: f64,
    pub max_mult: usize,
    /// `(||R||^2 + ||S||^2)^{1/2}`, coefficient-max norms.
    pub joint_norm: f64,
    /// `joint_norm * delta^max_mult`
    pub sharp_ratio: f64,
    /// The symmetric estimate, present when both norms are at most one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rough_bound: Option<f64>,
    pub residual: f64,
    pub hypotheses: Hypotheses,
}

/// Solves for `(R, S)` and measures it.
pub fn estimate_report<F: Real>(
    a: &Polynomial<Complex<F>>,
    b: &Polynomial<Complex<F>>,
    method: Method,
) -> Result<(EstimateReport, BezoutSolution<Complex<F>>)> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let roots_a = a.roots()?;
    let delta = delta_with_roots(&roots_a, b)?;
    let sol = match method {
        Method::Sylvester => solve_minimal_bezout(a, b)?,
        Method::Interpolation => {
            let roots_b = if b.is_constant() {
                RootSet::new(Vec::new())
            } else {
                b.roots()?
            };
            bezout_by_interpolation_with_roots(a, b, &roots_a, &roots_b)?
        }
    };
    let max_mult = roots_a.max_multiplicity();
    let joint_norm = sol.joint_norm();
    let slack = 1.0 + tol::HYPOTHESIS_SLACK;
    let hypotheses = Hypotheses {
        a_norm_ok: a.norm_coeff().as_f64() <= slack,
        b_norm_ok: b.norm_coeff().as_f64() <= slack,
        delta_positive: delta > 0.0,
    };
    let rough = if hypotheses.a_norm_ok && hypotheses.b_norm_ok {
        rough_bound(a, b).ok()
    } else {
        None
    };
    let report = EstimateReport {
        delta,
        max_mult,
        joint_norm,
        sharp_ratio: joint_norm * delta.powi(max_mult as i32),
        rough_bound: rough,
        residual: sol.residual,
        hypotheses,
    };
    Ok((report, sol))
}

/// One-parameter families of instances indexed by `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `A = z^n`, `B = z - delta`.
    PowerVsLinear { n: usize },
    /// `A = z (z - 1)`, `B = (z - eta)(z - 1 + eta)` with `eta (1 - eta) = delta`.
    ShiftedQuadratic,
    /// `A = (z - 1)^2 (z + 1)`, `B = z - (1 - delta)`.
    DoubleRoot,
}

impl Family {
    /// Stable identifier used in reports.
    pub fn id(&self) -> String {
        match self {
            Family::PowerVsLinear { n } => format!("example12-n{n}"),
            Family::ShiftedQuadratic => "example24".into(),
            Family::DoubleRoot => "double-root".into(),
        }
    }

    /// Parses `example12` (with `n`), `example24` or `double-root`.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Family> {
        match name {
            "example12" => {
                let n = n.ok_or_else(|| Error::InvalidInput("family example12 needs n".into()))?;
                if n == 0 {
                    return Err(Error::InvalidInput("n must be at least 1".into()));
                }
                Ok(Family::PowerVsLinear { n })
            }
            "example24" => Ok(Family::ShiftedQuadratic),
            "double-root" => Ok(Family::DoubleRoot),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }

    pub fn instance(&self, delta: f64) -> Result<(Poly, Poly)> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidInput(format!("delta {delta} outside (0, 1)")));
        }
        Ok(match *self {
            Family::PowerVsLinear { n } => (Poly::monomial(Complex64::one(), n), Poly::from_reals(&[-delta, 1.0])),
            Family::ShiftedQuadratic => {
                if delta > 0.25 {
                    return Err(Error::InvalidInput(format!(
                        "delta {delta} exceeds 1/4, the largest value of eta (1 - eta)"
                    )));
                }
                let eta = (1.0 - (1.0 - 4.0 * delta).sqrt()) / 2.0;
                let a = Poly::from_reals(&[0.0, -1.0, 1.0]);
                let b = Poly::from_roots(&RootSet::simple([eta, 1.0 - eta].map(|x| Complex64::new(x, 0.0))), Complex64::one());
                (a, b)
            }
            Family::DoubleRoot => (
                Poly::from_reals(&[1.0, -1.0, -1.0, 1.0]),
                Poly::from_reals(&[-(1.0 - delta), 1.0]),
            ),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPoint {
    pub delta: f64,
    pub joint_norm: f64,
    pub sharp_ratio: f64,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rough_bound: Option<f64>,
    /// Whether the point entered the slope fit.
    pub fitted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub family: String,
    pub max_mult: usize,
    /// Sorted by `delta`, largest first.
    pub points: Vec<SweepPoint>,
    /// Least-squares slope of `ln joint_norm` against `ln(1/delta)`.
    pub fitted_slope: f64,
}

impl SweepResult {
    /// Largest `sharp_ratio` over the sweep, an empirical lower estimate of
    /// the constant in `joint_norm <= C delta^{-max_mult}`.
    pub fn empirical_constant(&self) -> f64 {
        self.points.iter().map(|p| p.sharp_ratio).fold(0.0, f64::max)
    }
}

/// Fewest deltas accepted by [`sharpness_sweep`].
pub const MIN_SWEEP_POINTS: usize = 3;

/// Solves the family at every delta and fits the growth exponent.
///
/// Points whose residual exceeds `1e-8 * joint_norm` are reported but left
/// out of the fit. With `jobs > 1` the instances are solved on that many
/// threads; the result does not depend on `jobs`.
pub fn sharpness_sweep(family: Family, deltas: &[f64], method: Method, jobs: usize) -> Result<SweepResult> {
    if deltas.len() < MIN_SWEEP_POINTS {
        return Err(Error::NotEnoughPoints {
            got: deltas.len(),
            need: MIN_SWEEP_POINTS,
        });
    }
    let mut sorted = deltas.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let solve = |d: f64| -> Result<EstimateReport> {
        let (a, b) = family.instance(d)?;
        Ok(estimate_report(&a, &b, method)?.0)
    };
    let reports: Vec<Result<EstimateReport>> = if jobs <= 1 {
        sorted.iter().map(|&d| solve(d)).collect()
    } else {
        let chunk = sorted.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = sorted
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(|&d| solve(d)).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
    let max_mult = reports.iter().map(|r| r.max_mult).max().unwrap_or(1);
    let points: Vec<SweepPoint> = reports
        .iter()
        .map(|r| SweepPoint {
            delta: r.delta,
            joint_norm: r.joint_norm,
            sharp_ratio: r.sharp_ratio,
            residual: r.residual,
            rough_bound: r.rough_bound,
            fitted: r.residual <= 1e-8 * r.joint_norm,
        })
        .collect();
    let xy: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.fitted)
        .map(|p| ((1.0 / p.delta).ln(), p.joint_norm.ln()))
        .collect();
    let fitted_slope = ols_slope(&xy).ok_or(Error::NotEnoughPoints {
        got: xy.len(),
        need: 2,
    })?;
    Ok(SweepResult {
        family: family.id(),
        max_mult,
        points,
        fitted_slope,
    })
}

/// Ordinary least-squares slope; `None` with fewer than two distinct abscissae.
pub fn ols_slope(xy: &[(f64, f64)]) -> Option<f64> {
    if xy.len() < 2 {
        return None;
    }
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Largest `sharp_ratio` over `trials` random `B` of degree `k` with
/// `||B|| = 1`, for a fixed `A`.
///
/// Instances with `delta` below `min_delta` are skipped.
pub fn empirical_constant(a: &Poly, k: usize, trials: usize, min_delta: f64, seed: u64) -> Result<f64> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let roots = a.roots()?;
    let m = roots.max_multiplicity() as i32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: f64 = 0.0;
    for _ in 0..trials {
        let coeffs: Vec<Complex64> = (0..=k)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let b = Poly::new(coeffs);
        let b = b.scale(&Complex64::new(1.0 / b.norm_coeff(), 0.0));
        let Ok(delta) = delta_with_roots(&roots, &b) else {
            continue;
        };
        if delta < min_delta {
            continue;
        }
        if let Ok(sol) = solve_minimal_bezout(a, &b) {
            best = best.max(sol.joint_norm() * delta.powi(m));
        }
    }
    Ok(best)
}
