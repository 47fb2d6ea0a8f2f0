//! Bezout identities `R A + S_1 B_1 + ... + S_L B_L = 1` with several `B_j`,
//! reduced to a single `B = sum_j conj(y_j) B_j` through a plank vector `y`.

mod plank;

pub use plank::{inner, objective, plank_vector, PlankCertificate};

use crate::error::{Error, Result};
use crate::interpolation::bezout_by_interpolation_with_roots;
use crate::poly::{identity_residual, Polynomial, RootSet};
use crate::scalar::Real;
use crate::sylvester::{solve_minimal_bezout, BezoutSolution, Method};
use crate::tol;
use num_complex::{Complex, Complex64};

#[derive(Clone, Debug, PartialEq)]
pub struct MultiBezoutSolution<T> {
    pub r: Polynomial<T>,
    pub s_list: Vec<Polynomial<T>>,
    /// The common factor `S` with `S_j = conj(y_j) S`.
    pub s: Polynomial<T>,
    pub y: PlankCertificate,
    pub combined_b: Polynomial<T>,
    /// `max_k |(R A + sum_j S_j B_j - 1)_k|`
    pub residual: f64,
    /// `min_i (sum_j |B_j(alpha_i)|^2)^{1/2}` over the distinct roots of `A`.
    pub measured_delta: f64,
    /// The single-`B` solve behind the result.
    pub single: BezoutSolution<T>,
}

impl<F: Real> MultiBezoutSolution<Complex<F>> {
    /// `(||R||^2 + sum_j ||S_j||^2)^{1/2}` in the coefficient-max norm.
    pub fn joint_norm(&self) -> f64 {
        let r = self.r.norm_coeff().as_f64();
        let s2: f64 = self.s_list.iter().map(|s| s.norm_coeff().as_f64().powi(2)).sum();
        (r * r + s2).sqrt()
    }
}

/// Solves the several-polynomial identity for `A` and `B_1..B_L`, given
/// `delta` with `sum_j |B_j(alpha)|^2 >= delta^2` at every root of `A` and
/// `sum_j ||B_j||^2 <= 1`.
pub fn solve_multi_bezout<F: Real>(
    a: &Polynomial<Complex<F>>,
    b_list: &[Polynomial<Complex<F>>],
    delta: f64,
    method: Method,
    seed: u64,
) -> Result<MultiBezoutSolution<Complex<F>>> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let roots = a.roots()?;
    solve_multi_bezout_with_roots(a, &roots, b_list, delta, method, seed)
}

/// As [`solve_multi_bezout`], with the roots of `A` supplied.
pub fn solve_multi_bezout_with_roots<F: Real>(
    a: &Polynomial<Complex<F>>,
    roots_a: &RootSet<Complex<F>>,
    b_list: &[Polynomial<Complex<F>>],
    delta: f64,
    method: Method,
    seed: u64,
) -> Result<MultiBezoutSolution<Complex<F>>> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if b_list.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidInput(format!("delta must be positive, got {delta}")));
    }
    let norm_sq: f64 = b_list.iter().map(|b| b.norm_coeff().as_f64().powi(2)).sum();
    if norm_sq > 1.0 + tol::HYPOTHESIS_SLACK {
        return Err(Error::HypothesisViolated(format!(
            "sum of squared coefficient norms of B_j is {norm_sq} > 1"
        )));
    }

    let values: Vec<Vec<Complex64>> = roots_a
        .values()
        .map(|alpha| b_list.iter().map(|b| to_c64(b.eval(alpha))).collect())
        .collect();
    let measured_delta = values
        .iter()
        .map(|v| v.iter().map(|z| z.norm_sqr()).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
        .sqrt();
    if measured_delta * measured_delta < delta * delta * (1.0 - 1e-9) {
        return Err(Error::HypothesisViolated(format!(
            "min_i sum_j |B_j(alpha_i)|^2 = {} < delta^2 = {}",
            measured_delta * measured_delta,
            delta * delta
        )));
    }

    let vectors: Vec<Vec<Complex64>> = values
        .iter()
        .map(|v| v.iter().map(|z| z / delta).collect())
        .collect();
    let cert = plank_vector(&vectors, seed)?;
    let weights: Vec<Complex<F>> = cert.y.iter().map(|y| from_c64::<F>(y.conj())).collect();

    let combined_b = b_list
        .iter()
        .zip(&weights)
        .fold(Polynomial::zero(), |acc, (b, w)| &acc + &b.scale(w));
    let n = roots_a.len() as f64;
    let floor = delta / n.sqrt() - 1e-9;
    for alpha in roots_a.values() {
        if combined_b.eval(alpha).norm().as_f64() < floor {
            return Err(Error::CommonRootsAfterCombination);
        }
    }

    let single = match method {
        Method::Sylvester => solve_minimal_bezout(a, &combined_b),
        Method::Interpolation => {
            let roots_b = if combined_b.is_constant() {
                RootSet::new(Vec::new())
            } else {
                combined_b.roots()?
            };
            bezout_by_interpolation_with_roots(a, &combined_b, roots_a, &roots_b)
        }
    }
    .map_err(|e| match e {
        Error::CommonRoots { .. } => Error::CommonRootsAfterCombination,
        other => other,
    })?;

    let s_list: Vec<Polynomial<Complex<F>>> = weights.iter().map(|w| single.s.scale(w)).collect();
    let mut terms = vec![&single.r * a];
    terms.extend(s_list.iter().zip(b_list).map(|(s, b)| s * b));
    let residual = identity_residual(&terms).as_f64();

    Ok(MultiBezoutSolution {
        r: single.r.clone(),
        s_list,
        s: single.s.clone(),
        y: cert,
        combined_b,
        residual,
        measured_delta,
        single,
    })
}

fn to_c64<F: Real>(z: Complex<F>) -> Complex64 {
    Complex64::new(z.re.as_f64(), z.im.as_f64())
}

fn from_c64<F: Real>(z: Complex64) -> Complex<F> {
    Complex::new(F::lit(z.re), F::lit(z.im))
}
