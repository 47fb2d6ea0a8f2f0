//! A unit vector `y` with `|<v_i, y>| >= 1/sqrt(n)` for vectors of norm at
//! least one.
//!
//! The objective `f(y) = min_i |<v_i, y>|` is maximized by alternating two
//! exact steps. With the phases `theta_i = arg <v_i, y>` frozen,
//! `f(y) = min_i Re <w_i, y>` for `w_i = e^{-i theta_i} v_i`, and the best
//! unit vector for that linear problem is the normalized minimum-norm point of
//! the convex hull of the `w_i` (in the real space `R^{2L}`). Each round can
//! only increase `f`. Several starting points are tried and the best result
//! is kept.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_RESTARTS: usize = 32;
const MAX_ROUNDS: usize = 500;
const SHORT_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct PlankCertificate {
    /// Unit vector, with its first nonzero component real and positive.
    pub y: Vec<Complex64>,
    /// `min_i |<v_i, y>|`
    pub achieved: f64,
    /// `1 / sqrt(n)`
    pub bound: f64,
}

/// `<v, y> = sum_k v_k conj(y_k)`
pub fn inner(v: &[Complex64], y: &[Complex64]) -> Complex64 {
    v.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn objective(vectors: &[Vec<Complex64>], y: &[Complex64]) -> f64 {
    vectors
        .iter()
        .map(|v| inner(v, y).norm())
        .fold(f64::INFINITY, f64::min)
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalized(v: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = norm(v);
    (n > 0.0 && n.is_finite()).then(|| v.iter().map(|z| z / n).collect())
}

/// Finds a plank vector for `vectors`, all of length `L` and norm at least 1.
///
/// The result is deterministic for a given `seed`. Fails with
/// `PlankCertificateFailed` if the best vector found misses `1/sqrt(n)` by
/// more than `1e-9`.
pub fn plank_vector(vectors: &[Vec<Complex64>], seed: u64) -> Result<PlankCertificate> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    if dim == 0 {
        return Err(Error::EmptyInput);
    }
    for (index, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::InvalidInput(format!(
                "vector {index} has length {} instead of {dim}",
                v.len()
            )));
        }
        let n = norm(v);
        if !(n >= 1.0 - SHORT_SLACK) {
            return Err(Error::VectorTooShort { index, norm: n });
        }
    }

    let mut starts: Vec<Vec<Complex64>> = vectors.iter().filter_map(|v| normalized(v)).collect();
    let sum: Vec<Complex64> = (0..dim).map(|k| vectors.iter().map(|v| v[k]).sum()).collect();
    starts.extend(normalized(&sum));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RESTARTS {
        let v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        starts.extend(normalized(&v));
    }

    let results: Vec<(Vec<Complex64>, f64)> = starts.into_iter().map(|y| ascend(vectors, y)).collect();
    let best = results.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let (y, achieved) = results
        .into_iter()
        .find(|r| r.1 >= best - 1e-10)
        .expect("at least one start");

    let bound = 1.0 / (vectors.len() as f64).sqrt();
    if achieved < bound - 1e-9 {
        return Err(Error::PlankCertificateFailed { achieved, bound });
    }
    Ok(PlankCertificate {
        y: fix_phase(y),
        achieved,
        bound,
    })
}

fn fix_phase(y: Vec<Complex64>) -> Vec<Complex64> {
    match y.iter().find(|z| z.norm() > 1e-12) {
        Some(z) => {
            let rot = z.conj() / z.norm();
            y.iter().map(|w| w * rot).collect()
        }
        None => y,
    }
}

fn ascend(vectors: &[Vec<Complex64>], mut y: Vec<Complex64>) -> (Vec<Complex64>, f64) {
    let mut value = objective(vectors, &y);
    for _ in 0..MAX_ROUNDS {
        let aligned: Vec<Vec<f64>> = vectors
            .iter()
            .map(|v| {
                let ip = inner(v, &y);
                let rot = if ip.norm() > 0.0 {
                    ip.conj() / ip.norm()
                } else {
                    Complex64::new(1.0, 0.0)
                };
                v.iter().flat_map(|z| {
                    let w = z * rot;
                    [w.re, w.im]
                })
                .collect()
            })
            .collect();
        let u = min_norm_point(&aligned);
        let un = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        if un <= 1e-300 {
            break;
        }
        let next: Vec<Complex64> = u.chunks(2).map(|c| Complex64::new(c[0] / un, c[1] / un)).collect();
        let next_value = objective(vectors, &next);
        if next_value <= value * (1.0 + 1e-15) {
            if next_value > value {
                y = next;
                value = next_value;
            }
            break;
        }
        y = next;
        value = next_value;
    }
    (y, value)
}

/// Minimum-norm point of the convex hull of `points` (Wolfe's algorithm).
pub(crate) fn min_norm_point(points: &[Vec<f64>]) -> Vec<f64> {
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let scale = points.iter().map(|p| dot(p, p)).fold(0.0, f64::max);
    let eps = 1e-12;
    let start = (0..points.len())
        .min_by(|&i, &j| dot(&points[i], &points[i]).total_cmp(&dot(&points[j], &points[j])))
        .expect("nonempty");
    let mut active = vec![start];
    let mut lambda = vec![1.0];
    let combine = |active: &[usize], lambda: &[f64]| -> Vec<f64> {
        let mut x = vec![0.0; points[0].len()];
        for (&i, &l) in active.iter().zip(lambda) {
            for (xk, pk) in x.iter_mut().zip(&points[i]) {
                *xk += l * pk;
            }
        }
        x
    };
    let mut x = points[start].clone();
    for _ in 0..(50 * points.len() + 50) {
        let xx = dot(&x, &x);
        let (j, best) = (0..points.len())
            .map(|i| (i, dot(&x, &points[i])))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        if best >= xx - eps * scale || active.contains(&j) {
            break;
        }
        active.push(j);
        lambda.push(0.0);
        while let Some(mu) = affine_min_norm(points, &active) {
            if mu.iter().all(|&m| m > eps) {
                lambda = mu;
                break;
            }
            let theta = active
                .iter()
                .enumerate()
                .filter(|&(k, _)| mu[k] <= eps)
                .map(|(k, _)| lambda[k] / (lambda[k] - mu[k]))
                .filter(|t| t.is_finite())
                .fold(1.0f64, f64::min)
                .max(0.0);
            for (l, m) in lambda.iter_mut().zip(&mu) {
                *l += theta * (m - *l);
            }
            let keep: Vec<bool> = lambda.iter().map(|&l| l > eps).collect();
            active = active.iter().zip(&keep).filter(|p| *p.1).map(|p| *p.0).collect();
            lambda = lambda.iter().zip(&keep).filter(|p| *p.1).map(|p| *p.0).collect();
            let total: f64 = lambda.iter().sum();
            lambda.iter_mut().for_each(|l| *l /= total);
            if active.len() <= 1 {
                break;
            }
        }
        x = combine(&active, &lambda);
    }
    x
}

/// Weights `mu` (summing to one) of the minimum-norm point of the affine hull
/// of the selected points.
fn affine_min_norm(points: &[Vec<f64>], active: &[usize]) -> Option<Vec<f64>> {
    let k = active.len();
    let mut m = DMatrix::<f64>::zeros(k + 1, k + 1);
    for (a, &i) in active.iter().enumerate() {
        for (b, &j) in active.iter().enumerate() {
            m[(a, b)] = points[i].iter().zip(&points[j]).map(|(x, y)| x * y).sum();
        }
        m[(a, k)] = 1.0;
        m[(k, a)] = 1.0;
    }
    let mut rhs = DVector::<f64>::zeros(k + 1);
    rhs[k] = 1.0;
    let sol = m.lu().solve(&rhs)?;
    let mu: Vec<f64> = sol.iter().take(k).copied().collect();
    mu.iter().all(|v| v.is_finite()).then_some(mu)
}
