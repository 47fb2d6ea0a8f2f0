//! Sylvester matrix, resultant and the minimal Bezout solution by a dense
//! linear solve.

use crate::error::{Error, Result};
use crate::linalg::{rcond, Matrix};
use crate::poly::{identity_residual, Polynomial};
use crate::scalar::{GaussianRational, Real, Scalar};
use crate::tol;
use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sylvester,
    Interpolation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    Approximate,
    Exact,
    /// Approximate inputs whose system was too ill-conditioned for floating
    /// point and was re-solved over the rationals.
    ExactRetry,
}

/// Minimal solution of `R A + S B = 1` with `deg R < deg B`, `deg S < deg A`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutSolution<T> {
    pub r: Polynomial<T>,
    pub s: Polynomial<T>,
    /// `max_k |(R A + S B - 1)_k|`
    pub residual: f64,
    pub method: Method,
    pub mode: SolveMode,
    /// Reciprocal 1-norm condition estimate of the Sylvester matrix, when one
    /// was computed in floating point.
    pub rcond: Option<f64>,
}

impl<T: Scalar> BezoutSolution<T> {
    /// `(||R||^2 + ||S||^2)^{1/2}` in the coefficient-max norm.
    pub fn joint_norm(&self) -> f64 {
        let r = self.r.norm_coeff().as_f64();
        let s = self.s.norm_coeff().as_f64();
        r.hypot(s)
    }
}

/// The `(N + K) x (N + K)` Sylvester matrix of `A` (degree `N`) and `B`
/// (degree `K`).
///
/// Column `c < K` holds the coefficients of `A` shifted down by `c` rows, column
/// `K + c` those of `B` shifted down by `c`. Row `i` of `S x` is then the
/// coefficient of `z^i` in `R A + S B` for `x = (R_0..R_{K-1}, S_0..S_{N-1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix<T> {
    pub entries: Matrix<T>,
    pub n_a: usize,
    pub n_b: usize,
}

pub fn build_sylvester<T: Scalar>(a: &Polynomial<T>, b: &Polynomial<T>) -> Result<SylvesterMatrix<T>> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::BothConstant);
    }
    let n_a = a.degree_or_zero();
    let n_b = b.degree_or_zero();
    let n = n_a + n_b;
    let mut m = Matrix::zeros(n, n);
    for c in 0..n_b {
        for (j, coeff) in a.coeffs().iter().enumerate() {
            m.set(c + j, c, coeff.clone());
        }
    }
    for c in 0..n_a {
        for (j, coeff) in b.coeffs().iter().enumerate() {
            m.set(c + j, n_b + c, coeff.clone());
        }
    }
    Ok(SylvesterMatrix { entries: m, n_a, n_b })
}

/// Determinant of the Sylvester matrix.
pub fn resultant<T: Scalar>(a: &Polynomial<T>, b: &Polynomial<T>) -> Result<T> {
    let s = build_sylvester(a, b)?;
    Ok(s.entries.lu().det())
}

/// Minimal Bezout solution from the Sylvester system `S x = e_0`.
///
/// In floating point, a system with reciprocal condition number at or below
/// `SINGULAR_TOL` is re-solved exactly using the exact binary values of the
/// inputs; only an exactly singular system is reported as `CommonRoots`.
pub fn solve_minimal_bezout<T: Scalar>(a: &Polynomial<T>, b: &Polynomial<T>) -> Result<BezoutSolution<T>> {
    if let Some(sol) = degenerate_solution(a, b, Method::Sylvester)? {
        return Ok(sol);
    }
    let syl = build_sylvester(a, b)?;
    let n = syl.n_a + syl.n_b;
    let mut e = vec![T::zero(); n];
    e[0] = T::one();

    let (x, mode, cond) = if T::EXACT {
        let x = syl.entries.lu().solve(&e).ok_or(Error::CommonRoots { rcond: None })?;
        (x, SolveMode::Exact, None)
    } else {
        let lu = syl.entries.lu();
        let rc = rcond(&syl.entries, &lu).as_f64();
        if rc > T::Real::tol(tol::SINGULAR_TOL).as_f64() {
            let mut x = lu.solve(&e).ok_or(Error::CommonRoots { rcond: Some(rc) })?;
            refine(&syl.entries, &lu, &e, &mut x);
            (x, SolveMode::Approximate, Some(rc))
        } else {
            let x = exact_retry(&syl.entries, rc)?;
            (x, SolveMode::ExactRetry, Some(rc))
        }
    };
    let r = Polynomial::new(x[..syl.n_b].to_vec());
    let s = Polynomial::new(x[syl.n_b..].to_vec());
    Ok(finish(a, b, r, s, Method::Sylvester, mode, cond))
}

fn refine<T: Scalar>(m: &Matrix<T>, lu: &crate::linalg::Lu<T>, e: &[T], x: &mut [T]) {
    let mx = m.mul_vec(x);
    let res: Vec<T> = e.iter().zip(mx).map(|(ei, mi)| ei.clone() - mi).collect();
    if let Some(d) = lu.solve(&res) {
        for (xi, di) in x.iter_mut().zip(d) {
            *xi = xi.clone() + di;
        }
    }
}

fn exact_retry<T: Scalar>(m: &Matrix<T>, rc: f64) -> Result<Vec<T>> {
    let exact_rows = m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(Scalar::to_exact).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::CommonRoots { rcond: Some(rc) })?;
    let exact: Matrix<GaussianRational> = Matrix::from_rows(exact_rows);
    let n = exact.rows();
    let mut e = vec![GaussianRational::zero(); n];
    e[0] = num_traits::One::one();
    let x = exact.lu().solve(&e).ok_or(Error::CommonRoots { rcond: Some(rc) })?;
    Ok(x.iter().map(T::from_exact).collect())
}

/// Closed forms when one polynomial is constant, where the Sylvester layout
/// degenerates.
pub(crate) fn degenerate_solution<T: Scalar>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    method: Method,
) -> Result<Option<BezoutSolution<T>>> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::BothConstant);
    }
    let mode = if T::EXACT { SolveMode::Exact } else { SolveMode::Approximate };
    if b.is_constant() {
        if b.is_zero() {
            return Err(Error::CommonRoots { rcond: None });
        }
        let s = Polynomial::constant(T::one() / b.coeff(0));
        return Ok(Some(finish(a, b, Polynomial::zero(), s, method, mode, None)));
    }
    if a.is_constant() {
        if a.is_zero() {
            return Err(Error::CommonRoots { rcond: None });
        }
        let r = Polynomial::constant(T::one() / a.coeff(0));
        return Ok(Some(finish(a, b, r, Polynomial::zero(), method, mode, None)));
    }
    Ok(None)
}

pub(crate) fn finish<T: Scalar>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    r: Polynomial<T>,
    s: Polynomial<T>,
    method: Method,
    mode: SolveMode,
    rcond: Option<f64>,
) -> BezoutSolution<T> {
    let residual = identity_residual(&[&r * a, &s * b]).as_f64();
    BezoutSolution {
        r,
        s,
        residual,
        method,
        mode,
        rcond,
    }
}

/// Right-hand side of the symmetric coefficient estimate
/// `sqrt(2) (N+K-1)! / min(|A_N|^K d^N, |B_K|^N d^K)`, where `d` is the
/// smallest of `|A(beta)|` and `|B(alpha)|` over the roots of both.
///
/// Requires `||A||, ||B|| <= 1` in the coefficient-max norm.
pub fn rough_bound<F: Real>(a: &Polynomial<Complex<F>>, b: &Polynomial<Complex<F>>) -> Result<f64> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::BothConstant);
    }
    for p in [a, b] {
        let norm = p.norm_coeff().as_f64();
        if norm > 1.0 + tol::HYPOTHESIS_SLACK {
            return Err(Error::NormTooLarge { norm });
        }
    }
    let d = cross_delta(a, b)?;
    let n = a.degree_or_zero();
    let k = b.degree_or_zero();
    let lead_a = a.leading().map_or(0.0, |c| c.norm().as_f64());
    let lead_b = b.leading().map_or(0.0, |c| c.norm().as_f64());
    let fact: f64 = (1..(n + k)).map(|i| i as f64).product();
    let denom = (lead_a.powi(k as i32) * d.powi(n as i32)).min(lead_b.powi(n as i32) * d.powi(k as i32));
    if !(denom > 0.0) {
        return Err(Error::CommonRoots { rcond: None });
    }
    Ok(std::f64::consts::SQRT_2 * fact / denom)
}

/// `min { |A(beta_j)|, |B(alpha_i)| }` over all roots of `A` and `B`.
pub fn cross_delta<F: Real>(a: &Polynomial<Complex<F>>, b: &Polynomial<Complex<F>>) -> Result<f64> {
    let mut d = f64::INFINITY;
    for (p, q) in [(a, b), (b, a)] {
        if p.is_constant() {
            continue;
        }
        for root in p.roots()?.iter() {
            d = d.min(q.eval(&root.value).norm().as_f64());
        }
    }
    if d.is_zero() || d.is_nan() {
        return Err(Error::CommonRoots { rcond: None });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::{ExactPoly, Poly};
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn close(p: &Poly, expect: &[f64], rel: f64) -> bool {
        let scale = expect.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        p.degree_or_zero() + 1 >= expect.len()
            && (0..expect.len().max(p.coeffs().len())).all(|k| {
                let e = expect.get(k).copied().unwrap_or(0.0);
                (p.coeff(k) - c(e)).norm() <= rel * scale
            })
    }

    #[test]
    fn layout_matches_displayed_matrix() {
        let d = 0.5;
        let m = build_sylvester(&Poly::from_reals(&[0.0, 0.0, 1.0]), &Poly::from_reals(&[-d, 1.0])).unwrap();
        let rows: Vec<Vec<f64>> = m.entries.to_rows().iter().map(|r| r.iter().map(|z| z.re).collect()).collect();
        assert_eq!(rows, vec![vec![0.0, -d, 0.0], vec![0.0, 1.0, -d], vec![1.0, 0.0, 1.0]]);

        let (a, b) = (2.0, 3.0);
        let m = build_sylvester(&Poly::from_reals(&[-a, 1.0]), &Poly::from_reals(&[-b, 1.0])).unwrap();
        let rows: Vec<Vec<f64>> = m.entries.to_rows().iter().map(|r| r.iter().map(|z| z.re).collect()).collect();
        assert_eq!(rows, vec![vec![-a, -b], vec![1.0, 1.0]]);
    }

    #[test]
    fn constant_b_has_no_a_columns() {
        let m = build_sylvester(&Poly::from_reals(&[0.0, 1.0]), &Poly::from_reals(&[2.0])).unwrap();
        assert_eq!(m.entries.to_rows(), vec![vec![c(2.0)]]);
        let sol = solve_minimal_bezout(&Poly::from_reals(&[0.0, 1.0]), &Poly::from_reals(&[2.0])).unwrap();
        assert!(sol.r.is_zero());
        assert!(close(&sol.s, &[0.5], 1e-15));
        assert_eq!(sol.residual, 0.0);
    }

    #[test]
    fn both_constant_rejected() {
        let one = Poly::one();
        assert_eq!(build_sylvester(&one, &one).unwrap_err(), Error::BothConstant);
        assert_eq!(solve_minimal_bezout(&one, &one).unwrap_err(), Error::BothConstant);
    }

    #[test]
    fn resultant_moduli() {
        let r = resultant(&Poly::from_reals(&[0.0, 0.0, 1.0]), &Poly::from_reals(&[-0.5, 1.0])).unwrap();
        assert!((r.norm() - 0.25).abs() < 1e-15);
        let r = resultant(&Poly::from_reals(&[-2.0, 1.0]), &Poly::from_reals(&[-3.0, 1.0])).unwrap();
        assert!((r.norm() - 1.0).abs() < 1e-15);
        let r = resultant(&Poly::from_reals(&[2.0, -3.0, 1.0]), &Poly::from_reals(&[-1.0, 1.0])).unwrap();
        assert!(r.norm() < 1e-12);
    }

    #[test]
    fn square_against_linear() {
        for d in [0.5, 0.1] {
            let sol = solve_minimal_bezout(&Poly::from_reals(&[0.0, 0.0, 1.0]), &Poly::from_reals(&[-d, 1.0])).unwrap();
            assert!(close(&sol.r, &[1.0 / (d * d)], 1e-12));
            assert!(close(&sol.s, &[-1.0 / d, -1.0 / (d * d)], 1e-12));
            assert!(sol.residual < 1e-12);
        }
    }

    #[test]
    fn power_against_linear() {
        let d = 0.2;
        for n in 1..=6 {
            let mut ac = vec![0.0; n + 1];
            ac[n] = 1.0;
            let sol = solve_minimal_bezout(&Poly::from_reals(&ac), &Poly::from_reals(&[-d, 1.0])).unwrap();
            let dn = d.powi(n as i32);
            let s: Vec<f64> = (0..n).map(|j| -d.powi((n - 1 - j) as i32) / dn).collect();
            assert!(close(&sol.r, &[1.0 / dn], 1e-12));
            assert!(close(&sol.s, &s, 1e-12));
        }
    }

    #[test]
    fn shifted_quadratics() {
        for eta in [0.1, 0.25, 0.4] {
            let delta = eta * (1.0 - eta);
            let a = Poly::from_reals(&[0.0, -1.0, 1.0]);
            let b = Poly::from_reals(&[eta * (1.0 - eta), -1.0, 1.0]);
            let sol = solve_minimal_bezout(&a, &b).unwrap();
            assert!(close(&sol.r, &[-1.0 / delta], 1e-12));
            assert!(close(&sol.s, &[1.0 / delta], 1e-12));
        }
    }

    #[test]
    fn exact_mode_is_exact() {
        let a: ExactPoly = Polynomial::new(vec![ratio(0, 1), ratio(0, 1), ratio(1, 1)]);
        let b: ExactPoly = Polynomial::new(vec![ratio(-1, 3), ratio(1, 1)]);
        let sol = solve_minimal_bezout(&a, &b).unwrap();
        assert_eq!(sol.mode, SolveMode::Exact);
        assert_eq!(sol.r.coeffs(), &[ratio(9, 1)]);
        assert_eq!(sol.s.coeffs(), &[ratio(-3, 1), ratio(-9, 1)]);
        assert_eq!(sol.residual, 0.0);
    }

    #[test]
    fn exact_common_root_detected() {
        let a: ExactPoly = Polynomial::new(vec![ratio(2, 1), ratio(-3, 1), ratio(1, 1)]);
        let b: ExactPoly = Polynomial::new(vec![ratio(-1, 1), ratio(1, 1)]);
        assert!(matches!(solve_minimal_bezout(&a, &b), Err(Error::CommonRoots { .. })));
    }

    #[test]
    fn float_common_root_detected_after_retry() {
        let a = Poly::from_reals(&[2.0, -3.0, 1.0]);
        let b = Poly::from_reals(&[-1.0, 1.0]);
        match solve_minimal_bezout(&a, &b) {
            Err(Error::CommonRoots { rcond: Some(rc) }) => assert!(rc <= 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ill_conditioned_system_retried_exactly() {
        let mut ac = vec![0.0; 9];
        ac[8] = 1.0;
        let d = 0.01;
        let sol = solve_minimal_bezout(&Poly::from_reals(&ac), &Poly::from_reals(&[-d, 1.0])).unwrap();
        assert_eq!(sol.mode, SolveMode::ExactRetry);
        let expect = 1.0 / d.powi(8);
        assert!(((sol.r.coeff(0).re - expect) / expect).abs() < 1e-12);
    }

    #[test]
    fn single_precision_solve() {
        let a = crate::Poly32::from_reals(&[0.0, 0.0, 1.0]);
        let b = crate::Poly32::from_reals(&[-0.5, 1.0]);
        let sol = solve_minimal_bezout(&a, &b).unwrap();
        assert!((sol.r.coeff(0).re - 4.0).abs() < 1e-5);
        assert!((sol.s.coeff(1).re + 4.0).abs() < 1e-5);
    }

    #[test]
    fn rough_bound_examples() {
        let eta = 0.25;
        let delta = eta * (1.0 - eta);
        let a = Poly::from_reals(&[0.0, -1.0, 1.0]);
        let b = Poly::from_reals(&[delta, -1.0, 1.0]);
        let bound = rough_bound(&a, &b).unwrap();
        let expect = 6.0 * std::f64::consts::SQRT_2 / (delta * delta);
        assert!((bound - expect).abs() < 1e-9 * expect);

        let bound = rough_bound(&Poly::from_reals(&[0.0, 1.0]), &Poly::from_reals(&[-1.0, 1.0])).unwrap();
        assert!((bound - std::f64::consts::SQRT_2).abs() < 1e-12);

        let big = rough_bound(&Poly::from_reals(&[0.0, 2.0]), &Poly::from_reals(&[-1.0, 1.0]));
        assert!(matches!(big, Err(Error::NormTooLarge { .. })));
    }

    #[test]
    fn rough_bound_decreases_with_separation() {
        let a = Poly::from_reals(&[0.0, 1.0]);
        let near = rough_bound(&a, &Poly::from_reals(&[-0.1, 1.0])).unwrap();
        let far = rough_bound(&a, &Poly::from_reals(&[-0.2, 1.0])).unwrap();
        assert!(far < near);
    }

    fn roots_strategy(max: usize) -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max)
            .prop_map(|v| v.into_iter().map(|(x, y)| Complex64::new(x, y)).collect())
    }

    fn separated(xs: &[Complex64], ys: &[Complex64], gap: f64) -> bool {
        xs.iter().all(|x| ys.iter().all(|y| (x - y).norm() > gap))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn residual_small_on_coprime_pairs(ra in roots_strategy(6), rb in roots_strategy(6)) {
            prop_assume!(separated(&ra, &rb, 0.05));
            let a = Poly::from_roots(&crate::RootSet::simple(ra), c(1.0));
            let b = Poly::from_roots(&crate::RootSet::simple(rb), c(1.0));
            let sol = solve_minimal_bezout(&a, &b).unwrap();
            let scale = 1.0 + sol.r.norm_coeff() + sol.s.norm_coeff();
            prop_assert!(sol.residual <= 1e-9 * scale, "{} vs {}", sol.residual, scale);
            prop_assert!(sol.r.degree_or_zero() < b.degree().unwrap());
            prop_assert!(sol.s.degree_or_zero() < a.degree().unwrap());
        }

        #[test]
        fn resultant_matches_root_products(ra in roots_strategy(6), rb in roots_strategy(6), la in 0.5f64..2.0, lb in 0.5f64..2.0) {
            prop_assume!(separated(&ra, &rb, 0.05));
            let a = Poly::from_roots(&crate::RootSet::simple(ra), c(la));
            let b = Poly::from_roots(&crate::RootSet::simple(rb), c(lb));
            let det = resultant(&a, &b).unwrap().norm();
            let (n, k) = (a.degree().unwrap() as i32, b.degree().unwrap() as i32);
            let via_b: f64 = la.powi(k) * a.roots().unwrap().iter().map(|r| b.eval(&r.value).norm().powi(r.multiplicity as i32)).product::<f64>();
            let via_a: f64 = lb.powi(n) * b.roots().unwrap().iter().map(|r| a.eval(&r.value).norm().powi(r.multiplicity as i32)).product::<f64>();
            prop_assert!((det - via_b).abs() <= 1e-9 * det);
            prop_assert!((det - via_a).abs() <= 1e-9 * det);
        }

        #[test]
        fn rescaling_b_rescales_s(ra in roots_strategy(4), rb in roots_strategy(4), scale in 0.1f64..10.0, phase in 0.0f64..std::f64::consts::TAU) {
            prop_assume!(separated(&ra, &rb, 0.05));
            let a = Poly::from_roots(&crate::RootSet::simple(ra), c(1.0));
            let b = Poly::from_roots(&crate::RootSet::simple(rb), c(1.0));
            let k = Complex64::from_polar(scale, phase);
            let base = solve_minimal_bezout(&a, &b).unwrap();
            let scaled = solve_minimal_bezout(&a, &b.scale(&k)).unwrap();
            let rn = base.r.norm_coeff().max(1e-300);
            let sn = base.s.norm_coeff().max(1e-300);
            prop_assert!((&scaled.r - &base.r).norm_coeff() <= 1e-10 * rn);
            prop_assert!((&scaled.s.scale(&k) - &base.s).norm_coeff() <= 1e-10 * sn);
        }

        #[test]
        fn within_rough_bound(ra in roots_strategy(4), rb in roots_strategy(4)) {
            prop_assume!(separated(&ra, &rb, 0.05));
            let a = Poly::from_roots(&crate::RootSet::simple(ra), c(1.0));
            let b = Poly::from_roots(&crate::RootSet::simple(rb), c(1.0));
            let a = a.scale(&c(1.0 / a.norm_coeff()));
            let b = b.scale(&c(1.0 / b.norm_coeff()));
            let sol = solve_minimal_bezout(&a, &b).unwrap();
            let bound = rough_bound(&a, &b).unwrap();
            prop_assert!(sol.joint_norm() <= bound * (1.0 + 1e-9));
        }
    }
}
