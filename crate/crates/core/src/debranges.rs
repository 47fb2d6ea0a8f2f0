//! Data attached to a rational Schur-class symbol `b`: its Pythagorean mate
//! `a`, the polynomial `a_1` collecting the unimodular zeros of `a`, the
//! decomposition `f = a_1 f~ + p` of polynomial elements of `H(b)` with the
//! equivalent norm `||f||_b^2 = ||f~||^2 + ||p||^2`, the boundary estimate
//! at a zero of `a_1`, and polynomial corona data.

use crate::error::{Error, Result};
use crate::multi::{solve_multi_bezout_with_roots, MultiBezoutSolution};
use crate::poly::{Root, RootSet};
use crate::sylvester::Method;
use crate::tol;
use crate::Poly;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::f64::consts::TAU;

/// Sample count for checking `|a|^2 + |b|^2 = 1` on the circle.
pub const IDENTITY_SAMPLES: usize = 512;
/// Sample count for fitting the modulus of the mate's leading constant.
const FIT_SAMPLES: usize = 64;
/// Odd-multiplicity unimodular roots closer than this are merged in pairs.
const PAIR_RADIUS: f64 = 1e-3;

/// `num / den`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn eval(&self, z: &Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// `max_{|z|=1} |num/den|` on `n` equispaced points.
    pub fn sup_on_circle(&self, n: usize) -> f64 {
        unit_points(n).map(|z| self.eval(&z).norm()).fold(0.0, f64::max)
    }
}

fn unit_points(n: usize) -> impl Iterator<Item = Complex64> {
    (0..n).map(move |k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PythagoreanMate {
    /// The mate, with `a(0) > 0` and no zeros in the open disk.
    pub a: RationalFunction,
    /// `prod_j (z - xi_j)^{m_j}` over the unimodular zeros of `a`.
    pub a1: Poly,
    pub boundary_roots: RootSet<Complex64>,
    /// `N = sum_j m_j = deg a_1`
    pub n_total: usize,
    /// `max | |a|^2 + |b|^2 - 1 |` over the check samples.
    pub identity_error: f64,
}

/// Pythagorean mate of `b = num/den` by splitting the roots of
/// `den den* - num num*`, where `r*(z) = z^d conj(r(1/conj z))`.
///
/// On the circle that polynomial equals `z^d (|den|^2 - |num|^2)`; its roots
/// pair up as `w, 1/conj(w)`, and unimodular roots have even multiplicity.
/// The mate's numerator takes the roots outside the disk and half of each
/// unimodular root.
pub fn pythagorean_mate(b: &RationalFunction) -> Result<PythagoreanMate> {
    let (p, q) = (&b.num, &b.den);
    if q.is_zero() {
        return Err(Error::DivisionByZeroPolynomial);
    }
    if !q.is_constant() && q.roots()?.values().any(|w| w.norm() <= 1.0 + tol::CIRCLE_TOL) {
        return Err(Error::NotSchurClass { sup: f64::INFINITY });
    }
    let sup = b.sup_on_circle(tol::N_SAMPLES);
    if sup > 1.0 + tol::FR_TOL {
        return Err(Error::NotSchurClass { sup });
    }

    let d = p.degree_or_zero().max(q.degree_or_zero());
    let raw: Vec<Complex64> = {
        let qq = q * &q.conj_reversed(d);
        let pp = p * &p.conj_reversed(d);
        (0..=2 * d).map(|k| qq.coeff(k) - pp.coeff(k)).collect()
    };
    let scale = q.norm_h2().powi(2) + p.norm_h2().powi(2);
    let big = raw.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if big <= 1e-12 * scale {
        return Err(Error::BlaschkeProduct);
    }
    // zeros at the origin pair with zeros at infinity and do not enter `a`
    let low = raw.iter().take_while(|c| c.norm() <= tol::TRIM_EPS * big).count();
    let symbol = Poly::new(raw[low..].to_vec());

    let mut exterior: Vec<Complex64> = Vec::new();
    let mut circle: Vec<Root<Complex64>> = Vec::new();
    if !symbol.is_constant() {
        for root in symbol.roots()?.iter() {
            let r = root.value.norm();
            if (r - 1.0).abs() <= tol::CIRCLE_TOL {
                circle.push(root.clone());
            } else if r > 1.0 {
                exterior.extend(std::iter::repeat_n(root.value, root.multiplicity));
            }
        }
    }
    let boundary = pair_circle_roots(circle)?;
    let n_total = boundary.degree();
    let a1 = Poly::from_roots(&boundary, Complex64::one());
    let num0 = &Poly::from_roots(&RootSet::simple(exterior), Complex64::one()) * &a1;

    // |c|^2 from a least-squares fit of |q|^2 - |p|^2 = |c|^2 |num0|^2
    let (mut top, mut bottom) = (0.0, 0.0);
    for z in unit_points(FIT_SAMPLES) {
        let target = q.eval(&z).norm_sqr() - p.eval(&z).norm_sqr();
        let w = num0.eval(&z).norm_sqr();
        top += target * w;
        bottom += w * w;
    }
    if !(bottom > 0.0) || !(top > 0.0) {
        return Err(Error::FactorizationFailed("degenerate modulus fit".into()));
    }
    let at_zero = num0.eval(&Complex64::zero()) / q.eval(&Complex64::zero());
    if at_zero.norm() == 0.0 {
        return Err(Error::FactorizationFailed("mate vanishes at the origin".into()));
    }
    let c = (top / bottom).sqrt() * at_zero.conj() / at_zero.norm();
    let a = RationalFunction {
        num: num0.scale(&c),
        den: q.clone(),
    };

    let identity_error = unit_points(IDENTITY_SAMPLES)
        .map(|z| (a.eval(&z).norm_sqr() + b.eval(&z).norm_sqr() - 1.0).abs())
        .fold(0.0, f64::max);
    if identity_error > tol::FR_TOL {
        return Err(Error::FactorizationFailed(format!(
            "|a|^2 + |b|^2 deviates from 1 by {identity_error:e}"
        )));
    }
    Ok(PythagoreanMate {
        a,
        a1,
        boundary_roots: boundary,
        n_total,
        identity_error,
    })
}

/// Halves the multiplicities of unimodular roots, merging odd ones pairwise
/// by proximity.
fn pair_circle_roots(circle: Vec<Root<Complex64>>) -> Result<RootSet<Complex64>> {
    let mut even: Vec<Root<Complex64>> = Vec::new();
    let mut odd: Vec<Root<Complex64>> = Vec::new();
    for r in circle {
        if r.multiplicity % 2 == 0 {
            even.push(r);
        } else {
            odd.push(r);
        }
    }
    while let Some(r) = odd.pop() {
        let nearest = odd
            .iter()
            .enumerate()
            .map(|(i, s)| (i, (s.value - r.value).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1));
        match nearest {
            Some((i, dist)) if dist <= PAIR_RADIUS => {
                let s = odd.swap_remove(i);
                let m = r.multiplicity + s.multiplicity;
                let centre = (r.value * r.multiplicity as f64 + s.value * s.multiplicity as f64) / m as f64;
                even.push(Root::new(centre, m));
            }
            _ => {
                return Err(Error::OddCircleMultiplicity {
                    root: format!("{}", r.value),
                    multiplicity: r.multiplicity,
                })
            }
        }
    }
    even.sort_by(|x, y| x.value.arg().total_cmp(&y.value.arg()));
    Ok(RootSet::new(
        even.into_iter()
            .map(|r| Root::new(r.value / r.value.norm(), r.multiplicity / 2))
            .collect(),
    ))
}

/// `f = a_1 f~ + p` with `deg p < deg a_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HbElement {
    pub f_tilde: Poly,
    pub p: Poly,
}

/// Division by `a_1`. With `a_1 = 1` (no boundary zeros) the space is `H^2`
/// and the decomposition is `f~ = f`, `p = 0`.
pub fn hb_decompose(f: &Poly, a1: &Poly) -> Result<HbElement> {
    let (f_tilde, p) = f.div_rem(a1)?;
    Ok(HbElement { f_tilde, p })
}

/// `(||f~||^2 + ||p||^2)^{1/2}` with Hardy-space norms.
pub fn hb_norm(f: &Poly, a1: &Poly) -> Result<f64> {
    let e = hb_decompose(f, a1)?;
    Ok(e.f_tilde.norm_h2().hypot(e.p.norm_h2()))
}

/// Constant in the boundary estimate at the zero `xi_k` of `a_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryConstant {
    pub xi: Complex64,
    /// `sup_{|z|=1} |a_1(z) / (z - xi)|^2`
    pub a_sharp_sup_sq: f64,
    /// Squared operator norm of `p -> (p - p(xi)) / (z - xi)` on polynomials
    /// of degree below `N`, in the Hardy-space norm.
    pub c_tilde: f64,
    /// `2 max(a_sharp_sup_sq, c_tilde)`
    pub c_k: f64,
}

pub fn boundary_constant(a1: &Poly, boundary_roots: &RootSet<Complex64>, k: usize) -> Result<BoundaryConstant> {
    let root = boundary_roots.entries().get(k).ok_or(Error::IndexOutOfRange {
        index: k,
        len: boundary_roots.len(),
    })?;
    let xi = root.value;
    let n = a1.degree_or_zero();
    let a_sharp = exact_quotient(a1, &xi);
    let sup = a_sharp.norm_sup_circle(1.0);
    let a_sharp_sup_sq = sup * sup;

    // column m is the image of z^m: sum_{i<m} xi^{m-1-i} z^i
    let mut t = DMatrix::<Complex64>::zeros(n, n);
    for m in 1..n {
        for i in 0..m {
            t[(i, m)] = xi.powu((m - 1 - i) as u32);
        }
    }
    let sigma = t.singular_values().iter().copied().fold(0.0, f64::max);
    let c_tilde = sigma * sigma;
    Ok(BoundaryConstant {
        xi,
        a_sharp_sup_sq,
        c_tilde,
        c_k: 2.0 * a_sharp_sup_sq.max(c_tilde),
    })
}

/// Synthetic division by `z - xi` without a residual check; `xi` is a root of
/// `a_1` by construction up to rounding of the root itself.
fn exact_quotient(p: &Poly, xi: &Complex64) -> Poly {
    let c = p.coeffs();
    if c.len() <= 1 {
        return Poly::zero();
    }
    let mut q = vec![Complex64::zero(); c.len() - 1];
    let mut carry = Complex64::zero();
    for j in (0..c.len() - 1).rev() {
        carry = carry * xi + c[j + 1];
        q[j] = carry;
    }
    Poly::new(q)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCheck {
    pub constant: BoundaryConstant,
    pub eta: f64,
    pub hb_norm: f64,
    /// Largest `|f(z)|^2 - RHS(z)` over the samples; at most zero when the
    /// estimate holds.
    pub max_violation: f64,
    /// Sample attaining `max_violation`.
    pub worst: Complex64,
}

/// Evaluates `|f(z)|^2 <= (1+eta)|f(xi_k)|^2 + c_k (1 + 1/eta) |z - xi_k|^2 /
/// (1 - |z|^2) ||f||_b^2` at every sample.
pub fn boundary_bound_check(
    f: &Poly,
    a1: &Poly,
    boundary_roots: &RootSet<Complex64>,
    k: usize,
    samples: &[Complex64],
    eta: f64,
) -> Result<BoundaryCheck> {
    if !(eta > 0.0) {
        return Err(Error::InvalidInput(format!("eta must be positive, got {eta}")));
    }
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let constant = boundary_constant(a1, boundary_roots, k)?;
    let norm = hb_norm(f, a1)?;
    let at_xi = f.eval(&constant.xi).norm_sqr();
    let mut max_violation = f64::NEG_INFINITY;
    let mut worst = samples[0];
    for z in samples {
        let r2 = z.norm_sqr();
        if !(r2 < 1.0) {
            return Err(Error::SampleOutsideDisk(format!("{z}")));
        }
        let lhs = f.eval(z).norm_sqr();
        let rhs = (1.0 + eta) * at_xi
            + constant.c_k * (1.0 + 1.0 / eta) * (z - constant.xi).norm_sqr() / (1.0 - r2) * norm * norm;
        let v = lhs - rhs;
        if v > max_violation {
            max_violation = v;
            worst = *z;
        }
    }
    Ok(BoundaryCheck {
        constant,
        eta,
        hb_norm: norm,
        max_violation,
        worst,
    })
}

/// `q a_1 + q_1 p_1 + ... + q_L p_L = 1` with `deg q_j < N`, given `sum_j |p_j(xi)|^2 >= delta^2 / 2` at each zero
/// `xi` of `a_1` and `deg p_j < N`.
///
/// The `p_j` are normalized to `sum_j ||p_j||^2 = 1` before the
/// several-polynomial solve, so `q` is unchanged and the `q_j` scale
/// inversely when all `p_j` are multiplied by a common factor.
pub fn corona_polynomial_data(
    a1: &Poly,
    boundary_roots: &RootSet<Complex64>,
    p_list: &[Poly],
    delta: f64,
    seed: u64,
) -> Result<MultiBezoutSolution<Complex64>> {
    let n = a1.degree_or_zero();
    if n == 0 {
        return Err(Error::HypothesisViolated("a_1 has no boundary zeros".into()));
    }
    if p_list.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidInput(format!("delta must be positive, got {delta}")));
    }
    for (j, p) in p_list.iter().enumerate() {
        if p.degree_or_zero() >= n && !p.is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "p_{j} has degree {} >= N = {n}",
                p.degree_or_zero()
            )));
        }
    }
    for xi in boundary_roots.values() {
        let s: f64 = p_list.iter().map(|p| p.eval(xi).norm_sqr()).sum();
        if s < delta * delta / 2.0 * (1.0 - 1e-9) {
            return Err(Error::HypothesisViolated(format!(
                "sum_j |p_j(xi)|^2 = {s} < delta^2 / 2 at xi = {xi}"
            )));
        }
    }
    let scale = p_list.iter().map(|p| p.norm_coeff().powi(2)).sum::<f64>().sqrt();
    let inv = Complex64::new(1.0 / scale, 0.0);
    let scaled: Vec<Poly> = p_list.iter().map(|p| p.scale(&inv)).collect();
    let mut sol = solve_multi_bezout_with_roots(
        a1,
        boundary_roots,
        &scaled,
        delta / (2f64.sqrt() * scale),
        Method::Sylvester,
        seed,
    )?;
    sol.s_list = sol.s_list.iter().map(|s| s.scale(&inv)).collect();
    sol.s = sol.s.scale(&inv);
    sol.combined_b = sol.combined_b.scale(&Complex64::new(scale, 0.0));
    sol.measured_delta *= scale;
    let mut terms = vec![&sol.r * a1];
    terms.extend(sol.s_list.iter().zip(p_list).map(|(s, p)| s * p));
    sol.residual = crate::poly::identity_residual(&terms);
    Ok(sol)
}
