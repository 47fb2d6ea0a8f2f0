//! Dense univariate polynomials with coefficients in ascending degree.

mod norms;
mod roots;

pub use roots::{Root, RootSet};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::tol;
use num_traits::{Float, One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial `sum_j coeffs[j] * z^j`.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero (exactly in exact arithmetic, above `TRIM_EPS * norm_coeff`
/// otherwise).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `z - u`
    pub fn linear(u: T) -> Self {
        Self::new(vec![-u, T::one()])
    }

    /// Real coefficients, ascending.
    pub fn from_reals(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_f64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zero and nonzero constants alike.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    /// `k`-th formal derivative.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|j| {
                // j (j-1) ... (j-k+1)
                let falling = (j - k + 1..=j).fold(T::one(), |acc, f| acc * T::from_usize(f));
                self.coeffs[j].clone() * falling
            })
            .collect();
        Self::new(coeffs)
    }

    /// Taylor coefficients `p^{(k)}(z)/k!` for `k = 0..=deg`, via repeated
    /// synthetic division.
    pub fn taylor_at(&self, z: &T) -> Vec<T> {
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            // divide work[k..] by (x - z); remainder lands at index k
            for j in (k..n - 1).rev() {
                let carry = work[j + 1].clone() * z.clone();
                work[j] = work[j].clone() + carry;
            }
            out.push(work[k].clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Coefficientwise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(Scalar::conj).collect())
    }

    /// `z^d * conj(p(1/conj(z)))` for `d >= deg p`.
    pub fn conj_reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[d - j] = c.conj();
        }
        Self::new(coeffs)
    }

    /// `leading * prod (z - root)^multiplicity`
    pub fn from_roots(roots: &RootSet<T>, leading: T) -> Self {
        let mut coeffs = vec![leading];
        for root in roots.iter() {
            for _ in 0..root.multiplicity {
                coeffs = mul_linear(&coeffs, &root.value);
            }
        }
        Self::new(coeffs)
    }

    /// Synthetic division of `p` by `z - u`, where `u` must be a root.
    pub fn divide_by_linear(&self, u: &T) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let value = self.eval(u);
        if !self.root_residual_ok(&value, u) {
            return Err(Error::NotARoot {
                residual: num_traits::ToPrimitive::to_f64(&value.modulus()).unwrap_or(f64::NAN),
            });
        }
        if deg == 0 {
            return Ok(Self::zero());
        }
        let mut q = vec![T::zero(); deg];
        let mut carry = T::zero();
        for j in (0..deg).rev() {
            carry = carry * u.clone() + self.coeffs[j + 1].clone();
            q[j] = carry.clone();
        }
        Ok(Self::new(q))
    }

    fn root_residual_ok(&self, value: &T, u: &T) -> bool {
        if T::EXACT {
            return value.is_zero();
        }
        let r = u.modulus();
        let grow = if r > T::Real::one() {
            r.powi(self.degree_or_zero() as i32)
        } else {
            T::Real::one()
        };
        value.modulus() <= T::Real::tol(tol::DIV_EPS) * self.norm_coeff() * grow
    }

    /// Euclidean division: `self = g * quotient + remainder`, `deg remainder < deg g`.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let Some(df) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if df < dg {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = g.coeffs[dg].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let c = rem[k + dg].clone() / lead.clone();
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * gj.clone();
            }
            rem[k + dg] = T::zero();
            quot[k] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `max_j |p_j|`
    pub fn norm_coeff(&self) -> T::Real {
        self.coeffs
            .iter()
            .map(Scalar::modulus)
            .fold(T::Real::zero(), |a, b| a.max(b))
    }

    /// `sqrt(sum_j |p_j|^2)`, the Hardy space norm.
    pub fn norm_h2(&self) -> T::Real {
        self.coeffs
            .iter()
            .map(|c| {
                let m = c.modulus();
                m * m
            })
            .fold(T::Real::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Coefficients converted to another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact image of every coefficient, if available.
    pub fn to_exact(&self) -> Option<Polynomial<crate::GaussianRational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(Scalar::to_exact)
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::new(coeffs))
    }

    fn trim(&mut self) {
        let scale = self.norm_coeff();
        while let Some(last) = self.coeffs.last() {
            if last.is_negligible(scale) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }
}

/// Coefficient-max norm of `sum_i factors_i - 1`, computed without trimming.
pub fn identity_residual<T: Scalar>(terms: &[Polynomial<T>]) -> T::Real {
    let len = terms.iter().map(|p| p.coeffs.len()).max().unwrap_or(0).max(1);
    let mut acc = vec![T::zero(); len];
    for p in terms {
        for (a, c) in acc.iter_mut().zip(p.coeffs.iter()) {
            *a = a.clone() + c.clone();
        }
    }
    acc[0] = acc[0].clone() - T::one();
    acc.iter()
        .map(Scalar::modulus)
        .fold(T::Real::zero(), |a, b| a.max(b))
}

fn mul_linear<T: Scalar>(coeffs: &[T], root: &T) -> Vec<T> {
    let mut out = vec![T::zero(); coeffs.len() + 1];
    for (j, c) in coeffs.iter().enumerate() {
        out[j + 1] = out[j + 1].clone() + c.clone();
        out[j] = out[j].clone() - c.clone() * root.clone();
    }
    out
}

fn convolve<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        Polynomial::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}
