//! Scalar types the polynomial machinery is generic over.
//!
//! Two families are supported:
//!
//! * approximate complex numbers `Complex<F>` for `F = f32` or `f64`, where
//!   every tolerance is expressed through [`Real::tol`];
//! * exact Gaussian rationals ([`GaussianRational`]), where nothing is rounded
//!   and "negligible" means "exactly zero".

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Complex number with arbitrary-precision rational real and imaginary parts.
pub type GaussianRational = Complex<BigRational>;

/// Real floating point type backing an approximate complex scalar.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` tolerance to this precision.
    ///
    /// Tolerances are stated for `f64`. For a narrower type the tolerance keeps
    /// the same fraction of the available significant digits, so `1e-13` in
    /// `f64` (about 3 digits above unit roundoff) maps to roughly `1e-6` in `f32`.
    fn tol(t: f64) -> Self {
        let eps = Self::epsilon().to_f64().unwrap_or(f64::EPSILON);
        let scaled = t.powf(eps.ln() / f64::EPSILON.ln());
        Self::lit(scaled)
    }

    /// Literal conversion from `f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Field element usable as a polynomial coefficient.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Real type used for norms and moduli.
    type Real: Real;

    /// `true` when arithmetic is exact.
    const EXACT: bool;

    fn modulus(&self) -> Self::Real;

    fn conj(&self) -> Self;

    fn from_f64(x: f64) -> Self;

    fn from_complex(z: Complex<Self::Real>) -> Self;

    fn to_complex(&self) -> Complex<Self::Real>;

    /// Whether `self` is zero up to the trimming tolerance relative to `scale`.
    fn is_negligible(&self, scale: Self::Real) -> bool;

    /// Exact image of this value, if it has one (finite floats always do).
    fn to_exact(&self) -> Option<GaussianRational>;

    /// Nearest representable value of an exact scalar.
    fn from_exact(z: &GaussianRational) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_f64(n as f64)
    }
}

impl<F: Real> Scalar for Complex<F> {
    type Real = F;
    const EXACT: bool = false;

    fn modulus(&self) -> F {
        self.norm()
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_f64(x: f64) -> Self {
        Complex::new(F::lit(x), F::zero())
    }

    fn from_complex(z: Complex<F>) -> Self {
        z
    }

    fn to_complex(&self) -> Complex<F> {
        *self
    }

    fn is_negligible(&self, scale: F) -> bool {
        self.norm() <= F::tol(crate::tol::TRIM_EPS) * scale
    }

    fn to_exact(&self) -> Option<GaussianRational> {
        let re = BigRational::from_float(self.re.as_f64())?;
        let im = BigRational::from_float(self.im.as_f64())?;
        Some(Complex::new(re, im))
    }

    fn from_exact(z: &GaussianRational) -> Self {
        Complex::new(F::lit(rational_to_f64(&z.re)), F::lit(rational_to_f64(&z.im)))
    }
}

impl Scalar for GaussianRational {
    type Real = f64;
    const EXACT: bool = true;

    fn modulus(&self) -> f64 {
        rational_to_f64(&self.re).hypot(rational_to_f64(&self.im))
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_f64(x: f64) -> Self {
        Complex::new(
            BigRational::from_float(x).expect("finite value"),
            BigRational::zero(),
        )
    }

    fn from_complex(z: Complex<f64>) -> Self {
        Complex::new(
            BigRational::from_float(z.re).expect("finite value"),
            BigRational::from_float(z.im).expect("finite value"),
        )
    }

    fn to_complex(&self) -> Complex<f64> {
        Complex::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn to_exact(&self) -> Option<GaussianRational> {
        Some(self.clone())
    }

    fn from_exact(z: &GaussianRational) -> Self {
        z.clone()
    }

    fn from_usize(n: usize) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }
}

/// Correctly rounded enough for reporting; exact results are compared exactly.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // numerator/denominator too large for direct conversion: shift both down
    let (n, d) = (q.numer(), q.denom());
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let nf = (n.abs() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let df = (d >> shift_d as usize).to_f64().unwrap_or(1.0);
    let mag = nf / df * 2f64.powi((shift_n - shift_d) as i32);
    if n.is_negative() {
        -mag
    } else {
        mag
    }
}

/// Gaussian rational from a real rational.
pub fn gaussian(re: BigRational, im: BigRational) -> GaussianRational {
    Complex::new(re, im)
}

/// Gaussian rational `num/den`, real.
pub fn ratio(num: i64, den: i64) -> GaussianRational {
    Complex::new(
        BigRational::new(BigInt::from(num), BigInt::from(den)),
        BigRational::zero(),
    )
}

/// Binomial coefficient as a scalar (exact for the small arguments used here).
pub(crate) fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_usize(n - i) / T::from_usize(i + 1);
    }
    acc
}
