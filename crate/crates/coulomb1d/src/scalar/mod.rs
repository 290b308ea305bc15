//! Scalar abstraction shared by every kernel.

mod dd;

use core::fmt::{Debug, Display};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

pub use dd::{DoubleDouble, ParseDoubleDoubleError};

/// Real field the library is generic over.
///
/// `Wide` is a type with at least twice the significand, used when a
/// computation in `Self` loses too many digits to cancellation.
pub trait Real:
    Float + FloatConst + FromPrimitive + Default + Debug + Display + Send + Sync + 'static
{
    type Wide: Real;

    fn widen(self) -> Self::Wide;
    fn narrow(w: Self::Wide) -> Self;
    fn euler_gamma() -> Self;

    /// Lossless for values exactly representable in `f64`.
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).unwrap()
    }

    fn from_ratio(r: Ratio<i64>) -> Self {
        Self::from_i64(*r.numer()).unwrap() / Self::from_i64(*r.denom()).unwrap()
    }

    fn to_f64_lossy(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {
    type Wide = f64;
    fn widen(self) -> f64 {
        f64::from(self)
    }
    fn narrow(w: f64) -> f32 {
        w as f32
    }
    fn euler_gamma() -> f32 {
        0.577_215_7
    }
}

impl Real for f64 {
    type Wide = DoubleDouble;
    fn widen(self) -> DoubleDouble {
        DoubleDouble::from_f64(self)
    }
    fn narrow(w: DoubleDouble) -> f64 {
        w.to_f64()
    }
    fn euler_gamma() -> f64 {
        0.577_215_664_901_532_9
    }
}

impl Real for DoubleDouble {
    type Wide = DoubleDouble;
    fn widen(self) -> DoubleDouble {
        self
    }
    fn narrow(w: DoubleDouble) -> DoubleDouble {
        w
    }
    fn euler_gamma() -> DoubleDouble {
        dd::DD_EULER
    }
}

pub fn widen_c<T: Real>(z: Complex<T>) -> Complex<T::Wide> {
    Complex::new(z.re.widen(), z.im.widen())
}

pub fn narrow_c<T: Real>(z: Complex<T::Wide>) -> Complex<T> {
    Complex::new(T::narrow(z.re), T::narrow(z.im))
}

pub fn c64_to<T: Real>(z: Complex<f64>) -> Complex<T> {
    Complex::new(T::lit(z.re), T::lit(z.im))
}

pub fn to_c64<T: Real>(z: Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())
}

/// Complex helpers with the principal branch arg ∈ (−π, π].
pub mod cx {
    use super::Real;
    use num_complex::Complex;
    use num_traits::{One, Zero};

    pub fn re<T: Real>(x: T) -> Complex<T> {
        Complex::new(x, T::zero())
    }

    pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
        Complex::new(T::lit(re), T::lit(im))
    }

    pub fn i<T: Real>() -> Complex<T> {
        Complex::new(T::zero(), T::one())
    }

    /// Replace signed zeros by +0 so that the negative real axis has arg = +π.
    pub fn canon<T: Real>(z: Complex<T>) -> Complex<T> {
        Complex::new(z.re + T::zero(), z.im + T::zero())
    }

    pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
        z.re.is_finite() && z.im.is_finite()
    }

    pub fn arg<T: Real>(z: Complex<T>) -> T {
        let z = canon(z);
        z.im.atan2(z.re)
    }

    pub fn ln<T: Real>(z: Complex<T>) -> Complex<T> {
        let z = canon(z);
        Complex::new(z.norm().ln(), z.im.atan2(z.re))
    }

    /// Principal power z^w; small integer exponents are done by multiplication.
    pub fn pow<T: Real>(z: Complex<T>, w: Complex<T>) -> Complex<T> {
        if w.im.is_zero() && w.re.fract().is_zero() && w.re.abs() <= T::lit(64.0) {
            return powi(z, w.re.to_i32().unwrap());
        }
        if z.is_zero() {
            return if w.re > T::zero() { Complex::zero() } else { Complex::new(T::infinity(), T::zero()) };
        }
        (w * ln(z)).exp()
    }

    pub fn powi<T: Real>(z: Complex<T>, n: i32) -> Complex<T> {
        let mut base = z;
        let mut e = n.unsigned_abs();
        let mut acc = Complex::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        if n < 0 {
            acc.inv()
        } else {
            acc
        }
    }

    /// e^z − 1 without cancellation near 0.
    pub fn expm1<T: Real>(z: Complex<T>) -> Complex<T> {
        if z.norm() < T::lit(0.5) {
            // e^{a+ib} − 1 = expm1(a)cos b − 2 sin²(b/2) + i e^a sin b
            let half = T::lit(0.5);
            let s = (z.im * half).sin();
            let re = z.re.exp_m1() * z.im.cos() - T::lit(2.0) * s * s;
            let im = z.re.exp() * z.im.sin();
            Complex::new(re, im)
        } else {
            z.exp() - Complex::one()
        }
    }

    pub fn to_string<T: Real>(z: Complex<T>) -> String {
        format!("({:e}{:+e}i)", z.re.to_f64_lossy(), z.im.to_f64_lossy())
    }

    /// Relative distance, scaled by max(|b|, floor).
    pub fn rel<T: Real>(a: Complex<T>, b: Complex<T>) -> f64 {
        let d = (a - b).norm().to_f64_lossy();
        let s = b.norm().to_f64_lossy();
        if s == 0.0 {
            d
        } else {
            d / s
        }
    }
}
