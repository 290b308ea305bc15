//! Γ, 1/Γ and ψ for complex arguments.
//!
//! Stirling's series with an upward shift whose length follows the
//! working precision, plus reflection for Re z < 1/2.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::bernoulli;
use crate::error::{Error, Result};
use crate::scalar::{cx, narrow_c, widen_c, Real};

/// |w| from which Stirling's series alone reaches working precision.
pub(crate) fn stirling_threshold<T: Real>() -> f64 {
    let digits = -T::epsilon().to_f64_lossy().log10();
    (0.82 * digits).max(8.0)
}

fn nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    z.im.is_zero() && z.re <= T::zero() && z.re.fract().is_zero()
}

/// sin(πz) with the argument reduced by the nearest integer first.
pub(crate) fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let n = z.re.round();
    let w = Complex::new(z.re - n, z.im) * T::PI();
    let s = w.sin();
    if (n.to_i64().unwrap_or(0)) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cot(πz), stable for large |Im z|.
pub(crate) fn cot_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let n = z.re.round();
    let w = Complex::new(z.re - n, z.im) * T::PI();
    let i = cx::i::<T>();
    let one = Complex::<T>::one();
    if w.im >= T::zero() {
        let q = (i * w * T::lit(2.0)).exp();
        i * (q + one) / (q - one)
    } else {
        let q = (-i * w * T::lit(2.0)).exp();
        i * (one + q) / (one - q)
    }
}

/// ln Γ(w) by Stirling's series; valid for Re w > 0 and |w| large.
fn stirling<T: Real>(w: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let ln_w = cx::ln(w);
    let mut s = (w - half) * ln_w - w + (T::PI() * T::lit(2.0)).ln() * half;
    let w2 = w * w;
    let mut wp = w;
    let tol = T::epsilon() * s.norm();
    for k in 1..=bernoulli::MAX_INDEX {
        let b: T = bernoulli::b2n_as(k).unwrap();
        let d = T::from_usize(2 * k * (2 * k - 1)).unwrap();
        let term = wp.inv() * (b / d);
        s = s + term;
        if term.norm() < tol {
            break;
        }
        wp = wp * w2;
    }
    s
}

/// Γ(z) and the shift product for Re z ≥ 1/2: returns (ln Γ(z+n), ∏(z+j)).
fn shifted<T: Real>(z: Complex<T>, threshold: f64) -> (Complex<T>, Complex<T>) {
    let th = T::lit(threshold);
    let mut w = z;
    let mut prod = Complex::<T>::one();
    while w.re < th || w.norm() < th {
        prod = prod * w;
        w = w + T::one();
        if w.re >= th {
            break;
        }
    }
    (stirling(w), prod)
}

pub(crate) fn gamma_with<T: Real>(z: Complex<T>, threshold: f64) -> Result<Complex<T>> {
    if !cx::is_finite(z) {
        return Err(Error::NonFinite { context: "gamma argument".into() });
    }
    if nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", at: format!("{}", z.re) });
    }
    let g = if z.re < T::lit(0.5) {
        let one = Complex::<T>::one();
        let (lg, prod) = shifted(one - z, threshold);
        let g1 = lg.exp() / prod;
        Complex::new(T::PI(), T::zero()) / (sin_pi(z) * g1)
    } else {
        let (lg, prod) = shifted(z, threshold);
        lg.exp() / prod
    };
    if cx::is_finite(g) {
        Ok(g)
    } else {
        Err(Error::Overflow { function: "gamma" })
    }
}

pub(crate) fn rgamma_with<T: Real>(z: Complex<T>, threshold: f64) -> Complex<T> {
    if nonpositive_integer(z) {
        return Complex::zero();
    }
    if z.re < T::lit(0.5) {
        let (lg, prod) = shifted(Complex::<T>::one() - z, threshold);
        sin_pi(z) * (lg.exp() / prod) / T::PI()
    } else {
        let (lg, prod) = shifted(z, threshold);
        prod * (-lg).exp()
    }
}

/// Γ(z), evaluated in the wide scalar so that exp(ln Γ) keeps full precision.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    // small positive integers are exact factorials
    if z.im.is_zero() && z.re >= T::one() && z.re <= T::lit(25.0) && z.re.fract().is_zero() {
        let n = z.re.to_u32().unwrap_or(1);
        return Ok(cx::re((2..n).fold(T::one(), |acc, j| acc * T::from_u32(j).unwrap())));
    }
    let g = gamma_with(widen_c(z), stirling_threshold::<T::Wide>())?;
    let g = narrow_c::<T>(g);
    if cx::is_finite(g) {
        Ok(g)
    } else {
        Err(Error::Overflow { function: "gamma" })
    }
}

/// 1/Γ(z), entire; exactly 0 at z = 0, −1, −2, …
pub fn rgamma<T: Real>(z: Complex<T>) -> Complex<T> {
    narrow_c::<T>(rgamma_with(widen_c(z), stirling_threshold::<T::Wide>()))
}

pub(crate) fn digamma_with<T: Real>(z: Complex<T>, threshold: f64) -> Result<Complex<T>> {
    if nonpositive_integer(z) {
        return Err(Error::Pole { function: "digamma", at: format!("{}", z.re) });
    }
    let one = Complex::<T>::one();
    if z.re < T::lit(0.5) {
        // ψ(z) = ψ(1−z) − π cot(πz)
        let r = digamma_with(one - z, threshold)?;
        return Ok(r - cot_pi(z) * T::PI());
    }
    let th = T::lit(threshold);
    let mut w = z;
    let mut acc = Complex::<T>::zero();
    while w.re < th || w.norm() < th {
        acc = acc + w.inv();
        w = w + T::one();
    }
    let mut s = cx::ln(w) - w.inv() * T::lit(0.5);
    let w2 = w * w;
    let mut wp = w2;
    let tol = T::epsilon() * s.norm();
    for k in 1..=bernoulli::MAX_INDEX {
        let b: T = bernoulli::b2n_as(k).unwrap();
        let term = wp.inv() * (b / T::from_usize(2 * k).unwrap());
        s = s - term;
        if term.norm() < tol {
            break;
        }
        wp = wp * w2;
    }
    Ok(s - acc)
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    digamma_with(z, stirling_threshold::<T>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigammaMode {
    Series,
    Asymptotic,
}

/// A truncated sum together with a bound on the omitted part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated<T> {
    pub value: T,
    pub tail_bound: T,
    pub terms: usize,
}

/// Re ψ(iy) from the series −γ + y²Σ 1/(n(n²+y²)) or the large-y expansion.
pub fn re_digamma_imag<T: Real>(y: T, mode: DigammaMode, terms: usize) -> Result<Truncated<T>> {
    if terms == 0 {
        return Err(Error::Domain("re_digamma_imag needs at least one term".into()));
    }
    match mode {
        DigammaMode::Series => {
            let y2 = y * y;
            // summed smallest-first to limit rounding growth
            let mut s = T::zero();
            for n in (1..=terms).rev() {
                let nn = T::from_usize(n).unwrap();
                s = s + (nn * (nn * nn + y2)).recip();
            }
            let nn = T::from_usize(terms).unwrap();
            Ok(Truncated {
                value: -T::euler_gamma() + y2 * s,
                tail_bound: y2 / (T::lit(2.0) * nn * nn),
                terms,
            })
        }
        DigammaMode::Asymptotic => {
            if y.abs() < T::one() {
                return Err(Error::ParameterRestriction {
                    function: "re_digamma_imag",
                    reason: "asymptotic form diverges for |y| < 1".into(),
                });
            }
            if terms > bernoulli::MAX_INDEX - 1 {
                return Err(Error::ParameterRestriction {
                    function: "re_digamma_imag",
                    reason: format!("at most {} asymptotic terms", bernoulli::MAX_INDEX - 1),
                });
            }
            let y2 = y * y;
            let mut s = y.abs().ln();
            let mut yp = y2;
            for n in 1..=terms {
                let b: T = bernoulli::b2n_as(n).unwrap();
                let sign = if n % 2 == 1 { T::one() } else { -T::one() };
                s = s + sign * b / (T::from_usize(2 * n).unwrap() * yp);
                yp = yp * y2;
            }
            let n = terms + 1;
            let b: T = bernoulli::b2n_as(n).unwrap();
            let tail = (b / (T::from_usize(2 * n).unwrap() * yp)).abs();
            Ok(Truncated { value: s, tail_bound: tail, terms })
        }
    }
}
