//! The real extension family and the δ-shaped correction it induces.
//!
//! With v₋^{−V} = 0 and real v₊^{−V}, v₊^{+W}, the addition to the potential on
//! the positive side reduces to c·θ(x)δ(x) with
//! c = −2α[2γ_E + ln(2√(k²) x) + Re ψ(iα/2k)].

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{cx, Real};
use crate::scattering::{ExtensionParams, MomentumAxis, PhysicalParams};
use crate::specfun::{digamma, re_digamma_imag, DigammaMode};

/// Default number of terms for the series form.
pub const DEFAULT_SERIES_TERMS: usize = 10_000;
/// Default number of Bernoulli terms for the asymptotic form.
pub const DEFAULT_ASYMPTOTIC_TERMS: usize = 10;
/// Smallest α/2k accepted by the asymptotic form.
pub const ASYMPTOTIC_MIN_RATIO: f64 = 5.0;

/// v₋^{−V} = 0 and the v₊ pair that makes the positive-side addition real.
///
/// With θ = arg 2k and X = πα/2k, written through expm1(2X) so that neither
/// large nor small |X| cancels:
/// v₊^{−V} = (2θ + 2π/expm1(2X)) / (−2θ − π coth X),
/// v₊^{+W} = 2(π − θ expm1(2X)) / (expm1(2X)(π + 2θ)).
///
/// On the bound-state axis X is imaginary and the outputs are complex.
pub fn real_extension_params<T: Real>(params: &PhysicalParams<T>) -> Result<ExtensionParams<T>> {
    params.nonzero_alpha()?;
    let theta = params.arg2k();
    let pi = T::PI();
    let two = T::lit(2.0);
    let x = params.x_half();
    let em = cx::expm1(x * two);
    if em.is_zero() || !cx::is_finite(em) {
        return Err(Error::NonFinite { context: "real_extension_params: e^{πα/k} − 1".into() });
    }
    let inv = em.inv() * two;
    let coth = Complex::<T>::one() + inv;
    let a = (inv * pi + theta * two) / (-(coth * pi) - theta * two);
    let b = (cx::re(pi) - em * theta) * two / (em * (pi + theta * two));
    if !cx::is_finite(a) || !cx::is_finite(b) {
        return Err(Error::NonFinite { context: "real_extension_params".into() });
    }
    Ok(ExtensionParams { v_plus_minus_v: a, v_plus_plus_w: b, v_minus_minus_v: Complex::zero(), v_minus_plus_w: Complex::zero() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaForm {
    /// Through Re ψ(iα/2k).
    Closed,
    /// Through the convergent sum over n.
    Series,
    /// Through the Bernoulli expansion for α ≫ 2k.
    Asymptotic,
}

/// Coefficient c of θ(x)δ(x), with the ln x kept at the abscissa `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaCorrection<T> {
    /// Real on the scattering axis.
    pub coefficient: Complex<T>,
    pub x: T,
    pub form: DeltaForm,
    pub terms: usize,
    /// Bound on |truncation error| of `coefficient`; zero for the closed form.
    pub tail_bound: T,
}

/// √(k²): |k| on the scattering axis, the principal root iκ on the bound axis.
fn sqrt_k2<T: Real>(params: &PhysicalParams<T>) -> Complex<T> {
    match params.axis() {
        MomentumAxis::Scattering => cx::re(params.k().norm()),
        MomentumAxis::Bound => params.k(),
    }
}

pub fn delta_correction<T: Real>(params: &PhysicalParams<T>, x: T, form: DeltaForm, terms: usize) -> Result<DeltaCorrection<T>> {
    params.nonzero_alpha()?;
    if !(x > T::zero()) {
        return Err(Error::Domain("delta_correction needs x > 0".into()));
    }
    let alpha = params.alpha();
    let two = T::lit(2.0);
    let g = T::euler_gamma();
    let pre = -alpha * two;
    let log = cx::ln(sqrt_k2(params) * x * two);
    let (bracket, tail, terms) = match form {
        DeltaForm::Closed => {
            let psi = digamma(params.w())?.re;
            (log + g * two + psi, T::zero(), 0)
        }
        DeltaForm::Series | DeltaForm::Asymptotic => {
            let k = params.real_k()?;
            let y = alpha / (k * two);
            if form == DeltaForm::Series {
                let s = re_digamma_imag(y, DigammaMode::Series, terms)?;
                (log + g * two + s.value, s.tail_bound, terms)
            } else {
                if y < T::lit(ASYMPTOTIC_MIN_RATIO) {
                    return Err(Error::Domain(format!(
                        "asymptotic form needs alpha/2k >= {ASYMPTOTIC_MIN_RATIO}, got {}",
                        y.to_f64_lossy()
                    )));
                }
                // ln(αx) = ln(2kx) + ln y, the leading term of the expansion
                let s = re_digamma_imag(y, DigammaMode::Asymptotic, terms)?;
                (log + g * two + s.value, s.tail_bound, terms)
            }
        }
    };
    Ok(DeltaCorrection { coefficient: bracket * pre, x, form, terms, tail_bound: tail * pre.abs() })
}
