//! Bound states from the zeros of 𝒜_R on the positive imaginary k axis.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{cx, Real};
use crate::scattering::{MomentumAxis, PhysicalParams};
use crate::specfun::{gamma, rgamma};

/// Relative half-width of the bracket around κₙ is `BRACKET_WIDTH / n`.
pub const BRACKET_WIDTH: f64 = 0.3;
const BISECTION_STEPS: usize = 30;
const SECANT_STEPS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState<T> {
    pub n: u32,
    /// k = iκ.
    pub kappa: T,
    /// E = −κ².
    pub energy: T,
    /// |𝒜_R| at the located zero.
    pub residual: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub states: Vec<BoundState<T>>,
    /// Why the list is empty, when it is.
    pub explanation: Option<String>,
}

/// 𝒜_R on k = iκ: (2πk/α) Γ(iα/2k)^{−2} e^{πα/2k} cosech(πα/2k).
///
/// Written as (2ik/α) e^{−iπw} Γ(1−w) / Γ(w) with w = iα/2k, so the double zero
/// of 1/Γ² and the pole of cosech at w = −n cancel analytically and the zeros
/// are exact.
pub fn a_r_bound<T: Real>(params: &PhysicalParams<T>) -> Result<Complex<T>> {
    if params.axis() != MomentumAxis::Bound {
        return Err(Error::Domain("a_r_bound needs k on the positive imaginary axis".into()));
    }
    params.nonzero_alpha()?;
    let w = params.w();
    let i = cx::i::<T>();
    let g = gamma(Complex::new(T::one(), T::zero()) - w)?;
    let phase = (-i * T::PI() * w).exp();
    Ok(i * params.k() * T::lit(2.0) / params.alpha() * phase * g * rgamma(w))
}

/// Real factor of [`a_r_bound`] once the unimodular phase e^{−iπw} is removed.
fn real_restriction<T: Real>(alpha: T, kappa: T) -> Result<T> {
    let w = alpha / (kappa * T::lit(2.0));
    let g = gamma(cx::re(T::one() - w))?;
    Ok(-(kappa * T::lit(2.0) / alpha) * (g * rgamma(cx::re(w))).re)
}

/// κₙ = |α|/2n.
pub fn analytic_kappa<T: Real>(alpha: T, n: u32) -> T {
    alpha.abs() / (T::lit(2.0) * T::from_u32(n).unwrap())
}

fn bracket<T: Real>(alpha: T, n: u32) -> (T, T) {
    let kn = analytic_kappa(alpha, n);
    let d = T::lit(BRACKET_WIDTH) / T::from_u32(n).unwrap();
    (kn * (T::one() - d), kn * (T::one() + d))
}

/// Bisection down to a narrow bracket, then secant steps kept inside it.
fn locate<T: Real>(alpha: T, n: u32) -> Result<T> {
    let (mut lo, mut hi) = bracket(alpha, n);
    let f = |k: T| real_restriction(alpha, k);
    let (mut flo, fhi) = (f(lo)?, f(hi)?);
    if flo * fhi > T::zero() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::ZeroNotBracketed { n, lo: lo.to_f64_lossy(), hi: hi.to_f64_lossy() });
    }
    let two = T::lit(2.0);
    for _ in 0..BISECTION_STEPS {
        let mid = (lo + hi) / two;
        let fm = f(mid)?;
        if fm.is_zero() {
            return Ok(mid);
        }
        if (fm > T::zero()) == (flo > T::zero()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let tol = T::epsilon() * T::lit(4.0);
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (flo, f(hi)?);
    for _ in 0..SECANT_STEPS {
        if fb == fa {
            break;
        }
        let mut c = b - fb * (b - a) / (fb - fa);
        if !(c > lo && c < hi) {
            c = (lo + hi) / two;
        }
        let fc = f(c)?;
        if (fc > T::zero()) == (flo > T::zero()) {
            lo = c;
            flo = fc;
        } else {
            hi = c;
        }
        let step = (c - b).abs();
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        if fc.is_zero() || step <= tol * c.abs() {
            break;
        }
    }
    Ok(b)
}

/// States n = 1..=n_max, each located numerically near its analytic κₙ.
pub fn bound_spectrum<T: Real>(alpha: T, n_max: u32) -> Result<Spectrum<T>> {
    if n_max == 0 {
        return Err(Error::EmptyRange("n_max must be at least 1".into()));
    }
    if !alpha.is_finite() {
        return Err(Error::NonFinite { context: "bound_spectrum: alpha".into() });
    }
    if alpha >= T::zero() {
        return Ok(Spectrum {
            states: Vec::new(),
            explanation: Some(format!("no bound states for alpha = {} >= 0: 1/Gamma has no zeros at positive argument", alpha)),
        });
    }
    let states = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let kappa = locate(alpha, n)?;
            let residual = a_r_bound(&PhysicalParams::bound(alpha, kappa)?)?.norm();
            Ok(BoundState { n, kappa, energy: -kappa * kappa, residual })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { states, explanation: None })
}

/// Sign changes of the real restriction on a log grid over [κ_lo, κ_hi] that
/// fall outside every bracket around κ₁..κ_{n_max}. Diagnostic only.
pub fn wide_scan<T: Real>(alpha: T, n_max: u32, kappa_lo: T, kappa_hi: T, points: usize) -> Result<Vec<T>> {
    if !(kappa_lo > T::zero() && kappa_hi > kappa_lo) || points < 2 {
        return Err(Error::EmptyRange("wide_scan needs 0 < kappa_lo < kappa_hi and points >= 2".into()));
    }
    let brackets: Vec<(T, T)> = (1..=n_max).map(|n| bracket(alpha, n)).collect();
    let ratio = (kappa_hi / kappa_lo).ln() / T::from_usize(points - 1).unwrap();
    let grid: Vec<T> = (0..points).map(|j| kappa_lo * (ratio * T::from_usize(j).unwrap()).exp()).collect();
    let mut out = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for &k in &grid {
        // exact poles for α > 0 are skipped rather than reported
        let Ok(v) = real_restriction(alpha, k) else {
            prev = None;
            continue;
        };
        if let Some((kp, vp)) = prev {
            if (v > T::zero()) != (vp > T::zero()) {
                let mid = (kp + k) / T::lit(2.0);
                if !brackets.iter().any(|&(lo, hi)| mid >= lo && mid <= hi) {
                    out.push(mid);
                }
            }
        }
        prev = Some((k, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hydrogen_like_energies() {
        let s = bound_spectrum(-1.0f64, 3).unwrap();
        let want = [-0.25, -0.0625, -1.0 / 36.0];
        for (st, e) in s.states.iter().zip(want) {
            assert!((st.energy - e).abs() < 1e-14 * e.abs(), "{}: {}", st.n, st.energy);
            assert!(st.residual < 1e-12);
        }
    }

    #[test]
    fn ground_state_of_alpha_minus_two() {
        let s = bound_spectrum(-2.0f64, 1).unwrap();
        assert!((s.states[0].kappa - 1.0).abs() < 1e-10);
    }

    #[test]
    fn repulsive_has_none() {
        let s = bound_spectrum(1.0f64, 5).unwrap();
        assert!(s.states.is_empty());
        assert!(s.explanation.is_some());
        assert!(bound_spectrum(-1.0f64, 0).is_err());
    }

    #[test]
    fn frozen_value_off_zero() {
        let a = a_r_bound(&PhysicalParams::bound(-1.0, 0.3).unwrap()).unwrap();
        assert!(cx::rel(a, Complex::new(0.18721040302077386, -0.3242579297374262)) < 1e-13, "{a}");
    }

    #[test]
    fn agrees_with_the_unreduced_form() {
        let p = PhysicalParams::bound(-1.3, 0.41).unwrap();
        let k = p.k();
        let x = p.x_half();
        let rg = rgamma(p.w());
        let direct = k * (2.0 * core::f64::consts::PI) / p.alpha() * rg * rg * x.exp() / x.sinh();
        assert!(cx::rel(a_r_bound(&p).unwrap(), direct) < 1e-12);
    }

    #[test]
    fn exact_zero_at_kappa_n() {
        let a = a_r_bound(&PhysicalParams::bound(-1.0, 0.5).unwrap()).unwrap();
        assert_eq!(a.norm(), 0.0);
    }

    #[test]
    fn axis_and_pole_errors() {
        assert!(a_r_bound(&PhysicalParams::scattering(-1.0, 0.5).unwrap()).is_err());
        // α > 0 at κ = α/2 puts Γ(1 − w) on a pole
        assert!(a_r_bound(&PhysicalParams::bound(1.0, 0.5).unwrap()).is_err());
    }

    #[test]
    fn sign_change_across_each_zero() {
        for n in 1..=10 {
            let (lo, hi) = bracket(-3.0f64, n);
            let (a, b) = (real_restriction(-3.0, lo).unwrap(), real_restriction(-3.0, hi).unwrap());
            assert!(a * b < 0.0, "n = {n}");
        }
    }

    #[test]
    fn scan_finds_nothing_unexpected() {
        let extra = wide_scan(-1.0f64, 10, 0.05, 2.0, 4000).unwrap();
        assert!(extra.is_empty(), "{extra:?}");
        // below the scanned levels the next ones show up as unexpected
        let extra = wide_scan(-1.0f64, 10, 0.04, 2.0, 4000).unwrap();
        assert_eq!(extra.len(), 2);
        assert!((extra[0] - 1.0 / 24.0).abs() < 1e-3 && (extra[1] - 1.0 / 22.0).abs() < 1e-3);
    }

    #[test]
    fn located_to_high_relative_accuracy() {
        for &alpha in &[-0.5, -1.0, -3.0, -10.0] {
            for st in bound_spectrum(alpha, 10).unwrap().states {
                let e = -alpha * alpha / (4.0 * f64::from(st.n * st.n));
                assert!(((st.energy - e) / e).abs() < 1e-12, "{alpha} {}", st.n);
            }
        }
    }

    proptest! {
        #[test]
        fn energies_scale_quadratically(alpha in -10.0f64..-0.1, lambda in 0.1f64..10.0) {
            let a = bound_spectrum(alpha, 4).unwrap();
            let b = bound_spectrum(lambda * alpha, 4).unwrap();
            for (x, y) in a.states.iter().zip(&b.states) {
                prop_assert!((y.energy - lambda * lambda * x.energy).abs() <= 1e-12 * y.energy.abs());
            }
        }
    }
}
