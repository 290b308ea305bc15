//! Kummer M(a, c, z) and the companion N(a, c, z) = z^{1−c} M(1+a−c, 2−c, z).

use num_complex::Complex;
use num_traits::{One, Zero};

use super::policy::EvalPolicy;
use crate::error::{Error, Result};
use crate::scalar::{cx, narrow_c, widen_c, Real};

/// A value with a relative error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation<T> {
    pub value: Complex<T>,
    pub rel_error: f64,
    pub terms: usize,
}

pub(crate) fn is_nonpositive_int<T: Real>(z: Complex<T>) -> bool {
    z.im.is_zero() && z.re <= T::zero() && z.re.fract().is_zero()
}

/// Power series of M in scalar S.
fn m_series<S: Real>(
    a: Complex<S>,
    c: Complex<S>,
    z: Complex<S>,
    tol: f64,
    max_terms: usize,
) -> Result<Evaluation<S>> {
    let mut term = Complex::<S>::one();
    let mut sum = term;
    let mut abs_sum = S::one();
    let mut small = 0;
    let tol_s = S::lit(tol);
    for s in 0..max_terms {
        let sf = S::from_usize(s).unwrap();
        term = term * (a + sf) / ((c + sf) * (sf + S::one())) * z;
        sum = sum + term;
        let t = term.norm();
        abs_sum = abs_sum + t;
        if t.is_zero() || t <= tol_s * sum.norm() {
            small += 1;
            if small >= 3 || t.is_zero() {
                let cond = (abs_sum / sum.norm()).to_f64_lossy();
                return Ok(Evaluation {
                    value: sum,
                    rel_error: 4.0 * S::epsilon().to_f64_lossy() * cond + tol,
                    terms: s + 1,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence { function: "kummer_m", terms: max_terms })
}

fn m_eval_in<S: Real>(
    a: Complex<S>,
    c: Complex<S>,
    z: Complex<S>,
    policy: &EvalPolicy,
) -> Result<Evaluation<S>> {
    let tol = policy.tol_for::<S>();
    if z.re < S::zero() {
        // Kummer transformation keeps the series free of alternating cancellation
        let e = m_series(c - a, c, -z, tol, policy.series_max_terms)?;
        Ok(Evaluation { value: e.value * z.exp(), ..e })
    } else {
        m_series(a, c, z, tol, policy.series_max_terms)
    }
}

/// M(a, c, z) with its error estimate; escalates to the wide scalar on cancellation.
pub fn kummer_m_eval<T: Real>(
    a: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    policy: &EvalPolicy,
) -> Result<Evaluation<T>> {
    if is_nonpositive_int(c) {
        return Err(Error::Pole { function: "kummer_m", at: format!("c = {}", c.re) });
    }
    if z.is_zero() {
        return Ok(Evaluation { value: Complex::one(), rel_error: 0.0, terms: 0 });
    }
    let target = 64.0 * policy.tol_for::<T>();
    let base = m_eval_in(a, c, z, policy);
    if let Ok(e) = &base {
        if e.rel_error <= target {
            return base;
        }
    }
    let wide_policy = policy.widened::<T::Wide>();
    let w = m_eval_in(widen_c(a), widen_c(c), widen_c(z), &wide_policy)?;
    let narrowed = Evaluation {
        value: narrow_c::<T>(w.value),
        rel_error: w.rel_error + T::epsilon().to_f64_lossy(),
        terms: w.terms,
    };
    if narrowed.rel_error > policy.min_accuracy {
        return Err(Error::UnreachableAccuracy {
            function: "kummer_m",
            achieved: narrowed.rel_error,
            required: policy.min_accuracy,
        });
    }
    Ok(narrowed)
}

pub fn kummer_m<T: Real>(
    a: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    policy: &EvalPolicy,
) -> Result<Complex<T>> {
    kummer_m_eval(a, c, z, policy).map(|e| e.value)
}

/// dM/dz = (a/c) M(a+1, c+1, z).
pub fn kummer_m_prime<T: Real>(
    a: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    policy: &EvalPolicy,
) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    Ok(a / c * kummer_m(a + one, c + one, z, policy)?)
}

/// N(a, c, z) = z^{1−c} M(1+a−c, 2−c, z) on the principal branch.
pub fn kummer_n<T: Real>(
    a: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    policy: &EvalPolicy,
) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    let two = one + one;
    if is_nonpositive_int(two - c) {
        return Err(Error::ParameterRestriction {
            function: "kummer_n",
            reason: format!("c = {} is excluded (c = 2, 3, …)", c.re),
        });
    }
    let e = one - c;
    if z.is_zero() {
        if e.is_zero() {
            return kummer_m(one + a - c, two - c, z, policy);
        }
        if e.re > T::zero() {
            return Ok(Complex::zero());
        }
        return Err(Error::ParameterRestriction {
            function: "kummer_n",
            reason: "z = 0 with Re(1 − c) ≤ 0".into(),
        });
    }
    Ok(cx::pow(z, e) * kummer_m(one + a - c, two - c, z, policy)?)
}
