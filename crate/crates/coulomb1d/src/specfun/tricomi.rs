//! Tricomi U(a, c, z) for integer c and the companion V(a, c, z) = e^z U(c−a, c, −z).
//!
//! Small |z| uses the logarithmic expansion, large |z| the asymptotic
//! series; between the two thresholds the logarithmic series is summed in
//! the wide scalar.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::gamma::{digamma, rgamma};
use super::kummer::{is_nonpositive_int, kummer_m, Evaluation};
use super::policy::EvalPolicy;
use crate::error::{Error, Result};
use crate::scalar::{cx, narrow_c, widen_c, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Logarithmic,
    /// Logarithmic series in the wide scalar.
    Extended,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionEvaluation<T> {
    pub value: Complex<T>,
    pub rel_error: f64,
    pub terms: usize,
    pub region: Region,
}

fn factorial<S: Real>(n: usize) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * S::from_usize(k).unwrap())
}

/// Logarithmic expansion for c = r ≥ 1.
fn log_series<S: Real>(a: Complex<S>, r: usize, z: Complex<S>, tol: f64, max_terms: usize) -> Result<Evaluation<S>> {
    let one = Complex::<S>::one();
    let rf = S::from_usize(r).unwrap();

    // finite part: Σ_{s=1}^{r−1} (s−1)! (1−a+s)_{r−1−s} / ((r−1−s)! Γ(a)) z^{−s}
    let ra = rgamma(a);
    let mut neg = Complex::<S>::zero();
    let mut abs_sum = S::zero();
    let zinv = z.inv();
    let mut zp = zinv;
    for s in 1..r {
        let mut poch = one;
        for j in 0..(r - 1 - s) {
            poch = poch * (one - a + S::from_usize(s + j).unwrap());
        }
        let t = ra * poch * (factorial::<S>(s - 1) / factorial::<S>(r - 1 - s)) * zp;
        neg = neg + t;
        abs_sum = abs_sum + t.norm();
        zp = zp * zinv;
    }

    // log part: Σ_s λ_s z^s/s! (ln z + μ_s)
    let sign = if r % 2 == 0 { S::one() } else { -S::one() };
    let mut lam = rgamma(one + a - rf) * (sign / factorial::<S>(r - 1));
    let gamma_e = S::euler_gamma();
    let mut harmonic = S::zero();
    for k in 1..r {
        harmonic = harmonic + S::from_usize(k).unwrap().recip();
    }
    let mut mu = digamma(a)? + gamma_e + gamma_e - harmonic;
    let lnz = cx::ln(z);
    let mut sum = Complex::<S>::zero();
    let mut small = 0;
    let tol_s = S::lit(tol);
    for s in 0..max_terms {
        let t = lam * (lnz + mu);
        sum = sum + t;
        let tn = t.norm();
        abs_sum = abs_sum + tn;
        let total = (sum + neg).norm();
        if tn <= tol_s * total || lam.is_zero() {
            small += 1;
            if small >= 3 || lam.is_zero() {
                let value = sum + neg;
                let cond = (abs_sum / value.norm()).to_f64_lossy();
                return Ok(Evaluation {
                    value,
                    rel_error: 4.0 * S::epsilon().to_f64_lossy() * cond + tol,
                    terms: s + 1,
                });
            }
        } else {
            small = 0;
        }
        let sf = S::from_usize(s).unwrap();
        let ap = a + sf;
        lam = lam * ap * z / ((rf + sf) * (sf + S::one()));
        mu = mu + ap.inv() - (sf + S::one()).recip() - (rf + sf).recip();
    }
    Err(Error::NonConvergence { function: "tricomi_u", terms: max_terms })
}

/// Asymptotic series z^{−a} Σ (−1)^s (a)_s (1+a−c)_s / (s! z^s), optimally truncated.
fn asymptotic<S: Real>(a: Complex<S>, c: i64, z: Complex<S>, tol: f64, max_terms: usize) -> Evaluation<S> {
    let b = a + S::one() - S::from_i64(c).unwrap();
    let mut term = Complex::<S>::one();
    let mut sum = term;
    let mut last = S::one();
    let mut abs_sum = S::one();
    let tol_s = S::lit(tol);
    let mut terms = 1;
    let mut trunc = S::zero();
    for s in 0..max_terms {
        let sf = S::from_usize(s).unwrap();
        let next = -term * (a + sf) * (b + sf) / (z * (sf + S::one()));
        let n = next.norm();
        if n > last {
            trunc = last;
            break;
        }
        term = next;
        sum = sum + term;
        abs_sum = abs_sum + n;
        last = n;
        terms += 1;
        if n <= tol_s * sum.norm() {
            trunc = n;
            break;
        }
        trunc = n;
    }
    let value = cx::pow(z, -a) * sum;
    let cond = (abs_sum / sum.norm()).to_f64_lossy();
    Evaluation {
        value,
        rel_error: (trunc / sum.norm()).to_f64_lossy() + 4.0 * S::epsilon().to_f64_lossy() * cond,
        terms,
    }
}

/// U(a, c, z), c ≥ 1, in scalar S from the log series.
fn u_log<S: Real>(a: Complex<S>, c: i64, z: Complex<S>, policy: &EvalPolicy) -> Result<Evaluation<S>> {
    if is_nonpositive_int(a) {
        // polynomial case: U(−n, c, z) = (−1)^n (c)_n M(−n, c, z)
        let n = (-a.re).to_usize().unwrap();
        let mut poch = S::one();
        for j in 0..n {
            poch = poch * S::from_i64(c + j as i64).unwrap();
        }
        if n % 2 == 1 {
            poch = -poch;
        }
        let m = kummer_m(a, cx::re(S::from_i64(c).unwrap()), z, policy)?;
        return Ok(Evaluation { value: m * poch, rel_error: 4.0 * S::epsilon().to_f64_lossy(), terms: n });
    }
    log_series(a, c as usize, z, policy.tol_for::<S>(), policy.series_max_terms)
}

/// U with the region policy and error report.
pub fn tricomi_u_eval<T: Real>(
    a: Complex<T>,
    c: i64,
    z: Complex<T>,
    policy: &EvalPolicy,
) -> Result<RegionEvaluation<T>> {
    if z.is_zero() {
        return Err(Error::Domain("tricomi_u: z = 0".into()));
    }
    if !cx::is_finite(z) || !cx::is_finite(a) {
        return Err(Error::NonFinite { context: "tricomi_u arguments".into() });
    }
    if c <= 0 {
        // U(a, c, z) = z^{1−c} U(a−c+1, 2−c, z)
        let shift = T::from_i64(1 - c).unwrap();
        let e = tricomi_u_eval(a + shift, 2 - c, z, policy)?;
        return Ok(RegionEvaluation { value: e.value * cx::powi(z, (1 - c) as i32), ..e });
    }
    let r = z.norm().to_f64_lossy();
    let target = 64.0 * policy.tol_for::<T>();

    if r >= policy.asymptotic_threshold {
        let e = asymptotic(a, c, z, policy.tol_for::<T>(), policy.series_max_terms);
        if e.rel_error <= target.max(policy.min_accuracy) {
            return Ok(RegionEvaluation { value: e.value, rel_error: e.rel_error, terms: e.terms, region: Region::Asymptotic });
        }
    } else if r < policy.log_expansion_threshold {
        if let Ok(e) = u_log(a, c, z, policy) {
            if e.rel_error <= target {
                return Ok(RegionEvaluation { value: e.value, rel_error: e.rel_error, terms: e.terms, region: Region::Logarithmic });
            }
        }
    }

    let wide_policy = policy.widened::<T::Wide>();
    let wide_policy = EvalPolicy { series_max_terms: wide_policy.series_max_terms.max(4 * r as usize + 200), ..wide_policy };
    let w = u_log(widen_c(a), c, widen_c(z), &wide_policy)?;
    let rel_error = w.rel_error + T::epsilon().to_f64_lossy();
    if rel_error > policy.min_accuracy {
        return Err(Error::UnreachableAccuracy { function: "tricomi_u", achieved: rel_error, required: policy.min_accuracy });
    }
    Ok(RegionEvaluation { value: narrow_c::<T>(w.value), rel_error, terms: w.terms, region: Region::Extended })
}

pub fn tricomi_u<T: Real>(a: Complex<T>, c: i64, z: Complex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    tricomi_u_eval(a, c, z, policy).map(|e| e.value)
}

/// dU/dz = −a U(a+1, c+1, z).
pub fn tricomi_u_prime<T: Real>(a: Complex<T>, c: i64, z: Complex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    Ok(-a * tricomi_u(a + T::one(), c + 1, z, policy)?)
}

/// Forces one region; used to cross-check the policy.
pub fn tricomi_u_in<T: Real>(a: Complex<T>, c: i64, z: Complex<T>, region: Region, policy: &EvalPolicy) -> Result<Evaluation<T>> {
    if c <= 0 {
        return Err(Error::ParameterRestriction { function: "tricomi_u_in", reason: "c must be positive".into() });
    }
    match region {
        Region::Logarithmic => u_log(a, c, z, policy),
        Region::Extended => {
            let w = u_log(widen_c(a), c, widen_c(z), &policy.widened::<T::Wide>())?;
            Ok(Evaluation { value: narrow_c::<T>(w.value), rel_error: w.rel_error + T::epsilon().to_f64_lossy(), terms: w.terms })
        }
        Region::Asymptotic => Ok(asymptotic(a, c, z, policy.tol_for::<T>(), policy.series_max_terms)),
    }
}

/// V(a, c, z) = e^z U(c−a, c, −z) with −z on the principal branch.
pub fn vee<T: Real>(a: Complex<T>, c: i64, z: Complex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    let cc = cx::re(T::from_i64(c).unwrap());
    Ok(z.exp() * tricomi_u(cc - a, c, cx::canon(-z), policy)?)
}

/// dV/dz = V + e^z (c−a) U(c−a+1, c+1, −z).
pub fn vee_prime<T: Real>(a: Complex<T>, c: i64, z: Complex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    let cc = cx::re(T::from_i64(c).unwrap());
    let mz = cx::canon(-z);
    let b = cc - a;
    Ok(z.exp() * (tricomi_u(b, c, mz, policy)? + b * tricomi_u(b + T::one(), c + 1, mz, policy)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type C = Complex<f64>;
    fn p() -> EvalPolicy {
        EvalPolicy::default()
    }

    #[test]
    fn frozen_values() {
        let u = tricomi_u(C::new(0.25, 0.0), 2, C::new(5.0, 0.0), &p()).unwrap();
        assert!(cx::rel(u, C::new(0.6931453665248954, 0.0)) < 1e-14, "{u}");
        let v = vee(C::new(0.25, 0.0), 2, C::new(-5.0, 0.0), &p()).unwrap();
        assert!(cx::rel(v, C::new(0.00032875422687264585, 0.0)) < 1e-13, "{v}");
    }

    #[test]
    fn pole_term_dominates_near_zero() {
        let a = C::new(1.0, 0.7);
        let z = C::new(1e-6, 2e-6);
        let u = tricomi_u(a, 2, z, &p()).unwrap();
        let lead = rgamma(a) / z;
        assert!(cx::rel(u, lead) < 1e-4);
    }

    #[test]
    fn large_argument_leading_term() {
        let a = C::new(1.0, 0.5);
        let z = C::new(0.0, -100.0);
        let e = tricomi_u_eval(a, 2, z, &p()).unwrap();
        assert_eq!(e.region, Region::Asymptotic);
        let ratio = e.value / cx::pow(z, -a);
        assert!((ratio - 1.0).norm() < 2.0 * (a * (a - 1.0)).norm() / 100.0);
    }

    #[test]
    fn gap_uses_extended_precision() {
        let e = tricomi_u_eval(C::new(1.0, -0.5), 2, C::new(0.0, 15.0), &p()).unwrap();
        assert_eq!(e.region, Region::Extended);
        assert!(e.rel_error < 1e-14);
    }

    #[test]
    fn nonpositive_c_and_polynomial_a() {
        // U(a, 0, z) = z U(a+1, 2, z)
        let a = C::new(0.3, 0.2);
        let z = C::new(1.5, -0.5);
        let lhs = tricomi_u(a, 0, z, &p()).unwrap();
        let rhs = z * tricomi_u(a + 1.0, 2, z, &p()).unwrap();
        assert!(cx::rel(lhs, rhs) < 1e-14);
        // U(−2, c, z) = z² − 2(c+1)z + c(c+1) ... for c = 2: z² − 6z + 6
        let z = C::new(0.7, 0.3);
        let u = tricomi_u(C::new(-2.0, 0.0), 2, z, &p()).unwrap();
        assert!(cx::rel(u, z * z - z * 6.0 + 6.0) < 1e-14);
    }

    #[test]
    fn regions_agree_at_threshold() {
        let pol = p();
        for &(ar, ai) in &[(1.0, 0.1), (1.0, -0.5), (1.0, 1.0), (0.5, 0.3), (2.0, -1.0)] {
            for &ang in &[-1.4f64, -0.3, 0.0, 0.8, 1.5] {
                let z = C::from_polar(pol.asymptotic_threshold, ang);
                let a = C::new(ar, ai);
                let x = tricomi_u_in(a, 2, z, Region::Extended, &pol).unwrap();
                let y = tricomi_u_in(a, 2, z, Region::Asymptotic, &pol).unwrap();
                assert!(cx::rel(y.value, x.value) < 1e-8, "a = {a}, z = {z}");
            }
        }
    }

    proptest! {
        #[test]
        fn uv_wronskian(ar in -1.0f64..2.0, ai in -2.0f64..2.0, zr in -12.0f64..12.0, zi in -12.0f64..12.0) {
            let a = C::new(ar, ai);
            let z = C::new(zr, zi);
            prop_assume!(z.norm() > 0.3 && zi.abs() > 1e-3);
            let u = tricomi_u(a, 2, z, &p()).unwrap();
            let up = tricomi_u_prime(a, 2, z, &p()).unwrap();
            let v = vee(a, 2, z, &p()).unwrap();
            let vp = vee_prime(a, 2, z, &p()).unwrap();
            let eps = if zi > 0.0 { 1.0 } else { -1.0 };
            let expect = (cx::i::<f64>() * core::f64::consts::PI * eps * (C::new(2.0, 0.0) - a)).exp()
                * z.exp() * cx::powi(z, -2);
            prop_assert!(cx::rel(u * vp - up * v, expect) < 1e-9);
        }
    }
}
