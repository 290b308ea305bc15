//! Whittaker functions M_{p,m}, W_{p,m}, V_{p,m}.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::gamma::{gamma, rgamma};
use super::kummer::{kummer_m, kummer_m_prime};
use super::policy::EvalPolicy;
use super::tricomi::tricomi_u;
use crate::error::{Error, Result};
use crate::scalar::{cx, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WhittakerKind {
    M,
    W,
    V,
}

/// The (p, m, z) triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerIndex<T> {
    pub p: Complex<T>,
    pub m: Complex<T>,
    pub z: Complex<T>,
}

/// Value and z-derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueDeriv<T> {
    pub value: Complex<T>,
    pub deriv: Complex<T>,
}

fn integer_c<T: Real>(m: Complex<T>) -> Option<i64> {
    let c = m * T::lit(2.0) + T::one();
    if c.im.is_zero() && c.re.fract().is_zero() {
        c.re.to_i64()
    } else {
        None
    }
}

/// ε = +1 when −z = z e^{−iπ} on the principal branch, −1 when −z = z e^{iπ}.
pub(crate) fn half_plane_sign<T: Real>(z: Complex<T>) -> T {
    let z = cx::canon(z);
    if z.im > T::zero() || (z.im.is_zero() && z.re < T::zero()) {
        T::one()
    } else {
        -T::one()
    }
}

fn whittaker_m_raw<T: Real>(p: Complex<T>, m: Complex<T>, z: Complex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    let half = T::lit(0.5);
    let c = m * T::lit(2.0) + T::one();
    if c.im.is_zero() && c.re <= T::zero() && c.re.fract().is_zero() {
        return Err(Error::ParameterRestriction {
            function: "whittaker M",
            reason: "2m must not be a negative integer".into(),
        });
    }
    let pre = (-z * half).exp() * cx::pow(z, m + half);
    Ok(pre * kummer_m(m - p + half, c, z, policy)?)
}

/// Evaluate M, W or V at (p, m, z).
pub fn whittaker<T: Real>(kind: WhittakerKind, idx: WhittakerIndex<T>, policy: &EvalPolicy) -> Result<Complex<T>> {
    let WhittakerIndex { p, m, z } = idx;
    let z = cx::canon(z);
    if z.is_zero() {
        return Err(Error::Domain("whittaker: z = 0".into()));
    }
    let half = T::lit(0.5);
    match kind {
        WhittakerKind::M => whittaker_m_raw(p, m, z, policy),
        WhittakerKind::W => match integer_c(m) {
            Some(c) => {
                let pre = (-z * half).exp() * cx::pow(z, m + half);
                Ok(pre * tricomi_u(m - p + half, c, z, policy)?)
            }
            None => {
                let two_m = m * T::lit(2.0);
                let c1 = gamma(-two_m)? * rgamma(cx::re(half) - m - p);
                let c2 = gamma(two_m)? * rgamma(cx::re(half) + m - p);
                Ok(c1 * whittaker_m_raw(p, m, z, policy)? + c2 * whittaker_m_raw(p, -m, z, policy)?)
            }
        },
        WhittakerKind::V => match integer_c(m) {
            Some(c) => {
                let pre = (z * half).exp() * cx::pow(z, m + half);
                Ok(pre * tricomi_u(m + p + half, c, cx::canon(-z), policy)?)
            }
            None => {
                let two_m = m * T::lit(2.0);
                let eps = half_plane_sign(z);
                let phase = (cx::i::<T>() * T::PI() * two_m * eps).exp();
                let c1 = gamma(-two_m)? * rgamma(cx::re(half) - m + p);
                let c2 = gamma(two_m)? * phase * rgamma(cx::re(half) + m + p);
                Ok(c1 * whittaker_m_raw(p, m, z, policy)? + c2 * whittaker_m_raw(p, -m, z, policy)?)
            }
        },
    }
}

/// Value and derivative in z; W and V need 2m to be an integer.
pub fn whittaker_with_derivative<T: Real>(
    kind: WhittakerKind,
    idx: WhittakerIndex<T>,
    policy: &EvalPolicy,
) -> Result<ValueDeriv<T>> {
    let WhittakerIndex { p, m, z } = idx;
    let z = cx::canon(z);
    if z.is_zero() {
        return Err(Error::Domain("whittaker: z = 0".into()));
    }
    let half = T::lit(0.5);
    let one = Complex::<T>::one();
    let mh = m + half;
    match kind {
        WhittakerKind::M => {
            let c = m * T::lit(2.0) + one;
            let a = m - p + half;
            let pre = (-z * half).exp() * cx::pow(z, mh);
            let f = kummer_m(a, c, z, policy)?;
            let fp = kummer_m_prime(a, c, z, policy)?;
            let value = pre * f;
            Ok(ValueDeriv { value, deriv: value * (mh / z - half) + pre * fp })
        }
        WhittakerKind::W | WhittakerKind::V => {
            let c = integer_c(m).ok_or_else(|| Error::ParameterRestriction {
                function: "whittaker_with_derivative",
                reason: "analytic derivative requires integer 2m".into(),
            })?;
            if kind == WhittakerKind::W {
                let a = mh - p;
                let pre = (-z * half).exp() * cx::pow(z, mh);
                let value = pre * tricomi_u(a, c, z, policy)?;
                let up = -a * tricomi_u(a + one, c + 1, z, policy)?;
                Ok(ValueDeriv { value, deriv: value * (mh / z - half) + pre * up })
            } else {
                let b = mh + p;
                let mz = cx::canon(-z);
                let pre = (z * half).exp() * cx::pow(z, mh);
                let value = pre * tricomi_u(b, c, mz, policy)?;
                // d/dz U(b, c, −z) = b U(b+1, c+1, −z)
                let up = b * tricomi_u(b + one, c + 1, mz, policy)?;
                Ok(ValueDeriv { value, deriv: value * (mh / z + half) + pre * up })
            }
        }
    }
}

/// Leading small-z structure of W_{q,1/2}(ζ) = w0 + ζ(λ ln ζ + κ − …) used by the boundary system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginData<T> {
    /// W_{q,1/2}(0) = 1/Γ(1−q).
    pub value: Complex<T>,
    /// Coefficient of ln ζ in dW/dζ at ζ → 0.
    pub log_coeff: Complex<T>,
    /// Constant part of dW/dζ at ζ → 0.
    pub constant: Complex<T>,
}

/// Origin data of W_{q,1/2} from the logarithmic expansion of U(1−q, 2, ζ).
pub fn w_half_origin<T: Real>(q: Complex<T>) -> Result<OriginData<T>> {
    let one = Complex::<T>::one();
    let a = one - q;
    let lam_m1 = rgamma(a);
    let lam0 = rgamma(-q);
    let g = T::euler_gamma();
    // μ₀ = ψ(a) − ψ(1) − ψ(2) = ψ(a) + 2γ − 1
    let mu0 = if lam0.is_zero() {
        Complex::zero()
    } else {
        super::gamma::digamma(a)? + (g + g - T::one())
    };
    Ok(OriginData {
        value: lam_m1,
        log_coeff: lam0,
        constant: lam0 * (one + mu0) - lam_m1 * T::lit(0.5),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;
    fn p() -> EvalPolicy {
        EvalPolicy::default()
    }
    fn idx(p: C, m: f64, z: C) -> WhittakerIndex<f64> {
        WhittakerIndex { p, m: C::new(m, 0.0), z }
    }

    #[test]
    fn m_small_z_power() {
        let z = C::new(1e-7, 2e-7);
        let v = whittaker(WhittakerKind::M, idx(C::new(0.0, -0.4), 0.5, z), &p()).unwrap();
        assert!(cx::rel(v, z) < 1e-6);
        let mm = C::new(0.3, 0.0);
        let v = whittaker(WhittakerKind::M, WhittakerIndex { p: C::new(0.2, 0.1), m: mm, z }, &p()).unwrap();
        assert!(cx::rel(v, cx::pow(z, mm + 0.5)) < 1e-6);
    }

    #[test]
    fn w_large_z_asymptote() {
        let pp = C::new(0.0, -0.3);
        let mut last = f64::INFINITY;
        for &x in &[50.0, 100.0, 200.0] {
            let z = C::new(x, 0.0);
            let w = whittaker(WhittakerKind::W, idx(pp, 0.5, z), &p()).unwrap();
            let r = (w * (z * 0.5).exp() * cx::pow(z, -pp) - 1.0).norm();
            assert!(r < last);
            last = r;
        }
        assert!(last < 1e-2);
    }

    #[test]
    fn v_is_reflected_w() {
        // V_{p,1/2}(z) = −W_{−p,1/2}(−z)
        let pp = C::new(0.1, -0.6);
        for &z in &[C::new(0.0, -2.0), C::new(0.0, 3.5), C::new(1.2, -0.4)] {
            let v = whittaker(WhittakerKind::V, idx(pp, 0.5, z), &p()).unwrap();
            let w = whittaker(WhittakerKind::W, idx(-pp, 0.5, -z), &p()).unwrap();
            assert!(cx::rel(v, -w) < 1e-13);
        }
    }

    #[test]
    fn generic_m_connection_is_continuous_in_m() {
        // the connection formula at m = 1/2 ± δ brackets the direct evaluation
        let pp = C::new(0.0, -0.35);
        for &z in &[C::new(0.0, -1.5), C::new(0.0, 2.5), C::new(0.8, -0.3)] {
            for kind in [WhittakerKind::W, WhittakerKind::V] {
                let direct = whittaker(kind, idx(pp, 0.5, z), &p()).unwrap();
                let d = 1e-4;
                let hi = whittaker(kind, idx(pp, 0.5 + d, z), &p()).unwrap();
                let lo = whittaker(kind, idx(pp, 0.5 - d, z), &p()).unwrap();
                assert!(cx::rel((hi + lo) * 0.5, direct) < 1e-6, "{kind:?} z = {z}");
            }
        }
    }

    #[test]
    fn analytic_derivatives_match_differences() {
        let pp = C::new(0.0, -0.5);
        let z = C::new(0.0, -1.7);
        for kind in [WhittakerKind::M, WhittakerKind::W, WhittakerKind::V] {
            let vd = whittaker_with_derivative(kind, idx(pp, 0.5, z), &p()).unwrap();
            let h = 1e-4;
            let f = |w: C| whittaker(kind, idx(pp, 0.5, w), &p()).unwrap();
            let fd = (f(z + h) - f(z - h)) / (2.0 * h);
            assert!(cx::rel(vd.deriv, fd) < 1e-7, "{kind:?}");
        }
    }

    #[test]
    fn origin_data_matches_small_z() {
        let q = C::new(0.0, -0.65);
        let o = w_half_origin(q).unwrap();
        let zeta = C::new(0.0, -1e-6);
        let vd = whittaker_with_derivative(WhittakerKind::W, idx(q, 0.5, zeta), &p()).unwrap();
        assert!(cx::rel(vd.value, o.value) < 1e-5);
        let pred = o.log_coeff * cx::ln(zeta) + o.constant;
        assert!(cx::rel(vd.deriv, pred) < 1e-4);
    }
}
