use num_complex::Complex;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::boundary::{solve_boundary_closed, BoundarySolution};
use super::fundamental::{fundamental_solution, FundamentalId};
use super::params::{Extension, MomentumAxis, PhysicalParams, Regime, ScatteringSolution};
use crate::error::{Error, Result};
use crate::extensions::real_extension_params;
use crate::scalar::{cx, Real};
use crate::specfun::{gamma, rgamma, EvalPolicy};

/// Γ(w)/Γ(−w) = −Γ(1+w)/Γ(1−w), finite at w = 0.
pub(crate) fn gamma_ratio<T: Real>(w: Complex<T>) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    Ok(-gamma(one + w)? * rgamma(one - w))
}

fn from_boundary<T: Real>(b: BoundarySolution<T>, k: T) -> ScatteringSolution<T> {
    let a2 = b.a_r.norm_sqr();
    let b2 = b.b_r.norm_sqr();
    if b.a_r.is_zero() {
        return ScatteringSolution {
            a_r: b.a_r,
            b_r: b.b_r,
            r: Complex::new(T::infinity(), T::zero()),
            t: Complex::zero(),
            current: k * b2,
            unitarity_residual: T::infinity(),
            v_minus_minus_v: b.v_minus_minus_v,
            regime: Regime::ImpenetrableVanishingA,
        };
    }
    let r = b.b_r / b.a_r;
    let t = b.a_r.inv();
    ScatteringSolution {
        a_r: b.a_r,
        b_r: b.b_r,
        r,
        t,
        current: k * (b2 - a2),
        unitarity_residual: (T::one() - r.norm_sqr() - t.norm_sqr()).abs(),
        v_minus_minus_v: b.v_minus_minus_v,
        regime: Regime::Regular,
    }
}

/// R, T, current and unitarity for the chosen extension at real k.
pub fn scattering_report<T: Real>(ext: &Extension<T>, params: &PhysicalParams<T>) -> Result<ScatteringSolution<T>> {
    let k = params.real_k()?;
    if params.alpha().is_zero() {
        let one = Complex::one();
        return Ok(ScatteringSolution {
            a_r: one,
            b_r: Complex::zero(),
            r: Complex::zero(),
            t: one,
            current: -k,
            unitarity_residual: T::zero(),
            v_minus_minus_v: Complex::zero(),
            regime: Regime::Free,
        });
    }
    let v = match ext {
        Extension::Real => real_extension_params(params)?,
        Extension::Params(v) => *v,
    };
    match solve_boundary_closed(v.v_plus_minus_v, v.v_plus_plus_w, params) {
        Ok(b) => Ok(from_boundary(b, k)),
        Err(Error::DegenerateDenominator(_)) => {
            // T = 0 and R takes its Dirichlet value
            let r = gamma_ratio(params.w())?;
            let one = Complex::one();
            Ok(ScatteringSolution {
                a_r: Complex::new(T::infinity(), T::zero()),
                b_r: Complex::new(T::infinity(), T::zero()),
                r,
                t: Complex::zero(),
                current: T::nan(),
                unitarity_residual: (T::one() - r.norm_sqr()).abs(),
                v_minus_minus_v: one,
                regime: Regime::ImpenetrableDegenerate,
            })
        }
        Err(e) => Err(e),
    }
}

/// Limit of f₂ at x = 0 and its modulus squared in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F2AtZero<T> {
    pub value: Complex<T>,
    pub abs2: T,
}

/// f₂(k, 0) = −2ik e^{−πα/4k} / (α Γ(iα/2k)), |f₂(k, 0)|² = (k/πα)(1 − e^{−πα/k}).
pub fn f2_at_zero<T: Real>(params: &PhysicalParams<T>) -> Result<F2AtZero<T>> {
    params.nonzero_alpha()?;
    let k = params.real_k()?;
    let alpha = params.alpha();
    let kc = params.k();
    let value = -cx::i::<T>() * kc * T::lit(2.0) / alpha * params.e_quarter().inv() * rgamma(params.w());
    let pa = T::PI() * alpha;
    let abs2 = -(k / pa) * (-pa / k).exp_m1();
    Ok(F2AtZero { value, abs2 })
}

/// The R = 0 branch of the continuity condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompleteTransmission<T> {
    pub t: Complex<T>,
    pub abs2_t: T,
    /// |e^{πα/k} − 1|.
    pub unitarity_violation: T,
}

/// Impose R = 0: T = e^{πα/2k} Γ(iα/2k)/Γ(−iα/2k).
pub fn complete_transmission_check<T: Real>(params: &PhysicalParams<T>) -> Result<CompleteTransmission<T>> {
    let k = params.real_k()?;
    let t = params.x_half().exp() * gamma_ratio(params.w())?;
    let violation = (T::PI() * params.alpha() / k).exp_m1().abs();
    Ok(CompleteTransmission { t, abs2_t: t.norm_sqr(), unitarity_violation: violation })
}

/// Dirichlet data: T = 0, R = Γ(iα/2k)/Γ(−iα/2k) and f₂^{(R)} = ψ₊^{−V} + R ψ₊^{+W}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Impenetrable<T> {
    pub r: Complex<T>,
    pub abs2_r: T,
    pub f2r: Complex<T>,
}

pub fn impenetrable_case<T: Real>(params: &PhysicalParams<T>, x: T, policy: &EvalPolicy) -> Result<Impenetrable<T>> {
    params.real_k()?;
    if x < T::zero() {
        return Err(Error::WrongHalfAxis { id: "f2R", side: "positive", x: x.to_f64_lossy() });
    }
    let r = gamma_ratio(params.w())?;
    let f2r = if x.is_zero() {
        Complex::zero()
    } else {
        let v = fundamental_solution(FundamentalId::PlusV, params, x, policy)?.value;
        let w = fundamental_solution(FundamentalId::PlusW, params, x, policy)?.value;
        v + r * w
    };
    Ok(Impenetrable { r, abs2_r: r.norm_sqr(), f2r })
}

/// One row of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint<T> {
    pub alpha: T,
    pub k: T,
    pub solution: ScatteringSolution<T>,
}

/// Evaluate the grid alphas × ks in parallel; rows come back ordered by
/// (alpha index, k index). α = 0 needs `free_limit`.
pub fn sweep<T: Real>(alphas: &[T], ks: &[T], ext: &Extension<T>, free_limit: bool) -> Result<Vec<SweepPoint<T>>> {
    if alphas.is_empty() || ks.is_empty() {
        return Err(Error::EmptyRange("sweep grid has no points".into()));
    }
    if !free_limit && alphas.iter().any(|a| a.is_zero()) {
        return Err(Error::Domain("alpha = 0 in sweep without the free-limit flag".into()));
    }
    let nk = ks.len();
    (0..alphas.len() * nk)
        .into_par_iter()
        .map(|i| {
            let (alpha, k) = (alphas[i / nk], ks[i % nk]);
            let params = PhysicalParams::new(alpha, cx::re(k), MomentumAxis::Scattering)?;
            Ok(SweepPoint { alpha, k, solution: scattering_report(ext, &params)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::ExtensionParams;

    type C = Complex<f64>;

    fn pp(alpha: f64, k: f64) -> PhysicalParams<f64> {
        PhysicalParams::scattering(alpha, k).unwrap()
    }

    #[test]
    fn free_limit() {
        let s = scattering_report(&Extension::Real, &pp(0.0, 1.3)).unwrap();
        assert_eq!((s.r, s.t, s.regime), (C::zero(), C::one(), Regime::Free));
        assert_eq!(s.unitarity_residual, 0.0);
    }

    #[test]
    fn real_extension_hyperbolic_forms() {
        let s = scattering_report(&Extension::Real, &pp(1.0, 0.5)).unwrap();
        let pi = core::f64::consts::PI;
        assert!((s.abs2_t() - 1.0 / pi.cosh().powi(2)).abs() < 1e-13);
        assert!((s.abs2_r() - pi.tanh().powi(2)).abs() < 1e-13);
        assert!(s.unitarity_residual < 1e-13);
        assert!((s.abs2_t() - 0.007441950142796213).abs() < 1e-16);
    }

    #[test]
    fn vanishing_a_is_flagged() {
        let ext = Extension::Params(ExtensionParams::free(C::new(0.3, 0.0), C::new(-1.0, 0.0)));
        let s = scattering_report(&ext, &pp(1.0, 1.0)).unwrap();
        assert_eq!(s.regime, Regime::ImpenetrableVanishingA);
        assert!(s.r.re.is_infinite());
        assert_eq!(s.t, C::zero());
    }

    #[test]
    fn degenerate_family_is_dirichlet() {
        let p = pp(0.7, 1.1);
        let e = p.e_full().re;
        let b = -0.2;
        let a = -(2.0 + (1.0 - e) * b) / (1.0 + e);
        let ext = Extension::Params(ExtensionParams::free(C::new(a, 0.0), C::new(b, 0.0)));
        let s = scattering_report(&ext, &p).unwrap();
        assert_eq!(s.regime, Regime::ImpenetrableDegenerate);
        assert!((s.abs2_r() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn f2_zero_modulus() {
        for &(a, k) in &[(1.0, 1.0), (-2.0, 0.3), (5.0, 10.0), (0.5, 0.1)] {
            let f = f2_at_zero(&pp(a, k)).unwrap();
            assert!((f.value.norm_sqr() - f.abs2).abs() < 1e-12 * f.abs2, "{a} {k}");
        }
        let f = f2_at_zero(&pp(1.0, 1.0)).unwrap();
        assert!((f.abs2 - 0.3045544687796937).abs() < 1e-15);
        assert!(matches!(f2_at_zero(&pp(0.0, 1.0)), Err(Error::AlphaZero)));
    }

    #[test]
    fn f2_zero_reflection_symmetry() {
        // |f₂|²(−α) = e^{πα/k} |f₂|²(α)
        let (a, k) = (1.3, 0.8);
        let plus = f2_at_zero(&pp(a, k)).unwrap().abs2;
        let minus = f2_at_zero(&pp(-a, k)).unwrap().abs2;
        let e = (core::f64::consts::PI * a / k).exp();
        assert!((minus - e * plus).abs() < 1e-12 * minus);
    }

    #[test]
    fn complete_transmission() {
        let c = complete_transmission_check(&pp(0.0, 2.0)).unwrap();
        assert_eq!(c.unitarity_violation, 0.0);
        assert!((c.abs2_t - 1.0).abs() < 1e-15);
        let c = complete_transmission_check(&pp(1.0, 1.0)).unwrap();
        let e = core::f64::consts::PI.exp();
        assert!((c.abs2_t - e).abs() < 1e-12 * e);
        assert!((c.unitarity_violation - (e - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn impenetrable() {
        let p = pp(1.0, 1.0);
        let pol = EvalPolicy::default();
        let d = impenetrable_case(&p, 0.0, &pol).unwrap();
        assert!((d.abs2_r - 1.0).abs() < 1e-14);
        assert_eq!(d.f2r, C::zero());
        let near = impenetrable_case(&p, 1e-9, &pol).unwrap();
        assert!(near.f2r.norm() < 1e-7);
        let one = impenetrable_case(&p, 1.0, &pol).unwrap();
        assert!(cx::rel(one.f2r, C::new(-0.24966589865433297, -1.0025843503449362)) < 1e-13, "{}", one.f2r);
        assert!(impenetrable_case(&p, -1.0, &pol).is_err());
    }

    #[test]
    fn sweep_order_and_errors() {
        let rows = sweep(&[-1.0, 2.0], &[0.5, 1.0, 3.0], &Extension::Real, false).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!((rows[4].alpha, rows[4].k), (2.0, 1.0));
        let single = scattering_report(&Extension::Real, &pp(2.0, 1.0)).unwrap();
        assert_eq!(rows[4].solution, single);
        assert!(sweep::<f64>(&[], &[1.0], &Extension::Real, false).is_err());
        assert!(sweep(&[0.0], &[1.0], &Extension::Real, false).is_err());
        let free = sweep(&[0.0], &[1.0, 2.0], &Extension::Real, true).unwrap();
        assert!(free.iter().all(|r| r.solution.abs2_t() == 1.0));
    }
}
