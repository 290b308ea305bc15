use num_complex::Complex;
use num_traits::Zero;

use crate::continuation::continuation_matrix;
use crate::error::{Error, Result};
use crate::scalar::{cx, Real};
use crate::scattering::{FundamentalId, PhysicalParams};
use crate::specfun::{whittaker, EvalPolicy, ValueDeriv, WhittakerIndex, WhittakerKind};

/// How ψ″ is estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidualMethod {
    /// Five-point second differences of ψ.
    ValueDifferences,
    /// Five-point first differences of the analytic ψ′.
    DerivativeDifferences,
}

impl ResidualMethod {
    pub fn label(self) -> &'static str {
        match self {
            ResidualMethod::ValueDifferences => "value-differences",
            ResidualMethod::DerivativeDifferences => "derivative-differences",
        }
    }

    /// Step relative to |x| that balances truncation against rounding.
    pub fn default_relative_step<T: Real>(self) -> T {
        let e = T::epsilon();
        match self {
            ResidualMethod::ValueDifferences => e.powf(T::one() / T::lit(6.0)),
            ResidualMethod::DerivativeDifferences => e.powf(T::one() / T::lit(5.0)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport<T> {
    pub max_relative_residual: T,
    /// (x, residual); zero where ψ vanishes identically near x.
    pub sample_points: Vec<(T, T)>,
    /// Step relative to |x|.
    pub step: T,
    pub method: ResidualMethod,
    /// Points where numerator and normalization were both zero.
    pub trivial_points: usize,
}

/// Second derivative by five-point differences, one Richardson level (h, 2h).
fn second_from_values<T: Real, F>(f: &F, x: T, h: T) -> Result<Complex<T>>
where
    F: Fn(T) -> Result<ValueDeriv<T>>,
{
    let d = |h: T| -> Result<Complex<T>> {
        let v = |t: T| f(t).map(|s| s.value);
        let num = -v(x + h * T::lit(2.0))? + v(x + h)? * T::lit(16.0) - v(x)? * T::lit(30.0) + v(x - h)? * T::lit(16.0)
            - v(x - h * T::lit(2.0))?;
        Ok(num / (h * h * T::lit(12.0)))
    };
    let (a, b) = (d(h)?, d(h * T::lit(2.0))?);
    Ok((a * T::lit(16.0) - b) / T::lit(15.0))
}

fn first_of_derivs<T: Real, F>(f: &F, x: T, h: T) -> Result<Complex<T>>
where
    F: Fn(T) -> Result<ValueDeriv<T>>,
{
    let d = |h: T| -> Result<Complex<T>> {
        let g = |t: T| f(t).map(|s| s.deriv);
        let num = -g(x + h * T::lit(2.0))? + g(x + h)? * T::lit(8.0) - g(x - h)? * T::lit(8.0) + g(x - h * T::lit(2.0))?;
        Ok(num / (h * T::lit(12.0)))
    };
    let (a, b) = (d(h)?, d(h * T::lit(2.0))?);
    Ok((a * T::lit(16.0) - b) / T::lit(15.0))
}

/// |ψ″ + (k² − α/|x|)ψ| / (|k²ψ| + |αψ/x| + |ψ″|) at each x.
///
/// `relative_step` defaults to [`ResidualMethod::default_relative_step`].
pub fn ode_residual<T: Real, F>(
    solution: F,
    params: &PhysicalParams<T>,
    xs: &[T],
    relative_step: Option<T>,
    method: ResidualMethod,
) -> Result<ResidualReport<T>>
where
    F: Fn(T) -> Result<ValueDeriv<T>>,
{
    let step = relative_step.unwrap_or_else(|| method.default_relative_step());
    // the stencil reaches 4h and must not touch the origin
    if !(step > T::zero() && step < T::lit(0.2)) {
        return Err(Error::Domain("ode_residual: relative step must lie in (0, 0.2)".into()));
    }
    let k2 = params.k() * params.k();
    let alpha = params.alpha();
    let guarded = |t: T| -> Result<ValueDeriv<T>> {
        let s = solution(t)?;
        if cx::is_finite(s.value) && cx::is_finite(s.deriv) {
            Ok(s)
        } else {
            Err(Error::NonFinite { context: format!("ode_residual: solution at x = {}", t) })
        }
    };
    let mut points = Vec::with_capacity(xs.len());
    let mut worst = T::zero();
    let mut trivial = 0;
    for &x in xs {
        if x.is_zero() || !x.is_finite() {
            return Err(Error::Domain(format!("ode_residual: x = {} is not a valid sample", x)));
        }
        let h = step * x.abs();
        let psi = guarded(x)?.value;
        let d2 = match method {
            ResidualMethod::ValueDifferences => second_from_values(&guarded, x, h)?,
            ResidualMethod::DerivativeDifferences => first_of_derivs(&guarded, x, h)?,
        };
        let pot = alpha / x.abs();
        let num = (d2 + (k2 - pot) * psi).norm();
        let den = (k2 * psi).norm() + (psi * pot).norm() + d2.norm();
        let r = if den.is_zero() {
            if num.is_zero() {
                trivial += 1;
                T::zero()
            } else {
                T::infinity()
            }
        } else {
            num / den
        };
        worst = worst.max(r);
        points.push((x, r));
    }
    Ok(ResidualReport { max_relative_residual: worst, sample_points: points, step, method, trivial_points: trivial })
}

/// −e^{πα/4k} V_{p,1/2}(z e^{2πis}) on x > 0 through the continuation matrix.
pub fn continued_plus_v<T: Real>(params: &PhysicalParams<T>, s: i32, x: T, policy: &EvalPolicy) -> Result<ValueDeriv<T>> {
    FundamentalId::PlusV.check_axis(x)?;
    let p = params.p();
    let half = cx::re(T::lit(0.5));
    let m = continuation_matrix(s, p, half)?;
    let [cv, cw] = m.v_row();
    let dz = -cx::i::<T>() * params.k() * T::lit(2.0);
    let z = dz * x;
    let e = -params.e_quarter();
    let idx = WhittakerIndex { p, m: half, z };
    let v = crate::specfun::whittaker_with_derivative(WhittakerKind::V, idx, policy)?;
    let w = crate::specfun::whittaker_with_derivative(WhittakerKind::W, idx, policy)?;
    Ok(ValueDeriv {
        value: e * (cv * v.value + cw * w.value),
        deriv: e * dz * (cv * v.deriv + cw * w.deriv),
    })
}

/// Value-only evaluator of a fundamental solution, for the difference path.
pub fn value_only<T: Real>(id: FundamentalId, params: &PhysicalParams<T>, policy: &EvalPolicy) -> impl Fn(T) -> Result<ValueDeriv<T>> {
    let (q, kind, pre) = match id {
        FundamentalId::PlusW => (params.p(), WhittakerKind::W, params.e_quarter()),
        FundamentalId::PlusV => (params.p(), WhittakerKind::V, -params.e_quarter()),
        FundamentalId::MinusW => (-params.p(), WhittakerKind::W, params.e_quarter().powi(3)),
        FundamentalId::MinusV => (-params.p(), WhittakerKind::V, -params.e_quarter().inv()),
    };
    let dz = -cx::i::<T>() * params.k() * T::lit(2.0);
    let policy = *policy;
    move |x: T| {
        id.check_axis(x)?;
        let idx = WhittakerIndex { p: q, m: cx::re(T::lit(0.5)), z: dz * x };
        Ok(ValueDeriv { value: pre * whittaker(kind, idx, &policy)?, deriv: Complex::zero() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::fundamental_solution;

    fn pp(a: f64, k: f64) -> PhysicalParams<f64> {
        PhysicalParams::scattering(a, k).unwrap()
    }

    #[test]
    fn fundamental_solutions_solve_the_equation() {
        let p = pp(1.0, 1.0);
        let pol = EvalPolicy::default();
        for id in FundamentalId::ALL {
            let s = if id.is_plus() { 1.0 } else { -1.0 };
            let xs: Vec<f64> = [0.5, 1.0, 5.0].iter().map(|x| s * x).collect();
            for method in [ResidualMethod::ValueDifferences, ResidualMethod::DerivativeDifferences] {
                let r = ode_residual(|x| fundamental_solution(id, &p, x, &pol), &p, &xs, None, method).unwrap();
                assert!(r.max_relative_residual < 1e-6, "{id:?} {method:?}: {:e}", r.max_relative_residual);
            }
        }
    }

    #[test]
    fn zero_function_is_trivial() {
        let p = pp(1.0, 1.0);
        let zero = |_x: f64| Ok(ValueDeriv { value: Complex::zero(), deriv: Complex::zero() });
        let r = ode_residual(zero, &p, &[0.5, 1.0], None, ResidualMethod::ValueDifferences).unwrap();
        assert_eq!(r.max_relative_residual, 0.0);
        assert_eq!(r.trivial_points, 2);
    }

    #[test]
    fn continued_solution_still_solves() {
        let p = pp(1.0, 1.0);
        let pol = EvalPolicy::default();
        for s in [-1, 1, 2] {
            let r = ode_residual(|x| continued_plus_v(&p, s, x, &pol), &p, &[0.5, 1.0, 5.0], None, ResidualMethod::ValueDifferences)
                .unwrap();
            assert!(r.max_relative_residual < 1e-6, "s = {s}: {:e}", r.max_relative_residual);
        }
        let base = continued_plus_v(&p, 0, 0.7, &pol).unwrap();
        let direct = fundamental_solution(FundamentalId::PlusV, &p, 0.7, &pol).unwrap();
        assert!(cx::rel(base.value, direct.value) < 1e-14);
    }

    #[test]
    fn wrong_potential_is_caught() {
        let p = pp(1.0, 1.0);
        let other = pp(1.5, 1.0);
        let pol = EvalPolicy::default();
        let r = ode_residual(|x| fundamental_solution(FundamentalId::PlusW, &other, x, &pol), &p, &[1.0], None, ResidualMethod::ValueDifferences)
            .unwrap();
        assert!(r.max_relative_residual > 1e-3);
    }

    #[test]
    fn analytic_derivative_path_is_sharper() {
        let p = pp(1.3, 0.7);
        let pol = EvalPolicy::default();
        let xs = [0.5, 1.0, 5.0];
        let a = ode_residual(|x| fundamental_solution(FundamentalId::PlusW, &p, x, &pol), &p, &xs, None, ResidualMethod::DerivativeDifferences)
            .unwrap();
        let v = ode_residual(value_only(FundamentalId::PlusW, &p, &pol), &p, &xs, None, ResidualMethod::ValueDifferences).unwrap();
        assert!(a.max_relative_residual * 100.0 <= v.max_relative_residual, "{:e} vs {:e}", a.max_relative_residual, v.max_relative_residual);
    }

    #[test]
    fn rejects_the_origin_and_wrong_side() {
        let p = pp(1.0, 1.0);
        let pol = EvalPolicy::default();
        let f = |x| fundamental_solution(FundamentalId::PlusW, &p, x, &pol);
        assert!(ode_residual(f, &p, &[0.0], None, ResidualMethod::ValueDifferences).is_err());
        assert!(ode_residual(f, &p, &[-1.0], None, ResidualMethod::ValueDifferences).is_err());
    }
}
