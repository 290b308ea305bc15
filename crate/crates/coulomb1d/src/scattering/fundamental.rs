//! Fundamental pairs on the two half-axes and their small-x structure.
//!
//! With p = −iα/2k and z = −2ikx:
//!
//! * ψ₊^{+W} = e^{πα/4k} W_{p,1/2}(z), ψ₊^{−V} = −e^{πα/4k} V_{p,1/2}(z) for x > 0;
//! * ψ₋^{−V} = −e^{−πα/4k} V_{−p,1/2}(z) for x < 0;
//! * ψ₋^{+W} = e^{3πα/4k} W_{−p,1/2}(z) for x < 0, normalized so that
//!   {ψ₋^{+W}, ψ₋^{−V}} = −2ik and ψ₋^{+W} = [ψ₋^{−V}]* for real k.

use num_complex::Complex;

use super::params::PhysicalParams;
use crate::error::{Error, Result};
use crate::scalar::{cx, Real};
use crate::specfun::{digamma, rgamma, w_half_origin, whittaker_with_derivative, EvalPolicy, ValueDeriv, WhittakerIndex, WhittakerKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FundamentalId {
    PlusW,
    PlusV,
    MinusW,
    MinusV,
}

impl FundamentalId {
    pub const ALL: [FundamentalId; 4] = [Self::PlusW, Self::PlusV, Self::MinusW, Self::MinusV];

    pub fn name(self) -> &'static str {
        match self {
            Self::PlusW => "psi_plus_W",
            Self::PlusV => "psi_plus_V",
            Self::MinusW => "psi_minus_W",
            Self::MinusV => "psi_minus_V",
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, Self::PlusW | Self::PlusV)
    }

    pub fn check_axis<T: Real>(self, x: T) -> Result<()> {
        let ok = if self.is_plus() { x > T::zero() } else { x < T::zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::WrongHalfAxis {
                id: self.name(),
                side: if self.is_plus() { "positive" } else { "negative" },
                x: x.to_f64_lossy(),
            })
        }
    }
}

/// Whittaker index, kind and prefactor of a fundamental solution.
fn representation<T: Real>(id: FundamentalId, pp: &PhysicalParams<T>) -> (Complex<T>, WhittakerKind, Complex<T>) {
    let p = pp.p();
    let e = pp.e_quarter();
    match id {
        FundamentalId::PlusW => (p, WhittakerKind::W, e),
        FundamentalId::PlusV => (p, WhittakerKind::V, -e),
        FundamentalId::MinusW => (-p, WhittakerKind::W, e * e * e),
        FundamentalId::MinusV => (-p, WhittakerKind::V, -e.inv()),
    }
}

/// Value and x-derivative of a fundamental solution.
pub fn fundamental_solution<T: Real>(
    id: FundamentalId,
    params: &PhysicalParams<T>,
    x: T,
    policy: &EvalPolicy,
) -> Result<ValueDeriv<T>> {
    id.check_axis(x)?;
    let (q, kind, pre) = representation(id, params);
    let dz = -cx::i::<T>() * params.k() * T::lit(2.0);
    let z = dz * x;
    let idx = WhittakerIndex { p: q, m: cx::re(T::lit(0.5)), z };
    let vd = whittaker_with_derivative(kind, idx, policy)?;
    Ok(ValueDeriv { value: pre * vd.value, deriv: pre * vd.deriv * dz })
}

/// Truncated small-x expansion through first order in x, with logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallX<T> {
    pub value: Complex<T>,
    pub deriv: Complex<T>,
    /// |2kx| > 0.1: the truncation is no longer small.
    pub out_of_range: bool,
}

fn plus_w_expansion<T: Real>(alpha: T, k: Complex<T>, lnx: Complex<T>, x: T) -> Result<(Complex<T>, Complex<T>)> {
    let i = cx::i::<T>();
    let two = T::lit(2.0);
    let g = T::euler_gamma();
    let y = i * alpha / (k * two);
    let pre = k * two / alpha * rgamma(y) * (cx::re(T::PI() * alpha) / (k * T::lit(4.0))).exp();
    let lk = cx::ln(-i * k * two);
    let d1 = digamma(y + T::one())?;
    let d2 = digamma(y + two)?;
    let ia = i * alpha;
    let a2 = alpha * alpha;
    let head = -ia * g * two + k - ia * lk - ia * d1 - ia * lnx;
    let value = pre * (-i + (ia + head) * x);
    let lin = i * a2 * two - i * a2 * g * two + k * alpha * T::lit(3.0) + i * k * k - i * a2 * lk + k * d1 * alpha * two
        - i * d2 * a2
        - k * d2 * alpha * two
        - i * lnx * a2;
    Ok((value, pre * (head + lin * x)))
}

fn plus_v_expansion<T: Real>(alpha: T, k: Complex<T>, lnx: Complex<T>, x: T) -> Result<(Complex<T>, Complex<T>)> {
    let i = cx::i::<T>();
    let two = T::lit(2.0);
    let g = T::euler_gamma();
    let y = i * alpha / (k * two);
    let pre = -(k * two / alpha) * rgamma(-y) * (cx::re(T::PI() * alpha) / (k * T::lit(4.0))).exp();
    let lk = cx::ln(i * k * two);
    let d1 = digamma(-y + T::one())?;
    let d2 = digamma(-y + two)?;
    let ia = i * alpha;
    let a2 = alpha * alpha;
    let head = -ia * g * two - k - ia * lk - ia * d1 - ia * lnx;
    let value = pre * (-i + (ia + head) * x);
    let lin = i * a2 * two - i * a2 * g * two - k * alpha * T::lit(3.0) + i * k * k - i * a2 * lk - k * d1 * alpha * two
        - i * d2 * a2
        + k * d2 * alpha * two
        - i * lnx * a2;
    Ok((value, pre * (head + lin * x)))
}

/// Small-x form of a fundamental solution.
///
/// The negative side follows from α → −α with ln x read as ln|x| − iπ for
/// ψ₋^{−V} and ln|x| + iπ for ψ₋^{+W}, the branches on which z = −2ikx lies.
pub fn small_x_expansion<T: Real>(id: FundamentalId, params: &PhysicalParams<T>, x: T) -> Result<SmallX<T>> {
    id.check_axis(x)?;
    params.nonzero_alpha()?;
    let alpha = params.alpha();
    let k = params.k();
    let l = x.abs().ln();
    let pi = T::PI();
    let (value, deriv) = match id {
        FundamentalId::PlusW => plus_w_expansion(alpha, k, cx::re(l), x)?,
        FundamentalId::PlusV => plus_v_expansion(alpha, k, cx::re(l), x)?,
        FundamentalId::MinusV => plus_v_expansion(-alpha, k, Complex::new(l, -pi), x)?,
        FundamentalId::MinusW => {
            let (v, d) = plus_w_expansion(-alpha, k, Complex::new(l, pi), x)?;
            let f = params.e_full();
            (v * f, d * f)
        }
    };
    let out_of_range = (k * x * T::lit(2.0)).norm() > T::lit(0.1);
    Ok(SmallX { value, deriv, out_of_range })
}

/// ψ(0), and ψ′ = L ln x + D + o(1) as x → 0 on the solution's own half-axis.
///
/// For ψ₋^{−V} the logarithm is ln|x| − iπ, matching [`small_x_expansion`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginStructure<T> {
    pub value: Complex<T>,
    pub log_coeff: Complex<T>,
    pub constant: Complex<T>,
}

/// Origin structure of ψ₊^{−V}, ψ₊^{+W} and ψ₋^{−V}, in that order.
pub fn origin_structure<T: Real>(params: &PhysicalParams<T>) -> Result<[OriginStructure<T>; 3]> {
    let p = params.p();
    let e = params.e_quarter();
    let i = cx::i::<T>();
    let two_ik = i * params.k() * T::lit(2.0);
    let ln_plus = cx::ln(two_ik);
    let ln_minus = cx::ln(-two_ik);
    let wp = w_half_origin(p)?;
    let wm = w_half_origin(-p)?;
    // ψ₊^{−V} = e W_{−p}(−z), −z = 2ikx
    let plus_v = OriginStructure {
        value: e * wm.value,
        log_coeff: e * two_ik * wm.log_coeff,
        constant: e * two_ik * (wm.constant + wm.log_coeff * ln_plus),
    };
    // ψ₊^{+W} = e W_p(z), z = −2ikx
    let plus_w = OriginStructure {
        value: e * wp.value,
        log_coeff: -e * two_ik * wp.log_coeff,
        constant: -e * two_ik * (wp.constant + wp.log_coeff * ln_minus),
    };
    // ψ₋^{−V} = e⁻¹ W_p(−z)
    let ei = e.inv();
    let minus_v = OriginStructure {
        value: ei * wp.value,
        log_coeff: ei * two_ik * wp.log_coeff,
        constant: ei * two_ik * (wp.constant + wp.log_coeff * ln_plus),
    };
    Ok([plus_v, plus_w, minus_v])
}
