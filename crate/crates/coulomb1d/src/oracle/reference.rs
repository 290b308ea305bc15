//! Double-double reference values.
//!
//! Each registered expression is evaluated in [`DoubleDouble`] along two
//! independent routes; the digits on which they agree are the certified ones.

use num_complex::Complex;
use num_traits::{Float, FloatConst, One, Zero};

use crate::continuation::{branch_coeffs, continuation_matrix, ContinuationMatrix};
use crate::error::{Error, Result};
use crate::extensions::{delta_correction, DeltaForm};
use crate::scalar::{c64_to, cx, DoubleDouble, Real};
use crate::scattering::{f2_at_zero, solve_boundary_closed, solve_boundary_numeric, PhysicalParams};
use crate::specfun::{digamma, gamma, kummer_m, rgamma, tricomi_u, EvalPolicy};
use crate::spectrum::a_r_bound;

type D = DoubleDouble;
type CD = Complex<D>;
type C64 = Complex<f64>;

/// Digits the double-double layer can certify with twice that working precision.
pub const MAX_CERTIFIED_DIGITS: u32 = 16;
/// Upper limit on requests; anything between the two is refused as exhausted.
pub const MAX_REQUEST_DIGITS: u32 = 60;

/// The registered formula set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expression {
    Gamma { z: C64 },
    ReciprocalGamma { z: C64 },
    Digamma { z: C64 },
    KummerM { a: C64, c: C64, z: C64 },
    TricomiU { a: C64, c: i64, z: C64 },
    BranchV { s: i32, p: C64 },
    BranchW { s: i32, p: C64 },
    Sech2 { x: f64 },
    Tanh2 { x: f64 },
    ScatteringA { alpha: f64, k: f64, v_plus_minus_v: C64, v_plus_plus_w: C64 },
    ScatteringB { alpha: f64, k: f64, v_plus_minus_v: C64, v_plus_plus_w: C64 },
    InducedVMinus { alpha: f64, k: f64, v_plus_minus_v: C64, v_plus_plus_w: C64 },
    F2AtZeroAbs2 { alpha: f64, k: f64 },
    DeltaCoefficient { alpha: f64, k: f64, x: f64 },
    ABound { alpha: f64, kappa: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceValue {
    pub value: CD,
    pub certified_digits: u32,
    /// Relative disagreement between the routes plus the working precision.
    pub error_bound: f64,
}

impl ReferenceValue {
    pub fn to_c64(&self) -> C64 {
        Complex::new(self.value.re.to_f64(), self.value.im.to_f64())
    }
}

fn up(z: C64) -> CD {
    c64_to::<D>(z)
}

fn re(x: f64) -> CD {
    Complex::new(D::from_f64(x), D::zero())
}

fn policy() -> EvalPolicy {
    EvalPolicy::for_scalar::<D>()
}

fn pow_matrix(m: ContinuationMatrix<D>, n: u32) -> ContinuationMatrix<D> {
    (0..n).fold(ContinuationMatrix::identity(0), |acc, _| acc * m)
}

fn branch_by_powers(s: i32, p: C64) -> Result<[CD; 2]> {
    let unit = continuation_matrix(s.signum(), up(p), re(0.5))?;
    Ok(pow_matrix(unit, s.unsigned_abs()).v_row())
}

fn boundary(alpha: f64, k: f64, a: C64, b: C64) -> Result<([CD; 3], [CD; 3])> {
    let p = PhysicalParams::scattering(D::from_f64(alpha), D::from_f64(k))?;
    let c = solve_boundary_closed(up(a), up(b), &p)?;
    let n = solve_boundary_numeric(up(a), up(b), &p)?.solution;
    Ok(([c.a_r, c.b_r, c.v_minus_minus_v], [n.a_r, n.b_r, n.v_minus_minus_v]))
}

fn routes(e: &Expression) -> Result<(CD, CD)> {
    let one = CD::one();
    let pol = policy();
    Ok(match *e {
        Expression::Gamma { z } => {
            let z = up(z);
            (gamma(z)?, gamma(z + one)? / z)
        }
        Expression::ReciprocalGamma { z } => {
            let z = up(z);
            (rgamma(z), rgamma(z + one) * z)
        }
        Expression::Digamma { z } => {
            let z = up(z);
            (digamma(z)?, digamma(z + one)? - z.inv())
        }
        Expression::KummerM { a, c, z } => {
            let (a, c, z) = (up(a), up(c), up(z));
            (kummer_m(a, c, z, &pol)?, z.exp() * kummer_m(c - a, c, -z, &pol)?)
        }
        Expression::TricomiU { a, c, z } => {
            let (a, z) = (up(a), up(z));
            let cc = re(c as f64);
            let other = cx::pow(z, one - cc) * tricomi_u(a - cc + one, 2 - c, z, &pol)?;
            (tricomi_u(a, c, z, &pol)?, other)
        }
        Expression::BranchV { s, p } => (branch_coeffs(s, up(p))?.b_v, branch_by_powers(s, p)?[0]),
        Expression::BranchW { s, p } => (branch_coeffs(s, up(p))?.b_w, branch_by_powers(s, p)?[1]),
        Expression::Sech2 { x } => {
            let x = D::from_f64(x).abs();
            let c = x.cosh();
            let e = (-x * D::from_f64(2.0)).exp();
            let b = e * D::from_f64(4.0) / ((D::one() + e) * (D::one() + e));
            (Complex::new((c * c).recip(), D::zero()), Complex::new(b, D::zero()))
        }
        Expression::Tanh2 { x } => {
            let x = D::from_f64(x).abs();
            let t = x.tanh();
            let m = (x * D::from_f64(2.0)).exp_m1();
            let r = m / (m + D::from_f64(2.0));
            (Complex::new(t * t, D::zero()), Complex::new(r * r, D::zero()))
        }
        Expression::ScatteringA { alpha, k, v_plus_minus_v, v_plus_plus_w } => {
            let (c, n) = boundary(alpha, k, v_plus_minus_v, v_plus_plus_w)?;
            (c[0], n[0])
        }
        Expression::ScatteringB { alpha, k, v_plus_minus_v, v_plus_plus_w } => {
            let (c, n) = boundary(alpha, k, v_plus_minus_v, v_plus_plus_w)?;
            (c[1], n[1])
        }
        Expression::InducedVMinus { alpha, k, v_plus_minus_v, v_plus_plus_w } => {
            let (c, n) = boundary(alpha, k, v_plus_minus_v, v_plus_plus_w)?;
            (c[2], n[2])
        }
        Expression::F2AtZeroAbs2 { alpha, k } => {
            let p = PhysicalParams::scattering(D::from_f64(alpha), D::from_f64(k))?;
            let f = f2_at_zero(&p)?;
            (Complex::new(f.abs2, D::zero()), Complex::new(f.value.norm_sqr(), D::zero()))
        }
        Expression::DeltaCoefficient { alpha, k, x } => {
            let p = PhysicalParams::scattering(D::from_f64(alpha), D::from_f64(k))?;
            let x = D::from_f64(x);
            let a = delta_correction(&p, x, DeltaForm::Closed, 0)?.coefficient;
            // Re ψ(iy) = Re ψ(1 + iy)
            let two = D::from_f64(2.0);
            let psi = digamma(one + p.w())?.re;
            let bracket = (p.k().re * x * two).ln() + D::euler_gamma() * two + psi;
            (a, Complex::new(-p.alpha() * two * bracket, D::zero()))
        }
        Expression::ABound { alpha, kappa } => {
            let p = PhysicalParams::bound(D::from_f64(alpha), D::from_f64(kappa))?;
            let k = p.k();
            let x = p.x_half();
            let rg = rgamma(p.w());
            let direct = k * D::PI() * D::from_f64(2.0) / p.alpha() * rg * rg * x.exp() / x.sinh();
            (a_r_bound(&p)?, direct)
        }
    })
}

/// Value of `expr` certified to `digits` significant digits.
pub fn reference_eval(expr: &Expression, digits: u32) -> Result<ReferenceValue> {
    if digits == 0 || digits > MAX_REQUEST_DIGITS {
        return Err(Error::Domain(format!("digits must lie in 1..={MAX_REQUEST_DIGITS}")));
    }
    if digits > MAX_CERTIFIED_DIGITS {
        return Err(Error::PrecisionExhausted { requested: digits, available: MAX_CERTIFIED_DIGITS });
    }
    let (a, b) = routes(expr)?;
    if !cx::is_finite(a) || !cx::is_finite(b) {
        return Err(Error::NonFinite { context: format!("reference_eval {:?}", expr) });
    }
    let scale = a.norm();
    let diff = (a - b).norm();
    let floor = D::epsilon().to_f64() * 4.0;
    let error_bound = if scale.is_zero() {
        // exact zeros are certified when both routes agree on them
        if diff.is_zero() { 0.0 } else { f64::INFINITY }
    } else {
        (diff / scale).to_f64() + floor
    };
    let achieved = if error_bound == 0.0 { MAX_CERTIFIED_DIGITS } else { (-error_bound.log10()).floor().clamp(0.0, 31.0) as u32 };
    if achieved < digits {
        return Err(Error::PrecisionExhausted { requested: digits, available: achieved });
    }
    Ok(ReferenceValue { value: a, certified_digits: achieved.min(MAX_CERTIFIED_DIGITS), error_bound })
}
