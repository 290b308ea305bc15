//! Analytic continuation of V_{p,m} and W_{p,m} around z = 0.
//!
//! Winding z ↦ z e^{2πis} mixes the pair linearly. For m = 1/2 the mixing
//! matrix is I + sN with N nilpotent, so the windings form a group.

use core::ops::Mul;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{cx, Real};
use crate::specfun::{gamma, rgamma};

pub const MAX_WINDING: i32 = 8;

/// Distance from m = 1/2 below which the generic formulas are abandoned.
pub const HALF_INTEGER_GUARD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuationCoeffs<T> {
    pub b_v: Complex<T>,
    pub b_w: Complex<T>,
    pub s: i32,
    pub p: Complex<T>,
}

/// Which side of the real axis the base point z lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlane {
    /// Im z < 0; the physical case z = −2ikx with k, x > 0.
    Lower,
    Upper,
}

impl HalfPlane {
    pub fn of<T: Real>(z: Complex<T>) -> Self {
        if crate::specfun::whittaker::half_plane_sign(z) > T::zero() {
            HalfPlane::Upper
        } else {
            HalfPlane::Lower
        }
    }

    fn sign<T: Real>(self) -> T {
        match self {
            HalfPlane::Lower => -T::one(),
            HalfPlane::Upper => T::one(),
        }
    }
}

/// Rows map (V, W) at z to V and W at z e^{2πis}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuationMatrix<T> {
    pub entries: [[Complex<T>; 2]; 2],
    pub s: i32,
    /// Set when m was within the half-integer guard and the limit was used.
    pub limit_substituted: bool,
}

impl<T: Real> ContinuationMatrix<T> {
    pub fn identity(s: i32) -> Self {
        let (o, z) = (Complex::one(), Complex::zero());
        ContinuationMatrix { entries: [[o, z], [z, o]], s, limit_substituted: false }
    }

    pub fn v_row(&self) -> [Complex<T>; 2] {
        self.entries[0]
    }

    pub fn w_row(&self) -> [Complex<T>; 2] {
        self.entries[1]
    }

    /// Continued (V, W) from their values at the base point.
    pub fn apply(&self, v: Complex<T>, w: Complex<T>) -> (Complex<T>, Complex<T>) {
        let e = &self.entries;
        (e[0][0] * v + e[0][1] * w, e[1][0] * v + e[1][1] * w)
    }

    /// Max-entry distance.
    pub fn distance(&self, other: &Self) -> T {
        let mut d = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        d
    }
}

impl<T: Real> Mul for ContinuationMatrix<T> {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = &self.entries;
        let c = &b.entries;
        let mut e = [[Complex::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                e[i][j] = a[i][0] * c[0][j] + a[i][1] * c[1][j];
            }
        }
        ContinuationMatrix { entries: e, s: self.s + b.s, limit_substituted: self.limit_substituted || b.limit_substituted }
    }
}

fn check_winding(s: i32) -> Result<()> {
    if s.abs() > MAX_WINDING {
        return Err(Error::Domain(format!("winding |s| = {} exceeds {}", s.abs(), MAX_WINDING)));
    }
    Ok(())
}

/// b_s^V = (s+1) − s e^{2iπp}, b_s^W = −2iπs e^{iπp} / (Γ(p)Γ(1+p)).
pub fn branch_coeffs<T: Real>(s: i32, p: Complex<T>) -> Result<ContinuationCoeffs<T>> {
    check_winding(s)?;
    let sf = T::from_i32(s).unwrap();
    let i = cx::i::<T>();
    let two_pi = T::PI() + T::PI();
    let b_v = cx::re(sf + T::one()) - (i * p * two_pi).exp() * sf;
    let b_w = -(i * two_pi * sf) * (i * p * T::PI()).exp() * rgamma(p) * rgamma(p + T::one());
    Ok(ContinuationCoeffs { b_v, b_w, s, p })
}

fn half_limit<T: Real>(s: i32, p: Complex<T>, half: HalfPlane) -> ContinuationMatrix<T> {
    let sf = T::from_i32(s).unwrap();
    let one = Complex::<T>::one();
    let i = cx::i::<T>();
    let pi = T::PI();
    let eps: T = half.sign();
    // e^{∓iπp} with the sign opposite to the half-plane
    let ph = (-i * p * pi * eps).exp();
    let two_pi_is = i * (pi + pi) * sf;
    let b_v = match half {
        HalfPlane::Lower => one + (one - ph * ph) * sf,
        HalfPlane::Upper => one + (ph * ph - one) * sf,
    };
    let b_w = -two_pi_is * ph * rgamma(p) * rgamma(p + one);
    let r1 = rgamma(one - p);
    let w_v = two_pi_is * p * ph * r1 * r1;
    let w_w = one - two_pi_is * ph * rgamma(one + p) * rgamma(-p);
    ContinuationMatrix { entries: [[b_v, b_w], [w_v, w_w]], s, limit_substituted: false }
}

fn generic<T: Real>(s: i32, p: Complex<T>, m: Complex<T>, half: HalfPlane) -> Result<ContinuationMatrix<T>> {
    let halfc = cx::re(T::lit(0.5));
    let two_m = m * T::lit(2.0);
    let i = cx::i::<T>();
    let pi = T::PI();
    let eps: T = half.sign();
    let g_minus = gamma(-two_m)?;
    let g_plus = gamma(two_m)?;
    // (V, W)ᵀ = C (M_{p,m}, M_{p,−m})ᵀ
    let c = [
        [g_minus * rgamma(halfc - m + p), g_plus * (i * pi * two_m * eps).exp() * rgamma(halfc + m + p)],
        [g_minus * rgamma(halfc - m - p), g_plus * rgamma(halfc + m - p)],
    ];
    let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    if det.norm() == T::zero() || !cx::is_finite(det) {
        return Err(Error::SingularSystem { condition: f64::INFINITY });
    }
    let sf = T::from_i32(s).unwrap();
    let sign = if s % 2 == 0 { T::one() } else { -T::one() };
    let d0 = (i * pi * two_m * sf).exp() * sign;
    let d1 = (-i * pi * two_m * sf).exp() * sign;
    let inv = [[c[1][1] / det, -c[0][1] / det], [-c[1][0] / det, c[0][0] / det]];
    let mut e = [[Complex::zero(); 2]; 2];
    for r in 0..2 {
        for col in 0..2 {
            e[r][col] = c[r][0] * d0 * inv[0][col] + c[r][1] * d1 * inv[1][col];
        }
    }
    Ok(ContinuationMatrix { entries: e, s, limit_substituted: false })
}

/// Continuation matrix for a base point in the lower half-plane.
pub fn continuation_matrix<T: Real>(s: i32, p: Complex<T>, m: Complex<T>) -> Result<ContinuationMatrix<T>> {
    continuation_matrix_in(s, p, m, HalfPlane::Lower)
}

pub fn continuation_matrix_in<T: Real>(
    s: i32,
    p: Complex<T>,
    m: Complex<T>,
    half: HalfPlane,
) -> Result<ContinuationMatrix<T>> {
    check_winding(s)?;
    if s == 0 {
        return Ok(ContinuationMatrix::identity(0));
    }
    let dm = (m - cx::re(T::lit(0.5))).norm().to_f64_lossy();
    if dm == 0.0 {
        return Ok(half_limit(s, p, half));
    }
    if dm < HALF_INTEGER_GUARD {
        let mut r = half_limit(s, p, half);
        r.limit_substituted = true;
        return Ok(r);
    }
    let two_m = m * T::lit(2.0);
    if two_m.im.is_zero() && two_m.re.fract().is_zero() {
        return Err(Error::ParameterRestriction {
            function: "continuation_matrix",
            reason: "only m = 1/2 is supported among half-integer indices".into(),
        });
    }
    generic(s, p, m, half)
}
