use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{cx, Real};

/// Which ray the momentum lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentumAxis {
    /// arg 2k = 0, real k > 0.
    Scattering,
    /// arg 2k = π/2, k = iκ with κ > 0.
    Bound,
}

/// Coupling α of u(x) = α/|x| and the momentum k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T> {
    alpha: T,
    k: Complex<T>,
    axis: MomentumAxis,
}

impl<T: Real> PhysicalParams<T> {
    pub fn new(alpha: T, k: Complex<T>, axis: MomentumAxis) -> Result<Self> {
        if !alpha.is_finite() || !cx::is_finite(k) {
            return Err(Error::NonFinite { context: "physical parameters".into() });
        }
        let ok = match axis {
            MomentumAxis::Scattering => k.im.is_zero() && k.re > T::zero(),
            MomentumAxis::Bound => k.re.is_zero() && k.im > T::zero(),
        };
        if !ok {
            return Err(Error::Domain(format!("momentum {} does not lie on the {:?} axis", cx::to_string(k), axis)));
        }
        Ok(PhysicalParams { alpha, k: cx::canon(k), axis })
    }

    /// Real momentum k > 0.
    pub fn scattering(alpha: T, k: T) -> Result<Self> {
        Self::new(alpha, cx::re(k), MomentumAxis::Scattering)
    }

    /// k = iκ on the positive imaginary axis.
    pub fn bound(alpha: T, kappa: T) -> Result<Self> {
        Self::new(alpha, Complex::new(T::zero(), kappa), MomentumAxis::Bound)
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn k(&self) -> Complex<T> {
        self.k
    }

    pub fn axis(&self) -> MomentumAxis {
        self.axis
    }

    pub fn arg2k(&self) -> T {
        match self.axis {
            MomentumAxis::Scattering => T::zero(),
            MomentumAxis::Bound => T::FRAC_PI_2(),
        }
    }

    pub(crate) fn nonzero_alpha(&self) -> Result<()> {
        if self.alpha.is_zero() {
            Err(Error::AlphaZero)
        } else {
            Ok(())
        }
    }

    pub(crate) fn real_k(&self) -> Result<T> {
        match self.axis {
            MomentumAxis::Scattering => Ok(self.k.re),
            MomentumAxis::Bound => Err(Error::Domain("operation requires real k > 0".into())),
        }
    }

    /// Whittaker index p = −iα/2k on the positive half-axis.
    pub fn p(&self) -> Complex<T> {
        -cx::i::<T>() * self.alpha / (self.k * T::lit(2.0))
    }

    /// w = iα/2k, the argument of Γ in the closed forms.
    pub fn w(&self) -> Complex<T> {
        -self.p()
    }

    /// X = πα/2k.
    pub fn x_half(&self) -> Complex<T> {
        cx::re(T::PI() * self.alpha) / (self.k * T::lit(2.0))
    }

    /// e^{πα/4k}.
    pub fn e_quarter(&self) -> Complex<T> {
        (self.x_half() * T::lit(0.5)).exp()
    }

    /// e^{πα/k}.
    pub fn e_full(&self) -> Complex<T> {
        (self.x_half() * T::lit(2.0)).exp()
    }
}

/// Sheet indices and the jump factors at x = 0 of the general solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchParams<T> {
    pub s: i32,
    pub r: i32,
    pub q1: Complex<T>,
    pub q2: Complex<T>,
}

/// The four strengths v_i of the singular additions v_i ψ_i′/ψ_i δ(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionParams<T> {
    pub v_plus_minus_v: Complex<T>,
    pub v_plus_plus_w: Complex<T>,
    pub v_minus_minus_v: Complex<T>,
    /// Carried for completeness; no boundary condition involves it.
    pub v_minus_plus_w: Complex<T>,
}

impl<T: Real> ExtensionParams<T> {
    /// The two free parameters; the remaining ones start at zero.
    pub fn free(v_plus_minus_v: Complex<T>, v_plus_plus_w: Complex<T>) -> Self {
        ExtensionParams {
            v_plus_minus_v,
            v_plus_plus_w,
            v_minus_minus_v: Complex::zero(),
            v_minus_plus_w: Complex::zero(),
        }
    }
}

/// How the self-adjoint extension is selected for a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extension<T> {
    /// The real family; parameters follow from k.
    Real,
    Params(ExtensionParams<T>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Regular,
    /// α = 0: exact free propagation.
    Free,
    /// Boundary denominator vanishes: T = 0, |R| finite.
    ImpenetrableDegenerate,
    /// v₊^{+W} = −1 makes 𝒜_R vanish; R is reported infinite and T = 0.
    ImpenetrableVanishingA,
}

/// R-case scattering data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringSolution<T> {
    pub a_r: Complex<T>,
    pub b_r: Complex<T>,
    pub r: Complex<T>,
    pub t: Complex<T>,
    /// k(|ℬ_R|² − |𝒜_R|²).
    pub current: T,
    /// |1 − |R|² − |T|²|, i.e. ||𝒜_R|² − |ℬ_R|² − 1| / |𝒜_R|².
    pub unitarity_residual: T,
    pub v_minus_minus_v: Complex<T>,
    pub regime: Regime,
}

impl<T: Real> ScatteringSolution<T> {
    pub fn abs2_r(&self) -> T {
        self.r.norm_sqr()
    }

    pub fn abs2_t(&self) -> T {
        self.t.norm_sqr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_invariants() {
        assert!(PhysicalParams::scattering(1.0, 0.5).is_ok());
        assert!(PhysicalParams::scattering(1.0, -0.5).is_err());
        assert!(PhysicalParams::scattering(1.0, 0.0).is_err());
        assert!(PhysicalParams::bound(-1.0, 0.5).is_ok());
        assert!(PhysicalParams::new(1.0, Complex::new(0.3, 0.1), MomentumAxis::Bound).is_err());
        assert!(PhysicalParams::scattering(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn derived_indices() {
        let pp = PhysicalParams::scattering(1.0, 0.5).unwrap();
        assert_eq!(pp.p(), Complex::new(0.0, -1.0));
        assert!((pp.x_half().re - core::f64::consts::PI).abs() < 1e-15);
        let pb = PhysicalParams::bound(-1.0, 0.5).unwrap();
        assert!((pb.p() - Complex::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(pb.arg2k(), core::f64::consts::FRAC_PI_2);
    }
}
