//! One-dimensional Coulomb scattering u(x) = α/|x| with self-adjoint
//! boundary conditions at the singular point.
//!
//! Units follow ħ²/2m = 1, so the stationary equation reads
//! ψ″ + (k² − α/|x|)ψ = 0. The core is generic over [`scalar::Real`];
//! the aliases below fix the usual `f64` instantiation.

pub mod continuation;
pub mod error;
pub mod extensions;
pub mod oracle;
pub mod scalar;
pub mod scattering;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use scalar::{DoubleDouble, Real};

pub type Complex64 = num_complex::Complex<f64>;

pub type PhysicalParams64 = scattering::PhysicalParams<f64>;
pub type ExtensionParams64 = scattering::ExtensionParams<f64>;
pub type ScatteringSolution64 = scattering::ScatteringSolution<f64>;
pub type BoundState64 = spectrum::BoundState<f64>;
pub type PhysicalParamsDd = scattering::PhysicalParams<DoubleDouble>;
