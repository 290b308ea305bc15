//! Independent checks: ODE residuals, identity suites and a double-double
//! reference evaluator.

pub mod identities;
pub mod reference;
pub mod residual;

pub use identities::{identity_suite, IdentityCheck, IdentityGrid, IdentityReport};
pub use reference::{reference_eval, Expression, ReferenceValue, MAX_CERTIFIED_DIGITS};
pub use residual::{continued_plus_v, ode_residual, value_only, ResidualMethod, ResidualReport};
