//! R-case scattering: fundamental pairs, matching at x = 0, coefficients.
//!
//! The right-incident solution is
//! f₂ = 𝒜_R ψ₊^{−V} + ℬ_R ψ₊^{+W} for x > 0 and f₂ = ψ₋^{−V} for x < 0,
//! so R = ℬ_R/𝒜_R and T = 1/𝒜_R. The left-incident case follows from α → −α.

mod boundary;
mod fundamental;
mod params;
mod report;

pub use boundary::{
    boundary_denominator, general_solution_coeffs, solve_boundary_closed, solve_boundary_numeric, solve_boundary_numeric_dd,
    solve_boundary_numeric_with, variation_constants, BoundarySolution, GeneralCoeffs, NumericBoundary,
};
pub use fundamental::{fundamental_solution, origin_structure, small_x_expansion, FundamentalId, OriginStructure, SmallX};
pub use params::{
    BranchParams, Extension, ExtensionParams, MomentumAxis, PhysicalParams, Regime, ScatteringSolution,
};
pub use report::{
    complete_transmission_check, f2_at_zero, impenetrable_case, scattering_report, sweep, CompleteTransmission,
    F2AtZero, Impenetrable, SweepPoint,
};
