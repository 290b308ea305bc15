//! Matching at x = 0: variation of constants and the three boundary conditions.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::fundamental::origin_structure;
use super::params::{BranchParams, PhysicalParams};
use crate::continuation::branch_coeffs;
use crate::error::{Error, Result};
use crate::scalar::{cx, DoubleDouble, Real};
use crate::specfun::rgamma;

/// (A₂, B₂) = ((r+s)/(s Q₁), −r/(s Q₂)).
pub fn variation_constants<T: Real>(branch: &BranchParams<T>) -> Result<(Complex<T>, Complex<T>)> {
    if branch.s == 0 {
        return Err(Error::DivisionByZero("winding s"));
    }
    if branch.q1.is_zero() {
        return Err(Error::DivisionByZero("Q1"));
    }
    if branch.q2.is_zero() {
        return Err(Error::DivisionByZero("Q2"));
    }
    let s = T::from_i32(branch.s).unwrap();
    let r = T::from_i32(branch.r).unwrap();
    let a2 = branch.q1.inv() * ((r + s) / s);
    let b2 = -branch.q2.inv() * (r / s);
    Ok((a2, b2))
}

/// Coefficients of ψ₊^{−V}, ψ₊^{+W}, ψ₋^{−V}, ψ₋^{+W} in the general solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralCoeffs<T> {
    pub a_plus_minus: Complex<T>,
    pub a_plus_plus: Complex<T>,
    pub a_minus_minus: Complex<T>,
    pub a_minus_plus: Complex<T>,
}

pub fn general_solution_coeffs<T: Real>(
    alpha2: Complex<T>,
    beta2: Complex<T>,
    branch: &BranchParams<T>,
    params: &PhysicalParams<T>,
) -> Result<GeneralCoeffs<T>> {
    let p = params.p();
    let bs = branch_coeffs(branch.s, p)?;
    let br = branch_coeffs(branch.r, -p)?;
    let brs = branch_coeffs(branch.r + branch.s, -p)?;
    let (q1, q2) = (branch.q1, branch.q2);
    Ok(GeneralCoeffs {
        a_plus_minus: alpha2 + beta2 * bs.b_v,
        a_plus_plus: -beta2 * bs.b_w,
        a_minus_minus: q1 * alpha2 * br.b_v + q2 * beta2 * brs.b_v,
        a_minus_plus: -(q1 * alpha2 * br.b_w + q2 * beta2 * brs.b_w),
    })
}

/// 𝒜_R, ℬ_R and the induced v₋^{−V}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySolution<T> {
    pub a_r: Complex<T>,
    pub b_r: Complex<T>,
    pub v_minus_minus_v: Complex<T>,
}

/// D = 2 + v₊^{−V}(1 + e^{πα/k}) + v₊^{+W}(1 − e^{πα/k}).
pub fn boundary_denominator<T: Real>(a: Complex<T>, b: Complex<T>, params: &PhysicalParams<T>) -> Complex<T> {
    // grouped as 2 + (a + b) + (a − b)e so that a = b does not cancel e
    cx::re(T::lit(2.0)) + (a + b) + (a - b) * params.e_full()
}

fn degenerate<T: Real>(a: Complex<T>, b: Complex<T>, params: &PhysicalParams<T>) -> Option<f64> {
    let d = boundary_denominator(a, b, params);
    let e = params.e_full().norm();
    let scale = T::lit(2.0) + (a.norm() + b.norm()) * (T::one() + e);
    if d.norm() <= T::epsilon() * T::lit(64.0) * scale {
        Some(d.norm().to_f64_lossy())
    } else {
        None
    }
}

/// Closed-form solution of the boundary system.
pub fn solve_boundary_closed<T: Real>(
    v_plus_minus_v: Complex<T>,
    v_plus_plus_w: Complex<T>,
    params: &PhysicalParams<T>,
) -> Result<BoundarySolution<T>> {
    params.nonzero_alpha()?;
    let (a, b) = (v_plus_minus_v, v_plus_plus_w);
    if let Some(d) = degenerate(a, b, params) {
        return Err(Error::DegenerateDenominator(d));
    }
    let one = Complex::<T>::one();
    let k = params.k();
    let alpha = params.alpha();
    let e = params.e_full();
    let d = boundary_denominator(a, b, params);
    let rg = rgamma(params.w());
    let a_r = k * (T::PI() * T::lit(4.0)) * (one + b) / (d * alpha) * rg * rg;
    // (1 + e^{2X}) e^{−X} = 2 cosh X
    let ch = params.x_half().cosh() * T::lit(2.0);
    let b_r = ch * (one + a) / d;
    let num = -cx::re(T::lit(4.0)) - (a + b) * T::lit(3.0) - e * (a - b) - a * b * T::lit(2.0);
    Ok(BoundarySolution { a_r, b_r, v_minus_minus_v: -num / d })
}

/// Numeric solve with its condition estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericBoundary<T> {
    pub solution: BoundarySolution<T>,
    /// (A₁, B₁) of the positive half-axis.
    pub a1: Complex<T>,
    pub b1: Complex<T>,
    /// ∞-norm condition number of the row- and column-equilibrated system.
    pub condition: f64,
}

type Mat3<T> = [[Complex<T>; 3]; 3];

fn inverse3<T: Real>(m: &Mat3<T>) -> Option<Mat3<T>> {
    let c = |i: usize, j: usize| {
        let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
        let (j1, j2) = ((j + 1) % 3, (j + 2) % 3);
        m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]
    };
    let det = m[0][0] * c(0, 0) + m[0][1] * c(0, 1) + m[0][2] * c(0, 2);
    if det.is_zero() || !cx::is_finite(det) {
        return None;
    }
    let mut inv = [[Complex::zero(); 3]; 3];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = c(j, i) / det;
        }
    }
    Some(inv)
}

fn norm_inf<T: Real>(m: &Mat3<T>) -> T {
    m.iter().map(|r| r.iter().fold(T::zero(), |s, z| s + z.norm())).fold(T::zero(), T::max)
}

/// Gaussian elimination with partial pivoting.
fn solve3<T: Real>(mut m: Mat3<T>, mut rhs: [Complex<T>; 3]) -> Option<[Complex<T>; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&a, &b| m[a][col].norm().partial_cmp(&m[b][col].norm()).unwrap())?;
        if m[piv][col].is_zero() {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in col + 1..3 {
            let f = m[r][col] / m[col][col];
            for c in col..3 {
                let t = m[col][c];
                m[r][c] = m[r][c] - f * t;
            }
            let t = rhs[col];
            rhs[r] = rhs[r] - f * t;
        }
    }
    let mut x = [Complex::zero(); 3];
    for r in (0..3).rev() {
        let mut s = rhs[r];
        for c in r + 1..3 {
            s = s - m[r][c] * x[c];
        }
        x[r] = s / m[r][r];
    }
    Some(x)
}

/// Assemble continuity, the ln x balance and the constant balance of ψ′ at
/// x = 0 in (A₁, B₁, 1 − v₋^{−V}) and solve; winding s of the continued term.
///
/// b_V and b_W grow like e^{2π|s|α/2k}, and the B₁ column cancels to that
/// order: in `f64` the result carries a relative error near
/// e^{πα/k}·ε. [`solve_boundary_numeric_dd`] runs the same solve in
/// double-double.
pub fn solve_boundary_numeric_with<T: Real>(
    v_plus_minus_v: Complex<T>,
    v_plus_plus_w: Complex<T>,
    params: &PhysicalParams<T>,
    s: i32,
) -> Result<NumericBoundary<T>> {
    params.nonzero_alpha()?;
    let one = Complex::<T>::one();
    let (a, b) = (one + v_plus_minus_v, one + v_plus_plus_w);
    let bc = branch_coeffs(s, params.p())?;
    let [pv, pw, mv] = origin_structure(params)?;
    // 𝒜 = A₁ + B₁ b_V, ℬ = −B₁ b_W
    let row = |fv: Complex<T>, fw: Complex<T>, fm: Complex<T>| [fv, fv * bc.b_v - fw * bc.b_w, -fm];
    let m: Mat3<T> = [
        [pv.value, pv.value * bc.b_v - pw.value * bc.b_w, Complex::zero()],
        row(a * pv.log_coeff, b * pw.log_coeff, mv.log_coeff),
        row(a * pv.constant, b * pw.constant, mv.constant),
    ];
    let rhs = [mv.value, Complex::zero(), Complex::zero()];

    let mut scaled = m;
    let mut rs = [T::one(); 3];
    for (i, r) in scaled.iter_mut().enumerate() {
        let n = r.iter().fold(T::zero(), |s, z| s.max(z.norm()));
        if n > T::zero() {
            rs[i] = n.recip();
            r.iter_mut().for_each(|z| *z = *z * rs[i]);
        }
    }
    let mut cs = [T::one(); 3];
    for (j, c) in cs.iter_mut().enumerate() {
        let n = scaled.iter().fold(T::zero(), |s, r| s.max(r[j].norm()));
        if n > T::zero() {
            *c = n.recip();
            scaled.iter_mut().for_each(|r| r[j] = r[j] * *c);
        }
    }
    let condition = match inverse3(&scaled) {
        Some(inv) => (norm_inf(&scaled) * norm_inf(&inv)).to_f64_lossy(),
        None => f64::INFINITY,
    };
    if !condition.is_finite() || condition * T::epsilon().to_f64_lossy() > 1e-2 {
        return Err(Error::SingularSystem { condition });
    }
    let srhs = [rhs[0] * rs[0], rhs[1] * rs[1], rhs[2] * rs[2]];
    let y = solve3(scaled, srhs).ok_or(Error::SingularSystem { condition })?;
    let (a1, b1, u) = (y[0] * cs[0], y[1] * cs[1], y[2] * cs[2]);
    let solution = BoundarySolution { a_r: a1 + b1 * bc.b_v, b_r: -b1 * bc.b_w, v_minus_minus_v: one - u };
    Ok(NumericBoundary { solution, a1, b1, condition })
}

/// [`solve_boundary_numeric_with`] at winding s = 1.
pub fn solve_boundary_numeric<T: Real>(
    v_plus_minus_v: Complex<T>,
    v_plus_plus_w: Complex<T>,
    params: &PhysicalParams<T>,
) -> Result<NumericBoundary<T>> {
    solve_boundary_numeric_with(v_plus_minus_v, v_plus_plus_w, params, 1)
}

/// [`solve_boundary_numeric`] carried out in double-double and rounded back.
pub fn solve_boundary_numeric_dd(
    v_plus_minus_v: Complex<f64>,
    v_plus_plus_w: Complex<f64>,
    params: &PhysicalParams<f64>,
) -> Result<NumericBoundary<f64>> {
    let d = |z: Complex<f64>| Complex::new(DoubleDouble::from_f64(z.re), DoubleDouble::from_f64(z.im));
    let p = PhysicalParams::new(DoubleDouble::from_f64(params.alpha()), d(params.k()), params.axis())?;
    let n = solve_boundary_numeric(d(v_plus_minus_v), d(v_plus_plus_w), &p)?;
    let f = |z: Complex<DoubleDouble>| Complex::new(z.re.to_f64(), z.im.to_f64());
    Ok(NumericBoundary {
        solution: BoundarySolution {
            a_r: f(n.solution.a_r),
            b_r: f(n.solution.b_r),
            v_minus_minus_v: f(n.solution.v_minus_minus_v),
        },
        a1: f(n.a1),
        b1: f(n.b1),
        condition: n.condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type C = Complex<f64>;
    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn variation_constants_examples() {
        let one = c(1.0);
        let (a2, b2) = variation_constants(&BranchParams { s: 1, r: 1, q1: one, q2: one }).unwrap();
        assert_eq!((a2, b2), (c(2.0), c(-1.0)));
        let q1 = C::new(0.5, 0.25);
        let (a2, b2) = variation_constants(&BranchParams { s: 3, r: 0, q1, q2: one }).unwrap();
        assert_eq!(a2, q1.inv());
        assert!(b2.is_zero());
        assert!(variation_constants(&BranchParams { s: 0, r: 1, q1: one, q2: one }).is_err());
        assert!(variation_constants(&BranchParams { s: 1, r: 1, q1: C::zero(), q2: one }).is_err());
    }

    #[test]
    fn general_coeffs_trivial_cases() {
        let p = PhysicalParams::scattering(1.0, 1.0).unwrap();
        let br = BranchParams { s: 2, r: -1, q1: c(0.5), q2: c(2.0) };
        let g = general_solution_coeffs(c(1.5), C::zero(), &br, &p).unwrap();
        assert_eq!(g.a_plus_minus, c(1.5));
        assert!(g.a_plus_plus.is_zero());
        let br0 = BranchParams { s: 0, ..br };
        let g = general_solution_coeffs(c(1.5), c(0.7), &br0, &p).unwrap();
        assert!(g.a_plus_plus.is_zero());
    }

    #[test]
    fn frozen_general_coeffs() {
        let p = PhysicalParams::scattering(1.0, 1.0).unwrap();
        let br = BranchParams { s: 1, r: 1, q1: C::new(0.5, 0.1), q2: C::new(-0.3, 0.8) };
        let g = general_solution_coeffs(C::new(0.2, -0.1), C::new(0.4, 0.3), &br, &p).unwrap();
        let expect = [
            C::new(-8.256277053111708, -6.44220778983378),
            C::new(10.93697185661935, 1.713246675851975),
            C::new(-0.8336395098590989, 0.6114180151465781),
            C::new(0.7084206650146697, -0.08966616996332714),
        ];
        let got = [g.a_plus_minus, g.a_plus_plus, g.a_minus_minus, g.a_minus_plus];
        for (g, e) in got.iter().zip(expect) {
            assert!(cx::rel(*g, e) < 1e-12, "{g} vs {e}");
        }
    }

    #[test]
    fn not_all_parameters_vanish() {
        for &k in &[0.1, 0.7, 2.0, 9.0] {
            for &alpha in &[-2.0, 0.5, 3.0] {
                let p = PhysicalParams::scattering(alpha, k).unwrap();
                let s = solve_boundary_closed(C::zero(), C::zero(), &p).unwrap();
                // D = 2 at a = b = 0
                assert!((s.v_minus_minus_v - c(2.0)).norm() < 1e-13, "{}", s.v_minus_minus_v);
            }
        }
    }

    #[test]
    fn vanishing_a_family() {
        let p = PhysicalParams::scattering(1.3, 0.8).unwrap();
        let s = solve_boundary_closed(c(0.4), c(-1.0), &p).unwrap();
        assert!(s.a_r.is_zero());
    }

    #[test]
    fn degenerate_denominator_detected() {
        let p = PhysicalParams::scattering(1.0, 1.0).unwrap();
        let e = p.e_full().re;
        let b = 0.3;
        let a = -(2.0 + (1.0 - e) * b) / (1.0 + e);
        assert!(matches!(solve_boundary_closed(c(a), c(b), &p), Err(Error::DegenerateDenominator(_))));
        assert!(matches!(solve_boundary_closed(c(0.1), c(0.1), &PhysicalParams::scattering(0.0, 1.0).unwrap()), Err(Error::AlphaZero)));
    }

    #[test]
    fn frozen_generic_triple() {
        let p = PhysicalParams::scattering(1.0, 1.0).unwrap();
        let s = solve_boundary_closed(c(0.2), c(-0.3), &p).unwrap();
        assert!(cx::rel(s.a_r, C::new(-0.2112467588187004, -0.1121659737699456)) < 1e-13, "{}", s.a_r);
        assert!(cx::rel(s.b_r, c(0.4470581681669325)) < 1e-13);
        assert!(cx::rel(s.v_minus_minus_v, c(1.1247183970285835)) < 1e-13);
    }

    #[test]
    fn numeric_matches_closed_and_is_winding_free() {
        let p = PhysicalParams::scattering(-1.0, 2.0).unwrap();
        let cl = solve_boundary_closed(c(-0.5), c(0.5), &p).unwrap();
        for s in [1, -1, 2] {
            let n = solve_boundary_numeric_with(c(-0.5), c(0.5), &p, s).unwrap();
            assert!(cx::rel(n.solution.a_r, cl.a_r) < 1e-11, "s = {s}");
            assert!(cx::rel(n.solution.b_r, cl.b_r) < 1e-11);
            assert!(cx::rel(n.solution.v_minus_minus_v, cl.v_minus_minus_v) < 1e-11);
            assert!(n.condition < 1e6);
        }
        assert!(matches!(solve_boundary_numeric_with(c(-0.5), c(0.5), &p, 0), Err(Error::SingularSystem { .. })));
    }

    #[test]
    fn large_coupling_over_momentum() {
        // b_V ~ e^{47} here; f64 keeps nothing
        let p = PhysicalParams::scattering(3.0, 0.2).unwrap();
        let cl = solve_boundary_closed(c(0.2), c(-0.2), &p).unwrap();
        let n = solve_boundary_numeric_dd(c(0.2), c(-0.2), &p).unwrap();
        assert!(cx::rel(n.solution.a_r, cl.a_r) < 1e-12);
        assert!(cx::rel(n.solution.b_r, cl.b_r) < 1e-12);
        let bc = branch_coeffs(1, p.p()).unwrap();
        assert!(cx::rel(n.a1 + n.b1 * bc.b_v, n.solution.a_r) < 1e-12);
        assert!(cx::rel(-n.b1 * bc.b_w, n.solution.b_r) < 1e-12);
    }

    proptest! {
        #[test]
        fn numeric_and_closed_agree(a in -0.9f64..0.9, b in -0.9f64..0.9, ai in -0.5f64..0.5,
                                    alpha in prop_oneof![-3.0f64..-0.2, 0.2f64..3.0], k in 0.2f64..5.0) {
            let p = PhysicalParams::scattering(alpha, k).unwrap();
            let (va, vb) = (C::new(a, ai), c(b));
            if let Ok(cl) = solve_boundary_closed(va, vb, &p) {
                let n = solve_boundary_numeric(va, vb, &p).unwrap();
                let tol = 1e-13 * n.condition.max(1.0);
                prop_assert!((n.solution.a_r - cl.a_r).norm() <= tol * (cl.a_r.norm() + cl.b_r.norm()));
                prop_assert!((n.solution.b_r - cl.b_r).norm() <= tol * (cl.a_r.norm() + cl.b_r.norm()));
            }
        }
    }
}
