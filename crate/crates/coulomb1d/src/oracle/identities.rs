use num_complex::Complex;
use rayon::prelude::*;

use crate::error::Result;
use crate::scalar::cx;
use crate::scattering::{fundamental_solution, FundamentalId, PhysicalParams};
use crate::specfun::{kummer_m, kummer_m_prime, kummer_n, tricomi_u, tricomi_u_prime, vee, vee_prime, EvalPolicy};

type C = Complex<f64>;

/// Tolerance for the Wronskian and conjugation identities.
pub const IDENTITY_TOL: f64 = 1e-8;
/// |ratio − 1| allowed at kx = 100 for |α/2k| ≤ 1; the first correction grows
/// like (α/2k)², so the bound is scaled by it beyond that.
pub const ASYMPTOTIC_TOL: f64 = 0.02;
/// |z| up to which the {M, N} pair is checked.
pub const KUMMER_RADIUS: f64 = 16.0;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityGrid {
    pub alphas: Vec<f64>,
    pub ks: Vec<f64>,
    /// Positive abscissae; the negative side uses −x.
    pub xs: Vec<f64>,
}

impl Default for IdentityGrid {
    /// Twenty (k, x) points for each of two couplings.
    fn default() -> Self {
        IdentityGrid { alphas: vec![-1.5, 0.8], ks: vec![0.3, 1.0, 4.0, 10.0], xs: vec![0.2, 1.0, 3.5, 8.0, 20.0] }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub alpha: f64,
    pub k: f64,
    pub x: f64,
    /// Relative error, or absolute error over its scale for vanishing identities.
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub passed: bool,
    /// Largest error/tolerance ratio.
    pub worst: Option<IdentityCheck>,
}

fn check(identity: &'static str, alpha: f64, k: f64, x: f64, error: f64, tolerance: f64) -> IdentityCheck {
    IdentityCheck { identity, alpha, k, x, error, tolerance, passed: error.is_finite() && error <= tolerance }
}

fn wr(f: (C, C), g: (C, C)) -> C {
    f.0 * g.1 - f.1 * g.0
}

fn point_checks(alpha: f64, k: f64, x: f64, pol: &EvalPolicy) -> Result<Vec<IdentityCheck>> {
    let p = PhysicalParams::scattering(alpha, k)?;
    let ev = |id: FundamentalId, x: f64| fundamental_solution(id, &p, x, pol).map(|s| (s.value, s.deriv));
    let conj = |f: (C, C)| (f.0.conj(), f.1.conj());
    let two_ik = C::new(0.0, 2.0 * k);
    let (pw, pv) = (ev(FundamentalId::PlusW, x)?, ev(FundamentalId::PlusV, x)?);
    let (mw, mv) = (ev(FundamentalId::MinusW, -x)?, ev(FundamentalId::MinusV, -x)?);
    let mut out = vec![
        check("W{psi+W, psi+V} = -2ik", alpha, k, x, cx::rel(wr(pw, pv), -two_ik), IDENTITY_TOL),
        check("W{psi-W, psi-V} = -2ik", alpha, k, -x, cx::rel(wr(mw, mv), -two_ik), IDENTITY_TOL),
        check("W{psi+V*, psi+V} = -2ik", alpha, k, x, cx::rel(wr(conj(pv), pv), -two_ik), IDENTITY_TOL),
        check("W{psi+W*, psi+W} = 2ik", alpha, k, x, cx::rel(wr(conj(pw), pw), two_ik), IDENTITY_TOL),
        check("W{psi+V*, psi+W} = 0", alpha, k, x, wr(conj(pv), pw).norm() / (2.0 * k), IDENTITY_TOL),
        check("psi+V* = psi+W", alpha, k, x, cx::rel(pv.0.conj(), pw.0), IDENTITY_TOL),
    ];

    // confluent pairs at the physical a = 1 − p, z = −2ikx
    let z = C::new(0.0, -2.0 * k * x);
    let a = C::new(1.0, 0.0) - p.p();
    let c2 = C::new(2.0, 0.0);
    let u = tricomi_u(a, 2, z, pol)?;
    let up = tricomi_u_prime(a, 2, z, pol)?;
    let v = vee(a, 2, z, pol)?;
    let vp = vee_prime(a, 2, z, pol)?;
    let eps = if z.im > 0.0 { 1.0 } else { -1.0 };
    let expect = (C::i() * core::f64::consts::PI * eps * (c2 - a)).exp() * z.exp() * cx::powi(z, -2);
    out.push(check("W{U, V} = e^{i eps pi (c-a)} e^z z^-c", alpha, k, x, cx::rel(u * vp - up * v, expect), IDENTITY_TOL));

    // the Kummer series cancels badly far out; the pair is checked near the origin only
    if z.norm() <= KUMMER_RADIUS {
        let one = C::new(1.0, 0.0);
        let c = C::new(0.5, 0.0);
        let m = kummer_m(a, c, z, pol)?;
        let mp = kummer_m_prime(a, c, z, pol)?;
        let n = kummer_n(a, c, z, pol)?;
        // N′ = (1−c) z^{−c} M(1+a−c, 2−c, z) + z^{1−c} M′(1+a−c, 2−c, z)
        let (a2, c2n) = (one + a - c, C::new(2.0, 0.0) - c);
        let np = (one - c) * cx::pow(z, -c) * kummer_m(a2, c2n, z, pol)? + cx::pow(z, one - c) * kummer_m_prime(a2, c2n, z, pol)?;
        let expect = (one - c) * z.exp() * cx::pow(z, -c);
        out.push(check("W{M, N} = (1-c) e^z z^-c", alpha, k, x, cx::rel(m * np - mp * n, expect), IDENTITY_TOL));
    }
    Ok(out)
}

/// ψ divided by its plane-wave form at |x| = kx/k; on x < 0 the logarithm is
/// ln(2k|x|) − iπ.
fn asymptotic_ratio(id: FundamentalId, p: &PhysicalParams<f64>, kx: f64, pol: &EvalPolicy) -> Result<f64> {
    let k = p.k().re;
    let alpha = p.alpha();
    let x = if id.is_plus() { kx / k } else { -kx / k };
    let v = fundamental_solution(id, p, x, pol)?.value;
    let log = if x > 0.0 { C::new((2.0 * kx).ln(), 0.0) } else { C::new((2.0 * kx).ln(), -core::f64::consts::PI) };
    let sign = match id {
        FundamentalId::PlusW | FundamentalId::MinusW => 1.0,
        FundamentalId::PlusV | FundamentalId::MinusV => -1.0,
    };
    let phase = k * x - x.signum() * alpha / (2.0 * k) * log;
    Ok((v / (C::i() * sign * phase).exp() - 1.0).norm())
}

fn asymptotic_checks(alpha: f64, k: f64, pol: &EvalPolicy) -> Result<Vec<IdentityCheck>> {
    let p = PhysicalParams::scattering(alpha, k)?;
    let names = ["asymptotic psi+W", "asymptotic psi+V", "asymptotic psi-W", "asymptotic psi-V"];
    let mut out = Vec::new();
    for (id, name) in FundamentalId::ALL.into_iter().zip(names) {
        let e30 = asymptotic_ratio(id, &p, 30.0, pol)?;
        let e100 = asymptotic_ratio(id, &p, 100.0, pol)?;
        let y = alpha / (2.0 * k);
        out.push(check(name, alpha, k, 100.0 / k, e100, ASYMPTOTIC_TOL * (y * y).max(1.0)));
        // O(1/x): the error falls by about 100/30 between the two points
        let decay = e30 / e100;
        let off = (decay / (10.0 / 3.0) - 1.0).abs();
        out.push(check(name, alpha, k, 30.0 / k, off, 0.25));
    }
    Ok(out)
}

/// Wronskians, conjugation, the confluent-pair identities and plane-wave
/// limits over the grid.
pub fn identity_suite(grid: &IdentityGrid, pol: &EvalPolicy) -> Result<IdentityReport> {
    let mut tasks = Vec::new();
    for &a in &grid.alphas {
        for &k in &grid.ks {
            tasks.push((a, k, None));
            for &x in &grid.xs {
                tasks.push((a, k, Some(x)));
            }
        }
    }
    let chunks = tasks
        .par_iter()
        .map(|&(a, k, x)| match x {
            Some(x) => point_checks(a, k, x, pol),
            None => asymptotic_checks(a, k, pol),
        })
        .collect::<Result<Vec<_>>>()?;
    let checks: Vec<IdentityCheck> = chunks.into_iter().flatten().collect();
    let passed = checks.iter().all(|c| c.passed);
    let worst = checks
        .iter()
        .max_by(|a, b| (a.error / a.tolerance).partial_cmp(&(b.error / b.tolerance)).unwrap_or(core::cmp::Ordering::Greater))
        .cloned();
    Ok(IdentityReport { checks, passed, worst })
}
