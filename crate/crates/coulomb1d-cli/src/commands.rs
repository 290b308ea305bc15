use std::io::Write;

use clap::{Args, ValueEnum};
use coulomb1d::extensions::{delta_correction, real_extension_params, DeltaForm, DEFAULT_ASYMPTOTIC_TERMS, DEFAULT_SERIES_TERMS};
use coulomb1d::oracle::{
    continued_plus_v, identity_suite, ode_residual, reference_eval, Expression, IdentityGrid, ResidualMethod,
};
use coulomb1d::scattering::{
    fundamental_solution, scattering_report, sweep, Extension, ExtensionParams, FundamentalId, PhysicalParams, Regime,
    ScatteringSolution,
};
use coulomb1d::spectrum::bound_spectrum;
use coulomb1d::Complex64;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::output::{write_csv, write_json, ConfigEcho, Cplx, Meta, Sci};
use crate::{Command, Failure, EXIT_FAILED, EXIT_OK};

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "0"),
    };
    let re: f64 = re.parse().map_err(|_| format!("cannot parse '{s}' as RE[,IM]"))?;
    let im: f64 = im.parse().map_err(|_| format!("cannot parse '{s}' as RE[,IM]"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Debug, Clone, Args)]
pub struct ExtensionArgs {
    /// Use the real extension family (the default)
    #[arg(long, conflicts_with_all = ["v_plus_minus_v", "v_plus_plus_w"])]
    pub real_extension: bool,
    /// Strength v+^{-V} as RE[,IM]
    #[arg(long, value_parser = parse_complex, requires = "v_plus_plus_w", allow_hyphen_values = true)]
    pub v_plus_minus_v: Option<Complex64>,
    /// Strength v+^{+W} as RE[,IM]
    #[arg(long, value_parser = parse_complex, requires = "v_plus_minus_v", allow_hyphen_values = true)]
    pub v_plus_plus_w: Option<Complex64>,
}

impl ExtensionArgs {
    fn extension(&self) -> Extension<f64> {
        match (self.v_plus_minus_v, self.v_plus_plus_w) {
            (Some(a), Some(b)) => Extension::Params(ExtensionParams::free(a, b)),
            _ => Extension::Real,
        }
    }
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct ScatterArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub k: f64,
    #[command(flatten)]
    pub ext: ExtensionArgs,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.5)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 5.5)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 11)]
    pub alpha_steps: usize,
    #[arg(long, default_value_t = 0.5)]
    pub k_min: f64,
    #[arg(long, default_value_t = 5.5)]
    pub k_max: f64,
    #[arg(long, default_value_t = 11)]
    pub k_steps: usize,
    /// Allow alpha = 0 rows, reported as free propagation
    #[arg(long)]
    pub free_limit: bool,
    #[command(flatten)]
    pub ext: ExtensionArgs,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct BoundArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 5)]
    pub n_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Closed,
    Series,
    Asymptotic,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct CorrectionArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub k: f64,
    #[arg(long)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = FormArg::Closed)]
    pub form: FormArg,
    /// Terms of the series or asymptotic form
    #[arg(long)]
    pub terms: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Residuals,
    Unitarity,
    Spectrum,
    Reference,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

pub fn dispatch(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Scatter(a) => scatter(a, cfg, out),
        Command::Sweep(a) => run_sweep(a, cfg, out),
        Command::BoundStates(a) => bound_states(a, cfg, out),
        Command::Correction(a) => correction(a, cfg, out),
        Command::Verify(a) => verify(a, cfg, out),
    }
}

fn meta(command: &'static str, cfg: &RunConfig) -> Meta {
    Meta { command, version: env!("CARGO_PKG_VERSION"), config: ConfigEcho::new(cfg) }
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::Regular => "regular",
        Regime::Free => "free",
        Regime::ImpenetrableDegenerate => "impenetrable-degenerate",
        Regime::ImpenetrableVanishingA => "impenetrable-vanishing-a",
    }
}

const ROW_HEADER: [&str; 9] = ["alpha", "k", "re_r", "im_r", "re_t", "im_t", "abs2R", "abs2T", "unitarity_residual"];

fn row(alpha: f64, k: f64, s: &ScatteringSolution<f64>, d: usize) -> Vec<String> {
    [alpha, k, s.r.re, s.r.im, s.t.re, s.t.im, s.abs2_r(), s.abs2_t(), s.unitarity_residual]
        .iter()
        .map(|&x| crate::output::render(x, d))
        .collect()
}

/// A unitarity verdict only applies where the extension is self-adjoint.
fn unitarity_checked(ext: &Extension<f64>, s: &ScatteringSolution<f64>) -> bool {
    matches!(ext, Extension::Real) && matches!(s.regime, Regime::Regular | Regime::Free)
}

#[derive(Serialize)]
struct ScatterData {
    alpha: Sci,
    k: Sci,
    extension: &'static str,
    v_plus_minus_v: Option<Cplx>,
    v_plus_plus_w: Option<Cplx>,
    regime: &'static str,
    a_r: Cplx,
    b_r: Cplx,
    r: Cplx,
    t: Cplx,
    #[serde(rename = "abs2R")]
    abs2_r: Sci,
    #[serde(rename = "abs2T")]
    abs2_t: Sci,
    current: Sci,
    unitarity_residual: Sci,
    unitarity_checked: bool,
    v_minus_minus_v: Cplx,
}

fn scatter(a: &ScatterArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = PhysicalParams::scattering(a.alpha, a.k)?;
    let ext = a.ext.extension();
    let s = scattering_report(&ext, &params)?;
    let d = cfg.digits;
    let checked = unitarity_checked(&ext, &s);
    let pass = !checked || s.unitarity_residual < cfg.unitarity_tol;
    match cfg.format.unwrap_or(Format::Json) {
        Format::Csv => write_csv(out, &ROW_HEADER, &[row(a.alpha, a.k, &s, d)])?,
        Format::Json => {
            let v = match ext {
                Extension::Params(v) => Some(v),
                Extension::Real => real_extension_params(&params).ok(),
            };
            let data = ScatterData {
                alpha: Sci::new(a.alpha, d),
                k: Sci::new(a.k, d),
                extension: if matches!(ext, Extension::Real) { "real" } else { "params" },
                v_plus_minus_v: v.map(|v| Cplx::new(v.v_plus_minus_v, d)),
                v_plus_plus_w: v.map(|v| Cplx::new(v.v_plus_plus_w, d)),
                regime: regime_name(s.regime),
                a_r: Cplx::new(s.a_r, d),
                b_r: Cplx::new(s.b_r, d),
                r: Cplx::new(s.r, d),
                t: Cplx::new(s.t, d),
                abs2_r: Sci::new(s.abs2_r(), d),
                abs2_t: Sci::new(s.abs2_t(), d),
                current: Sci::new(s.current, d),
                unitarity_residual: Sci::new(s.unitarity_residual, d),
                unitarity_checked: checked,
                v_minus_minus_v: Cplx::new(s.v_minus_minus_v, d),
            };
            write_json(out, &meta("scatter", cfg), &data)?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

/// `steps` evenly spaced points from `lo` to `hi`.
pub fn linspace(lo: f64, hi: f64, steps: usize, name: &str) -> Result<Vec<f64>, Failure> {
    if steps == 0 || !(lo <= hi) {
        return Err(Failure::usage(format!("empty {name} range: min {lo}, max {hi}, steps {steps}")));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    let n = (steps - 1) as f64;
    Ok((0..steps).map(|i| if i + 1 == steps { hi } else { lo + (hi - lo) * i as f64 / n }).collect())
}

#[derive(Serialize)]
struct SweepRow {
    alpha: Sci,
    k: Sci,
    regime: &'static str,
    r: Cplx,
    t: Cplx,
    #[serde(rename = "abs2R")]
    abs2_r: Sci,
    #[serde(rename = "abs2T")]
    abs2_t: Sci,
    unitarity_residual: Sci,
}

#[derive(Serialize)]
struct SweepData {
    extension: &'static str,
    rows: Vec<SweepRow>,
    max_unitarity_residual: Sci,
}

fn run_sweep(a: &SweepArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let alphas = linspace(a.alpha_min, a.alpha_max, a.alpha_steps, "alpha")?;
    let ks = linspace(a.k_min, a.k_max, a.k_steps, "k")?;
    let ext = a.ext.extension();
    let points = sweep(&alphas, &ks, &ext, a.free_limit)?;
    let d = cfg.digits;
    let mut worst = 0.0f64;
    for p in &points {
        if unitarity_checked(&ext, &p.solution) {
            worst = worst.max(p.solution.unitarity_residual);
        }
    }
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let rows: Vec<Vec<String>> = points.iter().map(|p| row(p.alpha, p.k, &p.solution, d)).collect();
            write_csv(out, &ROW_HEADER, &rows)?;
        }
        Format::Json => {
            let rows = points
                .iter()
                .map(|p| SweepRow {
                    alpha: Sci::new(p.alpha, d),
                    k: Sci::new(p.k, d),
                    regime: regime_name(p.solution.regime),
                    r: Cplx::new(p.solution.r, d),
                    t: Cplx::new(p.solution.t, d),
                    abs2_r: Sci::new(p.solution.abs2_r(), d),
                    abs2_t: Sci::new(p.solution.abs2_t(), d),
                    unitarity_residual: Sci::new(p.solution.unitarity_residual, d),
                })
                .collect();
            let data = SweepData {
                extension: if matches!(ext, Extension::Real) { "real" } else { "params" },
                rows,
                max_unitarity_residual: Sci::new(worst, d),
            };
            write_json(out, &meta("sweep", cfg), &data)?;
        }
    }
    Ok(if worst < cfg.unitarity_tol { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct StateOut {
    n: u32,
    kappa: Sci,
    energy: Sci,
    analytic_energy: Sci,
    relative_deviation: Sci,
    residual: Sci,
}

#[derive(Serialize)]
struct BoundData {
    alpha: Sci,
    n_max: u32,
    states: Vec<StateOut>,
    explanation: Option<String>,
}

fn bound_states(a: &BoundArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = bound_spectrum(a.alpha, a.n_max)?;
    let d = cfg.digits;
    let mut pass = true;
    let states: Vec<StateOut> = spec
        .states
        .iter()
        .map(|s| {
            let e = -a.alpha * a.alpha / (4.0 * f64::from(s.n) * f64::from(s.n));
            let dev = ((s.energy - e) / e).abs();
            pass &= dev <= cfg.energy_tol;
            StateOut {
                n: s.n,
                kappa: Sci::new(s.kappa, d),
                energy: Sci::new(s.energy, d),
                analytic_energy: Sci::new(e, d),
                relative_deviation: Sci::new(dev, d),
                residual: Sci::new(s.residual, d),
            }
        })
        .collect();
    match cfg.format.unwrap_or(Format::Json) {
        Format::Csv => {
            let rows: Vec<Vec<String>> = states
                .iter()
                .map(|s| {
                    vec![
                        s.n.to_string(),
                        s.kappa.as_str().to_string(),
                        s.energy.as_str().to_string(),
                        s.analytic_energy.as_str().to_string(),
                        s.relative_deviation.as_str().to_string(),
                        s.residual.as_str().to_string(),
                    ]
                })
                .collect();
            write_csv(out, &["n", "kappa", "energy", "analytic_energy", "relative_deviation", "residual"], &rows)?;
        }
        Format::Json => {
            let data = BoundData { alpha: Sci::new(a.alpha, d), n_max: a.n_max, states, explanation: spec.explanation };
            write_json(out, &meta("bound-states", cfg), &data)?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct CorrectionData {
    alpha: Sci,
    k: Sci,
    x: Sci,
    form: &'static str,
    terms: usize,
    coefficient: Cplx,
    tail_bound: Sci,
}

fn correction(a: &CorrectionArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = PhysicalParams::scattering(a.alpha, a.k)?;
    let (form, name, default_terms) = match a.form {
        FormArg::Closed => (DeltaForm::Closed, "closed", 0),
        FormArg::Series => (DeltaForm::Series, "series", DEFAULT_SERIES_TERMS),
        FormArg::Asymptotic => (DeltaForm::Asymptotic, "asymptotic", DEFAULT_ASYMPTOTIC_TERMS),
    };
    let c = delta_correction(&params, a.x, form, a.terms.unwrap_or(default_terms))?;
    let d = cfg.digits;
    match cfg.format.unwrap_or(Format::Json) {
        Format::Csv => {
            let r = |x: f64| crate::output::render(x, d);
            let rows = vec![vec![r(a.alpha), r(a.k), r(a.x), name.to_string(), c.terms.to_string(), r(c.coefficient.re), r(c.coefficient.im), r(c.tail_bound)]];
            write_csv(out, &["alpha", "k", "x", "form", "terms", "re_coefficient", "im_coefficient", "tail_bound"], &rows)?;
        }
        Format::Json => {
            let data = CorrectionData {
                alpha: Sci::new(a.alpha, d),
                k: Sci::new(a.k, d),
                x: Sci::new(a.x, d),
                form: name,
                terms: c.terms,
                coefficient: Cplx::new(c.coefficient, d),
                tail_bound: Sci::new(c.tail_bound, d),
            };
            write_json(out, &meta("correction", cfg), &data)?;
        }
    }
    Ok(EXIT_OK)
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub worst_label: String,
    pub worst_error: f64,
    pub worst_tolerance: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    r: SuiteResult,
    worst_ratio: f64,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            r: SuiteResult { name, checks: 0, failures: 0, worst_label: String::new(), worst_error: 0.0, worst_tolerance: 0.0 },
            worst_ratio: -1.0,
        }
    }

    fn add(&mut self, label: String, error: f64, tol: f64) {
        self.r.checks += 1;
        let ok = error.is_finite() && error <= tol;
        if !ok {
            self.r.failures += 1;
        }
        let ratio = if error.is_finite() { error / tol } else { f64::INFINITY };
        if ratio > self.worst_ratio {
            self.worst_ratio = ratio;
            self.r.worst_label = label;
            self.r.worst_error = error;
            self.r.worst_tolerance = tol;
        }
    }

    fn fail(&mut self, label: String) {
        self.add(label, f64::INFINITY, 0.0);
    }
}

/// The unitarity grid: α ∈ {±5, ±2, ±1, ±0.5}, k ∈ {0.1, 0.3, 1, 3, 10}.
pub const UNITARITY_ALPHAS: [f64; 8] = [-5.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0];
pub const UNITARITY_KS: [f64; 5] = [0.1, 0.3, 1.0, 3.0, 10.0];

fn suite_identities(cfg: &RunConfig) -> SuiteResult {
    let mut t = Tally::new("identities");
    match identity_suite(&IdentityGrid::default(), &cfg.policy) {
        Ok(rep) => {
            for c in rep.checks {
                t.add(format!("{} at alpha={}, k={}, x={}", c.identity, c.alpha, c.k, c.x), c.error, c.tolerance);
            }
        }
        Err(e) => t.fail(format!("suite error: {e}")),
    }
    t.r
}

fn suite_residuals(cfg: &RunConfig) -> SuiteResult {
    let mut t = Tally::new("residuals");
    let params = PhysicalParams::scattering(1.0, 1.0).expect("valid parameters");
    let pol = cfg.policy;
    for id in FundamentalId::ALL {
        let s = if id.is_plus() { 1.0 } else { -1.0 };
        let xs = [0.5 * s, 1.0 * s, 5.0 * s];
        match ode_residual(|x| fundamental_solution(id, &params, x, &pol), &params, &xs, None, ResidualMethod::ValueDifferences) {
            Ok(r) => t.add(format!("{}", id.name()), r.max_relative_residual, cfg.residual_tol),
            Err(e) => t.fail(format!("{}: {e}", id.name())),
        }
    }
    let xs = [0.5, 1.0, 5.0];
    match ode_residual(|x| continued_plus_v(&params, 1, x, &pol), &params, &xs, None, ResidualMethod::ValueDifferences) {
        Ok(r) => t.add("continued psi+V, s = 1".into(), r.max_relative_residual, cfg.residual_tol),
        Err(e) => t.fail(format!("continued psi+V: {e}")),
    }
    t.r
}

fn suite_unitarity(cfg: &RunConfig) -> SuiteResult {
    let mut t = Tally::new("unitarity");
    for &alpha in &UNITARITY_ALPHAS {
        for &k in &UNITARITY_KS {
            let label = format!("alpha={alpha}, k={k}");
            match PhysicalParams::scattering(alpha, k).and_then(|p| scattering_report(&Extension::Real, &p)) {
                Ok(s) => t.add(label, s.unitarity_residual, cfg.unitarity_tol),
                Err(e) => t.fail(format!("{label}: {e}")),
            }
        }
    }
    t.r
}

fn suite_spectrum(cfg: &RunConfig) -> SuiteResult {
    let mut t = Tally::new("spectrum");
    for alpha in [-0.5, -1.0, -3.0, -10.0] {
        match bound_spectrum(alpha, 10) {
            Ok(s) => {
                for st in s.states {
                    let e = -alpha * alpha / (4.0 * f64::from(st.n * st.n));
                    t.add(format!("alpha={alpha}, n={}", st.n), ((st.energy - e) / e).abs(), cfg.energy_tol);
                }
            }
            Err(e) => t.fail(format!("alpha={alpha}: {e}")),
        }
    }
    match bound_spectrum(1.0, 3) {
        Ok(s) => t.add("alpha=1 has no states".into(), s.states.len() as f64, 0.5),
        Err(e) => t.fail(format!("alpha=1: {e}")),
    }
    t.r
}

fn suite_reference(cfg: &RunConfig) -> SuiteResult {
    let mut t = Tally::new("reference");
    let tol = cfg.unitarity_tol;
    for &alpha in &UNITARITY_ALPHAS {
        for &k in &UNITARITY_KS {
            let x = std::f64::consts::PI * alpha / (2.0 * k);
            let label = format!("alpha={alpha}, k={k}");
            let res = PhysicalParams::scattering(alpha, k)
                .and_then(|p| scattering_report(&Extension::Real, &p))
                .and_then(|s| {
                    let t2 = reference_eval(&Expression::Sech2 { x }, 14)?.to_c64().re;
                    let r2 = reference_eval(&Expression::Tanh2 { x }, 14)?.to_c64().re;
                    let rel = |a: f64, b: f64| if b == 0.0 { a.abs() } else { ((a - b) / b).abs() };
                    Ok(rel(s.abs2_t(), t2).max(rel(s.abs2_r(), r2)))
                });
            match res {
                Ok(e) => t.add(label, e, tol),
                Err(e) => t.fail(format!("{label}: {e}")),
            }
        }
    }
    t.r
}

/// Run the selected suites.
pub fn run_suites(suite: Suite, cfg: &RunConfig) -> Vec<SuiteResult> {
    let all: [(Suite, fn(&RunConfig) -> SuiteResult); 5] = [
        (Suite::Identities, suite_identities),
        (Suite::Residuals, suite_residuals),
        (Suite::Unitarity, suite_unitarity),
        (Suite::Spectrum, suite_spectrum),
        (Suite::Reference, suite_reference),
    ];
    all.iter().filter(|(s, _)| suite == Suite::All || *s == suite).map(|(_, f)| f(cfg)).collect()
}

#[derive(Serialize)]
struct SuiteOut {
    name: &'static str,
    passed: bool,
    checks: usize,
    failures: usize,
    worst: String,
    worst_error: Sci,
    worst_tolerance: Sci,
}

#[derive(Serialize)]
struct VerifyData {
    passed: bool,
    suites: Vec<SuiteOut>,
}

fn verify(a: &VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let results = run_suites(a.suite, cfg);
    let passed = results.iter().all(SuiteResult::passed);
    let d = cfg.digits;
    match cfg.format.unwrap_or(Format::Json) {
        Format::Csv => {
            let r = |x: f64| crate::output::render(x, d);
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|s| {
                    vec![
                        s.name.to_string(),
                        s.passed().to_string(),
                        s.checks.to_string(),
                        s.failures.to_string(),
                        s.worst_label.clone(),
                        r(s.worst_error),
                        r(s.worst_tolerance),
                    ]
                })
                .collect();
            write_csv(out, &["suite", "passed", "checks", "failures", "worst", "worst_error", "worst_tolerance"], &rows)?;
        }
        Format::Json => {
            let suites = results
                .iter()
                .map(|s| SuiteOut {
                    name: s.name,
                    passed: s.passed(),
                    checks: s.checks,
                    failures: s.failures,
                    worst: s.worst_label.clone(),
                    worst_error: Sci::new(s.worst_error, d),
                    worst_tolerance: Sci::new(s.worst_tolerance, d),
                })
                .collect();
            write_json(out, &meta("verify", cfg), &VerifyData { passed, suites })?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}
