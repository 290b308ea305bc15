//! Run configuration: defaults, then a `key = value` file, then flags.

use std::fmt;
use std::path::Path;

use coulomb1d::specfun::EvalPolicy;
use serde::Serialize;

/// Environment variable naming the config file when `--config` is absent.
pub const CONFIG_ENV: &str = "COULOMB1D_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub unitarity_tol: f64,
    pub residual_tol: f64,
    /// Relative tolerance on located bound-state energies.
    pub energy_tol: f64,
    /// `None` leaves the choice to the command.
    pub format: Option<Format>,
    /// Significant digits of every reported number.
    pub digits: usize,
    pub policy: EvalPolicy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            unitarity_tol: 1e-10,
            residual_tol: 1e-6,
            energy_tol: 1e-8,
            format: None,
            digits: 17,
            policy: EvalPolicy::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError(format!("{key}: cannot parse '{value}'")))
}

impl RunConfig {
    /// Set one key; unknown keys are errors.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "unitarity_tol" => self.unitarity_tol = num(key, value)?,
            "residual_tol" => self.residual_tol = num(key, value)?,
            "energy_tol" => self.energy_tol = num(key, value)?,
            "digits" => self.digits = num(key, value)?,
            "format" => {
                self.format = Some(match value {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    _ => return Err(ConfigError(format!("format: expected json or csv, got '{value}'"))),
                })
            }
            "series_max_terms" => self.policy.series_max_terms = num(key, value)?,
            "series_rel_tol" => self.policy.series_rel_tol = num(key, value)?,
            "asymptotic_threshold" => self.policy.asymptotic_threshold = num(key, value)?,
            "log_expansion_threshold" => self.policy.log_expansion_threshold = num(key, value)?,
            "min_accuracy" => self.policy.min_accuracy = num(key, value)?,
            _ => return Err(ConfigError(format!("unknown configuration key '{key}'"))),
        }
        Ok(())
    }

    /// Apply `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(ConfigError(format!("line {}: expected key = value", n + 1)));
            };
            self.set(k.trim(), v.trim()).map_err(|e| ConfigError(format!("line {}: {}", n + 1, e.0)))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        self.apply_text(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, v) in [("unitarity_tol", self.unitarity_tol), ("residual_tol", self.residual_tol), ("energy_tol", self.energy_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError(format!("{name} must be positive")));
            }
        }
        if !(1..=17).contains(&self.digits) {
            return Err(ConfigError("digits must lie in 1..=17".into()));
        }
        self.policy.validate().map_err(|e| ConfigError(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::default();
        assert_eq!((c.unitarity_tol, c.residual_tol), (1e-10, 1e-6));
        assert!(c.validate().is_ok());
    }

    #[test]
    fn parses_text() {
        let mut c = RunConfig::default();
        c.apply_text("# tolerances\nunitarity_tol = 1e-9\n\nformat=csv\n digits = 12 \nseries_max_terms = 800\n").unwrap();
        assert_eq!(c.unitarity_tol, 1e-9);
        assert_eq!(c.format, Some(Format::Csv));
        assert_eq!(c.digits, 12);
        assert_eq!(c.policy.series_max_terms, 800);
    }

    #[test]
    fn rejects_bad_input() {
        let mut c = RunConfig::default();
        assert!(c.apply_text("nonsense").unwrap_err().0.contains("line 1"));
        assert!(c.apply_text("colour = blue").is_err());
        assert!(c.apply_text("digits = many").is_err());
        c.residual_tol = 0.0;
        assert!(c.validate().is_err());
        let c = RunConfig { digits: 18, ..RunConfig::default() };
        assert!(c.validate().is_err());
    }
}
