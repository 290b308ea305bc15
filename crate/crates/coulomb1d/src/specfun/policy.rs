use crate::error::{Error, Result};
use crate::scalar::Real;

/// Region-switching controls for the confluent kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy {
    pub series_max_terms: usize,
    /// Termination threshold relative to the partial sum.
    pub series_rel_tol: f64,
    /// |z| at or above which the asymptotic series is tried first.
    pub asymptotic_threshold: f64,
    /// |z| below which the logarithmic series runs at base precision.
    pub log_expansion_threshold: f64,
    /// Evaluations whose error estimate exceeds this are rejected.
    pub min_accuracy: f64,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        Self::for_scalar::<f64>()
    }
}

impl EvalPolicy {
    pub fn for_scalar<T: Real>() -> Self {
        EvalPolicy {
            series_max_terms: 500,
            series_rel_tol: T::epsilon().to_f64_lossy() / 2.0,
            asymptotic_threshold: 30.0,
            log_expansion_threshold: 8.0,
            min_accuracy: 1e-10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.series_rel_tol > 0.0) {
            return Err(Error::Domain("series_rel_tol must be positive".into()));
        }
        if !(self.log_expansion_threshold < self.asymptotic_threshold) {
            return Err(Error::Domain(
                "log_expansion_threshold must be below asymptotic_threshold".into(),
            ));
        }
        if self.series_max_terms == 0 {
            return Err(Error::Domain("series_max_terms must be at least 1".into()));
        }
        if !(self.min_accuracy > 0.0) {
            return Err(Error::Domain("min_accuracy must be positive".into()));
        }
        Ok(())
    }

    /// Tolerance actually reachable in scalar `S`.
    pub(crate) fn tol_for<S: Real>(&self) -> f64 {
        self.series_rel_tol.max(S::epsilon().to_f64_lossy() / 4.0)
    }

    /// The same policy with the tolerance tightened to the precision of `S`.
    pub(crate) fn widened<S: Real>(&self) -> Self {
        EvalPolicy {
            series_rel_tol: S::epsilon().to_f64_lossy() / 2.0,
            ..*self
        }
    }
}
