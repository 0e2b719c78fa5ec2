use thiserror::Error;

/// Unified error type for scenario handling and integration.
#[derive(Debug, Error)]
pub enum Error {
    /// Scenario failed validation. Every violation is listed, not just the
    /// first one encountered.
    #[error("invalid scenario: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("unknown preset `{0}` (see `excidyn preset --list`)")]
    UnknownPreset(String),

    #[error("degenerate splitting: eps = J = 0 leaves Delta = 0 in coefficient denominators")]
    DegenerateSplitting,

    #[error("non-finite state at t = {t} fs (step {step}): {detail}")]
    NonFinite { t: f64, step: usize, detail: String },

    #[error("correlation function requires tau <= t, got tau = {tau}, t = {t}")]
    AcausalCorrelation { t: f64, tau: f64 },

    #[error("sweep parameter `{0}` does not resolve to a scalar scenario field")]
    BadSweepPath(String),

    #[error("asymptotic state undefined: {0}")]
    NoAsymptoticState(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Machine-readable JSON rendering used by the CLI on failure.
    pub fn to_json(&self) -> serde_json::Value {
        let kind = match self {
            Error::Validation(_) => "validation",
            Error::UnknownPreset(_) => "unknown_preset",
            Error::DegenerateSplitting => "degenerate_splitting",
            Error::NonFinite { .. } => "non_finite_state",
            Error::AcausalCorrelation { .. } => "acausal_correlation",
            Error::BadSweepPath(_) => "bad_sweep_path",
            Error::NoAsymptoticState(_) => "no_asymptotic_state",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        };
        serde_json::json!({ "error": kind, "detail": self.to_string() })
    }
}
