use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: non-finite argument")]
    NonFinite { op: &'static str },

    #[error("{op}: pole at {at}")]
    Pole { op: &'static str, at: String },

    #[error("{op}: argument outside domain: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{op}: configuration too weak, error estimate {estimate:.3e}")]
    ConfigTooWeak { op: &'static str, estimate: f64 },

    #[error("{op}: quadrature stalled after {levels} refinements, change {estimate:.3e}")]
    QuadratureStall {
        op: &'static str,
        estimate: f64,
        levels: u32,
    },

    #[error("{op}: contour passes within {distance:.3e} of a pole")]
    PoleProximity { op: &'static str, distance: f64 },

    #[error("correction order {0} not supported (0..=3)")]
    UnsupportedOrder(u32),

    #[error("argument tracking step collapsed below 1e-9 near sigma = {sigma}, t = {t}")]
    StepCollapse { sigma: f64, t: f64 },

    #[error("{what}: no convergence after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: u32 },

    #[error("count at T = {t} is {distance:.3} away from an integer")]
    RoundingAmbiguity { t: f64, distance: f64 },

    #[error("no sign change of Z across [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("{op}: numerical inconsistency: {reason}")]
    Inconsistent { op: &'static str, reason: String },
}
