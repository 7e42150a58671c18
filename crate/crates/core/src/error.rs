use thiserror::Error;

/// Errors raised by evaluators when an argument falls outside a family's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },

    #[error("parameter vector has {alphas} alphas but {multiplicities} multiplicities")]
    ParamLength { alphas: usize, multiplicities: usize },

    #[error("series has zero constant term and cannot be inverted")]
    NonInvertibleSeries,

    #[error("unknown special case {0} (expected 1..=8)")]
    UnknownCase(u8),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn domain(family: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            family,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
