use thiserror::Error;

pub type Result<T> = std::result::Result<T, LerchError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LerchError {
    /// The function has a pole at the given integer.
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: i64 },

    #[error("{op}: argument outside the domain ({reason})")]
    Domain { op: &'static str, reason: String },

    /// An iteration cap was hit; `achieved` is the last available error estimate.
    #[error("{op} did not reach the requested accuracy (achieved {achieved:e})")]
    Accuracy { op: &'static str, achieved: f64 },

    #[error("coefficient count {requested} exceeds the cap of {cap}")]
    CoefficientCap { requested: usize, cap: usize },

    #[error("no reference method applies: {0}")]
    Unsupported(String),
}

impl LerchError {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        LerchError::Domain {
            op,
            reason: reason.into(),
        }
    }

    /// True for errors that describe an invalid input rather than a numerical shortfall.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            LerchError::Pole { .. }
                | LerchError::Domain { .. }
                | LerchError::CoefficientCap { .. }
                | LerchError::Unsupported(_)
        )
    }
}
