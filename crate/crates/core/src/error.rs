use thiserror::Error;

/// Errors returned by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An enumeration would exceed the character-evaluation budget.
    #[error(
        "budget exceeded: at least {required} character evaluations required, budget is {budget}"
    )]
    Budget { required: u128, budget: u128 },

    /// A precondition of a construction does not hold.
    #[error("hypothesis violated{}: {reason}", index.map(|i| format!(" at index {i}")).unwrap_or_default())]
    Hypothesis {
        index: Option<usize>,
        reason: String,
    },

    /// The operation does not apply to this input.
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn hypothesis(index: Option<usize>, reason: impl Into<String>) -> Self {
        Error::Hypothesis {
            index,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
