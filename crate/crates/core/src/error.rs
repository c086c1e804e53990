use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EphError {
    /// A parameter value lies outside the interval the operation is defined on.
    #[error("parameter {name} = {value} outside {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The naive closed forms overflow double precision for this shape parameter.
    #[error("naive evaluation overflows for omega = {0} (use the stable mode)")]
    OverflowHazard(f64),

    #[error("{0}: zero vector")]
    ZeroVector(&'static str),

    /// The quaternion square root `(i + w)/|i + w|` is singular: the target
    /// direction is antiparallel to the x-axis.
    #[error("{0}: direction antiparallel to (1,0,0), quaternion root is singular")]
    DegenerateDirection(&'static str),

    #[error("control block is singular, dynamic evaluation is undefined")]
    SingularControlBlock,

    /// Malformed input data (wrong point count, non-finite values, bad enum value).
    #[error("invalid {field}: {reason}")]
    Invalid { field: &'static str, reason: String },
}

impl EphError {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        EphError::Invalid {
            field,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, EphError>;
