use thiserror::Error;

/// Errors surfaced by constructors, scans, and classification routines.
///
/// All fallible operations return these instead of panicking, so a frontend
/// can map them to clean diagnostics and exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// The dimension selector is outside the supported family (7- and
    /// 15-dimensional total spaces, i.e. `n = 1` or `n = 2`).
    #[error("dimension parameter n must be 1 or 2, got {0}")]
    InvalidDimension(u8),

    /// A fiber Euler number of zero was supplied where a nonzero one is
    /// required (the total space is a rational homology sphere iff l != 0).
    #[error("fiber euler number l must be nonzero")]
    ZeroEuler,

    /// A fiber Euler number that is not positive was supplied to an operation
    /// that expects normalized data. Negative Euler numbers are handled by
    /// [`crate::bundles::BundleId::normalize`].
    #[error("fiber euler number l must be >= 1, got {0}; normalize negative values first")]
    NonPositiveEuler(i64),

    /// A bundle parameter exceeds the supported magnitude. The bound keeps
    /// every derived characteristic number representable in `i64`.
    #[error("parameter {name} out of supported range: |{name}| must be at most 2^46, got {value}")]
    ParamOutOfRange { name: &'static str, value: i64 },

    /// A modulus of zero was supplied to a modular-arithmetic routine.
    #[error("modulus must be positive")]
    ZeroModulus,

    /// An enumeration would exceed a documented work bound.
    #[error("{0} (limit {1})")]
    LimitExceeded(&'static str, u64),

    /// A fixed-width intermediate would overflow.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// Two family members admit no separation certificate (their boundary
    /// terms coincide), so a path-component count cannot be certified.
    #[error("members k={k0} and k={k1} are not separated (equal boundary term)")]
    NotSeparated { k0: i64, k1: i64 },

    /// The quadratic reference counting loop is only defined in the
    /// 15-dimensional family.
    #[error("the quadratic reference counting loop is defined only for n = 2")]
    ReplicaRequiresN2,

    /// A rational or monomial string could not be parsed.
    #[error("cannot parse {0}")]
    Parse(String),
}
