use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally malformed input: wrong table shape, index out of range, bad JSON.
    #[error("format error: {0}")]
    Format(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid size {0}: must be at least 1")]
    InvalidSize(usize),

    #[error("structure violates the busl axioms: {0}")]
    Axioms(String),

    #[error("pair ({0}, {1}) has no greatest lower bound; not dualizable")]
    NotDualizable(usize, usize),

    #[error("no Galois adjoint: {{a : phi(a) <= {0}}} has no greatest element")]
    NotAdjointable(usize),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("presentation is not a preorder: {0}")]
    NotPreorder(String),

    #[error("join is incompatible with the preorder: {0}")]
    Incompatible(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("carrier mismatch: {0} vs {1}")]
    CarrierMismatch(usize, usize),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("seed color must be nonzero")]
    InvalidSeedColor,

    #[error("recoloring sends color {0} to zero")]
    Recolor(usize),

    #[error("premise fails for ({a}, {b}, {c}, {d})")]
    PremiseFailed {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },

    #[error("root has length {len}, need more than {needed}")]
    RootTooShort { len: usize, needed: usize },

    #[error("padded string leaves the tree domain: {0}")]
    PaddingLeavesDomain(String),

    #[error("invalid branch choice {choice} at level {level}")]
    InvalidChoice { level: usize, choice: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
