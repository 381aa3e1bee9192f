use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot combine elements from different domains ({left} vs {right})")]
    DomainMismatch { left: String, right: String },

    #[error("closure exceeded the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("element does not belong to the group")]
    ElementNotInGroup,

    #[error("a group needs at least one generator")]
    NoGenerators,

    #[error("{0}")]
    BadConstruction(String),

    #[error("a dihedral group has even order, got {order}")]
    OddOrder { order: u64 },

    #[error("a generalized quaternion group has order 4k, got {order}")]
    NotMultipleOfFour { order: u64 },

    #[error("the smallest generalized quaternion group is Q_8, got order {order}")]
    TooSmall { order: u64 },

    #[error("alternating groups are supported for degrees 3 through 8, got {degree}")]
    DegreeOutOfRange { degree: u64 },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("action of generator {generator} is not a bijection on the normal factor")]
    NotABijection { generator: usize },

    #[error("action of generator {generator} is not an automorphism: {detail}")]
    NotAnAutomorphism { generator: usize, detail: String },

    #[error("generator actions are inconsistent: {detail}")]
    InconsistentAction { detail: String },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed fingerprint table: {0}")]
    BadFingerprintTable(String),

    #[error("catalog entry {label}: expected order {expected}, data yields order {actual}")]
    OrderMismatch {
        label: String,
        expected: u64,
        actual: u64,
    },

    #[error("catalog entry {label}: file header declares {found}, catalog expects {expected}")]
    HeaderMismatch {
        label: String,
        expected: String,
        found: String,
    },

    #[error("catalog entry {label}: fingerprint mismatch (pinned {expected}, computed {actual})")]
    FingerprintMismatch {
        label: String,
        expected: String,
        actual: String,
    },

    #[error("Moebius inversion produced a negative count at divisor {divisor}; input is not an exponent type")]
    NegativeCount { divisor: u64 },

    #[error("count overflow {context}")]
    CountOverflow { context: String },

    #[error("cannot compare spectra of different kinds")]
    KindMismatch,

    #[error("unknown target {name:?} (expected c<n>, d<n>, q<n>, a<n>, pgl2_<p>, s1..s7, or a .grp file)")]
    UnknownTarget { name: String },
}

impl Error {
    /// Process exit code this error maps to: 3 for count overflow, 2 for
    /// every other data, parse, or usage problem. (Exit 1 is reserved for
    /// well-formed runs whose mathematical check fails; that path does not
    /// go through `Error`.)
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CountOverflow { .. } => 3,
            _ => 2,
        }
    }
}
