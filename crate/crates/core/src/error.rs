use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {index} is outside the domain of {kind} ({domain})")]
    IndexOutOfDomain {
        kind: &'static str,
        index: i64,
        domain: &'static str,
    },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(
        "precision of {precision_bits} bits is insufficient: rounding residue 2^{residue_log2:.1} is not below 1/4"
    )]
    PrecisionInsufficient { precision_bits: u32, residue_log2: f64 },

    #[error("root cross-check failed: {0}")]
    RootCheck(String),

    #[error("denominator constant term must be 1 or -1, got {0}")]
    UnsupportedDenominator(String),

    #[error("empty denominator")]
    EmptyDenominator,

    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },

    #[error("matrix is not in the image of the quaternion representation: {0}")]
    NotInImage(String),

    #[error("empty effective range for {id}: {detail}")]
    EmptyRange { id: String, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
