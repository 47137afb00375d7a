use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field {r}^{f} exceeds the 2^16 size cap")]
    FieldTooLarge { r: u32, f: u32 },
    #[error("element literal {0} out of range")]
    BadLiteral(u64),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("subspace of dimension {0} is too large to enumerate")]
    DimensionCap(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("form check failed: {0}")]
    Form(String),
    #[error("domain of size {size} exceeds cap {cap}")]
    DomainOverflow { size: u64, cap: u64 },
    #[error("generator does not preserve the domain: {0}")]
    NotStable(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("side condition failed: {0}")]
    SideCondition(String),
    #[error("unknown: {0}")]
    Unknown(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
