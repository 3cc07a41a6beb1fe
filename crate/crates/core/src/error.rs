use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ill-defined map: {0}")]
    IllDefinedMap(String),
    #[error("sequence not exact in middle: witness {witness:?} lies in ker(pi) but not in im(iota)")]
    NotExact { witness: Vec<BigInt> },
    #[error("composite pi . iota is not zero")]
    NotAComplex,
    #[error("quotient not free: splitting is not guaranteed")]
    QuotientNotFree,
    #[error("invalid discriminant {disc}: {reason}")]
    InvalidDiscriminant { disc: i64, reason: &'static str },
    #[error("{0} is not a prime in the supported range")]
    InvalidPrime(u64),
    #[error("invalid order specification: {0}")]
    InvalidOrder(String),
    #[error("chain length undefined for non-hereditary order")]
    NonHereditaryChain,
    #[error("no structure theorem available for a non-hereditary order; supply explicit K0 data to the exact-sequence engine")]
    NoStructureTheorem,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("instance too large for oracle: {size} elements exceeds the limit {limit}")]
    OracleTooLarge { size: u128, limit: u64 },
}

impl Error {
    /// Stable machine-readable code, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::IllDefinedMap(_) => "ill-defined-map",
            Error::NotExact { .. } => "not-exact",
            Error::NotAComplex => "not-a-complex",
            Error::QuotientNotFree => "quotient-not-free",
            Error::InvalidDiscriminant { .. } => "invalid-discriminant",
            Error::InvalidPrime(_) => "invalid-prime",
            Error::InvalidOrder(_) => "invalid-order",
            Error::NonHereditaryChain => "non-hereditary-chain",
            Error::NoStructureTheorem => "no-structure-theorem",
            Error::InvalidGroupTable(_) => "invalid-group-table",
            Error::InvalidAlgebra(_) => "invalid-algebra",
            Error::OracleTooLarge { .. } => "oracle-too-large",
        }
    }
}
