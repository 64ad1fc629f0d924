use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime characteristic")]
    NotPrime(u64),
    #[error("invalid line: {0}")]
    InvalidLine(String),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u64>),
    #[error("partitions have different totals ({0} and {1})")]
    UnequalTotals(u64, u64),
    #[error("segment [{0},{1}] has a > b")]
    EmptySegment(i64, i64),
    #[error("cuspidal levels do not exist in characteristic 0")]
    CharacteristicZero,
    #[error("order is infinite")]
    InfiniteOrder,
    #[error("invariants are inconsistent: {0}")]
    InconsistentInvariants(String),
    #[error("multisegment is not supercuspidal")]
    NotSupercuspidal,
    #[error("zero multisegment")]
    ZeroMultisegment,
    #[error("not a derived sequence: {0}")]
    NotDerivedSequence(String),
    #[error("multisegments live on different towers")]
    TowerMismatch,
    #[error("enumeration requires finite lines")]
    UnboundedEnumeration,
}

pub type Result<T> = std::result::Result<T, Error>;
