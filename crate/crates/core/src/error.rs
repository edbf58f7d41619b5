use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input is not nonincreasing: {0} is followed by the larger value {1}")]
    IncreasingInput(u32, u32),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("index {index} outside 1..={modulus}")]
    BadIndex { index: u32, modulus: u32 },
    #[error("block index {0} out of range")]
    BadBlock(usize),
    #[error("partition {0} repeats a nonzero part at least m times")]
    NotInDm(Partition),
    #[error("invalid class parameters: {0}")]
    BadSpec(String),
    #[error("partition {0} is not m-flat")]
    NotFlat(Partition),
    #[error("inserted part {0} is not a positive multiple of the modulus")]
    NotMultiple(u32),
    #[error("no index makes the insertion of {part} into {tau} m-flat")]
    NoValidIndex { tau: Partition, part: u32 },
    #[error("insertion of {part} into {tau} admits {count} valid indices")]
    AmbiguousIndex { tau: Partition, part: u32, count: usize },
    #[error("partition {0} has a part divisible by the modulus")]
    NotMRegular(Partition),
    #[error("no preimage of {0} found")]
    NotFound(Partition),
    #[error("{0} has more than one preimage")]
    NotUnique(Partition),
    #[error("weight {weight} exceeds the search guard {guard}")]
    GuardExceeded { weight: u64, guard: u64 },
    #[error("part {part} is not below n*m = {limit}")]
    OutOfRange { part: u64, limit: u64 },
    #[error("cannot delete from the empty partition")]
    EmptyInput,
    #[error("partition {partition} is not in {class}")]
    NotInClass { partition: Partition, class: String },
    #[error("partition {0} contains a multiple of the modulus")]
    HasMultipleOfM(Partition),
    #[error("residue vector accounts for {expected} parts but {found} are available")]
    CountMismatch { expected: u64, found: u64 },
    #[error("truncation bounds differ: {0} vs {1}")]
    BoundMismatch(u32, u32),
    #[error("geometric factor needs a monomial of positive q-degree")]
    NonPositiveDegree,
    #[error("{0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
