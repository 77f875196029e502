use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("multiplicity of the zero function is undefined")]
    ZeroFunction,
    #[error("pole at {point}")]
    PoleAtPoint { point: String },
    #[error("coefficient of m_{partition} has a pole at {point}")]
    CoefficientPole { partition: Partition, point: String },
    #[error("partition {0} is not admissible")]
    NotAdmissible(Partition),
    #[error("partitions have different weights ({0} vs {1})")]
    WeightMismatch(u32, u32),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("eigenvalues of {0} and {1} coincide at this t0")]
    GenericityFailure(Partition, Partition),
    #[error("singular linear system")]
    SingularSystem,
    #[error("division by a linear factor left a nonzero remainder")]
    NonExactDivision,
    #[error("no representation: residual is nonzero")]
    NoRepresentation,
    #[error("operator image lies outside both the eigen and Jordan spans")]
    NeitherStructure,
    #[error("polynomials are not proportional")]
    ProportionalityFailure,
    #[error("rank mismatch: rational {rational}, modular {modular}")]
    ModularMismatch { rational: usize, modular: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
