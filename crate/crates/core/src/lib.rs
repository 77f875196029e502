//! Exact symmetric-function computations for ideals of polynomials vanishing
//! on double diagonals.

pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod partitions;
pub mod symfunc;
pub mod jack;
pub mod macdonald;
pub mod interp;
pub mod ideals;
pub mod verify;
