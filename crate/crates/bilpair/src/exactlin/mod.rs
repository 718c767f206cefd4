//! Exact scalar arithmetic and exact linear algebra over F_p and ℚ:
//! row reduction, kernels, subspace lattice operations, and deterministic
//! enumeration of Grassmannians and general linear groups.

pub mod enumerate;
pub mod field;
pub mod matrix;
pub mod subspace;

use thiserror::Error;

/// Errors raised by the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the 2^15 prime limit")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("enumeration is not supported over the rationals")]
    EnumerationUnsupported,
    #[error("subspace dimension {s} out of range for ambient dimension {n}")]
    SubspaceDimOutOfRange { s: usize, n: usize },
}
