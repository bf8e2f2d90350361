//! Prime-field arithmetic, dense matrices and polynomials over GF(p), the
//! standard alternating form, and a few integer helpers.

mod field;
mod int;
mod matrix;
mod poly;

pub use field::{Field, FieldElem};
pub use int::{binary_weight, gcd, is_prime, lcm, multiplicative_order, odd_part, two_part};
pub use matrix::{preserves_form, symplectic_gram, Matrix};
pub use poly::Poly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime; only prime fields GF(p) are supported")]
    NotPrime(u32),
    #[error("{q} = {p}^{k} is a prime power; extension fields are not supported")]
    PrimePower { q: u32, p: u32, k: u32 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: GF({left}) vs GF({right})")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix must have positive dimension")]
    EmptyMatrix,
    #[error("row {row} has length {len}, expected {dim}")]
    RaggedRows { row: usize, len: usize, dim: usize },
}
