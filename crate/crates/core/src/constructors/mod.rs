//! Named group families as permutation groups.

mod frobenius;
mod linear;
mod products;

pub use frobenius::{frobenius_fc, FrobeniusEmbedding, FrobeniusGroup};
pub use linear::{
    general_linear, matrix_group, pgl2, psl2, psp_group, sp_group, sp_order, special_linear, MatrixAction, MatrixGroup,
};
pub use products::{direct_product, direct_product_of, wreath_product, DirectProduct, WreathProduct};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::perm::{Perm, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("generator {index} is not invertible")]
    NonInvertibleGenerator { index: usize },
    #[error("generator {index} does not preserve the symplectic form")]
    FormViolation { index: usize },
    #[error("{family}: constructed order {found}, expected {expected}")]
    OrderMismatch { family: String, expected: u64, found: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn cycle(n: usize, points: &[usize]) -> Perm {
    Perm::from_cycles(n, &[points]).expect("valid cycle")
}

/// `Sym(n)` generated by `(0 1)` and `(0 1 … n−1)`.
pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
    }
    PermGroup::new(n, gens).unwrap()
}

/// `Alt(n)` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 1);
    let gens = (2..n).map(|i| cycle(n, &[0, 1, i])).collect();
    PermGroup::new(n, gens).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    PermGroup::new(n, vec![cycle(n, &(0..n).collect::<Vec<_>>())]).unwrap()
}

/// Dihedral group of order `2m` on `m` points: rotation `i ↦ i+1` and
/// reflection `i ↦ −i`.
pub fn dihedral(m: usize) -> Result<PermGroup, ConstructError> {
    if m < 3 {
        return Err(ConstructError::InvalidArgument(format!("dihedral({m}) needs m >= 3")));
    }
    let r = cycle(m, &(0..m).collect::<Vec<_>>());
    let t = Perm::from_images((0..m).map(|i| (m - i) % m).collect()).unwrap();
    Ok(PermGroup::new(m, vec![r, t])?)
}
