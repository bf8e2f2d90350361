//! Permutations and the permutation-group engine.

mod chain;
mod element;
mod group;
mod ops;
mod quotient;
mod subgroup;

pub use chain::{ElementIter, StabChain};
pub use element::Perm;
pub use group::PermGroup;
pub use ops::{
    centralizer, commutator_subgroup, core_2, intersection, normalizer, right_transversal, sylow_2, sylow_2_from,
    ElementTable,
};
pub use quotient::{coset_action, Quotient};
pub use subgroup::{Fingerprint, SubgroupHandle, SubgroupSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse cycle notation {0:?}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what}: {needed} exceeds cap {cap}")]
    CapExceeded { what: &'static str, needed: u64, cap: u64 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
}
