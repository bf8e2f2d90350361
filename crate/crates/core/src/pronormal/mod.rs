//! Pronormality checkers.
//!
//! A subgroup `H ≤ G` is pronormal when `H` and `H^g` are conjugate in
//! `⟨H, H^g⟩` for every `g ∈ G`. Three routes are provided: the definition
//! itself, the reduction to `g ∈ N_G(S)` for a Sylow subgroup `S ≤ H`, and
//! the criterion `U = N_U(H)[H,U]` over `H`-invariant subgroups `U` of an
//! abelian normal subgroup `V` with `G = HV`.

mod criterion;
mod definition;
mod oddorder;
mod overgroups;
mod structure;

pub use criterion::{
    coprime_factorization_check, criterion_abelian_complement, h_invariant_subgroups, CoprimeVerdict, CriterionVerdict,
    FailingSubgroup,
};
pub use definition::{
    are_conjugate_in, is_pronormal, is_pronormal_sylow, is_pronormal_sylow_with, ConjugacyWitness, PronormalityFailure,
    PronormalityVerdict,
};
pub use oddorder::{odd_order_subgroups, OddOrderScan};
pub use overgroups::{find_nonpronormal_odd_index, odd_index_overgroups, NonpronormalSearch, OvergroupScan};
pub use structure::{sylow_normalizer_structure, SylowNormalizerStructure};

use thiserror::Error;

use crate::perm::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PronormError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("V is not abelian")]
    NotAbelian,
    #[error("V is not invariant under H")]
    NotInvariant,
}

fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<(), PronormError> {
    if ok {
        Ok(())
    } else {
        Err(PronormError::PreconditionViolated(msg()))
    }
}
