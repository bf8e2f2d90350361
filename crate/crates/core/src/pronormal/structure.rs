use super::PronormError;
use crate::perm::{coset_action, normalizer, sylow_2, PermGroup};

/// `N_G(S)` for a Sylow 2-subgroup `S` and the invariants of `N_G(S)/S`.
#[derive(Debug, Clone)]
pub struct SylowNormalizerStructure {
    pub sylow: PermGroup,
    pub normalizer: PermGroup,
    /// The quotient `N_G(S)/S` as a permutation group.
    pub quotient: PermGroup,
    pub sylow_order: u64,
    pub ns_order: u64,
    pub index_over_s: u64,
    pub quotient_abelian: bool,
    pub quotient_exponent: u64,
}

pub fn sylow_normalizer_structure(g: &PermGroup, cap: u64) -> Result<SylowNormalizerStructure, PronormError> {
    let s = sylow_2(g, cap)?;
    let ns = normalizer(g, &s, cap)?;
    let quotient = coset_action(&ns, &s, cap)?.group().clone();
    Ok(SylowNormalizerStructure {
        sylow_order: s.order(),
        ns_order: ns.order(),
        index_over_s: ns.order() / s.order(),
        quotient_abelian: quotient.is_abelian(),
        quotient_exponent: quotient.exponent(cap)?,
        sylow: s,
        normalizer: ns,
        quotient,
    })
}
