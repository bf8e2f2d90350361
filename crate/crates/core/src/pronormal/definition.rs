use serde::Serialize;

use super::{precondition, PronormError};
use crate::algebra::two_part;
use crate::perm::{normalizer, right_transversal, Perm, PermError, PermGroup, SubgroupSet};

/// `H^g = H^x` with `x ∈ ⟨H, H^g⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyWitness {
    pub g: Perm,
    pub conjugator: Perm,
}

/// A `g` for which `H` and `H^g` are not conjugate in their join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PronormalityFailure {
    pub g: Perm,
    pub join_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PronormalityVerdict {
    pub pronormal: bool,
    /// Number of conjugates `H^g` examined.
    pub tested: usize,
    pub witnesses: Vec<ConjugacyWitness>,
    pub failure: Option<PronormalityFailure>,
}

impl PronormalityVerdict {
    /// Re-runs the conjugacy scan for the recorded failing element.
    pub fn recheck_failure(&self, h: &PermGroup, cap: u64) -> Result<bool, PronormError> {
        let Some(f) = &self.failure else { return Ok(false) };
        let k = h.conjugate(&f.g)?;
        let j = h.join(&k)?;
        Ok(j.order() == f.join_order && are_conjugate_in(h, &k, &j, cap)?.is_none())
    }

    /// Every recorded witness really conjugates `H` onto `H^g` inside the join.
    pub fn witnesses_valid(&self, h: &PermGroup) -> bool {
        self.witnesses.iter().all(|w| {
            let k = h.conjugate(&w.g).unwrap();
            let j = h.join(&k).unwrap();
            j.has(&w.conjugator) && h.conjugate(&w.conjugator).unwrap().same_group(&k)
        })
    }
}

/// First `x ∈ j` (in iteration order) with `h^x = k`.
pub fn are_conjugate_in(h: &PermGroup, k: &PermGroup, j: &PermGroup, cap: u64) -> Result<Option<Perm>, PronormError> {
    precondition(h.is_subgroup_of(j) && k.is_subgroup_of(j), || "h and k must lie in j".into())?;
    if j.order() > cap {
        return Err(PermError::CapExceeded { what: "join order", needed: j.order(), cap }.into());
    }
    if h.order() != k.order() {
        return Ok(None);
    }
    Ok(j.iter().find(|x| h.gens().iter().all(|s| k.has(&s.conj(x)))))
}

/// Outcome of testing one conjugate.
enum Step {
    Witness(Perm),
    Failure(u64),
}

fn test_conjugate(h: &PermGroup, g: &Perm, cap: u64) -> Result<Step, PronormError> {
    if h.is_normalized_by(g) {
        return Ok(Step::Witness(Perm::identity(h.degree())));
    }
    let k = h.conjugate(g)?;
    let j = h.join(&k)?;
    Ok(match are_conjugate_in(h, &k, &j, cap)? {
        Some(x) => Step::Witness(x),
        None => Step::Failure(j.order()),
    })
}

fn verdict_from<'a>(
    h: &PermGroup,
    candidates: impl Iterator<Item = &'a Perm>,
    cap: u64,
) -> Result<PronormalityVerdict, PronormError> {
    let mut verdict = PronormalityVerdict { pronormal: true, tested: 0, witnesses: Vec::new(), failure: None };
    for g in candidates {
        verdict.tested += 1;
        match test_conjugate(h, g, cap)? {
            Step::Witness(x) => verdict.witnesses.push(ConjugacyWitness { g: g.clone(), conjugator: x }),
            Step::Failure(join_order) => {
                verdict.pronormal = false;
                verdict.failure = Some(PronormalityFailure { g: g.clone(), join_order });
                break;
            }
        }
    }
    Ok(verdict)
}

/// Definition check over all of `g`. Since `H^x` only depends on the coset
/// `N_g(H)·x`, one representative per coset is tested (first in iteration
/// order), which visits every distinct conjugate exactly once.
pub fn is_pronormal(h: &PermGroup, g: &PermGroup, cap: u64) -> Result<PronormalityVerdict, PronormError> {
    precondition(h.is_subgroup_of(g), || "h must be a subgroup of g".into())?;
    let n = normalizer(g, h, cap)?;
    let reps = right_transversal(g, &n, cap)?;
    verdict_from(h, reps.iter(), cap)
}

/// Sylow reduction: with `S ≤ H` a Sylow 2-subgroup of `g`, test only
/// `x ∈ N_g(S)`.
pub fn is_pronormal_sylow(
    h: &PermGroup,
    g: &PermGroup,
    s: &PermGroup,
    cap: u64,
) -> Result<PronormalityVerdict, PronormError> {
    precondition(h.is_subgroup_of(g), || "h must be a subgroup of g".into())?;
    precondition(s.is_subgroup_of(h), || "the Sylow subgroup must lie in h".into())?;
    let target = two_part(g.order());
    precondition(s.order() == target, || format!("|S| = {} but the 2-part of |G| is {target}", s.order()))?;
    let ns = normalizer(g, s, cap)?;
    is_pronormal_sylow_with(h, &ns, cap)
}

/// Sylow reduction with `N_G(S)` supplied by the caller. Elements of `ns`
/// giving the same conjugate are tested once.
pub fn is_pronormal_sylow_with(h: &PermGroup, ns: &PermGroup, cap: u64) -> Result<PronormalityVerdict, PronormError> {
    if ns.order() > cap {
        return Err(PermError::CapExceeded { what: "N_G(S) order", needed: ns.order(), cap }.into());
    }
    let mut seen = SubgroupSet::new();
    let mut reps = Vec::new();
    for x in ns.iter() {
        if seen.insert(h.conjugate(&x)?).1 {
            reps.push(x);
        }
    }
    verdict_from(h, reps.iter(), cap)
}
