//! Element-scan algorithms: normalizers, centralizers, Sylow 2-subgroups,
//! the 2-core, transversals and commutator subgroups. Each takes a cap on
//! the number of group elements it may enumerate.

use std::collections::HashMap;

use super::{Perm, PermError, PermGroup};
use crate::algebra::{odd_part, two_part};

fn check_cap(g: &PermGroup, cap: u64) -> Result<(), PermError> {
    let n = g.order();
    if n > cap {
        return Err(PermError::CapExceeded { what: "group order", needed: n, cap });
    }
    Ok(())
}

fn check_degrees(a: &PermGroup, b: &PermGroup) -> Result<(), PermError> {
    if a.degree() != b.degree() {
        return Err(PermError::DegreeMismatch { expected: a.degree(), found: b.degree() });
    }
    Ok(())
}

/// All elements of a group with an index lookup.
pub struct ElementTable {
    elems: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl ElementTable {
    pub fn new(g: &PermGroup, cap: u64) -> Result<Self, PermError> {
        let elems = g.elements(cap)?;
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        Ok(ElementTable { elems, index })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }
}

/// `N_g(h) = {x ∈ g : h^x = h}`.
pub fn normalizer(g: &PermGroup, h: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    check_degrees(g, h)?;
    check_cap(g, cap)?;
    let mut acc = PermGroup::trivial(g.degree());
    for x in g.iter() {
        if !acc.has(&x) && h.is_normalized_by(&x) {
            acc = acc.with_generator(&x)?;
        }
    }
    Ok(acc)
}

/// `C_g(h)`: elements of `g` commuting with every generator of `h`.
pub fn centralizer(g: &PermGroup, h: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    check_degrees(g, h)?;
    check_cap(g, cap)?;
    let mut acc = PermGroup::trivial(g.degree());
    for x in g.iter() {
        if acc.has(&x) {
            continue;
        }
        if h.gens().iter().all(|s| s.mul(&x) == x.mul(s)) {
            acc = acc.with_generator(&x)?;
        }
    }
    Ok(acc)
}

/// Grows a 2-subgroup from the 2-part of `start`: while `|P|` is below the
/// 2-part of `|g|`, adjoin the first `y ∈ N_g(P) \ P` with `y² ∈ P`.
pub fn sylow_2_from(g: &PermGroup, start: &Perm, cap: u64) -> Result<PermGroup, PermError> {
    check_cap(g, cap)?;
    if !g.contains(start)? {
        return Err(PermError::NotSubgroup);
    }
    let target = two_part(g.order());
    let mut p = PermGroup::new(g.degree(), vec![start.pow(odd_part(start.order()) as i64)])?;
    while p.order() < target {
        let y = g
            .iter()
            .find(|y| !p.has(y) && p.has(&y.mul(y)) && p.is_normalized_by(y))
            .expect("a 2-subgroup that is not Sylow has a 2-element in N(P)/P");
        p = p.with_generator(&y)?;
    }
    Ok(p)
}

/// A Sylow 2-subgroup, seeded by the first element whose 2-part has the
/// largest order.
pub fn sylow_2(g: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    check_cap(g, cap)?;
    let mut best = Perm::identity(g.degree());
    let mut best_order = 1;
    for x in g.iter() {
        let o = two_part(x.order());
        if o > best_order {
            best_order = o;
            best = x;
        }
    }
    sylow_2_from(g, &best, cap)
}

/// Representatives of the right cosets `sub·x` in `g`, each the first
/// member of its coset in iteration order.
pub fn right_transversal(g: &PermGroup, sub: &PermGroup, cap: u64) -> Result<Vec<Perm>, PermError> {
    check_degrees(g, sub)?;
    let table = ElementTable::new(g, cap)?;
    right_transversal_in(&table, sub, cap)
}

pub(crate) fn right_transversal_in(table: &ElementTable, sub: &PermGroup, cap: u64) -> Result<Vec<Perm>, PermError> {
    let sub_elems = sub.elements(cap)?;
    let mut seen = vec![false; table.len()];
    let mut reps = Vec::new();
    for (i, x) in table.elements().iter().enumerate() {
        if seen[i] {
            continue;
        }
        reps.push(x.clone());
        for h in &sub_elems {
            let j = table.index_of(&h.mul(x)).ok_or(PermError::NotSubgroup)?;
            seen[j] = true;
        }
    }
    Ok(reps)
}

/// `O₂(g)`: the intersection of the conjugates of one Sylow 2-subgroup.
pub fn core_2(g: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    let s = sylow_2(g, cap)?;
    let n = normalizer(g, &s, cap)?;
    let reps = right_transversal(g, &n, cap)?;
    let s_elems = s.elements(cap)?;
    // s ∈ S^x  ⇔  x·s·x⁻¹ ∈ S
    let core: Vec<Perm> = s_elems.into_iter().filter(|e| reps.iter().all(|x| s.has(&x.mul(e).mul(&x.inv())))).collect();
    Ok(PermGroup::generated_by(g.degree(), &core))
}

/// `a ∩ b`, by scanning the smaller group.
pub fn intersection(a: &PermGroup, b: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    check_degrees(a, b)?;
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    check_cap(small, cap)?;
    let common: Vec<Perm> = small.iter().filter(|x| large.has(x)).collect();
    Ok(PermGroup::generated_by(a.degree(), &common))
}

/// `[h, u] = ⟨u⁻¹·u^x : u ∈ u, x ∈ h⟩`: commutators of every element of `u`
/// with the generators of `h`, closed under conjugation by both generating
/// sets.
pub fn commutator_subgroup(h: &PermGroup, u: &PermGroup, cap: u64) -> Result<PermGroup, PermError> {
    check_degrees(h, u)?;
    check_cap(u, cap)?;
    let comms: Vec<Perm> = u.iter().flat_map(|e| h.gens().iter().map(move |x| e.commutator(x))).collect();
    let mut k = PermGroup::generated_by(h.degree(), &comms);
    loop {
        let mut grown = false;
        let gens = k.gens().to_vec();
        for y in h.gens().iter().chain(u.gens()) {
            for s in &gens {
                let c = s.conj(y);
                if !k.has(&c) {
                    k = k.with_generator(&c)?;
                    grown = true;
                }
            }
        }
        if !grown {
            return Ok(k);
        }
    }
}
