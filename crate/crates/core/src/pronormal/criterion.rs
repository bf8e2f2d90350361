use std::collections::{HashSet, VecDeque};

use super::{precondition, PronormError};
use crate::algebra::gcd;
use crate::constructors::WreathProduct;
use crate::perm::{commutator_subgroup, intersection, ElementTable, Perm, PermError, PermGroup};

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn count(b: &Bits) -> u64 {
    b.iter().map(|w| w.count_ones() as u64).sum()
}

/// The `H`-invariant subgroups of an abelian group `V`, each stored as a
/// bitset over a fixed enumeration of `V`.
struct InvariantLattice {
    table: ElementTable,
    subgroups: Vec<Bits>,
}

impl InvariantLattice {
    fn build(h: &PermGroup, v: &PermGroup, cap: u64) -> Result<Self, PronormError> {
        if h.degree() != v.degree() {
            return Err(PermError::DegreeMismatch { expected: v.degree(), found: h.degree() }.into());
        }
        if !v.is_abelian() {
            return Err(PronormError::NotAbelian);
        }
        if !h.gens().iter().all(|y| v.is_normalized_by(y)) {
            return Err(PronormError::NotInvariant);
        }
        let table = ElementTable::new(v, cap)?;
        let n = table.len();
        let words = n.div_ceil(64);
        let index = |x: &Perm| table.index_of(x).expect("V is closed");
        let actions: Vec<Vec<usize>> =
            h.gens().iter().map(|y| table.elements().iter().map(|e| index(&e.conj(y))).collect()).collect();
        let orbit_of = |x: usize| {
            let mut orbit = vec![x];
            let mut seen = HashSet::from([x]);
            let mut i = 0;
            while i < orbit.len() {
                for act in &actions {
                    let y = act[orbit[i]];
                    if seen.insert(y) {
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit
        };
        let orbits: Vec<Vec<usize>> = (0..n).map(orbit_of).collect();
        // ⟨U, T⟩ = U·⟨T⟩ in an abelian group: close U under right
        // multiplication by T.
        let close = |u: &Bits, t: &[usize]| {
            let mut out = u.clone();
            let mut queue: VecDeque<usize> = (0..n).filter(|&i| bit(u, i)).collect();
            while let Some(e) = queue.pop_front() {
                for &s in t {
                    let p = index(&table.get(e).mul(table.get(s)));
                    if !bit(&out, p) {
                        set_bit(&mut out, p);
                        queue.push_back(p);
                    }
                }
            }
            out
        };
        let mut trivial = vec![0u64; words];
        set_bit(&mut trivial, index(&Perm::identity(v.degree())));
        let mut subgroups = vec![trivial.clone()];
        let mut seen = HashSet::from([trivial]);
        let mut i = 0;
        while i < subgroups.len() {
            let u = subgroups[i].clone();
            for (x, orbit) in orbits.iter().enumerate() {
                if bit(&u, x) {
                    continue;
                }
                let w = close(&u, orbit);
                if seen.insert(w.clone()) {
                    subgroups.push(w);
                }
            }
            i += 1;
        }
        subgroups.sort_by_key(count);
        Ok(InvariantLattice { table, subgroups })
    }

    fn members<'a>(&'a self, u: &'a Bits) -> impl Iterator<Item = &'a Perm> + 'a {
        (0..self.table.len()).filter(move |&i| bit(u, i)).map(move |i| self.table.get(i))
    }

    fn group(&self, u: &Bits, degree: usize) -> PermGroup {
        PermGroup::generated_by(degree, self.members(u))
    }

    /// Checks `|X·[H,U]| = |U|` for every subgroup `U`, where `X ⊆ U` is the
    /// subgroup selected by `keep`. Stops at the first failure.
    fn check_factorization(
        &self,
        h: &PermGroup,
        keep: impl Fn(&Perm) -> bool,
        cap: u64,
    ) -> Result<(usize, Option<FailingSubgroup>), PronormError> {
        let degree = h.degree();
        for (checked, u) in self.subgroups.iter().enumerate() {
            let ug = self.group(u, degree);
            let x: Vec<&Perm> = self.members(u).filter(|e| keep(e)).collect();
            let c = commutator_subgroup(h, &ug, cap)?;
            let both = x.iter().filter(|e| c.has(e)).count() as u64;
            let product = x.len() as u64 * c.order() / both;
            if product != ug.order() {
                return Ok((
                    checked + 1,
                    Some(FailingSubgroup {
                        subgroup: ug,
                        complement_order: x.len() as u64,
                        commutator_order: c.order(),
                        product_order: product,
                    }),
                ));
            }
        }
        Ok((self.subgroups.len(), None))
    }
}

/// All subgroups of the abelian group `v` normalized by `h`, smallest first.
pub fn h_invariant_subgroups(h: &PermGroup, v: &PermGroup, cap: u64) -> Result<Vec<PermGroup>, PronormError> {
    let lattice = InvariantLattice::build(h, v, cap)?;
    Ok(lattice.subgroups.iter().map(|u| lattice.group(u, v.degree())).collect())
}

/// A subgroup `U` where the factorization fails.
#[derive(Debug, Clone)]
pub struct FailingSubgroup {
    pub subgroup: PermGroup,
    /// `|N_U(H)|` or `|C_U(H)|`, depending on the check.
    pub complement_order: u64,
    pub commutator_order: u64,
    pub product_order: u64,
}

#[derive(Debug, Clone)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub checked_subgroup_count: usize,
    pub failing: Option<FailingSubgroup>,
}

/// With `V` abelian and normal in `G = HV`: `H` is pronormal in `G` iff
/// `U = N_U(H)[H,U]` for every `H`-invariant `U ≤ V`.
pub fn criterion_abelian_complement(
    h: &PermGroup,
    v: &PermGroup,
    g: &PermGroup,
    cap: u64,
) -> Result<CriterionVerdict, PronormError> {
    precondition(h.is_subgroup_of(g), || "h must be a subgroup of g".into())?;
    precondition(v.is_subgroup_of(g) && v.is_normal_in(g), || "v must be normal in g".into())?;
    let meet = intersection(h, v, cap)?;
    precondition(g.order() * meet.order() == h.order() * v.order(), || "g must equal hv".into())?;
    let lattice = InvariantLattice::build(h, v, cap)?;
    let (checked, failing) = lattice.check_factorization(h, |u| h.is_normalized_by(u), cap)?;
    Ok(CriterionVerdict { holds: failing.is_none(), checked_subgroup_count: checked, failing })
}

#[derive(Debug, Clone)]
pub struct CoprimeVerdict {
    pub all_hold: bool,
    pub checked_subgroup_count: usize,
    pub failing: Option<FailingSubgroup>,
}

/// In `A ≀ P` with abelian `A`, `H` inside the top group and `K ≤ H` acting
/// transitively on the blocks with `gcd(|A|, |K|) = 1`: checks
/// `U = C_U(H)[H,U]` for every `H`-invariant `U` of the base.
pub fn coprime_factorization_check(
    w: &WreathProduct,
    h: &PermGroup,
    k: &PermGroup,
    cap: u64,
) -> Result<CoprimeVerdict, PronormError> {
    precondition(h.is_subgroup_of(w.top()), || "h must lie in the top group".into())?;
    precondition(k.is_subgroup_of(h), || "k must be a subgroup of h".into())?;
    let blocks = PermGroup::new(w.block_count(), k.gens().iter().map(|x| w.block_image(x)).collect())?;
    precondition(blocks.is_transitive(), || "k must permute the blocks transitively".into())?;
    let (a, ko) = (w.inner().order(), k.order());
    precondition(gcd(a, ko) == 1, || format!("|A| = {a} and |K| = {ko} are not coprime"))?;
    let lattice = InvariantLattice::build(h, w.base(), cap)?;
    let (checked, failing) = lattice.check_factorization(h, |u| h.gens().iter().all(|y| u.mul(y) == y.mul(u)), cap)?;
    Ok(CoprimeVerdict { all_hold: failing.is_none(), checked_subgroup_count: checked, failing })
}
