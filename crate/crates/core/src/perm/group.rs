use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{ElementIter, Perm, PermError, StabChain};

/// A permutation group given by generators, with a stabilizer chain built
/// on first use. Cloning is cheap once the chain exists.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<Arc<StabChain>>,
}

impl PermGroup {
    /// An empty generator list gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch { expected: degree, found: bad.degree() });
        }
        let mut gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            gens.push(Perm::identity(degree));
        }
        Ok(PermGroup { degree, gens, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    fn with_chain(degree: usize, gens: Vec<Perm>, chain: StabChain) -> Self {
        let g = PermGroup::new(degree, gens).unwrap();
        let _ = g.chain.set(Arc::new(chain));
        g
    }

    /// The subgroup generated by `elems`, keeping only elements not already
    /// generated by their predecessors.
    pub fn generated_by<'a>(degree: usize, elems: impl IntoIterator<Item = &'a Perm>) -> Self {
        let mut chain = StabChain::new(degree);
        let mut gens = Vec::new();
        for e in elems {
            assert_eq!(e.degree(), degree, "degree mismatch");
            if !chain.contains(e) {
                chain.insert(e);
                gens.push(e.clone());
            }
        }
        PermGroup::with_chain(degree, gens, chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    /// Deterministic Schreier–Sims; the base is grown from least moved points.
    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| Arc::new(StabChain::from_generators(self.degree, &self.gens)))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Perm::is_identity)
    }

    pub fn contains(&self, x: &Perm) -> Result<bool, PermError> {
        self.check_degree(x)?;
        Ok(self.chain().contains(x))
    }

    /// Membership for callers that already know the degrees agree.
    pub fn has(&self, x: &Perm) -> bool {
        assert_eq!(x.degree(), self.degree, "degree mismatch");
        self.chain().contains(x)
    }

    fn check_degree(&self, x: &Perm) -> Result<(), PermError> {
        if x.degree() != self.degree {
            return Err(PermError::DegreeMismatch { expected: self.degree, found: x.degree() });
        }
        Ok(())
    }

    pub fn iter(&self) -> ElementIter<'_> {
        self.chain().iter()
    }

    pub fn elements(&self, cap: u64) -> Result<Vec<Perm>, PermError> {
        let n = self.order();
        if n > cap {
            return Err(PermError::CapExceeded { what: "group order", needed: n, cap });
        }
        Ok(self.iter().collect())
    }

    /// `⟨x⁻¹·s·x : s ∈ gens⟩`.
    pub fn conjugate(&self, x: &Perm) -> Result<PermGroup, PermError> {
        self.check_degree(x)?;
        let gens = self.gens.iter().map(|g| g.conj(x)).collect();
        PermGroup::new(self.degree, gens)
    }

    /// `⟨self, other⟩`, reusing this group's chain.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup, PermError> {
        if other.degree != self.degree {
            return Err(PermError::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(self.extend(other.gens.iter()))
    }

    pub fn with_generator(&self, x: &Perm) -> Result<PermGroup, PermError> {
        self.check_degree(x)?;
        Ok(self.extend(std::iter::once(x)))
    }

    fn extend<'a>(&self, extra: impl Iterator<Item = &'a Perm>) -> PermGroup {
        let mut chain = self.chain().clone();
        let mut gens = self.gens.clone();
        for e in extra {
            if !chain.contains(e) {
                chain.insert(e);
                gens.push(e.clone());
            }
        }
        if gens.len() == self.gens.len() {
            return self.clone();
        }
        PermGroup::with_chain(self.degree, gens, chain)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.has(g))
    }

    /// Equality as subgroups of `Sym(d)`.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normalized_by(&self, x: &Perm) -> bool {
        self.gens.iter().all(|g| self.has(&g.conj(x)))
    }

    /// `self ⊴ g`, including `self ≤ g`.
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && g.gens.iter().all(|x| self.is_normalized_by(x))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[start] = id;
            let mut orbit = vec![start];
            let mut pos = 0;
            while pos < orbit.len() {
                let b = orbit[pos];
                for g in &self.gens {
                    let c = g.apply(b);
                    if label[c] == usize::MAX {
                        label[c] = id;
                        orbit.push(c);
                    }
                }
                pos += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Least common multiple of element orders, by full scan.
    pub fn exponent(&self, cap: u64) -> Result<u64, PermError> {
        let n = self.order();
        if n > cap {
            return Err(PermError::CapExceeded { what: "group order", needed: n, cap });
        }
        Ok(self.iter().fold(1, |acc, x| crate::algebra::lcm(acc, x.order())))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, gens {:?}", self.degree, self.gens)?;
        if let Some(c) = self.chain.get() {
            write!(f, ", order {}", c.order())?;
        }
        write!(f, ")")
    }
}
