//! Stabilizer chains built by deterministic Schreier–Sims.
//!
//! Orbits are only ever extended, so transversal elements never change
//! once recorded. That lets each level remember which (generator, point)
//! Schreier generators have already been sifted successfully and skip them
//! when the level is revisited.

use std::collections::HashSet;

use super::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Perm>,
    pub orbit: Vec<u32>,
    /// `trans[β]` maps the base point to `β`.
    pub trans: Vec<Option<Perm>>,
    pub trans_inv: Vec<Option<Perm>>,
    checked: HashSet<(u32, u32)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut trans = vec![None; degree];
        let mut trans_inv = vec![None; degree];
        trans[base] = Some(Perm::identity(degree));
        trans_inv[base] = Some(Perm::identity(degree));
        Level { base, gens: Vec::new(), orbit: vec![base as u32], trans, trans_inv, checked: HashSet::new() }
    }

    fn extend_orbit(&mut self) {
        let mut pos = 0;
        while pos < self.orbit.len() {
            let beta = self.orbit[pos] as usize;
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.trans[gamma].is_none() {
                    let u = self.trans[beta].as_ref().unwrap().mul(s);
                    self.trans_inv[gamma] = Some(u.inv());
                    self.trans[gamma] = Some(u);
                    self.orbit.push(gamma as u32);
                }
            }
            pos += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain { degree, levels: Vec::new() }
    }

    pub fn from_generators<'a>(degree: usize, gens: impl IntoIterator<Item = &'a Perm>) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64).expect("group order overflows u64"))
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Divides `g` by transversal elements from level `from` on. Returns the
    /// residue and the level where sifting stopped (`levels.len()` when it
    /// passed every level).
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.trans_inv[beta] {
                None => return (h, i),
                Some(u_inv) => h = h.mul(u_inv),
            }
        }
        (h, self.levels.len())
    }

    /// Membership by sifting, without allocating per level.
    pub fn contains(&self, g: &Perm) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        let mut cur: Vec<u32> = g.images().to_vec();
        let mut next = vec![0u32; self.degree];
        for level in &self.levels {
            let beta = cur[level.base] as usize;
            let Some(u_inv) = &level.trans_inv[beta] else {
                return false;
            };
            let ui = u_inv.images();
            for (n, &c) in next.iter_mut().zip(cur.iter()) {
                *n = ui[c as usize];
            }
            std::mem::swap(&mut cur, &mut next);
        }
        cur.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Adds `g` to the group and restores the chain invariants.
    pub fn insert(&mut self, g: &Perm) {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let (r, j) = self.strip(g, 0);
        if r.is_identity() {
            return;
        }
        self.add_strong(r, 0, j);
        self.complete(j);
    }

    /// Appends `r` to the generating sets of levels `from..=to`, creating a
    /// new level (based at the least point `r` moves) when `to` is past the end.
    fn add_strong(&mut self, r: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = r.first_moved_point().expect("nonidentity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=to {
            self.levels[l].gens.push(r.clone());
            self.levels[l].extend_orbit();
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let mut pos = 0;
            while pos < self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[pos] as usize;
                let ngens = self.levels[lvl].gens.len();
                for si in 0..ngens {
                    if !self.levels[lvl].checked.insert((si as u32, beta as u32)) {
                        continue;
                    }
                    let level = &self.levels[lvl];
                    let s = &level.gens[si];
                    let gamma = s.apply(beta);
                    let h = level.trans[beta].as_ref().unwrap().mul(s).mul(level.trans_inv[gamma].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (r, j) = self.strip(&h, lvl + 1);
                    if !r.is_identity() {
                        self.add_strong(r, lvl + 1, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
                pos += 1;
            }
            i -= 1;
        }
    }

    pub fn iter(&self) -> ElementIter<'_> {
        ElementIter::new(self)
    }
}

/// Every group element exactly once, as products `v_{k−1}⋯v_1·v_0` of
/// transversal elements. The deepest level is the most significant digit,
/// so consecutive elements usually differ only in `v_0`.
pub struct ElementIter<'a> {
    chain: &'a StabChain,
    digits: Vec<usize>,
    /// `prefix[l] = v_{k−1}⋯v_l`; `prefix[k]` is the identity.
    prefix: Vec<Perm>,
    done: bool,
}

impl<'a> ElementIter<'a> {
    fn new(chain: &'a StabChain) -> Self {
        let k = chain.levels.len();
        let prefix = vec![Perm::identity(chain.degree); k + 1];
        ElementIter { chain, digits: vec![0; k], prefix, done: false }
    }

    fn trans(&self, l: usize) -> &Perm {
        let level = &self.chain.levels[l];
        let point = level.orbit[self.digits[l]] as usize;
        level.trans[point].as_ref().unwrap()
    }

    fn rebuild_from(&mut self, top: usize) {
        for l in (0..top).rev() {
            let p = self.prefix[l + 1].mul(self.trans(l));
            self.prefix[l] = p;
        }
    }
}

impl Iterator for ElementIter<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        let out = self.prefix[0].clone();
        // advance the odometer, least significant digit = level 0
        let k = self.digits.len();
        let mut l = 0;
        loop {
            if l == k {
                self.done = true;
                break;
            }
            self.digits[l] += 1;
            if self.digits[l] < self.chain.levels[l].orbit.len() {
                self.rebuild_from(l + 1);
                break;
            }
            self.digits[l] = 0;
            l += 1;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (0, Some(self.chain.order() as usize))
    }
}
