use super::{ops::ElementTable, Perm, PermError, PermGroup};

/// `g/n` as a permutation group, with the projection `g → g/n`.
///
/// When `n` is exactly the kernel of `g` acting on the orbits of `n`, that
/// block action is used (degree = number of `n`-orbits). Otherwise `g` acts
/// on the right cosets of `n` directly.
pub struct Quotient {
    group: PermGroup,
    kind: QuotientKind,
}

enum QuotientKind {
    Blocks { block_of: Vec<u32>, reps: Vec<usize> },
    Cosets { table: ElementTable, coset_of: Vec<u32>, reps: Vec<usize> },
}

impl Quotient {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn is_block_action(&self) -> bool {
        matches!(self.kind, QuotientKind::Blocks { .. })
    }

    pub fn project(&self, x: &Perm) -> Perm {
        match &self.kind {
            QuotientKind::Blocks { block_of, reps } => block_image(block_of, reps, x),
            QuotientKind::Cosets { table, coset_of, reps } => coset_image(table, coset_of, reps, x),
        }
    }

    pub fn project_group(&self, h: &PermGroup) -> PermGroup {
        let gens = h.gens().iter().map(|x| self.project(x)).collect();
        PermGroup::new(self.group.degree(), gens).unwrap()
    }
}

fn block_image(block_of: &[u32], reps: &[usize], x: &Perm) -> Perm {
    Perm::from_images_unchecked(reps.iter().map(|&r| block_of[x.apply(r)]).collect())
}

fn coset_image(table: &ElementTable, coset_of: &[u32], reps: &[usize], x: &Perm) -> Perm {
    Perm::from_images_unchecked(
        reps.iter()
            .map(|&r| {
                let y = table.get(r).mul(x);
                coset_of[table.index_of(&y).expect("element of g")]
            })
            .collect(),
    )
}

/// Action of `g` on `g/n`. Normality of `n` is always verified.
pub fn coset_action(g: &PermGroup, n: &PermGroup, cap: u64) -> Result<Quotient, PermError> {
    if n.degree() != g.degree() {
        return Err(PermError::DegreeMismatch { expected: g.degree(), found: n.degree() });
    }
    if !n.is_normal_in(g) {
        return Err(PermError::NotNormal);
    }
    let index = g.order() / n.order();
    if index > cap {
        return Err(PermError::CapExceeded { what: "quotient index", needed: index, cap });
    }

    let orbits = n.orbits();
    let mut block_of = vec![0u32; g.degree()];
    for (b, orbit) in orbits.iter().enumerate() {
        for &pt in orbit {
            block_of[pt] = b as u32;
        }
    }
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let gens: Vec<Perm> = g.gens().iter().map(|x| block_image(&block_of, &reps, x)).collect();
    let blocks = PermGroup::new(orbits.len(), gens)?;
    if blocks.order() == index {
        return Ok(Quotient { group: blocks, kind: QuotientKind::Blocks { block_of, reps } });
    }

    let table = ElementTable::new(g, cap)?;
    let n_elems = n.elements(cap)?;
    let mut coset_of = vec![u32::MAX; table.len()];
    let mut reps = Vec::new();
    for i in 0..table.len() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(i);
        let x = table.get(i);
        for h in &n_elems {
            let j = table.index_of(&h.mul(x)).ok_or(PermError::NotSubgroup)?;
            coset_of[j] = c;
        }
    }
    let gens: Vec<Perm> = g.gens().iter().map(|x| coset_image(&table, &coset_of, &reps, x)).collect();
    let group = PermGroup::new(reps.len(), gens)?;
    assert_eq!(group.order(), index, "the kernel of the coset action is n");
    Ok(Quotient { group, kind: QuotientKind::Cosets { table, coset_of, reps } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(d: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(d, gens.iter().map(|s| Perm::parse_cycles(d, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn s4_mod_klein() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let q = coset_action(&s4, &v4, 1000).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.is_block_action());
        assert!(q.project(&Perm::parse_cycles(4, "(0 1)(2 3)").unwrap()).is_identity());
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        assert_eq!(coset_action(&s3, &s3, 10).unwrap().group().order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let h = group(3, &["(0 1)"]);
        assert!(matches!(coset_action(&s3, &h, 10), Err(PermError::NotNormal)));
    }

    #[test]
    fn block_action_for_intransitive_kernel() {
        // C2 × S3 on 2 + 3 points, modulo the C2 factor
        let g = group(5, &["(0 1)", "(2 3)", "(2 3 4)"]);
        let n = group(5, &["(2 3)", "(2 3 4)"]);
        let q = coset_action(&g, &n, 100).unwrap();
        assert_eq!(q.group().order(), 2);
        assert!(q.is_block_action());
    }
}
