use std::sync::Arc;

use super::definition::{is_pronormal_sylow_with, PronormalityVerdict};
use super::{precondition, PronormError};
use crate::algebra::two_part;
use crate::perm::{normalizer, sylow_2, ElementTable, PermGroup, SubgroupHandle, SubgroupSet};

#[derive(Debug, Clone)]
pub struct OvergroupScan {
    /// Subgroups `S ≤ H ≤ G`, ordered by increasing order (discovery order
    /// breaks ties).
    pub subgroups: Vec<SubgroupHandle>,
    /// False when the scan stopped at `max_subgroups`.
    pub complete: bool,
}

/// All subgroups of `g` containing the Sylow 2-subgroup `s`: a breadth-first
/// search over joins `⟨H, x⟩`. Since `⟨H, x⟩` depends only on the double
/// coset `HxH`, one `x` per double coset is tried.
pub fn odd_index_overgroups(
    g: &PermGroup,
    s: &PermGroup,
    cap: u64,
    max_subgroups: usize,
) -> Result<OvergroupScan, PronormError> {
    precondition(s.is_subgroup_of(g), || "s must be a subgroup of g".into())?;
    let target = two_part(g.order());
    precondition(s.order() == target, || format!("|S| = {} but the 2-part of |G| is {target}", s.order()))?;
    let table = ElementTable::new(g, cap)?;
    let mut found = SubgroupSet::new();
    found.insert(s.clone());
    let mut head = 0;
    let mut complete = true;
    'bfs: while head < found.len() {
        let h = found.get(head).clone();
        head += 1;
        let mut covered = vec![false; table.len()];
        for start in 0..table.len() {
            if covered[start] {
                continue;
            }
            // mark H·x·H
            covered[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let e = table.get(i);
                for y in h.gens() {
                    for z in [e.mul(y), y.mul(e)] {
                        let j = table.index_of(&z).expect("g is closed");
                        if !covered[j] {
                            covered[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            let x = table.get(start);
            if h.has(x) {
                continue;
            }
            found.insert(h.with_generator(x)?);
            if found.len() > max_subgroups {
                complete = false;
                break 'bfs;
            }
        }
    }
    let ambient = Arc::new(g.clone());
    let mut subgroups =
        found.into_vec().into_iter().map(|h| SubgroupHandle::new(h, ambient.clone())).collect::<Result<Vec<_>, _>>()?;
    subgroups.sort_by_key(|h| h.order());
    Ok(OvergroupScan { subgroups, complete })
}

#[derive(Debug, Clone)]
pub struct NonpronormalSearch {
    pub sylow: PermGroup,
    pub sylow_normalizer: PermGroup,
    /// Number of odd-index subgroups tested.
    pub checked: usize,
    pub found: Option<(SubgroupHandle, PronormalityVerdict)>,
    /// False when the overgroup scan was truncated.
    pub complete: bool,
}

/// Tests every overgroup of a Sylow 2-subgroup through the Sylow reduction
/// and returns the first that is not pronormal.
pub fn find_nonpronormal_odd_index(
    g: &PermGroup,
    cap: u64,
    max_subgroups: usize,
) -> Result<NonpronormalSearch, PronormError> {
    let s = sylow_2(g, cap)?;
    let ns = normalizer(g, &s, cap)?;
    let scan = odd_index_overgroups(g, &s, cap, max_subgroups)?;
    let mut search =
        NonpronormalSearch { sylow: s, sylow_normalizer: ns, checked: 0, found: None, complete: scan.complete };
    for h in scan.subgroups {
        search.checked += 1;
        let verdict = is_pronormal_sylow_with(h.group(), &search.sylow_normalizer, cap)?;
        if !verdict.pronormal {
            search.found = Some((h, verdict));
            break;
        }
    }
    Ok(search)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, symmetric, wreath_product};

    #[test]
    fn overgroups_in_s4() {
        let g = symmetric(4);
        let s = sylow_2(&g, 100).unwrap();
        let scan = odd_index_overgroups(&g, &s, 100, 100).unwrap();
        assert!(scan.complete);
        let orders: Vec<u64> = scan.subgroups.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![8, 24]);
        let search = find_nonpronormal_odd_index(&g, 100, 100).unwrap();
        assert!(search.found.is_none());
        assert_eq!(search.checked, 2);
    }

    #[test]
    fn overgroups_in_c3_wreath_s2() {
        let w = wreath_product(&cyclic(3), &symmetric(2)).unwrap();
        let g = w.group();
        let s = sylow_2(g, 100).unwrap();
        let scan = odd_index_overgroups(g, &s, 100, 100).unwrap();
        let orders: Vec<u64> = scan.subgroups.iter().map(|h| h.order()).collect();
        // S, S × diagonal, S ⋉ anti-diagonal, G
        assert_eq!(orders, vec![2, 6, 6, 18]);
        assert!(scan.subgroups.iter().all(|h| h.index() % 2 == 1));
        let truncated = odd_index_overgroups(g, &s, 100, 2).unwrap();
        assert!(!truncated.complete);
        assert!(find_nonpronormal_odd_index(g, 100, 100).unwrap().found.is_none());
    }

    #[test]
    fn transposition_is_a_nonpronormal_odd_index_subgroup_of_s2_wreath() {
        // in C2 × C2 = ⟨(0 1), (2 3)⟩ every subgroup is normal; in S3 × C2 Sylow
        // subgroups are not normal but the search must still find nothing
        let g = PermGroup::new(
            5,
            vec![
                crate::perm::Perm::parse_cycles(5, "(0 1 2)").unwrap(),
                crate::perm::Perm::parse_cycles(5, "(0 1)").unwrap(),
                crate::perm::Perm::parse_cycles(5, "(3 4)").unwrap(),
            ],
        )
        .unwrap();
        let search = find_nonpronormal_odd_index(&g, 100, 100).unwrap();
        assert!(search.complete && search.found.is_none());
    }

    #[test]
    fn rejects_non_sylow_input() {
        let g = symmetric(4);
        let t = PermGroup::new(4, vec![crate::perm::Perm::parse_cycles(4, "(0 1)").unwrap()]).unwrap();
        assert!(odd_index_overgroups(&g, &t, 100, 100).is_err());
    }
}
