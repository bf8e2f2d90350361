use crate::algebra::gcd;
use crate::perm::{PermError, PermGroup, SubgroupSet};

use super::PronormError;

#[derive(Debug, Clone)]
pub struct OddOrderScan {
    /// Distinct nontrivial subgroups found, in discovery order.
    pub subgroups: Vec<PermGroup>,
    pub complete: bool,
}

/// Every nontrivial subgroup of `g` of odd order coprime to `q`, found by
/// growing cyclic subgroups one generator at a time. Any such subgroup is
/// generated by elements of odd `q`-coprime order and each intermediate
/// join is a subgroup of it, so the search is exhaustive unless more than
/// `max_subgroups` are found.
pub fn odd_order_subgroups(
    g: &PermGroup,
    q: u64,
    cap: u64,
    max_subgroups: usize,
) -> Result<OddOrderScan, PronormError> {
    if g.order() > cap {
        return Err(PermError::CapExceeded { what: "group order", needed: g.order(), cap }.into());
    }
    let admissible = |n: u64| n % 2 == 1 && gcd(n, q) == 1;
    let seeds: Vec<_> = g.iter().filter(|x| !x.is_identity() && admissible(x.order())).collect();
    let mut found = SubgroupSet::new();
    let mut queue = Vec::new();
    for x in &seeds {
        let (i, new) = found.insert(PermGroup::new(g.degree(), vec![x.clone()])?);
        if new {
            queue.push(i);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        if found.len() > max_subgroups {
            return Ok(OddOrderScan { subgroups: found.into_vec(), complete: false });
        }
        let h = found.get(queue[head]).clone();
        head += 1;
        for x in &seeds {
            if h.has(x) {
                continue;
            }
            let k = h.with_generator(x)?;
            if admissible(k.order()) {
                let (i, new) = found.insert(k);
                if new {
                    queue.push(i);
                }
            }
        }
    }
    Ok(OddOrderScan { subgroups: found.into_vec(), complete: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, psl2};

    #[test]
    fn odd_order_subgroups_of_a5() {
        // 10 of order 3 and 6 of order 5; none larger
        let scan = odd_order_subgroups(&alternating(5), 1, 100, 1000).unwrap();
        assert!(scan.complete);
        let mut orders: Vec<u64> = scan.subgroups.iter().map(|h| h.order()).collect();
        orders.sort();
        assert_eq!(orders, [vec![3; 10], vec![5; 6]].concat());
        // PSL2(5) with 5 excluded keeps only the order-3 subgroups
        let scan = odd_order_subgroups(psl2(5).unwrap().group(), 5, 100, 1000).unwrap();
        assert_eq!(scan.subgroups.len(), 10);
    }
}
