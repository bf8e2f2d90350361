use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{PermError, PermGroup};

/// Conjugation-sensitive key for bucketing subgroups: the order and the
/// orbit partition (each point labelled by the least point of its orbit).
/// Both depend only on the subgroup, not on its generators; equal keys are
/// resolved by exact membership tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub orbit_labels: Vec<u32>,
}

impl Fingerprint {
    pub fn of(g: &PermGroup) -> Self {
        let mut labels = vec![0u32; g.degree()];
        for orbit in g.orbits() {
            for &pt in &orbit {
                labels[pt] = orbit[0] as u32;
            }
        }
        Fingerprint { order: g.order(), orbit_labels: labels }
    }
}

/// A group known to lie inside an ambient group.
#[derive(Debug, Clone)]
pub struct SubgroupHandle {
    group: PermGroup,
    ambient: Arc<PermGroup>,
    fingerprint: Fingerprint,
}

impl SubgroupHandle {
    pub fn new(group: PermGroup, ambient: Arc<PermGroup>) -> Result<Self, PermError> {
        if group.degree() != ambient.degree() {
            return Err(PermError::DegreeMismatch { expected: ambient.degree(), found: group.degree() });
        }
        if !group.is_subgroup_of(&ambient) {
            return Err(PermError::NotSubgroup);
        }
        let fingerprint = Fingerprint::of(&group);
        Ok(SubgroupHandle { group, ambient, fingerprint })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        &self.fingerprint
    }

    pub fn order(&self) -> u64 {
        self.fingerprint.order
    }

    pub fn index(&self) -> u64 {
        self.ambient.order() / self.order()
    }
}

/// Insertion-ordered set of subgroups with fingerprint bucketing.
#[derive(Debug, Default)]
pub struct SubgroupSet {
    items: Vec<PermGroup>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
}

impl SubgroupSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position(&self, g: &PermGroup) -> Option<usize> {
        let key = Fingerprint::of(g);
        self.buckets.get(&key)?.iter().copied().find(|&i| self.items[i].is_subgroup_of(g))
    }

    /// Returns the index of `g` and whether it was new.
    pub fn insert(&mut self, g: PermGroup) -> (usize, bool) {
        let key = Fingerprint::of(&g);
        let bucket = self.buckets.entry(key).or_default();
        // equal order, so one inclusion suffices
        if let Some(&i) = bucket.iter().find(|&&i| self.items[i].is_subgroup_of(&g)) {
            return (i, false);
        }
        let i = self.items.len();
        bucket.push(i);
        self.items.push(g);
        (i, true)
    }

    pub fn get(&self, i: usize) -> &PermGroup {
        &self.items[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &PermGroup> {
        self.items.iter()
    }

    pub fn into_vec(self) -> Vec<PermGroup> {
        self.items
    }
}
