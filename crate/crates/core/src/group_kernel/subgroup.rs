use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::GroupTable;
use crate::{Error, Result};

/// A subgroup of some ambient [`GroupTable`], stored as its sorted element list.
///
/// The handle does not own its parent; operations take the ambient table explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupHandle {
    elements: Vec<usize>,
    mask: FixedBitSet,
}

impl std::fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl SubgroupHandle {
    fn from_mask(mask: FixedBitSet) -> SubgroupHandle {
        SubgroupHandle { elements: mask.ones().collect(), mask }
    }

    /// Checks closure under the parent's multiplication and inverses.
    pub fn new(parent: &GroupTable, elements: &[usize]) -> Result<SubgroupHandle> {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        for &x in elements {
            parent.check_element(x)?;
            mask.insert(x);
        }
        if !mask.contains(0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for a in mask.ones() {
            if !mask.contains(parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse of {a}")));
            }
            for b in mask.ones() {
                if !mask.contains(parent.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a}*{b} escapes")));
                }
            }
        }
        Ok(SubgroupHandle::from_mask(mask))
    }

    pub fn trivial(parent: &GroupTable) -> SubgroupHandle {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        mask.insert(0);
        SubgroupHandle::from_mask(mask)
    }

    pub fn whole(parent: &GroupTable) -> SubgroupHandle {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        mask.insert_range(..);
        SubgroupHandle::from_mask(mask)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_normal(&self, parent: &GroupTable) -> bool {
        parent
            .elements()
            .all(|g| self.elements.iter().all(|&h| self.mask.contains(parent.conj(g, h))))
    }

    pub fn conjugate(&self, parent: &GroupTable, g: usize) -> SubgroupHandle {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        for &h in &self.elements {
            mask.insert(parent.conj(g, h));
        }
        SubgroupHandle::from_mask(mask)
    }

    /// The conjugate with the lexicographically smallest sorted element list.
    pub fn conjugacy_representative(&self, parent: &GroupTable) -> SubgroupHandle {
        parent
            .elements()
            .map(|g| self.conjugate(parent, g))
            .min_by(|a, b| a.elements.cmp(&b.elements))
            .expect("nonempty group")
    }

    pub fn is_conjugate_to(&self, parent: &GroupTable, other: &SubgroupHandle) -> bool {
        self.order() == other.order() && parent.elements().any(|g| &self.conjugate(parent, g) == other)
    }

    /// Subgroup viewed as a group in its own right; element `i` of the result
    /// is `self.elements()[i]` of the parent.
    pub fn to_table(&self, parent: &GroupTable) -> GroupTable {
        let k = self.order();
        let mut index = vec![u32::MAX; parent.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            index[x] = i as u32;
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in &self.elements {
            for &b in &self.elements {
                mul.push(index[parent.mul(a, b)]);
            }
        }
        // elements are sorted and contain 0, so the identity keeps label 0
        GroupTable::from_trusted(k, mul)
    }
}

fn closure_mask(g: &GroupTable, start: &FixedBitSet, gens: &[usize]) -> FixedBitSet {
    let mut mask = start.clone();
    mask.insert(0);
    let mut queue: Vec<usize> = mask.ones().collect();
    let mut gens_all: Vec<usize> = gens.to_vec();
    gens_all.extend(start.ones());
    gens_all.sort_unstable();
    gens_all.dedup();
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &s in &gens_all {
            let y = g.mul(x, s);
            if !mask.contains(y) {
                mask.insert(y);
                queue.push(y);
            }
        }
    }
    mask
}

/// Smallest subgroup containing `gens`.
pub fn generated_subgroup(g: &GroupTable, gens: &[usize]) -> Result<SubgroupHandle> {
    for &x in gens {
        g.check_element(x)?;
    }
    let empty = FixedBitSet::with_capacity(g.order());
    Ok(SubgroupHandle::from_mask(closure_mask(g, &empty, gens)))
}

/// Subgroup generated by an existing subgroup and extra elements.
pub(crate) fn join_with(g: &GroupTable, h: &FixedBitSet, extra: &[usize]) -> FixedBitSet {
    closure_mask(g, h, extra)
}

/// One element per cyclic subgroup (its smallest generator).
pub(crate) fn cyclic_generators(g: &GroupTable) -> Vec<usize> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let c = closure_mask(g, &FixedBitSet::with_capacity(g.order()), &[x]);
        if seen.insert(c) {
            out.push(x);
        }
    }
    out
}

fn sort_subgroups(list: &mut [SubgroupHandle]) {
    list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
}

/// All subgroups, or one per conjugacy class, sorted by order then element list.
///
/// Built by repeatedly joining known subgroups with cyclic subgroups.
pub fn subgroups(g: &GroupTable, up_to_conjugacy: bool) -> Vec<SubgroupHandle> {
    let cyc = cyclic_generators(g);
    let trivial = SubgroupHandle::trivial(g).mask;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for &x in &cyc {
            if h.contains(x) {
                continue;
            }
            let k = join_with(g, &h, &[x]);
            if !seen.contains(&k) {
                seen.insert(k.clone());
                frontier.push(k);
            }
        }
    }
    let mut all: Vec<SubgroupHandle> = seen.into_iter().map(SubgroupHandle::from_mask).collect();
    if up_to_conjugacy {
        let mut reps: Vec<SubgroupHandle> = all.iter().map(|s| s.conjugacy_representative(g)).collect();
        reps.sort();
        reps.dedup();
        all = reps;
    }
    sort_subgroups(&mut all);
    all
}

/// Normal closure of a single element.
fn normal_closure(g: &GroupTable, x: usize) -> FixedBitSet {
    let class: Vec<usize> = g.elements().map(|h| g.conj(h, x)).collect();
    closure_mask(g, &FixedBitSet::with_capacity(g.order()), &class)
}

/// All normal subgroups, sorted by order then element list.
pub fn normal_subgroups(g: &GroupTable) -> Vec<SubgroupHandle> {
    let mut minimal: Vec<FixedBitSet> = Vec::new();
    for class in g.conjugacy_classes() {
        let n = normal_closure(g, class[0]);
        if !minimal.contains(&n) {
            minimal.push(n);
        }
    }
    let trivial = SubgroupHandle::trivial(g).mask;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for m in &minimal {
            if m.is_subset(&h) {
                continue;
            }
            // product of normal subgroups
            let mut k = FixedBitSet::with_capacity(g.order());
            for a in h.ones() {
                for b in m.ones() {
                    k.insert(g.mul(a, b));
                }
            }
            if !seen.contains(&k) {
                seen.insert(k.clone());
                frontier.push(k);
            }
        }
    }
    let mut all: Vec<SubgroupHandle> = seen.into_iter().map(SubgroupHandle::from_mask).collect();
    sort_subgroups(&mut all);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::build;

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = build::cyclic(1);
        let subs = subgroups(&g, false);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].elements(), &[0]);
    }

    #[test]
    fn s3_subgroups() {
        let g = build::symmetric(3);
        let subs = subgroups(&g, false);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(subgroups(&g, true).iter().map(|s| s.order()).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn z4_subgroups() {
        let g = build::cyclic(4);
        let orders: Vec<usize> = subgroups(&g, false).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn generated() {
        let g = build::symmetric(3);
        assert_eq!(generated_subgroup(&g, &[]).unwrap().elements(), &[0]);
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(generated_subgroup(&g, &[t]).unwrap().order(), 2);
        let z6 = build::cyclic(6);
        assert_eq!(generated_subgroup(&z6, &[2]).unwrap().order(), 3);
        assert!(generated_subgroup(&z6, &[6]).is_err());
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = build::symmetric(3);
        let orders: Vec<usize> = normal_subgroups(&g).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn handle_validation() {
        let g = build::cyclic(4);
        assert!(SubgroupHandle::new(&g, &[0, 2]).is_ok());
        assert!(SubgroupHandle::new(&g, &[0, 1]).is_err());
        assert!(SubgroupHandle::new(&g, &[2]).is_err());
    }

    #[test]
    fn subgroup_as_table() {
        let g = build::cyclic(6);
        let h = generated_subgroup(&g, &[2]).unwrap();
        let t = h.to_table(&g);
        assert_eq!(t.order(), 3);
        assert_eq!(t.element_order(1), 3);
    }
}
