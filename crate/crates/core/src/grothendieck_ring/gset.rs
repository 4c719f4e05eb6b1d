use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::RElement;
use crate::group_kernel::{class_id, is_isomorphism, GroupTable, SubgroupHandle};
use crate::{Caps, Error, Result};

/// A finite set with an action of a finite group; `perm(g)[x]` is `g . x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSetAction {
    group: Arc<GroupTable>,
    size: usize,
    action: Vec<Vec<usize>>,
}

fn check_perm(p: &[usize], size: usize, what: &str) -> Result<()> {
    if p.len() != size {
        return Err(Error::InvalidAction(format!("{what} has length {}, expected {size}", p.len())));
    }
    let mut seen = vec![false; size];
    for &x in p {
        if x >= size || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidAction(format!("{what} is not a permutation of 0..{size}")));
        }
    }
    Ok(())
}

impl GSetAction {
    /// Full action table, one permutation per group element.
    pub fn new(group: Arc<GroupTable>, size: usize, action: Vec<Vec<usize>>) -> Result<GSetAction> {
        if action.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} permutations given for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        for (g, p) in action.iter().enumerate() {
            check_perm(p, size, &format!("permutation of element {g}"))?;
        }
        if action[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                if (0..size).any(|x| action[gh][x] != action[g][action[h][x]]) {
                    return Err(Error::InvalidAction(format!("action is not a homomorphism at ({g}, {h})")));
                }
            }
        }
        Ok(GSetAction { group, size, action })
    }

    /// Extends permutations given for some elements (typically generators) to the whole group.
    /// An empty map means the trivial action.
    pub fn from_partial(group: Arc<GroupTable>, size: usize, given: &BTreeMap<usize, Vec<usize>>) -> Result<GSetAction> {
        let action = extend_action(&group, size, given)?;
        GSetAction::new(group, size, action)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// One-point set with the trivial action.
    pub fn point(group: Arc<GroupTable>) -> GSetAction {
        let action = vec![vec![0]; group.order()];
        GSetAction { group, size: 1, action }
    }

    pub fn empty(group: Arc<GroupTable>) -> GSetAction {
        let action = vec![Vec::new(); group.order()];
        GSetAction { group, size: 0, action }
    }

    /// Left cosets `gH`, listed by smallest element, with left multiplication.
    pub fn cosets(group: Arc<GroupTable>, h: &SubgroupHandle) -> GSetAction {
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for &k in h.elements() {
                    coset_of[group.mul(g, k)] = reps.len();
                }
                reps.push(g);
            }
        }
        let action = (0..n)
            .map(|a| reps.iter().map(|&r| coset_of[group.mul(a, r)]).collect())
            .collect();
        GSetAction { size: reps.len(), group, action }
    }

    /// Orbits, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = self.group.elements().map(|g| self.action[g][x]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> SubgroupHandle {
        let elems: Vec<usize> = self.group.elements().filter(|&g| self.action[g][x] == x).collect();
        SubgroupHandle::new(&self.group, &elems).expect("stabilizers are subgroups")
    }

    pub fn is_invariant(&self, subset: &[usize]) -> bool {
        let mut mask = FixedBitSet::with_capacity(self.size);
        mask.extend(subset.iter().copied().filter(|&x| x < self.size));
        subset.iter().all(|&x| x < self.size) && subset.iter().all(|&x| self.group.elements().all(|g| mask.contains(self.action[g][x])))
    }

    /// Restriction to an invariant subset; points renumbered in increasing order.
    pub fn restrict(&self, subset: &[usize]) -> Result<GSetAction> {
        if !self.is_invariant(subset) {
            return Err(Error::InvalidAction("subset is not invariant".into()));
        }
        let mut pts: Vec<usize> = subset.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in pts.iter().enumerate() {
            index[x] = i;
        }
        let action = self
            .action
            .iter()
            .map(|p| pts.iter().map(|&x| index[p[x]]).collect())
            .collect();
        Ok(GSetAction { group: self.group.clone(), size: pts.len(), action })
    }

    /// Complement of an invariant subset.
    pub fn complement(&self, subset: &[usize]) -> Result<GSetAction> {
        let mut mask = FixedBitSet::with_capacity(self.size);
        mask.extend(subset.iter().copied().filter(|&x| x < self.size));
        let rest: Vec<usize> = (0..self.size).filter(|&x| !mask.contains(x)).collect();
        self.restrict(&rest)
    }

    fn same_group(&self, other: &GSetAction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn disjoint_union(&self, other: &GSetAction) -> Result<GSetAction> {
        self.same_group(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(p, q)| p.iter().copied().chain(q.iter().map(|&y| y + self.size)).collect())
            .collect();
        Ok(GSetAction { group: self.group.clone(), size: self.size + other.size, action })
    }

    /// Diagonal action on the Cartesian product; `(x, y)` has index `x * |Y| + y`.
    pub fn product(&self, other: &GSetAction) -> Result<GSetAction> {
        self.same_group(other)?;
        let m = other.size;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(p, q)| (0..self.size * m).map(|i| p[i / m] * m + q[i % m]).collect())
            .collect();
        Ok(GSetAction { group: self.group.clone(), size: self.size * m, action })
    }

    /// Same action with points renamed by `perm` (old -> new).
    pub fn relabel_points(&self, perm: &[usize]) -> Result<GSetAction> {
        check_perm(perm, self.size, "point relabeling")?;
        let mut action = vec![vec![0; self.size]; self.group.order()];
        for (g, p) in self.action.iter().enumerate() {
            for x in 0..self.size {
                action[g][perm[x]] = perm[p[x]];
            }
        }
        Ok(GSetAction { group: self.group.clone(), size: self.size, action })
    }
}

pub(crate) fn extend_action(group: &GroupTable, size: usize, given: &BTreeMap<usize, Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    if given.is_empty() {
        return Ok(vec![(0..size).collect(); group.order()]);
    }
    for (&g, p) in given {
        group.check_element(g)?;
        check_perm(p, size, &format!("permutation of element {g}"))?;
    }
    let mut action: Vec<Option<Vec<usize>>> = vec![None; group.order()];
    action[0] = Some((0..size).collect());
    if let Some(p) = given.get(&0) {
        if p.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
    }
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, ps) in given {
            let y = group.mul(x, s);
            let px = action[x].as_ref().unwrap();
            let img: Vec<usize> = (0..size).map(|pt| px[ps[pt]]).collect();
            match &action[y] {
                None => {
                    action[y] = Some(img);
                    queue.push(y);
                }
                Some(existing) if *existing != img => {
                    return Err(Error::InvalidAction(format!("given permutations are inconsistent at element {y}")));
                }
                _ => {}
            }
        }
    }
    for (g, p) in given {
        if action[*g].as_ref() != Some(p) {
            return Err(Error::InvalidAction(format!("permutation of element {g} contradicts the others")));
        }
    }
    action
        .into_iter()
        .enumerate()
        .map(|(g, p)| p.ok_or_else(|| Error::InvalidAction(format!("element {g} is not generated by the given elements"))))
        .collect()
}

/// Class of a finite G-set in the ring: one generator `T[Stab(x)]` per orbit.
pub fn gset_class(x: &GSetAction, caps: &Caps) -> Result<RElement> {
    let mut r = RElement::zero();
    for orbit in x.orbits() {
        let stab = x.stabilizer(orbit[0]);
        r.add_term(class_id(&stab.to_table(&x.group), caps)?, 1);
    }
    Ok(r)
}

/// Induction from `H` to `G` along `embedding` (H's element `h` maps to `embedding[h]`).
///
/// Points are classes of pairs `(g, x)` under `(g, x) ~ (g h, h^-1 x)`; each class is
/// named by its lexicographically smallest pair, and points are ordered by that pair.
/// `G` acts by left multiplication on the first coordinate.
pub fn induce(x: &GSetAction, g: Arc<GroupTable>, embedding: &[usize]) -> Result<GSetAction> {
    let h = x.group();
    if embedding.len() != h.order() {
        return Err(Error::InvalidEmbedding(format!(
            "embedding has {} entries for a group of order {}",
            embedding.len(),
            h.order()
        )));
    }
    for &e in embedding {
        g.check_element(e).map_err(|e| Error::InvalidEmbedding(e.to_string()))?;
    }
    let image: Vec<usize> = {
        let mut v = embedding.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    if image.len() != h.order() {
        return Err(Error::InvalidEmbedding("not injective".into()));
    }
    let sub = SubgroupHandle::new(&g, &image).map_err(|e| Error::InvalidEmbedding(e.to_string()))?;
    // the embedding must be an isomorphism onto its image
    let index_in_sub: HashMap<usize, usize> = sub.elements().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let phi: Vec<usize> = embedding.iter().map(|e| index_in_sub[e]).collect();
    if !is_isomorphism(h, &sub.to_table(&g), &phi) {
        return Err(Error::InvalidEmbedding("not a homomorphism".into()));
    }

    let (ng, nx) = (g.order(), x.size());
    let canon = |a: usize, p: usize| -> (usize, usize) {
        h.elements()
            .map(|k| (g.mul(a, embedding[k]), x.act(h.inv(k), p)))
            .min()
            .expect("nonempty group")
    };
    let mut point_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut class_of = vec![vec![0usize; nx]; ng];
    for a in 0..ng {
        for p in 0..nx {
            let c = canon(a, p);
            let next = point_of.len();
            let id = *point_of.entry(c).or_insert(next);
            class_of[a][p] = id;
        }
    }
    // pairs are visited in lexicographic order, so ids follow the order of class minima
    let mut reps: Vec<(usize, usize)> = vec![(0, 0); point_of.len()];
    for (&pair, &id) in &point_of {
        reps[id] = pair;
    }
    let action = (0..ng)
        .map(|b| reps.iter().map(|&(a, p)| class_of[g.mul(b, a)][p]).collect())
        .collect();
    Ok(GSetAction { group: g, size: reps.len(), action })
}
