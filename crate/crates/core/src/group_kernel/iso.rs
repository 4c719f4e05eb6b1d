use super::{subgroup, GroupTable};

/// Per-element invariants preserved by every isomorphism.
fn element_signatures(g: &GroupTable) -> Vec<(usize, usize)> {
    let mut class_size = vec![0; g.order()];
    for class in g.conjugacy_classes() {
        for &x in &class {
            class_size[x] = class.len();
        }
    }
    g.elements().map(|x| (g.element_order(x), class_size[x])).collect()
}

fn commutator_subgroup_order(g: &GroupTable) -> usize {
    let mut comms: Vec<usize> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            comms.push(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    comms.sort_unstable();
    comms.dedup();
    subgroup::generated_subgroup(g, &comms).expect("valid elements").order()
}

#[derive(PartialEq, Eq, Debug)]
struct Screen {
    order: usize,
    profile: Vec<(usize, usize)>,
    center: usize,
    abelianization: usize,
}

fn screen(g: &GroupTable) -> Screen {
    let mut profile = element_signatures(g);
    profile.sort_unstable();
    Screen {
        order: g.order(),
        profile,
        center: g.center_size(),
        abelianization: g.order() / commutator_subgroup_order(g),
    }
}

/// Greedy generating sequence, preferring elements of large order.
fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut h = subgroup::SubgroupHandle::trivial(g);
    for x in by_order {
        if h.order() == g.order() {
            break;
        }
        if !h.contains(x) {
            gens.push(x);
            h = subgroup::generated_subgroup(g, &gens).expect("valid elements");
        }
    }
    gens
}

/// Extends generator images along a breadth-first traversal. Returns the map if it is
/// a well-defined bijective homomorphism.
fn extend(g1: &GroupTable, g2: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; g1.order()];
    phi[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g1.mul(x, s);
            let img = g2.mul(phi[x], t);
            if phi[y] == UNSET {
                phi[y] = img;
                queue.push(y);
            } else if phi[y] != img {
                return None;
            }
        }
    }
    let mut hit = vec![false; g2.order()];
    for &y in &phi {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    Some(phi)
}

/// Checks that `phi` is a bijective homomorphism `g1 -> g2`.
pub fn is_isomorphism(g1: &GroupTable, g2: &GroupTable, phi: &[usize]) -> bool {
    if g1.order() != g2.order() || phi.len() != g1.order() {
        return false;
    }
    let mut hit = vec![false; g2.order()];
    for &y in phi {
        if y >= g2.order() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    g1.elements()
        .all(|a| g1.elements().all(|b| phi[g1.mul(a, b)] == g2.mul(phi[a], phi[b])))
}

/// Returns an explicit isomorphism `g1 -> g2` (indexed by `g1`'s elements), if any.
///
/// Cheap invariants are compared first; then generator images are searched with
/// backtracking, pruned by element signatures and generated-subgroup orders.
pub fn are_isomorphic(g1: &GroupTable, g2: &GroupTable) -> Option<Vec<usize>> {
    if g1.order() != g2.order() {
        return None;
    }
    if screen(g1) != screen(g2) {
        return None;
    }
    let sig1 = element_signatures(g1);
    let sig2 = element_signatures(g2);
    let gens = generating_sequence(g1);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g2.elements().filter(|&t| sig2[t] == sig1[s]).collect())
        .collect();
    let prefix_orders: Vec<usize> = (1..=gens.len())
        .map(|i| subgroup::generated_subgroup(g1, &gens[..i]).expect("valid").order())
        .collect();

    fn search(
        g1: &GroupTable,
        g2: &GroupTable,
        gens: &[usize],
        candidates: &[Vec<usize>],
        prefix_orders: &[usize],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let depth = images.len();
        if depth == gens.len() {
            return extend(g1, g2, gens, images);
        }
        for &t in &candidates[depth] {
            images.push(t);
            let ok = subgroup::generated_subgroup(g2, images).expect("valid").order() == prefix_orders[depth];
            if ok {
                if let Some(phi) = search(g1, g2, gens, candidates, prefix_orders, images) {
                    return Some(phi);
                }
            }
            images.pop();
        }
        None
    }

    search(g1, g2, &gens, &candidates, &prefix_orders, &mut Vec::with_capacity(gens.len()))
}
