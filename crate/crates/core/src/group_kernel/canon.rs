//! Canonical multiplication tables.
//!
//! A table is relabeled by a breadth-first traversal driven by an ordered
//! generating tuple. The tuples considered are the irredundant generating tuples
//! of minimal length whose element-signature sequence is lexicographically
//! smallest; that family is mapped onto itself by every isomorphism, so the
//! smallest resulting table is an isomorphism invariant.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::subgroup::{cyclic_generators, join_with};
use super::GroupTable;

type Sig = (u32, u32, u32);

fn signatures(g: &GroupTable) -> Vec<Sig> {
    let n = g.order();
    let mut class_size = vec![0u32; n];
    for class in g.conjugacy_classes() {
        for &x in &class {
            class_size[x] = class.len() as u32;
        }
    }
    let mut roots = vec![0u32; n];
    for y in 0..n {
        roots[g.mul(y, y)] += 1;
    }
    (0..n).map(|x| (g.element_order(x) as u32, class_size[x], roots[x])).collect()
}

struct Search<'a> {
    g: &'a GroupTable,

    cyclic: Vec<usize>,
    memo: HashMap<(FixedBitSet, usize), bool>,
}

impl Search<'_> {
    /// Whether `h` reaches the whole group after exactly `r` more irredundant generators.
    fn can_complete(&mut self, h: &FixedBitSet, r: usize) -> bool {
        let is_full = h.count_ones(..) == self.g.order();
        if r == 0 || is_full {
            return r == 0 && is_full;
        }
        if let Some(&v) = self.memo.get(&(h.clone(), r)) {
            return v;
        }
        let mut ok = false;
        for i in 0..self.cyclic.len() {
            let x = self.cyclic[i];
            if h.contains(x) {
                continue;
            }
            let k = join_with(self.g, h, &[x]);
            if self.can_complete(&k, r - 1) {
                ok = true;
                break;
            }
        }
        self.memo.insert((h.clone(), r), ok);
        ok
    }
}

fn collect_tuples(
    search: &mut Search<'_>,
    by_sig: &[usize],
    sig: &[Sig],
    d: usize,
    h: &FixedBitSet,
    tuple: &mut Vec<usize>,
    best: &mut Option<Vec<Sig>>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = tuple.len();
    if depth == d {
        let seq: Vec<Sig> = tuple.iter().map(|&x| sig[x]).collect();
        match best {
            Some(b) if seq > *b => {}
            Some(b) if seq == *b => out.push(tuple.clone()),
            _ => {
                *best = Some(seq);
                out.clear();
                out.push(tuple.clone());
            }
        }
        return;
    }
    for &x in by_sig {
        if h.contains(x) {
            continue;
        }
        if let Some(b) = best.as_ref() {
            let prefix: Vec<Sig> = tuple.iter().map(|&y| sig[y]).chain(std::iter::once(sig[x])).collect();
            if prefix.as_slice() > &b[..=depth] {
                // candidates are sorted by signature; nothing later can do better
                break;
            }
        }
        let k = join_with(search.g, h, &[x]);
        if !search.can_complete(&k, d - depth - 1) {
            continue;
        }
        tuple.push(x);
        collect_tuples(search, by_sig, sig, d, &k, tuple, best, out);
        tuple.pop();
    }
}

/// Canonical relabeling of `g` as a flat row-major table (one byte per entry).
///
/// Requires `g.order() <= 255`.
pub(crate) fn canonical_table(g: &GroupTable) -> Vec<u8> {
    let n = g.order();
    assert!(n <= 255, "canonical tables are byte-encoded");
    if n == 1 {
        return vec![0];
    }
    let sig = signatures(g);
    let mut by_sig: Vec<usize> = (1..n).collect();
    by_sig.sort_by_key(|&x| (sig[x], x));

    let mut search = Search { g, cyclic: cyclic_generators(g), memo: HashMap::new() };
    let mut trivial = FixedBitSet::with_capacity(n);
    trivial.insert(0);
    let d = (1..=n).find(|&d| search.can_complete(&trivial, d)).expect("a group generates itself");

    let mut tuples = Vec::new();
    let mut best = None;
    collect_tuples(&mut search, &by_sig, &sig, d, &trivial, &mut Vec::new(), &mut best, &mut tuples);

    let mut best_table: Option<Vec<u8>> = None;
    let mut label = vec![0usize; n];
    let mut elem = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for tuple in &tuples {
        elem.clear();
        seen.iter_mut().for_each(|s| *s = false);
        elem.push(0);
        seen[0] = true;
        label[0] = 0;
        let mut i = 0;
        while i < elem.len() {
            let x = elem[i];
            i += 1;
            for &s in tuple {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    label[y] = elem.len();
                    elem.push(y);
                }
            }
        }
        debug_assert_eq!(elem.len(), n);

        let entry = |a: usize, b: usize| label[g.mul(elem[a], elem[b])] as u8;
        let replace = match &best_table {
            None => true,
            Some(bt) => {
                let mut ord = std::cmp::Ordering::Equal;
                'cmp: for a in 0..n {
                    for b in 0..n {
                        let v = entry(a, b);
                        let w = bt[a * n + b];
                        if v != w {
                            ord = v.cmp(&w);
                            break 'cmp;
                        }
                    }
                }
                ord == std::cmp::Ordering::Less
            }
        };
        if replace {
            best_table = Some((0..n * n).map(|i| entry(i / n, i % n)).collect());
        }
    }
    best_table.expect("at least one generating tuple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::build;

    #[test]
    fn cyclic_canonical_is_addition_table() {
        let t = canonical_table(&build::cyclic(5));
        let expect: Vec<u8> = (0..25).map(|i| ((i / 5 + i % 5) % 5) as u8).collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn relabeled_s3_has_same_canonical_table() {
        let g = build::symmetric(3);
        let h = g.relabel(&[0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(canonical_table(&g), canonical_table(&h));
    }
}
