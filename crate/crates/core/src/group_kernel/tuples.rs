use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::subgroup::{generated_subgroup, SubgroupHandle};
use super::GroupTable;
use crate::{Caps, Error, Result};

fn check_caps(g: &GroupTable, len: usize, caps: &Caps) -> Result<()> {
    if len > caps.tuple_len {
        return Err(Error::cap("commuting tuple length", len as u128, caps.tuple_len as u128));
    }
    let work = (g.order() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if work > caps.enumeration {
        return Err(Error::cap("commuting tuple enumeration size", work, caps.enumeration));
    }
    Ok(())
}

/// Streams pairwise-commuting `(k+1)`-tuples in lexicographic order, each with the
/// subgroup it generates.
pub struct CommutingTuples<'a> {
    g: &'a GroupTable,
    len: usize,
    // per depth: candidates (common centralizer of the prefix) and cursor
    stack: Vec<(Vec<usize>, usize)>,
    tuple: Vec<usize>,
}

impl Iterator for CommutingTuples<'_> {
    type Item = (Vec<usize>, SubgroupHandle);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let depth = self.stack.len();
            if depth == 0 {
                return None;
            }
            let (cands, pos) = self.stack.last_mut().unwrap();
            if *pos >= cands.len() {
                self.stack.pop();
                self.tuple.pop();
                continue;
            }
            let x = cands[*pos];
            *pos += 1;
            self.tuple.truncate(depth - 1);
            self.tuple.push(x);
            if depth == self.len {
                let sub = generated_subgroup(self.g, &self.tuple).expect("valid elements");
                return Some((self.tuple.clone(), sub));
            }
            let next: Vec<usize> = cands.iter().copied().filter(|&y| self.g.commute(x, y)).collect();
            self.stack.push((next, 0));
        }
    }
}

/// All pairwise-commuting `(k+1)`-tuples of `g`.
pub fn commuting_tuples<'a>(g: &'a GroupTable, k: usize, caps: &Caps) -> Result<CommutingTuples<'a>> {
    let len = k + 1;
    check_caps(g, len, caps)?;
    Ok(CommutingTuples { g, len, stack: vec![(g.elements().collect(), 0)], tuple: Vec::with_capacity(len) })
}

/// Number of pairwise-commuting tuples of length `len` (memoized over common centralizers).
pub fn count_commuting_tuples(g: &GroupTable, len: usize, caps: &Caps) -> Result<u128> {
    check_caps(g, len, caps)?;
    let centralizers: Vec<FixedBitSet> = g
        .elements()
        .map(|x| {
            let mut c = FixedBitSet::with_capacity(g.order());
            c.extend(g.elements().filter(|&y| g.commute(x, y)));
            c
        })
        .collect();

    fn count(
        set: &FixedBitSet,
        r: usize,
        centralizers: &[FixedBitSet],
        memo: &mut HashMap<(FixedBitSet, usize), u128>,
    ) -> u128 {
        match r {
            0 => return 1,
            1 => return set.count_ones(..) as u128,
            _ => {}
        }
        if let Some(&v) = memo.get(&(set.clone(), r)) {
            return v;
        }
        let mut total = 0;
        for x in set.ones() {
            let mut next = set.clone();
            next.intersect_with(&centralizers[x]);
            total += count(&next, r - 1, centralizers, memo);
        }
        memo.insert((set.clone(), r), total);
        total
    }

    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    Ok(count(&all, len, &centralizers, &mut HashMap::new()))
}
