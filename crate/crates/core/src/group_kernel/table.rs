use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. Construct through [`GroupTable::validate`]
/// (or one of the builders in [`super::build`]); the axioms are checked once there.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Unvalidated table as read from input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTable {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable(order {})", self.order)
    }
}

impl GroupTable {
    /// Checks the group axioms and renumbers so that the identity is element 0.
    ///
    /// Checks run in a fixed order: shape, identity, inverses, Latin property,
    /// associativity. The first failure is reported.
    pub fn validate(raw: &RawTable) -> Result<GroupTable> {
        let n = raw.order;
        if n == 0 || raw.mul.is_empty() {
            return Err(Error::EmptyTable);
        }
        if raw.mul.len() != n {
            return Err(Error::NotSquare { row: raw.mul.len(), len: 0, order: n });
        }
        for (r, row) in raw.mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), order: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: r, col: c, value: v, order: n });
                }
            }
        }
        let m = |a: usize, b: usize| raw.mul[a][b];

        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e && m(y, x) == e) {
                return Err(Error::MissingInverse(x));
            }
        }
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                if std::mem::replace(&mut seen[m(r, c)], true) {
                    return Err(Error::NotLatinSquare(format!("row {r} repeats {}", m(r, c))));
                }
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..n {
                if std::mem::replace(&mut seen[m(r, c)], true) {
                    return Err(Error::NotLatinSquare(format!("column {c} repeats {}", m(r, c))));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }

        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(m(a, b)) as u32;
            }
        }
        Ok(GroupTable::from_trusted(n, mul))
    }

    /// Builds a table known to satisfy the axioms (identity at 0). Only inverses are derived.
    pub(crate) fn from_trusted(order: usize, mul: Vec<u32>) -> GroupTable {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&x| x == 0).expect("row contains identity") as u32;
        }
        GroupTable { order, mul, inv }
    }

    /// Builds a table from a closure `mul(a, b)`, validating the result.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<GroupTable> {
        let mul = (0..order).map(|a| (0..order).map(|b| f(a, b)).collect()).collect();
        GroupTable::validate(&RawTable { order, mul })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn to_raw(&self) -> RawTable {
        RawTable {
            order: self.order,
            mul: (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect(),
        }
    }

    /// Applies a relabeling `perm` (old label -> new label) and renormalizes.
    pub fn relabel(&self, perm: &[usize]) -> Result<GroupTable> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!("relabeling of length {} for order {n}", perm.len())));
        }
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                mul[perm[a]][perm[b]] = perm[self.mul(a, b)];
            }
        }
        GroupTable::validate(&RawTable { order: n, mul })
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index: x, order: self.order })
        }
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut done = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if done[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                done[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn conjugacy_class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    pub fn center_size(&self) -> usize {
        (0..self.order).filter(|&z| (0..self.order).all(|g| self.commute(z, g))).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(rows: &[&[usize]]) -> RawTable {
        RawTable { order: rows.len(), mul: rows.iter().map(|r| r.to_vec()).collect() }
    }

    #[test]
    fn trivial_table() {
        let g = GroupTable::validate(&raw(&[&[0]])).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn cyclic_four_accepted() {
        let g = GroupTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.inv(1), 3);
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // Z/3 with the identity labelled 2
        let g = GroupTable::from_fn(3, |a, b| (a + b + 1) % 3).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn loop_of_order_five_is_not_associative() {
        let t = raw(&[&[0, 1, 2, 3, 4], &[1, 0, 3, 4, 2], &[2, 4, 0, 1, 3], &[3, 2, 4, 0, 1], &[4, 3, 1, 2, 0]]);
        assert!(matches!(GroupTable::validate(&t), Err(Error::NonAssociative { .. })));
    }

    #[test]
    fn distinct_rejections() {
        assert_eq!(GroupTable::validate(&raw(&[&[0, 0], &[0, 0]])), Err(Error::NoIdentity));
        assert_eq!(GroupTable::validate(&raw(&[&[0, 1], &[1, 1]])), Err(Error::MissingInverse(1)));
        assert!(matches!(
            GroupTable::validate(&raw(&[&[0, 1, 2], &[1, 0, 0], &[2, 0, 1]])),
            Err(Error::NotLatinSquare(_))
        ));
        assert!(matches!(GroupTable::validate(&raw(&[&[0, 1], &[1]])), Err(Error::NotSquare { .. })));
        assert!(matches!(GroupTable::validate(&raw(&[&[0, 2], &[1, 0]])), Err(Error::EntryOutOfRange { .. })));
        assert_eq!(GroupTable::validate(&RawTable { order: 0, mul: vec![] }), Err(Error::EmptyTable));
    }
}
