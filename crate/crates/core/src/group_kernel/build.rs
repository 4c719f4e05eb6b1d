//! Concrete constructions of small groups.

use std::collections::HashMap;

use super::GroupTable;
use crate::{Error, Result};

pub fn cyclic(n: usize) -> GroupTable {
    assert!(n > 0, "cyclic group of order 0");
    let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    GroupTable::from_trusted(n, mul)
}

pub fn trivial() -> GroupTable {
    cyclic(1)
}

pub fn klein_four() -> GroupTable {
    GroupTable::from_trusted(4, (0..16).map(|i| ((i / 4) ^ (i % 4)) as u32).collect())
}

/// Closure of permutation generators on `0..degree`, composed as `(p*q)(x) = p(q(x))`.
///
/// Element 0 is the identity; the remaining elements appear in breadth-first order.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>], max_order: usize) -> Result<GroupTable> {
    for (i, p) in gens.iter().enumerate() {
        if p.len() != degree {
            return Err(Error::InvalidPermutation(format!("generator {i} has length {}, expected {degree}", p.len())));
        }
        let mut seen = vec![false; degree];
        for &x in p {
            if x >= degree || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("generator {i} is not a permutation of 0..{degree}")));
            }
        }
    }
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            let y = compose(&elems[i], s);
            if !index.contains_key(&y) {
                if elems.len() >= max_order {
                    return Err(Error::cap("permutation group order", (elems.len() + 1) as u128, max_order as u128));
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut mul = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            mul.push(index[&compose(a, b)] as u32);
        }
    }
    Ok(GroupTable::from_trusted(n, mul))
}

pub fn symmetric(d: usize) -> GroupTable {
    if d < 2 {
        return trivial();
    }
    let mut transposition: Vec<usize> = (0..d).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
    from_permutations(d, &[transposition, cycle], usize::MAX).expect("valid generators")
}

pub fn alternating(d: usize) -> GroupTable {
    if d < 3 {
        return trivial();
    }
    let gens: Vec<Vec<usize>> = (2..d)
        .map(|k| {
            let mut p: Vec<usize> = (0..d).collect();
            // 3-cycle (0 1 k)
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    from_permutations(d, &gens, usize::MAX).expect("valid generators")
}

/// `<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>`, elements `a^i b^j` indexed `i + m*j`.
pub fn metacyclic(m: usize, n: usize, r: usize, t: usize) -> Result<GroupTable> {
    let rpow: Vec<usize> = (0..n)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = (*acc * r) % m;
            Some(cur)
        })
        .collect();
    GroupTable::from_fn(m * n, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let mut e = i + k * rpow[j];
        let mut f = j + l;
        if f >= n {
            f -= n;
            e += t;
        }
        e % m + m * f
    })
}

pub fn dihedral(order: usize) -> GroupTable {
    assert!(order >= 2 && order % 2 == 0, "dihedral order must be even");
    let m = order / 2;
    metacyclic(m, 2, m - 1, 0).expect("dihedral group")
}

/// Semidirect product `N x| H` where `action[h]` is the automorphism of `N` for `h`,
/// given as a permutation of `N`'s elements. Elements `(n, h)` are indexed `n + |N|*h`.
pub fn semidirect(normal: &GroupTable, acting: &GroupTable, action: &[Vec<usize>]) -> Result<GroupTable> {
    let (nn, nh) = (normal.order(), acting.order());
    if action.len() != nh || action.iter().any(|p| p.len() != nn) {
        return Err(Error::InvalidAction("semidirect action has the wrong shape".into()));
    }
    GroupTable::from_fn(nn * nh, |x, y| {
        let (n1, h1) = (x % nn, x / nn);
        let (n2, h2) = (y % nn, y / nn);
        normal.mul(n1, action[h1][n2]) + nn * acting.mul(h1, h2)
    })
}

/// Powers of a single automorphism `phi` of `normal` for a cyclic acting group of order `k`.
pub fn cyclic_action(phi: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..phi.len()).collect::<Vec<_>>()];
    for i in 1..k {
        let prev = &out[i - 1];
        out.push(prev.iter().map(|&x| phi[x]).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(dihedral(8).order(), 8);
        let q8 = metacyclic(4, 2, 3, 2).unwrap();
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn bad_metacyclic_parameters_are_rejected() {
        // r^n != 1 mod m
        assert!(metacyclic(5, 2, 2, 0).is_err());
    }

    #[test]
    fn permutation_closure_respects_cap() {
        let gens = vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]];
        assert!(matches!(from_permutations(4, &gens, 10), Err(Error::CapExceeded { .. })));
        assert!(from_permutations(4, &[vec![0, 0, 1, 2]], 100).is_err());
    }
}
