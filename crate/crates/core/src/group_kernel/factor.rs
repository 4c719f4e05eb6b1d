use super::canon::canonical_table;
use super::class_id::{factor_block, GroupClassId};
use super::subgroup::{normal_subgroups, SubgroupHandle};
use super::{build, GroupTable};
use crate::{Caps, Error, Result};

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclic prime-power factors of an abelian group, from counts of `p^k`-torsion.
fn abelian_factor_orders(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    let mut out = Vec::new();
    for p in prime_factors(n) {
        // ranks[k] = number of cyclic factors of order >= p^(k+1)
        let mut ranks = Vec::new();
        let mut prev = 1usize;
        let mut pk: u64 = p as u64;
        loop {
            let count = g.elements().filter(|&x| g.pow(x, pk) == 0).count();
            if count == prev {
                break;
            }
            let mut ratio = count / prev;
            let mut r = 0;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            ranks.push(r);
            prev = count;
            pk *= p as u64;
        }
        for k in 0..ranks.len() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..ranks[k] - next {
                out.push(p.pow(k as u32 + 1));
            }
        }
    }
    out
}

/// A nontrivial direct decomposition `G = N x M` into normal subgroups, if one exists.
fn find_split(g: &GroupTable) -> Option<(SubgroupHandle, SubgroupHandle)> {
    let n = g.order();
    let normals = normal_subgroups(g);
    for a in &normals {
        let k = a.order();
        if k == 1 || k == n || n % k != 0 {
            continue;
        }
        for b in normals.iter().filter(|b| b.order() == n / k) {
            let mut meet = a.mask().clone();
            meet.intersect_with(b.mask());
            if meet.count_ones(..) != 1 {
                continue;
            }
            if a.elements().iter().all(|&x| b.elements().iter().all(|&y| g.commute(x, y))) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Indecomposable direct factors as tables (abelian groups split by torsion counts).
pub(crate) fn factor_tables(g: &GroupTable) -> Vec<GroupTable> {
    if g.order() == 1 {
        return Vec::new();
    }
    if g.is_abelian() {
        return abelian_factor_orders(g).into_iter().map(build::cyclic).collect();
    }
    factor_tables_by_normal_pairs(g)
}

/// The general search: split along a pair of commuting normal subgroups and recurse.
pub fn factor_tables_by_normal_pairs(g: &GroupTable) -> Vec<GroupTable> {
    if g.order() == 1 {
        return Vec::new();
    }
    match find_split(g) {
        None => vec![g.clone()],
        Some((a, b)) => {
            let mut out = factor_tables_by_normal_pairs(&a.to_table(g));
            out.extend(factor_tables_by_normal_pairs(&b.to_table(g)));
            out
        }
    }
}

fn check_cap(g: &GroupTable, caps: &Caps) -> Result<()> {
    let cap = caps.certificate_order.min(255);
    if g.order() > cap {
        return Err(Error::cap("group order for certificates", g.order() as u128, cap as u128));
    }
    Ok(())
}

/// Multiset of indecomposable direct factors, each as its own class, sorted.
pub fn indecomposable_factors(g: &GroupTable, caps: &Caps) -> Result<Vec<GroupClassId>> {
    Ok(class_id(g, caps)?.factors())
}

/// Canonical certificate of the isomorphism class of `g`.
pub fn class_id(g: &GroupTable, caps: &Caps) -> Result<GroupClassId> {
    check_cap(g, caps)?;
    let blocks = factor_tables(g).iter().map(|t| factor_block(&canonical_table(t))).collect();
    Ok(GroupClassId::from_factor_blocks(blocks))
}
