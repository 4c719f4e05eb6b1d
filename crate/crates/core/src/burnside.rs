//! The Burnside ring of a finite group, equivariant Euler characteristics of G-CW
//! complexes, and the additive map into the class ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::group_kernel::{class_id, GroupTable, SubgroupHandle};
use crate::grothendieck_ring::GSetAction;
use crate::orbifold_model::{sign, GCWComplex};
use crate::{Caps, Error, RElement, Result};

/// An integer combination of transitive G-sets `[G/H]`, keyed by the
/// lexicographically smallest subgroup in the conjugacy class of `H`.
#[derive(Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    group: Arc<GroupTable>,
    coeffs: BTreeMap<Vec<usize>, i64>,
}

impl BurnsideElement {
    pub fn zero(group: Arc<GroupTable>) -> BurnsideElement {
        BurnsideElement { group, coeffs: BTreeMap::new() }
    }

    /// `[G/H]`; `h` may be any member of its conjugacy class.
    pub fn basis(group: Arc<GroupTable>, h: &SubgroupHandle) -> BurnsideElement {
        let mut b = BurnsideElement::zero(group);
        b.add_basis(h, 1);
        b
    }

    /// The unit `[G/G]`.
    pub fn one(group: Arc<GroupTable>) -> BurnsideElement {
        let whole = SubgroupHandle::whole(&group);
        BurnsideElement::basis(group, &whole)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn add_basis(&mut self, h: &SubgroupHandle, coeff: i64) {
        let key = h.conjugacy_representative(&self.group).elements().to_vec();
        self.add_key(key, coeff);
    }

    fn add_key(&mut self, key: Vec<usize>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.coeffs.entry(key.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn coefficient(&self, h: &SubgroupHandle) -> i64 {
        let key = h.conjugacy_representative(&self.group);
        self.coeffs.get(key.elements()).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms as (representative subgroup, coefficient), in key order.
    pub fn terms(&self) -> Vec<(SubgroupHandle, i64)> {
        self.coeffs
            .iter()
            .map(|(k, &c)| (SubgroupHandle::new(&self.group, k).expect("stored keys are subgroups"), c))
            .collect()
    }

    fn same_group(&self, other: &BurnsideElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        self.same_group(other)?;
        let mut r = self.clone();
        for (k, &c) in &other.coeffs {
            r.add_key(k.clone(), c);
        }
        Ok(r)
    }

    pub fn scale(&self, k: i64) -> BurnsideElement {
        let mut r = BurnsideElement::zero(self.group.clone());
        for (key, &c) in &self.coeffs {
            r.add_key(key.clone(), c * k);
        }
        r
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

#[derive(Serialize)]
struct BurnsideRecord<'a> {
    subgroup: &'a [usize],
    coefficient: i64,
}

impl Serialize for BurnsideElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(k, &c)| BurnsideRecord { subgroup: k, coefficient: c }))
    }
}

/// One basis term per orbit, keyed by the stabilizer's conjugacy class.
pub fn orbit_decompose(x: &GSetAction) -> BurnsideElement {
    let mut b = BurnsideElement::zero(x.group().clone());
    for orbit in x.orbits() {
        b.add_basis(&x.stabilizer(orbit[0]), 1);
    }
    b
}

/// Product in `A(G)`, computed on coset G-sets.
pub fn b_mul(a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
    a.same_group(b)?;
    let g = a.group.clone();
    let mut r = BurnsideElement::zero(g.clone());
    for (ha, ca) in a.terms() {
        let xa = GSetAction::cosets(g.clone(), &ha);
        for (hb, cb) in b.terms() {
            let xb = GSetAction::cosets(g.clone(), &hb);
            let prod = orbit_decompose(&xa.product(&xb)?);
            for (key, c) in prod.coeffs {
                r.add_key(key, c * ca * cb);
            }
        }
    }
    Ok(r)
}

/// `Σ (-1)^dim [G/Stab(σ)]` over cell orbits.
pub fn equivariant_euler(x: &GCWComplex) -> BurnsideElement {
    let mut b = BurnsideElement::zero(x.group().clone());
    for orbit in x.cell_orbits() {
        let cell = &x.cells()[orbit[0]];
        b.add_basis(&cell.stabilizer, sign(cell.dim));
    }
    b
}

/// Linear extension of `[G/H] -> T[H]`.
pub fn map_rh(a: &BurnsideElement, caps: &Caps) -> Result<RElement> {
    let mut r = RElement::zero();
    let mut cache = HashMap::new();
    for (h, c) in a.terms() {
        let table = h.to_table(&a.group);
        let id = match cache.get(&table) {
            Some(id) => Clone::clone(id),
            None => {
                let id = class_id(&table, caps)?;
                cache.insert(table, id.clone());
                id
            }
        };
        r.add_term(id, c);
    }
    Ok(r)
}
