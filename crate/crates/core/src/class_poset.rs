//! Isomorphism classes ordered by embeddability, with zeta and Möbius functions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::group_kernel::{are_isomorphic, class_id, subgroups, GroupClassId, GroupTable};
use crate::names::display_name;
use crate::{Caps, Error, RElement, Result};

/// True iff some subgroup of `g2` is isomorphic to `g1`.
pub fn embeds(g1: &GroupTable, g2: &GroupTable) -> bool {
    if g2.order() % g1.order() != 0 {
        return false;
    }
    subgroups(g2, true)
        .iter()
        .filter(|h| h.order() == g1.order())
        .any(|h| are_isomorphic(g1, &h.to_table(g2)).is_some())
}

/// Values that can be Möbius-inverted: integers and ring elements.
pub trait ZModule: Clone {
    fn zero() -> Self;
    fn add_scaled(&mut self, other: &Self, k: i64);
}

impl ZModule for i64 {
    fn zero() -> i64 {
        0
    }
    fn add_scaled(&mut self, other: &i64, k: i64) {
        *self += other * k;
    }
}

impl ZModule for RElement {
    fn zero() -> RElement {
        RElement::zero()
    }
    fn add_scaled(&mut self, other: &RElement, k: i64) {
        *self += &other.scale(k);
    }
}

/// Möbius function of a class poset, indexed like the poset's elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    mu: Vec<Vec<i64>>,
}

impl MobiusTable {
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.mu[a][b]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.mu
    }
}

/// A finite set of isomorphism classes with the relation "is isomorphic to a subgroup of".
///
/// Elements are sorted by certificate, which sorts by order first, so the index order
/// is a linear extension of the partial order.
#[derive(Debug)]
pub struct ClassPoset {
    elements: Vec<GroupClassId>,
    reps: Vec<GroupTable>,
    index: HashMap<GroupClassId, usize>,
    leq: Vec<Vec<bool>>,
    mobius: OnceLock<MobiusTable>,
}

impl Clone for ClassPoset {
    fn clone(&self) -> ClassPoset {
        ClassPoset {
            elements: self.elements.clone(),
            reps: self.reps.clone(),
            index: self.index.clone(),
            leq: self.leq.clone(),
            mobius: self.mobius.clone(),
        }
    }
}

/// Poset of all subgroup classes of the seed groups.
///
/// Relations are read off subgroup inclusions inside each seed, which is complete:
/// if `K` embeds in a subgroup `H` of a seed, a copy of `K` lies inside `H`.
pub fn build_poset(seeds: &[GroupTable], caps: &Caps) -> Result<ClassPoset> {
    let mut reps: BTreeMap<GroupClassId, GroupTable> = BTreeMap::new();
    let mut below: BTreeSet<(GroupClassId, GroupClassId)> = BTreeSet::new();
    for seed in seeds {
        let subs = subgroups(seed, false);
        let mut by_conj: HashMap<Vec<usize>, GroupClassId> = HashMap::new();
        let mut classes = Vec::with_capacity(subs.len());
        for h in &subs {
            let rep = h.conjugacy_representative(seed);
            let id = match by_conj.get(rep.elements()) {
                Some(id) => id.clone(),
                None => {
                    let table = h.to_table(seed);
                    let id = class_id(&table, caps)?;
                    reps.entry(id.clone()).or_insert(table);
                    by_conj.insert(rep.elements().to_vec(), id.clone());
                    id
                }
            };
            classes.push(id);
        }
        for (i, k) in subs.iter().enumerate() {
            for (j, h) in subs.iter().enumerate() {
                if k.order() <= h.order() && h.order() % k.order() == 0 && k.is_subgroup_of(h) {
                    below.insert((classes[i].clone(), classes[j].clone()));
                }
            }
        }
    }
    let elements: Vec<GroupClassId> = reps.keys().cloned().collect();
    let index: HashMap<GroupClassId, usize> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    let n = elements.len();
    let mut leq = vec![vec![false; n]; n];
    for (a, b) in &below {
        leq[index[a]][index[b]] = true;
    }
    Ok(ClassPoset { elements, reps: reps.into_values().collect(), index, leq, mobius: OnceLock::new() })
}

/// Poset generated by classes given as certificates.
pub fn build_poset_from_classes(seeds: &[GroupClassId], caps: &Caps) -> Result<ClassPoset> {
    let tables = seeds.iter().map(|s| s.representative(caps)).collect::<Result<Vec<_>>>()?;
    build_poset(&tables, caps)
}

#[derive(Serialize)]
struct PosetDump<'a> {
    elements: Vec<DumpElement>,
    leq: &'a [Vec<bool>],
    mu: &'a [Vec<i64>],
}

#[derive(Serialize)]
struct DumpElement {
    certificate: String,
    name: String,
    order: u64,
}

impl ClassPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupClassId] {
        &self.elements
    }

    pub fn representative(&self, i: usize) -> &GroupTable {
        &self.reps[i]
    }

    pub fn index_of(&self, id: &GroupClassId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn contains(&self, id: &GroupClassId) -> bool {
        self.index.contains_key(id)
    }

    fn require(&self, id: &GroupClassId) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::MissingPosetElement(display_name(id)))
    }

    /// `a ≺ b` by index.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn leq_classes(&self, a: &GroupClassId, b: &GroupClassId) -> Result<bool> {
        Ok(self.leq[self.require(a)?][self.require(b)?])
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// `μ(a, a) = 1`, `μ(a, b) = -Σ_{a ≼ c ≺ b} μ(a, c)`, and 0 off the order.
    pub fn mobius(&self) -> &MobiusTable {
        self.mobius.get_or_init(|| {
            let n = self.len();
            let mut mu = vec![vec![0i64; n]; n];
            for a in 0..n {
                mu[a][a] = 1;
                for b in a + 1..n {
                    if self.leq[a][b] {
                        mu[a][b] = -(a..b).filter(|&c| self.leq[a][c] && self.leq[c][b]).map(|c| mu[a][c]).sum::<i64>();
                    }
                }
            }
            MobiusTable { mu }
        })
    }

    pub fn mu(&self, a: &GroupClassId, b: &GroupClassId) -> Result<i64> {
        Ok(self.mobius().get(self.require(a)?, self.require(b)?))
    }

    /// Entries of `ζ * μ - δ` that are nonzero, as index pairs.
    pub fn zeta_mu_defects(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mu = self.mobius();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let s: i64 = (0..n).filter(|&c| self.leq[a][c]).map(|c| mu.get(c, b)).sum();
                if s != i64::from(a == b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn dense<V: ZModule>(&self, f: &BTreeMap<GroupClassId, V>) -> Result<Vec<V>> {
        if let Some(extra) = f.keys().find(|k| !self.contains(k)) {
            return Err(Error::MissingPosetElement(display_name(extra)));
        }
        self.elements
            .iter()
            .map(|e| f.get(e).cloned().ok_or_else(|| Error::MissingPosetElement(display_name(e))))
            .collect()
    }

    fn sparse<V>(&self, values: Vec<V>) -> BTreeMap<GroupClassId, V> {
        self.elements.iter().cloned().zip(values).collect()
    }

    /// `f(G) = Σ_{G' ≺ G} g(G')`.
    pub fn cumulate<V: ZModule>(&self, g: &BTreeMap<GroupClassId, V>) -> Result<BTreeMap<GroupClassId, V>> {
        let g = self.dense(g)?;
        let n = self.len();
        let f = (0..n)
            .map(|b| {
                let mut acc = V::zero();
                for a in (0..=b).filter(|&a| self.leq[a][b]) {
                    acc.add_scaled(&g[a], 1);
                }
                acc
            })
            .collect();
        Ok(self.sparse(f))
    }

    /// `g(G) = Σ_{G' ≺ G} μ(G', G) f(G')`, the inverse of [`ClassPoset::cumulate`].
    pub fn mobius_invert<V: ZModule>(&self, f: &BTreeMap<GroupClassId, V>) -> Result<BTreeMap<GroupClassId, V>> {
        let f = self.dense(f)?;
        let mu = self.mobius();
        let n = self.len();
        let g = (0..n)
            .map(|b| {
                let mut acc = V::zero();
                for a in (0..=b).filter(|&a| self.leq[a][b]) {
                    acc.add_scaled(&f[a], mu.get(a, b));
                }
                acc
            })
            .collect();
        Ok(self.sparse(g))
    }

    /// JSON dump of certificates, order relation and Möbius matrix.
    pub fn to_json(&self) -> serde_json::Value {
        let dump = PosetDump {
            elements: self
                .elements
                .iter()
                .map(|e| DumpElement { certificate: e.to_hex(), name: display_name(e), order: e.order() })
                .collect(),
            leq: &self.leq,
            mu: self.mobius().matrix(),
        };
        serde_json::to_value(dump).expect("serializable")
    }
}
