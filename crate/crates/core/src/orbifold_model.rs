//! Combinatorial orbifold models: finite G-CW complexes (global quotients) and
//! direct stratified descriptions, with the universal Euler characteristic.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::burnside::{equivariant_euler, map_rh};
use crate::group_kernel::{class_id, commuting_tuples, GroupClassId, GroupTable, SubgroupHandle};
use crate::grothendieck_ring::GSetAction;
use crate::{Caps, Error, RElement, RationalValue, Result};

/// One cell of a G-CW complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    pub stabilizer: SubgroupHandle,
    pub boundary: bool,
}

/// Cell data as supplied by a caller; a missing stabilizer is computed from the action.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellSpec {
    pub dim: usize,
    pub stabilizer: Option<Vec<usize>>,
    pub boundary: bool,
}

impl CellSpec {
    pub fn new(dim: usize) -> CellSpec {
        CellSpec { dim, ..CellSpec::default() }
    }

    pub fn with_stabilizer(mut self, elements: Vec<usize>) -> CellSpec {
        self.stabilizer = Some(elements);
        self
    }

    pub fn boundary(mut self) -> CellSpec {
        self.boundary = true;
        self
    }
}

/// A finite G-CW complex in which every cell is fixed pointwise by its stabilizer.
#[derive(Clone, Debug)]
pub struct GCWComplex {
    group: Arc<GroupTable>,
    cells: Vec<Cell>,
    action: GSetAction,
}

impl GCWComplex {
    /// Builds a complex from cell data and permutations for some group elements (usually
    /// generators); the action is extended to the whole group.
    pub fn new(group: Arc<GroupTable>, cells: Vec<CellSpec>, action: &BTreeMap<usize, Vec<usize>>) -> Result<GCWComplex> {
        GCWComplex::with_top_dim(group, cells, action, None)
    }

    pub fn with_top_dim(
        group: Arc<GroupTable>,
        cells: Vec<CellSpec>,
        action: &BTreeMap<usize, Vec<usize>>,
        top_dim: Option<usize>,
    ) -> Result<GCWComplex> {
        let invalid = |m: String| Error::InvalidComplex(m);
        let action = GSetAction::from_partial(group.clone(), cells.len(), action).map_err(|e| invalid(e.to_string()))?;
        let mut out = Vec::with_capacity(cells.len());
        for (i, spec) in cells.iter().enumerate() {
            if let Some(top) = top_dim {
                if spec.dim > top {
                    return Err(invalid(format!("cell {i} has dimension {} above the top dimension {top}", spec.dim)));
                }
            }
            for g in group.elements() {
                let j = action.act(g, i);
                if cells[j].dim != spec.dim || cells[j].boundary != spec.boundary {
                    return Err(invalid(format!("element {g} maps cell {i} to cell {j} of a different kind")));
                }
            }
            let computed = action.stabilizer(i);
            if let Some(declared) = &spec.stabilizer {
                let declared = SubgroupHandle::new(&group, declared).map_err(|e| invalid(format!("cell {i}: {e}")))?;
                if declared != computed {
                    return Err(invalid(format!(
                        "cell {i}: declared stabilizer {:?} differs from the computed stabilizer {:?}",
                        declared.elements(),
                        computed.elements()
                    )));
                }
            }
            out.push(Cell { dim: spec.dim, stabilizer: computed, boundary: spec.boundary });
        }
        Ok(GCWComplex { group, cells: out, action })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_action(&self) -> &GSetAction {
        &self.action
    }

    /// Orbits of cells, each listed by its smallest cell.
    pub fn cell_orbits(&self) -> Vec<Vec<usize>> {
        self.action.orbits()
    }

    /// Ordinary Euler characteristic of the underlying complex.
    pub fn euler(&self) -> i64 {
        self.cells.iter().map(|c| sign(c.dim)).sum()
    }

    /// Union with another complex over the same group.
    pub fn disjoint_union(&self, other: &GCWComplex) -> Result<GCWComplex> {
        let action = self.action.disjoint_union(&other.action).map_err(|_| Error::GroupMismatch)?;
        let cells = self.cells.iter().chain(&other.cells).cloned().collect();
        Ok(GCWComplex { group: self.group.clone(), cells, action })
    }
}

pub(crate) fn sign(dim: usize) -> i64 {
    if dim % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A stratum: compactly supported Euler characteristic and isotropy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stratum {
    pub chi_c: i64,
    pub isotropy: GroupClassId,
    pub boundary: bool,
}

impl Stratum {
    pub fn new(chi_c: i64, isotropy: GroupClassId) -> Stratum {
        Stratum { chi_c, isotropy, boundary: false }
    }

    pub fn on_boundary(chi_c: i64, isotropy: GroupClassId) -> Stratum {
        Stratum { chi_c, isotropy, boundary: true }
    }
}

/// An orbifold described by finitely many strata.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StratifiedOrbifold {
    strata: Vec<Stratum>,
}

impl StratifiedOrbifold {
    pub fn new(strata: Vec<Stratum>) -> StratifiedOrbifold {
        StratifiedOrbifold { strata }
    }

    pub fn empty() -> StratifiedOrbifold {
        StratifiedOrbifold::default()
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn boundary_strata(&self) -> usize {
        self.strata.iter().filter(|s| s.boundary).count()
    }

    pub fn has_boundary(&self) -> bool {
        self.boundary_strata() > 0
    }

    /// Distinct isotropy classes, sorted.
    pub fn isotropy_classes(&self) -> Vec<GroupClassId> {
        let mut v: Vec<GroupClassId> = self.strata.iter().map(|s| s.isotropy.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn disjoint_union(&self, other: &StratifiedOrbifold) -> StratifiedOrbifold {
        StratifiedOrbifold { strata: self.strata.iter().chain(&other.strata).cloned().collect() }
    }

    /// Product orbifold: strata are pairwise products with multiplied `chi_c` and
    /// product isotropy; a product stratum lies on the boundary if either factor does.
    pub fn product(&self, other: &StratifiedOrbifold, caps: &Caps) -> Result<StratifiedOrbifold> {
        let mut strata = Vec::with_capacity(self.strata.len() * other.strata.len());
        for a in &self.strata {
            for b in &other.strata {
                let order = a.isotropy.order() as u128 * b.isotropy.order() as u128;
                if order > caps.product_order as u128 {
                    return Err(Error::cap("isotropy product order", order, caps.product_order as u128));
                }
                strata.push(Stratum {
                    chi_c: a.chi_c * b.chi_c,
                    isotropy: a.isotropy.product(&b.isotropy),
                    boundary: a.boundary || b.boundary,
                });
            }
        }
        Ok(StratifiedOrbifold { strata })
    }

    /// Strata with equal isotropy and boundary flag merged, sorted.
    pub fn normalized(&self) -> StratifiedOrbifold {
        let mut merged: BTreeMap<(GroupClassId, bool), i64> = BTreeMap::new();
        for s in &self.strata {
            *merged.entry((s.isotropy.clone(), s.boundary)).or_default() += s.chi_c;
        }
        StratifiedOrbifold {
            strata: merged.into_iter().map(|((isotropy, boundary), chi_c)| Stratum { chi_c, isotropy, boundary }).collect(),
        }
    }
}

/// Strata of `X/G`: cell orbits grouped by stabilizer class (and boundary flag), with
/// `chi_c` the signed count of open cell orbits.
pub fn quotient_stratification(x: &GCWComplex, caps: &Caps) -> Result<StratifiedOrbifold> {
    let mut by_class: BTreeMap<(GroupClassId, bool), i64> = BTreeMap::new();
    let mut cache: HashMap<Vec<usize>, GroupClassId> = HashMap::new();
    for orbit in x.cell_orbits() {
        let cell = &x.cells[orbit[0]];
        let key = cell.stabilizer.elements().to_vec();
        let id = match cache.get(&key) {
            Some(id) => id.clone(),
            None => {
                let id = class_id(&cell.stabilizer.to_table(&x.group), caps)?;
                cache.insert(key, id.clone());
                id
            }
        };
        *by_class.entry((id, cell.boundary)).or_default() += sign(cell.dim);
    }
    Ok(StratifiedOrbifold {
        strata: by_class.into_iter().map(|((isotropy, boundary), chi_c)| Stratum { chi_c, isotropy, boundary }).collect(),
    })
}

/// `Σ chi_c(S) T[isotropy(S)]`, optionally leaving out boundary strata.
pub fn universal_euler(q: &StratifiedOrbifold, include_boundary: bool) -> RElement {
    let mut r = RElement::zero();
    for s in q.strata.iter().filter(|s| include_boundary || !s.boundary) {
        r.add_term(s.isotropy.clone(), s.chi_c);
    }
    r
}

/// Euler characteristic of the fixed-point set `X^H`.
pub fn fixed_subcomplex(x: &GCWComplex, h: &SubgroupHandle) -> Result<i64> {
    let h = SubgroupHandle::new(&x.group, h.elements())?;
    Ok(x.cells.iter().filter(|c| h.is_subgroup_of(&c.stabilizer)).map(|c| sign(c.dim)).sum())
}

/// `(1/|G|) Σ χ(X^<g_1..g_{k+1}>)` over pairwise-commuting `(k+1)`-tuples.
pub fn orbifold_euler_direct(x: &GCWComplex, k: usize, caps: &Caps) -> Result<RationalValue> {
    let mut cache: HashMap<FixedBitSet, i64> = HashMap::new();
    let mut total: i128 = 0;
    for (_, sub) in commuting_tuples(&x.group, k, caps)? {
        let chi = match cache.get(sub.mask()) {
            Some(&v) => v,
            None => {
                let v: i64 = x.cells.iter().filter(|c| sub.is_subgroup_of(&c.stabilizer)).map(|c| sign(c.dim)).sum();
                cache.insert(sub.mask().clone(), v);
                v
            }
        };
        total += chi as i128;
    }
    let n = x.group.order() as i128;
    Ok(RationalValue::ratio_i128(total, n))
}

/// Both routes to the universal Euler characteristic of a global quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalQuotientReport {
    pub via_burnside: RElement,
    pub via_strata: RElement,
    pub agree: bool,
    /// `via_burnside - via_strata`
    pub discrepancy: RElement,
}

pub fn global_quotient_check(x: &GCWComplex, caps: &Caps) -> Result<GlobalQuotientReport> {
    let via_burnside = map_rh(&equivariant_euler(x), caps)?;
    let via_strata = universal_euler(&quotient_stratification(x, caps)?, true);
    let discrepancy = &via_burnside - &via_strata;
    Ok(GlobalQuotientReport { agree: discrepancy.is_zero(), via_burnside, via_strata, discrepancy })
}
