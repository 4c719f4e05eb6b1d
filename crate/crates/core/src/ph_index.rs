//! Universal indices of isolated singular points and the Poincaré–Hopf identity
//! in the class ring.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::class_poset::{build_poset, build_poset_from_classes, ClassPoset};
use crate::group_kernel::{class_id, GroupClassId, GroupTable};
use crate::grothendieck_ring::generator_value;
use crate::names::display_name;
use crate::orbifold_model::{universal_euler, StratifiedOrbifold};
use crate::{Caps, Error, RElement, RationalValue, Result, Specialization};

/// A singular point of the deformed field: its isotropy class and the index of the
/// field restricted to the fixed subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointData {
    pub label: String,
    pub isotropy: GroupClassId,
    pub local_index: i64,
    /// Declares the point to be a cone apex with zero-dimensional fixed subspace.
    pub apex: bool,
}

impl SingularPointData {
    pub fn new(label: impl Into<String>, isotropy: GroupClassId, local_index: i64) -> SingularPointData {
        SingularPointData { label: label.into(), isotropy, local_index, apex: false }
    }

    /// An apex point; its index is 1 by convention.
    pub fn apex(label: impl Into<String>, isotropy: GroupClassId) -> SingularPointData {
        SingularPointData { label: label.into(), isotropy, local_index: 1, apex: true }
    }

    fn check_apex(&self) -> Result<()> {
        if self.apex && self.local_index != 1 {
            return Err(Error::InvalidSingularPoint(format!(
                "apex `{}` has index {}; an isolated fixed point has index 1",
                self.label, self.local_index
            )));
        }
        Ok(())
    }
}

fn direct_sum(points: &[SingularPointData]) -> RElement {
    let mut r = RElement::zero();
    for p in points {
        r.add_term(p.isotropy.clone(), p.local_index);
    }
    r
}

/// Singular points of a field near the apex of a cone `R^n/H`.
#[derive(Clone, Debug)]
pub struct LocalConeModel {
    ambient: GroupTable,
    ambient_class: GroupClassId,
    points: Vec<SingularPointData>,
    poset: ClassPoset,
}

impl LocalConeModel {
    pub fn new(ambient: GroupTable, points: Vec<SingularPointData>, caps: &Caps) -> Result<LocalConeModel> {
        let ambient_class = class_id(&ambient, caps)?;
        let poset = build_poset(std::slice::from_ref(&ambient), caps)?;
        for p in &points {
            p.check_apex()?;
            if !poset.contains(&p.isotropy) {
                return Err(Error::InvalidSingularPoint(format!(
                    "`{}`: isotropy {} is not a subgroup class of {}",
                    p.label,
                    display_name(&p.isotropy),
                    display_name(&ambient_class)
                )));
            }
            if p.apex && p.isotropy != ambient_class {
                return Err(Error::InvalidSingularPoint(format!(
                    "apex `{}` must have the full ambient isotropy {}",
                    p.label,
                    display_name(&ambient_class)
                )));
            }
        }
        Ok(LocalConeModel { ambient, ambient_class, points, poset })
    }

    pub fn ambient(&self) -> &GroupTable {
        &self.ambient
    }

    pub fn ambient_class(&self) -> &GroupClassId {
        &self.ambient_class
    }

    pub fn points(&self) -> &[SingularPointData] {
        &self.points
    }

    pub fn poset(&self) -> &ClassPoset {
        &self.poset
    }
}

/// Radial indices of the field on the fixed loci, one value per poset element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadialIndexProfile {
    pub values: BTreeMap<GroupClassId, i64>,
}

/// `Σ local_index · T[isotropy]` over the singular points.
pub fn universal_index_direct(m: &LocalConeModel) -> RElement {
    direct_sum(&m.points)
}

fn profile_over(poset: &ClassPoset, points: &[SingularPointData]) -> Result<RadialIndexProfile> {
    let mut per_class: BTreeMap<GroupClassId, i64> = poset.elements().iter().map(|e| (e.clone(), 0)).collect();
    for p in points {
        match per_class.get_mut(&p.isotropy) {
            Some(v) => *v += p.local_index,
            None => return Err(Error::MissingPosetElement(display_name(&p.isotropy))),
        }
    }
    let mut values = BTreeMap::new();
    for (b, id) in poset.elements().iter().enumerate() {
        let v = poset
            .elements()
            .iter()
            .enumerate()
            .filter(|&(a, _)| poset.leq(a, b))
            .map(|(_, e)| per_class[e])
            .sum();
        values.insert(id.clone(), v);
    }
    Ok(RadialIndexProfile { values })
}

/// `profile(G) = Σ` of local indices over points whose isotropy is `≺ G`.
pub fn radial_profile(m: &LocalConeModel) -> Result<RadialIndexProfile> {
    profile_over(&m.poset, &m.points)
}

/// Coefficient of `T[G]` is `Σ_{G' ≺ G} μ(G', G) profile(G')`.
pub fn universal_index_mobius(p: &RadialIndexProfile, poset: &ClassPoset) -> Result<RElement> {
    let g = poset.mobius_invert(&p.values)?;
    let mut r = RElement::zero();
    for (id, c) in g {
        r.add_term(id, c);
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub direct: RElement,
    pub mobius: RElement,
    pub agree: bool,
}

/// Compares the direct sum with the Möbius-inversion route.
pub fn cone_consistency_check(m: &LocalConeModel) -> Result<ConeReport> {
    let direct = universal_index_direct(m);
    let mobius = universal_index_mobius(&radial_profile(m)?, &m.poset)?;
    Ok(ConeReport { agree: direct == mobius, direct, mobius })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryBehavior {
    None,
    Outward,
    Inward,
}

impl FromStr for BoundaryBehavior {
    type Err = Error;
    fn from_str(s: &str) -> Result<BoundaryBehavior> {
        match s {
            "none" => Ok(BoundaryBehavior::None),
            "outward" => Ok(BoundaryBehavior::Outward),
            "inward" => Ok(BoundaryBehavior::Inward),
            other => Err(Error::Parse(format!("unknown boundary behavior `{other}`"))),
        }
    }
}

impl fmt::Display for BoundaryBehavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryBehavior::None => "none",
            BoundaryBehavior::Outward => "outward",
            BoundaryBehavior::Inward => "inward",
        })
    }
}

/// Vector fields and 1-forms share the data model; the kind is carried for reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    #[default]
    VectorField,
    OneForm,
}

/// A field with isolated singular points on a stratified orbifold.
#[derive(Clone, Debug)]
pub struct VectorFieldOnOrbifold {
    orbifold: StratifiedOrbifold,
    points: Vec<SingularPointData>,
    boundary_behavior: BoundaryBehavior,
    kind: FieldKind,
}

impl VectorFieldOnOrbifold {
    pub fn new(
        orbifold: StratifiedOrbifold,
        points: Vec<SingularPointData>,
        boundary_behavior: BoundaryBehavior,
        kind: FieldKind,
    ) -> Result<VectorFieldOnOrbifold> {
        let classes = orbifold.isotropy_classes();
        for p in &points {
            p.check_apex()?;
            if classes.binary_search(&p.isotropy).is_err() {
                return Err(Error::InvalidSingularPoint(format!(
                    "`{}`: isotropy {} does not occur among the strata",
                    p.label,
                    display_name(&p.isotropy)
                )));
            }
        }
        Ok(VectorFieldOnOrbifold { orbifold, points, boundary_behavior, kind })
    }

    pub fn closed(orbifold: StratifiedOrbifold, points: Vec<SingularPointData>) -> Result<VectorFieldOnOrbifold> {
        VectorFieldOnOrbifold::new(orbifold, points, BoundaryBehavior::None, FieldKind::VectorField)
    }

    pub fn orbifold(&self) -> &StratifiedOrbifold {
        &self.orbifold
    }

    pub fn points(&self) -> &[SingularPointData] {
        &self.points
    }

    pub fn boundary_behavior(&self) -> BoundaryBehavior {
        self.boundary_behavior
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Same field with different singular data (for perturbation tests).
    pub fn with_points(&self, points: Vec<SingularPointData>) -> Result<VectorFieldOnOrbifold> {
        VectorFieldOnOrbifold::new(self.orbifold.clone(), points, self.boundary_behavior, self.kind)
    }

    /// Product field on the product orbifold: zeros are pairs of zeros, indices multiply.
    pub fn product(&self, other: &VectorFieldOnOrbifold, caps: &Caps) -> Result<VectorFieldOnOrbifold> {
        if self.orbifold.has_boundary() || other.orbifold.has_boundary() {
            return Err(Error::BoundaryMisuse(self.orbifold.boundary_strata() + other.orbifold.boundary_strata()));
        }
        let orbifold = self.orbifold.product(&other.orbifold, caps)?;
        let mut points = Vec::with_capacity(self.points.len() * other.points.len());
        for a in &self.points {
            for b in &other.points {
                points.push(SingularPointData {
                    label: format!("{}x{}", a.label, b.label),
                    isotropy: a.isotropy.product(&b.isotropy),
                    local_index: a.local_index * b.local_index,
                    apex: false,
                });
            }
        }
        VectorFieldOnOrbifold::new(orbifold, points, BoundaryBehavior::None, self.kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationRow {
    pub hom: String,
    pub lhs: RationalValue,
    pub rhs: RationalValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhReport {
    pub kind: FieldKind,
    pub boundary_behavior: BoundaryBehavior,
    /// Sum of universal indices.
    pub lhs: RElement,
    /// Universal Euler characteristic of the orbifold (or of its interior, for inward fields).
    pub rhs: RElement,
    /// `lhs - rhs`
    pub difference: RElement,
    /// The index sum recomputed by Möbius inversion of radial indices.
    pub lhs_mobius: RElement,
    pub routes_agree: bool,
    pub pass: bool,
    pub specializations: Vec<SpecializationRow>,
}

/// The specializations listed in reports.
pub const REPORT_SPECIALIZATIONS: [Specialization; 3] =
    [Specialization::Chi, Specialization::EulerSatake, Specialization::Orb];

/// Checks `Σ ind_un = χ_un` for the field.
///
/// Outward fields (and fields on closed orbifolds) are compared with the whole
/// orbifold, inward fields with the interior. The specialized values of each side
/// are summed point by point and stratum by stratum, independently of the ring sums.
pub fn poincare_hopf_check(v: &VectorFieldOnOrbifold, caps: &Caps) -> Result<PhReport> {
    let include_boundary = match v.boundary_behavior {
        BoundaryBehavior::None => {
            let n = v.orbifold.boundary_strata();
            if n > 0 {
                return Err(Error::BoundaryMisuse(n));
            }
            true
        }
        BoundaryBehavior::Outward => true,
        BoundaryBehavior::Inward => false,
    };
    let lhs = direct_sum(&v.points);
    let rhs = universal_euler(&v.orbifold, include_boundary);
    let difference = &lhs - &rhs;

    let poset = build_poset_from_classes(&v.orbifold.isotropy_classes(), caps)?;
    let lhs_mobius = universal_index_mobius(&profile_over(&poset, &v.points)?, &poset)?;

    let mut specializations = Vec::new();
    for hom in REPORT_SPECIALIZATIONS {
        let mut l = RationalValue::zero();
        for p in &v.points {
            l = l + generator_value(&p.isotropy, hom, caps)?.scaled(p.local_index);
        }
        let mut r = RationalValue::zero();
        for s in v.orbifold.strata().iter().filter(|s| include_boundary || !s.boundary) {
            r = r + generator_value(&s.isotropy, hom, caps)?.scaled(s.chi_c);
        }
        specializations.push(SpecializationRow { hom: hom.label(), lhs: l, rhs: r });
    }
    Ok(PhReport {
        kind: v.kind,
        boundary_behavior: v.boundary_behavior,
        pass: difference.is_zero(),
        routes_agree: lhs_mobius == lhs,
        lhs,
        rhs,
        difference,
        lhs_mobius,
        specializations,
    })
}
