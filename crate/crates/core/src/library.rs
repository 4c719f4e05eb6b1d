//! Worked models: G-CW complexes for a few global quotients and stratified
//! orbifolds with vector-field data on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::group_kernel::{build, class_id, GroupClassId};
use crate::orbifold_model::{quotient_stratification, CellSpec, GCWComplex, StratifiedOrbifold, Stratum};
use crate::ph_index::{BoundaryBehavior, FieldKind, SingularPointData, VectorFieldOnOrbifold};
use crate::{Caps, Result};

fn shift(m: usize, by: usize) -> impl Fn(usize) -> usize {
    move |k| (k + by) % m
}

/// `Z/m` rotating `S^2`: two fixed poles, an `m`-gon on the equator, meridians to
/// every equator vertex, and triangular faces; all non-polar cells form free orbits.
///
/// Cells: poles `0, 1`; equator vertices, equator edges, northern meridians,
/// southern meridians, northern faces, southern faces in blocks of `m`.
pub fn spindle_complex(m: usize) -> GCWComplex {
    assert!(m >= 1);
    let mut cells = vec![CellSpec::new(0), CellSpec::new(0)];
    for dim in [0, 1, 1, 1, 2, 2] {
        cells.extend((0..m).map(|_| CellSpec::new(dim)));
    }
    let rot = shift(m, 1);
    let mut perm = vec![0, 1];
    for block in 0..6 {
        perm.extend((0..m).map(|k| 2 + block * m + rot(k)));
    }
    let action = if m > 1 { BTreeMap::from([(1, perm)]) } else { BTreeMap::new() };
    GCWComplex::new(Arc::new(build::cyclic(m)), cells, &action).expect("rotation action")
}

/// `Z/2` reflecting a circle subdivided into `2n` edges; vertices `0` and `n` are fixed.
///
/// Cells: vertices `0..2n`, then edge `k` (from vertex `k` to `k+1`) at `2n + k`.
pub fn reflection_circle(n: usize) -> GCWComplex {
    assert!(n >= 1);
    let v = 2 * n;
    let mut cells: Vec<CellSpec> = (0..v).map(|_| CellSpec::new(0)).collect();
    cells.extend((0..v).map(|_| CellSpec::new(1)));
    let mut perm: Vec<usize> = (0..v).map(|k| (v - k) % v).collect();
    perm.extend((0..v).map(|k| v + (2 * v - k - 1) % v));
    GCWComplex::new(Arc::new(build::cyclic(2)), cells, &BTreeMap::from([(1, perm)])).expect("reflection action")
}

/// The dihedral group of order 6 acting on `S^2` by rotations about the polar axis
/// and reflections in three vertical planes. The quotient is a lune whose corners
/// have isotropy `S3` and whose edges are mirrors.
///
/// Cells: poles `0, 1`; six equator vertices (on mirror planes); six equator edges;
/// six northern and six southern meridians; six northern and six southern faces.
pub fn dihedral_sphere_complex() -> GCWComplex {
    let s3 = build::symmetric(3);
    // element 1 is a transposition, element 2 a 3-cycle; s r s = r^-1
    let (refl, rot) = (1usize, 2usize);
    debug_assert!(s3.element_order(refl) == 2 && s3.element_order(rot) == 3);
    let mut cells = vec![CellSpec::new(0), CellSpec::new(0)];
    for dim in [0, 1, 1, 1, 2, 2] {
        cells.extend((0..6).map(|_| CellSpec::new(dim)));
    }
    let vertex_like = |f: &dyn Fn(usize) -> usize| -> Vec<usize> { (0..6).map(f).collect() };
    let r = |k: usize| (k + 2) % 6;
    let s_vertex = |k: usize| (6 - k) % 6;
    let s_edge = |k: usize| (11 - k) % 6;
    let blocks_r = [vertex_like(&r), vertex_like(&r), vertex_like(&r), vertex_like(&r), vertex_like(&r), vertex_like(&r)];
    // vertices, edges, meridians N, meridians S, faces N, faces S
    let blocks_s = [
        vertex_like(&s_vertex),
        vertex_like(&s_edge),
        vertex_like(&s_vertex),
        vertex_like(&s_vertex),
        vertex_like(&s_edge),
        vertex_like(&s_edge),
    ];
    let assemble = |blocks: &[Vec<usize>; 6]| -> Vec<usize> {
        let mut p = vec![0, 1];
        for (b, block) in blocks.iter().enumerate() {
            p.extend(block.iter().map(|&k| 2 + 6 * b + k));
        }
        p
    };
    let action = BTreeMap::from([(refl, assemble(&blocks_s)), (rot, assemble(&blocks_r))]);
    GCWComplex::new(Arc::new(s3), cells, &action).expect("dihedral action")
}

/// `S^2` with the trivial group: one vertex and one 2-cell.
pub fn trivial_sphere() -> GCWComplex {
    GCWComplex::new(Arc::new(build::trivial()), vec![CellSpec::new(0), CellSpec::new(2)], &BTreeMap::new())
        .expect("trivial action")
}

/// The G-CW models above, by name.
pub fn complexes() -> Vec<(String, GCWComplex)> {
    let mut out: Vec<(String, GCWComplex)> = [2, 3, 5, 7].iter().map(|&m| (format!("spindle_{m}"), spindle_complex(m))).collect();
    out.push(("mirror_circle".into(), reflection_circle(1)));
    out.push(("mirror_circle_subdivided".into(), reflection_circle(3)));
    out.push(("dihedral_sphere".into(), dihedral_sphere_complex()));
    out.push(("sphere".into(), trivial_sphere()));
    out
}

/// A closed orbifold with a vector field on it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub field: VectorFieldOnOrbifold,
}

/// An orbifold with boundary and two fields: pointing outward and inward on the boundary.
#[derive(Clone, Debug)]
pub struct BoundaryFixture {
    pub name: String,
    pub orbifold: StratifiedOrbifold,
    pub outward: VectorFieldOnOrbifold,
    pub inward: VectorFieldOnOrbifold,
}

fn cyclic_class(m: usize, caps: &Caps) -> Result<GroupClassId> {
    class_id(&build::cyclic(m), caps)
}

fn free(label: &str, index: i64) -> SingularPointData {
    SingularPointData::new(label, GroupClassId::trivial(), index)
}

/// Spindle `S^2/(Z/m)` with the rotation-invariant field vanishing at the poles.
pub fn spindle(m: usize, caps: &Caps) -> Result<Fixture> {
    let q = quotient_stratification(&spindle_complex(m), caps)?;
    let zm = cyclic_class(m, caps)?;
    let points = vec![SingularPointData::apex("north", zm.clone()), SingularPointData::apex("south", zm)];
    Ok(Fixture { name: format!("spindle_{m}"), field: VectorFieldOnOrbifold::closed(q, points)? })
}

/// `S^1/(Z/2)`: zeros at both mirror endpoints and one interior zero of index -1.
pub fn mirror_interval(caps: &Caps) -> Result<Fixture> {
    let q = quotient_stratification(&reflection_circle(1), caps)?;
    let z2 = cyclic_class(2, caps)?;
    let points = vec![
        SingularPointData::apex("left", z2.clone()),
        SingularPointData::apex("right", z2),
        free("middle", -1),
    ];
    Ok(Fixture { name: "mirror_interval".into(), field: VectorFieldOnOrbifold::closed(q, points)? })
}

pub fn torus() -> Result<Fixture> {
    let q = StratifiedOrbifold::new(vec![Stratum::new(0, GroupClassId::trivial())]);
    let points = vec![free("a", 1), free("b", -1), free("c", 1), free("d", -1)];
    Ok(Fixture { name: "torus".into(), field: VectorFieldOnOrbifold::closed(q, points)? })
}

pub fn sphere(caps: &Caps) -> Result<Fixture> {
    let q = quotient_stratification(&trivial_sphere(), caps)?;
    let points = vec![free("north", 1), free("south", 1)];
    Ok(Fixture { name: "sphere".into(), field: VectorFieldOnOrbifold::closed(q, points)? })
}

/// Teardrop `S^2(m)`: one cone point, which is not a global quotient. The field has the
/// apex as a source and one ordinary sink.
pub fn teardrop(m: usize, caps: &Caps) -> Result<Fixture> {
    let zm = cyclic_class(m, caps)?;
    let q = StratifiedOrbifold::new(vec![Stratum::new(1, zm.clone()), Stratum::new(1, GroupClassId::trivial())]);
    let points = vec![SingularPointData::apex("cone", zm), free("sink", 1)];
    Ok(Fixture { name: format!("teardrop_{m}"), field: VectorFieldOnOrbifold::closed(q, points)? })
}

/// Sphere with two cone points of orders `p` and `q`, field vanishing at the cone points.
pub fn spindle_pq(p: usize, q: usize, caps: &Caps) -> Result<Fixture> {
    let (zp, zq) = (cyclic_class(p, caps)?, cyclic_class(q, caps)?);
    let orb = StratifiedOrbifold::new(vec![
        Stratum::new(1, zp.clone()),
        Stratum::new(1, zq.clone()),
        Stratum::new(0, GroupClassId::trivial()),
    ]);
    let points = vec![SingularPointData::apex("p", zp), SingularPointData::apex("q", zq)];
    Ok(Fixture { name: format!("spindle_{p}_{q}"), field: VectorFieldOnOrbifold::closed(orb, points)? })
}

/// `S^2/S3` for the dihedral action: a lune with two `S3` corners and two mirror edges.
/// The field vanishes at the corners, has a saddle of index -1 in each mirror edge and
/// a source in the interior.
pub fn dihedral_lune(caps: &Caps) -> Result<Fixture> {
    let q = quotient_stratification(&dihedral_sphere_complex(), caps)?;
    let s3 = class_id(&build::symmetric(3), caps)?;
    let z2 = cyclic_class(2, caps)?;
    let points = vec![
        SingularPointData::apex("corner_n", s3.clone()),
        SingularPointData::apex("corner_s", s3),
        SingularPointData::new("edge_a", z2.clone(), -1),
        SingularPointData::new("edge_b", z2, -1),
        free("interior", 1),
    ];
    Ok(Fixture { name: "dihedral_lune".into(), field: VectorFieldOnOrbifold::closed(q, points)? })
}

fn product(a: &Fixture, b: &Fixture, caps: &Caps) -> Result<Fixture> {
    Ok(Fixture { name: format!("{}x{}", a.name, b.name), field: a.field.product(&b.field, caps)? })
}

/// All closed fixtures, products included, ordered by name.
pub fn closed_fixtures(caps: &Caps) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for m in [2, 3, 5, 7] {
        out.push(spindle(m, caps)?);
    }
    out.push(mirror_interval(caps)?);
    out.push(torus()?);
    out.push(sphere(caps)?);
    out.push(teardrop(3, caps)?);
    out.push(teardrop(5, caps)?);
    out.push(spindle_pq(2, 3, caps)?);
    out.push(dihedral_lune(caps)?);
    out.push(product(&spindle(2, caps)?, &mirror_interval(caps)?, caps)?);
    out.push(product(&spindle(3, caps)?, &torus()?, caps)?);
    out.push(product(&mirror_interval(caps)?, &mirror_interval(caps)?, caps)?);
    out.push(product(&teardrop(3, caps)?, &sphere(caps)?, caps)?);
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// `[0, 1]`: the field `x - 1/2` points outward, its negative inward.
pub fn closed_interval() -> Result<BoundaryFixture> {
    let q = StratifiedOrbifold::new(vec![
        Stratum::new(-1, GroupClassId::trivial()),
        Stratum::on_boundary(2, GroupClassId::trivial()),
    ]);
    let field = |index: i64, b| VectorFieldOnOrbifold::new(q.clone(), vec![free("middle", index)], b, FieldKind::VectorField);
    Ok(BoundaryFixture {
        name: "closed_interval".into(),
        outward: field(1, BoundaryBehavior::Outward)?,
        inward: field(-1, BoundaryBehavior::Inward)?,
        orbifold: q,
    })
}

/// `D^2/(Z/m)`: a cone disk. The outward radial field vanishes only at the apex; the
/// inward field has the apex as a source, a sink and a saddle.
pub fn half_spindle(m: usize, caps: &Caps) -> Result<BoundaryFixture> {
    let zm = cyclic_class(m, caps)?;
    let q = StratifiedOrbifold::new(vec![
        Stratum::new(1, zm.clone()),
        Stratum::new(0, GroupClassId::trivial()),
        Stratum::on_boundary(0, GroupClassId::trivial()),
    ]);
    let outward = VectorFieldOnOrbifold::new(
        q.clone(),
        vec![SingularPointData::apex("apex", zm.clone())],
        BoundaryBehavior::Outward,
        FieldKind::VectorField,
    )?;
    let inward = VectorFieldOnOrbifold::new(
        q.clone(),
        vec![SingularPointData::apex("apex", zm), free("sink", 1), free("saddle", -1)],
        BoundaryBehavior::Inward,
        FieldKind::VectorField,
    )?;
    Ok(BoundaryFixture { name: format!("half_spindle_{m}"), orbifold: q, outward, inward })
}

/// `[-1, 1]/(Z/2)` for the reflection `x -> -x`: a mirror point at `0` and a boundary
/// point at `1`. The outward field is `x d/dx`; the inward one also has a saddle.
pub fn mirror_half_interval(caps: &Caps) -> Result<BoundaryFixture> {
    let z2 = cyclic_class(2, caps)?;
    let q = StratifiedOrbifold::new(vec![
        Stratum::new(1, z2.clone()),
        Stratum::new(-1, GroupClassId::trivial()),
        Stratum::on_boundary(1, GroupClassId::trivial()),
    ]);
    let outward = VectorFieldOnOrbifold::new(
        q.clone(),
        vec![SingularPointData::apex("mirror", z2.clone())],
        BoundaryBehavior::Outward,
        FieldKind::VectorField,
    )?;
    let inward = VectorFieldOnOrbifold::new(
        q.clone(),
        vec![SingularPointData::apex("mirror", z2), free("middle", -1)],
        BoundaryBehavior::Inward,
        FieldKind::VectorField,
    )?;
    Ok(BoundaryFixture { name: "mirror_half_interval".into(), orbifold: q, outward, inward })
}

/// Boundary fixtures, ordered by name.
pub fn boundary_fixtures(caps: &Caps) -> Result<Vec<BoundaryFixture>> {
    let mut out = vec![closed_interval()?, half_spindle(3, caps)?, half_spindle(4, caps)?, mirror_half_interval(caps)?];
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold_model::{global_quotient_check, universal_euler};
    use crate::ph_index::poincare_hopf_check;

    #[test]
    fn complexes_are_valid_and_agree() {
        let caps = Caps::default();
        for (name, x) in complexes() {
            assert!(global_quotient_check(&x, &caps).unwrap().agree, "{name}");
        }
        assert_eq!(spindle_complex(4).euler(), 2);
        assert_eq!(dihedral_sphere_complex().euler(), 2);
        assert_eq!(reflection_circle(4).euler(), 0);
    }

    #[test]
    fn lune_characteristic() {
        let caps = Caps::default();
        let q = quotient_stratification(&dihedral_sphere_complex(), &caps).unwrap();
        assert_eq!(universal_euler(&q, true).render(), "2*T[S3] - 2*T[C2] + 1");
    }

    #[test]
    fn fixtures_pass() {
        let caps = Caps::default();
        let fixtures = closed_fixtures(&caps).unwrap();
        assert!(fixtures.len() >= 8);
        for f in &fixtures {
            let r = poincare_hopf_check(&f.field, &caps).unwrap();
            assert!(r.pass && r.routes_agree, "{}", f.name);
        }
        for b in boundary_fixtures(&caps).unwrap() {
            assert!(poincare_hopf_check(&b.outward, &caps).unwrap().pass, "{}", b.name);
            assert!(poincare_hopf_check(&b.inward, &caps).unwrap().pass, "{}", b.name);
        }
    }
}
