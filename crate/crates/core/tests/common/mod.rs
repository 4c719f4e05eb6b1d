#![allow(dead_code)]

use orbichi::group_kernel::{build, direct_product_all, GroupTable};
use orbichi::names::builtin_group;
use orbichi::Caps;
use std::sync::OnceLock;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn named(name: &str) -> GroupTable {
    builtin_group(name).unwrap_or_else(|| panic!("builtin {name}"))
}

fn prod(names: &[&str]) -> GroupTable {
    let tables: Vec<GroupTable> = names.iter().map(|n| named(n)).collect();
    direct_product_all(&tables, &Caps::default()).expect("small product")
}

/// One representative of every isomorphism class of order at most 16.
pub fn small_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    let mut push = |label: &str, g: GroupTable| out.push((label.to_string(), g));
    push("1", build::trivial());
    for n in 2..=16 {
        push(&format!("C{n}"), build::cyclic(n));
    }
    push("V4", build::klein_four());
    push("C2xC4", prod(&["C2", "C4"]));
    push("C2^3", prod(&["C2", "C2", "C2"]));
    push("C3^2", prod(&["C3", "C3"]));
    push("C2xC6", prod(&["C2", "C6"]));
    push("C4^2", prod(&["C4", "C4"]));
    push("C2xC8", prod(&["C2", "C8"]));
    push("C2^2xC4", prod(&["C2", "C2", "C4"]));
    push("C2^4", prod(&["C2", "C2", "C2", "C2"]));
    for name in ["S3", "D8", "Q8", "D10", "A4", "Dic12", "D12", "D14"] {
        push(name, named(name));
    }
    for name in ["D16", "Q16", "SD16", "M16", "C4:C4", "(C4xC2):C2", "C4oD8"] {
        push(name, named(name));
    }
    push("C2xD8", prod(&["C2", "D8"]));
    push("C2xQ8", prod(&["C2", "Q8"]));
    out
}

/// Larger groups, up to order 48.
pub fn larger_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    for name in ["D18", "D20", "C5:C4", "C7:C3", "D22", "S4", "SL(2,3)", "D24"] {
        out.push((name.to_string(), named(name)));
    }
    for names in [
        &["C3", "S3"][..],
        &["C2", "A4"],
        &["C3", "Q8"],
        &["C4", "S3"],
        &["C3", "D8"],
        &["S3", "S3"],
        &["C2", "S4"],
        &["C2", "SL(2,3)"],
    ] {
        out.push((names.join("x"), prod(names)));
    }
    out
}

/// Cached copy of [`small_groups`].
pub fn small_groups_cached() -> &'static [(String, GroupTable)] {
    static CACHE: OnceLock<Vec<(String, GroupTable)>> = OnceLock::new();
    CACHE.get_or_init(small_groups)
}

pub fn corpus() -> Vec<(String, GroupTable)> {
    let mut out = small_groups();
    out.extend(larger_groups());
    out
}

pub fn corpus_up_to(order: usize) -> Vec<(String, GroupTable)> {
    corpus().into_iter().filter(|(_, g)| g.order() <= order).collect()
}

/// Random relabeling of a group's elements.
pub fn shuffle_group<R: Rng>(g: &GroupTable, rng: &mut R) -> GroupTable {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("relabeling a valid group")
}

/// Brute-force subgroup count: subsets containing the identity and closed under multiplication.
pub fn brute_force_subgroup_count(g: &GroupTable) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let closed = (0..n)
            .filter(|a| mask >> a & 1 == 1)
            .all(|a| (0..n).filter(|b| mask >> b & 1 == 1).all(|b| mask >> g.mul(a, b) & 1 == 1));
        if closed {
            count += 1;
        }
    }
    count
}

/// `|{(a, b) : ab = ba}| / |G|`.
pub fn brute_force_class_count(g: &GroupTable) -> usize {
    let n = g.order();
    let pairs = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| g.mul(a, b) == g.mul(b, a)).count();
    assert_eq!(pairs % n, 0);
    pairs / n
}

/// Every field obtained by moving one singular point's index by `±1`, with the
/// expected change of the index sum. Apex points lose their apex flag.
pub fn perturbations(
    v: &orbichi::ph_index::VectorFieldOnOrbifold,
) -> Vec<(orbichi::ph_index::VectorFieldOnOrbifold, orbichi::RElement)> {
    let mut out = Vec::new();
    for i in 0..v.points().len() {
        for delta in [-1i64, 1] {
            let mut points = v.points().to_vec();
            points[i].local_index += delta;
            points[i].apex = false;
            let expected = orbichi::RElement::term(points[i].isotropy.clone(), delta);
            out.push((v.with_points(points).expect("perturbed field"), expected));
        }
    }
    out
}

/// Random cone model: an ambient group of order at most `max_order` and singular
/// points with random subgroup isotropy.
pub fn random_cone<R: Rng>(
    groups: &[(String, GroupTable)],
    rng: &mut R,
    caps: &Caps,
) -> orbichi::ph_index::LocalConeModel {
    use orbichi::group_kernel::{class_id, subgroups};
    use orbichi::ph_index::{LocalConeModel, SingularPointData};
    let (_, g) = groups.choose(rng).expect("nonempty corpus");
    let classes: Vec<_> = subgroups(g, true).iter().map(|h| class_id(&h.to_table(g), caps).unwrap()).collect();
    let mut points = Vec::new();
    if rng.gen_bool(0.5) {
        points.push(SingularPointData::apex("apex", class_id(g, caps).unwrap()));
    }
    for i in 0..rng.gen_range(0..6) {
        let iso = classes.choose(rng).unwrap().clone();
        points.push(SingularPointData::new(format!("p{i}"), iso, rng.gen_range(-3..=3)));
    }
    LocalConeModel::new(g.clone(), points, caps).expect("valid random cone")
}
