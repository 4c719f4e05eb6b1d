//! Human-readable names for isomorphism classes. Display only; certificates are
//! the source of truth.

use std::collections::HashMap;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::group_kernel::{build, class_id, GroupClassId, GroupTable};
use crate::Caps;

fn named_groups() -> Vec<(&'static str, GroupTable)> {
    let z4 = build::cyclic(4);
    let z2 = build::cyclic(2);
    let z4z2 = crate::group_kernel::direct_product(&z4, &z2, &Caps::default()).expect("order 8");
    // (a, b) in C4 x C2 has index 2a + b
    let aut_ab: Vec<usize> = (0..8).map(|x| { let (a, b) = (x / 2, x % 2); 2 * a + (b + a) % 2 }).collect();
    let aut_pauli: Vec<usize> = (0..8).map(|x| { let (a, b) = (x / 2, x % 2); 2 * ((a + 2 * b) % 4) + b }).collect();
    let mut out = vec![
        ("S3", build::symmetric(3)),
        ("D8", build::dihedral(8)),
        ("Q8", build::metacyclic(4, 2, 3, 2).expect("Q8")),
        ("D10", build::dihedral(10)),
        ("A4", build::alternating(4)),
        ("Dic12", build::metacyclic(6, 2, 5, 3).expect("Dic12")),
        ("D14", build::dihedral(14)),
        ("D16", build::dihedral(16)),
        ("Q16", build::metacyclic(8, 2, 7, 4).expect("Q16")),
        ("SD16", build::metacyclic(8, 2, 3, 0).expect("SD16")),
        ("M16", build::metacyclic(8, 2, 5, 0).expect("M16")),
        ("C4:C4", build::metacyclic(4, 4, 3, 0).expect("C4:C4")),
        ("(C4xC2):C2", build::semidirect(&z4z2, &z2, &build::cyclic_action(&aut_ab, 2)).expect("G16")),
        ("C4oD8", build::semidirect(&z4z2, &z2, &build::cyclic_action(&aut_pauli, 2)).expect("Pauli")),
        ("D18", build::dihedral(18)),
        ("D20", build::dihedral(20)),
        ("C5:C4", build::metacyclic(5, 4, 2, 0).expect("F20")),
        ("C7:C3", build::metacyclic(7, 3, 2, 0).expect("C7:C3")),
        ("D22", build::dihedral(22)),
        ("S4", build::symmetric(4)),
        ("A5", build::alternating(5)),
        ("S5", build::symmetric(5)),
    ];
    out.push(("SL(2,3)", sl23()));
    out
}

/// SL(2,3) as a permutation group on the 8 nonzero vectors of F_3^2.
pub(crate) fn sl23() -> GroupTable {
    let vectors: Vec<(usize, usize)> = (0..9).map(|i| (i % 3, i / 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [usize; 4]| -> Vec<usize> {
        vectors
            .iter()
            .map(|&(x, y)| {
                let img = ((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
                vectors.iter().position(|&v| v == img).unwrap()
            })
            .collect()
    };
    build::from_permutations(8, &[act([1, 1, 0, 1]), act([1, 0, 1, 1])], usize::MAX).expect("SL(2,3)")
}

fn alias_table() -> &'static HashMap<GroupClassId, &'static str> {
    static TABLE: OnceLock<HashMap<GroupClassId, &'static str>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let caps = Caps::default();
        named_groups()
            .into_iter()
            .filter_map(|(name, g)| {
                let id = class_id(&g, &caps).ok()?;
                id.is_indecomposable().then_some((id, name))
            })
            .collect()
    })
}

fn factor_name(factor: &GroupClassId) -> String {
    let table = &factor.factor_tables()[0];
    let n = table.order();
    if n > 1 && table.element_order(1) == n {
        return format!("C{n}");
    }
    if let Some(name) = alias_table().get(factor) {
        return (*name).to_string();
    }
    let digest = Sha256::digest(factor.as_bytes());
    let hex: String = digest.iter().take(4).map(|b| format!("{b:02x}")).collect();
    format!("G{n}_{hex}")
}

/// Name of an indecomposable class (`C4`, `S3`, ...) or a product of names (`C2xC3`).
/// The trivial class is `1`.
pub fn display_name(id: &GroupClassId) -> String {
    if id.is_trivial() {
        return "1".to_string();
    }
    id.factors().iter().map(factor_name).collect::<Vec<_>>().join("x")
}

/// Names of the indecomposable factors, in certificate order.
pub fn factor_names(id: &GroupClassId) -> Vec<String> {
    id.factors().iter().map(factor_name).collect()
}

/// Resolves a built-in name (`C6`, `S3`, `V4`, `Q8`, ..., or `1`) to a group.
pub fn builtin_group(name: &str) -> Option<GroupTable> {
    let caps = Caps::default();
    let name = name.trim();
    if name == "1" || name.eq_ignore_ascii_case("trivial") {
        return Some(build::trivial());
    }
    if name == "V4" {
        return Some(build::klein_four());
    }
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        return (n >= 1 && n <= caps.product_order).then(|| build::cyclic(n));
    }
    if let Some(n) = name.strip_prefix('S').and_then(|s| s.parse::<usize>().ok()) {
        return (1..=5).contains(&n).then(|| build::symmetric(n));
    }
    if let Some(n) = name.strip_prefix('A').and_then(|s| s.parse::<usize>().ok()) {
        return (1..=5).contains(&n).then(|| build::alternating(n));
    }
    if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        return (n >= 2 && n % 2 == 0 && n <= caps.product_order).then(|| build::dihedral(n));
    }
    named_groups().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
