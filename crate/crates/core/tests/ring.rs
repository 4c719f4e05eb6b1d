mod common;

use std::sync::{Arc, OnceLock};

use orbichi::burnside::{b_mul, map_rh, orbit_decompose, BurnsideElement};
use orbichi::group_kernel::{class_id, count_commuting_tuples, direct_product, subgroups, GroupClassId, GroupTable};
use orbichi::grothendieck_ring::{gset_class, induce, specialize, table_value, GSetAction};
use orbichi::names::builtin_group;
use orbichi::{Caps, RElement, RationalValue, Specialization};
use proptest::prelude::*;
use rand::Rng;

fn generators() -> &'static [GroupClassId] {
    static GENS: OnceLock<Vec<GroupClassId>> = OnceLock::new();
    GENS.get_or_init(|| {
        let caps = Caps::default();
        ["1", "C2", "C3", "C4", "V4", "S3", "Q8"]
            .iter()
            .map(|n| class_id(&builtin_group(n).unwrap(), &caps).unwrap())
            .collect()
    })
}

fn relement() -> impl Strategy<Value = RElement> {
    prop::collection::vec((0..7usize, -4i64..=4), 0..4).prop_map(|terms| {
        let mut r = RElement::zero();
        for (i, c) in terms {
            r.add_term(generators()[i].clone(), c);
        }
        r
    })
}

fn homs() -> impl Strategy<Value = Specialization> {
    prop_oneof![
        Just(Specialization::Chi),
        Just(Specialization::EulerSatake),
        Just(Specialization::Orb),
        (-1i64..=3).prop_map(Specialization::Higher),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_an_abelian_group(a in relement(), b in relement(), c in relement()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &RElement::zero(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn multiplication_is_a_commutative_ring(a in relement(), b in relement(), c in relement()) {
        let caps = Caps::default();
        let ab = a.mul(&b, &caps).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a, &caps).unwrap());
        prop_assert_eq!(ab.mul(&c, &caps).unwrap(), a.mul(&b.mul(&c, &caps).unwrap(), &caps).unwrap());
        prop_assert_eq!(a.mul(&(&b + &c), &caps).unwrap(), &ab + &a.mul(&c, &caps).unwrap());
        prop_assert_eq!(a.mul(&RElement::one(), &caps).unwrap(), a.clone());
    }

    #[test]
    fn specializations_are_ring_homomorphisms(a in relement(), b in relement(), hom in homs()) {
        let caps = Caps::default();
        let (sa, sb) = (specialize(&a, hom, &caps).unwrap(), specialize(&b, hom, &caps).unwrap());
        prop_assert_eq!(specialize(&(&a + &b), hom, &caps).unwrap(), sa.clone() + sb.clone());
        prop_assert_eq!(specialize(&a.mul(&b, &caps).unwrap(), hom, &caps).unwrap(), sa * sb);
        prop_assert_eq!(specialize(&RElement::one(), hom, &caps).unwrap(), RationalValue::one());
    }

    #[test]
    fn render_is_canonical(a in relement(), b in relement()) {
        prop_assert_eq!(a == b, a.render() == b.render());
    }
}

/// Oracle for `|G|^-1 · #{commuting (k+1)-tuples}` by nested loops.
fn brute_force_higher(g: &GroupTable, k: usize) -> RationalValue {
    fn extend(g: &GroupTable, chosen: &mut Vec<usize>, left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for x in g.elements() {
            if chosen.iter().all(|&y| g.commute(x, y)) {
                chosen.push(x);
                total += extend(g, chosen, left - 1);
                chosen.pop();
            }
        }
        total
    }
    RationalValue::from_u128_ratio(extend(g, &mut Vec::new(), k + 1), g.order() as u128)
}

#[test]
fn generator_values_match_brute_force() {
    let caps = Caps::default();
    for (name, g) in common::corpus_up_to(16) {
        let t = RElement::generator(class_id(&g, &caps).unwrap());
        assert_eq!(specialize(&t, Specialization::Chi, &caps).unwrap(), RationalValue::one());
        assert_eq!(
            specialize(&t, Specialization::EulerSatake, &caps).unwrap(),
            RationalValue::new(1, g.order() as i64),
            "{name}"
        );
        for k in 1..=2 {
            let via_factors = specialize(&t, Specialization::Higher(k as i64), &caps).unwrap();
            assert_eq!(via_factors, brute_force_higher(&g, k), "{name} k={k}");
            assert_eq!(via_factors, table_value(&g, Specialization::Higher(k as i64), &caps).unwrap());
        }
        assert_eq!(
            specialize(&t, Specialization::Orb, &caps).unwrap(),
            RationalValue::integer(common::brute_force_class_count(&g) as i64),
            "{name}"
        );
    }
}

#[test]
fn higher_zero_is_plain_euler_characteristic() {
    let caps = Caps::default();
    for (_, g) in common::corpus_up_to(24) {
        let t = RElement::generator(class_id(&g, &caps).unwrap());
        assert_eq!(specialize(&t, Specialization::Higher(0), &caps).unwrap(), RationalValue::one());
        assert_eq!(
            specialize(&t, Specialization::Higher(-1), &caps).unwrap(),
            specialize(&t, Specialization::EulerSatake, &caps).unwrap()
        );
    }
}

#[test]
fn commuting_counts_are_multiplicative() {
    let caps = Caps::default();
    let groups = common::corpus_up_to(8);
    for (_, a) in &groups {
        for (_, b) in &groups {
            let p = direct_product(a, b, &caps).unwrap();
            for len in 1..=3 {
                assert_eq!(
                    count_commuting_tuples(&p, len, &caps).unwrap(),
                    count_commuting_tuples(a, len, &caps).unwrap() * count_commuting_tuples(b, len, &caps).unwrap()
                );
            }
        }
    }
}

/// Random H-set: a disjoint union of coset spaces, with shuffled points.
fn random_gset<R: Rng>(h: Arc<GroupTable>, rng: &mut R) -> GSetAction {
    use rand::seq::SliceRandom;
    let subs = subgroups(&h, false);
    let mut x = GSetAction::empty(h.clone());
    for _ in 0..rng.gen_range(1..=3) {
        let k = subs.choose(rng).unwrap();
        x = x.disjoint_union(&GSetAction::cosets(h.clone(), k)).unwrap();
    }
    let mut perm: Vec<usize> = (0..x.size()).collect();
    perm.shuffle(rng);
    x.relabel_points(&perm).unwrap()
}

#[test]
fn gset_classes_are_additive_and_multiplicative() {
    let caps = Caps::default();
    let mut rng = common::rng(11);
    for (name, g) in common::corpus_up_to(12) {
        let g = Arc::new(g);
        for _ in 0..4 {
            let (x, y) = (random_gset(g.clone(), &mut rng), random_gset(g.clone(), &mut rng));
            let (cx, cy) = (gset_class(&x, &caps).unwrap(), gset_class(&y, &caps).unwrap());
            assert_eq!(gset_class(&x.disjoint_union(&y).unwrap(), &caps).unwrap(), &cx + &cy, "{name}");
            let bx = orbit_decompose(&x);
            assert_eq!(map_rh(&bx, &caps).unwrap(), cx, "{name}");
            let by = orbit_decompose(&y);
            assert_eq!(b_mul(&bx, &by).unwrap(), orbit_decompose(&x.product(&y).unwrap()), "{name}");
        }
    }
}

#[test]
fn induction_preserves_class() {
    let caps = Caps::default();
    let mut rng = common::rng(5);
    for (name, g) in common::corpus_up_to(16) {
        let g = Arc::new(g);
        for h in subgroups(&g, true) {
            let ht = Arc::new(h.to_table(&g));
            let x = random_gset(ht, &mut rng);
            let induced = induce(&x, g.clone(), h.elements()).unwrap();
            assert_eq!(induced.size(), x.size() * g.order() / h.order());
            assert_eq!(gset_class(&induced, &caps).unwrap(), gset_class(&x, &caps).unwrap(), "{name}");
        }
    }
}

#[test]
fn induction_rejects_bad_embeddings() {
    let g = Arc::new(builtin_group("S3").unwrap());
    let c2 = Arc::new(builtin_group("C2").unwrap());
    let x = GSetAction::point(c2);
    assert!(induce(&x, g.clone(), &[0, 2]).is_err());
    assert!(induce(&x, g.clone(), &[0, 0]).is_err());
    assert!(induce(&x, g, &[0]).is_err());
}

#[test]
fn burnside_products_on_s3() {
    let caps = Caps::default();
    let g = Arc::new(builtin_group("S3").unwrap());
    let subs = subgroups(&g, true);
    let by_order = |n: usize| subs.iter().find(|h| h.order() == n).unwrap().clone();
    let (triv, z2, z3) = (by_order(1), by_order(2), by_order(3));
    let basis = |h| BurnsideElement::basis(g.clone(), h);
    let sq = |h| b_mul(&basis(h), &basis(h)).unwrap();
    let mut expected = basis(&z2);
    expected.add_basis(&triv, 1);
    assert_eq!(sq(&z2), expected);
    assert_eq!(sq(&z3), basis(&z3).scale(2));
    let rh = map_rh(&sq(&z2), &caps).unwrap();
    assert_eq!(rh.render(), "T[C2] + 1");
}
