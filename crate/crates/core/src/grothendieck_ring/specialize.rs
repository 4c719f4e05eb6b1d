use std::fmt;
use std::str::FromStr;

use super::{RElement, RationalValue};
use crate::group_kernel::{count_commuting_tuples, GroupClassId, GroupTable};
use crate::{Caps, Error, Result};

/// A ring homomorphism out of the class ring into the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `T[G] -> 1`
    Chi,
    /// `T[G] -> 1/|G|`
    EulerSatake,
    /// `T[G] -> #{commuting pairs}/|G|`, the same as `Higher(1)`
    Orb,
    /// `T[G] -> #{commuting (k+1)-tuples}/|G|` for `k >= 0`; `k = -1` is `1/|G|`.
    Higher(i64),
}

impl Specialization {
    /// Tuple order `k` with `Chi = 0` and `EulerSatake = -1`.
    pub fn level(self) -> i64 {
        match self {
            Specialization::Chi => 0,
            Specialization::EulerSatake => -1,
            Specialization::Orb => 1,
            Specialization::Higher(k) => k,
        }
    }

    pub fn label(self) -> String {
        match self {
            Specialization::Chi => "chi".into(),
            Specialization::EulerSatake => "chi_ES".into(),
            Specialization::Orb => "chi_orb".into(),
            Specialization::Higher(k) => format!("chi^({k})"),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Chi => f.write_str("chi"),
            Specialization::EulerSatake => f.write_str("es"),
            Specialization::Orb => f.write_str("orb"),
            Specialization::Higher(k) => write!(f, "k:{k}"),
        }
    }
}

impl FromStr for Specialization {
    type Err = Error;

    /// Accepts `chi`, `es`, `orb` and `k:<n>` with `n >= -1`.
    fn from_str(s: &str) -> Result<Specialization> {
        match s.trim() {
            "chi" => Ok(Specialization::Chi),
            "es" | "euler_satake" => Ok(Specialization::EulerSatake),
            "orb" => Ok(Specialization::Orb),
            other => {
                let k = other
                    .strip_prefix("k:")
                    .and_then(|n| n.parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown specialization `{other}`")))?;
                if k < -1 {
                    return Err(Error::UnsupportedSpecialization(format!("k = {k}; only k >= -1 is defined")));
                }
                Ok(Specialization::Higher(k))
            }
        }
    }
}

fn tuple_ratio(g: &GroupTable, k: i64, caps: &Caps) -> Result<RationalValue> {
    let n = g.order() as u128;
    if k == -1 {
        return Ok(RationalValue::from_u128_ratio(1, n));
    }
    if k < -1 {
        return Err(Error::UnsupportedSpecialization(format!("k = {k}; only k >= -1 is defined")));
    }
    let count = count_commuting_tuples(g, k as usize + 1, caps)?;
    Ok(RationalValue::from_u128_ratio(count, n))
}

/// Value on a generator `T[G]`, computed factor by factor.
///
/// Commuting tuples of a direct product are pairs of commuting tuples of the factors,
/// so the tuple count is multiplicative and each factor table is handled separately.
pub fn generator_value(id: &GroupClassId, hom: Specialization, caps: &Caps) -> Result<RationalValue> {
    match hom {
        Specialization::Chi => Ok(RationalValue::one()),
        Specialization::EulerSatake => Ok(RationalValue::from_u128_ratio(1, id.order() as u128)),
        _ => {
            let k = hom.level();
            let mut v = RationalValue::one();
            for t in id.factor_tables() {
                v = v * tuple_ratio(&t, k, caps)?;
            }
            Ok(v)
        }
    }
}

/// Value on `T[G]` computed from the whole table `g`, without factorization.
pub fn table_value(g: &GroupTable, hom: Specialization, caps: &Caps) -> Result<RationalValue> {
    match hom {
        Specialization::Chi => Ok(RationalValue::one()),
        _ => tuple_ratio(g, hom.level(), caps),
    }
}

/// Linear extension of the generator values.
pub fn specialize(a: &RElement, hom: Specialization, caps: &Caps) -> Result<RationalValue> {
    let mut total = RationalValue::zero();
    for (id, c) in a.terms() {
        total = total + generator_value(id, hom, caps)?.scaled(c);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::{build, class_id};

    fn id(g: &GroupTable) -> GroupClassId {
        class_id(g, &Caps::default()).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        for s in ["chi", "es", "orb", "k:3", "k:-1", "k:0"] {
            let h: Specialization = s.parse().unwrap();
            assert_eq!(h.to_string(), s);
        }
        assert!(matches!("k:-2".parse::<Specialization>(), Err(Error::UnsupportedSpecialization(_))));
        assert!(matches!("x".parse::<Specialization>(), Err(Error::Parse(_))));
    }

    #[test]
    fn generator_values() {
        let caps = Caps::default();
        let s3 = id(&build::symmetric(3));
        assert_eq!(generator_value(&s3, Specialization::EulerSatake, &caps).unwrap().to_string(), "1/6");
        assert_eq!(generator_value(&s3, Specialization::Orb, &caps).unwrap().to_string(), "3");
        assert_eq!(generator_value(&s3, Specialization::Higher(0), &caps).unwrap().to_string(), "1");
        assert_eq!(generator_value(&s3, Specialization::Higher(-1), &caps).unwrap().to_string(), "1/6");
        for m in 1..=8 {
            let z = id(&build::cyclic(m));
            for k in 1..=3 {
                let v = generator_value(&z, Specialization::Higher(k), &caps).unwrap();
                assert_eq!(v, RationalValue::integer((m as i64).pow(k as u32)));
            }
        }
    }

    #[test]
    fn factorwise_matches_whole_table() {
        let caps = Caps::default();
        let g = crate::group_kernel::direct_product(&build::symmetric(3), &build::metacyclic(4, 2, 3, 2).unwrap(), &caps).unwrap();
        for hom in [Specialization::Orb, Specialization::Higher(2), Specialization::EulerSatake] {
            assert_eq!(generator_value(&id(&g), hom, &caps).unwrap(), table_value(&g, hom, &caps).unwrap());
        }
    }

    #[test]
    fn linear_extension() {
        let caps = Caps::default();
        let z2 = RElement::generator(id(&build::cyclic(2)));
        let a = &z2.scale(2) - &RElement::one();
        assert_eq!(specialize(&a, Specialization::Chi, &caps).unwrap().to_string(), "1");
        assert_eq!(specialize(&a, Specialization::EulerSatake, &caps).unwrap().to_string(), "0");
        assert_eq!(specialize(&a, Specialization::Orb, &caps).unwrap().to_string(), "3");
    }
}
