use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::group_kernel::GroupClassId;
use crate::names::factor_names;
use crate::{Caps, Error, Result};

/// An element of the ring of isomorphism classes of finite groups: a finitely
/// supported integer combination of generators `T[G]`.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RElement {
    coeffs: BTreeMap<GroupClassId, i64>,
}

impl RElement {
    pub fn zero() -> RElement {
        RElement::default()
    }

    /// The generator `T[trivial]`, the multiplicative unit.
    pub fn one() -> RElement {
        RElement::generator(GroupClassId::trivial())
    }

    pub fn generator(id: GroupClassId) -> RElement {
        RElement::term(id, 1)
    }

    pub fn term(id: GroupClassId, coeff: i64) -> RElement {
        let mut r = RElement::zero();
        r.add_term(id, coeff);
        r
    }

    pub fn add_term(&mut self, id: GroupClassId, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(id);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, id: &GroupClassId) -> i64 {
        self.coeffs.get(id).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in increasing certificate order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GroupClassId, i64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn scale(&self, k: i64) -> RElement {
        let mut r = RElement::zero();
        for (id, c) in self.terms() {
            r.add_term(id.clone(), c * k);
        }
        r
    }

    /// Bilinear extension of `T[G1] * T[G2] = T[G1 x G2]`.
    ///
    /// The product class is formed by merging indecomposable-factor multisets, so no
    /// product table is built; the result's order is still bounded by the product cap.
    pub fn mul(&self, other: &RElement, caps: &Caps) -> Result<RElement> {
        let mut r = RElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let order = a.order() as u128 * b.order() as u128;
                if order > caps.product_order as u128 {
                    return Err(Error::cap("ring product order", order, caps.product_order as u128));
                }
                r.add_term(a.product(b), ca * cb);
            }
        }
        Ok(r)
    }

    /// Each basis key expanded into its multiset of indecomposable factors.
    pub fn monomial_form(&self) -> Vec<(Vec<GroupClassId>, i64)> {
        self.terms().map(|(id, c)| (id.factors(), c)).collect()
    }

    /// Polynomial rendering in indecomposable generators, e.g. `3*T[C2]*T[C3] - T[S3]`.
    ///
    /// Terms are listed from the largest certificate to the smallest, so the constant
    /// (trivial-group) term comes last.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (id, c)) in self.terms().rev().enumerate() {
            let mono = render_monomial(id);
            let mag = c.unsigned_abs();
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{mag}*{mono}"),
            };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn render_monomial(id: &GroupClassId) -> String {
    let names = factor_names(id);
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < names.len() {
        let mut j = i;
        while j < names.len() && names[j] == names[i] {
            j += 1;
        }
        let power = j - i;
        parts.push(if power == 1 { format!("T[{}]", names[i]) } else { format!("T[{}]^{power}", names[i]) });
        i = j;
    }
    parts.join("*")
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RElement({})", self.render())
    }
}

#[derive(Serialize)]
struct TermRecord {
    certificate: String,
    coefficient: i64,
    monomial: Vec<String>,
}

/// Serialized as a list of `{certificate, coefficient, monomial}` records, largest
/// certificate first.
impl Serialize for RElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().rev().map(|(id, c)| TermRecord {
            certificate: id.to_hex(),
            coefficient: c,
            monomial: id.factors().iter().map(|f| f.to_hex()).collect(),
        }))
    }
}

impl std::ops::Add<&RElement> for &RElement {
    type Output = RElement;
    fn add(self, rhs: &RElement) -> RElement {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl std::ops::AddAssign<&RElement> for RElement {
    fn add_assign(&mut self, rhs: &RElement) {
        for (id, c) in rhs.terms() {
            self.add_term(id.clone(), c);
        }
    }
}

impl std::ops::Sub<&RElement> for &RElement {
    type Output = RElement;
    fn sub(self, rhs: &RElement) -> RElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RElement {
    type Output = RElement;
    fn neg(self) -> RElement {
        self.scale(-1)
    }
}

impl std::iter::Sum for RElement {
    fn sum<I: Iterator<Item = RElement>>(iter: I) -> RElement {
        iter.fold(RElement::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::{build, class_id};

    fn t(g: &crate::GroupTable) -> RElement {
        RElement::generator(class_id(g, &Caps::default()).unwrap())
    }

    #[test]
    fn additive_examples() {
        let z2 = t(&build::cyclic(2));
        let z3 = t(&build::cyclic(3));
        assert_eq!(&z2 + &RElement::zero(), z2);
        assert_eq!(&z2 + &z2, z2.scale(2));
        let x = &(&z2 - &z3) + &z3;
        assert_eq!(x, z2);
        assert_eq!(x.len(), 1);
        assert!((&z2 - &z2).is_zero());
    }

    #[test]
    fn multiplicative_examples() {
        let caps = Caps::default();
        let z2 = t(&build::cyclic(2));
        let z3 = t(&build::cyclic(3));
        let s3 = t(&build::symmetric(3));
        assert_eq!(RElement::one().mul(&s3, &caps).unwrap(), s3);
        assert_eq!(z2.mul(&z3, &caps).unwrap(), t(&build::cyclic(6)));
        let v4 = t(&build::klein_four());
        assert_eq!(z2.mul(&z2, &caps).unwrap(), v4);
        let tight = Caps { product_order: 5, ..caps };
        assert!(z2.mul(&z3, &tight).is_err());
    }

    #[test]
    fn rendering() {
        let z2 = t(&build::cyclic(2));
        let z3 = t(&build::cyclic(3));
        let z6 = t(&build::cyclic(6));
        let s3 = t(&build::symmetric(3));
        assert_eq!(RElement::one().render(), "1");
        assert_eq!(RElement::zero().render(), "0");
        assert_eq!(t(&build::klein_four()).render(), "T[C2]^2");
        assert_eq!((&z6.scale(3) - &s3).render(), "3*T[C2]*T[C3] - T[S3]");
        assert_eq!((&z2.scale(2) - &RElement::one()).render(), "2*T[C2] - 1");
        assert_eq!((-&z3).render(), "-T[C3]");
        let mono = (&z6.scale(3) - &s3).monomial_form();
        assert_eq!(mono.len(), 2);
        assert!(RElement::one().monomial_form()[0].0.is_empty());
    }
}
