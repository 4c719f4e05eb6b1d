use super::GroupTable;
use crate::{Caps, Error, Result};

/// Componentwise product; the pair `(a, b)` gets index `a * |G2| + b`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable, caps: &Caps) -> Result<GroupTable> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= caps.product_order)
        .ok_or_else(|| Error::cap("direct product order", (n1 as u128) * (n2 as u128), caps.product_order as u128))?;
    let mut mul = Vec::with_capacity(n * n);
    for a1 in 0..n1 {
        for b1 in 0..n2 {
            for a2 in 0..n1 {
                let a = g1.mul(a1, a2) * n2;
                for b2 in 0..n2 {
                    mul.push((a + g2.mul(b1, b2)) as u32);
                }
            }
        }
    }
    Ok(GroupTable::from_trusted(n, mul))
}

/// Product of a list of tables, left to right. The empty product is trivial.
pub fn direct_product_all(tables: &[GroupTable], caps: &Caps) -> Result<GroupTable> {
    tables
        .iter()
        .try_fold(super::build::trivial(), |acc, t| direct_product(&acc, t, caps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::{are_isomorphic, build};

    #[test]
    fn unit_and_klein() {
        let caps = Caps::default();
        let s3 = build::symmetric(3);
        let p = direct_product(&s3, &build::trivial(), &caps).unwrap();
        assert!(are_isomorphic(&p, &s3).is_some());
        let v4 = direct_product(&build::cyclic(2), &build::cyclic(2), &caps).unwrap();
        assert_eq!((1..4).map(|x| v4.element_order(x)).collect::<Vec<_>>(), vec![2, 2, 2]);
        let z6 = direct_product(&build::cyclic(2), &build::cyclic(3), &caps).unwrap();
        assert!(are_isomorphic(&z6, &build::cyclic(6)).is_some());
    }

    #[test]
    fn product_is_a_valid_group() {
        let caps = Caps::default();
        let p = direct_product(&build::symmetric(3), &build::cyclic(4), &caps).unwrap();
        assert!(GroupTable::validate(&p.to_raw()).is_ok());
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps { product_order: 20, ..Caps::default() };
        assert!(matches!(
            direct_product(&build::cyclic(5), &build::cyclic(5), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
