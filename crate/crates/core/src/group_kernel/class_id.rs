use std::sync::Arc;

use super::{build, direct_product_all, GroupTable, RawTable};
use crate::{Caps, Error, Result};

const CLASS_TAG: u8 = b'G';
const FACTOR_TAG: u8 = b'I';

/// Canonical certificate of an isomorphism class of finite groups.
///
/// Byte layout: `'G'`, total order (u64 BE), factor count (u16 BE), then each
/// indecomposable factor as a length-prefixed (u32 BE) block `'I'`, order (u32 BE),
/// canonical table (one byte per entry). Factors are sorted bytewise, so equal
/// classes have identical bytes and the derived ordering sorts by group order first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupClassId(Arc<[u8]>);

impl std::fmt::Debug for GroupClassId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupClassId({})", crate::names::display_name(self))
    }
}

impl std::fmt::Display for GroupClassId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub(crate) fn factor_block(table: &[u8]) -> Vec<u8> {
    let n = (table.len() as f64).sqrt().round() as usize;
    debug_assert_eq!(n * n, table.len());
    let mut out = Vec::with_capacity(5 + table.len());
    out.push(FACTOR_TAG);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    out.extend_from_slice(table);
    out
}

impl GroupClassId {
    pub(crate) fn from_factor_blocks(mut blocks: Vec<Vec<u8>>) -> GroupClassId {
        blocks.sort();
        let order: u64 = blocks.iter().map(|b| u32::from_be_bytes(b[1..5].try_into().unwrap()) as u64).product();
        let mut out = vec![CLASS_TAG];
        out.extend_from_slice(&order.to_be_bytes());
        out.extend_from_slice(&(blocks.len() as u16).to_be_bytes());
        for b in &blocks {
            out.extend_from_slice(&(b.len() as u32).to_be_bytes());
            out.extend_from_slice(b);
        }
        GroupClassId(out.into())
    }

    pub fn trivial() -> GroupClassId {
        GroupClassId::from_factor_blocks(Vec::new())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn order(&self) -> u64 {
        u64::from_be_bytes(self.0[1..9].try_into().unwrap())
    }

    pub fn is_trivial(&self) -> bool {
        self.factor_count() == 0
    }

    pub fn factor_count(&self) -> usize {
        u16::from_be_bytes(self.0[9..11].try_into().unwrap()) as usize
    }

    pub fn is_indecomposable(&self) -> bool {
        self.factor_count() == 1
    }

    pub(crate) fn factor_blocks(&self) -> Vec<&[u8]> {
        let mut out = Vec::with_capacity(self.factor_count());
        let mut pos = 11;
        for _ in 0..self.factor_count() {
            let len = u32::from_be_bytes(self.0[pos..pos + 4].try_into().unwrap()) as usize;
            out.push(&self.0[pos + 4..pos + 4 + len]);
            pos += 4 + len;
        }
        out
    }

    /// The indecomposable factors, each as a class of its own (a multiset, sorted).
    pub fn factors(&self) -> Vec<GroupClassId> {
        self.factor_blocks()
            .into_iter()
            .map(|b| GroupClassId::from_factor_blocks(vec![b.to_vec()]))
            .collect()
    }

    /// Class of the direct product: union of the factor multisets.
    pub fn product(&self, other: &GroupClassId) -> GroupClassId {
        let blocks = self
            .factor_blocks()
            .into_iter()
            .chain(other.factor_blocks())
            .map(|b| b.to_vec())
            .collect();
        GroupClassId::from_factor_blocks(blocks)
    }

    /// Tables of the indecomposable factors, decoded from the certificate.
    pub fn factor_tables(&self) -> Vec<GroupTable> {
        self.factor_blocks()
            .into_iter()
            .map(|b| {
                let n = u32::from_be_bytes(b[1..5].try_into().unwrap()) as usize;
                let mul = b[5..].iter().map(|&x| x as u32).collect();
                GroupTable::from_trusted(n, mul)
            })
            .collect()
    }

    /// A representative group: the direct product of the decoded factors.
    pub fn representative(&self, caps: &Caps) -> Result<GroupTable> {
        if self.is_trivial() {
            return Ok(build::trivial());
        }
        direct_product_all(&self.factor_tables(), caps)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<GroupClassId> {
        let bad = |m: &str| Error::BadCertificate(m.to_string());
        if bytes.len() < 11 || bytes[0] != CLASS_TAG {
            return Err(bad("missing class header"));
        }
        let count = u16::from_be_bytes(bytes[9..11].try_into().unwrap()) as usize;
        let mut pos = 11;
        let mut blocks = Vec::with_capacity(count);
        for _ in 0..count {
            if pos + 4 > bytes.len() {
                return Err(bad("truncated factor length"));
            }
            let len = u32::from_be_bytes(bytes[pos..pos + 4].try_into().unwrap()) as usize;
            let block = bytes.get(pos + 4..pos + 4 + len).ok_or_else(|| bad("truncated factor"))?;
            if block.len() < 5 || block[0] != FACTOR_TAG {
                return Err(bad("missing factor header"));
            }
            let n = u32::from_be_bytes(block[1..5].try_into().unwrap()) as usize;
            if !(2..=255).contains(&n) || block.len() != 5 + n * n {
                return Err(bad("factor table has the wrong size"));
            }
            let raw = RawTable {
                order: n,
                mul: block[5..].chunks(n).map(|r| r.iter().map(|&x| x as usize).collect()).collect(),
            };
            if (0..n).any(|j| raw.mul[0][j] != j) {
                return Err(bad("factor table does not have identity 0"));
            }
            let t = GroupTable::validate(&raw)?;
            if super::canon::canonical_table(&t) != block[5..] {
                return Err(bad("factor table is not in canonical form"));
            }
            if super::factor::factor_tables(&t).len() != 1 {
                return Err(bad("factor is decomposable"));
            }
            blocks.push(block.to_vec());
            pos += 4 + len;
        }
        if pos != bytes.len() {
            return Err(bad("trailing bytes"));
        }
        let id = GroupClassId::from_factor_blocks(blocks);
        if id.as_bytes() != bytes {
            return Err(bad("header or factor order is not canonical"));
        }
        Ok(id)
    }

    pub fn from_hex(s: &str) -> Result<GroupClassId> {
        let s = s.trim();
        if s.len() % 2 != 0 || !s.is_ascii() {
            return Err(Error::BadCertificate("expected an even-length ascii hex string".into()));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::BadCertificate(e.to_string()))?;
        GroupClassId::from_bytes(&bytes)
    }
}

impl serde::Serialize for GroupClassId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> serde::Deserialize<'de> for GroupClassId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<GroupClassId, D::Error> {
        let s = String::deserialize(d)?;
        GroupClassId::from_hex(&s).map_err(serde::de::Error::custom)
    }
}
