use serde::{Deserialize, Serialize};

/// Resource limits for the exponential parts of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Largest group order that can be canonicalized into a certificate.
    pub certificate_order: usize,
    /// Largest order of a direct product (tables and ring products).
    pub product_order: usize,
    /// Longest commuting tuple, i.e. the largest `k + 1`.
    pub tuple_len: usize,
    /// Bound on `|G|^(k+1)` for commuting-tuple enumeration.
    pub enumeration: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            certificate_order: 255,
            product_order: 4096,
            tuple_len: 8,
            enumeration: 1 << 40,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> crate::Result<()> {
        if self.certificate_order == 0 || self.product_order == 0 || self.tuple_len == 0 || self.enumeration == 0 {
            return Err(crate::Error::InvalidConfig("caps must be positive".into()));
        }
        if self.certificate_order > 255 {
            return Err(crate::Error::InvalidConfig(format!(
                "certificate_order {} is above the supported maximum 255",
                self.certificate_order
            )));
        }
        Ok(())
    }
}
