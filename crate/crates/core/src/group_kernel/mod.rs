//! Finite groups as explicit multiplication tables: subgroups, isomorphism,
//! direct products, Krull–Schmidt factorization and commuting tuples.

pub mod build;
mod canon;
mod class_id;
mod factor;
mod iso;
mod product;
mod subgroup;
mod table;
mod tuples;

pub use class_id::GroupClassId;
pub use factor::{class_id, indecomposable_factors};
pub use iso::{are_isomorphic, is_isomorphism};
pub use product::{direct_product, direct_product_all};
pub use subgroup::{generated_subgroup, normal_subgroups, subgroups, SubgroupHandle};
pub use table::{GroupTable, RawTable};
pub use tuples::{commuting_tuples, count_commuting_tuples, CommutingTuples};

#[doc(hidden)]
pub mod internals {
    //! Alternate routes exposed for cross-checking in tests.
    pub use super::factor::factor_tables_by_normal_pairs;
}
