//! Exact computations in the ring of isomorphism classes of finite groups:
//! universal Euler characteristics of orbifolds, universal indices of isolated
//! singular points, and the Poincaré–Hopf identity relating them.
//!
//! Everything is exact: integer coefficients in the ring and rational values for
//! its numerical specializations.

pub mod burnside;
mod caps;
pub mod class_poset;
mod error;
pub mod group_kernel;
pub mod grothendieck_ring;
pub mod io;
pub mod library;
pub mod names;
pub mod orbifold_model;
pub mod ph_index;

pub use caps::Caps;
pub use error::{Error, ErrorKind, Result};
pub use group_kernel::{GroupClassId, GroupTable, SubgroupHandle};
pub use grothendieck_ring::{RElement, RationalValue, Specialization};
