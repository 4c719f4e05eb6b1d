//! The ring of isomorphism classes of finite groups, finite G-sets and their
//! classes, induction, and the numerical specializations.

mod gset;
mod rational;
mod relement;
mod specialize;

pub use gset::{gset_class, induce, GSetAction};
pub use rational::RationalValue;
pub use relement::RElement;
pub use specialize::{generator_value, specialize, table_value, Specialization};
