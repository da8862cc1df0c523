//! Finite groups as explicit Cayley tables, the named families they come
//! from, and the center/centralizer/quotient utilities built on top.

mod family;
mod structure;
mod table;

pub use family::{frobenius_multiplier, GroupFamilySpec, DEFAULT_ORDER_CAP};
pub use structure::{QuotientTag, Subset};
pub use table::{FiniteGroup, EXHAUSTIVE_ASSOCIATIVITY};
