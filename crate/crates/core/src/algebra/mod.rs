//! Finite fields, small matrices over them, and permutations: the raw
//! material for the matrix and permutation group constructors.

mod field;
mod matrix;
mod perm;

pub use field::{is_prime, prime_power, Elem, FiniteField, FIELD_CAP};
pub use matrix::{gl2_enumerate, sl2_enumerate, Mat2, Mat3, SquareMat};
pub use perm::Permutation;
