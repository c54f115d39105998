//! Prime-field and exact-integer linear algebra.

mod echelon;
mod field;
mod int;

pub use echelon::EchelonState;
pub use field::{is_prime, random_invertible, FieldMatrix, PrimeModulus};
pub use int::IntMatrix;
