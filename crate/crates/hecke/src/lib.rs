//! Affine Hecke algebras of type A over prime fields: normal forms in the
//! basis `X^λ T_w`, finite-dimensional modules given by matrices, induction
//! from parabolic subalgebras, and a MeatAxe irreducibility test.

pub mod algebra;
pub mod bridge;
pub mod central;
pub mod eigen;
pub mod error;
pub mod field;
pub mod induce;
pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod perm;
pub mod poly;
pub mod relations;

pub use algebra::{HeckeAlgebra, HeckeElement};
pub use error::{HeckeError, Result};
pub use field::PrimeField;
pub use matrix::Matrix;
pub use module::{char_l, char_z, Character, HeckeModule};
