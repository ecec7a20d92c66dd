//! Exact arithmetic: finite fields, the ℤ/4 lifts used in characteristic 2,
//! dense matrices, polynomials and linear algebra over fields.

pub mod gf;
pub mod lift;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod textfmt;

pub use gf::Gf;
pub use lift::{GaloisRing4, TwoAdicLift};
pub use linalg::{Coordinatizer, Echelon, Subspace};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::{Field, FiniteField, Ring};
