//! Exact Jordan decompositions for classical groups over small finite fields.

pub mod charp2bridge;
pub mod counterexample;
pub mod error;
pub mod exactalg;
pub mod groupalg;
pub mod jordan;
pub mod orbits;
pub mod rootdata;

pub use error::{Error, Result};
pub use exactalg::{Field, FiniteField, GaloisRing4, Gf, Matrix, Poly, Ring, Subspace};

pub type F2 = Gf<2, 1>;
pub type F3 = Gf<3, 1>;
pub type F4 = Gf<2, 2>;
pub type F5 = Gf<5, 1>;
pub type F7 = Gf<7, 1>;
pub type F9 = Gf<3, 2>;
pub type F16 = Gf<2, 4>;
pub type F25 = Gf<5, 2>;
pub type Z4 = GaloisRing4<1>;
