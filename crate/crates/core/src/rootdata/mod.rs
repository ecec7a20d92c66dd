//! Root data of types A–D, G₂, F₄: roots, coroots, Weyl groups, and their
//! reductions modulo p.

mod criteria;
mod datum;
mod weyl;

use serde::{Deserialize, Serialize};

pub use criteria::{
    counterexample_pairs, f4_coroot_identity_check, in_span_mod_p, mod_p_images, rank2_subsystem, rank_mod_p, vanishing_sets,
    Rank2Subsystem, Rank2Type, RootImage, VanishingSets,
};
pub use datum::{expected_root_count, Family, Isogeny, RootDatum};
pub use weyl::{expected_weyl_order, RootSet, WeylElement, WeylGroup};

/// Which side a vector mod p lives on: 𝔱 = X_*(T) ⊗ F_p or 𝔱* = X*(T) ⊗ F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    T,
    TDual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModPVector {
    pub p: u32,
    pub side: Side,
    pub coords: Vec<u32>,
}

impl ModPVector {
    pub fn reduce(v: &[i64], p: u32, side: Side) -> Self {
        ModPVector { p, side, coords: v.iter().map(|x| x.rem_euclid(p as i64) as u32).collect() }
    }
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }
}

/// The data exercised by the test suites and the CLI `suite` command.
pub fn shipped_datums() -> Vec<RootDatum> {
    use Family::*;
    use Isogeny::*;
    [
        (A, 1, SimplyConnected),
        (A, 1, Adjoint),
        (A, 2, SimplyConnected),
        (A, 2, Adjoint),
        (A, 3, SimplyConnected),
        (B, 2, Matrix),
        (B, 2, SimplyConnected),
        (B, 3, Matrix),
        (B, 3, SimplyConnected),
        (C, 2, Matrix),
        (C, 2, Adjoint),
        (C, 3, Matrix),
        (C, 3, Adjoint),
        (D, 3, Matrix),
        (D, 4, Matrix),
        (D, 4, Adjoint),
        (G, 2, Matrix),
        (F, 4, Matrix),
    ]
    .into_iter()
    .map(|(f, n, i)| RootDatum::build(f, n, i).expect("shipped datum"))
    .collect()
}
