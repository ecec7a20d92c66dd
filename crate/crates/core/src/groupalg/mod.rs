//! Matrix models of Sp₂ₙ, SO_m, SLₙ and PGLₙ over F_q with their Lie
//! algebras and duals.
//!
//! Lie elements are matrices and are also handled in coordinates on a fixed
//! weight-graded basis. Functionals on 𝔤 are stored by their values on that
//! basis; trace-pairing representatives are converted in and out.

mod borel;
mod dual;
mod enumerate;
mod group;

pub use borel::{BorelData, BorelSummary};
pub use dual::{DualElement, Weight};
pub use enumerate::{pack, unpack, PointSet, DEFAULT_MAX_POINTS};
pub use group::{GroupKind, MatrixGroup};

use serde::{Deserialize, Serialize};

/// Which space a coordinate vector lives in: 𝔤 (Lie coordinates) or 𝔤*
/// (values on the Lie basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Lie,
    Dual,
}

impl Space {
    pub fn parse(s: &str) -> crate::Result<Self> {
        match s {
            "g" | "lie" => Ok(Space::Lie),
            "gdual" | "dual" | "g*" => Ok(Space::Dual),
            _ => Err(crate::Error::InvalidInput(format!("unknown side {s:?}; expected g or gdual"))),
        }
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Space::Lie => "g",
            Space::Dual => "gdual",
        })
    }
}

impl<F: crate::FiniteField> MatrixGroup<F> {
    /// The matrix by which g acts on coordinates of `space`.
    pub fn action_matrix(&self, space: Space, g: &crate::Matrix<F>) -> crate::Matrix<F> {
        match space {
            Space::Lie => self.ad_matrix(g),
            Space::Dual => self.coadjoint_matrix(g),
        }
    }
}
