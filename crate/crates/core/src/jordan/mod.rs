//! Jordan decompositions in 𝔤 and 𝔤*, semisimplicity and nilpotence
//! tests, the group H = C_G(Z)°, and the p-th power map on 𝔱*.
//!
//! Searches run over F_q-points: a certificate for x ∈ 𝔤* is a point g and
//! a Weyl element w such that, with y = Ad*(g⁻¹)x, the root support of y
//! avoids wΦ⁺ and every root γ with y(h_γ) ≠ 0. The semisimple part is then
//! forced to be Ad*(g) of the torus part of y.

mod certificate;
mod hgroup;
mod matrix;
mod pth;
mod retry;

pub use certificate::{all_dual_elements, audit_certificate, cm_nilpotent, Audit, DualSweep, JordanCertificate, SsPart};
pub use hgroup::{cm_kw_hypothesis, lattice_contains, HGroup, HypothesisReport};
pub use matrix::{is_nilpotent_matrix, is_semisimple_matrix, jordan_g, jordan_matrix, LieJordan};
pub use pth::{coroot_vanishing, coroot_vector, coroots_fixed_by_pth_power, pth_power_t, pth_power_tstar};
pub use retry::{embed_dual, embed_matrix, field_embedding, sweep_with_retry, BruhatSearch, SweepOutcome};
