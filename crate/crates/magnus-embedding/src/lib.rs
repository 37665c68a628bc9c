//! Group rings over free nilpotent groups, the Magnus-embedding matrix
//! realisation, projections onto cyclotomic targets, and the exterior-square
//! separations.

pub mod error;
pub mod group_ring;
pub mod matrix;
pub mod prop43;
pub mod prop45;
pub mod theta;
pub mod wedge;

pub use error::EmbedError;
pub use group_ring::{FreeModVec, GroupRing, GroupRingElem};
pub use matrix::{embed_word, generator_matrix, MagnusMat};
pub use prop43::{verify_prop_4_3, Prop43Certificate};
pub use prop45::{verify_prop_4_5, Prop45Certificate};
pub use theta::{theta_const, theta_y, OLaurent};
pub use wedge::{wedge, WedgeBasis, WedgeVec};
