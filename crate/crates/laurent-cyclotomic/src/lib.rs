//! Exact arithmetic in Z[T^±1], Z[T]/(T^p - 1) and Z[zeta_p], the wreath
//! product C_inf wr C_inf, and witness-pair certificates built from
//! cyclotomic one-units.

pub mod cyc;
pub mod error;
pub mod laurent;
pub mod modtp;
pub mod witness;
pub mod wreath;

pub use cyc::{cyc_inverse_unit, is_root_of_unity, CycInt};
pub use error::RingError;
pub use laurent::LaurentPoly;
pub use modtp::ModTp;
pub use witness::{
    build_f, build_fbar, ideal_membership_mod_tp, reference_p5_pair, verify_wreath_witness,
    witness_from_unit_polys, WreathWitnessCertificate,
};
pub use wreath::{cocentraliser_ideal, wreath_commutator, WreathElement};
