//! Exact arithmetic in free class-c nilpotent groups: Hall bases and
//! collection, quotients by relator sets, and the free associative ring with
//! its Lie machinery.

pub mod assoc;
pub mod error;
pub mod group;
pub mod hall;
pub mod linalg;
pub mod pcp;
pub mod prop36;
pub mod words;

pub use assoc::{dynkin_is_lie, NcPoly};
pub use error::NilError;
pub use group::{FreeNilGroup, NilWord, NilWordJson};
pub use hall::{witt_number, BasicCommutator, CommutatorTree, HallBasis};
pub use pcp::{build_g9, quotient_by_relators, G9Certificate, PcpGroup};
pub use prop36::{verify_prop_3_6, Prop36Certificate};
