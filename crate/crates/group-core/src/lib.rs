//! Finite groups as explicit multiplication tables, with brute-force
//! subgroup machinery and the Magnus-property deciders.

pub mod error;
pub mod group;
pub mod json;
pub mod mp;
pub mod series;

pub use error::GroupError;
pub use group::{
    build_cyclic, build_dihedral, build_direct_product, build_metacyclic, build_quotient,
    build_three_group, Elt, FiniteGroup, Subgroup,
};
pub use mp::{
    check_3group_criterion, cocentraliser_closed, element_closures, is_mp, is_weak_mp_linear,
    verify_basic_witness_pair, verify_counterexample, MpReport, PairData, WitnessPairCheck,
};
pub use series::{
    center, commutator_with_group, derived_series, derived_subgroup, lower_central_series,
    nilpotency_class, upper_central_series,
};
