//! Orchestration of the family verifications, the bounded examples, and the
//! full certificate suite with its JSON bundle.

pub mod corpus;
pub mod error;
pub mod example38;
pub mod family;
pub mod padic;
pub mod suite;

pub use corpus::{all_normal_subgroups, corpus, corpus_products};
pub use error::SuiteError;
pub use example38::{verify_example_3_8, Example38Certificate};
pub use family::{verify_gp_family, FamilyRecord, FamilyReport};
pub use padic::{padic_closure_check, PadicClosureCertificate};
pub use suite::{
    cocentraliser_identities_hold, expected_entry_names, run_full_suite, SuiteBundle,
    SuiteEntry, DEFAULT_SEED,
};
