//! Library surface of the command-line front end: the presentation parser,
//! the realization routes, and the builtin group table.

pub mod builtins;
pub mod presentation;
pub mod realize;

pub use builtins::{build_builtin, builtin_patterns};
pub use presentation::{parse_presentation, ParseError, PresentationAst};
pub use realize::{realize, RealizeError, Realized};
