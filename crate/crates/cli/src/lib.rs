//! Command-line front end for the `ncpoisson` engine: an expression
//! language, coalgebras in JSON, homology tables and seeded verification
//! suites.

pub mod error;
pub mod json;
pub mod parse;
pub mod registry;
pub mod run;
pub mod suites;

pub use error::CliError;
pub use run::{run, Outcome};
