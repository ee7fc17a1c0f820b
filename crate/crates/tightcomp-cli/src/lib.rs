//! Command-line front end: JSON input, subcommands and the acceptance suite.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod error;
pub mod input;
pub mod output;

pub use cli::{Cli, Format};
pub use commands::{run, Command, Outcome};
pub use error::CliError;
