//! Loose and tight completions of finite posets and finite categories.
//!
//! Categories are given by explicit composition tables, actions by
//! transition tables. Everything is finite and every construction has an
//! executable checker.

pub mod action;
pub mod cuts;
pub mod error;
pub mod fincat;
pub mod groups;
pub mod isbell;
pub mod poset;
pub mod report;
pub mod samples;
pub mod search;
pub mod tight;

pub use error::{Error, Result};
pub use report::{Report, Violation};
pub use search::{Execution, Limits, DEFAULT_NODE_CAP};
