//! Input parsing, command implementations and report rendering for the
//! `prehom` binary.

pub mod commands;
mod error;
pub mod input;
pub mod report;

pub use error::CliError;
pub use input::{parse_str, InputError, Object, Registry};
pub use report::{Report, Verdict};
