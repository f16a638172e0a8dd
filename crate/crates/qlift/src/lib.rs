//! Command-line front end for `qlift-core`: JSON formats, canonical
//! fixtures and the verification suites behind the `qlift` binary.

pub mod cli;
pub mod dto;
pub mod error;
pub mod fixtures;
pub mod report;
pub mod suites;

pub use error::CliError;
pub use report::{CheckEntry, Report};
