//! Library side of the `pontryagin` command-line tool.

pub mod commands;
pub mod error;
pub mod expr;
pub mod output;
pub mod spec;
pub mod suites;
