//! File formats, JSON schemas and command dispatch for the `ctl` binary.

pub mod cli;
pub mod formats;
pub mod json;
