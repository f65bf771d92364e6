//! Command surface for patch-derived rules: corpus manifests, the rule
//! repository, batch generation, scanning and evaluation.

pub mod commands;
pub mod eval;
pub mod manifest;
pub mod pipeline;
pub mod repo;
pub mod report;

pub use commands::{run, Cli, EXIT_ERROR, EXIT_FINDINGS, EXIT_OK};
