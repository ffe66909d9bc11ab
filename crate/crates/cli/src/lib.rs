//! File formats, a catalog of example manifolds and the `ellgenus` command
//! line, on top of `ellgenus-core`.

pub mod catalog;
pub mod charstr;
pub mod cli;
pub mod file;

pub use cli::{run_command, CommandOutput};
