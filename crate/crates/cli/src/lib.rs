//! Command-line front end for the balanced-complex library: JSON I/O,
//! subcommand dispatch, and the embedded fixture set.

pub mod app;
pub mod fixtures;

pub use app::{run, Cli};
