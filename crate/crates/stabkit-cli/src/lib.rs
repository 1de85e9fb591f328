//! Command-line surface, text file formats, JSON reports, and the threaded
//! search driver for the `stabkit` library.

pub mod commands;
pub mod formats;
pub mod parallel;
pub mod report;

pub use commands::{run, CommandOutcome};
