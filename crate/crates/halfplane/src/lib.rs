//! File formats and the command-line driver for `halfplane-core`.

pub mod commands;
pub mod formats;
pub mod report;
