//! File formats, rendering, the shared memo cache and the parallel suite
//! runner behind the `qballot` command. The mathematics lives in
//! `qballot_core`.

pub mod cache;
mod error;
pub mod json;
pub mod notation;
pub mod runner;
pub mod shared;
pub mod svg;
pub mod tables;

pub use error::{FormatError, Result};
pub use shared::SharedBallotTable;
