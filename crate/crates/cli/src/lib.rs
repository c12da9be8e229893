//! Command implementations and the report document behind the `arfcover`
//! binary.

pub mod commands;
pub mod report;

pub use report::{Item, Outcome, Parameters, ReportDocument, Verdict};
