//! Command-line harness around `qspec-core`: reads graph6 files, inline
//! records or generated families, evaluates spectra, bounds and conjectures
//! on a worker pool and writes deterministic JSON, CSV or table reports.

pub mod args;
pub mod input;
pub mod output;
pub mod record;
pub mod run;

pub use args::Cli;
pub use run::run;
