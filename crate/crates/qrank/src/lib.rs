//! Verification driver, report and series file formats, and rank table export on top of
//! `qrank-core`.

pub mod error;
pub mod format;
pub mod report;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use suite::{default_order_from_env, run_suite, SuiteOptions, SuiteOutcome, ORDER_ENV};
