//! Exact q-series kernel: cyclotomic arithmetic, truncated Puiseux series, theta
//! functions, Appell-Lerch sums and generalized overpartition rank deviations.

#![no_std]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

pub mod appell;
pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod lambert;
pub mod overpartitions;
pub mod qseries;
pub mod report;
pub mod theta;

pub use error::{Error, Result};
pub use exactnum::{BigRational, Cyclotomic, Rat};
pub use expr::Expr;
pub use qseries::{Monomial, QSeries};
pub use report::{IdentityReport, Verdict};
