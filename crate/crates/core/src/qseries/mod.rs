//! Truncated Laurent/Puiseux series in q over cyclotomic coefficients.

mod eta;
mod monomial;
mod series;
mod window;

pub(crate) use window::convex_window;

pub use eta::{eta_j, eta_quotient, geometric};
pub use monomial::{parse_rational, Monomial};
pub use series::{Mismatch, QSeries};
