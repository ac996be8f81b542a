//! Exact rationals and cyclotomic field elements.

mod cyclotomic;
mod field;
pub mod ntheory;
mod poly;

pub use cyclotomic::{fmt_rational, Accumulator, Cyclotomic};
pub use field::{field, CyclotomicField};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::cyclo_polynomial;

/// Small exact rational used for exponents.
pub type Rat = num_rational::Ratio<i64>;
