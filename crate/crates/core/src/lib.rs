//! Exact enumeration, counting and cross-validation of simultaneous core
//! partitions.
//!
//! A partition is a `t`-core when none of its hook lengths is divisible by
//! `t`, and a `(t1, ..., tm)`-core when it is a `ti`-core for every `i`. The
//! crate works mostly through β-sets (first-column hook lengths), where the
//! core condition becomes a closure property under subtraction of each
//! modulus.
//!
//! Counting and power-series code is generic over the scalar type through
//! `num-traits`; the aliases below fix the exact arbitrary-precision types
//! used throughout the crate.

pub mod betaset;
pub mod counting;
pub mod crosscheck;
pub mod enumeration;
mod error;
pub mod finiteness;
pub mod intervalposet;
pub mod partitions;
pub mod powerseries;
pub mod semigroup;

pub use betaset::{BetaSet, CoreSpec};
pub use counting::CountTable;
pub use enumeration::{CoreFamily, FamilyStats};
pub use error::{Error, Result};
pub use finiteness::FinitenessReport;
pub use intervalposet::{CorePoset, IntervalFamily};
pub use partitions::{HookTable, Partition};
pub use powerseries::Series;

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;

/// Exact signed integer.
pub type Integer = num_bigint::BigInt;

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Power series with exact rational coefficients.
pub type ExactSeries = Series<Rational>;

/// Power series with `f64` coefficients; exact only while values stay below 2^53.
pub type FloatSeries = Series<f64>;

/// Memoized recurrence table over exact counts.
pub type ExactCountTable = CountTable<Count>;
