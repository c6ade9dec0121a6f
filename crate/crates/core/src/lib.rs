//! Exact computation and cross-checking for lonesum matrices: detection,
//! reconstruction from margins, closed-form and generating-function counts,
//! the rook-placement bijection with bounded permutations, weak lonesum
//! search, and brute-force reference enumeration.
//!
//! Counts are arbitrary-precision integers. Power series are generic over a
//! [`series::Scalar`]; the aliases below fix exact rationals (the default for
//! all verification) or `f64`.

pub mod bijection;
pub mod count;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod series;
pub mod strong;
pub mod weak;

pub use error::{Error, Result};
pub use matrix::{MarginProfile, QMatrix, StructureProfile, Symbol};
pub use strong::{is_strong_lonesum, reconstruct_strong, Reconstruction, StrongVerdict};
pub use weak::{is_weak_lonesum, WeakVerdict};

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Exact rational scalar used by the default series aliases.
pub type Rational = num_rational::BigRational;

pub type ExactBiSeries = series::BiSeries<Rational>;
pub type ExactUniSeries = series::UniSeries<Rational>;
pub type FloatBiSeries = series::BiSeries<f64>;
pub type FloatUniSeries = series::UniSeries<f64>;
