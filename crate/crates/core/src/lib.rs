//! Exact tools for extremal problems on families of subsets of `[n]`:
//! u-union and t-intersecting families, shifting and down-shifting,
//! the Katona-type constructions, lattice-walk counting, closed-form
//! bounds in exact arithmetic, and certificate-producing exhaustive search.

pub mod battery;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod family;
pub mod io;
pub mod search;
pub mod transforms;
pub mod walks;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision integer used for every count and bound.
pub type ExactInt = BigInt;
/// Arbitrary-precision rational used for inequality checks.
pub type ExactRational = BigRational;

pub use bounds::{binom, BoundReport};
pub use constructions::Construction;
pub use error::{Error, Result};
pub use family::{is_cross_t_intersecting, SetFamily, SubsetMask, ALGEBRA_CAP, SEARCH_CAP};
pub use search::{maximize, recheck, Objective, SearchCertificate, SearchOptions};
pub use transforms::ShiftLog;
pub use walks::WalkTrace;
