//! Scalar abstraction for the linear algebra in this crate.
//!
//! Everything that computes a rank is generic over [`Scalar`]. Ranks are only
//! meaningful for exact fields; the crate root fixes the working field to
//! arbitrary-precision rationals via [`crate::Rational`].

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// A ring element usable by the elimination routines.
///
/// Sparse elimination needs a field; fraction-free elimination only needs an
/// integral domain whose `/` is exact on exact quotients (e.g. `BigInt`).
/// Zero tests are exact (`is_zero`), so floating point types satisfy the bound
/// but give ranks that are only as good as their rounding.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone + Debug {}
