//! Scalar abstraction for the whole crate.
//!
//! Everything downstream is generic over [`Real`], a bundle of the numeric
//! traits the mean calculus actually needs. It is blanket-implemented, so
//! `f64` and `f32` work out of the box and a user-defined float could too.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type the library computes with.
///
/// `f64` is the intended workhorse; `f32` is supported for memory-bound
/// callers. Random draws are always performed in `f64` and converted, so
/// seeded runs visit the same underlying stream at either precision.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant into `T`. Panics only if `T` cannot represent
/// ordinary finite values, which no `Real` in practice fails to do.
pub(crate) fn t_from<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 must convert into a Real scalar")
}

/// Converts a count into `T` exactly (counts stay far below 2^53).
pub(crate) fn t_from_usize<T: Real>(v: usize) -> T {
    T::from_usize(v).expect("vector length must convert into a Real scalar")
}

/// Widens `T` back to `f64` for reporting and rank arithmetic.
pub(crate) fn t_to<T: Real>(v: T) -> f64 {
    v.to_f64().expect("Real scalar must widen to f64")
}
