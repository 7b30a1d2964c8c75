//! Scalar abstraction: the numerical core is generic over the real type
//! carried by the complex arithmetic.

use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Real floating-point scalar the library is generic over.
///
/// Implemented for `f32` and `f64`. Tolerances throughout the crate are
/// pinned in `f64` units and widened by [`Real::tolerance_scale`] for
/// narrower types, so `f64` instantiations see exactly the pinned values.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Machine-epsilon ratio relative to `f64`.
    fn tolerance_scale() -> f64 {
        Self::epsilon().to_f64().unwrap_or(f64::EPSILON) / f64::EPSILON
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an exactly representable `f64` constant to the working scalar.
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
