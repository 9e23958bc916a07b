//! Scalar abstraction: the whole kernel is generic over `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the geometry kernel works over.
pub trait Real: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + 'static {
    /// Conversion from an `f64` constant (lossy for `f32`).
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant converts to any Real")
    }

    /// Widen to `f64` for reports and diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real scalar fits in f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
