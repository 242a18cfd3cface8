use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rustfft::FftNum;

/// Scalar type the library is generic over: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + NumAssign + FftNum {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + NumAssign + FftNum {}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant representable in scalar type")
}

/// Converts a length or index into the working scalar type.
#[inline]
pub(crate) fn cast_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("usize representable in scalar type")
}
