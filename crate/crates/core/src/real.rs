//! Scalar abstraction used by every numeric kernel in this crate.
//!
//! All geometry and special-function code is generic over [`Real`], which is
//! any IEEE-style float exposing the `num-traits` surface we need.  `f64` is
//! the working precision for the shipped tolerances; `f32` instantiates too
//! and is exercised by a couple of smoke tests.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::float::{Float, FloatConst};
use num_traits::FromPrimitive;

pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lift an `f64` constant into this scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant must convert")
    }

    /// Lossy view as `f64`, used only at reporting boundaries.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar must convert to f64")
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_constants_in_both_precisions() {
        let a: f64 = Real::of(0.5);
        let b: f32 = Real::of(0.5);
        assert_eq!(a, 0.5);
        assert_eq!(b, 0.5f32);
        assert_eq!(a.as_f64(), 0.5);
    }
}
