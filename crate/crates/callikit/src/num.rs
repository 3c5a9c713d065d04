//! Scalar abstraction: all numeric code in this crate is generic over a
//! floating-point type implementing [`Real`].

use rand::Rng;
use rand_distr::{Distribution, StandardNormal, StandardUniform};

/// Floating-point scalar used throughout the crate (f32 or f64).
///
/// Bundles the `num_traits` machinery the numeric code needs plus seeded
/// sampling helpers, so call sites only ever name one bound.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::NumAssign
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64` (panics only if the type cannot represent
    /// any finite value, which cannot happen for f32/f64).
    fn of(v: f64) -> Self {
        num_traits::FromPrimitive::from_f64(v).expect("finite f64 converts to Real")
    }

    /// Conversion from a count.
    fn of_usize(v: usize) -> Self {
        num_traits::FromPrimitive::from_usize(v).expect("usize converts to Real")
    }

    /// Widening conversion to `f64`.
    fn as_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("Real converts to f64")
    }

    /// One sample from N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One sample from U[0, 1).
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Real for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardUniform.sample(rng)
    }
}

impl Real for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardUniform.sample(rng)
    }
}
