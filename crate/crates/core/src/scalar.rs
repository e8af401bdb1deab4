//! Floating-point abstraction for the simulation core.
//!
//! Everything numeric in this crate is generic over [`Scalar`], which is
//! implemented for `f32` and `f64`. Concrete aliases for the common `f64`
//! instantiation live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Scalar type usable by the simulation and diagnostic routines: an IEEE
/// float with conversions and standard-normal sampling.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// One draw from N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn from_f64(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 conversion")
    }

    fn from_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize conversion")
    }

    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).expect("finite or representable value")
    }
}

macro_rules! impl_scalar {
    ($($t:ty)*) => {$(
        impl Scalar for $t {
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                StandardNormal.sample(rng)
            }
        }
    )*};
}

impl_scalar!(f32 f64);

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn moments<T: Scalar>(n: usize) -> (f64, f64) {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let draws: Vec<f64> = (0..n).map(|_| T::standard_normal(&mut rng).to_f64()).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        (mean, var)
    }

    #[test]
    fn standard_normal_moments_f64() {
        let (mean, var) = moments::<f64>(200_000);
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn standard_normal_moments_f32() {
        let (mean, var) = moments::<f32>(200_000);
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }
}
