//! Scalar types admitted by the exact linear algebra.
//!
//! Every routine in [`crate::exactlin`] is generic over [`Scalar`]. The trait
//! is implemented for rational types only: sign decisions made by the simplex
//! and separation code must be exact, so floating point is excluded at the
//! type level (`f32`/`f64` are not `Ord`).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;


/// An exact ordered field.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + Signed + Send + Sync {
    fn from_int(v: i64) -> Self;

    /// Conversion from an arbitrary-precision integer. Machine-width
    /// rationals panic when the value does not fit.
    fn from_big(v: &BigInt) -> Self;

    /// Numerator and denominator in lowest terms, denominator positive.
    fn to_fraction(&self) -> (BigInt, BigInt);
}

impl Scalar for Ratio<BigInt> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_big(v: &BigInt) -> Self {
        Ratio::from_integer(v.clone())
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

macro_rules! impl_machine_ratio {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_int(v: i64) -> Self {
                Ratio::from_integer(v as $t)
            }

            fn from_big(v: &BigInt) -> Self {
                let n = <$t>::try_from(v).expect("integer does not fit the scalar type");
                Ratio::from_integer(n)
            }

            fn to_fraction(&self) -> (BigInt, BigInt) {
                (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    )*};
}

impl_machine_ratio!(i64, i128);

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn fractions_are_reduced() {
        let x = Rational64::new(6, -4);
        assert_eq!(x.to_fraction(), (BigInt::from(-3), BigInt::from(2)));
        let y = BigRational::from_int(7);
        assert_eq!(y.to_fraction(), (BigInt::from(7), BigInt::from(1)));
    }
}
