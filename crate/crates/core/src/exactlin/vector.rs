use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coordinate vector over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![T::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Evaluates the functional `self` on an integer coordinate vector.
    pub fn eval(&self, v: &[i64]) -> T {
        debug_assert_eq!(self.dim(), v.len());
        self.0
            .iter()
            .zip(v)
            .filter(|(_, &c)| c != 0)
            .fold(T::zero(), |acc, (a, &c)| acc + a.clone() * T::from_int(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }

    /// The positive rational multiple of `self` with coprime integer
    /// coordinates. The zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let fracs: Vec<_> = self.0.iter().map(Scalar::to_fraction).collect();
        let lcm = fracs.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        let ints: Vec<BigInt> = fracs.iter().map(|(n, d)| n * (&lcm / d)).collect();
        let gcd = ints
            .iter()
            .filter(|n| !n.is_zero())
            .fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let scale = T::from_big(&gcd) / T::from_big(&lcm);
        let out: Vec<T> = self.0.iter().map(|a| a.clone() / scale.clone()).collect();
        debug_assert!(out.iter().all(|x| x.to_fraction().1.is_one()));
        Vector(out)
    }

    /// Coordinates as integers if every denominator is one.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0
            .iter()
            .map(|a| {
                let (n, d) = a.to_fraction();
                d.is_one().then_some(n)
            })
            .collect()
    }
}

impl<T: Scalar> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sign of an exact scalar as -1, 0 or 1.
pub fn sign<T: Scalar>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn primitive_clears_denominators_and_gcd() {
        let v = Vector::new(vec![
            BigRational::new(3.into(), 4.into()),
            BigRational::new((-9).into(), 2.into()),
        ]);
        assert_eq!(v.primitive(), Vector::<BigRational>::from_ints(&[1, -6]));
    }

    #[test]
    fn eval_matches_dot() {
        let f = Vector::<Rational64>::from_ints(&[2, -1, 3]);
        let v = [1, 1, 1];
        assert_eq!(f.eval(&v), f.dot(&Vector::from_ints(&v)));
    }
}
