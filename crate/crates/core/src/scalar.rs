//! Coefficient rings used by [`Poly`](crate::Poly) and [`Matrix`](crate::Matrix).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumRef, Signed, Zero};

/// A commutative ring with a partial exact division.
///
/// Integers divide only when the quotient is integral, fields always divide
/// by nonzero elements, and floats divide unconditionally.
pub trait Scalar: Num + NumRef + Clone + Debug + FromPrimitive + Send + Sync {
    /// `self / rhs` if the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Negation without requiring `Neg` on references.
    fn negate(&self) -> Self {
        Self::zero() - self.clone()
    }
}

impl Scalar for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Scalar for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Scalar for i64 {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Scalar for f64 {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Some(self / rhs)
    }
}

/// Scalars that carry a sign, needed for root counting.
pub trait OrderedScalar: Scalar + Signed + PartialOrd {}

impl<T: Scalar + Signed + PartialOrd> OrderedScalar for T {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division_is_partial() {
        let six = BigInt::from(6);
        assert_eq!(six.exact_div(&BigInt::from(3)), Some(BigInt::from(2)));
        assert_eq!(six.exact_div(&BigInt::from(4)), None);
        assert_eq!(six.exact_div(&BigInt::zero()), None);
        assert_eq!(7i64.exact_div(&2), None);
    }

    #[test]
    fn rationals_always_divide() {
        let a = BigRational::from_integer(BigInt::from(6));
        let b = BigRational::from_integer(BigInt::from(4));
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(
            q.negate(),
            BigRational::new(BigInt::from(-3), BigInt::from(2))
        );
    }
}
