//! Coefficient-ring abstraction for the polynomial algebra.
//!
//! Everything downstream works over an integral domain with exact division:
//! big integers, big rationals, and polynomials over either (for bivariate
//! resultants). Concrete aliases live at the crate root.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// An integral-domain scalar usable as a polynomial coefficient.
///
/// `exact_div` must be exact: it is only called where divisibility is
/// guaranteed (Bareiss elimination, content removal).
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn exact_div(&self, other: &Self) -> Self;

    fn from_u32(v: u32) -> Self;
}

impl Scalar for BigInt {
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = num_integer::Integer::div_rem(self, other);
        debug_assert!(r.is_zero(), "non-exact division {self} / {other}");
        q
    }

    fn from_u32(v: u32) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }

    fn from_u32(v: u32) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}
