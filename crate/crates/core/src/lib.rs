//! Exact arithmetic for the field-isomorphism problem of the cubics
//! `f_m(X) = X^3 + mX + m` over the rationals.
//!
//! The library decides when two parameters m, n give the same splitting
//! field, enumerates all integer partners of a given m through the cubic
//! Thue equations `F_m(x,y) = lambda` with `lambda^2 | m^3 (4m+27)^5`, and
//! carries the certificate identities that force the divisor condition.
//! All computation is exact; no floating point enters any decision.

pub mod cubic;
pub mod error;
pub mod exact;
pub mod identities;
pub mod pairing;
pub mod poly;
pub mod resolvent;
pub mod roots;
pub mod scalar;
pub mod thue;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar (always in lowest terms, positive denominator).
pub type Rat = num_rational::BigRational;
/// Dense polynomial with integer coefficients.
pub type IntPoly = poly::Poly<Int>;
/// Dense polynomial with rational coefficients.
pub type RatPoly = poly::Poly<Rat>;

pub(crate) fn int(v: i64) -> Int {
    Int::from(v)
}

pub(crate) fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}
