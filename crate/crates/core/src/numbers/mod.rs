//! Exact arithmetic: rationals, the field Q(zeta) with zeta^2 + zeta + 1 = 0,
//! and the Eisenstein integers Z[zeta].

mod eisenstein;
mod field;

pub use eisenstein::{eisenstein_gcd, EisensteinInt, UNITS};
pub(crate) use eisenstein::elements_with_norm_at_most;
pub use field::{embed_complex, field_sqrt, field_sqrt_by_rounding, FieldElem};

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("gcd of (0, 0) is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not an Eisenstein integer")]
    NotIntegral(String),
    #[error("element {0} does not fit in 128-bit Eisenstein coordinates")]
    Overflow(String),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact square root of a nonnegative integer, when it is a perfect square.
pub fn bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Nonnegative square root of a rational, when it is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = bigint_sqrt(q.numer())?;
    let d = bigint_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Integer cube root, when `n` is a perfect cube.
pub fn bigint_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}
