//! Coefficient traits shared by the polynomial, geometry and numeric layers.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numbers::Rational;

/// A commutative ring with identity whose values are cheap enough to clone.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring where every nonzero element has an inverse.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

/// Fields in which square roots can be decided exactly.
pub trait ExactSqrt: Field {
    /// A square root when one exists in the field.
    fn sqrt(&self) -> Option<Self>;
}

/// Values with an image in the complex numbers.
pub trait Embed {
    fn to_complex(&self) -> Complex64;

    /// Rough magnitude, used to scale numeric tolerances.
    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl ExactSqrt for Rational {
    fn sqrt(&self) -> Option<Self> {
        crate::numbers::rational_sqrt(self)
    }
}

impl Embed for Rational {
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
}

impl Embed for Complex64 {
    fn to_complex(&self) -> Complex64 {
        *self
    }
}
