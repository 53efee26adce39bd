use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_traits::ToPrimitive;

use super::{FieldElem, NumberError, Rational};

/// `a + b*zeta` with integer coordinates.
///
/// Coordinates are 128-bit; arithmetic panics on overflow rather than wrapping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct EisensteinInt {
    pub a: i128,
    pub b: i128,
}

/// The six units `±1, ±zeta, ±zeta^2`.
pub const UNITS: [EisensteinInt; 6] = [
    EisensteinInt { a: 1, b: 0 },
    EisensteinInt { a: 1, b: 1 },
    EisensteinInt { a: 0, b: 1 },
    EisensteinInt { a: -1, b: 0 },
    EisensteinInt { a: -1, b: -1 },
    EisensteinInt { a: 0, b: -1 },
];

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { a: 0, b: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };

    pub const fn new(a: i128, b: i128) -> Self {
        EisensteinInt { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn norm(&self) -> i128 {
        let (a, b) = (self.a, self.b);
        a.checked_mul(a)
            .and_then(|aa| aa.checked_sub(a.checked_mul(b)?))
            .and_then(|s| s.checked_add(b.checked_mul(b)?))
            .expect("Eisenstein norm overflow")
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn conjugate(&self) -> Self {
        EisensteinInt::new(self.a - self.b, -self.b)
    }

    /// Complex absolute value `sqrt(N(x))`.
    pub fn abs(&self) -> f64 {
        (self.norm() as f64).sqrt()
    }

    /// Nearest-lattice-point quotient; the remainder has norm at most `3/4 N(y)`.
    pub fn div_rem(&self, y: &EisensteinInt) -> (EisensteinInt, EisensteinInt) {
        let n = y.norm();
        assert!(n != 0, "Eisenstein division by zero");
        let num = *self * y.conjugate();
        let q = EisensteinInt::new(round_div(num.a, n), round_div(num.b, n));
        let r = *self - q * *y;
        (q, r)
    }

    /// Exact quotient when `y` divides `self`.
    pub fn checked_div(&self, y: &EisensteinInt) -> Option<EisensteinInt> {
        if y.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(y);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, x: &EisensteinInt) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.checked_div(self).is_some()
    }

    /// Among the six associates, the one with `a > 0, b >= 0` and smallest `b`.
    pub fn canonical_associate(&self) -> EisensteinInt {
        self.canonical_unit().map_or(*self, |u| u * *self)
    }

    /// The unit `u` with `u * self` canonical, `None` for zero.
    pub fn canonical_unit(&self) -> Option<EisensteinInt> {
        if self.is_zero() {
            return None;
        }
        UNITS
            .iter()
            .map(|u| (*u, *u * *self))
            .filter(|(_, v)| v.a > 0 && v.b >= 0)
            .min_by_key(|(_, v)| v.b)
            .map(|(u, _)| u)
    }

    pub fn to_field(&self) -> FieldElem {
        FieldElem::new(Rational::from_integer(self.a.into()), Rational::from_integer(self.b.into()))
    }

    /// Integral field element as an Eisenstein integer.
    pub fn try_from_field(x: &FieldElem) -> Result<EisensteinInt, NumberError> {
        if !x.a.is_integer() || !x.b.is_integer() {
            return Err(NumberError::NotIntegral(x.to_string()));
        }
        let a = x.a.numer().to_i128();
        let b = x.b.numer().to_i128();
        match (a, b) {
            (Some(a), Some(b)) => Ok(EisensteinInt::new(a, b)),
            _ => Err(NumberError::Overflow(x.to_string())),
        }
    }

    pub fn pow(&self, e: u32) -> EisensteinInt {
        (0..e).fold(EisensteinInt::ONE, |acc, _| acc * *self)
    }

    /// Square root in Z[zeta] when `self` is a square.
    ///
    /// Same norm argument as `field_sqrt`, carried out on doubled integer
    /// coordinates so nothing leaves i128.
    pub fn sqrt(&self) -> Option<EisensteinInt> {
        if self.is_zero() {
            return Some(EisensteinInt::ZERO);
        }
        let n = exact_isqrt(self.norm())?;
        let p2 = 2 * self.a - self.b;
        let big_r = exact_isqrt(p2 + 2 * n)?;
        let big_s = if big_r == 0 {
            let t = 2 * n - p2;
            if t % 3 != 0 {
                return None;
            }
            exact_isqrt(t / 3)?
        } else {
            if self.b % big_r != 0 {
                return None;
            }
            self.b / big_r
        };
        if (big_r + big_s) % 2 != 0 {
            return None;
        }
        let t = EisensteinInt::new((big_r + big_s) / 2, big_s);
        (t * t == *self).then_some(t)
    }
}

fn exact_isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// `round(p / q)` for `q > 0`, halves rounded up.
fn round_div(p: i128, q: i128) -> i128 {
    (2 * p + q).div_euclid(2 * q)
}

/// Greatest common divisor in Z[zeta], normalized to the canonical associate.
pub fn eisenstein_gcd(x: &EisensteinInt, y: &EisensteinInt) -> Result<EisensteinInt, NumberError> {
    if x.is_zero() && y.is_zero() {
        return Err(NumberError::GcdOfZeros);
    }
    let (mut u, mut v) = (*x, *y);
    while !v.is_zero() {
        let (_, r) = u.div_rem(&v);
        u = v;
        v = r;
    }
    Ok(u.canonical_associate())
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(
            self.a.checked_add(o.a).expect("Eisenstein overflow"),
            self.b.checked_add(o.b).expect("Eisenstein overflow"),
        )
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(
            self.a.checked_sub(o.a).expect("Eisenstein overflow"),
            self.b.checked_sub(o.b).expect("Eisenstein overflow"),
        )
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: EisensteinInt) -> EisensteinInt {
        let m = |x: i128, y: i128| x.checked_mul(y).expect("Eisenstein overflow");
        let bd = m(self.b, o.b);
        EisensteinInt::new(
            m(self.a, o.a) - bd,
            m(self.a, o.b) + m(self.b, o.a) - bd,
        )
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl From<i128> for EisensteinInt {
    fn from(a: i128) -> Self {
        EisensteinInt::new(a, 0)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_field().fmt(f)
    }
}

/// All Eisenstein integers of norm at most `bound`, in a fixed order.
pub(crate) fn elements_with_norm_at_most(bound: i128) -> Vec<EisensteinInt> {
    if bound < 0 {
        return Vec::new();
    }
    // a^2 - ab + b^2 >= 3/4 max(a,b)^2 bounds both coordinates
    let r = (4 * bound / 3).sqrt() + 1;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let e = EisensteinInt::new(a, b);
            if e.norm() <= bound {
                out.push(e);
            }
        }
    }
    out.sort_by_key(|e| (e.norm(), e.a, e.b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i128, b: i128) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(eisenstein_gcd(&e(2, 0), &e(4, 0)).unwrap(), e(2, 0));
        assert_eq!(eisenstein_gcd(&e(1, 1), &e(17, -5)).unwrap(), e(1, 0));
        let g = eisenstein_gcd(&e(3, 0), &e(1, -1)).unwrap();
        assert_eq!(g, e(1, -1).canonical_associate());
        assert_eq!(g.norm(), 3);
        assert_eq!(eisenstein_gcd(&e(0, 0), &e(0, 0)), Err(NumberError::GcdOfZeros));
        assert_eq!(eisenstein_gcd(&e(-5, 3), &e(0, 0)).unwrap(), e(-5, 3).canonical_associate());
    }

    #[test]
    fn three_ramifies() {
        // 3 = -zeta^2 (1 - zeta)^2
        let pi = e(1, -1);
        let zeta2 = e(-1, -1);
        assert_eq!(-(zeta2 * pi * pi), e(3, 0));
    }

    #[test]
    fn canonical_associates() {
        assert_eq!(e(1, 1).canonical_associate(), e(1, 0));
        assert_eq!(e(0, -2).canonical_associate(), e(2, 0));
        assert_eq!(e(1, -1).canonical_associate(), e(2, 1));
        for u in UNITS {
            let x = u * e(5, 2);
            assert_eq!(x.canonical_associate(), e(5, 2).canonical_associate());
        }
    }

    #[test]
    fn integer_square_roots() {
        assert_eq!(e(3249, 0).sqrt(), Some(e(57, 0)));
        assert_eq!(e(-3, 0).sqrt(), Some(e(1, 2)));
        assert_eq!(e(2, 0).sqrt(), None);
        for a in -12..12 {
            for b in -12..12 {
                let t = e(a, b);
                let s = (t * t).sqrt().unwrap();
                assert!(s == t || s == -t);
            }
        }
    }

    #[test]
    fn element_listing() {
        let v = elements_with_norm_at_most(1);
        assert_eq!(v.len(), 7);
        assert_eq!(elements_with_norm_at_most(4).len(), 7 + 6 + 6);
    }
}
