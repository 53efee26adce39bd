use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rational_sqrt, Rational};
use crate::ring::{Embed, ExactSqrt, Field, Ring};

/// An element `a + b*zeta` of k = Q(zeta), zeta a primitive cube root of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FieldElem {
    pub a: Rational,
    pub b: Rational,
}

impl FieldElem {
    pub fn new(a: Rational, b: Rational) -> Self {
        FieldElem { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        FieldElem::new(Rational::from_int(a), Rational::from_int(b))
    }

    pub fn from_rational(a: Rational) -> Self {
        FieldElem::new(a, Rational::zero())
    }

    pub fn zeta() -> Self {
        FieldElem::from_ints(0, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Field norm `a^2 - ab + b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Image under zeta -> zeta^2.
    pub fn conjugate(&self) -> Self {
        FieldElem::new(&self.a - &self.b, -&self.b)
    }

    /// `x + conj(x) = 2a - b`.
    pub fn trace(&self) -> Rational {
        Rational::from_integer(2.into()) * &self.a - &self.b
    }

    /// Inverse via `conj(x) / norm(x)`.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(FieldElem::new(c.a / &n, c.b / &n))
    }

    /// Least common multiple of the denominators of both coordinates.
    pub fn denominator(&self) -> num_bigint::BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElem::new(&self.a * q, &self.b * q)
    }

    /// Sign convention for picking one of `±x`: first nonzero coordinate positive.
    pub fn is_positive(&self) -> bool {
        if !self.a.is_zero() {
            self.a.is_positive()
        } else {
            self.b.is_positive()
        }
    }
}

/// Complex image under zeta -> (-1 + sqrt(-3)) / 2.
pub fn embed_complex(x: &FieldElem) -> Complex64 {
    let a = x.a.to_f64().unwrap_or(f64::NAN);
    let b = x.b.to_f64().unwrap_or(f64::NAN);
    Complex64::new(a - 0.5 * b, b * (3f64.sqrt() / 2.0))
}

/// Exact square root in k, or `None` when `c` is not a square.
///
/// Writes `c = p + q*sqrt(-3)`. A root `r + s*sqrt(-3)` has norm `sqrt(N(c))`,
/// which pins `r^2 = (p + n)/2` and `3 s^2 = (n - p)/2` over Q; the sign pair
/// is then fixed by `2rs = q`. The candidate is checked by squaring.
pub fn field_sqrt(c: &FieldElem) -> Option<FieldElem> {
    if c.a.is_zero() && c.b.is_zero() {
        return Some(FieldElem::default());
    }
    let two = Rational::from_integer(2.into());
    let n = rational_sqrt(&c.norm())?;
    let p = &c.a - &c.b / &two;
    let q = &c.b / &two;
    let r = rational_sqrt(&((&p + &n) / &two))?;
    let s = if r.is_zero() {
        rational_sqrt(&((&n - &p) / Rational::from_integer(6.into())))?
    } else {
        q / (&two * &r)
    };
    // r + s*sqrt(-3) = (r + s) + 2s*zeta
    let t = FieldElem::new(&r + &s, &two * &s);
    if &t * &t != *c {
        return None;
    }
    Some(if t.is_positive() { t } else { -t })
}

/// Square root by rounding a floating guess to the denominator bound `2 den(c)`
/// and verifying exactly. Only reliable while `c` fits comfortably in an `f64`.
pub fn field_sqrt_by_rounding(c: &FieldElem) -> Option<FieldElem> {
    let z = embed_complex(c).sqrt();
    let bound = c.denominator() * num_bigint::BigInt::from(2);
    let bound_f = bound.to_f64()?;
    // invert the embedding: b = im * 2/sqrt(3), a = re + b/2
    let b = z.im * 2.0 / 3f64.sqrt();
    let a = z.re + b / 2.0;
    let round = |v: f64| -> Option<Rational> {
        let scaled = (v * bound_f).round();
        if !scaled.is_finite() {
            return None;
        }
        let num = num_bigint::BigInt::from(scaled as i128);
        Some(Rational::new(num, bound.clone()))
    };
    let t = FieldElem::new(round(a)?, round(b)?);
    if &t * &t == *c {
        Some(if t.is_positive() { t } else { -t })
    } else {
        None
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_ints(n, 0)
    }
}

impl From<Rational> for FieldElem {
    fn from(q: Rational) -> Self {
        FieldElem::from_rational(q)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z, using z^2 = -1 - z
        let bd = &self.b * &o.b;
        FieldElem::new(
            &self.a * &o.a - &bd,
            &self.a * &o.b + &self.b * &o.a - bd,
        )
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn div(self, o: &FieldElem) -> FieldElem {
        self * &o.inverse().expect("division by zero in Q(zeta)")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-self.a, -self.b)
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, o: &FieldElem) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, o: &FieldElem) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, o: &FieldElem) {
        *self = &*self * o;
    }
}

impl Ring for FieldElem {
    fn zero() -> Self {
        FieldElem::default()
    }
    fn one() -> Self {
        FieldElem::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_int(n: i64) -> Self {
        FieldElem::from_ints(n, 0)
    }
}

impl Field for FieldElem {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl ExactSqrt for FieldElem {
    fn sqrt(&self) -> Option<Self> {
        field_sqrt(self)
    }
}

impl Embed for FieldElem {
    fn to_complex(&self) -> Complex64 {
        embed_complex(self)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Writes `b*zeta` with unit coefficients elided; `b` must be nonzero.
fn write_zeta_part(f: &mut fmt::Formatter<'_>, b: &Rational, leading: bool) -> fmt::Result {
    let mag = b.abs();
    if b.is_negative() {
        f.write_str("-")?;
    } else if !leading {
        f.write_str("+")?;
    }
    if mag != Rational::one() {
        write_rational(f, &mag)?;
        f.write_str("*")?;
    }
    f.write_str("zeta")
}

/// Compact form `a+b*zeta`, e.g. `2`, `-1-zeta`, `3/2+2*zeta`, `-zeta`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write_rational(f, &self.a),
            (true, false) => write_zeta_part(f, &self.b, true),
            (false, false) => {
                write_rational(f, &self.a)?;
                write_zeta_part(f, &self.b, false)
            }
        }
    }
}

impl FromStr for FieldElem {
    type Err = crate::poly::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::poly::parse_constant(s)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, rat};

    fn fe(a: i64, b: i64) -> FieldElem {
        FieldElem::from_ints(a, b)
    }

    #[test]
    fn zeta_relations() {
        let z = FieldElem::zeta();
        assert_eq!(&(&z * &z) + &z + FieldElem::one(), FieldElem::zero());
        assert_eq!(z.pow(3), FieldElem::one());
    }

    #[test]
    fn norms() {
        assert_eq!(FieldElem::zeta().norm(), int(1));
        assert_eq!(fe(2, 0).norm(), int(4));
        assert_eq!(fe(8, 1).norm(), int(57));
    }

    #[test]
    fn conjugates() {
        assert_eq!(FieldElem::zeta().conjugate(), fe(-1, -1));
        assert_eq!(fe(1, 0).conjugate(), fe(1, 0));
        assert_eq!(fe(48, 63).conjugate(), fe(-15, -63));
        let x = fe(48, 63);
        assert_eq!(&x * &x.conjugate(), FieldElem::from(x.norm()));
    }

    #[test]
    fn square_roots() {
        assert_eq!(field_sqrt(&fe(9, 0)), Some(fe(3, 0)));
        assert_eq!(field_sqrt(&fe(3249, 0)), Some(fe(57, 0)));
        assert_eq!(field_sqrt(&fe(2, 0)), None);
        // -3 = (1 + 2 zeta)^2
        assert_eq!(field_sqrt(&fe(-3, 0)), Some(fe(1, 2)));
        assert_eq!(field_sqrt(&fe(3, 0)), None);
        assert_eq!(field_sqrt(&fe(-1, 0)), None);
        // zeta = (zeta^2)^2 = (-1 - zeta)^2
        assert_eq!(field_sqrt(&FieldElem::zeta()), Some(fe(1, 1)));
        let q = FieldElem::new(rat(1, 4), int(0));
        assert_eq!(field_sqrt(&q), Some(FieldElem::new(rat(1, 2), int(0))));
        assert_eq!(field_sqrt_by_rounding(&fe(3249, 0)), Some(fe(57, 0)));
        assert_eq!(field_sqrt_by_rounding(&fe(2, 0)), None);
    }

    #[test]
    fn embedding() {
        let z = embed_complex(&FieldElem::zeta());
        assert!((z.re + 0.5).abs() < 1e-15);
        assert!((z.im - 0.866_025_403_784_438_6).abs() < 1e-15);
        let w = embed_complex(&fe(48, 63));
        assert!((w.re - 16.5).abs() < 1e-12);
        assert!((w.im - 63.0 * 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(embed_complex(&fe(1, 0)), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(fe(2, 0).to_string(), "2");
        assert_eq!(fe(-1, -1).to_string(), "-1-zeta");
        assert_eq!(fe(0, -1).to_string(), "-zeta");
        assert_eq!(fe(0, 2).to_string(), "2*zeta");
        assert_eq!(FieldElem::new(rat(3, 2), int(2)).to_string(), "3/2+2*zeta");
        assert_eq!(FieldElem::new(int(1), rat(-1, 3)).to_string(), "1-1/3*zeta");
    }
}
