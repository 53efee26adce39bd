use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::ring::Ring;
use crate::geometry::WPoint;
use crate::numbers::elements_with_norm_at_most;
use crate::numbers::{EisensteinInt, FieldElem};

/// An integral point of `P(1,1,2,3)` up to the unit action
/// `(x, y, z, w) -> (u x, u y, u^2 z, u^3 w)`.
///
/// The first nonzero of `x, y` is a canonical associate and no nonunit `d`
/// has `d | x, d | y, d^2 | z, d^3 | w`. Class number one makes this
/// representative unique.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegralPoint {
    pub x: EisensteinInt,
    pub y: EisensteinInt,
    pub z: EisensteinInt,
    pub w: EisensteinInt,
}

impl IntegralPoint {
    /// Normalizes an integral quadruple; `None` when `x = y = 0`.
    pub fn new(x: EisensteinInt, y: EisensteinInt, z: EisensteinInt, w: EisensteinInt) -> Option<Self> {
        let mut p = IntegralPoint { x, y, z, w };
        p = p.unit_normalized()?;
        while let Some(d) = p.content_divisor() {
            let q = |a: EisensteinInt, e: u32| a.checked_div(&d.pow(e)).expect("divisor");
            p = IntegralPoint { x: q(p.x, 1), y: q(p.y, 1), z: q(p.z, 2), w: q(p.w, 3) };
            p = p.unit_normalized()?;
        }
        Some(p)
    }

    fn unit_normalized(self) -> Option<Self> {
        let lead = if self.x.is_zero() { self.y } else { self.x };
        let u = lead.canonical_unit()?;
        Some(IntegralPoint { x: u * self.x, y: u * self.y, z: u * u * self.z, w: u * u * u * self.w })
    }

    /// A nonunit `d` dividing the weighted content, largest norm first.
    fn content_divisor(&self) -> Option<EisensteinInt> {
        let g = crate::numbers::eisenstein_gcd(&self.x, &self.y).ok()?;
        if g.is_unit() {
            return None;
        }
        let mut cands = elements_with_norm_at_most(g.norm());
        cands.retain(|d| d.norm() > 1 && g.norm() % d.norm() == 0 && d.divides(&g));
        cands
            .into_iter()
            .rev()
            .find(|d| d.pow(2).divides(&self.z) && d.pow(3).divides(&self.w))
    }

    /// Whether the quadruple already is the normalized representative.
    pub fn is_normalized(&self) -> bool {
        IntegralPoint::new(self.x, self.y, self.z, self.w) == Some(*self)
    }

    /// `max(N(x), N(y))`: the height as an exact integer.
    pub fn height_norm(&self) -> i128 {
        self.x.norm().max(self.y.norm())
    }

    pub fn height(&self) -> f64 {
        self.height_norm() as f64
    }

    pub fn to_wpoint(&self) -> WPoint {
        WPoint::p1123(self.x.to_field(), self.y.to_field(), self.z.to_field(), self.w.to_field())
            .expect("x, y not both zero")
    }

    /// The normalized representative of a k-point of `P(1,1,2,3)`.
    pub fn from_wpoint(p: &WPoint) -> Result<Self, HarnessError> {
        let c = p.coords();
        if c.len() != 4 || p.weights().weights() != [1, 1, 2, 3] {
            return Err(HarnessError::NotP1123);
        }
        if c[0].is_zero() && c[1].is_zero() {
            return Err(HarnessError::VertexPoint);
        }
        let den = c.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator()));
        let scaled = p.scale(&FieldElem::from_rational(den.into())).expect("nonzero");
        let e = |i: usize| {
            EisensteinInt::try_from_field(&scaled.coords()[i]).map_err(|err| HarnessError::Overflow(err.to_string()))
        };
        IntegralPoint::new(e(0)?, e(1)?, e(2)?, e(3)?).ok_or(HarnessError::VertexPoint)
    }
}

impl fmt::Display for IntegralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.w)
    }
}

/// Naive anticanonical height `max(|x|, |y|)^2` at the complex place, read
/// off the normalized integral representative.
pub fn height(p: &WPoint) -> Result<f64, HarnessError> {
    Ok(IntegralPoint::from_wpoint(p)?.height())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    CurveEnumeration,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightEntry {
    pub point: IntegralPoint,
    pub height: f64,
    pub on_exceptional: bool,
    pub source: Source,
}

impl HeightEntry {
    pub fn new(point: IntegralPoint, on_exceptional: bool, source: Source) -> Self {
        HeightEntry { height: point.height(), point, on_exceptional, source }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i128, b: i128) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn heights() {
        assert_eq!(height(&WPoint::from_ints(&[0, 1, 0, 7], &[1, 1, 2, 3]).unwrap()).unwrap(), 1.0);
        let zeta = FieldElem::zeta();
        let sec = WPoint::p1123(-zeta.clone(), 2.into(), FieldElem::from(4) * &zeta, 57.into()).unwrap();
        assert_eq!(height(&sec).unwrap(), 4.0);
        assert_eq!(height(&sec.scale(&zeta).unwrap()).unwrap(), 4.0);
        assert_eq!(height(&sec.scale(&FieldElem::from(5)).unwrap()).unwrap(), 4.0);
        let half = FieldElem::from_rational(crate::numbers::rat(1, 2));
        assert_eq!(height(&sec.scale(&half).unwrap()).unwrap(), 4.0);
        let vertex = WPoint::from_ints(&[0, 0, 1, 1], &[1, 1, 2, 3]).unwrap();
        assert_eq!(height(&vertex), Err(HarnessError::VertexPoint));
    }

    #[test]
    fn content_is_weighted() {
        // (2, 2, 4, 8) = 2 . (1, 1, 1, 1)
        let p = IntegralPoint::new(e(2, 0), e(2, 0), e(4, 0), e(8, 0)).unwrap();
        assert_eq!(p, IntegralPoint::new(e(1, 0), e(1, 0), e(1, 0), e(1, 0)).unwrap());
        // (2, 2, 2, 0): 4 does not divide z, so the representative keeps x, y = 2
        let q = IntegralPoint::new(e(2, 0), e(2, 0), e(2, 0), e(0, 0)).unwrap();
        assert_eq!(q.height_norm(), 4);
        assert!(q.is_normalized());
        let r = IntegralPoint::new(e(-1, 0), e(3, 1), e(5, 0), e(2, 2)).unwrap();
        assert_eq!(r.x, e(1, 0));
        assert_eq!(r.w, e(-2, -2));
    }
}
