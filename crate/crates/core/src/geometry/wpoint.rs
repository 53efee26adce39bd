use std::fmt;

use num_integer::Integer;

use super::GeometryError;
use crate::numbers::FieldElem;
use crate::poly::WeightVector;
use crate::ring::Ring;

/// A point of a weighted projective space over k.
#[derive(Clone, Debug)]
pub struct WPoint {
    coords: Vec<FieldElem>,
    weights: WeightVector,
}

impl WPoint {
    pub fn new(coords: Vec<FieldElem>, weights: WeightVector) -> Result<Self, GeometryError> {
        if coords.len() != weights.len() {
            return Err(GeometryError::WeightMismatch { coords: coords.len(), weights: weights.len() });
        }
        if coords.iter().all(Ring::is_zero) {
            return Err(GeometryError::ZeroPoint);
        }
        Ok(WPoint { coords, weights })
    }

    /// A point of P(1,1,2,3).
    pub fn p1123(x: FieldElem, y: FieldElem, z: FieldElem, w: FieldElem) -> Result<Self, GeometryError> {
        WPoint::new(vec![x, y, z, w], WeightVector::new(vec![1, 1, 2, 3]).expect("positive weights"))
    }

    /// A point of P(1,1,2).
    pub fn p112(x: FieldElem, y: FieldElem, z: FieldElem) -> Result<Self, GeometryError> {
        WPoint::new(vec![x, y, z], WeightVector::new(vec![1, 1, 2]).expect("positive weights"))
    }

    pub fn from_ints(coords: &[i64], weights: &[u32]) -> Result<Self, GeometryError> {
        let w = WeightVector::new(weights.to_vec()).map_err(|_| GeometryError::BadWeights)?;
        WPoint::new(coords.iter().map(|&c| FieldElem::from(c)).collect(), w)
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// `lambda . (x_i) = (lambda^{w_i} x_i)`.
    pub fn scale(&self, lambda: &FieldElem) -> Result<Self, GeometryError> {
        if lambda.is_zero() {
            return Err(GeometryError::ZeroPoint);
        }
        let coords = self
            .coords
            .iter()
            .zip(self.weights.weights())
            .map(|(c, &w)| c * &lambda.pow(w))
            .collect();
        Ok(WPoint { coords, weights: self.weights.clone() })
    }

    /// Representative whose first nonzero weight-1 coordinate is 1. Points
    /// with every weight-1 coordinate zero are returned unchanged.
    pub fn normalized(&self) -> Self {
        let pivot = self
            .coords
            .iter()
            .zip(self.weights.weights())
            .find(|(c, &w)| w == 1 && !c.is_zero());
        match pivot {
            Some((c, _)) => self.scale(&c.inverse().expect("nonzero")).expect("nonzero scalar"),
            None => self.clone(),
        }
    }

    /// Equality of classes over the algebraic closure of k.
    ///
    /// With `r_i = y_i / x_i` on the common support, a scalar exists iff
    /// `r_i = mu^{w_i/g}` where `lambda^g = mu` is assembled from Bezout
    /// combinations of the weights.
    pub fn equivalent(&self, o: &WPoint) -> bool {
        if self.weights != o.weights {
            return false;
        }
        let mut ratios = Vec::new();
        for ((a, b), &w) in self.coords.iter().zip(&o.coords).zip(self.weights.weights()) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => ratios.push((b / a, w as i64)),
                _ => return false,
            }
        }
        let Some((first, rest)) = ratios.split_first() else { return true };
        let (mut mu, mut g) = (first.0.clone(), first.1);
        for (r, w) in rest {
            let e = g.extended_gcd(w);
            mu = &signed_pow(&mu, e.x) * &signed_pow(r, e.y);
            g = e.gcd;
        }
        ratios.iter().all(|(r, w)| mu.pow((w / g) as u32) == *r)
    }
}

fn signed_pow(x: &FieldElem, e: i64) -> FieldElem {
    let p = x.pow(e.unsigned_abs() as u32);
    if e < 0 {
        p.inverse().expect("ratios are nonzero")
    } else {
        p
    }
}

impl PartialEq for WPoint {
    fn eq(&self, o: &WPoint) -> bool {
        self.equivalent(o)
    }
}

impl fmt::Display for WPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64) -> FieldElem {
        FieldElem::from_ints(a, b)
    }

    #[test]
    fn weighted_scaling_is_equality() {
        let p = WPoint::from_ints(&[2, -1, 5, 3], &[1, 1, 2, 3]).unwrap();
        let q = p.scale(&fe(3, 1)).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.normalized().coords()[0], fe(1, 0));
        let r = WPoint::from_ints(&[2, -1, 5, -3], &[1, 1, 2, 3]).unwrap();
        assert_ne!(p, r);
    }

    #[test]
    fn equivalence_over_the_closure() {
        // (0,0,1,1) and (0,0,4,8): lambda = 2
        let a = WPoint::from_ints(&[0, 0, 1, 1], &[1, 1, 2, 3]).unwrap();
        let b = WPoint::from_ints(&[0, 0, 4, 8], &[1, 1, 2, 3]).unwrap();
        assert_eq!(a, b);
        // (0,0,1,-1) and (0,0,1,1): lambda = -1
        let c = WPoint::from_ints(&[0, 0, 1, -1], &[1, 1, 2, 3]).unwrap();
        assert_eq!(a, c);
        // z alone: any ratio is a square over the closure
        let d = WPoint::from_ints(&[0, 0, 1, 0], &[1, 1, 2, 3]).unwrap();
        let e = WPoint::from_ints(&[0, 0, 3, 0], &[1, 1, 2, 3]).unwrap();
        assert_eq!(d, e);
        let f = WPoint::from_ints(&[0, 0, 1, 2], &[1, 1, 2, 3]).unwrap();
        assert_ne!(a, f);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(WPoint::from_ints(&[0, 0, 0], &[1, 1, 2]), Err(GeometryError::ZeroPoint));
        assert!(matches!(
            WPoint::from_ints(&[1, 0], &[1, 1, 2]),
            Err(GeometryError::WeightMismatch { .. })
        ));
    }
}
