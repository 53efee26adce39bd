use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GeometryError, WPoint};
use crate::numbers::FieldElem;
use crate::poly::{MPoly, PolyRing};
use crate::ring::Ring;

/// The surface `w^2 = z^3 + A x^6 + B y^6` in P(1,1,2,3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surface {
    #[serde(rename = "A")]
    a: FieldElem,
    #[serde(rename = "B")]
    b: FieldElem,
}

impl Surface {
    pub fn new(a: FieldElem, b: FieldElem) -> Result<Self, GeometryError> {
        if a.is_zero() || b.is_zero() {
            return Err(GeometryError::DegenerateSurface);
        }
        Ok(Surface { a, b })
    }

    /// `w^2 = z^3 + 49x^6 + 49y^6`.
    pub fn main() -> Self {
        Surface { a: FieldElem::from(49), b: FieldElem::from(49) }
    }

    /// `w^2 = z^3 + x^6 + y^6`.
    pub fn unit() -> Self {
        Surface { a: FieldElem::from(1), b: FieldElem::from(1) }
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    pub fn b(&self) -> &FieldElem {
        &self.b
    }

    /// Ring `k[x, y, z, w]` used for surface and curve equations.
    pub fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z", "w"])
    }

    /// `w^2 - z^3 - A x^6 - B y^6`.
    pub fn equation(&self) -> MPoly<FieldElem> {
        let r = Surface::ring();
        let (x, y, z, w) = (r.var("x"), r.var("y"), r.var("z"), r.var("w"));
        w.pow(2) - z.pow(3) - x.pow(6).scale(&self.a) - y.pow(6).scale(&self.b)
    }

    /// `z^3 + A x^6 + B y^6` evaluated at a point of P(1,1,2).
    pub fn branch_value(&self, x: &FieldElem, y: &FieldElem, z: &FieldElem) -> FieldElem {
        z.pow(3) + &self.a * &x.pow(6) + &self.b * &y.pow(6)
    }

    /// Right-hand side `z^3 + A x^6 + B y^6` at a point of P(1,1,2,3).
    pub fn rhs(&self, p: &WPoint) -> FieldElem {
        let c = p.coords();
        self.branch_value(&c[0], &c[1], &c[2])
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^2 = z^3 + ({})*x^6 + ({})*y^6", self.a, self.b)
    }
}

fn check_weights(p: &WPoint, expected: &[u32]) -> Result<(), GeometryError> {
    if p.weights().weights() != expected {
        return Err(GeometryError::WeightMismatch { coords: p.coords().len(), weights: expected.len() });
    }
    Ok(())
}

pub fn on_surface(p: &WPoint, s: &Surface) -> Result<bool, GeometryError> {
    check_weights(p, &[1, 1, 2, 3])?;
    let w = &p.coords()[3];
    Ok(w * w == s.rhs(p))
}

/// `(x, y, z) -> (x^2, xy, y^2, z)`, landing on the cone `Y^2 = XZ`.
pub fn cone_chart(p: &WPoint) -> Result<[FieldElem; 4], GeometryError> {
    check_weights(p, &[1, 1, 2])?;
    let c = p.coords();
    Ok([&c[0] * &c[0], &c[0] * &c[1], &c[1] * &c[1], c[2].clone()])
}

/// A plane `kX + lY + mZ + nW` of P^3, up to scalar.
#[derive(Clone, Debug)]
pub struct DualPlane {
    c: [FieldElem; 4],
}

impl DualPlane {
    pub fn new(k: FieldElem, l: FieldElem, m: FieldElem, n: FieldElem) -> Result<Self, GeometryError> {
        let c = [k, l, m, n];
        if c.iter().all(Ring::is_zero) {
            return Err(GeometryError::ZeroPlane);
        }
        Ok(DualPlane { c })
    }

    pub fn from_ints(k: i64, l: i64, m: i64, n: i64) -> Result<Self, GeometryError> {
        DualPlane::new(k.into(), l.into(), m.into(), n.into())
    }

    pub fn coords(&self) -> &[FieldElem; 4] {
        &self.c
    }

    pub fn k(&self) -> &FieldElem {
        &self.c[0]
    }
    pub fn l(&self) -> &FieldElem {
        &self.c[1]
    }
    pub fn m(&self) -> &FieldElem {
        &self.c[2]
    }
    pub fn n(&self) -> &FieldElem {
        &self.c[3]
    }

    /// Scaled so that `n = 1`, or the first nonzero coordinate is 1 when `n = 0`.
    pub fn normalized(&self) -> Self {
        let pivot = if self.c[3].is_zero() {
            self.c.iter().find(|x| !x.is_zero()).expect("nonzero plane")
        } else {
            &self.c[3]
        };
        let inv = pivot.inverse().expect("nonzero");
        DualPlane { c: self.c.clone().map(|x| &x * &inv) }
    }

    pub fn scale(&self, lambda: &FieldElem) -> Result<Self, GeometryError> {
        let [k, l, m, n] = self.c.clone().map(|x| &x * lambda);
        DualPlane::new(k, l, m, n)
    }

    /// Whether the cone point `(X, Y, Z, W)` lies on the plane.
    pub fn contains(&self, p: &[FieldElem; 4]) -> bool {
        self.c.iter().zip(p).fold(FieldElem::zero(), |acc, (a, b)| acc + a * b).is_zero()
    }
}

impl PartialEq for DualPlane {
    fn eq(&self, o: &DualPlane) -> bool {
        self.normalized().c == o.normalized().c
    }
}

impl fmt::Display for DualPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k, l, m, n] = &self.c;
        write!(f, "({k}, {l}, {m}, {n})")
    }
}

/// Common tangent plane of `W^3 + A X^3 + B Z^3` at `P0` and at its image
/// under `Y -> -Y`: `(A x0^4, 0, B y0^4, z0^2)`.
pub fn bitangent_plane(p0: &WPoint, s: &Surface) -> Result<DualPlane, GeometryError> {
    check_weights(p0, &[1, 1, 2])?;
    let c = p0.coords();
    if !s.branch_value(&c[0], &c[1], &c[2]).is_zero() {
        return Err(GeometryError::NotOnBranchCurve(p0.to_string()));
    }
    DualPlane::new(s.a() * &c[0].pow(4), FieldElem::zero(), s.b() * &c[1].pow(4), c[2].pow(2))
}

/// Ring `k[x, y]` of the restriction sextics.
pub fn binary_ring() -> PolyRing {
    PolyRing::new(&["x", "y"])
}

/// `n^3 (A x^6 + B y^6) - (k x^2 + l xy + m y^2)^3`: the branch equation on the
/// plane, after eliminating `z = -(k x^2 + l xy + m y^2) / n`.
pub fn branch_sextic(h: &DualPlane, s: &Surface) -> Result<MPoly<FieldElem>, GeometryError> {
    if h.n().is_zero() {
        return Err(GeometryError::DegeneratePlane(h.to_string()));
    }
    let r = binary_ring();
    let (x, y) = (r.var::<FieldElem>("x"), r.var::<FieldElem>("y"));
    let quad = (&x * &x).scale(h.k()) + (&x * &y).scale(h.l()) + (&y * &y).scale(h.m());
    let sextic = x.pow(6).scale(s.a()) + y.pow(6).scale(s.b());
    Ok(sextic.scale(&h.n().pow(3)) - quad.pow(3))
}
