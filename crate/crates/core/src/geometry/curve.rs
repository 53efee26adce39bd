use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{on_surface, DualPlane, GeometryError, Surface, WPoint};
use crate::numbers::{embed_complex, field_sqrt, FieldElem, Rational};
use crate::poly::{MPoly, PolyRing};
use crate::ring::Ring;

/// A point `(x0', y0', z0')` of the parametrizing cubic `z^3 + A x^3 + B y^3 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EPoint {
    pub x0: FieldElem,
    pub y0: FieldElem,
    pub z0: FieldElem,
}

impl EPoint {
    /// A point of `z^3 + 49x^3 + 49y^3 = 0`.
    pub fn new(x0: FieldElem, y0: FieldElem, z0: FieldElem) -> Result<Self, GeometryError> {
        EPoint::on(&Surface::main(), x0, y0, z0)
    }

    /// A point of the cubic attached to `s`: `z^3 + A x^3 + B y^3 = 0`.
    pub fn on(s: &Surface, x0: FieldElem, y0: FieldElem, z0: FieldElem) -> Result<Self, GeometryError> {
        let p = EPoint { x0, y0, z0 };
        if p.x0.is_zero() && p.y0.is_zero() && p.z0.is_zero() {
            return Err(GeometryError::ZeroPoint);
        }
        if !p.cubic_value(s).is_zero() {
            return Err(GeometryError::NotOnCubic(p.to_string()));
        }
        Ok(p)
    }

    pub fn from_ints(x0: i64, y0: i64, z0: i64) -> Result<Self, GeometryError> {
        EPoint::new(x0.into(), y0.into(), z0.into())
    }

    pub fn cubic_value(&self, s: &Surface) -> FieldElem {
        self.z0.pow(3) + s.a() * &self.x0.pow(3) + s.b() * &self.y0.pow(3)
    }

    pub fn coords(&self) -> [&FieldElem; 3] {
        [&self.x0, &self.y0, &self.z0]
    }
}

impl fmt::Display for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x0, self.y0, self.z0)
    }
}

/// `(A x0'^2, 0, B y0'^2, z0'^2)`: the plane of the curve attached to `Q0`.
pub fn family_plane(q0: &EPoint, s: &Surface) -> Result<DualPlane, GeometryError> {
    DualPlane::new(s.a() * &q0.x0.pow(2), FieldElem::zero(), s.b() * &q0.y0.pow(2), q0.z0.pow(2))
}

/// The curve `C'` on a surface cut out by the surface equation and
/// `z0'^2 z + A x0'^2 x^2 + B y0'^2 y^2`.
#[derive(Clone, Debug)]
pub struct FamilyCurve {
    pub surface: Surface,
    pub q0: EPoint,
    pub equations: [MPoly<FieldElem>; 2],
}

impl FamilyCurve {
    pub fn new(s: &Surface, q0: &EPoint) -> Result<Self, GeometryError> {
        if !q0.cubic_value(s).is_zero() {
            return Err(GeometryError::NotOnCubic(q0.to_string()));
        }
        let r = Surface::ring();
        let (x, y, z) = (r.var::<FieldElem>("x"), r.var::<FieldElem>("y"), r.var::<FieldElem>("z"));
        let plane = z.scale(&q0.z0.pow(2))
            + x.pow(2).scale(&(s.a() * &q0.x0.pow(2)))
            + y.pow(2).scale(&(s.b() * &q0.y0.pow(2)));
        Ok(FamilyCurve { surface: s.clone(), q0: q0.clone(), equations: [s.equation(), plane] })
    }

    /// Plane through the cone vertex: no `z` term in the second equation.
    pub fn is_degenerate(&self) -> bool {
        self.q0.z0.is_zero()
    }

    pub fn plane(&self) -> DualPlane {
        family_plane(&self.q0, &self.surface).expect("z0, or one of x0, y0, is nonzero")
    }

    pub fn contains(&self, p: &WPoint) -> Result<bool, GeometryError> {
        if p.coords().len() != 4 {
            return Err(GeometryError::WeightMismatch { coords: p.coords().len(), weights: 4 });
        }
        Ok(self.equations.iter().all(|e| e.eval(p.coords()).is_zero()))
    }

    /// Rank of the 2x4 Jacobian of both equations at `p`.
    pub fn jacobian_rank(&self, p: &WPoint) -> Result<usize, GeometryError> {
        if !self.contains(p)? {
            return Err(GeometryError::NotOnCurve(p.to_string()));
        }
        let rows: Vec<Vec<FieldElem>> = self
            .equations
            .iter()
            .map(|e| (0..4).map(|i| e.partial(i).eval(p.coords())).collect())
            .collect();
        let minors = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)));
        let full = minors
            .into_iter()
            .any(|(i, j)| !(&rows[0][i] * &rows[1][j] - &rows[0][j] * &rows[1][i]).is_zero());
        let nonzero_row = rows.iter().any(|r| r.iter().any(|c| !c.is_zero()));
        Ok(if full { 2 } else { usize::from(nonzero_row) })
    }

    /// Smallest singular value of the complex Jacobian at `p`, relative to the
    /// largest. Points off `k` (e.g. on the multi-section) are checked this way.
    pub fn jacobian_conditioning(&self, p: &[Complex64; 4]) -> f64 {
        let rows: Vec<Vec<Complex64>> = self
            .equations
            .iter()
            .map(|e| {
                let ce = e.map_coeffs(embed_complex);
                (0..4).map(|i| ce.partial(i).eval(p)).collect()
            })
            .collect();
        // singular values of a 2xN matrix from its 2x2 Gram matrix
        let dot = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
            a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
        };
        let g00 = dot(&rows[0], &rows[0]).re;
        let g11 = dot(&rows[1], &rows[1]).re;
        let g01 = dot(&rows[0], &rows[1]).norm();
        let tr = g00 + g11;
        let det = (g00 * g11 - g01 * g01).max(0.0);
        let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
        let (hi, lo) = (tr / 2.0 + disc, (tr / 2.0 - disc).max(0.0));
        if hi == 0.0 {
            0.0
        } else {
            (lo / hi).sqrt()
        }
    }
}

/// The curve `C'` of `Q0` on the 49-surface.
pub fn family_curve(q0: &EPoint) -> Result<FamilyCurve, GeometryError> {
    FamilyCurve::new(&Surface::main(), q0)
}

/// `P` is a smooth point of `C'` iff the Jacobian has rank 2 there.
pub fn curve_point_smooth(curve: &FamilyCurve, p: &WPoint) -> Result<bool, GeometryError> {
    Ok(curve.jacobian_rank(p)? == 2)
}

fn identity_ring() -> PolyRing {
    PolyRing::new(&["x0", "y0", "x", "y"])
}

/// Both sides of
/// `(x0^3+y0^3)^2 (x^6+y^6) - (x0^2 x^2 + y0^2 y^2)^3
///    = (y0 x^2 - x0 y^2)^2 [(2 x0^3 y0 + y0^4) x^2 + (x0^4 + 2 x0 y0^3) y^2]`.
pub fn adjunction_identity_sides() -> (MPoly<Rational>, MPoly<Rational>) {
    let r = identity_ring();
    let v = |n: &str| r.var::<Rational>(n);
    let (x0, y0, x, y) = (v("x0"), v("y0"), v("x"), v("y"));
    let c = |n: i64| r.constant(Rational::from_int(n));
    let s3 = x0.pow(3) + y0.pow(3);
    let lhs = s3.pow(2) * (x.pow(6) + y.pow(6)) - (x0.pow(2) * x.pow(2) + y0.pow(2) * y.pow(2)).pow(3);
    let quad = &y0 * &x.pow(2) - &x0 * &y.pow(2);
    let f = (c(2) * x0.pow(3) * &y0 + y0.pow(4)) * x.pow(2) + (x0.pow(4) + c(2) * &x0 * y0.pow(3)) * y.pow(2);
    (lhs, quad.pow(2) * f)
}

pub fn adjunction_identity_check() -> bool {
    let (l, r) = adjunction_identity_sides();
    l == r
}

fn section_ring() -> PolyRing {
    PolyRing::new(&["x0", "y0"])
}

/// `F = (2 x0^3 y0 + y0^4) x^2 + (x0^4 + 2 x0 y0^3) y^2` at `(x, y) = (zeta y0, x0)`.
pub fn section_f() -> MPoly<FieldElem> {
    section_ring()
        .parse("(2*x0^3*y0 + y0^4)*(zeta*y0)^2 + (x0^4 + 2*x0*y0^3)*x0^2")
        .expect("well-formed")
}

/// `(x0^3 - zeta y0^3)^2`.
pub fn section_f_square() -> MPoly<FieldElem> {
    section_ring().parse("(x0^3 - zeta*y0^3)^2").expect("well-formed")
}

/// `F` expands to `(x0^3 - zeta y0^3)^2` and the term-wise square root agrees.
pub fn perfect_square_check() -> bool {
    let f = section_f();
    let root = section_ring().parse("x0^3 - zeta*y0^3").expect("well-formed");
    f == section_f_square() && f.is_perfect_square().is_some_and(|g| g == root || g == -root)
}

/// Intermediate expansion of `F` with `zeta y0^6` in place of `zeta^2 y0^6`.
pub fn intermediate_line_variant() -> MPoly<FieldElem> {
    section_ring().parse("x0^6 - 2*zeta*x0^3*y0^3 + zeta*y0^6").expect("well-formed")
}

fn check_section_input(q0: &EPoint) -> Result<(), GeometryError> {
    let s3 = q0.x0.pow(3) + q0.y0.pow(3);
    if s3.is_zero() || q0.z0.is_zero() || q0.x0.is_zero() || q0.y0.is_zero() {
        return Err(GeometryError::FiberDegenerate(q0.to_string()));
    }
    Ok(())
}

/// `z = 49 zeta x0^2 y0^2 / z0^2`.
pub fn section_z(q0: &EPoint) -> Result<FieldElem, GeometryError> {
    check_section_input(q0)?;
    Ok(FieldElem::from(49) * FieldElem::zeta() * q0.x0.pow(2) * q0.y0.pow(2) / q0.z0.pow(2))
}

/// `7 (x0^3 - zeta^2 y0^3)(x0^3 - zeta y0^3) / (x0^3 + y0^3)`.
pub fn section_w_closed_form(q0: &EPoint) -> Result<FieldElem, GeometryError> {
    check_section_input(q0)?;
    let (x3, y3) = (q0.x0.pow(3), q0.y0.pow(3));
    let z = FieldElem::zeta();
    let z2 = z.pow(2);
    Ok(FieldElem::from(7) * (&x3 - &(&z2 * &y3)) * (&x3 - &(&z * &y3)) / (&x3 + &y3))
}

/// Closed form with the first factor's roles swapped: `(y0^3 - zeta^2 x0^3)`.
pub fn section_w_swapped_variant(q0: &EPoint) -> Result<FieldElem, GeometryError> {
    check_section_input(q0)?;
    let (x3, y3) = (q0.x0.pow(3), q0.y0.pow(3));
    let z = FieldElem::zeta();
    let z2 = z.pow(2);
    Ok(FieldElem::from(7) * (&y3 - &(&z2 * &x3)) * (&x3 - &(&z * &y3)) / (&x3 + &y3))
}

/// `(zeta y0, x0, z, w)` on the curve of `Q0` in the 49-surface: `z` from the
/// plane equation, `w` by an exact square root of the surface right-hand side.
pub fn section_point(q0: &EPoint) -> Result<WPoint, GeometryError> {
    check_section_input(q0)?;
    let s = Surface::main();
    let curve = family_curve(q0)?;
    let x = FieldElem::zeta() * &q0.y0;
    let y = q0.x0.clone();
    let z = -(s.a() * &q0.x0.pow(2) * x.pow(2) + s.b() * &q0.y0.pow(2) * y.pow(2)) / q0.z0.pow(2);
    let rhs = s.branch_value(&x, &y, &z);
    let w = field_sqrt(&rhs).ok_or_else(|| GeometryError::MissingSqrt(rhs.to_string()))?;
    let p = WPoint::p1123(x, y, z, w)?;
    debug_assert!(on_surface(&p, &s)? && curve.contains(&p)?);
    Ok(p)
}

/// `(a, b) = (2 / d, 1)` for a rational curve of anticanonical degree `d`.
pub fn fujita_invariants(d: u32) -> Result<(Rational, u32), GeometryError> {
    if d == 0 {
        return Err(GeometryError::BadDegree);
    }
    Ok((Rational::new(2.into(), d.into()), 1))
}

/// Checked-in curve record: `{"surface": {"A", "B"}, "epoint": [x0, y0, z0]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveFixture {
    pub surface: Surface,
    pub epoint: [FieldElem; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_point: Option<[FieldElem; 4]>,
}

impl CurveFixture {
    pub fn curve(&self) -> Result<FamilyCurve, GeometryError> {
        let [x, y, z] = self.epoint.clone();
        let q0 = EPoint::on(&self.surface, x, y, z)?;
        FamilyCurve::new(&self.surface, &q0)
    }
}

pub fn load_curve_fixtures(json: &str) -> Result<Vec<CurveFixture>, serde_json::Error> {
    serde_json::from_str(json)
}

/// The curve records shipped with the crate.
pub fn builtin_curve_fixtures() -> Vec<CurveFixture> {
    load_curve_fixtures(include_str!("../../fixtures/curves.json")).expect("valid fixture")
}
