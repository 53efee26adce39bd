use num_traits::ToPrimitive;

use super::height::{HeightEntry, IntegralPoint, Source};
use super::HarnessError;
use crate::ring::Ring;
use crate::geometry::{family_curve, FamilyCurve, Surface};
use crate::numbers::{elements_with_norm_at_most, field_sqrt, EisensteinInt, FieldElem};
use crate::par::{self, Execution};

/// Largest Eisenstein coordinate kept on the i128 path for `z`; beyond it `z^3`
/// could overflow and the right-hand side is formed over the field instead.
const Z_FAST: i128 = 1 << 35;

fn to_int(x: &FieldElem) -> Result<EisensteinInt, HarnessError> {
    EisensteinInt::try_from_field(x).map_err(|e| HarnessError::Overflow(e.to_string()))
}

fn surface_coeffs(s: &Surface) -> Result<(EisensteinInt, EisensteinInt), HarnessError> {
    let (a, b) = (to_int(s.a())?, to_int(s.b())?);
    if a.a.abs().max(a.b.abs()).max(b.a.abs()).max(b.b.abs()) > 1 << 20 {
        return Err(HarnessError::Overflow(format!("surface {s}")));
    }
    Ok((a, b))
}

/// Pairs `(x, y) != 0` with `max(N(x), N(y)) <= t`, the first nonzero entry
/// a canonical associate; one pair per unit orbit.
pub fn height_pairs(t: f64) -> Vec<(EisensteinInt, EisensteinInt)> {
    if t < 1.0 {
        return Vec::new();
    }
    let elems = elements_with_norm_at_most(t.floor() as i128);
    let mut out = Vec::new();
    for &x in &elems {
        for &y in &elems {
            let lead = if x.is_zero() { y } else { x };
            if !lead.is_zero() && lead.canonical_associate() == lead {
                out.push((x, y));
            }
        }
    }
    out
}

fn rhs(a: EisensteinInt, b: EisensteinInt, x: EisensteinInt, y: EisensteinInt, z: EisensteinInt) -> EisensteinInt {
    z.pow(3) + a * x.pow(6) + b * y.pow(6)
}

fn emit(x: EisensteinInt, y: EisensteinInt, z: EisensteinInt, w: EisensteinInt, out: &mut Vec<IntegralPoint>) {
    let p = IntegralPoint { x, y, z, w };
    if p.is_normalized() {
        out.push(p);
        if !w.is_zero() {
            out.push(IntegralPoint { w: -w, ..p });
        }
    }
}

fn sorted(mut pts: Vec<IntegralPoint>, on_exceptional: bool, source: Source) -> Vec<HeightEntry> {
    pts.sort_by_key(|p| (p.height_norm(), *p));
    pts.dedup();
    pts.into_iter().map(|p| HeightEntry::new(p, on_exceptional, source)).collect()
}

/// Integral form `(k, m, n)` of the curve's plane `k x^2 + m y^2 + n z = 0`.
fn integral_plane(curve: &FamilyCurve) -> Result<[EisensteinInt; 3], HarnessError> {
    let h = curve.plane();
    let den = h.coords().iter().fold(num_bigint::BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denominator()));
    let den = FieldElem::from_rational(den.into());
    let c = |x: &FieldElem| to_int(&(x * &den));
    let plane = [c(h.k())?, c(h.m())?, c(h.n())?];
    if plane.iter().any(|e| e.a.abs().max(e.b.abs()) > 1 << 60) {
        return Err(HarnessError::Overflow(format!("plane {h}")));
    }
    Ok(plane)
}

/// Every normalized integral point of `curve` with height at most `t`.
///
/// `z` is forced by the plane; the point exists iff `z` is integral and the
/// right-hand side is a square in Z[zeta]. Exhaustive within the bound.
pub fn enumerate_curve_points_with(
    curve: &FamilyCurve,
    t: f64,
    exec: Execution,
) -> Result<Vec<HeightEntry>, HarnessError> {
    if curve.is_degenerate() {
        return Err(HarnessError::DegenerateCurve(curve.q0.to_string()));
    }
    let (a, b) = surface_coeffs(&curve.surface)?;
    let [k, m, n] = integral_plane(curve)?;
    let (af, bf) = (curve.surface.a().clone(), curve.surface.b().clone());
    let pairs = height_pairs(t);
    let pts = par::flat_map(exec, &pairs, |&(x, y)| {
        let mut out = Vec::new();
        let Some(z) = (-(k * x * x + m * y * y)).checked_div(&n) else { return out };
        if z.a.abs().max(z.b.abs()) < Z_FAST {
            if let Some(w) = rhs(a, b, x, y, z).sqrt() {
                emit(x, y, z, w, &mut out);
            }
        } else {
            let (xf, yf, zf) = (x.to_field(), y.to_field(), z.to_field());
            let value = zf.pow(3) + &af * &xf.pow(6) + &bf * &yf.pow(6);
            if let Some(w) = field_sqrt(&value).and_then(|w| to_int(&w).ok()) {
                emit(x, y, z, w, &mut out);
            }
        }
        out
    });
    Ok(sorted(pts, true, Source::CurveEnumeration))
}

/// Curve enumeration on the 49-surface.
pub fn enumerate_curve_points(q0: &crate::geometry::EPoint, t: f64) -> Result<Vec<HeightEntry>, HarnessError> {
    enumerate_curve_points_with(&family_curve(q0)?, t, Execution::default())
}

/// Radius of the `z` box: `(2 max(|A|, |B|) T^3)^(1/3) + 1`.
pub fn surface_z_bound(s: &Surface, t: f64) -> f64 {
    let c = crate::numbers::embed_complex(s.a()).norm().max(crate::numbers::embed_complex(s.b()).norm());
    (2.0 * c * t.powi(3)).cbrt() + 1.0
}

/// Brute-force search over pairs of height at most `t` and `z` in the
/// Eisenstein disc of radius `surface_z_bound`; `w` is tested exactly.
pub fn enumerate_surface_points_with(s: &Surface, t: f64, exec: Execution) -> Result<Vec<HeightEntry>, HarnessError> {
    let (a, b) = surface_coeffs(s)?;
    let r = surface_z_bound(s, t);
    let zs = elements_with_norm_at_most((r * r).floor().to_i128().unwrap_or(0));
    let pairs = height_pairs(t);
    let pts = par::flat_map(exec, &pairs, |&(x, y)| {
        let (x6, y6) = (a * x.pow(6), b * y.pow(6));
        let mut out = Vec::new();
        for &z in &zs {
            if let Some(w) = (z.pow(3) + x6 + y6).sqrt() {
                emit(x, y, z, w, &mut out);
            }
        }
        out
    });
    Ok(sorted(pts, false, Source::BruteForce))
}

/// Brute force on the 49-surface.
pub fn enumerate_surface_points(t: f64) -> Result<Vec<HeightEntry>, HarnessError> {
    enumerate_surface_points_with(&Surface::main(), t, Execution::default())
}
