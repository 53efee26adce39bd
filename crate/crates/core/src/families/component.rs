use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{involutions, FamilyError};
use crate::geometry::DualPlane;
use crate::numbers::{embed_complex, FieldElem, Rational};
use crate::poly::{MPoly, Monomial, PolyRing};
use crate::ring::Ring;

/// Ring `k[k, l, m, n]` of the dual space.
pub fn dual_ring() -> PolyRing {
    PolyRing::new(&["k", "l", "m", "n"])
}

/// A curve in the dual space cut out by a linear form and a sextic.
#[derive(Clone, Debug, PartialEq)]
pub struct DualComponent {
    pub name: String,
    pub linear: MPoly<FieldElem>,
    pub sextic: MPoly<FieldElem>,
}

fn homogeneous_degree(f: &MPoly<FieldElem>) -> Option<u32> {
    let mut it = f.terms().map(|(m, _)| m.degree());
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

impl DualComponent {
    pub fn new(name: &str, linear: MPoly<FieldElem>, sextic: MPoly<FieldElem>) -> Result<Self, FamilyError> {
        if linear.ring() != &dual_ring() || sextic.ring() != &dual_ring() {
            return Err(FamilyError::BadComponent(format!("{name}: wrong variables")));
        }
        if homogeneous_degree(&linear) != Some(1) || homogeneous_degree(&sextic) != Some(6) {
            return Err(FamilyError::BadComponent(format!("{name}: expected degrees 1 and 6")));
        }
        Ok(DualComponent { name: name.into(), linear, sextic })
    }

    pub fn equations(&self) -> [&MPoly<FieldElem>; 2] {
        [&self.linear, &self.sextic]
    }
}

/// Parses `name | linear | sextic` lines; `#` starts a comment.
pub fn parse_components(text: &str) -> Result<Vec<DualComponent>, FamilyError> {
    let r = dual_ring();
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, lin, sex] = parts[..] else {
            return Err(FamilyError::BadComponent(format!("line {}: expected three fields", no + 1)));
        };
        let parse = |s: &str| r.parse(s).map_err(|e| FamilyError::BadComponent(format!("line {}: {e}", no + 1)));
        out.push(DualComponent::new(name, parse(lin)?, parse(sex)?)?);
    }
    Ok(out)
}

pub const COMPONENTS_TEXT: &str = include_str!("../../fixtures/components.txt");

/// `S3..S6` for the unit surface.
pub fn builtin_components() -> Vec<DualComponent> {
    parse_components(COMPONENTS_TEXT).expect("valid fixture")
}

pub fn builtin_component(name: &str) -> Option<DualComponent> {
    builtin_components().into_iter().find(|c| c.name == name)
}

pub fn component_membership(h: &DualPlane, s: &DualComponent) -> bool {
    let p = h.coords();
    s.equations().iter().all(|f| f.eval(p).is_zero())
}

/// `|f(h)| / sum |c_a| |h|^a`, the worst over both equations.
pub fn component_residual(h: &[Complex64; 4], s: &DualComponent) -> f64 {
    s.equations().iter().map(|f| relative_residual(f, h)).fold(0.0, f64::max)
}

pub fn relative_residual(f: &MPoly<FieldElem>, h: &[Complex64; 4]) -> f64 {
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (m, c) in f.terms() {
        let mut t = embed_complex(c);
        let mut mag = t.norm();
        for (x, &e) in h.iter().zip(&m.0) {
            t *= x.powu(e);
            mag *= x.norm().powi(e as i32);
        }
        value += t;
        scale += mag;
    }
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

pub fn component_membership_numeric(h: &[Complex64; 4], s: &DualComponent, tol: f64) -> bool {
    component_residual(h, s) <= tol
}

fn rational_pow(a: &Rational, e: i64) -> Rational {
    let p = Ring::pow(a, e.unsigned_abs() as u32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Scale to an integral, content-one form with the leading coefficient's first
/// nonzero coordinate positive.
fn primitive_form(f: &MPoly<FieldElem>) -> MPoly<FieldElem> {
    let den = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(&c.denominator()));
    let g = f.scale(&FieldElem::from_rational(Rational::from_integer(den)));
    let content = g.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.a.numer()).gcd(c.b.numer()));
    let mut q = Rational::new(BigInt::one(), content);
    if g.leading_term().is_some_and(|(_, c)| !c.is_positive()) {
        q = -q;
    }
    g.scale(&FieldElem::from_rational(q))
}

fn scale_poly(f: &MPoly<FieldElem>, a: &Rational) -> Result<MPoly<FieldElem>, FamilyError> {
    let d = |m: &Monomial| (m.0[0] + m.0[1] + m.0[2]) as i64;
    let dmin = f.terms().map(|(m, _)| d(m)).min().unwrap_or(0);
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let shift = d(m) - dmin;
        if shift % 3 != 0 {
            return Err(FamilyError::BadScale(format!("term {m:?} breaks the cube grading")));
        }
        terms.push((m.clone(), c.scale(&rational_pow(a, -shift / 3))));
    }
    Ok(primitive_form(&MPoly::from_terms(f.ring(), terms)))
}

/// Component for `w^2 = z^3 + A(x^6 + y^6)` obtained from the unit-surface one
/// by `(k, l, m) -> alpha (k, l, m)`, `n -> n`, with `alpha^3 = 1/A`.
pub fn scale_component(s: &DualComponent, a: &Rational) -> Result<DualComponent, FamilyError> {
    if Zero::is_zero(a) {
        return Err(FamilyError::BadScale("A = 0".into()));
    }
    let name = if a.is_one() { s.name.clone() } else { format!("{}[A={a}]", s.name) };
    DualComponent::new(&name, scale_poly(&s.linear, a)?, scale_poly(&s.sextic, a)?)
}

/// `a^4 + b^4 + c^4 - 2a^2b^2 - 2a^2c^2 - 2b^2c^2 = -(a+b+c)(-a+b+c)(a-b+c)(a+b-c)`,
/// and the `S3` sextic at `(X^2, 0, Z^2, W^2)` is the left side at
/// `(a, b, c) = (X^3, Z^3, W^3)`. Hence every iota3 plane of the unit surface
/// lies on `S3`.
pub fn iota3_identity_check() -> bool {
    let r = PolyRing::new(&["a", "b", "c"]);
    let (a, b, c) = (r.var::<Rational>("a"), r.var::<Rational>("b"), r.var::<Rational>("c"));
    let two = r.constant(Rational::from_integer(2.into()));
    let (a2, b2, c2) = (a.pow(2), b.pow(2), c.pow(2));
    let quartic = a2.pow(2) + b2.pow(2) + c2.pow(2) - &two * &a2 * &b2 - &two * &a2 * &c2 - &two * &b2 * &c2;
    let product = -((&a + &b + &c) * (-&a + &b + &c) * (&a - &b + &c) * (&a + &b - &c));
    if quartic != product {
        return false;
    }
    let Some(s3) = builtin_component("S3") else { return false };
    let xr = PolyRing::new(&["X", "Y", "Z", "W"]);
    let v = |n: &str| xr.var::<FieldElem>(n);
    let plane = s3
        .sextic
        .subst(&[("k", v("X").pow(2)), ("l", xr.zero()), ("m", v("Z").pow(2)), ("n", v("W").pow(2))])
        .expect("same ring");
    let cubes = quartic
        .to_field()
        .subst(&[("a", v("X").pow(3)), ("b", v("Z").pow(3)), ("c", v("W").pow(3))])
        .expect("same ring");
    plane == cubes && s3.linear == dual_ring().var("l")
}

/// The involution whose planes are expected on the component.
pub fn component_involution(name: &str) -> Option<super::Involution> {
    involutions().into_iter().find(|i| i.component == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_parses() {
        let cs = builtin_components();
        let names: Vec<&str> = cs.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["S3", "S4", "S5", "S6"]);
        assert!(parse_components("S | k | k^5").is_err());
        assert!(parse_components("S | k").is_err());
    }

    #[test]
    fn exact_membership() {
        let s3 = builtin_component("S3").unwrap();
        assert!(component_membership(&DualPlane::from_ints(1, 0, 1, 0).unwrap(), &s3));
        let h = DualPlane::from_ints(4, 0, 1, 1).unwrap();
        assert!(!component_membership(&h, &s3));
        assert_eq!(s3.sextic.eval(h.coords()), FieldElem::from(3840));
    }

    #[test]
    fn scaling() {
        let s3 = builtin_component("S3").unwrap();
        let scaled = scale_component(&s3, &Rational::from_integer(49.into())).unwrap();
        let expect = dual_ring().parse("k^6 - 2*k^3*m^3 + m^6 - 98*(k^3 + m^3)*n^3 + 2401*n^6").unwrap();
        assert_eq!(scaled.sextic, expect);
        assert_eq!(scaled.linear, dual_ring().var("l"));
        assert!(component_membership(&DualPlane::from_ints(4, 0, 1, 1).unwrap(), &scaled));
        assert_eq!(scale_component(&s3, &<Rational as One>::one()).unwrap(), s3);
        for c in builtin_components() {
            let sc = scale_component(&c, &Rational::from_integer(7.into())).unwrap();
            assert_eq!(homogeneous_degree(&sc.sextic), Some(6));
        }
        assert!(scale_component(&s3, &<Rational as Zero>::zero()).is_err());
    }

    #[test]
    fn iota3_identity() {
        assert!(iota3_identity_check());
    }
}
