//! The parametrizing cubic as an elliptic curve over Q: the change of
//! variables to Weierstrass form, the chord-tangent law, torsion tests and a
//! searchable certificate of positive rank.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::geometry::EPoint;
use crate::numbers::{bigint_cbrt, FieldElem, Rational};
use crate::par::{self, Execution};
use crate::poly::{MPoly, Monomial, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EllipticError {
    #[error("singular Weierstrass curve")]
    SingularCurve,
    #[error("{0} is not on the curve")]
    NotOnCurve(String),
    #[error("{0} is not on x^3 + y^3 = {1} z^3")]
    NotOnFermat(String, i64),
    #[error("{0} has coordinates outside Q")]
    NotRational(String),
    #[error("parameter must be positive")]
    BadParameter,
    #[error("the inverse substitution is undefined at X = 0")]
    InverseAtZero,
}

/// `Y^2 = X^3 + aX + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a: Rational,
    pub b: Rational,
}

impl WeierstrassCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self, EllipticError> {
        let disc = -Rational::from_integer(16.into())
            * (Rational::from_integer(4.into()) * &a * &a * &a + Rational::from_integer(27.into()) * &b * &b);
        if disc.is_zero() {
            return Err(EllipticError::SingularCurve);
        }
        Ok(WeierstrassCurve { a, b })
    }

    /// `Y^2 = X^3 - 432 m^2`.
    pub fn fermat(m: i64) -> Result<Self, EllipticError> {
        if m < 1 {
            return Err(EllipticError::BadParameter);
        }
        WeierstrassCurve::new(Rational::zero(), Rational::from_integer(BigInt::from(-432) * m * m))
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    pub fn point(&self, x: Rational, y: Rational) -> Result<ECPoint, EllipticError> {
        let p = ECPoint::Affine { x, y };
        if !self.contains(&p) {
            return Err(EllipticError::NotOnCurve(p.to_string()));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl ECPoint {
    pub fn from_ints(x: i64, y: i64) -> Self {
        ECPoint::Affine { x: Rational::from_integer(x.into()), y: Rational::from_integer(y.into()) }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => f.write_str("O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Serialize for ECPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn ec_neg(p: &ECPoint) -> ECPoint {
    match p {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine { x, y } => ECPoint::Affine { x: x.clone(), y: -y },
    }
}

pub fn ec_add(p: &ECPoint, q: &ECPoint, c: &WeierstrassCurve) -> ECPoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (ECPoint::Infinity, _) => return q.clone(),
        (_, ECPoint::Infinity) => return p.clone(),
        (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
    };
    let lambda = if x1 == x2 {
        if (y1 + y2).is_zero() {
            return ECPoint::Infinity;
        }
        (Rational::from_integer(3.into()) * x1 * x1 + &c.a) / (Rational::from_integer(2.into()) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &lambda * &lambda - x1 - x2;
    let y3 = lambda * (x1 - &x3) - y1;
    ECPoint::Affine { x: x3, y: y3 }
}

/// `n P` by double-and-add; negative `n` uses `-P`.
pub fn ec_multiply(n: i64, p: &ECPoint, c: &WeierstrassCurve) -> ECPoint {
    let base = if n < 0 { ec_neg(p) } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = ECPoint::Infinity;
    let mut pow = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = ec_add(&acc, &pow, c);
        }
        k >>= 1;
        if k > 0 {
            pow = ec_add(&pow, &pow, c);
        }
    }
    acc
}

/// Possible orders of rational torsion points (Mazur).
pub const MAZUR_ORDERS: [i64; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

/// `(n, nP)` for every order allowed by Mazur's theorem.
pub fn torsion_trace(p: &ECPoint, c: &WeierstrassCurve) -> Vec<(i64, ECPoint)> {
    MAZUR_ORDERS.iter().map(|&n| (n, ec_multiply(n, p, c))).collect()
}

pub fn is_torsion(p: &ECPoint, c: &WeierstrassCurve) -> bool {
    torsion_trace(p, c).iter().any(|(_, q)| q.is_infinity())
}

/// A projective point of `x^3 + y^3 = m z^3` over Q, stored primitive integral
/// with the first nonzero of `(z, x, y)` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FermatPoint {
    pub m: i64,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl FermatPoint {
    pub fn new(m: i64, x: Rational, y: Rational, z: Rational) -> Result<Self, EllipticError> {
        let den = x.denom().lcm(y.denom()).lcm(z.denom());
        let to_int = |q: &Rational| (q * Rational::from_integer(den.clone())).to_integer();
        let (mut x, mut y, mut z) = (to_int(&x), to_int(&y), to_int(&z));
        let g = x.gcd(&y).gcd(&z);
        if g.is_zero() {
            return Err(EllipticError::NotOnFermat("(0, 0, 0)".into(), m));
        }
        x /= &g;
        y /= &g;
        z /= &g;
        let lead = [&z, &x, &y].into_iter().find(|v| !v.is_zero()).expect("nonzero").is_negative();
        if lead {
            x = -x;
            y = -y;
            z = -z;
        }
        let p = FermatPoint { m, x, y, z };
        if &p.x * &p.x * &p.x + &p.y * &p.y * &p.y != BigInt::from(m) * &p.z * &p.z * &p.z {
            return Err(EllipticError::NotOnFermat(p.to_string(), m));
        }
        Ok(p)
    }

    pub fn from_ints(m: i64, x: i64, y: i64, z: i64) -> Result<Self, EllipticError> {
        let q = |v: i64| Rational::from_integer(v.into());
        FermatPoint::new(m, q(x), q(y), q(z))
    }
}

impl fmt::Display for FermatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Serialize for FermatPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `X = 12 m z / (x + y)`, `Y = 36 m (y - x) / (x + y)`; infinity when `x + y = 0`.
pub fn fermat_to_weierstrass(m: i64, p: &FermatPoint) -> ECPoint {
    let s = &p.x + &p.y;
    if s.is_zero() {
        return ECPoint::Infinity;
    }
    let m = BigInt::from(m);
    let s = Rational::from_integer(s);
    let x = Rational::from_integer(BigInt::from(12) * &m * &p.z) / &s;
    let y = Rational::from_integer(BigInt::from(36) * &m * (&p.y - &p.x)) / &s;
    ECPoint::Affine { x, y }
}

/// Inverse substitution with `z = 1`: `x + y = 12m / X`, `y - x = Y / (3X)`.
pub fn weierstrass_to_fermat(m: i64, p: &ECPoint) -> Result<FermatPoint, EllipticError> {
    match p {
        ECPoint::Infinity => FermatPoint::from_ints(m, 1, -1, 0),
        ECPoint::Affine { x, y } => {
            if x.is_zero() {
                return Err(EllipticError::InverseAtZero);
            }
            let sum = Rational::from_integer((12 * m).into()) / x;
            let diff = y / (Rational::from_integer(3.into()) * x);
            let two = Rational::from_integer(2.into());
            FermatPoint::new(m, (&sum - &diff) / &two, (&sum + &diff) / &two, Rational::from_integer(1.into()))
        }
    }
}

/// `(x0, y0, z0) -> (x0, y0, -z0/7)`.
pub fn e_to_fermat(q0: &EPoint) -> Result<FermatPoint, EllipticError> {
    let get = |c: &FieldElem| c.as_rational().cloned().ok_or_else(|| EllipticError::NotRational(q0.to_string()));
    let z = -get(&q0.z0)? / Rational::from_integer(7.into());
    FermatPoint::new(7, get(&q0.x0)?, get(&q0.y0)?, z)
}

/// `(x, y, z) -> (x, y, -7z)`.
pub fn fermat_to_e(p: &FermatPoint) -> Result<EPoint, EllipticError> {
    if p.m != 7 {
        return Err(EllipticError::NotOnFermat(p.to_string(), 7));
    }
    let f = |v: &BigInt| FieldElem::from_rational(Rational::from_integer(v.clone()));
    let z = f(&(BigInt::from(-7) * &p.z));
    EPoint::new(f(&p.x), f(&p.y), z).map_err(|_| EllipticError::NotOnFermat(p.to_string(), 7))
}

/// Reduces `f` modulo `m z^3 - x^3 - y^3` in `Q[x, y, z, m]`, rewriting `m z^3`
/// as `x^3 + y^3` until no monomial is divisible by `m z^3`.
fn reduce_mod_fermat(f: &MPoly<Rational>) -> MPoly<Rational> {
    let r = f.ring().clone();
    let lead = Monomial(vec![0, 0, 3, 1]);
    let tail = r.var::<Rational>("x").pow(3) + r.var::<Rational>("y").pow(3);
    let mut g = f.clone();
    loop {
        let hit = g.terms().find_map(|(m, c)| m.div(&lead).map(|q| (m.clone(), q, c.clone())));
        let Some((m, q, c)) = hit else { return g };
        let here = MPoly::from_terms(&r, [(m, c.clone())]);
        let replaced = MPoly::from_terms(&r, [(q, c)]) * tail.clone();
        g = g - here + replaced;
    }
}

/// `(x+y)^3 (Y^2 - X^3 + 432 m^2)` reduces to zero modulo the Fermat cubic,
/// with `X, Y` the substitution applied to a generic point.
pub fn weierstrass_identity_check() -> bool {
    let r = PolyRing::new(&["x", "y", "z", "m"]);
    let v = |n: &str| r.var::<Rational>(n);
    let (x, y, z, m) = (v("x"), v("y"), v("z"), v("m"));
    let c = |n: i64| r.constant(Rational::from_integer(n.into()));
    let s = &x + &y;
    // X (x+y) = 12 m z and Y (x+y) = 36 m (y - x)
    let xs = c(12) * &m * &z;
    let ys = c(36) * &m * (&y - &x);
    let n = ys.pow(2) * &s - xs.pow(3) + c(432) * m.pow(2) * s.pow(3);
    reduce_mod_fermat(&n).is_zero()
}

#[derive(Clone, Debug, Serialize)]
pub struct RankCertificate {
    pub m: i64,
    pub fermat: FermatPoint,
    pub weierstrass: ECPoint,
    /// `(n, nP)` for every Mazur order; none is the identity.
    pub trace: Vec<(i64, ECPoint)>,
}

/// Integral points of `x^3 + y^3 = m z^3` with `z >= 1`, `x + y != 0` and
/// `max(|x|, |y|, |z|) <= bound`, ordered by that maximum and then by
/// descending `(x, y, z)`.
pub fn fermat_points_in_box(m: i64, bound: i64, exec: Execution) -> Vec<FermatPoint> {
    let zs: Vec<i64> = (1..=bound).collect();
    let mut found = par::flat_map(exec, &zs, |&z| {
        let target = BigInt::from(m) * BigInt::from(z).pow(3);
        (-bound..=bound)
            .filter_map(|x| {
                let y3 = &target - BigInt::from(x).pow(3);
                let y = bigint_cbrt(&y3)?.to_i64()?;
                (y.abs() <= bound && x + y != 0 && x.gcd(&y).gcd(&z) == 1).then_some((x, y, z))
            })
            .collect()
    });
    found.sort_by(|a, b| {
        let h = |p: &(i64, i64, i64)| p.0.abs().max(p.1.abs()).max(p.2);
        h(a).cmp(&h(b)).then_with(|| b.cmp(a))
    });
    found.into_iter().map(|(x, y, z)| FermatPoint::from_ints(m, x, y, z).expect("on the cubic")).collect()
}

/// First non-torsion point in the search order, with its torsion trace.
/// `None` means nothing was found in the box, not that the rank is zero.
pub fn rank_ge_one_certificate(m: i64, search_bound: i64) -> Result<Option<RankCertificate>, EllipticError> {
    if m < 1 || search_bound < 1 {
        return Err(EllipticError::BadParameter);
    }
    let curve = WeierstrassCurve::fermat(m)?;
    for p in fermat_points_in_box(m, search_bound, Execution::default()) {
        let w = fermat_to_weierstrass(m, &p);
        let trace = torsion_trace(&w, &curve);
        if trace.iter().all(|(_, q)| !q.is_infinity()) {
            return Ok(Some(RankCertificate { m, fermat: p, weierstrass: w, trace }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyParameters {
    pub generator: ECPoint,
    pub points: Vec<EPoint>,
    /// Multiples skipped because the inverse substitution hit `X = 0`.
    pub skipped: Vec<i64>,
}

impl Serialize for EPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// E-points of `n P0` for `n = 1, 2, ...` until `count` are collected, `P0` the
/// certificate generator for `m = 7`.
pub fn family_parameters(count: usize) -> Result<FamilyParameters, EllipticError> {
    let cert = rank_ge_one_certificate(7, 10)?.expect("(2, -1, 1) lies in the box");
    let curve = WeierstrassCurve::fermat(7)?;
    let g = cert.weierstrass;
    let mut points = Vec::with_capacity(count);
    let mut skipped = Vec::new();
    let mut acc = ECPoint::Infinity;
    let mut n = 0;
    while points.len() < count {
        n += 1;
        acc = ec_add(&acc, &g, &curve);
        match weierstrass_to_fermat(7, &acc) {
            Ok(f) => points.push(fermat_to_e(&f)?),
            Err(EllipticError::InverseAtZero) => skipped.push(n),
            Err(e) => return Err(e),
        }
    }
    Ok(FamilyParameters { generator: g, points, skipped })
}
