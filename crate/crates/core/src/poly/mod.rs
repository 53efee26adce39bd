//! Sparse multivariate polynomials with weighted grading, plus the univariate
//! machinery (gcd, Yun decomposition, complex roots) the tangency checks need.

mod parse;
mod roots;
mod upoly;

pub use parse::{parse_constant, ParseError};
pub use roots::{complex_roots, complex_roots_of, RootCluster, CLUSTER_RADIUS};
pub use upoly::{SquarefreeDecomposition, UPoly};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;

use crate::numbers::{FieldElem, Rational};
use crate::ring::{ExactSqrt, Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable orders differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("root finder did not converge on {0}")]
    NonConvergence(String),
    #[error("weights must be positive and match the variable count")]
    BadWeights,
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Positive integer weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(w: Vec<u32>) -> Result<Self, PolyError> {
        if w.iter().any(|&x| x == 0) {
            return Err(PolyError::BadWeights);
        }
        Ok(WeightVector(w))
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// An ordered list of variable names. Polynomials only combine within one ring.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        PolyRing { vars: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero<C: Ring>(&self) -> MPoly<C> {
        MPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant<C: Ring>(&self, c: C) -> MPoly<C> {
        MPoly::from_terms(self, [(Monomial::one(self.len()), c)])
    }

    pub fn one<C: Ring>(&self) -> MPoly<C> {
        self.constant(C::one())
    }

    /// The generator for `name`. Panics on an unknown name; see `try_var`.
    pub fn var<C: Ring>(&self, name: &str) -> MPoly<C> {
        self.try_var(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_var<C: Ring>(&self, name: &str) -> Result<MPoly<C>, PolyError> {
        let i = self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(self.var_at(i))
    }

    pub fn var_at<C: Ring>(&self, i: usize) -> MPoly<C> {
        let mut e = vec![0; self.len()];
        e[i] = 1;
        MPoly::from_terms(self, [(Monomial(e), C::one())])
    }

    /// Parses the text format (`w^2 - z^3 - 49*x^6`, `zeta` as the field generator).
    pub fn parse(&self, text: &str) -> Result<MPoly<FieldElem>, ParseError> {
        parse::parse_poly(self, text)
    }
}

/// A multivariate polynomial: nonzero coefficients keyed by exponent vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C> {
    ring: PolyRing,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> MPoly<C> {
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(ring: &PolyRing, it: I) -> Self {
        let mut p = ring.zero();
        for (m, c) in it {
            assert_eq!(m.0.len(), ring.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant value when the polynomial has no variables occurring.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Indices of variables that occur with a positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.ring.len()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    pub fn check_ring(&self, o: &MPoly<C>) -> Result<(), PolyError> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch(self.ring.vars().to_vec(), o.ring.vars().to_vec()))
        }
    }

    fn assert_ring(&self, o: &MPoly<C>) {
        if let Err(e) = self.check_ring(o) {
            panic!("{e}");
        }
    }

    pub fn try_add(&self, o: &MPoly<C>) -> Result<MPoly<C>, PolyError> {
        self.check_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &MPoly<C>) -> Result<MPoly<C>, PolyError> {
        self.check_ring(o)?;
        let mut r = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> MPoly<C> {
        MPoly::from_terms(&self.ring, self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())))
    }

    pub fn pow(&self, e: u32) -> MPoly<C> {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Weighted degree when every term has the same one.
    pub fn wdeg(&self, w: &WeightVector) -> Result<Option<u32>, PolyError> {
        if w.len() != self.ring.len() {
            return Err(PolyError::BadWeights);
        }
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.0.iter().zip(w.weights()).map(|(e, w)| e * w).sum::<u32>());
        let first = degs.next().unwrap_or(0);
        Ok(degs.all(|d| d == first).then_some(first))
    }

    pub fn partial(&self, var: usize) -> MPoly<C> {
        MPoly::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] -= 1;
                (Monomial(e), c.clone() * C::from_int(k as i64))
            }),
        )
    }

    pub fn partial_by_name(&self, name: &str) -> Result<MPoly<C>, PolyError> {
        let i = self.ring.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(self.partial(i))
    }

    /// Composition with `var -> image`. Images live in a common target ring;
    /// variables without an assignment map to the same-named variable there.
    pub fn subst(&self, assignment: &[(&str, MPoly<C>)]) -> Result<MPoly<C>, PolyError> {
        let target = match assignment.first() {
            Some((_, p)) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for (name, p) in assignment {
            if p.ring != target {
                return Err(PolyError::VariableMismatch(target.vars().to_vec(), p.ring.vars().to_vec()));
            }
            if self.ring.index_of(name).is_none() {
                return Err(PolyError::UnknownVariable(name.to_string()));
            }
        }
        let mut images = Vec::with_capacity(self.ring.len());
        let occurring = self.occurring_vars();
        for (i, name) in self.ring.vars().iter().enumerate() {
            let img = match assignment.iter().find(|(n, _)| n == name) {
                Some((_, p)) => Some(p.clone()),
                None if occurring.contains(&i) => Some(
                    target.try_var(name).map_err(|_| PolyError::MissingAssignment(name.clone()))?,
                ),
                None => None,
            };
            images.push(img);
        }
        let mut cache: Vec<Vec<MPoly<C>>> = vec![Vec::new(); images.len()];
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().expect("occurring variable has an image");
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(target.one());
                }
                while powers.len() <= e as usize {
                    let next = powers.last().expect("nonempty") * img;
                    powers.push(next);
                }
                t = &t * &powers[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.ring.len(), "point dimension mismatch");
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow(e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(&self.ring, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Same polynomial over a ring with the variables renamed or extended.
    /// `map[i]` is the target index of source variable `i`.
    pub fn relabel(&self, target: &PolyRing, map: &[usize]) -> MPoly<C> {
        MPoly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (i, &k) in m.0.iter().enumerate() {
                    e[map[i]] += k;
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Binary form `f(x, y)` to `f(x, 1)`.
    pub fn dehomogenize(&self, var: usize, set_one: usize) -> Result<UPoly<C>, PolyError> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| e > 0 && i != var && i != set_one) {
                return Err(PolyError::NotUnivariate(format!("{:?}", self.ring.vars())));
            }
            let d = m.0[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, C::zero());
            }
            coeffs[d] = coeffs[d].clone() + c.clone();
        }
        Ok(UPoly::new(coeffs))
    }

    /// Dense form in the single occurring variable, if there is one.
    pub fn to_univariate(&self) -> Result<(Option<usize>, UPoly<C>), PolyError> {
        let occ = self.occurring_vars();
        match occ.as_slice() {
            [] => Ok((None, UPoly::new(vec![self.as_constant().unwrap_or_else(C::zero)]))),
            [v] => {
                let mut coeffs = vec![C::zero(); self.degree_in(*v).unwrap_or(0) as usize + 1];
                for (m, c) in &self.terms {
                    coeffs[m.0[*v] as usize] = c.clone();
                }
                Ok((Some(*v), UPoly::new(coeffs)))
            }
            _ => Err(PolyError::NotUnivariate(format!("{:?}", self.ring.vars()))),
        }
    }

    pub fn from_univariate(ring: &PolyRing, var: usize, p: &UPoly<C>) -> MPoly<C> {
        MPoly::from_terms(
            ring,
            p.coeffs().iter().enumerate().map(|(d, c)| {
                let mut e = vec![0; ring.len()];
                e[var] = d as u32;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// True when `o = c * self` for some nonzero constant `c`.
    pub fn is_proportional(&self, o: &MPoly<C>) -> bool
    where
        C: Field,
    {
        if self.ring != o.ring || self.terms.len() != o.terms.len() {
            return false;
        }
        match (self.leading_term(), o.leading_term()) {
            (None, None) => true,
            (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => {
                let ratio = c2.clone() / c1.clone();
                self.scale(&ratio) == *o
            }
            _ => false,
        }
    }
}

impl<C: Field> MPoly<C> {
    pub fn monic(&self) -> MPoly<C> {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }
}

impl<C: ExactSqrt> MPoly<C> {
    /// A square root `g` with `g*g == self`, extracted term by term in
    /// graded-lex order, or `None` when `self` is not a square.
    pub fn is_perfect_square(&self) -> Option<MPoly<C>> {
        let (lm, lc) = match self.leading_term() {
            None => return Some(self.clone()),
            Some(t) => t,
        };
        let half = Monomial(
            lm.0.iter().map(|e| (e % 2 == 0).then_some(e / 2)).collect::<Option<Vec<_>>>()?,
        );
        let root_c = lc.sqrt()?;
        let two_lc = root_c.clone() + root_c.clone();
        let mut g = MPoly::from_terms(&self.ring, [(half.clone(), root_c)]);
        let mut last = half.clone();
        loop {
            let r = self - &(&g * &g);
            let (rm, rc) = match r.leading_term() {
                None => return Some(g),
                Some(t) => t,
            };
            let m = rm.div(&half)?;
            if m >= last {
                return None;
            }
            let c = rc.clone() / two_lc.clone();
            g = &g + &MPoly::from_terms(&self.ring, [(m.clone(), c)]);
            last = m;
        }
    }
}

impl MPoly<FieldElem> {
    pub fn to_rational(&self) -> Option<MPoly<Rational>> {
        self.terms
            .values()
            .all(FieldElem::is_rational)
            .then(|| self.map_coeffs(|c| c.a.clone()))
    }
}

impl MPoly<Rational> {
    pub fn to_field(&self) -> MPoly<FieldElem> {
        self.map_coeffs(|c| FieldElem::from_rational(c.clone()))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, C: Ring> $tr<&'a MPoly<C>> for &'a MPoly<C> {
            type Output = MPoly<C>;
            fn $m(self, o: &MPoly<C>) -> MPoly<C> {
                self.assert_ring(o);
                $body(self, o)
            }
        }
        impl<C: Ring> $tr<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $m(self, o: MPoly<C>) -> MPoly<C> {
                (&self).$m(&o)
            }
        }
        impl<'a, C: Ring> $tr<&'a MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $m(self, o: &MPoly<C>) -> MPoly<C> {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add, |a: &MPoly<C>, b: &MPoly<C>| a.try_add(b).expect("checked ring"));
binop!(Sub, sub, |a: &MPoly<C>, b: &MPoly<C>| a.try_add(&-b).expect("checked ring"));
binop!(Mul, mul, |a: &MPoly<C>, b: &MPoly<C>| a.try_mul(b).expect("checked ring"));

impl<C: Ring> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Ring> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

/// How a coefficient prints in front of a monomial.
pub enum CoeffRepr {
    /// Magnitude text and whether the coefficient is negative.
    Signed { negative: bool, text: String },
    /// Needs parentheses, e.g. `(1+zeta)`.
    Compound(String),
}

pub trait CoeffFmt {
    fn repr(&self) -> CoeffRepr;
}

fn rational_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl CoeffFmt for Rational {
    fn repr(&self) -> CoeffRepr {
        CoeffRepr::Signed { negative: self.is_negative(), text: rational_text(&self.abs()) }
    }
}

impl CoeffFmt for FieldElem {
    fn repr(&self) -> CoeffRepr {
        if Ring::is_zero(&self.b) {
            self.a.repr()
        } else if Ring::is_zero(&self.a) {
            let mag = self.b.abs();
            let text = if mag == Rational::one() { "zeta".to_string() } else { format!("{}*zeta", rational_text(&mag)) };
            CoeffRepr::Signed { negative: self.b.is_negative(), text }
        } else {
            CoeffRepr::Compound(self.to_string())
        }
    }
}

impl<C: Ring + CoeffFmt> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(self.ring.vars())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let (negative, body) = match c.repr() {
                CoeffRepr::Signed { negative, text } => {
                    let body = match (text.as_str(), mono.is_empty()) {
                        (_, true) => text,
                        ("1", false) => mono,
                        (_, false) => format!("{text}*{mono}"),
                    };
                    (negative, body)
                }
                CoeffRepr::Compound(text) => {
                    let body = if mono.is_empty() { format!("({text})") } else { format!("({text})*{mono}") };
                    (false, body)
                }
            };
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring4() -> PolyRing {
        PolyRing::new(&["x", "y", "z", "w"])
    }

    fn q(p: &MPoly<FieldElem>) -> MPoly<Rational> {
        p.to_rational().unwrap()
    }

    #[test]
    fn weighted_degrees() {
        let r = ring4();
        let s = r.parse("w^2 - z^3 - 49*x^6 - 49*y^6").unwrap();
        let w = WeightVector::new(vec![1, 1, 2, 3]).unwrap();
        assert_eq!(s.wdeg(&w).unwrap(), Some(6));
        let r2 = PolyRing::new(&["x", "y"]);
        let w2 = WeightVector::new(vec![1, 1]).unwrap();
        assert_eq!(r2.parse("x + y").unwrap().wdeg(&w2).unwrap(), Some(1));
        assert_eq!(r2.parse("x + y^2").unwrap().wdeg(&w2).unwrap(), None);
        assert!(WeightVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn substitution() {
        let r = PolyRing::new(&["x", "y", "z"]);
        let f = r.parse("z^3").unwrap();
        let img = r.parse("-4*x^2 - y^2").unwrap();
        let g = f.subst(&[("z", img.clone())]).unwrap();
        assert_eq!(g, img.pow(3));
        assert_eq!(g, r.parse("-64*x^6 - 48*x^4*y^2 - 12*x^2*y^4 - y^6").unwrap());
        assert_eq!(f.subst(&[]).unwrap(), f);
    }

    #[test]
    fn substitution_errors() {
        let r = PolyRing::new(&["x", "y"]);
        let other = PolyRing::new(&["s"]);
        let f = r.parse("x*y").unwrap();
        let e = f.subst(&[("x", other.var("s"))]).unwrap_err();
        assert_eq!(e, PolyError::MissingAssignment("y".into()));
        assert!(matches!(f.subst(&[("q", r.var("x"))]), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    #[should_panic(expected = "variable orders differ")]
    fn mixing_rings_panics() {
        let a: MPoly<Rational> = PolyRing::new(&["x", "y"]).var("x");
        let b: MPoly<Rational> = PolyRing::new(&["y", "x"]).var("x");
        let _ = &a + &b;
    }

    #[test]
    fn partials() {
        let r = ring4();
        let u = PolyRing::new(&["X", "Y", "Z", "W"]);
        assert_eq!(u.parse("X^3 + Z^3 + W^3").unwrap().partial(0), u.parse("3*X^2").unwrap());
        assert_eq!(u.parse("X*Z - Y^2").unwrap().partial(1), u.parse("-2*Y").unwrap());
        // weighted Euler identity
        let f = r.parse("w^2 - z^3 - 49*x^6 - 49*y^6").unwrap();
        let weights = [1, 1, 2, 3];
        let euler = (0..4).fold(r.zero::<FieldElem>(), |acc, i| {
            acc + f.partial(i) * r.var_at(i).scale(&FieldElem::from(weights[i] as i64))
        });
        assert_eq!(euler, f.scale(&FieldElem::from(6)));
    }

    #[test]
    fn perfect_squares() {
        let r = PolyRing::new(&["x0", "y0"]);
        let f = r.parse("x0^6 - 2*zeta*x0^3*y0^3 + (-1-zeta)*y0^6").unwrap();
        let g = f.is_perfect_square().unwrap();
        assert_eq!(g, r.parse("x0^3 - zeta*y0^3").unwrap());
        let r1 = PolyRing::new(&["x"]);
        assert_eq!(r1.parse("x^2 + 1").unwrap().is_perfect_square(), None);
        let r2 = PolyRing::new(&["x", "y", "x0", "y0"]);
        let h = r2.parse("y0*x^2 - x0*y^2").unwrap();
        let sq = q(&h.pow(2)).is_perfect_square().unwrap();
        assert!(sq == q(&h) || sq == -q(&h));
        // 2 is not a square in Q
        assert_eq!(q(&r1.parse("2*x^2").unwrap()).is_perfect_square(), None);
    }

    #[test]
    fn display_format() {
        let r = ring4();
        let s = r.parse("w^2 - z^3 - 49*x^6 - 49*y^6").unwrap();
        assert_eq!(s.to_string(), "-49*x^6 - 49*y^6 - z^3 + w^2");
        let r3 = PolyRing::new(&["k", "l", "m", "n"]);
        let p = r3.parse("k + (zeta+1)*m - 1/2").unwrap();
        assert_eq!(p.to_string(), "k + (1+zeta)*m - 1/2");
        assert_eq!(r3.parse(&p.to_string()).unwrap(), p);
        assert_eq!(r3.zero::<FieldElem>().to_string(), "0");
        assert_eq!(r3.parse("-zeta*l").unwrap().to_string(), "-zeta*l");
    }

    #[test]
    fn proportionality() {
        let r = PolyRing::new(&["x", "y"]);
        let a = r.parse("x^2 + 2*y^2").unwrap();
        assert!(a.is_proportional(&a.scale(&FieldElem::from_ints(3, 1))));
        assert!(!a.is_proportional(&r.parse("x^2 + y^2").unwrap()));
    }
}
