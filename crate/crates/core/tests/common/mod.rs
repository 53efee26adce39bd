//! Randomized law checks shared by the property tests and the acceptance gate.

#![allow(dead_code)]

use dp1_core::elliptic::{ec_add, ec_multiply, ec_neg, ECPoint, WeierstrassCurve};
use dp1_core::numbers::{embed_complex, field_sqrt, field_sqrt_by_rounding, rat, FieldElem, Rational};
use dp1_core::poly::{Monomial, UPoly};
use dp1_core::ring::Ring;
use dp1_core::{MPoly, PolyRing};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 512;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=25).prop_map(|(n, d)| rat(n, d))
}

pub fn field_elem() -> impl Strategy<Value = FieldElem> {
    (rational(), rational()).prop_map(|(a, b)| FieldElem::new(a, b))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(field_elem(), field_elem(), field_elem()), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &FieldElem::zero(), a.clone());
        prop_assert_eq!(&a * &FieldElem::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), FieldElem::one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
        prop_assert!(close(embed_complex(&(&a * &b)), embed_complex(&a) * embed_complex(&b)));
        let sq = &a * &a;
        let r = field_sqrt(&sq).ok_or_else(|| TestCaseError::fail("square without root"))?;
        prop_assert!(r == a || r == -a.clone());
        prop_assert_eq!(field_sqrt_by_rounding(&sq).map(|x| x.pow(2)), Some(sq));
        Ok(())
    }))
}

fn monomials(nvars: usize, weights: &[u32], d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, w: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        for e in 0..=left / w[i] {
            cur.push(e);
            go(i + 1, left - e * w[i], w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, &weights[..nvars], &mut Vec::new(), &mut out);
    out
}

/// `sum w_i x_i df/dx_i = d f` for weighted homogeneous `f`, on both the
/// standard grading and the P(1,1,2,3) grading.
pub fn euler_identity(cases: u32) -> Result<(), String> {
    let strat = (1u32..=6, 0usize..2, proptest::collection::vec(field_elem(), 40));
    report(runner(cases).run(&strat, |(d, grading, coeffs)| {
        let (ring, weights): (PolyRing, Vec<u32>) = if grading == 0 {
            (PolyRing::new(&["x", "y", "z"]), vec![1, 1, 1])
        } else {
            (PolyRing::new(&["x", "y", "z", "w"]), vec![1, 1, 2, 3])
        };
        let ms = monomials(ring.len(), &weights, d);
        let f = MPoly::from_terms(&ring, ms.into_iter().zip(coeffs.into_iter().cycle()));
        let lhs = (0..ring.len()).fold(ring.zero(), |acc: MPoly<FieldElem>, i| {
            acc + (ring.var_at(i) * f.partial(i)).scale(&FieldElem::from(weights[i] as i64))
        });
        prop_assert_eq!(lhs, f.scale(&FieldElem::from(d as i64)));
        Ok(())
    }))
}

fn upoly() -> impl Strategy<Value = UPoly<Rational>> {
    proptest::collection::vec(-6i64..=6, 2..=3)
        .prop_map(|c| UPoly::new(c.into_iter().map(Rational::from_int).collect()))
        .prop_filter("nonconstant", |p| p.degree().unwrap_or(0) >= 1)
}

/// Yun's decomposition multiplies back to the input, with squarefree,
/// pairwise coprime factors.
pub fn yun_reconstruction(cases: u32) -> Result<(), String> {
    let strat = (proptest::collection::vec((upoly(), 1u32..=3), 1..=3), 1i64..=9);
    report(runner(cases).run(&strat, |(parts, c)| {
        let f = parts
            .iter()
            .fold(UPoly::constant(Rational::from_int(c)), |acc, (g, e)| acc.mul(&g.pow(*e)));
        let dec = f.squarefree().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(dec.reconstruct(), f.clone());
        for (i, (g, _)) in dec.factors.iter().enumerate() {
            prop_assert_eq!(g.gcd(&g.derivative()).unwrap().degree(), Some(0));
            for (h, _) in &dec.factors[i + 1..] {
                prop_assert_eq!(g.gcd(h).unwrap().degree(), Some(0));
            }
        }
        let total: u32 = dec.multiplicities().iter().sum();
        prop_assert_eq!(total as usize, f.degree().unwrap());
        Ok(())
    }))
}

/// A curve `y^2 = x^3 + a x + b` through two random points, or `None`.
fn curve_through(p: (Rational, Rational), q: (Rational, Rational)) -> Option<WeierstrassCurve> {
    if p.0 == q.0 {
        return None;
    }
    let c = |(x, y): &(Rational, Rational)| y * y - x * x * x;
    let a = (c(&p) - c(&q)) / (&p.0 - &q.0);
    let b = c(&p) - &a * &p.0;
    WeierstrassCurve::new(a, b).ok()
}

pub fn group_law(cases: u32) -> Result<(), String> {
    let pt = || (rational(), rational());
    report(runner(cases).run(&(pt(), pt(), -3i64..=3, -3i64..=3), |(p, q, m, n)| {
        let Some(e) = curve_through(p.clone(), q.clone()) else { return Ok(()) };
        let p = e.point(p.0, p.1).map_err(|x| TestCaseError::fail(x.to_string()))?;
        let q = e.point(q.0, q.1).map_err(|x| TestCaseError::fail(x.to_string()))?;
        let r = ec_add(&ec_multiply(2, &p, &e), &ec_neg(&q), &e);
        let add = |a: &ECPoint, b: &ECPoint| ec_add(a, b, &e);
        prop_assert!(e.contains(&add(&p, &q)));
        prop_assert_eq!(add(&p, &q), add(&q, &p));
        prop_assert_eq!(add(&add(&p, &q), &r), add(&p, &add(&q, &r)));
        prop_assert_eq!(add(&p, &ECPoint::Infinity), p.clone());
        prop_assert!(add(&p, &ec_neg(&p)).is_infinity());
        prop_assert_eq!(ec_multiply(m + n, &p, &e), add(&ec_multiply(m, &p, &e), &ec_multiply(n, &p, &e)));
        Ok(())
    }))
}

/// Evaluation at a point and substitution are ring homomorphisms.
pub fn ring_homomorphism(cases: u32) -> Result<(), String> {
    let ring = PolyRing::new(&["x", "y"]);
    let poly = move || {
        proptest::collection::vec(((0u32..=3, 0u32..=3), field_elem()), 1..=5).prop_map({
            let ring = ring.clone();
            move |ts| MPoly::from_terms(&ring, ts.into_iter().map(|((i, j), c)| (Monomial(vec![i, j]), c)))
        })
    };
    let strat = (poly(), poly(), field_elem(), field_elem(), poly());
    report(runner(cases).run(&strat, |(f, g, a, b, h)| {
        let pt = [a.clone(), b.clone()];
        prop_assert_eq!((f.clone() + g.clone()).eval(&pt), &f.eval(&pt) + &g.eval(&pt));
        prop_assert_eq!((f.clone() * g.clone()).eval(&pt), &f.eval(&pt) * &g.eval(&pt));
        let sub = |p: &MPoly<FieldElem>| p.subst(&[("x", h.clone())]).unwrap();
        prop_assert_eq!(sub(&(f.clone() * g.clone())), sub(&f) * sub(&g));
        prop_assert_eq!(sub(&(f.clone() + g.clone())), sub(&f) + sub(&g));
        let fc = f.map_coeffs(embed_complex);
        let pc = [embed_complex(&a), embed_complex(&b)];
        prop_assert!(close(fc.eval(&pc), embed_complex(&f.eval(&pt))));
        Ok(())
    }))
}

pub const SUITES: [(&str, fn(u32) -> Result<(), String>); 5] = [
    ("field axioms", field_axioms),
    ("Euler identity", euler_identity),
    ("Yun reconstruction", yun_reconstruction),
    ("group law", group_law),
    ("ring homomorphism", ring_homomorphism),
];
