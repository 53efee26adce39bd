//! Second routes to the same answers.

mod common;

use dp1_core::elliptic::{
    e_to_fermat, family_parameters, fermat_to_e, fermat_to_weierstrass, weierstrass_to_fermat,
};
use dp1_core::families::verify_bitangency_numeric;
use dp1_core::geometry::{branch_sextic, family_plane, tangency_profile, Surface};
use dp1_core::harness::{enumerate_curve_points, IntegralPoint};
use dp1_core::numbers::{embed_complex, field_sqrt, EisensteinInt, FieldElem, Rational};
use dp1_core::picard::{kernel, QMatrix};
use dp1_core::poly::complex_roots;
use dp1_core::ring::Ring;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use proptest::prelude::*;

/// Fraction-free Gaussian elimination over the integers.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..nc {
        let Some(p) = (rank..nr).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                m[r][c] = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(common::CASES))]

    #[test]
    fn rref_rank_matches_bareiss(rows in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
    })) {
        let m = QMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(m.rank(), bareiss_rank(&rows));
        let ker = kernel(&m);
        prop_assert_eq!(ker.len(), m.cols() - m.rank());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn integral_square_roots_agree(a in -300i128..=300, b in -300i128..=300) {
        let x = EisensteinInt::new(a, b);
        let sq = x * x;
        let r = sq.sqrt().unwrap();
        prop_assert!(r == x || r == -x);
        let f = field_sqrt(&sq.to_field()).unwrap();
        prop_assert!(f == x.to_field() || f == -x.to_field());
        let shifted = sq + EisensteinInt::new(1, 0);
        prop_assert_eq!(shifted.sqrt().is_some(), field_sqrt(&shifted.to_field()).is_some());
    }

    #[test]
    fn clustered_roots_recover_multiplicities(
        roots in proptest::collection::vec(((-1.5f64..1.5, -1.5f64..1.5), 1u32..=3), 1..=3)
    ) {
        // A double root splits by about sqrt(eps * |f| / |f''|), and |f''| there
        // shrinks with the distance to the other roots; keep them well apart.
        for (i, ((a, b), _)) in roots.iter().enumerate() {
            for ((c, d), _) in &roots[i + 1..] {
                prop_assume!(((a - c).powi(2) + (b - d).powi(2)).sqrt() > 1.0);
            }
        }
        // sextics, as in the tangency profiles
        prop_assume!(roots.iter().map(|(_, m)| m).sum::<u32>() <= 6);
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for ((re, im), m) in &roots {
            for _ in 0..*m {
                let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * Complex64::new(*re, *im);
                }
                coeffs = next;
            }
        }
        // a triple root splits by about eps^(1/3) in double precision
        let tol = if roots.iter().any(|(_, m)| *m == 3) { 1e-4 } else { 1e-6 };
        let found = complex_roots(&coeffs, tol).unwrap();
        let mut got: Vec<u32> = found.iter().map(|c| c.multiplicity).collect();
        let mut want: Vec<u32> = roots.iter().map(|(_, m)| *m).collect();
        got.sort_unstable();
        want.sort_unstable();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn elliptic_maps_round_trip() {
    let params = family_parameters(8).unwrap();
    for q in &params.points {
        let f = e_to_fermat(q).unwrap();
        assert_eq!(&fermat_to_e(&f).unwrap(), q);
        let w = fermat_to_weierstrass(7, &f);
        assert_eq!(weierstrass_to_fermat(7, &w).unwrap(), f);
    }
}

#[test]
fn exact_and_numeric_profiles_agree() {
    let s = Surface::main();
    for q in &family_parameters(6).unwrap().points {
        let h = family_plane(q, &s).unwrap();
        let exact = tangency_profile(&branch_sextic(&h, &s).unwrap()).unwrap();
        let hc: [Complex64; 4] = std::array::from_fn(|i| embed_complex(&h.normalized().coords()[i]));
        // later parameters have enormous coordinates; skip those f64 cannot hold
        if hc.iter().any(|c| !c.norm().is_finite() || c.norm() > 1e12) {
            continue;
        }
        let numeric = verify_bitangency_numeric(&hc, &s, 1e-6).unwrap();
        assert_eq!(exact, numeric, "{q}");
    }
}

/// Naive curve search over the field: for every pair, solve for `z` rationally
/// and take an exact square root, with no integrality shortcut.
#[test]
fn curve_enumeration_matches_field_search() {
    let q = family_parameters(1).unwrap().points.remove(0);
    let t = 9.0;
    let fast: Vec<IntegralPoint> = enumerate_curve_points(&q, t).unwrap().into_iter().map(|h| h.point).collect();
    let s = Surface::main();
    let mut slow = std::collections::BTreeSet::new();
    let r = 4i128;
    for (xa, xb, ya, yb) in itertools(r) {
        let (x, y) = (EisensteinInt::new(xa, xb), EisensteinInt::new(ya, yb));
        if x.is_zero() && y.is_zero() || x.norm().max(y.norm()) as f64 > t {
            continue;
        }
        let (xf, yf) = (x.to_field(), y.to_field());
        let z = -(s.a() * &q.x0.pow(2) * xf.pow(2) + s.b() * &q.y0.pow(2) * yf.pow(2)) / q.z0.pow(2);
        if !z.a.is_integer() || !z.b.is_integer() {
            continue;
        }
        let Some(w) = field_sqrt(&s.branch_value(&xf, &yf, &z)) else { continue };
        let ei = |v: &FieldElem| EisensteinInt::try_from_field(v).unwrap();
        for w in [w.clone(), -w] {
            let p = IntegralPoint { x, y, z: ei(&z), w: ei(&w) };
            if p.is_normalized() {
                slow.insert(p);
            }
        }
    }
    let fast: std::collections::BTreeSet<_> = fast.into_iter().collect();
    assert_eq!(fast, slow);
    assert!(fast.len() > 10);
}

fn itertools(r: i128) -> impl Iterator<Item = (i128, i128, i128, i128)> {
    (-r..=r).flat_map(move |a| {
        (-r..=r).flat_map(move |b| (-r..=r).flat_map(move |c| (-r..=r).map(move |d| (a, b, c, d))))
    })
}

#[test]
fn family_plane_is_projective() {
    let half = Rational::new(1.into(), 2.into());
    let q = family_parameters(1).unwrap().points.remove(0);
    let scaled = dp1_core::geometry::EPoint::new(q.x0.scale(&half), q.y0.scale(&half), q.z0.scale(&half)).unwrap();
    assert_eq!(family_plane(&scaled, &Surface::main()).unwrap(), family_plane(&q, &Surface::main()).unwrap());
}
