//! Acceptance gate: one line per criterion, with its measured time against the
//! pinned limit. The test fails if any criterion does.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use dp1_core::elliptic::{
    ec_multiply, family_parameters, fermat_to_weierstrass, rank_ge_one_certificate, ECPoint, FermatPoint,
    WeierstrassCurve, MAZUR_ORDERS,
};
use dp1_core::families::{builtin_component, component_membership, sample_component_points, scale_component};
use dp1_core::families::verify_bitangency_numeric;
use dp1_core::geometry::{
    adjunction_identity_check, binary_ring, branch_sextic, curve_point_smooth, family_curve, family_plane,
    on_surface, perfect_square_check, section_point, tangency_profile, DualPlane, EPoint, Surface, WPoint,
};
use dp1_core::harness::{enumerate_curve_points, enumerate_curve_points_with, enumerate_surface_points, exceptional_curves};
use dp1_core::numbers::{FieldElem, Rational};
use dp1_core::par::Execution;
use dp1_core::picard::picard_rank_check;
use dp1_core::ring::Ring;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn picard() -> Check {
    let c = picard_rank_check();
    let want: Vec<String> = [1, 1, 1, 1, 1, 1, 1, 1, -3].iter().map(|x: &i32| x.to_string()).collect();
    let neg: Vec<String> = [-1, -1, -1, -1, -1, -1, -1, -1, 3].iter().map(|x: &i32| x.to_string()).collect();
    ensure(c.rank == 1, format!("fixed dimension {}", c.rank))?;
    ensure(c.generator == want || c.generator == neg, format!("generator {:?}", c.generator))?;
    Ok(format!("dim 1, generator ({})", c.generator.join(",")))
}

fn identities() -> Check {
    ensure(adjunction_identity_check(), "four-variable identity")?;
    ensure(perfect_square_check(), "F = (x0^3 - zeta y0^3)^2")?;
    Ok("both identities expand exactly".into())
}

fn section() -> Check {
    let s = Surface::main();
    let q0 = EPoint::from_ints(2, -1, -7).map_err(err)?;
    let p = section_point(&q0).map_err(err)?;
    let z = FieldElem::zeta();
    let want = |w: i64| WPoint::p1123(-z.clone(), 2.into(), FieldElem::from(4) * &z, w.into()).unwrap();
    ensure(p == want(57) || p == want(-57), format!("section point {p}"))?;
    let params = family_parameters(20).map_err(err)?;
    for q in &params.points {
        let c = family_curve(q).map_err(err)?;
        let p = section_point(q).map_err(|e| format!("{q}: {e}"))?;
        ensure(on_surface(&p, &s).map_err(err)? && c.contains(&p).map_err(err)?, format!("{q}: off the curve"))?;
        ensure(curve_point_smooth(&c, &p).map_err(err)?, format!("{q}: singular"))?;
    }
    Ok(format!("{p}; 20 parameters smooth with exact sqrt"))
}

fn elliptic() -> Check {
    let e = WeierstrassCurve::fermat(7).map_err(err)?;
    let p = fermat_to_weierstrass(7, &FermatPoint::from_ints(7, 2, -1, 1).map_err(err)?);
    ensure(p == ECPoint::from_ints(84, -756), format!("P = {p}"))?;
    ensure(ec_multiply(2, &p, &e) == ECPoint::from_ints(28, -28), "2P")?;
    ensure(ec_multiply(4, &p, &e) == ECPoint::from_ints(1708, 70588), "4P")?;
    for n in MAZUR_ORDERS {
        ensure(!ec_multiply(n, &p, &e).is_infinity(), format!("{n}P = O"))?;
    }
    let cert = rank_ge_one_certificate(7, 10).map_err(err)?.ok_or("no certificate")?;
    Ok(format!("rank >= 1 certified by {}", cert.weierstrass))
}

fn bitangency() -> Check {
    let s = Surface::main();
    let params = family_parameters(20).map_err(err)?;
    let mut planes: Vec<DualPlane> = Vec::new();
    for q in &params.points {
        let h = family_plane(q, &s).map_err(err)?;
        let prof = tangency_profile(&branch_sextic(&h, &s).map_err(err)?).map_err(err)?;
        ensure(prof.multiplicities == [2, 2, 1, 1], format!("{q}: {:?}", prof.multiplicities))?;
        ensure(!planes.contains(&h), format!("{q}: repeated plane"))?;
        planes.push(h);
    }
    let base = branch_sextic(&DualPlane::from_ints(4, 0, 1, 1).unwrap(), &s).map_err(err)?;
    let want = binary_ring().parse("(x^2 + 2*y^2)^2*(12*y^2 - 15*x^2)").unwrap();
    ensure(base.is_proportional(&want), format!("base sextic {base}"))?;
    Ok("20 distinct planes {2,2,1,1}; base factorization matches".into())
}

fn components() -> Check {
    let s3 = builtin_component("S3").unwrap();
    let scaled = scale_component(&s3, &Rational::from_int(49)).map_err(err)?;
    ensure(component_membership(&DualPlane::from_ints(4, 0, 1, 1).unwrap(), &scaled), "(4,0,1,1) off scaled S3")?;
    let mut counts = Vec::new();
    for (i, name) in ["S4", "S5", "S6"].iter().enumerate() {
        let c = builtin_component(name).unwrap();
        let pts = sample_component_points(&c, 10, 2024 + i as u64).map_err(err)?;
        let ok = pts
            .iter()
            .filter(|h| verify_bitangency_numeric(h, &Surface::unit(), 1e-6).is_ok_and(|p| p.multiplicities == [2, 2, 1, 1]))
            .count();
        ensure(ok >= 9, format!("{name}: {ok}/10"))?;
        counts.push(format!("{name} {ok}/10"));
    }
    Ok(counts.join(", "))
}

fn counting() -> Check {
    let base = family_curve(&EPoint::from_ints(2, -1, -7).unwrap()).map_err(err)?;
    let n = |t: f64| enumerate_curve_points_with(&base, t, Execution::default()).map(|v| v.len()).map_err(err);
    let mut ratios = Vec::new();
    for t in [16.0, 32.0, 64.0] {
        let r = n(2.0 * t)? as f64 / n(t)? as f64;
        ensure((1.4..=2.6).contains(&r), format!("N({})/N({t}) = {r}", 2.0 * t))?;
        ratios.push(format!("{r:.3}"));
    }
    let curves = exceptional_curves(5).map_err(err)?;
    let mut with_points = 0;
    for q in &curves {
        with_points += (!enumerate_curve_points(q, 64.0).map_err(err)?.is_empty()) as usize;
    }
    ensure(with_points >= 5, format!("{with_points} curves with points"))?;
    Ok(format!("ratios {}; {with_points} curves with points at T = 64", ratios.join(", ")))
}

fn cross_check() -> Check {
    let mut curve = BTreeSet::new();
    for q in &exceptional_curves(5).map_err(err)? {
        curve.extend(enumerate_curve_points(q, 16.0).map_err(err)?.into_iter().map(|h| h.point));
    }
    let surface: BTreeSet<_> = enumerate_surface_points(16.0).map_err(err)?.into_iter().map(|h| h.point).collect();
    let missing = curve.difference(&surface).count();
    ensure(missing == 0, format!("{missing} curve points missing from the brute force"))?;
    Ok(format!("{} curve points within {} surface points", curve.len(), surface.len()))
}

fn properties() -> Check {
    for (name, suite) in common::SUITES {
        suite(common::CASES).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} suites x {} cases", common::SUITES.len(), common::CASES))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check, u64); 9] = [
        ("Picard rank", picard, 1),
        ("identity suite", identities, 1),
        ("section", section, 30),
        ("elliptic", elliptic, 1),
        ("bitangency (exact)", bitangency, 30),
        ("components", components, 120),
        ("counting", counting, 300),
        ("cross-check", cross_check, 120),
        ("property suites", properties, 60),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*limit);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over the {limit} s limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += (status == "FAIL") as usize;
        println!("{status} {}. {name:20} {:>9.3} s (limit {limit} s)  {detail}", i + 1, took.as_secs_f64());
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
