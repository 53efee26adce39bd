use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::enumerate::enumerate_curve_points;
use super::height::IntegralPoint;
use super::HarnessError;
use crate::elliptic::{ec_multiply, family_parameters, rank_ge_one_certificate, ECPoint, WeierstrassCurve};
use crate::families::{
    builtin_component, component_involution, component_membership, component_residual, fixed_direction,
    iota3_identity_check, involutions, plane_through_tangent_and_direction_numeric, sample_component_points,
    scale_component, tangency_residual, verify_bitangency_numeric,
};
use crate::geometry::{
    adjunction_identity_check, binary_ring, branch_sextic, builtin_curve_fixtures, curve_point_smooth,
    family_curve, family_plane, intermediate_line_variant, on_surface, perfect_square_check, section_f,
    section_f_square, section_point, section_w_closed_form, section_w_swapped_variant, tangency_profile,
    DualPlane, Surface, WPoint,
};
use crate::numbers::{embed_complex, FieldElem, Rational};
use crate::par::{self, Execution};
use crate::picard::{fixture_matches_constants, picard_rank_check};
use crate::ring::Ring;

pub const REPORT_VERSION: u32 = 1;

/// Family parameters used by the exact per-curve claims.
const FAMILY_SIZE: usize = 20;
/// Samples per component and the number that must come out bitangent.
const SAMPLES: usize = 10;
const SAMPLES_REQUIRED: usize = 9;
const NUMERIC_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Informational: a known misprint or an inferred step, never a failure.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub paper: String,
    pub status: ClaimStatus,
    pub details: Value,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: u32,
    pub seed: u64,
    pub claims: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn failed(&self) -> impl Iterator<Item = &ClaimReport> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed().next().is_some() {
            1
        } else {
            0
        }
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }
}

type Outcome = Result<(ClaimStatus, Value), HarnessError>;

struct Claim {
    id: &'static str,
    paper: &'static str,
    run: fn(u64) -> Outcome,
}

const REGISTRY: &[Claim] = &[
    Claim { id: "01-picard-rank", paper: "Picard rank of S over k is one", run: picard },
    Claim {
        id: "02-family-identities",
        paper: "adjunction identity for the restriction sextic; F is a perfect square",
        run: identities,
    },
    Claim {
        id: "03-family-bitangency",
        paper: "planes of the elliptic family are bitangent to the branch curve",
        run: bitangency,
    },
    Claim { id: "04-family-rank", paper: "x^3 + y^3 = 7 z^3 has a point of infinite order", run: rank },
    Claim { id: "05-section-smooth", paper: "each curve of the family carries a smooth k-point", run: section },
    Claim {
        id: "06-components-exact",
        paper: "involution directions and the scaled S3 component",
        run: components_exact,
    },
    Claim {
        id: "07-components-numeric",
        paper: "sampled points of S3..S6 are bitangent planes",
        run: components_numeric,
    },
    Claim {
        id: "08-plane-construction",
        paper: "tangent line plus involution direction lands on the printed component",
        run: plane_construction,
    },
    Claim { id: "09-note-w-formula", paper: "closed form for w at the section point", run: note_w_formula },
    Claim {
        id: "10-note-intermediate-line",
        paper: "intermediate expansion of F",
        run: note_intermediate_line,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn pass_if(ok: bool, details: Value) -> Outcome {
    Ok((if ok { ClaimStatus::Pass } else { ClaimStatus::Fail }, details))
}

fn picard(_: u64) -> Outcome {
    let check = picard_rank_check();
    let fixture = fixture_matches_constants();
    let ok = check.rank == 1 && check.is_anticanonical_direction && fixture;
    pass_if(ok, json!({ "check": check, "fixture_matches_constants": fixture }))
}

fn identities(_: u64) -> Outcome {
    let adjunction = adjunction_identity_check();
    let square = perfect_square_check();
    let weierstrass = crate::elliptic::weierstrass_identity_check();
    pass_if(
        adjunction && square && weierstrass,
        json!({ "adjunction": adjunction, "perfect_square": square, "weierstrass_substitution": weierstrass }),
    )
}

fn bitangency(_: u64) -> Outcome {
    let s = Surface::main();
    let params = family_parameters(FAMILY_SIZE)?;
    let mut planes: Vec<DualPlane> = Vec::new();
    let mut profiles = Vec::new();
    let mut ok = true;
    for q in &params.points {
        let h = family_plane(q, &s)?;
        let prof = tangency_profile(&branch_sextic(&h, &s)?)?;
        ok &= prof.multiplicities == [2, 2, 1, 1] && !planes.contains(&h);
        profiles.push(prof.multiplicities.clone());
        planes.push(h);
    }
    let base = DualPlane::from_ints(4, 0, 1, 1)?;
    let expected = binary_ring().parse("(x^2 + 2*y^2)^2*(12*y^2 - 15*x^2)").expect("well-formed");
    let base_factors = branch_sextic(&base, &s)?.is_proportional(&expected);
    pass_if(
        ok && base_factors && planes[0] == base,
        json!({
            "parameters": params.points.len(),
            "skipped_multiples": params.skipped,
            "profiles": profiles,
            "base_plane": base.to_string(),
            "base_factorization": base_factors,
        }),
    )
}

fn rank(_: u64) -> Outcome {
    let Some(cert) = rank_ge_one_certificate(7, 10)? else {
        return pass_if(false, json!({ "error": "no non-torsion point in the box" }));
    };
    let e = WeierstrassCurve::fermat(7)?;
    let p = cert.weierstrass.clone();
    let expect = [(1, ECPoint::from_ints(84, -756)), (2, ECPoint::from_ints(28, -28)), (4, ECPoint::from_ints(1708, 70588))];
    let multiples_ok = expect.iter().all(|(n, q)| ec_multiply(*n, &p, &e) == *q);
    let non_torsion = cert.trace.iter().all(|(_, q)| !q.is_infinity());
    pass_if(
        multiples_ok && non_torsion,
        json!({ "certificate": cert, "multiples_match": multiples_ok, "certifies": "rank >= 1" }),
    )
}

fn section(_: u64) -> Outcome {
    let s = Surface::main();
    let params = family_parameters(FAMILY_SIZE)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for q in &params.points {
        let curve = family_curve(q)?;
        let p = section_point(q)?;
        let w = &p.coords()[3];
        let closed = section_w_closed_form(q)?;
        let on = on_surface(&p, &s)? && curve.contains(&p)?;
        let smooth = curve_point_smooth(&curve, &p)?;
        let closed_ok = closed == *w || closed == -w.clone();
        ok &= on && smooth && closed_ok;
        rows.push(json!({ "q0": q, "point": p.to_string(), "on_curve": on, "smooth": smooth, "w_closed_form": closed_ok }));
    }
    let zeta = FieldElem::zeta();
    let base = section_point(&params.points[0])?;
    let want = WPoint::p1123(-zeta.clone(), 2.into(), FieldElem::from(4) * &zeta, 57.into())?;
    let want_neg = WPoint::p1123(-zeta.clone(), 2.into(), FieldElem::from(4) * &zeta, (-57).into())?;
    let base_ok = base == want || base == want_neg;
    // the section point shows up in the exhaustive enumeration at its height
    let sec = IntegralPoint::from_wpoint(&base)?;
    let enumerated = enumerate_curve_points(&params.points[0], sec.height())?.iter().any(|h| h.point == sec);
    // negative control: a curve with a singular point must be reported as such
    let mut control = Vec::new();
    for f in builtin_curve_fixtures() {
        if let Some(sp) = &f.singular_point {
            let p = WPoint::p1123(sp[0].clone(), sp[1].clone(), sp[2].clone(), sp[3].clone())?;
            let c = f.curve()?;
            let detected = c.contains(&p)? && !curve_point_smooth(&c, &p)?;
            ok &= detected;
            control.push(json!({ "surface": f.surface.to_string(), "point": p.to_string(), "detected": detected }));
        }
    }
    pass_if(
        ok && base_ok && enumerated,
        json!({
            "base_point": base.to_string(),
            "base_matches": base_ok,
            "base_height": sec.height(),
            "found_by_enumeration": enumerated,
            "curves": rows,
            "singular_controls": control,
        }),
    )
}

fn components_exact(_: u64) -> Outcome {
    let s3 = builtin_component("S3").expect("fixture");
    let scaled = scale_component(&s3, &Rational::from_int(49))?;
    let base = component_membership(&DualPlane::from_ints(4, 0, 1, 1)?, &scaled);
    let params = family_parameters(FAMILY_SIZE)?;
    let mut family_on = 0;
    for q in &params.points {
        family_on += component_membership(&family_plane(q, &Surface::main())?, &scaled) as usize;
    }
    let identity = iota3_identity_check();
    let mut dirs = Vec::new();
    let mut dirs_ok = true;
    for i in involutions() {
        let d = fixed_direction(&i);
        let preserves = i.preserves_branch_curve(&Surface::unit());
        dirs_ok &= d.is_some() && preserves && i.square_scalar().is_some();
        dirs.push(json!({
            "involution": i.name,
            "direction": d.map(|d| d.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            "preserves_branch_curve": preserves,
        }));
    }
    pass_if(
        base && family_on == params.points.len() && identity && dirs_ok,
        json!({
            "scaled_s3": scaled.sextic.to_string(),
            "base_plane_on_scaled_s3": base,
            "family_planes_on_scaled_s3": family_on,
            "iota3_identity": identity,
            "directions": dirs,
            "degree_bookkeeping": {
                "S2": 2, "S3": 6, "S4": 6, "S5": 6, "S6": 6,
                "S1": 44, "S1_status": "inferred from a total of 70, unverified",
            },
        }),
    )
}

fn components_numeric(seed: u64) -> Outcome {
    let names = ["S3", "S4", "S5", "S6"];
    let rows = par::map(Execution::default(), &names, |name| -> Result<(bool, Value), HarnessError> {
        let c = builtin_component(name).expect("fixture");
        let sub_seed = seed.wrapping_add(name.as_bytes()[1] as u64);
        let pts = sample_component_points(&c, SAMPLES, sub_seed)?;
        let mut bitangent = 0;
        let mut failures = Vec::new();
        for h in &pts {
            match verify_bitangency_numeric(h, &Surface::unit(), NUMERIC_TOL) {
                Ok(p) if p.is_bitangent() => bitangent += 1,
                Ok(p) => failures.push(json!(p.multiplicities)),
                Err(e) => failures.push(json!(e.to_string())),
            }
        }
        let max_residual = pts.iter().map(|h| component_residual(h, &c)).fold(0.0, f64::max);
        let ok = bitangent >= SAMPLES_REQUIRED;
        Ok((ok, json!({
            "component": name, "seed": sub_seed, "samples": pts.len(),
            "bitangent": bitangent, "failures": failures, "max_residual": max_residual,
        })))
    });
    let mut ok = true;
    let mut details = Vec::new();
    for r in rows {
        let (o, d) = r?;
        ok &= o;
        details.push(d);
    }
    pass_if(ok, json!({ "tolerance": NUMERIC_TOL, "required": SAMPLES_REQUIRED, "components": details }))
}

/// A point of the unit branch curve over `x`: `(x^2, x, 1, z)`, `z^3 = -(x^6 + 1)`.
fn branch_point(x: Complex64) -> [Complex64; 4] {
    let z = (-(x.powu(6) + 1.0)).powf(1.0 / 3.0);
    [x * x, x, Complex64::new(1.0, 0.0), z]
}

fn plane_construction(seed: u64) -> Outcome {
    let s = Surface::unit();
    let mut ok = true;
    let mut rows = Vec::new();
    for i in involutions() {
        let comp = builtin_component(&i.component).expect("fixture");
        debug_assert_eq!(component_involution(&i.component).map(|j| j.name), Some(i.name.clone()));
        let d = fixed_direction(&i).expect("constant direction").map(|c| embed_complex(&c));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut on_component, mut bitangent, mut touches_image) = (0, 0, 0);
        let mut worst: f64 = 0.0;
        for _ in 0..SAMPLES {
            let x = Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            let p = branch_point(x);
            let h = plane_through_tangent_and_direction_numeric(&p, &d, &s)?;
            let r = component_residual(&h, &comp);
            worst = worst.max(r);
            on_component += (r <= 1e-8) as usize;
            touches_image += (tangency_residual(&h, &i.apply_complex(&p), &s) <= 1e-8) as usize;
            bitangent += verify_bitangency_numeric(&h, &s, NUMERIC_TOL).is_ok_and(|p| p.is_bitangent()) as usize;
        }
        let good = on_component >= SAMPLES_REQUIRED && bitangent >= SAMPLES_REQUIRED;
        ok &= good;
        rows.push(json!({
            "involution": i.name, "component": i.component, "samples": SAMPLES,
            "on_component": on_component, "tangent_at_image": touches_image,
            "bitangent": bitangent, "max_component_residual": worst,
        }));
    }
    pass_if(
        ok,
        json!({ "seed": seed, "construction": "inferred: plane through the tangent line and the direction", "involutions": rows }),
    )
}

fn note_w_formula(_: u64) -> Outcome {
    let q = family_parameters(1)?.points.remove(0);
    let w = section_point(&q)?.coords()[3].clone();
    let closed = section_w_closed_form(&q)?;
    let swapped = section_w_swapped_variant(&q)?;
    let corrected_ok = closed == w || closed == -w.clone();
    let swapped_norm = swapped.norm();
    let swapped_squares = swapped.pow(2) == w.pow(2);
    Ok((
        if corrected_ok { ClaimStatus::Flagged } else { ClaimStatus::Fail },
        json!({
            "sqrt_w": w.to_string(),
            "corrected_closed_form": closed.to_string(),
            "corrected_matches": corrected_ok,
            "swapped_factor_value": swapped.to_string(),
            "swapped_factor_norm": swapped_norm.to_string(),
            "swapped_factor_squares_to_w2": swapped_squares,
            "note": "the printed factor order gives the right norm but not the right square",
        }),
    ))
}

fn note_intermediate_line(_: u64) -> Outcome {
    let variant = intermediate_line_variant();
    let square = section_f_square();
    let endpoints = section_f() == square;
    let variant_matches = variant == square;
    let variant_is_square = variant.is_perfect_square().is_some();
    Ok((
        if endpoints && !variant_matches { ClaimStatus::Flagged } else { ClaimStatus::Fail },
        json!({
            "expanded_square": square.to_string(),
            "printed_variant": variant.to_string(),
            "variant_matches": variant_matches,
            "variant_is_square": variant_is_square,
            "endpoints_agree": endpoints,
            "note": "the y0^6 coefficient must be zeta^2",
        }),
    ))
}

fn run_one(c: &Claim, seed: u64) -> ClaimReport {
    let start = Instant::now();
    let (status, details) = (c.run)(seed).unwrap_or_else(|e| (ClaimStatus::Fail, json!({ "error": e.to_string() })));
    ClaimReport {
        id: c.id.into(),
        paper: c.paper.into(),
        status,
        details,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the named claims concurrently; the report follows registry order.
pub fn run_claims(ids: &[&str], seed: u64) -> Result<VerificationReport, HarnessError> {
    let picked: Vec<&Claim> = ids
        .iter()
        .map(|id| REGISTRY.iter().find(|c| c.id == *id).ok_or_else(|| HarnessError::UnknownClaim(id.to_string())))
        .collect::<Result<_, _>>()?;
    let mut picked = picked;
    picked.sort_by_key(|c| c.id);
    picked.dedup_by_key(|c| c.id);
    let claims = par::map(Execution::default(), &picked, |c| run_one(c, seed));
    Ok(VerificationReport { version: REPORT_VERSION, seed, claims })
}

/// Every registered claim.
pub fn verify_all(seed: u64) -> VerificationReport {
    run_claims(&claim_ids(), seed).expect("registry ids")
}
