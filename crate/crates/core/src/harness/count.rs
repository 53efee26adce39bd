use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_curve_points_with, enumerate_surface_points_with, surface_z_bound};
use super::height::IntegralPoint;
use super::HarnessError;
use crate::elliptic::family_parameters;
use crate::geometry::{DualPlane, EPoint, FamilyCurve, Surface};
use crate::numbers::FieldElem;
use crate::par::Execution;
use crate::ring::Ring;

/// Exceptional curves of the 49-surface in a fixed order: for `n = 1, 2, ...`
/// the points `nP` and `-nP = (y0, x0, z0)`, each with its nine twists
/// `(zeta^a x0, zeta^b y0, z0)`. Curves with a repeated plane are dropped.
pub fn exceptional_curves(budget: usize) -> Result<Vec<EPoint>, HarnessError> {
    let mut out: Vec<EPoint> = Vec::with_capacity(budget);
    let mut planes: Vec<DualPlane> = Vec::new();
    let s = Surface::main();
    let zeta = FieldElem::zeta();
    let mut n = 0;
    while out.len() < budget {
        n += 1;
        let params = family_parameters(n)?;
        let q = params.points.last().expect("n points").clone();
        for base in [q.clone(), EPoint { x0: q.y0.clone(), y0: q.x0.clone(), z0: q.z0.clone() }] {
            for a in 0..3 {
                for b in 0..3 {
                    if out.len() == budget {
                        return Ok(out);
                    }
                    let t = EPoint::new(&zeta.pow(a) * &base.x0, &zeta.pow(b) * &base.y0, base.z0.clone())?;
                    let h = crate::geometry::family_plane(&t, &s)?;
                    if !planes.contains(&h) {
                        planes.push(h);
                        out.push(t);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountOptions {
    pub heights: Vec<f64>,
    pub curves: usize,
    /// Brute-force surface counts run only for `T <= surface_cap`.
    pub surface_cap: f64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { heights: vec![4.0, 16.0, 64.0], curves: 5, surface_cap: 16.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSummary {
    pub q0: [FieldElem; 3],
    pub plane: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub t: f64,
    /// Brute-force count on the surface; `None` above the cap.
    pub n_total: Option<usize>,
    /// Radius of the `z` disc used for `n_total`.
    pub z_bound: Option<f64>,
    /// Points of the union of the curves.
    pub n_exceptional: usize,
    /// How many of the brute-force points lie on one of the curves.
    pub n_total_on_curves: Option<usize>,
    pub per_curve: Vec<usize>,
    pub per_curve_2t: Vec<usize>,
    /// `N_curve(2T) / N_curve(T)`, `None` when `N_curve(T) = 0`.
    pub ratios: Vec<Option<f64>>,
    pub curves_with_points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub version: u32,
    pub surface: Surface,
    pub options: CountOptions,
    pub curves: Vec<CurveSummary>,
    pub rows: Vec<CountRow>,
}

/// Counts on the 49-surface and on the first `opts.curves` exceptional curves.
pub fn count_report(opts: &CountOptions, exec: Execution) -> Result<CountReport, HarnessError> {
    let s = Surface::main();
    let qs = exceptional_curves(opts.curves)?;
    let curves: Vec<FamilyCurve> = qs.iter().map(|q| FamilyCurve::new(&s, q)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for &t in &opts.heights {
        let mut union = BTreeSet::new();
        let (mut per_curve, mut per_curve_2t, mut ratios) = (Vec::new(), Vec::new(), Vec::new());
        for c in &curves {
            let here = enumerate_curve_points_with(c, t, exec)?;
            let twice = enumerate_curve_points_with(c, 2.0 * t, exec)?;
            union.extend(here.iter().map(|h| h.point));
            ratios.push((!here.is_empty()).then(|| twice.len() as f64 / here.len() as f64));
            per_curve.push(here.len());
            per_curve_2t.push(twice.len());
        }
        let (n_total, z_bound, on_curves) = if t <= opts.surface_cap {
            let all = enumerate_surface_points_with(&s, t, exec)?;
            let on: BTreeSet<IntegralPoint> = all.iter().map(|h| h.point).filter(|p| union.contains(p)).collect();
            (Some(all.len()), Some(surface_z_bound(&s, t)), Some(on.len()))
        } else {
            (None, None, None)
        };
        rows.push(CountRow {
            t,
            n_total,
            z_bound,
            n_exceptional: union.len(),
            n_total_on_curves: on_curves,
            curves_with_points: per_curve.iter().filter(|&&n| n > 0).count(),
            per_curve,
            per_curve_2t,
            ratios,
        });
    }
    let curves = curves.iter().map(|c| CurveSummary { q0: c.q0.coords().map(Clone::clone), plane: c.plane().to_string() }).collect();
    Ok(CountReport { version: super::REPORT_VERSION, surface: s, options: opts.clone(), curves, rows })
}
