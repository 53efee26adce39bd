//! Simultaneous (Aberth–Ehrlich) root iteration with multiplicity clustering.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{MPoly, PolyError};
use crate::ring::{Embed, Ring};

/// Relative distance below which two computed roots are merged.
pub const CLUSTER_RADIUS: f64 = 1e-6;

const MAX_ITERATIONS: usize = 2000;

#[derive(Clone, Debug, PartialEq)]
pub struct RootCluster {
    pub center: Complex64,
    pub multiplicity: u32,
    pub radius: f64,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let az = z.norm();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * az + c.norm();
    }
    (p, dp, bound)
}

/// Roots of `sum coeffs[i] x^i`, grouped into clusters of relative radius `tol`.
///
/// Exact zero roots are split off before iterating, so `x^k` factors come back
/// with their full multiplicity.
pub fn complex_roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<RootCluster>, PolyError> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|x| Ring::is_zero(x)) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(PolyError::ZeroPolynomial);
    }
    let zeros = c.iter().take_while(|x| Ring::is_zero(*x)).count();
    let c: Vec<Complex64> = c[zeros..].to_vec();
    let n = c.len() - 1;
    let mut roots = aberth(&c).ok_or_else(|| PolyError::NonConvergence(describe(coeffs)))?;
    roots.extend(std::iter::repeat(Complex64::new(0.0, 0.0)).take(zeros));
    debug_assert_eq!(roots.len(), n + zeros);
    Ok(cluster(&roots, tol))
}

fn describe(coeffs: &[Complex64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .map(|(i, c)| format!("({:.6e}{:+.6e}i)*x^{i}", c.re, c.im))
        .collect();
    parts.join(" + ")
}

fn aberth(c: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = c[n];
    // Fujiwara bound on root moduli
    let radius = (0..n)
        .map(|i| (c[i] / lead).norm().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp, bound) = horner(c, z[k]);
            if p.norm() <= 16.0 * f64::EPSILON * bound {
                done[k] = true;
                continue;
            }
            all_done = false;
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        Complex64::new(1.0, 0.0) / d
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                // perturb off a critical point
                z[k] += Complex64::new(radius * 1e-3, radius * 1e-3);
                continue;
            }
            z[k] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[k].norm() {
                done[k] = true;
            }
        }
        if all_done {
            return Some(z);
        }
    }
    None
}

/// Single-linkage grouping at distance `tol * (1 + max |root|)`.
fn cluster(roots: &[Complex64], tol: f64) -> Vec<RootCluster> {
    let n = roots.len();
    let scale = 1.0 + roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let cut = tol * scale;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut j = i;
        while p[j] != r {
            let next = p[j];
            p[j] = r;
            j = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() < cut {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(k, _)| *k == r) {
            Some((_, g)) => g.push(roots[i]),
            None => groups.push((r, vec![roots[i]])),
        }
    }
    let mut out: Vec<RootCluster> = groups
        .into_iter()
        .map(|(_, g)| {
            let center = g.iter().sum::<Complex64>() / g.len() as f64;
            let radius = g.iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
            RootCluster { center, multiplicity: g.len() as u32, radius }
        })
        .collect();
    out.sort_by(|a, b| {
        b.multiplicity
            .cmp(&a.multiplicity)
            .then(a.center.re.total_cmp(&b.center.re))
            .then(a.center.im.total_cmp(&b.center.im))
    });
    out
}

/// Root clusters of a univariate polynomial with embeddable coefficients.
pub fn complex_roots_of<C: Ring + Embed>(f: &MPoly<C>, tol: f64) -> Result<Vec<RootCluster>, PolyError> {
    let (_, u) = f.to_univariate()?;
    let coeffs: Vec<Complex64> = u.coeffs().iter().map(Embed::to_complex).collect();
    complex_roots(&coeffs, tol).map_err(|e| match e {
        PolyError::NonConvergence(_) => PolyError::NonConvergence(format!("{f:?}")),
        other => other,
    })
}
