use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{relative_residual, DualComponent, FamilyError};
use crate::geometry::{Surface, TangencyProfile};
use crate::numbers::{embed_complex, FieldElem, Rational};
use crate::poly::{complex_roots, MPoly};
use crate::ring::Ring;

/// Residual gate for sampled points.
pub const SAMPLE_RESIDUAL: f64 = 1e-10;

const N: usize = 3;

/// Solve the linear form for its first variable: `v_p = sum c_j v_j`.
fn solve_linear(lin: &MPoly<FieldElem>) -> Result<(usize, [FieldElem; 4]), FamilyError> {
    let coeff = |i: usize| {
        let mut e = vec![0u32; 4];
        e[i] = 1;
        lin.coeff(&crate::poly::Monomial(e))
    };
    let pivot = (0..4).find(|&i| !coeff(i).is_zero()).ok_or(FamilyError::BadComponent("zero linear form".into()))?;
    let inv = coeff(pivot).inverse().expect("nonzero");
    let combo = std::array::from_fn(|j| if j == pivot { FieldElem::zero() } else { -(coeff(j) * &inv) });
    Ok((pivot, combo))
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Seeded complex points of a component, in the chart `n = 1`.
///
/// The linear form fixes one coordinate, a seeded rational fixes another, and
/// the last is a root of the resulting univariate sextic.
pub fn sample_component_points(s: &DualComponent, count: usize, seed: u64) -> Result<Vec<[Complex64; 4]>, FamilyError> {
    let (pivot, combo) = solve_linear(&s.linear)?;
    if pivot == N {
        return Err(FamilyError::BadComponent(format!("{}: linear form solves for n", s.name)));
    }
    let r = s.sextic.ring().clone();
    let image = (0..4).fold(r.zero(), |acc, j| acc + r.var_at(j).scale(&combo[j]));
    let name = r.vars()[pivot].clone();
    let reduced = s.sextic.subst(&[(name.as_str(), image)])?;
    let free: Vec<usize> = (0..4).filter(|&i| i != pivot && i != N).collect();
    let deg = |i: usize| reduced.degree_in(i).unwrap_or(0);
    let (solve, draw) = if deg(free[0]) >= deg(free[1]) { (free[0], free[1]) } else { (free[1], free[0]) };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 50 * count + 50 {
            return Err(FamilyError::SamplingFailed(format!("{}: too many rejected draws", s.name)));
        }
        let q = Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=5).into());
        let mut point: Vec<MPoly<FieldElem>> = (0..4).map(|i| r.var_at(i)).collect();
        point[N] = r.one();
        point[draw] = r.constant(FieldElem::from_rational(q.clone()));
        let names: Vec<String> = r.vars().to_vec();
        let assignment: Vec<(&str, MPoly<FieldElem>)> =
            [N, draw].iter().map(|&i| (names[i].as_str(), point[i].clone())).collect();
        let uni = reduced.subst(&assignment)?;
        let (_, u) = uni.to_univariate()?;
        if u.degree().unwrap_or(0) < 1 {
            continue;
        }
        let coeffs: Vec<Complex64> = u.coeffs().iter().map(embed_complex).collect();
        let roots = match complex_roots(&coeffs, 1e-9) {
            Ok(r) => r,
            Err(e) => return Err(FamilyError::SamplingFailed(format!("{} at {} = {q}: {e}", s.name, names[draw]))),
        };
        let pick = &roots[rng.gen_range(0..roots.len())];
        if pick.multiplicity > 1 {
            continue;
        }
        let mut x = pick.center;
        for _ in 0..3 {
            let (p, dp) = horner(&coeffs, x);
            if dp.norm() == 0.0 {
                break;
            }
            x -= p / dp;
        }
        let mut h = [Complex64::new(0.0, 0.0); 4];
        h[N] = Complex64::new(1.0, 0.0);
        h[draw] = embed_complex(&FieldElem::from_rational(q));
        h[solve] = x;
        h[pivot] = (0..4).map(|j| embed_complex(&combo[j]) * h[j]).sum();
        if relative_residual(&s.sextic, &h).max(relative_residual(&s.linear, &h)) <= SAMPLE_RESIDUAL {
            out.push(h);
        }
    }
    Ok(out)
}

/// Numeric profile of the restriction sextic of a complex plane: roots of
/// `phi(x, 1)` clustered at relative radius `tol`, leading coefficients below
/// `tol` (relative) counted as roots at infinity.
pub fn verify_bitangency_numeric(h: &[Complex64; 4], s: &Surface, tol: f64) -> Result<TangencyProfile, FamilyError> {
    let size = h.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if h[N].norm() <= tol * size {
        return Err(FamilyError::DegeneratePlane(format!("{h:?}")));
    }
    let [k, l, m, _] = h.map(|c| c / h[N]);
    let (a, b) = (embed_complex(s.a()), embed_complex(s.b()));
    // (k x^2 + l x + m)^3 by repeated multiplication
    let quad = [m, l, k];
    let mut cube = vec![Complex64::new(1.0, 0.0)];
    for _ in 0..3 {
        let mut next = vec![Complex64::new(0.0, 0.0); cube.len() + 2];
        for (i, c) in cube.iter().enumerate() {
            for (j, q) in quad.iter().enumerate() {
                next[i + j] += c * q;
            }
        }
        cube = next;
    }
    let mut phi: Vec<Complex64> = cube.iter().map(|c| -c).collect();
    phi[0] += b;
    phi[6] += a;
    let scale = phi.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut at_infinity = 0;
    while phi.len() > 1 && phi.last().is_some_and(|c| c.norm() <= tol * scale) {
        phi.pop();
        at_infinity += 1;
    }
    let mut mult: Vec<u32> = if phi.len() > 1 {
        complex_roots(&phi, tol)?.iter().map(|c| c.multiplicity).collect()
    } else {
        Vec::new()
    };
    if at_infinity > 0 {
        mult.push(at_infinity);
    }
    Ok(TangencyProfile::from_multiplicities(mult))
}
