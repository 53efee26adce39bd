use num_complex::Complex64;

use super::FamilyError;
use crate::geometry::{DualPlane, Surface};
use crate::numbers::{embed_complex, field_sqrt, FieldElem};
use crate::poly::{MPoly, PolyRing};
use crate::ring::{Field, Ring};

/// A linear involution of P^3 preserving the branch curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Involution {
    pub name: String,
    pub matrix: [[FieldElem; 4]; 4],
    /// Name of the dual component its planes are expected on.
    pub component: String,
}

fn z(a: i64, b: i64) -> FieldElem {
    FieldElem::from_ints(a, b)
}

fn swap_xz(t: FieldElem, u: FieldElem) -> [[FieldElem; 4]; 4] {
    // (X, Y, Z, W) -> (t Z, Y, u X, W)
    [
        [z(0, 0), z(0, 0), t, z(0, 0)],
        [z(0, 0), z(1, 0), z(0, 0), z(0, 0)],
        [u, z(0, 0), z(0, 0), z(0, 0)],
        [z(0, 0), z(0, 0), z(0, 0), z(1, 0)],
    ]
}

/// The involutions producing the components `S3..S6`.
pub fn involutions() -> Vec<Involution> {
    let zeta = FieldElem::zeta();
    let zeta2 = zeta.pow(2);
    let mut iota3 = swap_xz(z(0, 0), z(0, 0));
    iota3[0] = [z(1, 0), z(0, 0), z(0, 0), z(0, 0)];
    iota3[1][1] = z(-1, 0);
    iota3[2] = [z(0, 0), z(0, 0), z(1, 0), z(0, 0)];
    let mk = |name: &str, m, c: &str| Involution { name: name.into(), matrix: m, component: c.into() };
    vec![
        mk("iota3", iota3, "S3"),
        mk("iota4", swap_xz(z(1, 0), z(1, 0)), "S4"),
        mk("iota5", swap_xz(zeta.clone(), zeta2.clone()), "S5"),
        mk("iota6", swap_xz(zeta2, zeta), "S6"),
    ]
}

impl Involution {
    pub fn apply<C: Ring>(&self, p: &[C; 4], embed: impl Fn(&FieldElem) -> C) -> [C; 4] {
        std::array::from_fn(|i| {
            (0..4).fold(C::zero(), |acc, j| acc + embed(&self.matrix[i][j]) * p[j].clone())
        })
    }

    pub fn apply_exact(&self, p: &[FieldElem; 4]) -> [FieldElem; 4] {
        self.apply(p, FieldElem::clone)
    }

    pub fn apply_complex(&self, p: &[Complex64; 4]) -> [Complex64; 4] {
        self.apply(p, embed_complex)
    }

    fn square(&self) -> [[FieldElem; 4]; 4] {
        let m = &self.matrix;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).fold(FieldElem::zero(), |acc, k| acc + &m[i][k] * &m[k][j]))
        })
    }

    /// `c` with `matrix^2 = c I`, if the square is scalar.
    pub fn square_scalar(&self) -> Option<FieldElem> {
        let sq = self.square();
        let c = sq[0][0].clone();
        let scalar = (0..4).all(|i| (0..4).all(|j| if i == j { sq[i][j] == c } else { sq[i][j].is_zero() }));
        (scalar && !c.is_zero()).then_some(c)
    }

    /// Pull back `f(X, Y, Z, W)` along the linear map.
    pub fn pull_back(&self, f: &MPoly<FieldElem>) -> MPoly<FieldElem> {
        let r = f.ring().clone();
        let images: Vec<MPoly<FieldElem>> = (0..4)
            .map(|i| (0..4).fold(r.zero(), |acc, j| acc + r.var_at(j).scale(&self.matrix[i][j])))
            .collect();
        let names: Vec<String> = r.vars().to_vec();
        let assignment: Vec<(&str, MPoly<FieldElem>)> =
            names.iter().map(String::as_str).zip(images).collect();
        f.subst(&assignment).expect("same ring")
    }

    /// Whether `U` and `V` of the surface are carried to multiples of themselves.
    pub fn preserves_branch_curve(&self, s: &Surface) -> bool {
        let (u, v) = branch_equations(s);
        u.is_proportional(&self.pull_back(&u)) && v.is_proportional(&self.pull_back(&v))
    }
}

/// Ring `k[X, Y, Z, W]` of P^3.
pub fn space_ring() -> PolyRing {
    PolyRing::new(&["X", "Y", "Z", "W"])
}

/// `U = A X^3 + B Z^3 + W^3` and `V = XZ - Y^2`.
pub fn branch_equations(s: &Surface) -> (MPoly<FieldElem>, MPoly<FieldElem>) {
    let r = space_ring();
    let v = |n: &str| r.var::<FieldElem>(n);
    let u = v("X").pow(3).scale(s.a()) + v("Z").pow(3).scale(s.b()) + v("W").pow(3);
    (u, v("X") * v("Z") - v("Y").pow(2))
}

/// Rank of a small matrix over an exact field.
fn exact_rank<C: Field>(mut rows: Vec<Vec<C>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().expect("nonzero pivot");
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() * inv.clone();
                for j in 0..cols {
                    let v = rows[i][j].clone() - f.clone() * rows[rank][j].clone();
                    rows[i][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The constant direction of `iota(P) - P` when `s iota - id` has rank one for
/// a normalizing scalar `s` with `s^2 c = 1`, scaled to a leading 1.
pub fn fixed_direction(iota: &Involution) -> Option<[FieldElem; 4]> {
    let c = iota.square_scalar()?;
    let root = field_sqrt(&c.inverse()?)?;
    for s in [root.clone(), -root] {
        let n: Vec<Vec<FieldElem>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let id = if i == j { FieldElem::from(1) } else { FieldElem::zero() };
                        &s * &iota.matrix[i][j] - id
                    })
                    .collect()
            })
            .collect();
        if exact_rank(n.clone()) != 1 {
            continue;
        }
        let col = (0..4).find(|&j| (0..4).any(|i| !n[i][j].is_zero()))?;
        let d: [FieldElem; 4] = std::array::from_fn(|i| n[i][col].clone());
        let lead = d.iter().find(|x| !x.is_zero())?.inverse()?;
        return Some(d.map(|x| &x * &lead));
    }
    None
}

fn gradients<C: Ring>(a: &C, b: &C, p: &[C; 4]) -> ([C; 4], [C; 4]) {
    let three = C::from_int(3);
    let [x, y, zz, w] = p.clone();
    let gu = [
        three.clone() * a.clone() * x.clone() * x.clone(),
        C::zero(),
        three.clone() * b.clone() * zz.clone() * zz.clone(),
        three * w.clone() * w,
    ];
    let gv = [zz, C::from_int(-2) * y, x, C::zero()];
    (gu, gv)
}

fn dot<C: Ring>(u: &[C; 4], v: &[C; 4]) -> C {
    u.iter().zip(v).fold(C::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// `(grad V . d) grad U - (grad U . d) grad V`: the plane spanned by the
/// tangent line of the branch curve at `P` and the direction `d`.
fn span_plane<C: Ring>(a: &C, b: &C, p: &[C; 4], d: &[C; 4]) -> ([C; 4], [C; 4], [C; 4]) {
    let (gu, gv) = gradients(a, b, p);
    let (du, dv) = (dot(&gu, d), dot(&gv, d));
    let h = std::array::from_fn(|i| dv.clone() * gu[i].clone() - du.clone() * gv[i].clone());
    (h, gu, gv)
}

pub fn plane_through_tangent_and_direction(
    p: &[FieldElem; 4],
    d: &[FieldElem; 4],
    s: &Surface,
) -> Result<DualPlane, FamilyError> {
    let (u, v) = branch_equations(s);
    if !u.eval(p).is_zero() || !v.eval(p).is_zero() {
        return Err(FamilyError::NotOnBranchCurve(format!("{p:?}")));
    }
    let (h, gu, gv) = span_plane(s.a(), s.b(), p, d);
    if exact_rank(vec![gu.to_vec(), gv.to_vec()]) < 2 {
        return Err(FamilyError::SingularPoint);
    }
    let [k, l, m, n] = h;
    DualPlane::new(k, l, m, n).map_err(|_| FamilyError::DegenerateSpan)
}

/// Complex version; `P` only needs to lie on the branch curve approximately.
pub fn plane_through_tangent_and_direction_numeric(
    p: &[Complex64; 4],
    d: &[Complex64; 4],
    s: &Surface,
) -> Result<[Complex64; 4], FamilyError> {
    let (a, b) = (embed_complex(s.a()), embed_complex(s.b()));
    let (h, gu, gv) = span_plane(&a, &b, p, d);
    let scale = gu.iter().chain(&gv).map(|c| c.norm()).fold(0.0, f64::max)
        * d.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let size = h.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if size <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
        return Err(FamilyError::DegenerateSpan);
    }
    Ok(h.map(|c| c / size))
}

/// How far `H` is from being tangent to the branch curve at `Q`: the
/// incidence `H(Q)` plus the largest 3x3 minor of `[H; grad U; grad V]`, all
/// relative to the vector sizes.
pub fn tangency_residual(h: &[Complex64; 4], q: &[Complex64; 4], s: &Surface) -> f64 {
    let (a, b) = (embed_complex(s.a()), embed_complex(s.b()));
    let (gu, gv) = gradients(&a, &b, q);
    let n = |v: &[Complex64; 4]| v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    let incidence = dot(h, q).norm() / (n(h) * n(q));
    let rows = [h.map(|c| c / n(h)), gu.map(|c| c / n(&gu)), gv.map(|c| c / n(&gv))];
    let mut worst: f64 = 0.0;
    for skip in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let e = |i: usize, j: usize| rows[i][cols[j]];
        let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        worst = worst.max(det.norm());
    }
    incidence.max(worst)
}
