//! Exact linear algebra over Q on the two Galois matrices, and the joint
//! fixed subspace that pins down the Picard rank.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PicardError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ragged or empty matrix")]
    BadShape,
}

/// Dense matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, PicardError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(PicardError::BadShape);
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, PicardError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(PicardError::BadShape);
        }
        let data = rows.iter().flatten().map(|&x| Rational::from_integer(x.into())).collect();
        QMatrix::new(rows.len(), cols, data)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn sub(&self, o: &QMatrix) -> Result<Self, PicardError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(PicardError::DimensionMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Row vector times matrix: `v^T M`.
    pub fn left_mul(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(Rational::zero(), |acc, i| acc + &v[i] * self.get(i, j)))
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// Stack rows of `self` over rows of `o`.
    pub fn vstack(&self, o: &QMatrix) -> Result<Self, PicardError> {
        if self.cols != o.cols {
            return Err(PicardError::DimensionMismatch(format!("{} vs {} columns", self.cols, o.cols)));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(QMatrix { rows: self.rows + o.rows, cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        let r = rref(self);
        (0..r.rows).filter(|&i| r.row(i).iter().any(|x| !x.is_zero())).count()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let parts: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination.
pub fn rref(m: &QMatrix) -> QMatrix {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        for j in 0..a.cols {
            a.data.swap(r * a.cols + j, p * a.cols + j);
        }
        let inv = a.get(r, c).recip();
        for j in 0..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in 0..a.cols {
                let v = a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, v);
            }
        }
        r += 1;
        if r == a.rows {
            break;
        }
    }
    a
}

/// Right null space, one basis vector per free column, in the standard
/// form read off the reduced echelon matrix.
pub fn kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    let r = rref(m);
    let mut pivots = Vec::new();
    for i in 0..r.rows {
        if let Some(c) = (0..r.cols).find(|&c| !r.get(i, c).is_zero()) {
            pivots.push((i, c));
        }
    }
    let free: Vec<usize> = (0..r.cols).filter(|c| !pivots.iter().any(|(_, p)| p == c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); r.cols];
            v[f] = Rational::one();
            for &(i, c) in &pivots {
                v[c] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// A subspace of Q^n with a basis in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSubspace {
    pub ambient: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl QSubspace {
    pub fn from_vectors(ambient: usize, vs: Vec<Vec<Rational>>) -> Self {
        if vs.is_empty() {
            return QSubspace { ambient, basis: Vec::new() };
        }
        let m = QMatrix::new(vs.len(), ambient, vs.into_iter().flatten().collect()).expect("consistent");
        let r = rref(&m);
        let basis = (0..r.rows)
            .map(|i| r.row(i).to_vec())
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        QSubspace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        QSubspace::from_vectors(self.ambient, vs).dim() == self.dim()
    }

    pub fn contains_subspace(&self, o: &QSubspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }
}

/// Vectors with `v^T M = v^T` for every `M`: the joint kernel of `M^T - I`.
pub fn fixed_subspace(ms: &[QMatrix]) -> Result<QSubspace, PicardError> {
    let first = ms.first().ok_or(PicardError::BadShape)?;
    let n = first.rows;
    let mut stacked: Option<QMatrix> = None;
    for m in ms {
        if m.rows != n || m.cols != n {
            return Err(PicardError::DimensionMismatch(format!("{}x{} in a {n}-dimensional family", m.rows, m.cols)));
        }
        let block = m.transpose().sub(&QMatrix::identity(n))?;
        stacked = Some(match stacked {
            None => block,
            Some(s) => s.vstack(&block)?,
        });
    }
    Ok(QSubspace::from_vectors(n, kernel(&stacked.expect("nonempty"))))
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
pub struct GaloisFixture {
    pub sigma: Vec<Vec<i64>>,
    pub rho: Vec<Vec<i64>>,
}

pub const SIGMA: [[i64; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, -1, -1, -1, 2],
    [0, 0, 0, -1, -1, -1, -1, -1, 2],
    [0, 0, -1, 0, -1, -1, -1, -1, 2],
    [0, 0, 0, 0, 0, 0, -1, -1, 1],
    [0, 0, 0, 0, 0, -1, 0, -1, 1],
    [0, 0, 0, 0, 0, -1, -1, 0, 1],
    [0, 0, -1, -1, -1, -2, -2, -2, 4],
];

pub const RHO: [[i64; 9]; 9] = [
    [-2, -3, -2, -2, -2, -2, -2, -2, 6],
    [0, -2, -1, -1, -1, -1, -1, -1, 3],
    [-1, -2, -2, -2, -1, -2, -2, -2, 5],
    [-1, -2, -1, -1, 0, -1, -1, -1, 3],
    [-1, -2, -2, -2, -1, -1, -1, -1, 4],
    [-1, -2, -1, -2, -1, -2, -1, -1, 4],
    [-1, -2, -1, -2, -1, -1, -2, -1, 4],
    [-1, -2, -1, -2, -1, -1, -1, -2, 4],
    [-3, -6, -4, -5, -3, -4, -4, -4, 12],
];

pub const GALOIS_FIXTURE_JSON: &str = include_str!("../fixtures/galois_matrices.json");

fn to_rows(m: &[[i64; 9]; 9]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// `(M_sigma, M_rho)`.
pub fn galois_matrices() -> (QMatrix, QMatrix) {
    (
        QMatrix::from_rows(&to_rows(&SIGMA)).expect("9x9"),
        QMatrix::from_rows(&to_rows(&RHO)).expect("9x9"),
    )
}

/// Whether the checked-in JSON copy agrees with the constants.
pub fn fixture_matches_constants() -> bool {
    match serde_json::from_str::<GaloisFixture>(GALOIS_FIXTURE_JSON) {
        Ok(f) => f.sigma == to_rows(&SIGMA) && f.rho == to_rows(&RHO),
        Err(_) => false,
    }
}

/// Integer multiple with content 1 and negative last nonzero coordinate.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    if ints.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()) {
        for x in &mut ints {
            *x = -x.clone();
        }
    }
    ints
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PicardCheck {
    pub rank: usize,
    pub generator: Vec<String>,
    pub is_anticanonical_direction: bool,
    /// Dimension of the sigma-fixed part alone.
    pub sigma_only_dim: usize,
    /// Whether the generator is fixed as a column vector (`M v = v`) too.
    pub right_fixed: bool,
}

pub fn anticanonical_vector() -> Vec<Rational> {
    let mut v = vec![Rational::one(); 9];
    v[8] = Rational::from_integer((-3).into());
    v
}

pub fn picard_rank_check() -> PicardCheck {
    let (s, r) = galois_matrices();
    let joint = fixed_subspace(&[s.clone(), r.clone()]).expect("square 9x9");
    let sigma_only = fixed_subspace(&[s.clone()]).expect("square 9x9");
    let gen = joint.basis.first().map(|v| primitive_integer_vector(v)).unwrap_or_default();
    let k = anticanonical_vector();
    let k_int = primitive_integer_vector(&k);
    let right_fixed = s.mul_vec(&k) == k && r.mul_vec(&k) == k;
    PicardCheck {
        rank: joint.dim(),
        is_anticanonical_direction: joint.dim() == 1 && gen == k_int,
        generator: gen.iter().map(|x| x.to_string()).collect(),
        sigma_only_dim: sigma_only.dim(),
        right_fixed,
    }
}
