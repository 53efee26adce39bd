use super::{MPoly, PolyError, PolyRing};
use crate::ring::{Field, Ring};

/// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        UPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(C::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(C::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UPoly::constant(C::one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &C) -> Self {
        UPoly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Lowest-degree index with a nonzero coefficient: the multiplicity of 0 as a root.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn to_mpoly(&self, ring: &PolyRing, var: usize) -> MPoly<C> {
        MPoly::from_univariate(ring, var, self)
    }
}

impl<C: Field> UPoly<C> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => UPoly::zero(),
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lead_inv = d.leading().and_then(Field::inv).ok_or(PolyError::ZeroPolynomial)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() * lead_inv.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && o.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Yun's squarefree decomposition over a field of characteristic zero.
    pub fn squarefree(&self) -> Result<SquarefreeDecomposition<C>, PolyError> {
        let unit = self.leading().cloned().ok_or(PolyError::ZeroPolynomial)?;
        let f = self.monic();
        let mut factors = Vec::new();
        if f.degree() == Some(0) {
            return Ok(SquarefreeDecomposition { unit, factors });
        }
        let df = f.derivative();
        let g = f.gcd(&df)?;
        let mut a = f.div_exact(&g).expect("gcd divides f");
        let mut b = df.div_exact(&g).expect("gcd divides f'");
        let mut i = 1u32;
        loop {
            let c = b.sub(&a.derivative());
            if c.is_zero() {
                if a.degree() > Some(0) {
                    factors.push((a.monic(), i));
                }
                break;
            }
            let d = a.gcd(&c)?;
            if d.degree() > Some(0) {
                factors.push((d.clone(), i));
            }
            a = a.div_exact(&d).expect("d divides a");
            b = c.div_exact(&d).expect("d divides c");
            i += 1;
            if a.degree() == Some(0) {
                break;
            }
        }
        Ok(SquarefreeDecomposition { unit, factors })
    }
}

/// `f = unit * prod g_i^i` with each `g_i` monic, squarefree and pairwise coprime.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition<C> {
    pub unit: C,
    pub factors: Vec<(UPoly<C>, u32)>,
}

impl<C: Ring> SquarefreeDecomposition<C> {
    pub fn reconstruct(&self) -> UPoly<C> {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (g, i)| acc.mul(&g.pow(*i)))
    }

    /// Root multiplicities over the algebraic closure: `deg g_i` copies of `i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|(g, i)| std::iter::repeat(*i).take(g.degree().unwrap_or(0)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl<C: Field> MPoly<C> {
    /// Monic gcd of two polynomials in the same single variable.
    pub fn ugcd(&self, o: &MPoly<C>) -> Result<MPoly<C>, PolyError> {
        self.check_ring(o)?;
        let (va, a) = self.to_univariate()?;
        let (vb, b) = o.to_univariate()?;
        let var = match (va, vb) {
            (Some(x), Some(y)) if x != y => {
                return Err(PolyError::NotUnivariate(format!("{:?}", self.ring().vars())))
            }
            (x, y) => x.or(y).unwrap_or(0),
        };
        Ok(a.gcd(&b)?.to_mpoly(self.ring(), var))
    }

    /// Squarefree factors `(g_i, i)` of a univariate polynomial, plus the leading coefficient.
    pub fn squarefree_decompose(&self) -> Result<(C, Vec<(MPoly<C>, u32)>), PolyError> {
        let (v, u) = self.to_univariate()?;
        let dec = u.squarefree()?;
        let var = v.unwrap_or(0);
        Ok((
            dec.unit,
            dec.factors.into_iter().map(|(g, i)| (g.to_mpoly(self.ring(), var), i)).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, Rational};

    fn up(c: &[i64]) -> UPoly<Rational> {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_basic() {
        assert_eq!(up(&[-1, 0, 1]).gcd(&up(&[-1, 1])).unwrap(), up(&[-1, 1]));
        assert_eq!(up(&[4, 0, 2]).gcd(&UPoly::zero()).unwrap(), up(&[2, 0, 1]));
        assert_eq!(UPoly::<Rational>::zero().gcd(&UPoly::zero()), Err(PolyError::GcdOfZeros));
    }

    #[test]
    fn yun_examples() {
        // (x - 1)^2 (x + 1)
        let f = up(&[-1, 1]).pow(2).mul(&up(&[1, 1]));
        let d = f.squarefree().unwrap();
        assert_eq!(d.factors, vec![(up(&[1, 1]), 1), (up(&[-1, 1]), 2)]);
        assert_eq!(d.reconstruct(), f);
        let sf = up(&[3, 0, 6]);
        let d = sf.squarefree().unwrap();
        assert_eq!(d.factors, vec![(sf.monic(), 1)]);
        assert_eq!(d.unit, int(6));
    }

    #[test]
    fn yun_higher_multiplicities() {
        let f = up(&[0, 1]).pow(3).mul(&up(&[2, 0, 1]).pow(2)).mul(&up(&[5, 1])).scale(&int(-7));
        let d = f.squarefree().unwrap();
        assert_eq!(d.reconstruct(), f);
        assert_eq!(d.multiplicities(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn division() {
        let (q, r) = up(&[1, 0, 0, 1]).div_rem(&up(&[1, 1])).unwrap();
        assert_eq!(q, up(&[1, -1, 1]));
        assert!(r.is_zero());
        assert!(up(&[1]).div_rem(&UPoly::zero()).is_err());
    }
}
