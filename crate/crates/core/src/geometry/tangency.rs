use std::fmt;

use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::numbers::FieldElem;
use crate::poly::{MPoly, UPoly};
use crate::ring::{Field, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TangencyClass {
    Transverse,
    SimpleTangent,
    Bitangent,
    Tritangent,
    HigherOrder,
    Degenerate,
}

impl fmt::Display for TangencyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TangencyClass::Transverse => "transverse",
            TangencyClass::SimpleTangent => "simple-tangent",
            TangencyClass::Bitangent => "bitangent",
            TangencyClass::Tritangent => "tritangent",
            TangencyClass::HigherOrder => "higher-order",
            TangencyClass::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Root multiplicities of a restriction sextic over the algebraic closure,
/// sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangencyProfile {
    pub multiplicities: Vec<u32>,
    pub class: TangencyClass,
}

impl TangencyProfile {
    pub fn from_multiplicities(mut m: Vec<u32>) -> Self {
        m.sort_unstable_by(|a, b| b.cmp(a));
        let twos = m.iter().filter(|&&e| e == 2).count();
        let class = if m.iter().any(|&e| e >= 3) {
            TangencyClass::HigherOrder
        } else {
            match twos {
                0 => TangencyClass::Transverse,
                1 => TangencyClass::SimpleTangent,
                2 => TangencyClass::Bitangent,
                _ => TangencyClass::Tritangent,
            }
        };
        TangencyProfile { multiplicities: m, class }
    }

    /// Profile of a plane through the cone vertex.
    pub fn degenerate() -> Self {
        TangencyProfile { multiplicities: Vec::new(), class: TangencyClass::Degenerate }
    }

    pub fn is_bitangent(&self) -> bool {
        self.class == TangencyClass::Bitangent
    }
}

impl fmt::Display for TangencyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(u32::to_string).collect();
        write!(f, "{{{}}} {}", parts.join(","), self.class)
    }
}

/// Degree of a binary form, or an error when it is zero or not homogeneous.
fn binary_degree<C: Ring>(phi: &MPoly<C>) -> Result<u32, GeometryError> {
    if phi.ring().len() != 2 {
        return Err(GeometryError::NotBinaryForm(format!("{:?}", phi.ring().vars())));
    }
    let mut degs = phi.terms().map(|(m, _)| m.degree());
    let d = degs.next().ok_or(GeometryError::ZeroSextic)?;
    if degs.any(|e| e != d) {
        return Err(GeometryError::NotBinaryForm("not homogeneous".into()));
    }
    Ok(d)
}

/// `f(x, 1)` together with the multiplicity of the root at infinity, `d - deg f(x, 1)`.
pub fn dehomogenize_binary<C: Ring>(phi: &MPoly<C>) -> Result<(UPoly<C>, u32), GeometryError> {
    let d = binary_degree(phi)?;
    let u = phi.dehomogenize(0, 1)?;
    let deg = u.degree().expect("nonzero form") as u32;
    Ok((u, d - deg))
}

/// Exact profile via Yun's decomposition of `phi(x, 1)`, with the degree
/// deficit counted as one root at infinity.
pub fn tangency_profile(phi: &MPoly<FieldElem>) -> Result<TangencyProfile, GeometryError> {
    let (u, at_infinity) = dehomogenize_binary(phi)?;
    let mut m = u.squarefree()?.multiplicities();
    if at_infinity > 0 {
        m.push(at_infinity);
    }
    Ok(TangencyProfile::from_multiplicities(m))
}

/// Largest `e` with `q^e | phi` for binary forms over a field.
pub fn factor_multiplicity<C: Field>(phi: &MPoly<C>, q: &MPoly<C>) -> Result<u32, GeometryError> {
    phi.check_ring(q)?;
    let dq = binary_degree(q)?;
    if dq == 0 {
        return Err(GeometryError::NotBinaryForm("constant factor".into()));
    }
    // dehomogenize in whichever variable keeps q at full degree
    let (set_one, var) = if q.degree_in(0) == Some(dq) { (1, 0) } else { (0, 1) };
    binary_degree(phi)?;
    let mut f = phi.dehomogenize(var, set_one)?;
    let g = q.dehomogenize(var, set_one)?;
    let mut e = 0;
    while let Some(next) = f.div_exact(&g) {
        f = next;
        e += 1;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::binary_ring;

    #[test]
    fn classification() {
        let p = |s: &str| tangency_profile(&binary_ring().parse(s).unwrap()).unwrap();
        let t = p("(x^2 + 2*y^2)^2 * (12*y^2 - 15*x^2)");
        assert_eq!(t.multiplicities, vec![2, 2, 1, 1]);
        assert_eq!(t.class, TangencyClass::Bitangent);
        let t = p("x^6 + y^6");
        assert_eq!(t.multiplicities, vec![1; 6]);
        assert_eq!(t.class, TangencyClass::Transverse);
        let t = p("(x^2 - y^2)^3");
        assert_eq!(t.multiplicities, vec![3, 3]);
        assert_eq!(t.class, TangencyClass::HigherOrder);
        assert_eq!(p("(x - y)^2 * (x + y)^2 * (x^2 + y^2)").class, TangencyClass::Bitangent);
        assert_eq!(p("(x - y)^2 * (x + y)^2 * x^2").class, TangencyClass::Tritangent);
        assert_eq!(p("(x - y)^2 * (x^4 + y^4)").class, TangencyClass::SimpleTangent);
    }

    #[test]
    fn root_at_infinity() {
        let p = |s: &str| tangency_profile(&binary_ring().parse(s).unwrap()).unwrap();
        // y^2 | phi: x = infinity is a double root of phi(x, 1)
        let t = p("y^2 * (x - y)^2 * (x^2 + 3*y^2)");
        assert_eq!(t.multiplicities, vec![2, 2, 1, 1]);
        assert_eq!(p("y^6").multiplicities, vec![6]);
        assert_eq!(p("x^6").multiplicities, vec![6]);
    }

    #[test]
    fn errors() {
        let r = binary_ring();
        assert_eq!(tangency_profile(&r.zero()), Err(GeometryError::ZeroSextic));
        assert!(matches!(
            tangency_profile(&r.parse("x^2 + y").unwrap()),
            Err(GeometryError::NotBinaryForm(_))
        ));
    }

    #[test]
    fn factor_multiplicities() {
        let r = binary_ring();
        let phi = r.parse("(x^2 + 2*y^2)^2 * (12*y^2 - 15*x^2)").unwrap();
        assert_eq!(factor_multiplicity(&phi, &r.parse("x^2 + 2*y^2").unwrap()).unwrap(), 2);
        assert_eq!(factor_multiplicity(&phi, &r.parse("x + y").unwrap()).unwrap(), 0);
        let psi = r.parse("y^3 * x^3").unwrap();
        assert_eq!(factor_multiplicity(&psi, &r.parse("y").unwrap()).unwrap(), 3);
    }
}
