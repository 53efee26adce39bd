//! Exact verification toolkit for the surface `w^2 = z^3 + 49x^6 + 49y^6` in
//! P(1,1,2,3) over Q(zeta): its elliptic family of rational curves in
//! |-2K_S|, the section through that family, the Galois-invariant Picard
//! lattice, the bitangent components of the dual branch curve, and a
//! height-counting harness.

pub mod elliptic;
pub mod families;
pub mod geometry;
pub mod harness;
pub mod numbers;
pub mod par;
pub mod picard;
pub mod poly;
pub mod ring;

pub use numbers::{EisensteinInt, FieldElem, Rational};
pub use poly::{MPoly, PolyRing, WeightVector};
