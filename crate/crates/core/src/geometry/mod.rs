//! The surface, its branch curve on the quadric cone, bitangent planes and
//! the curves of the elliptic family.

mod curve;
mod surface;
mod tangency;
mod wpoint;

pub use curve::{
    adjunction_identity_check, adjunction_identity_sides, builtin_curve_fixtures, curve_point_smooth,
    family_curve, family_plane, fujita_invariants, intermediate_line_variant, load_curve_fixtures,
    perfect_square_check, section_f, section_f_square, section_point, section_w_closed_form,
    section_w_swapped_variant, section_z, CurveFixture, EPoint, FamilyCurve,
};
pub use surface::{bitangent_plane, binary_ring, branch_sextic, cone_chart, on_surface, DualPlane, Surface};
pub use tangency::{
    dehomogenize_binary, factor_multiplicity, tangency_profile, TangencyClass, TangencyProfile,
};
pub use wpoint::WPoint;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("{coords} coordinates for {weights} weights")]
    WeightMismatch { coords: usize, weights: usize },
    #[error("weights must be positive")]
    BadWeights,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("all plane coefficients are zero")]
    ZeroPlane,
    #[error("surface coefficients must be nonzero")]
    DegenerateSurface,
    #[error("{0} is not on the branch curve")]
    NotOnBranchCurve(String),
    #[error("plane {0} passes through the cone vertex")]
    DegeneratePlane(String),
    #[error("the restriction sextic vanishes identically")]
    ZeroSextic,
    #[error("not a nonzero binary form: {0}")]
    NotBinaryForm(String),
    #[error("{0} is not on the parametrizing cubic")]
    NotOnCubic(String),
    #[error("degenerate fiber at {0}")]
    FiberDegenerate(String),
    #[error("internal inconsistency: {0} has no square root in k")]
    MissingSqrt(String),
    #[error("{0} is not on the curve")]
    NotOnCurve(String),
    #[error("degree must be positive")]
    BadDegree,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
