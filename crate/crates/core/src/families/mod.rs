//! The four involution families of bitangent planes: constant directions,
//! the plane construction, the printed dual components and their numeric
//! verification.

mod component;
mod involution;
mod numeric;

pub use component::{
    builtin_component, builtin_components, component_involution, component_membership,
    component_membership_numeric, component_residual, dual_ring, iota3_identity_check, parse_components,
    relative_residual, scale_component, DualComponent, COMPONENTS_TEXT,
};
pub use involution::{
    branch_equations, fixed_direction, involutions, plane_through_tangent_and_direction,
    plane_through_tangent_and_direction_numeric, space_ring, tangency_residual, Involution,
};
pub use numeric::{sample_component_points, verify_bitangency_numeric, SAMPLE_RESIDUAL};

use crate::geometry::GeometryError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{0} is not on the branch curve")]
    NotOnBranchCurve(String),
    #[error("the branch curve is singular at the point")]
    SingularPoint,
    #[error("tangent line and direction do not span a plane")]
    DegenerateSpan,
    #[error("plane {0} passes through the cone vertex")]
    DegeneratePlane(String),
    #[error("bad component: {0}")]
    BadComponent(String),
    #[error("cannot rescale: {0}")]
    BadScale(String),
    #[error("sampling failed: {0}")]
    SamplingFailed(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
