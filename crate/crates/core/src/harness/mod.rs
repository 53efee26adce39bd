//! Heights, point counting and the verification report.

mod count;
mod enumerate;
mod height;
mod verify;

pub use count::{count_report, exceptional_curves, CountOptions, CountReport, CountRow, CurveSummary};
pub use enumerate::{
    enumerate_curve_points, enumerate_curve_points_with, enumerate_surface_points, enumerate_surface_points_with,
    height_pairs, surface_z_bound,
};
pub use height::{height, HeightEntry, IntegralPoint, Source};
pub use verify::{
    claim_ids, run_claims, verify_all, ClaimReport, ClaimStatus, VerificationReport, REPORT_VERSION,
};

use crate::elliptic::EllipticError;
use crate::families::FamilyError;
use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("expected a point of P(1,1,2,3)")]
    NotP1123,
    #[error("x = y = 0 has no height in this chart")]
    VertexPoint,
    #[error("curve of {0} passes through the cone vertex")]
    DegenerateCurve(String),
    #[error("value too large for the integer fast path: {0}")]
    Overflow(String),
    #[error("unknown claim {0}")]
    UnknownClaim(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
