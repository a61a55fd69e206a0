//! Upper-half-plane hyperbolic geometry kernel: ideal boundary points in
//! homogeneous coordinates, geodesics, Moebius maps, cross-ratio
//! normalization of ideal quadrilaterals, visual angles, and distances.

mod halfplane;
mod ideal;
mod moebius;
mod quad;

pub use halfplane::{
    boundary_direction, dist_to_geodesic, geodesic_through, hyp_dist, midpoint,
    perpendicular_bisector, visual_angle, BoundaryArc, HPoint,
};
pub use ideal::{wrap_angle, Geodesic, IdealPoint, LinkClass, POINT_EPS};
pub use moebius::MoebiusMap;
pub use quad::{cross_ratio, geodesic_distance, normalize_quad, HConfig};
