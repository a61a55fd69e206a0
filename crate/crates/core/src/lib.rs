//! Numerical verification toolkit for the orthospectrum identity of
//! hyperbolic surfaces with totally geodesic boundary.
//!
//! The crate has four working parts:
//!
//! * [`dilog`] — the dilogarithm `Li2`, the Rogers dilogarithm `L`, its
//!   derivative, the per-orthogeodesic summand `L(1/cosh²(l/2))`, and the
//!   five-term (Abel) combination that pins `L` down;
//! * [`hypgeom`] — an upper-half-plane geometry kernel: projective ideal
//!   points, geodesics, Moebius maps, cross-ratio normalization of ideal
//!   quadrilaterals, visual angles, and distances;
//! * [`quadvol`] — the volume of crossing tangent vectors of the normalized
//!   quadrilateral configuration, computed by closed formula, by direct
//!   quadrature of the exact crossing angle measure, and by seeded Monte
//!   Carlo, all converging on `8 L(1 − x)`;
//! * [`orthospec`] — a pair-of-pants builder and an orthogeodesic
//!   enumerator over double cosets of the free group, feeding the
//!   Bridgeman partial sums `Σ L(1/cosh²(l_i/2)) → −π²χ/2` and, as an
//!   independent cross-check on the same spectrum, the Basmajian sums
//!   `Σ 2 ln coth(l_i/2) → length(∂Σ)`.
//!
//! All numeric kernels are generic over the scalar type through
//! [`real::Real`]; the `*64` aliases below fix `f64`, the working precision
//! of every shipped tolerance.

pub mod dilog;
pub mod error;
pub mod format;
pub mod hypgeom;
pub mod orthospec;
pub mod quadrature;
pub mod quadvol;
pub mod real;
pub mod rng;

pub use error::{Error, Result};
pub use real::Real;

/// `f64` instantiations of the core geometric types.
pub type IdealPoint64 = hypgeom::IdealPoint<f64>;
pub type Geodesic64 = hypgeom::Geodesic<f64>;
pub type MoebiusMap64 = hypgeom::MoebiusMap<f64>;
pub type HPoint64 = hypgeom::HPoint<f64>;
pub type HConfig64 = hypgeom::HConfig<f64>;
pub type TriangleDecomposition64 = quadvol::TriangleDecomposition<f64>;
pub type VolumeReport64 = quadvol::VolumeReport<f64>;
pub type McEstimate64 = quadvol::McEstimate<f64>;
pub type SurfaceSpec64 = orthospec::SurfaceSpec<f64>;
pub type OrthoRecord64 = orthospec::OrthoRecord<f64>;
pub type Spectrum64 = orthospec::Spectrum<f64>;
