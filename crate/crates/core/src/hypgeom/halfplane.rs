//! Interior-point machinery for the upper half-plane: distances, geodesics
//! through points, perpendicular bisectors, and visual angles of boundary
//! arcs.

use num_complex::Complex;

use super::ideal::{wrap_angle, Geodesic, IdealPoint};
use super::moebius::MoebiusMap;
use crate::error::{Error, Result};
use crate::real::Real;

/// A point of the open upper half-plane.
pub type HPoint<R> = Complex<R>;

fn require_interior<R: Real>(z: HPoint<R>, what: &str) -> Result<()> {
    if !(z.im > R::zero()) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!(
            "{what} requires a point strictly inside the half-plane, got {z}"
        )));
    }
    Ok(())
}

/// Hyperbolic distance between interior points,
/// `d = 2 asinh(|z − w| / (2 sqrt(Im z · Im w)))`.
pub fn hyp_dist<R: Real>(z: HPoint<R>, w: HPoint<R>) -> R {
    let chord = (z - w).norm();
    let denom = R::of(2.0) * (z.im * w.im).sqrt();
    R::of(2.0) * (chord / denom).asinh()
}

/// Distance from an interior point to a geodesic.
pub fn dist_to_geodesic<R: Real>(z: HPoint<R>, g: &Geodesic<R>) -> Result<R> {
    require_interior(z, "dist_to_geodesic")?;
    let m = MoebiusMap::to_standard_axis(g);
    let w = m.apply_interior(z);
    Ok((w.re.abs() / w.im).asinh())
}

/// The geodesic through two distinct interior points.
pub fn geodesic_through<R: Real>(z: HPoint<R>, w: HPoint<R>) -> Result<Geodesic<R>> {
    require_interior(z, "geodesic_through")?;
    require_interior(w, "geodesic_through")?;
    let dx = z.re - w.re;
    if dx == R::zero() {
        if z.im == w.im {
            return Err(Error::Degenerate(
                "no unique geodesic through coincident points".into(),
            ));
        }
        return Ok(Geodesic::vertical(z.re));
    }
    // center of the circle through z, w orthogonal to the real axis
    let c = (z.norm_sqr() - w.norm_sqr()) / (R::of(2.0) * dx);
    let r = (z - Complex::new(c, R::zero())).norm();
    Geodesic::from_reals(c - r, c + r)
}

/// Hyperbolic midpoint of the segment `[z, w]`.
pub fn midpoint<R: Real>(z: HPoint<R>, w: HPoint<R>) -> Result<HPoint<R>> {
    let g = geodesic_through(z, w)?;
    let m = MoebiusMap::to_standard_axis(&g);
    let zi = m.apply_interior(z);
    let wi = m.apply_interior(w);
    // both images sit on the imaginary axis; the midpoint is the geometric mean
    let mid = Complex::new(R::zero(), (zi.im * wi.im).sqrt());
    Ok(m.inverse().apply_interior(mid))
}

/// Perpendicular bisector of the segment `[z, w]`, as a geodesic.
pub fn perpendicular_bisector<R: Real>(z: HPoint<R>, w: HPoint<R>) -> Result<Geodesic<R>> {
    let g = geodesic_through(z, w)?;
    let m = MoebiusMap::to_standard_axis(&g);
    let zi = m.apply_interior(z);
    let wi = m.apply_interior(w);
    let h = (zi.im * wi.im).sqrt();
    // the geodesic orthogonal to (0, ∞) through i h is the semicircle (−h, h)
    let inv = m.inverse();
    Geodesic::new(
        inv.apply(&IdealPoint::from_real(-h)),
        inv.apply(&IdealPoint::from_real(h)),
    )
}

/// A boundary arc, traversed counterclockwise `from → to` (the side choice).
/// Equal endpoints denote the full circle.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryArc<R> {
    pub from: IdealPoint<R>,
    pub to: IdealPoint<R>,
}

impl<R: Real> BoundaryArc<R> {
    pub fn new(from: IdealPoint<R>, to: IdealPoint<R>) -> Self {
        Self { from, to }
    }

    pub fn complement(&self) -> Self {
        Self {
            from: self.to,
            to: self.from,
        }
    }
}

/// Direction angle at `z`, in `[0, 2π)`, of the boundary point `t`: the
/// image of `t` on the unit circle after `z` is moved to the disk center by
/// `w ↦ (w − z)/(w − z̄)`.
pub fn boundary_direction<R: Real>(z: HPoint<R>, t: &IdealPoint<R>) -> R {
    let tp = Complex::new(t.p(), R::zero());
    let tq = t.q();
    let num = tp - z * tq;
    let den = tp - z.conj() * tq;
    let u = num / den;
    wrap_angle(u.im.atan2(u.re))
}

/// Normalized visual angle of a boundary arc from an interior point: the
/// fraction (of `2π`) of directions at `z` whose geodesic ray lands in the
/// arc.  This is the harmonic extension of the arc's indicator function.
pub fn visual_angle<R: Real>(z: HPoint<R>, arc: &BoundaryArc<R>) -> Result<R> {
    require_interior(z, "visual_angle")?;
    if IdealPoint::approx_eq(&arc.from, &arc.to) {
        return Ok(R::one()); // full-circle convention
    }
    let a = boundary_direction(z, &arc.from);
    let b = boundary_direction(z, &arc.to);
    Ok(wrap_angle(b - a) / (R::of(2.0) * R::PI()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn pt(re: f64, im: f64) -> HPoint<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn distance_matches_classical_formula() {
        // points on the imaginary axis: d(ia, ib) = |ln(b/a)|
        let d = hyp_dist(pt(0.0, 1.0), pt(0.0, 5.0));
        assert!((d - 5.0f64.ln()).abs() < 1e-13);
        // symmetry
        let a = pt(0.3, 0.9);
        let b = pt(-1.0, 2.0);
        assert!((hyp_dist(a, b) - hyp_dist(b, a)).abs() < 1e-15);
    }

    #[test]
    fn distance_to_standard_axis() {
        // d(x + iy, (0,∞)) = asinh(|x|/y)
        let g = Geodesic::<f64>::vertical(0.0);
        let d = dist_to_geodesic(pt(1.0, 1.0), &g).unwrap();
        assert!((d - 1.0f64.asinh()).abs() < 1e-13);
        assert!(dist_to_geodesic(pt(0.0, 1.0), &g).unwrap() < 1e-15);
    }

    #[test]
    fn geodesic_through_points() {
        // same real part: vertical line
        let g = geodesic_through(pt(2.0, 1.0), pt(2.0, 3.0)).unwrap();
        assert!(g.e1.to_real() == Some(2.0) || g.e2.to_real() == Some(2.0));
        // symmetric points about 0: unit-type semicircle
        let g = geodesic_through(pt(-0.5, 1.0), pt(0.5, 1.0)).unwrap();
        let (a, b) = (g.e1.to_real().unwrap(), g.e2.to_real().unwrap());
        assert!((a + b).abs() < 1e-12, "endpoints should be symmetric");
    }

    #[test]
    fn midpoint_is_equidistant() {
        let z = pt(-0.7, 0.8);
        let w = pt(1.9, 2.4);
        let m = midpoint(z, w).unwrap();
        let dz = hyp_dist(z, m);
        let dw = hyp_dist(w, m);
        assert!((dz - dw).abs() < 1e-11);
        assert!((dz + dw - hyp_dist(z, w)).abs() < 1e-11);
    }

    #[test]
    fn bisector_is_equidistant_locus() {
        let z = pt(-0.7, 0.8);
        let w = pt(1.9, 2.4);
        let bis = perpendicular_bisector(z, w).unwrap();
        // sample points on the bisector via its standard parametrization
        let m = MoebiusMap::to_standard_axis(&bis).inverse();
        for s in [-1.5f64, -0.3, 0.0, 0.8, 2.1] {
            let p = m.apply_interior(Complex::new(0.0, s.exp()));
            assert!(
                (hyp_dist(p, z) - hyp_dist(p, w)).abs() < 1e-10,
                "bisector point not equidistant at s = {s}"
            );
        }
    }

    #[test]
    fn visual_angle_of_negative_axis() {
        // arc from ∞ ccw to 0 is the negative real axis; from i it fills 1/2
        let arc = BoundaryArc::new(IdealPoint::infinity(), IdealPoint::from_real(0.0));
        let v = visual_angle(pt(0.0, 1.0), &arc).unwrap();
        assert!((v - 0.5).abs() < 1e-14);
        // on the ray arg z = θ the value is θ/π, independent of |z|
        let theta = 2.0 * PI / 5.0;
        for r in [0.1, 1.0, 7.3] {
            let z = pt(r * theta.cos(), r * theta.sin());
            let v = visual_angle(z, &arc).unwrap();
            assert!((v - theta / PI).abs() < 1e-13, "r = {r}");
        }
    }

    #[test]
    fn full_circle_and_complement() {
        let z = pt(0.4, 1.7);
        let arc = BoundaryArc::new(IdealPoint::from_real(-2.0), IdealPoint::from_real(3.0));
        let full = BoundaryArc::new(IdealPoint::from_real(1.0), IdealPoint::from_real(1.0));
        assert_eq!(visual_angle(z, &full).unwrap(), 1.0);
        let v = visual_angle(z, &arc).unwrap();
        let w = visual_angle(z, &arc.complement()).unwrap();
        assert!((v + w - 1.0).abs() < 1e-12);
        assert!(v > 0.0 && v < 1.0);
    }

    #[test]
    fn visual_angle_matches_poisson_kernel() {
        // for a finite interval (a, b): (atan((b−u)/v) − atan((a−u)/v)) / π
        let (a, b) = (-1.0f64, 2.0f64);
        let arc = BoundaryArc::new(IdealPoint::from_real(a), IdealPoint::from_real(b));
        for &(u, v) in &[(0.0, 1.0), (3.0, 0.5), (-4.0, 2.0)] {
            let expect = (((b - u) / v).atan() - ((a - u) / v).atan()) / PI;
            let got = visual_angle(pt(u, v), &arc).unwrap();
            assert!((got - expect).abs() < 1e-13, "at ({u}, {v})");
        }
    }

    #[test]
    fn boundary_point_rejected() {
        let arc = BoundaryArc::new(IdealPoint::infinity(), IdealPoint::from_real(0.0));
        assert!(visual_angle(pt(1.0, 0.0), &arc).is_err());
        assert!(visual_angle(pt(1.0, -2.0), &arc).is_err());
    }
}
