//! Cross-ratios, the normalized ideal quadrilateral `0, x, 1, ∞`, the
//! `l ↔ x ↔ α` parameter dictionary, and distances between disjoint
//! geodesics.

use num_complex::Complex;

use super::ideal::{Geodesic, IdealPoint, LinkClass};
use super::moebius::MoebiusMap;
use crate::error::{Error, Result};
use crate::real::Real;

/// Projective cross-ratio under the fixed convention
/// `cr(a, b, c, d) = ((a−c)(b−d)) / ((a−d)(b−c))`,
/// evaluated with homogeneous determinants so `∞` needs no special case.
/// Moebius-invariant.
pub fn cross_ratio<R: Real>(
    a: &IdealPoint<R>,
    b: &IdealPoint<R>,
    c: &IdealPoint<R>,
    d: &IdealPoint<R>,
) -> Result<R> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if IdealPoint::approx_eq(pts[i], pts[j]) {
                return Err(Error::Degenerate(
                    "cross-ratio needs four pairwise distinct points".into(),
                ));
            }
        }
    }
    let ac = IdealPoint::det(a, c);
    let bd = IdealPoint::det(b, d);
    let ad = IdealPoint::det(a, d);
    let bc = IdealPoint::det(b, c);
    Ok((ac * bd) / (ad * bc))
}

/// The three equivalent parameters of the normalized configuration: the
/// distance `l` between the geodesics `R = (0, ∞)` and `L = (x, 1)`, the
/// cross-ratio coordinate `x ∈ (0, 1)`, and the apex angle `α ∈ (0, π)` of
/// the triangle cut off by the diagonals, tied together by
/// `x = (1 + cos α)/2 = tanh²(l/2)`.
#[derive(Debug, Clone, Copy)]
pub struct HConfig<R> {
    l: R,
    x: R,
    alpha: R,
}

impl<R: Real> HConfig<R> {
    pub fn from_length(l: R) -> Result<Self> {
        if !(l > R::zero() && l.is_finite()) {
            return Err(Error::Domain(format!("length must be positive, got {l}")));
        }
        let t = (l * R::of(0.5)).tanh();
        let x = t * t;
        Ok(Self {
            l,
            x,
            alpha: alpha_of_x(x),
        })
    }

    pub fn from_x(x: R) -> Result<Self> {
        if !(x > R::zero() && x < R::one()) {
            return Err(Error::Domain(format!("x must lie in (0, 1), got {x}")));
        }
        Ok(Self {
            l: length_of_x(x),
            x,
            alpha: alpha_of_x(x),
        })
    }

    pub fn from_alpha(alpha: R) -> Result<Self> {
        if !(alpha > R::zero() && alpha < R::PI()) {
            return Err(Error::Domain(format!(
                "alpha must lie in (0, π), got {alpha}"
            )));
        }
        let x = (R::one() + alpha.cos()) * R::of(0.5);
        Ok(Self {
            l: length_of_x(x),
            x,
            alpha,
        })
    }

    pub fn length(&self) -> R {
        self.l
    }

    pub fn x(&self) -> R {
        self.x
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    /// Vertices `0, x, 1, ∞` in circular order.
    pub fn vertices(&self) -> [IdealPoint<R>; 4] {
        [
            IdealPoint::from_real(R::zero()),
            IdealPoint::from_real(self.x),
            IdealPoint::from_real(R::one()),
            IdealPoint::infinity(),
        ]
    }

    /// Edge `R = (∞, 0)`: one of the two geodesics the crossbar joins.
    pub fn edge_r(&self) -> Geodesic<R> {
        Geodesic::vertical(R::zero())
    }

    /// Edge `L = (x, 1)`.
    pub fn edge_l(&self) -> Geodesic<R> {
        Geodesic::from_reals(self.x, R::one()).expect("x < 1")
    }

    /// Edge `U = (1, ∞)`.
    pub fn edge_u(&self) -> Geodesic<R> {
        Geodesic::vertical(R::one())
    }

    /// Edge `D = (0, x)`.
    pub fn edge_d(&self) -> Geodesic<R> {
        Geodesic::from_reals(R::zero(), self.x).expect("x > 0")
    }

    /// Diagonal `(0, 1)`.
    pub fn diagonal_01(&self) -> Geodesic<R> {
        Geodesic::from_reals(R::zero(), R::one()).expect("distinct")
    }

    /// Diagonal `(x, ∞)`.
    pub fn diagonal_x_inf(&self) -> Geodesic<R> {
        Geodesic::vertical(self.x)
    }

    /// Intersection of the diagonals: `x + i sqrt(x − x²)`.
    pub fn center(&self) -> Complex<R> {
        Complex::new(self.x, (self.x - self.x * self.x).sqrt())
    }
}

fn alpha_of_x<R: Real>(x: R) -> R {
    (R::of(2.0) * x - R::one()).acos()
}

fn length_of_x<R: Real>(x: R) -> R {
    R::of(2.0) * x.sqrt().atanh()
}

/// Carry four boundary points in circular order to the normal position
/// `0, x, 1, ∞` (`v0 ↦ 0`, `v2 ↦ 1`, `v3 ↦ ∞`); returns the map and the
/// resulting configuration with `x = image of v1`.
///
/// The intended `R`-edge is `(v3, v0)` and `L`-edge `(v1, v2)`.  If the
/// points are not in positive circular order the image of `v1` cannot land
/// in `(0, 1)` and an ordering error is reported.
pub fn normalize_quad<R: Real>(
    v: &[IdealPoint<R>; 4],
) -> Result<(MoebiusMap<R>, HConfig<R>)> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if IdealPoint::approx_eq(&v[i], &v[j]) {
                return Err(Error::Degenerate(
                    "quadrilateral vertices must be pairwise distinct".into(),
                ));
            }
        }
    }
    let (v0, v1, v2, v3) = (&v[0], &v[1], &v[2], &v[3]);
    // row 1 kills v0 (image 0), row 2 kills v3 (image ∞); the relative scale
    // is fixed by sending v2 to 1
    let s1 = IdealPoint::det(v2, v3);
    let s2 = IdealPoint::det(v2, v0);
    let a = s1 * v0.q();
    let b = -s1 * v0.p();
    let c = s2 * v3.q();
    let d = -s2 * v3.p();
    let det = a * d - b * c;
    if !(det > R::zero()) {
        return Err(Error::Ordering(
            "vertices are not in positive circular order".into(),
        ));
    }
    let map = MoebiusMap::new(a, b, c, d)?;
    let image = map.apply(v1);
    let x = image.to_real().ok_or_else(|| {
        Error::Ordering("second vertex maps to ∞; inputs out of order".into())
    })?;
    if !(x > R::zero() && x < R::one()) {
        return Err(Error::Ordering(format!(
            "normalized x = {x} is outside (0, 1); vertices were not in circular order"
        )));
    }
    Ok((map, HConfig::from_x(x)?))
}

/// Distance between two disjoint geodesics with unlinked endpoints, via the
/// cross-ratio normalization: with `x` the normal coordinate of the four
/// endpoints, `tanh²(l/2) = x`, equivalently `cosh l = (1 + x)/(1 − x)`.
pub fn geodesic_distance<R: Real>(g1: &Geodesic<R>, g2: &Geodesic<R>) -> Result<R> {
    match g1.link_class(g2) {
        LinkClass::Shared => return Err(Error::SharedEndpoint),
        LinkClass::Crossing => return Err(Error::CrossingGeodesics),
        LinkClass::Disjoint => {}
    }
    // order the four endpoints circularly with g1 = (v3, v0) and g2 = (v1, v2)
    let mut pts = [
        (g1.e1, true),
        (g1.e2, true),
        (g2.e1, false),
        (g2.e2, false),
    ];
    pts.sort_by(|a, b| {
        a.0.circle_angle()
            .partial_cmp(&b.0.circle_angle())
            .expect("circle angles are finite")
    });
    // rotate so that position 0 starts g2's adjacent pair ... find rotation r
    // with pts[r], pts[r+3] in g1 (then pts[r+1], pts[r+2] are g2's pair)
    let mut start = None;
    for r in 0..4 {
        if pts[r].1 && pts[(r + 3) % 4].1 {
            start = Some(r);
            break;
        }
    }
    let r = start.ok_or(Error::CrossingGeodesics)?;
    let v0 = pts[r].0;
    let v1 = pts[(r + 1) % 4].0;
    let v2 = pts[(r + 2) % 4].0;
    let v3 = pts[(r + 3) % 4].0;

    // x and 1−x as separate determinant products; the complement form keeps
    // full relative precision when x approaches 1 (long distances)
    let d10 = IdealPoint::det(&v1, &v0);
    let d23 = IdealPoint::det(&v2, &v3);
    let d13 = IdealPoint::det(&v1, &v3);
    let d20 = IdealPoint::det(&v2, &v0);
    let d12 = IdealPoint::det(&v1, &v2);
    let d30 = IdealPoint::det(&v3, &v0);
    let x = (d10 * d23) / (d13 * d20);
    let one_minus_x = (d12 * d30) / (d13 * d20);
    if !(x > R::zero() && one_minus_x > R::zero()) {
        return Err(Error::Ordering(format!(
            "cross-ratio normalization failed: x = {x}"
        )));
    }
    // l = 2 artanh(√x) = 2 ln(1 + √x) − ln(1 − x)
    Ok(R::of(2.0) * x.sqrt().ln_1p() - one_minus_x.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    const PI: f64 = std::f64::consts::PI;

    fn real_pt(t: f64) -> IdealPoint<f64> {
        IdealPoint::from_real(t)
    }

    fn random_map(rng: &mut SplitMix64) -> MoebiusMap<f64> {
        loop {
            let a = 4.0 * rng.next_unit_f64() - 2.0;
            let b = 4.0 * rng.next_unit_f64() - 2.0;
            let c = 4.0 * rng.next_unit_f64() - 2.0;
            let d = 4.0 * rng.next_unit_f64() - 2.0;
            if a * d - b * c > 0.05 {
                return MoebiusMap::new(a, b, c, d).unwrap();
            }
        }
    }

    #[test]
    fn cross_ratio_convention_values() {
        // cr(0, 1/2, 1, ∞) under ((a−c)(b−d))/((a−d)(b−c)) is 2
        let v = cross_ratio(
            &real_pt(0.0),
            &real_pt(0.5),
            &real_pt(1.0),
            &IdealPoint::infinity(),
        )
        .unwrap();
        assert!((v - 2.0).abs() < 1e-14);
        // large finite stand-in for ∞ agrees
        let w = cross_ratio(&real_pt(0.0), &real_pt(0.3), &real_pt(1.0), &real_pt(1e9)).unwrap();
        let exact = cross_ratio(
            &real_pt(0.0),
            &real_pt(0.3),
            &real_pt(1.0),
            &IdealPoint::infinity(),
        )
        .unwrap();
        assert!((w - exact).abs() < 1e-6);
    }

    #[test]
    fn cross_ratio_rejects_repeats() {
        assert!(matches!(
            cross_ratio(&real_pt(0.0), &real_pt(0.0), &real_pt(1.0), &real_pt(2.0)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn cross_ratio_moebius_invariant() {
        let mut rng = SplitMix64::new(0xc405);
        let pts = [real_pt(-1.3), real_pt(0.2), real_pt(0.9), real_pt(4.0)];
        let base = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        for _ in 0..1000 {
            let m = random_map(&mut rng);
            let imgs: Vec<_> = pts.iter().map(|p| m.apply(p)).collect();
            let v = cross_ratio(&imgs[0], &imgs[1], &imgs[2], &imgs[3]).unwrap();
            assert!((v - base).abs() < 1e-10);
        }
    }

    #[test]
    fn normalize_quad_identity_case() {
        let v = [
            real_pt(0.0),
            real_pt(0.5),
            real_pt(1.0),
            IdealPoint::infinity(),
        ];
        let (map, cfg) = normalize_quad(&v).unwrap();
        assert!((cfg.x() - 0.5).abs() < 1e-14);
        // the map acts as the identity on the boundary
        for t in [-3.0, 0.1, 2.0] {
            let img = map.apply(&real_pt(t)).to_real().unwrap();
            assert!((img - t).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_quad_generic_and_roundtrip() {
        let v = [real_pt(1.0), real_pt(3.0), real_pt(5.0), real_pt(7.0)];
        let (map, cfg) = normalize_quad(&v).unwrap();
        assert!(cfg.x() > 0.0 && cfg.x() < 1.0);
        // applying the inverse to 0, x, 1, ∞ recovers the inputs
        let inv = map.inverse();
        let normals = cfg.vertices();
        for (orig, norm) in v.iter().zip(normals.iter()) {
            let back = inv.apply(norm);
            let orig_t = orig.to_real();
            match (orig_t, back.to_real()) {
                (Some(a), Some(b)) => assert!((a - b).abs() < 1e-10, "{a} vs {b}"),
                (None, None) => {}
                _ => panic!("finiteness mismatch"),
            }
        }
    }

    #[test]
    fn normalize_quad_rejects_bad_order() {
        let v = [
            real_pt(0.0),
            real_pt(1.0),
            real_pt(0.5),
            IdealPoint::infinity(),
        ];
        assert!(matches!(normalize_quad(&v), Err(Error::Ordering(_))));
    }

    #[test]
    fn distance_anchor_value() {
        // distance between (0, ∞) and (1/2, 1) is 2 artanh(√(1/2))
        let g1 = Geodesic::<f64>::vertical(0.0);
        let g2 = Geodesic::from_reals(0.5, 1.0).unwrap();
        let l = geodesic_distance(&g1, &g2).unwrap();
        let expect = 2.0 * (0.5f64.sqrt()).atanh();
        assert!((l - expect).abs() < 1e-13);
        assert!((l - 1.7627471740).abs() < 1e-9);
        // the defining relation holds both ways
        assert!((l.cosh() - (1.0 + 0.5) / (1.0 - 0.5)).abs() < 1e-12);
        // symmetric in its arguments
        let l2 = geodesic_distance(&g2, &g1).unwrap();
        assert!((l - l2).abs() < 1e-13);
    }

    #[test]
    fn distance_against_independent_perpendicular_construction() {
        // axis (0, ∞) vs semicircle (a, b), 0 < a < b: the common
        // perpendicular construction gives cosh d = (b + a)/(b − a)
        for &(a, b) in &[(0.25, 0.75), (1.0, 9.0), (0.1, 0.2)] {
            let g1 = Geodesic::<f64>::vertical(0.0);
            let g2 = Geodesic::from_reals(a, b).unwrap();
            let l = geodesic_distance(&g1, &g2).unwrap();
            assert!(
                (l.cosh() - (b + a) / (b - a)).abs() < 1e-10,
                "failed at ({a}, {b})"
            );
        }
    }

    #[test]
    fn distance_grows_as_geodesics_separate() {
        let g1 = Geodesic::<f64>::vertical(0.0);
        let mut prev = 0.0;
        for k in 1..=30 {
            let x = k as f64 / 31.0;
            let g2 = Geodesic::from_reals(x, 1.0).unwrap();
            let l = geodesic_distance(&g1, &g2).unwrap();
            assert!(l > prev);
            prev = l;
        }
    }

    #[test]
    fn distance_isometry_invariant() {
        let mut rng = SplitMix64::new(0x9e0d);
        let g1 = Geodesic::<f64>::from_reals(-2.0, -0.5).unwrap();
        let g2 = Geodesic::from_reals(1.0, 4.0).unwrap();
        let base = geodesic_distance(&g1, &g2).unwrap();
        for _ in 0..200 {
            let m = random_map(&mut rng);
            let d = geodesic_distance(&m.apply_geodesic(&g1), &m.apply_geodesic(&g2)).unwrap();
            assert!((d - base).abs() < 1e-10);
        }
    }

    #[test]
    fn distance_error_cases() {
        let g1 = Geodesic::<f64>::vertical(0.0);
        let shared = Geodesic::from_reals(0.0, 1.0).unwrap();
        let crossing = Geodesic::from_reals(-1.0, 1.0).unwrap();
        assert!(matches!(
            geodesic_distance(&g1, &shared),
            Err(Error::SharedEndpoint)
        ));
        assert!(matches!(
            geodesic_distance(&g1, &crossing),
            Err(Error::CrossingGeodesics)
        ));
    }

    #[test]
    fn hconfig_conversions_consistent() {
        // α = π/2 gives x = 1/2
        let cfg = HConfig::<f64>::from_alpha(PI / 2.0).unwrap();
        assert!((cfg.x() - 0.5).abs() < 1e-15);
        // x → 1 sends α → 0 and l → ∞
        let tight = HConfig::<f64>::from_x(1.0 - 1e-12).unwrap();
        assert!(tight.alpha() < 3e-6);
        assert!(tight.length() > 13.0);
        // l → x → α → x → l round trip
        for &l in &[0.1f64, 1.0, 5.0] {
            let c1 = HConfig::from_length(l).unwrap();
            let c2 = HConfig::from_alpha(c1.alpha()).unwrap();
            let c3 = HConfig::from_x(c2.x()).unwrap();
            assert!((c3.length() - l).abs() < 1e-12, "roundtrip broke at l = {l}");
        }
    }

    #[test]
    fn hconfig_triple_consistency_grid() {
        for k in 1..=100 {
            let l = 0.08 * k as f64;
            let cfg = HConfig::<f64>::from_length(l).unwrap();
            let t = (l / 2.0).tanh();
            assert!((cfg.x() - t * t).abs() < 1e-12);
            assert!((cfg.x() - (1.0 + cfg.alpha().cos()) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hconfig_domain_errors() {
        assert!(HConfig::<f64>::from_length(0.0).is_err());
        assert!(HConfig::<f64>::from_length(-1.0).is_err());
        assert!(HConfig::<f64>::from_x(0.0).is_err());
        assert!(HConfig::<f64>::from_x(1.0).is_err());
        assert!(HConfig::<f64>::from_alpha(0.0).is_err());
        assert!(HConfig::<f64>::from_alpha(PI).is_err());
    }

    #[test]
    fn center_lies_on_both_diagonals() {
        let cfg = HConfig::<f64>::from_x(0.37).unwrap();
        let c = cfg.center();
        // on the vertical diagonal (x, ∞)
        assert!((c.re - cfg.x()).abs() < 1e-15);
        // on the semicircle (0, 1)
        let r = (c - num_complex::Complex::new(0.5, 0.0)).norm();
        assert!((r - 0.5).abs() < 1e-13);
    }
}
