//! Real Moebius maps acting on the upper half-plane and its ideal boundary.

use num_complex::Complex;

use super::ideal::{Geodesic, IdealPoint};
use crate::error::{Error, Result};
use crate::real::Real;

/// A real 2×2 matrix with `ad − bc = 1`, acting on the half-plane by
/// `z ↦ (az + b)/(cz + d)` and on homogeneous boundary points by
/// `(p, q) ↦ (ap + bq, cp + dq)`.
///
/// Construction normalizes the determinant to one and fixes an overall sign,
/// so a map has a single matrix representative.
#[derive(Debug, Clone, Copy)]
pub struct MoebiusMap<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Real> MoebiusMap<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > R::zero()) {
            return Err(Error::Parameter(format!(
                "Moebius map needs positive determinant, got {det}"
            )));
        }
        let s = det.sqrt();
        Ok(Self::sign_normalized(a / s, b / s, c / s, d / s))
    }

    fn sign_normalized(a: R, b: R, c: R, d: R) -> Self {
        let flip = if a != R::zero() {
            a < R::zero()
        } else if b != R::zero() {
            b < R::zero()
        } else {
            c < R::zero()
        };
        if flip {
            Self {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            Self { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self {
            a: R::one(),
            b: R::zero(),
            c: R::zero(),
            d: R::one(),
        }
    }

    /// `diag(λ, 1/λ)`: translation along the axis `(0, ∞)` by `2 ln λ`.
    pub fn diagonal(lambda: R) -> Result<Self> {
        if !(lambda > R::zero()) {
            return Err(Error::Parameter("diagonal entry must be positive".into()));
        }
        Ok(Self::sign_normalized(
            lambda,
            R::zero(),
            R::zero(),
            R::one() / lambda,
        ))
    }

    /// Matrix product: `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        // products of unit-determinant maps drift; renormalize
        let det = a * d - b * c;
        let s = det.sqrt();
        Self::sign_normalized(a / s, b / s, c / s, d / s)
    }

    pub fn inverse(&self) -> Self {
        Self::sign_normalized(self.d, -self.b, -self.c, self.a)
    }

    pub fn trace(&self) -> R {
        self.a + self.d
    }

    pub fn apply(&self, pt: &IdealPoint<R>) -> IdealPoint<R> {
        IdealPoint::new(
            self.a * pt.p() + self.b * pt.q(),
            self.c * pt.p() + self.d * pt.q(),
        )
        .expect("invertible matrix maps ideal points to ideal points")
    }

    pub fn apply_geodesic(&self, g: &Geodesic<R>) -> Geodesic<R> {
        Geodesic {
            e1: self.apply(&g.e1),
            e2: self.apply(&g.e2),
        }
    }

    /// Action on an interior point of the half-plane.
    pub fn apply_interior(&self, z: Complex<R>) -> Complex<R> {
        let num = z * self.a + self.b;
        let den = z * self.c + self.d;
        num / den
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() > R::of(2.0)
    }

    /// Axis of a hyperbolic map: the geodesic joining its two boundary fixed
    /// points, the roots of `c t² + (d − a) t − b = 0`.
    pub fn axis(&self) -> Result<Geodesic<R>> {
        if !self.is_hyperbolic() {
            return Err(Error::NotHyperbolic);
        }
        let tr = self.trace();
        let disc = (tr * tr - R::of(4.0)).sqrt();
        if self.c == R::zero() {
            // ∞ is fixed; the other fixed point solves (d − a) t = b
            let finite = IdealPoint::new(self.b, self.d - self.a)?;
            Geodesic::new(IdealPoint::infinity(), finite)
        } else {
            let two_c = R::of(2.0) * self.c;
            let f1 = IdealPoint::new(self.a - self.d + disc, two_c)?;
            let f2 = IdealPoint::new(self.a - self.d - disc, two_c)?;
            Geodesic::new(f1, f2)
        }
    }

    /// Displacement along the axis: `2 arccosh(|tr|/2)`.
    pub fn translation_length(&self) -> Result<R> {
        if !self.is_hyperbolic() {
            return Err(Error::NotHyperbolic);
        }
        Ok(R::of(2.0) * (self.trace().abs() * R::of(0.5)).acosh())
    }

    /// The map carrying `g` to the standard geodesic `(0, ∞)`
    /// (first endpoint to 0, second to ∞).
    pub fn to_standard_axis(g: &Geodesic<R>) -> Self {
        let (e1, e2) = (&g.e1, &g.e2);
        let mut a = e1.q();
        let mut b = -e1.p();
        let c = e2.q();
        let d = -e2.p();
        let det = a * d - b * c;
        debug_assert!(det != R::zero());
        if det < R::zero() {
            a = -a;
            b = -b;
        }
        let s = (a * d - b * c).sqrt();
        Self::sign_normalized(a / s, b / s, c / s, d / s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    #[test]
    fn normalizes_determinant_and_sign() {
        let m = MoebiusMap::<f64>::new(2.0, 0.0, 0.0, 2.0).unwrap();
        approx(m.a * m.d - m.b * m.c, 1.0, 1e-15);
        approx(m.a, 1.0, 1e-15);
        assert!(MoebiusMap::<f64>::new(1.0, 0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn boundary_action_matches_interior_action() {
        let m = MoebiusMap::<f64>::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let t = 0.7;
        let on_boundary = m.apply(&IdealPoint::from_real(t)).to_real().unwrap();
        approx(on_boundary, (2.0 * t + 1.0) / (t + 1.0), 1e-14);
        // ∞ goes to a/c
        let img = m.apply(&IdealPoint::infinity()).to_real().unwrap();
        approx(img, 2.0, 1e-14);
    }

    #[test]
    fn compose_and_inverse() {
        let m = MoebiusMap::<f64>::new(3.0, 1.0, 2.0, 1.0).unwrap();
        let n = MoebiusMap::<f64>::new(1.0, -0.5, 0.0, 1.0).unwrap();
        let p = IdealPoint::from_real(0.25);
        let lhs = m.compose(&n).apply(&p);
        let rhs = m.apply(&n.apply(&p));
        assert!(IdealPoint::approx_eq(&lhs, &rhs));
        let id = m.compose(&m.inverse());
        approx(id.a, 1.0, 1e-14);
        approx(id.b, 0.0, 1e-14);
        approx(id.c, 0.0, 1e-14);
        approx(id.d, 1.0, 1e-14);
    }

    #[test]
    fn diagonal_axis_and_length() {
        let t = 1.8;
        let m = MoebiusMap::<f64>::diagonal((t / 2.0f64).exp()).unwrap();
        let axis = m.axis().unwrap();
        // axis is (0, ∞)
        let has_zero = axis.e1.to_real() == Some(0.0) || axis.e2.to_real() == Some(0.0);
        let has_inf = axis.e1.is_infinite() || axis.e2.is_infinite();
        assert!(has_zero && has_inf);
        approx(m.translation_length().unwrap(), t, 1e-14);
    }

    #[test]
    fn fixed_points_solve_quadratic_and_stay_fixed() {
        // (2,1;1,1): fixed points are roots of t² − t − 1 = 0
        let m = MoebiusMap::<f64>::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let axis = m.axis().unwrap();
        for fp in [axis.e1, axis.e2] {
            let t = fp.to_real().unwrap();
            approx(t * t - t - 1.0, 0.0, 1e-12);
            let image = m.apply(&fp);
            assert!(IdealPoint::approx_eq(&image, &fp));
        }
    }

    #[test]
    fn non_hyperbolic_rejected() {
        // rotation-like: trace 0
        let m = MoebiusMap::<f64>::new(0.0, 1.0, -1.0, 0.0).unwrap();
        assert!(matches!(m.axis(), Err(Error::NotHyperbolic)));
        assert!(matches!(m.translation_length(), Err(Error::NotHyperbolic)));
    }

    #[test]
    fn conjugation_equivariance() {
        let m = MoebiusMap::<f64>::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let g = MoebiusMap::<f64>::new(1.0, 2.0, 0.5, 3.0).unwrap();
        let conj = g.compose(&m).compose(&g.inverse());
        approx(
            conj.translation_length().unwrap(),
            m.translation_length().unwrap(),
            1e-12,
        );
        let moved_axis = g.apply_geodesic(&m.axis().unwrap());
        let conj_axis = conj.axis().unwrap();
        let direct =
            IdealPoint::approx_eq(&moved_axis.e1, &conj_axis.e1)
                && IdealPoint::approx_eq(&moved_axis.e2, &conj_axis.e2);
        let swapped =
            IdealPoint::approx_eq(&moved_axis.e1, &conj_axis.e2)
                && IdealPoint::approx_eq(&moved_axis.e2, &conj_axis.e1);
        assert!(direct || swapped);
    }

    #[test]
    fn to_standard_axis_sends_endpoints_to_zero_and_infinity() {
        let g = Geodesic::<f64>::from_reals(0.3, 2.5).unwrap();
        let m = MoebiusMap::to_standard_axis(&g);
        let z = m.apply(&g.e1);
        let w = m.apply(&g.e2);
        assert!(IdealPoint::approx_eq(&z, &IdealPoint::from_real(0.0)));
        assert!(IdealPoint::approx_eq(&w, &IdealPoint::infinity()));
        // and it is orientation-preserving with unit determinant
        approx(m.a * m.d - m.b * m.c, 1.0, 1e-14);
    }
}
