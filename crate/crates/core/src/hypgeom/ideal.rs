//! Points on the ideal boundary `R ∪ {∞}` of the upper half-plane, kept in
//! homogeneous coordinates so that `∞` needs no special casing, and
//! unoriented geodesics as pairs of distinct ideal points.

use crate::error::{Error, Result};
use crate::real::Real;

/// Two normalized homogeneous coordinates closer than this are treated as
/// the same boundary point.
pub const POINT_EPS: f64 = 1e-12;

/// A boundary point `p/q`, stored as a normalized homogeneous pair.
///
/// `(p, q)` and `(λp, λq)` name the same point; `∞` is `(1, 0)`.  The
/// constructor scales to unit Euclidean norm and fixes a sign so every point
/// has one canonical representative.
#[derive(Debug, Clone, Copy)]
pub struct IdealPoint<R> {
    p: R,
    q: R,
}

impl<R: Real> IdealPoint<R> {
    pub fn new(p: R, q: R) -> Result<Self> {
        if !(p.is_finite() && q.is_finite()) {
            return Err(Error::Degenerate(
                "ideal point coordinates must be finite".into(),
            ));
        }
        let norm = p.hypot(q);
        if norm == R::zero() {
            return Err(Error::Degenerate(
                "(0, 0) does not define an ideal point".into(),
            ));
        }
        let mut p = p / norm;
        let mut q = q / norm;
        // canonical sign: q > 0, or q == 0 and p > 0
        if q < R::zero() || (q == R::zero() && p < R::zero()) {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    pub fn from_real(t: R) -> Self {
        Self::new(t, R::one()).expect("finite real is a valid ideal point")
    }

    pub fn infinity() -> Self {
        Self {
            p: R::one(),
            q: R::zero(),
        }
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn q(&self) -> R {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == R::zero()
    }

    /// Finite value `p/q`, or `None` for `∞`.
    pub fn to_real(&self) -> Option<R> {
        if self.is_infinite() {
            None
        } else {
            Some(self.p / self.q)
        }
    }

    /// `det(a, b) = a.p b.q − a.q b.p`; the projective analogue of `a − b`.
    /// Zero exactly when the points coincide.
    pub fn det(a: &Self, b: &Self) -> R {
        a.p * b.q - a.q * b.p
    }

    pub fn approx_eq(a: &Self, b: &Self) -> bool {
        Self::det(a, b).abs() < R::of(POINT_EPS)
    }

    /// Position on the boundary circle, in `[0, 2π)`, increasing in the
    /// counterclockwise direction of the disk model.  Under the Cayley map
    /// the real line is traversed counterclockwise in increasing order, with
    /// `∞` at angle 0.
    pub fn circle_angle(&self) -> R {
        let raw = -R::of(2.0) * self.q.atan2(self.p);
        wrap_angle(raw)
    }
}

/// Reduce an angle into `[0, 2π)`.
pub fn wrap_angle<R: Real>(a: R) -> R {
    let tau = R::of(2.0) * R::PI();
    let mut a = a % tau;
    if a < R::zero() {
        a += tau;
    }
    if a >= tau {
        a -= tau;
    }
    a
}

/// How two geodesics sit relative to each other on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkClass {
    /// Endpoint pairs unlinked: disjoint geodesics with a common perpendicular.
    Disjoint,
    /// A shared ideal endpoint.
    Shared,
    /// Endpoint pairs linked: the geodesics cross.
    Crossing,
}

/// An unoriented geodesic, named by its two (distinct) ideal endpoints.
#[derive(Debug, Clone, Copy)]
pub struct Geodesic<R> {
    pub e1: IdealPoint<R>,
    pub e2: IdealPoint<R>,
}

impl<R: Real> Geodesic<R> {
    pub fn new(e1: IdealPoint<R>, e2: IdealPoint<R>) -> Result<Self> {
        if IdealPoint::approx_eq(&e1, &e2) {
            return Err(Error::Degenerate(
                "geodesic endpoints must be distinct".into(),
            ));
        }
        Ok(Self { e1, e2 })
    }

    pub fn from_reals(a: R, b: R) -> Result<Self> {
        Self::new(IdealPoint::from_real(a), IdealPoint::from_real(b))
    }

    /// The geodesic `(t, ∞)`.
    pub fn vertical(t: R) -> Self {
        Self {
            e1: IdealPoint::from_real(t),
            e2: IdealPoint::infinity(),
        }
    }

    /// Classify the endpoint pattern of two geodesics on the circle.
    pub fn link_class(&self, other: &Self) -> LinkClass {
        for a in [&self.e1, &self.e2] {
            for b in [&other.e1, &other.e2] {
                if IdealPoint::approx_eq(a, b) {
                    return LinkClass::Shared;
                }
            }
        }
        let base = self.e1.circle_angle();
        let span = wrap_angle(self.e2.circle_angle() - base);
        let s = wrap_angle(other.e1.circle_angle() - base);
        let t = wrap_angle(other.e2.circle_angle() - base);
        if (s < span) != (t < span) {
            LinkClass::Crossing
        } else {
            LinkClass::Disjoint
        }
    }
}
