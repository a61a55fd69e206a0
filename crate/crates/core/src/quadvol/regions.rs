//! The diagonal decomposition of the normalized ideal quadrilateral into
//! four semi-ideal triangles, hyperbolic-area quadrature over each piece,
//! and direct 2D quadrature of the visual-angle weights over `T_R`.
//!
//! Everything lives in the normal coordinates where the quadrilateral has
//! vertices `0, x, 1, ∞`: the edge geodesics are the verticals over 0 and 1
//! and the semicircles over `(0, x)` and `(x, 1)`, the diagonals are the
//! vertical over `x` and the semicircle over `(0, 1)`, and the diagonals
//! meet at `x + i sqrt(x − x²)`.

use crate::error::Result;
use crate::hypgeom::{HConfig, HPoint, IdealPoint};
use crate::quadrature::{integrate, integrate_sqrt_left, integrate_sqrt_right};
use crate::real::Real;

/// Edge labels of the normalized quadrilateral.  `R = (∞, 0)` and
/// `L = (x, 1)` are the two geodesics the crossbar joins; `U = (1, ∞)` and
/// `D = (0, x)` are the remaining edges (the configuration is symmetric
/// under swapping U and D).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    L,
    R,
    U,
    D,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::L, Edge::R, Edge::U, Edge::D];
}

/// Harmonic weight of the boundary arc behind `edge`, evaluated at the
/// interior point `(u, v)` by the Poisson closed forms.
pub fn chi_edge<R: Real>(cfg: &HConfig<R>, edge: Edge, u: R, v: R) -> R {
    let pi = R::PI();
    let x = cfg.x();
    match edge {
        // arc (−∞, 0) ∪ {∞}
        Edge::R => v.atan2(u) / pi,
        // interval (0, x)
        Edge::D => (((x - u) / v).atan() + (u / v).atan()) / pi,
        // interval (x, 1)
        Edge::L => (((R::one() - u) / v).atan() - ((x - u) / v).atan()) / pi,
        // interval (1, +∞)
        Edge::U => (pi * R::of(0.5) - ((R::one() - u) / v).atan()) / pi,
    }
}

/// A triangle with two ideal vertices and one interior apex.
/// Its hyperbolic area is `π − apex_angle`.
#[derive(Debug, Clone, Copy)]
pub struct SemiIdealTriangle<R> {
    pub label: Edge,
    pub ideal_1: IdealPoint<R>,
    pub ideal_2: IdealPoint<R>,
    pub apex: HPoint<R>,
    pub apex_angle: R,
}

impl<R: Real> SemiIdealTriangle<R> {
    pub fn area(&self) -> R {
        R::PI() - self.apex_angle
    }
}

/// The four triangles cut out of the quadrilateral by its diagonals, all
/// sharing the diagonal intersection as apex.  `T_R` and `T_L` carry apex
/// angle `α`, `T_U` and `T_D` carry `π − α`, so the areas sum to `2π`.
#[derive(Debug, Clone, Copy)]
pub struct TriangleDecomposition<R> {
    pub alpha: R,
    pub center: HPoint<R>,
    pub t_l: SemiIdealTriangle<R>,
    pub t_r: SemiIdealTriangle<R>,
    pub t_u: SemiIdealTriangle<R>,
    pub t_d: SemiIdealTriangle<R>,
}

impl<R: Real> TriangleDecomposition<R> {
    pub fn new(cfg: &HConfig<R>) -> Self {
        let alpha = cfg.alpha();
        let center = cfg.center();
        let x = IdealPoint::from_real(cfg.x());
        let zero = IdealPoint::from_real(R::zero());
        let one = IdealPoint::from_real(R::one());
        let inf = IdealPoint::infinity();
        let opposite = R::PI() - alpha;
        Self {
            alpha,
            center,
            t_r: SemiIdealTriangle {
                label: Edge::R,
                ideal_1: inf,
                ideal_2: zero,
                apex: center,
                apex_angle: alpha,
            },
            t_l: SemiIdealTriangle {
                label: Edge::L,
                ideal_1: x,
                ideal_2: one,
                apex: center,
                apex_angle: alpha,
            },
            t_u: SemiIdealTriangle {
                label: Edge::U,
                ideal_1: one,
                ideal_2: inf,
                apex: center,
                apex_angle: opposite,
            },
            t_d: SemiIdealTriangle {
                label: Edge::D,
                ideal_1: zero,
                ideal_2: x,
                apex: center,
                apex_angle: opposite,
            },
        }
    }

    pub fn triangles(&self) -> [&SemiIdealTriangle<R>; 4] {
        [&self.t_l, &self.t_r, &self.t_u, &self.t_d]
    }
}

/// `sqrt(u (1 − u))`: height of the diagonal semicircle `(0, 1)` over `u`.
fn diag_height<R: Real>(u: R) -> R {
    (u * (R::one() - u)).sqrt()
}

/// Hyperbolic area of one decomposition triangle by quadrature of the
/// column masses `∫ dv/v²`, for comparison against the closed form
/// `π − apex_angle`.
pub fn triangle_area_quadrature<R: Real>(cfg: &HConfig<R>, label: Edge, tol: R) -> Result<R> {
    let x = cfg.x();
    let one = R::one();
    let half_tol = tol * R::of(0.5);
    match label {
        // columns over (0, x) from the diagonal semicircle up to ∞
        Edge::R => {
            let f = |u: R| one / diag_height(u);
            let mid = x * R::of(0.5);
            Ok(integrate_sqrt_left(f, R::zero(), mid, half_tol)?
                + integrate(f, mid, x, half_tol)?)
        }
        // columns over (x, 1) from the diagonal semicircle up to ∞
        Edge::U => {
            let f = |u: R| one / diag_height(u);
            let mid = (x + one) * R::of(0.5);
            Ok(integrate(f, x, mid, half_tol)?
                + integrate_sqrt_right(f, mid, one, half_tol)?)
        }
        // between the edge semicircle (0, x) and the diagonal semicircle
        Edge::D => {
            let f = move |u: R| one / (u * (x - u)).sqrt() - one / diag_height(u);
            let mid = x * R::of(0.5);
            Ok(integrate_sqrt_left(f, R::zero(), mid, half_tol)?
                + integrate_sqrt_right(f, mid, x, half_tol)?)
        }
        // between the edge semicircle (x, 1) and the diagonal semicircle
        Edge::L => {
            let f = move |u: R| one / ((u - x) * (one - u)).sqrt() - one / diag_height(u);
            let mid = (x + one) * R::of(0.5);
            Ok(integrate_sqrt_left(f, x, mid, half_tol)?
                + integrate_sqrt_right(f, mid, one, half_tol)?)
        }
    }
}

/// Direct 2D quadrature of `∫_{T_R} χ_edge` over
/// `T_R = {0 < u < x, v > sqrt(u(1−u))}`.
///
/// The vertical column at `u` is mapped onto `(0, 1]` by `v = v_low / w`,
/// which turns the column's hyperbolic mass `1/v_low` into an explicit
/// factor; the outer integral absorbs the `1/sqrt(u)` cusp at 0 by the
/// usual square-root substitution.
///
/// This is the independent oracle route for `B(α)` (`edge = U`) and
/// `C(α)` (`edge = L`); `edge = R` re-derives `A(α)` by raw 2D quadrature.
pub fn chi_integral_over_tr<R: Real>(cfg: &HConfig<R>, edge: Edge, tol: R) -> Result<R> {
    let x = cfg.x();
    let inner_tol = tol * R::of(0.05);
    let column = |u: R| -> R {
        let v_low = diag_height(u);
        let inner = integrate(
            |w: R| {
                if w <= R::zero() {
                    return R::zero();
                }
                chi_edge(cfg, edge, u, v_low / w)
            },
            R::zero(),
            R::one(),
            inner_tol,
        )
        .expect("bounded inner integrand");
        inner / v_low
    };
    let half_tol = tol * R::of(0.5);
    let mid = x * R::of(0.5);
    Ok(integrate_sqrt_left(column, R::zero(), mid, half_tol)?
        + integrate(column, mid, x, half_tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeom::{visual_angle, BoundaryArc};
    use crate::quadvol::{a_of, b_of, c_of};
    use num_complex::Complex;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn chi_weights_partition_unity() {
        let cfg = HConfig::from_x(0.37f64).unwrap();
        for &(u, v) in &[(0.1, 0.8), (0.37, 2.0), (0.9, 0.5), (0.5, 10.0)] {
            let total: f64 = Edge::ALL
                .iter()
                .map(|&e| chi_edge(&cfg, e, u, v))
                .sum();
            assert!((total - 1.0).abs() < 1e-13, "at ({u}, {v})");
        }
    }

    #[test]
    fn chi_matches_visual_angle_machinery() {
        let cfg = HConfig::from_x(0.37f64).unwrap();
        let p = Complex::new(0.42, 1.3);
        let x = IdealPoint::from_real(cfg.x());
        let zero = IdealPoint::from_real(0.0);
        let one = IdealPoint::from_real(1.0);
        let inf = IdealPoint::<f64>::infinity();
        let arcs = [
            (Edge::R, BoundaryArc::new(inf, zero)),
            (Edge::D, BoundaryArc::new(zero, x)),
            (Edge::L, BoundaryArc::new(x, one)),
            (Edge::U, BoundaryArc::new(one, inf)),
        ];
        for (edge, arc) in arcs {
            // both compute the harmonic measure of the arc behind the edge
            let via_disk = visual_angle(p, &arc).unwrap();
            let via_poisson = chi_edge(&cfg, edge, p.re, p.im);
            assert!(
                (via_disk - via_poisson).abs() < 1e-12,
                "{edge:?}: {via_disk} vs {via_poisson}"
            );
        }
    }

    #[test]
    fn decomposition_angles_and_areas() {
        let cfg = HConfig::from_alpha(1.1f64).unwrap();
        let dec = TriangleDecomposition::new(&cfg);
        assert!((dec.t_r.apex_angle - 1.1).abs() < 1e-14);
        assert!((dec.t_l.apex_angle - 1.1).abs() < 1e-14);
        assert!((dec.t_u.apex_angle - (PI - 1.1)).abs() < 1e-14);
        let total: f64 = dec.triangles().iter().map(|t| t.area()).sum();
        assert!((total - 2.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn quadrature_areas_match_closed_forms() {
        let cfg = HConfig::from_alpha(1.1f64).unwrap();
        let dec = TriangleDecomposition::new(&cfg);
        let pairs = [
            (Edge::R, dec.t_r.area()),
            (Edge::L, dec.t_l.area()),
            (Edge::U, dec.t_u.area()),
            (Edge::D, dec.t_d.area()),
        ];
        let mut total = 0.0;
        for (edge, closed) in pairs {
            let q = triangle_area_quadrature(&cfg, edge, 1e-10).unwrap();
            assert!((q - closed).abs() < 1e-9, "{edge:?}: {q} vs {closed}");
            total += q;
        }
        assert!((total - 2.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn direct_2d_route_reproduces_a() {
        let alpha = PI / 2.0;
        let cfg = HConfig::from_alpha(alpha).unwrap();
        let direct = chi_integral_over_tr(&cfg, Edge::R, 1e-8).unwrap();
        let via_deriv = a_of(alpha, 1e-10).unwrap();
        assert!((direct - via_deriv).abs() < 1e-6, "{direct} vs {via_deriv}");
    }

    #[test]
    fn direct_2d_route_reproduces_b_and_c() {
        let alpha = PI / 2.0;
        let cfg = HConfig::from_alpha(alpha).unwrap();
        let b_direct = chi_integral_over_tr(&cfg, Edge::U, 1e-8).unwrap();
        let b_identity = b_of(alpha, 1e-10).unwrap();
        assert!((b_direct - b_identity).abs() < 1e-6);
        let c_direct = chi_integral_over_tr(&cfg, Edge::L, 1e-8).unwrap();
        let c_identity = c_of(alpha, 1e-10).unwrap();
        assert!((c_direct - c_identity).abs() < 1e-6);
    }

    #[test]
    fn u_d_symmetry_of_weights_over_tr() {
        // the U ↔ D swap is a symmetry of the configuration: ∫_{T_R} χ_D
        // equals ∫_{T_R} χ_U
        let cfg = HConfig::from_alpha(1.3f64).unwrap();
        let bu = chi_integral_over_tr(&cfg, Edge::U, 1e-8).unwrap();
        let bd = chi_integral_over_tr(&cfg, Edge::D, 1e-8).unwrap();
        assert!((bu - bd).abs() < 1e-6, "{bu} vs {bd}");
    }
}
