//! The exact angular measure of crossing directions at a point, and its
//! integral over the quadrilateral (the direct quadrature route for the
//! volume).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hypgeom::{boundary_direction, wrap_angle, HConfig, HPoint, IdealPoint};
use crate::quadrature::{
    integrate, integrate_exp_left, integrate_exp_right, integrate_sqrt_left,
    integrate_sqrt_right,
};
use crate::real::Real;

/// Overlap length of two circular arcs given as (start, length) with
/// lengths in `[0, 2π)`.
fn arc_overlap<R: Real>(a_start: R, a_len: R, b_start: R, b_len: R) -> R {
    let tau = R::of(2.0) * R::PI();
    let s = wrap_angle(b_start - a_start);
    // unwrapped piece of b: [s, min(s + b_len, 2π)) against [0, a_len)
    let end1 = (s + b_len).min(tau);
    let o1 = (end1.min(a_len) - s).max(R::zero());
    // wrapped piece: [0, s + b_len − 2π)
    let over = s + b_len - tau;
    let o2 = if over > R::zero() {
        over.min(a_len)
    } else {
        R::zero()
    };
    o1 + o2
}

/// Angular measure, in `[0, 2π]`, of unit directions at `p` whose
/// bi-infinite geodesic meets both `L = (x, 1)` and `R = (0, ∞)`.
///
/// A geodesic meets both exactly when one ideal endpoint lies in the arc
/// behind `L` and the other in the arc behind `R`, so the measure is
/// `2 |Θ_L ∩ (Θ_R + π)|` where `Θ_E` is the direction interval subtending
/// the arc behind `E` (the factor 2 counts both orientations).
pub fn crossing_angle_measure<R: Real>(p: HPoint<R>, cfg: &HConfig<R>) -> Result<R> {
    if !(p.im > R::zero()) {
        return Err(Error::Domain(format!(
            "crossing_angle_measure requires an interior point, got {p}"
        )));
    }
    let phi_zero = boundary_direction(p, &IdealPoint::from_real(R::zero()));
    let phi_x = boundary_direction(p, &IdealPoint::from_real(cfg.x()));
    let phi_one = boundary_direction(p, &IdealPoint::from_real(R::one()));
    let phi_inf = boundary_direction(p, &IdealPoint::infinity());
    // directions landing in the arc behind L: ccw from x to 1
    let l_start = phi_x;
    let l_len = wrap_angle(phi_one - phi_x);
    // directions landing in the arc behind R: ccw from ∞ to 0
    let r_start = phi_inf;
    let r_len = wrap_angle(phi_zero - phi_inf);
    Ok(R::of(2.0) * arc_overlap(l_start, l_len, r_start + R::PI(), r_len))
}

/// Height of the diagonal semicircle `(0, 1)` over `u`.
fn diag_height<R: Real>(u: R) -> R {
    (u * (R::one() - u)).sqrt()
}

/// Direct quadrature route for the crossing volume:
/// `V = ∫_Q crossing_angle_measure dA`, the quadrilateral split by the
/// diagonal `(0, 1)` into the upper ideal triangle `(0, 1, ∞)` and the
/// lower one `(0, x, 1)`.
///
/// Columns of the upper triangle run to the cusp at `∞` and are compacted
/// by `v = v_low / w`; columns of the lower triangle are bounded between
/// two semicircles.  Square-root substitutions soak up the cusps of the
/// column masses at `u ∈ {0, 1}` and exponential clustering the logarithmic
/// column singularity at `u = x` (the wedge of the ideal vertex `x`).
pub fn v_quadrature<R: Real>(cfg: &HConfig<R>, tol: R) -> Result<R> {
    if !(tol > R::zero()) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let x = cfg.x();
    let one = R::one();
    let half = R::of(0.5);
    let inner_tol = tol * R::of(0.01);
    let piece_tol = tol / R::of(6.0);

    // upper ideal triangle (0, 1, ∞): v from the diagonal semicircle to ∞
    let upper_column = |u: R| -> R {
        let v_low = diag_height(u);
        let inner = integrate(
            |w: R| {
                if w <= R::zero() {
                    return R::zero();
                }
                crossing_angle_measure(Complex::new(u, v_low / w), cfg)
                    .expect("interior point")
            },
            R::zero(),
            one,
            inner_tol,
        )
        .expect("bounded inner integrand");
        inner / v_low
    };
    let i_upper = integrate_sqrt_left(upper_column, R::zero(), half, piece_tol)?
        + integrate_sqrt_right(upper_column, half, one, piece_tol)?;

    // lower ideal triangle (0, x, 1): v between the edge semicircles and the
    // diagonal semicircle.  The column is sampled geometrically,
    // v = v_low e^{t ln(v_up/v_low)}: near the wedge of the ideal vertex x
    // the hyperbolic mass spreads evenly over decades of v, and the linear
    // parametrization cannot resolve that spike
    let lower_column = |u: R| -> R {
        let v_low = if u <= x {
            (u * (x - u)).max(R::zero()).sqrt()
        } else {
            ((u - x) * (one - u)).max(R::zero()).sqrt()
        };
        let v_up = diag_height(u);
        if !(v_up > v_low) {
            return R::zero();
        }
        debug_assert!(v_low > R::zero(), "cusp column sampled at u = {u}");
        let log_ratio = (v_up / v_low).ln();
        integrate(
            |t: R| {
                let v = v_low * (log_ratio * t).exp();
                let f = crossing_angle_measure(Complex::new(u, v), cfg)
                    .expect("interior point");
                log_ratio * f / v
            },
            R::zero(),
            one,
            inner_tol,
        )
        .expect("bounded inner integrand")
    };
    let x_mid_l = x * half;
    let x_mid_r = (x + one) * half;
    let i_lower = integrate_sqrt_left(lower_column, R::zero(), x_mid_l, piece_tol)?
        + integrate_exp_right(lower_column, x_mid_l, x, piece_tol)?
        + integrate_exp_left(lower_column, x, x_mid_r, piece_tol)?
        + integrate_sqrt_right(lower_column, x_mid_r, one, piece_tol)?;

    Ok(i_upper + i_lower)
}
