//! The crossing-vector volume of the normalized ideal-quadrilateral
//! configuration, assembled three independent ways:
//!
//! * [`v_formula`]: the closed expression
//!   `V(α) = π²(8 − 16/3) − 4πα − 8π(A(α) − A(π−α))`, with `A` evaluated by
//!   1D quadrature of its closed-form derivative;
//! * [`crossing::v_quadrature`]: direct integration of the exact per-point
//!   crossing angle measure over the quadrilateral;
//! * [`montecarlo::v_montecarlo`]: seeded Monte Carlo over the same measure.
//!
//! All three must agree with the target `8 L(1 − x)`.

mod crossing;
mod montecarlo;
mod regions;
mod report;

pub use crossing::{crossing_angle_measure, v_quadrature};
pub use montecarlo::{v_montecarlo, McEstimate};
pub use regions::{chi_edge, chi_integral_over_tr, triangle_area_quadrature, Edge,
    SemiIdealTriangle, TriangleDecomposition};
pub use report::{volume_report, VolumeReport};

use crate::error::{Error, Result};
use crate::hypgeom::HConfig;
use crate::quadrature::{integrate, integrate_exp_right, integrate_sqrt_left};
use crate::real::Real;

/// `A'(x) = α/(π sin α) − ln(1−x)/(2πx)` with `α = arccos(2x − 1)`:
/// the derivative in `x` of the weighted area `A = ∫_{T_R} χ_R`, obtained by
/// integrating the vertical coordinate out in closed form.  Positive on
/// `(0, 1)`, with integrable singularities at both ends.
pub fn a_deriv<R: Real>(x: R) -> Result<R> {
    if !(x > R::zero() && x < R::one()) {
        return Err(Error::Domain(format!(
            "a_deriv requires x in (0, 1), got {x}"
        )));
    }
    let pi = R::PI();
    let alpha = (R::of(2.0) * x - R::one()).acos();
    Ok(alpha / (pi * alpha.sin()) - (R::one() - x).ln() / (R::of(2.0) * pi * x))
}

/// `A(α) = ∫_{T_R} χ_R`: the visual-angle weight of the arc behind the
/// `R`-edge integrated over the triangle `T_R`, reduced to the 1D integral
/// `∫_0^x A'(u) du` and evaluated adaptively to absolute tolerance `tol`.
///
/// Interpolates between `A(π) = 0` (the triangle collapses) and
/// `A(0) = π/3` (the ideal triangle, where the three symmetric weights
/// average to 1/3 over area π).
pub fn a_of<R: Real>(alpha: R, tol: R) -> Result<R> {
    if !(alpha > R::zero() && alpha < R::PI()) {
        return Err(Error::Domain(format!(
            "a_of requires alpha in (0, π), got {alpha}"
        )));
    }
    if !(tol > R::zero()) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let x = (R::one() + alpha.cos()) * R::of(0.5);
    // substitute u = s²: the 1/sqrt(u) endpoint becomes the smooth integrand
    //   g(s) = (π − 2 asin s)/(π sqrt(1−s²)) − ln(1−s²)/(π s),
    // using α(s²) = π − 2 asin(s) and sin α(s²) = 2 s sqrt(1−s²)
    let pi = R::PI();
    integrate(
        |s: R| {
            let one_minus_s2 = (R::one() - s) * (R::one() + s);
            (pi - R::of(2.0) * s.asin()) / (pi * one_minus_s2.sqrt())
                - one_minus_s2.ln() / (pi * s)
        },
        R::zero(),
        x.sqrt(),
        tol,
    )
}

/// `∫_{x_lo}^{x_hi} A'(u) du` on `[0, 1]`, with the inverse-square-root
/// behaviour at 0 and the logarithmic one at 1 absorbed by substitutions.
/// Deliberately evaluates the raw closed form of [`a_deriv`], making it an
/// independent check on [`a_of`].
pub fn a_deriv_integral<R: Real>(x_lo: R, x_hi: R, tol: R) -> Result<R> {
    if !(x_lo >= R::zero() && x_hi <= R::one() && x_lo <= x_hi) {
        return Err(Error::Domain(format!(
            "integration range [{x_lo}, {x_hi}] must sit inside [0, 1]"
        )));
    }
    let quarter = R::of(0.25);
    let three_quarters = R::of(0.75);
    let piece_tol = tol / R::of(3.0);
    let mut total = R::zero();
    // left piece with u = s² if it touches 0
    let left_end = x_hi.min(quarter);
    if x_lo < left_end {
        total += if x_lo == R::zero() {
            integrate_sqrt_left(|u| a_deriv(u).expect("interior"), x_lo, left_end, piece_tol)?
        } else {
            integrate(|u| a_deriv(u).expect("interior"), x_lo, left_end, piece_tol)?
        };
    }
    // middle piece
    let mid_lo = x_lo.max(left_end.min(x_hi));
    let mid_hi = x_hi.min(three_quarters);
    if mid_lo < mid_hi {
        total += integrate(|u| a_deriv(u).expect("interior"), mid_lo, mid_hi, piece_tol)?;
    }
    // right piece with u = 1 − (1−a) e^{-s} if it touches 1
    let right_start = x_lo.max(three_quarters);
    if right_start < x_hi {
        total += if x_hi == R::one() {
            integrate_exp_right(
                |u| a_deriv(u).expect("interior"),
                right_start,
                x_hi,
                piece_tol,
            )?
        } else {
            integrate(|u| a_deriv(u).expect("interior"), right_start, x_hi, piece_tol)?
        };
    }
    Ok(total)
}

/// `B(α) = ∫_{T_R} χ_U`, via the ideal-triangle averaging identity
/// `A(α) + B(π − α) = π/3`.  The independent 2D route is
/// [`chi_integral_over_tr`] with [`Edge::U`].
pub fn b_of<R: Real>(alpha: R, tol: R) -> Result<R> {
    if !(alpha > R::zero() && alpha < R::PI()) {
        return Err(Error::Domain(format!(
            "b_of requires alpha in (0, π), got {alpha}"
        )));
    }
    Ok(R::PI() / R::of(3.0) - a_of(R::PI() - alpha, tol)?)
}

/// `C(α) = ∫_{T_R} χ_L = π − α − A(α) − 2B(α)`; nonnegative.
pub fn c_of<R: Real>(alpha: R, tol: R) -> Result<R> {
    if !(alpha > R::zero() && alpha < R::PI()) {
        return Err(Error::Domain(format!(
            "c_of requires alpha in (0, π), got {alpha}"
        )));
    }
    let half_tol = tol * R::of(0.5);
    Ok(R::PI() - alpha - a_of(alpha, half_tol)? - R::of(2.0) * b_of(alpha, half_tol)?)
}

/// Closed route for the crossing volume:
/// `V(α) = π²(8 − 16/3) − 4πα − 8π (A(α) − A(π − α))`.
///
/// Equals `8 L(1 − x)` with `x = (1 + cos α)/2`; in particular
/// `V(π/2) = 2π²/3`.
pub fn v_formula<R: Real>(alpha: R, tol: R) -> Result<R> {
    if !(alpha > R::zero() && alpha < R::PI()) {
        return Err(Error::Domain(format!(
            "v_formula requires alpha in (0, π), got {alpha}"
        )));
    }
    let pi = R::PI();
    // the two A-values enter with weight 8π; split the error budget
    let a_tol = tol / (R::of(32.0) * pi);
    let a_plus = a_of(alpha, a_tol)?;
    let a_minus = a_of(pi - alpha, a_tol)?;
    Ok(pi * pi * (R::of(8.0) - R::of(16.0) / R::of(3.0)) - R::of(4.0) * pi * alpha
        - R::of(8.0) * pi * (a_plus - a_minus))
}

/// Convenience: the target value `8 L(1 − x)` the three volume routes chase.
pub fn v_target<R: Real>(cfg: &HConfig<R>) -> Result<R> {
    Ok(R::of(8.0) * crate::dilog::rogers_l(R::one() - cfg.x())?)
}
