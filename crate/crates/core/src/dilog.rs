//! The dilogarithm `Li2`, the Rogers dilogarithm `L`, its derivative, the
//! orthospectrum summand `L(1/cosh^2(l/2))`, and the five-term (Abel)
//! combination that characterizes `L` among smooth functions.
//!
//! Everything here is restricted to real arguments in `[0, 1]`, which is all
//! the geometry needs: the summand argument `1/cosh^2(l/2)` sweeps exactly
//! `(0, 1)` as the length `l` runs over `(0, ∞)`.

use crate::error::{Error, Result};
use crate::real::Real;

/// Series terms below this threshold no longer move an f64 accumulator.
const SERIES_CUTOFF: f64 = 1e-16;
/// Hard cap; the series is geometric with ratio <= 1/2, so 200 terms is far
/// beyond what convergence needs and only trips on NaN-style pathologies.
const MAX_SERIES_TERMS: usize = 200;

/// Dilogarithm `Li2(x) = Σ_{n>=1} x^n / n^2` for `x ∈ [0, 1]`.
///
/// Direct Taylor summation for `x <= 1/2`; for `x > 1/2` the reflection
/// `Li2(x) = π²/6 − ln(x)ln(1−x) − Li2(1−x)` keeps the series argument small
/// so convergence stays geometric with ratio at most 1/2.
pub fn li2<R: Real>(x: R) -> Result<R> {
    if !(x >= R::zero() && x <= R::one()) {
        return Err(Error::Domain(format!("li2 requires 0 <= x <= 1, got {x}")));
    }
    if x == R::zero() {
        return Ok(R::zero());
    }
    if x == R::one() {
        return Ok(zeta2());
    }
    let half = R::of(0.5);
    if x <= half {
        li2_series(x)
    } else {
        let y = R::one() - x;
        Ok(zeta2::<R>() - x.ln() * y.ln() - li2_series(y)?)
    }
}

fn li2_series<R: Real>(x: R) -> Result<R> {
    let cutoff = R::of(SERIES_CUTOFF);
    let mut sum = R::zero();
    let mut power = R::one();
    for n in 1..=MAX_SERIES_TERMS {
        power *= x;
        let n_r = R::of(n as f64);
        let term = power / (n_r * n_r);
        sum += term;
        if term < cutoff {
            return Ok(sum);
        }
    }
    Err(Error::Tolerance(format!(
        "dilogarithm series did not converge within {MAX_SERIES_TERMS} terms at x = {x}"
    )))
}

/// `π²/6 = Li2(1)`.
pub fn zeta2<R: Real>() -> R {
    R::PI() * R::PI() / R::of(6.0)
}

/// Rogers dilogarithm `L(x) = Li2(x) + ln(x) ln(1−x) / 2` on `[0, 1]`.
///
/// The product `ln(x) ln(1−x)` vanishes in the limit at both endpoints, so
/// the endpoints return the continuous extensions `L(0) = 0`, `L(1) = π²/6`
/// instead of evaluating `ln(0)`.
pub fn rogers_l<R: Real>(x: R) -> Result<R> {
    if !(x >= R::zero() && x <= R::one()) {
        return Err(Error::Domain(format!(
            "rogers_l requires 0 <= x <= 1, got {x}"
        )));
    }
    if x == R::zero() {
        return Ok(R::zero());
    }
    if x == R::one() {
        return Ok(zeta2());
    }
    Ok(li2(x)? + R::of(0.5) * x.ln() * (R::one() - x).ln())
}

/// Closed-form derivative `L'(x) = −(ln(1−x)/x + ln(x)/(1−x)) / 2`,
/// manifestly symmetric under `x ↦ 1−x`.  Diverges at the endpoints.
pub fn rogers_l_deriv<R: Real>(x: R) -> Result<R> {
    if !(x > R::zero() && x < R::one()) {
        return Err(Error::Domain(format!(
            "rogers_l_deriv requires 0 < x < 1, got {x}"
        )));
    }
    let one = R::one();
    Ok(-R::of(0.5) * ((one - x).ln() / x + x.ln() / (one - x)))
}

/// Per-orthogeodesic summand `L(1/cosh²(l/2))` for a length `l > 0`.
///
/// Strictly decreasing in `l`, with limits `π²/6` as `l → 0` and `0` as
/// `l → ∞`.
pub fn bridgeman_summand<R: Real>(l: R) -> Result<R> {
    if !(l > R::zero()) {
        return Err(Error::Domain(format!(
            "bridgeman_summand requires l > 0, got {l}"
        )));
    }
    let c = (l * R::of(0.5)).cosh();
    let arg = R::one() / (c * c);
    rogers_l(arg)
}

/// Five-term (Abel) combination of the Rogers dilogarithm:
///
/// `L(s1) − L(s2) + L(s2/s1) − L((1−s1⁻¹)/(1−s2⁻¹)) + L((1−s1)/(1−s2))`
///
/// for `0 < s2 < s1 < 1`.  All five inner arguments land in `(0, 1)`.  The
/// value is the same constant for every admissible pair; tests assert that
/// constancy rather than a particular normalization.
pub fn abel_residual<R: Real>(s1: R, s2: R) -> Result<R> {
    if !(R::zero() < s2 && s2 < s1 && s1 < R::one()) {
        return Err(Error::Domain(format!(
            "abel_residual requires 0 < s2 < s1 < 1, got s1 = {s1}, s2 = {s2}"
        )));
    }
    let one = R::one();
    let t3 = s2 / s1;
    // (1 - 1/s1) / (1 - 1/s2) rearranged to stay positive and cancellation-free
    let t4 = (s2 * (one - s1)) / (s1 * (one - s2));
    let t5 = (one - s1) / (one - s2);
    Ok(rogers_l(s1)? - rogers_l(s2)? + rogers_l(t3)? - rogers_l(t4)? + rogers_l(t5)?)
}
