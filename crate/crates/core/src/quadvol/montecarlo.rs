//! Seeded Monte Carlo estimate of the crossing volume.
//!
//! The quadrilateral splits along the diagonal `(0, 1)` into two ideal
//! triangles of area π each.  A point of the standard ideal triangle
//! `(0, 1, ∞) = {0 < u < 1, v > sqrt(u(1−u))}` is drawn exactly from the
//! hyperbolic area measure:
//!
//! * the horizontal marginal is the arcsine law, `u = (1 − cos(π U₁))/2`;
//! * conditionally, `v = sqrt(u(1−u)) / U₂` inverts the column law
//!   `P(v ≤ t) = 1 − v_low/t`.
//!
//! The lower triangle `(0, x, 1)` is the image of the standard one under
//! the unit-determinant map `z ↦ xz/(xz + 1 − x)`, an isometry, so the same
//! draw pushes forward without any reweighting; each triangle enters with
//! its constant area weight π.  The crossing measure is evaluated exactly at
//! every sample, so all variance is spatial.
//!
//! Samples are organized in fixed-size shards; shard `k` runs its own
//! [`SplitMix64`](crate::rng::SplitMix64) stream seeded with `seed ^ k` and
//! shards are merged in index order, which makes the result bit-identical
//! for a given `(n_samples, seed)` no matter how many threads execute it.

use num_complex::Complex;
use rayon::prelude::*;

use super::crossing::crossing_angle_measure;
use crate::error::{Error, Result};
use crate::hypgeom::{HConfig, MoebiusMap};
use crate::real::Real;
use crate::rng::SplitMix64;

/// Samples per shard; fixed so the sharding plan depends only on `n`.
pub const SHARD_SIZE: u64 = 1 << 15;

/// Minimum sample count accepted.
pub const MIN_SAMPLES: u64 = 10_000;

#[derive(Debug, Clone, Copy)]
pub struct McEstimate<R> {
    pub estimate: R,
    pub stderr: R,
    pub n_samples: u64,
    pub seed: u64,
}

/// Unbiased Monte Carlo estimate of `∫_Q crossing_angle_measure dA` with a
/// standard error, deterministic for a fixed `(n_samples, seed)`.
pub fn v_montecarlo<R: Real>(cfg: &HConfig<R>, n_samples: u64, seed: u64) -> Result<McEstimate<R>> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::Parameter(format!(
            "need at least {MIN_SAMPLES} samples, got {n_samples}"
        )));
    }
    let x = cfg.x();
    // z ↦ xz / (xz + 1 − x): sends the standard ideal triangle (0, 1, ∞)
    // onto (0, x, 1)
    let lower_map = MoebiusMap::new(x, R::zero(), x, R::one() - x)?;

    let n_shards = n_samples.div_ceil(SHARD_SIZE);
    let partials: Vec<(R, R)> = (0..n_shards)
        .into_par_iter()
        .map(|k| {
            let count = if k == n_shards - 1 {
                n_samples - k * SHARD_SIZE
            } else {
                SHARD_SIZE
            };
            shard_sums(cfg, &lower_map, seed ^ k, count)
        })
        .collect();

    let mut sum = R::zero();
    let mut sum_sq = R::zero();
    for (s, s2) in partials {
        sum += s;
        sum_sq += s2;
    }
    let n = R::of(n_samples as f64);
    let mean = sum / n;
    let var = ((sum_sq - sum * sum / n) / (n - R::one())).max(R::zero());
    let stderr = (var / n).sqrt();
    Ok(McEstimate {
        estimate: mean,
        stderr,
        n_samples,
        seed,
    })
}

fn shard_sums<R: Real>(
    cfg: &HConfig<R>,
    lower_map: &MoebiusMap<R>,
    shard_seed: u64,
    count: u64,
) -> (R, R) {
    let mut rng = SplitMix64::new(shard_seed);
    let pi = R::PI();
    let mut sum = R::zero();
    let mut sum_sq = R::zero();
    for _ in 0..count {
        let z_upper = sample_standard_triangle::<R>(&mut rng);
        let z_lower = lower_map.apply_interior(sample_standard_triangle::<R>(&mut rng));
        let f_upper = crossing_angle_measure(z_upper, cfg).expect("sample is interior");
        let f_lower = crossing_angle_measure(z_lower, cfg).expect("sample is interior");
        let val = pi * (f_upper + f_lower);
        sum += val;
        sum_sq += val * val;
    }
    (sum, sum_sq)
}

/// Exact hyperbolic-area draw from `{0 < u < 1, v > sqrt(u(1−u))}`.
fn sample_standard_triangle<R: Real>(rng: &mut SplitMix64) -> Complex<R> {
    let u1: R = rng.next_unit();
    let u2: R = rng.next_unit();
    let half = R::of(0.5);
    // arcsine marginal, clamped away from the ideal vertices
    let u = ((R::one() - (R::PI() * u1).cos()) * half)
        .max(R::of(1e-15))
        .min(R::one() - R::of(1e-15));
    let v_low = (u * (R::one() - u)).sqrt();
    // u2 == 0 would put the point at the cusp; nudge onto the column
    let u2 = u2.max(R::of(1e-18));
    Complex::new(u, v_low / u2)
}
