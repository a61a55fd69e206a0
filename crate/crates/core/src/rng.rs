//! Deterministic random number generation.
//!
//! Monte Carlo runs must be bit-reproducible across platforms and thread
//! counts, so the generator is fully specified here instead of delegating to
//! an external crate: SplitMix64 (Steele, Lea & Flood's `splitmix64`), a
//! 64-bit counter hashed through two xor-multiply rounds.
//!
//! State update and output for seed word `s`:
//!
//! ```text
//! s += 0x9E3779B97F4A7C15
//! z  = s
//! z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! out = z ^ (z >> 31)
//! ```
//!
//! Uniform variates in `[0, 1)` take the top 53 bits of `out`.

use crate::real::Real;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_unit_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    pub fn next_unit<R: Real>(&mut self) -> R {
        R::of(self.next_unit_f64())
    }
}
