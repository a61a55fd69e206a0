//! Orthospectrum enumeration: walk all reduced words up to a length bound,
//! canonicalize them into double-coset classes, measure each class's
//! orthogeodesic, and accumulate the two identity partial sums.

use rayon::prelude::*;

use super::canonical::{canonicalize, decode_key, encode_key, is_locally_minimal, Canonical};
use super::pants::SurfaceSpec;
use super::word::{visit_reduced_words, Letter, Word};
use crate::dilog::bridgeman_summand;
use crate::error::{Error, Result};
use crate::hypgeom::{
    dist_to_geodesic, geodesic_distance, hyp_dist, perpendicular_bisector, HPoint, MoebiusMap,
};
use crate::real::Real;

/// Key encoding caps word length at 26; `4·3^25` words is far past any
/// feasible enumeration anyway.
pub const MAX_WORD_LENGTH: usize = 26;

/// One orthogeodesic: boundary pair (1-based, `i ≤ j`), canonical word,
/// length, and its summand `L(1/cosh²(l/2))`.
#[derive(Debug, Clone)]
pub struct OrthoRecord<R> {
    pub i: u8,
    pub j: u8,
    pub word: Word,
    pub length: R,
    pub summand: R,
}

/// Constants of the capture bound: for any reduced word of length `n`,
/// `d(p0, w·p0) ≥ 2 rho + (n−1) gap`, hence an orthogeodesic missed at word
/// bound `N` has length at least `2 rho + N gap − 2 reach`.
#[derive(Debug, Clone, Copy)]
pub struct CompletenessInfo<R> {
    /// Half the minimal basepoint displacement among the four generators.
    pub rho: R,
    /// Minimal pairwise distance between the four bisector walls.
    pub gap: R,
    /// `max_k (d(p0, axis_k) + b_k/2)`.
    pub reach: R,
    /// Whether the four walls were verified pairwise disjoint.
    pub valid: bool,
}

/// The enumerated spectrum with its partial sums.
#[derive(Debug, Clone)]
pub struct Spectrum<R> {
    pub boundary_lengths: [R; 3],
    pub euler_char: i32,
    pub max_word_length: usize,
    pub records: Vec<OrthoRecord<R>>,
    /// Lengths below this are certified complete at this word bound.
    pub completeness_length: R,
    pub completeness: CompletenessInfo<R>,
    pub partial_sum: R,
    pub rhs: R,
}

/// Result of evaluating one identity against a spectrum.
#[derive(Debug, Clone, Copy)]
pub struct IdentityCheck<R> {
    pub partial_sum: R,
    pub rhs: R,
    pub residual: R,
}

/// Orthogeodesic length of the class of `(i, w, j)` (0-based indices): the
/// distance between `axis(c_i)` and `w · axis(c_j)`.
///
/// Crossing or shared-endpoint failures cannot occur over a genuine surface
/// group; if they surface, the group (or the enumeration) is wrong, so the
/// error is propagated rather than swallowed.
pub fn ortho_length<R: Real>(spec: &SurfaceSpec<R>, i: u8, w: &Word, j: u8) -> Result<R> {
    let moved = spec
        .word_matrix(w)
        .apply_geodesic(&spec.boundary(j as usize).axis);
    geodesic_distance(&spec.boundary(i as usize).axis, &moved)
}

/// Enumerate the spectrum of `spec` up to `max_word_length`.
pub fn spectrum<R: Real>(spec: &SurfaceSpec<R>, max_word_length: usize) -> Result<Spectrum<R>> {
    if max_word_length > MAX_WORD_LENGTH {
        return Err(Error::Parameter(format!(
            "max word length is capped at {MAX_WORD_LENGTH}, got {max_word_length}"
        )));
    }
    let cs: [Word; 3] = {
        let [c1, c2, c3] = spec.boundary_words();
        [c1.clone(), c2.clone(), c3.clone()]
    };

    // one task per reduced two-letter prefix (plus the short words), so the
    // sharding is independent of thread count
    let mut prefixes: Vec<Vec<Letter>> = vec![Vec::new()];
    if max_word_length >= 1 {
        for l in Letter::ALL {
            prefixes.push(vec![l]);
        }
    }
    if max_word_length >= 2 {
        for l in Letter::ALL {
            for m in Letter::ALL {
                if m != l.inverse() {
                    prefixes.push(vec![l, m]);
                }
            }
        }
    }

    // a shard of prefix length < 2 owns exactly that word; a two-letter
    // shard owns every word extending its prefix (including the prefix)
    let mut keys: Vec<u64> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut local: Vec<u64> = Vec::new();
            {
                let mut process = |letters: &[Letter]| {
                    let w = Word::from_letters(letters);
                    debug_assert_eq!(w.len(), letters.len(), "enumeration emits reduced words");
                    for i in 0..3u8 {
                        for j in i..3u8 {
                            if !is_locally_minimal(&cs, i, &w, j) {
                                continue;
                            }
                            if let Canonical::Class(key) = canonicalize(&cs, i, &w, j) {
                                local.push(encode_key(&key));
                            }
                        }
                    }
                };
                if prefix.len() < 2 {
                    process(prefix);
                } else {
                    let mut buf = prefix.clone();
                    visit_reduced_words(&mut buf, max_word_length, &mut process);
                }
            }
            local
        })
        .reduce(Vec::new, |mut acc, mut v| {
            acc.append(&mut v);
            acc
        });

    keys.sort_unstable();
    keys.dedup();

    let mut records: Vec<OrthoRecord<R>> = keys
        .par_iter()
        .map(|&bits| {
            let key = decode_key(bits);
            let length = ortho_length(spec, key.i, &key.word, key.j)?;
            let summand = bridgeman_summand(length)?;
            Ok(OrthoRecord {
                i: key.i + 1,
                j: key.j + 1,
                word: key.word,
                length,
                summand,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    records.sort_by(|a, b| {
        a.length
            .partial_cmp(&b.length)
            .expect("lengths are finite")
            .then(a.i.cmp(&b.i))
            .then(a.j.cmp(&b.j))
            .then(a.word.cmp(&b.word))
    });

    let partial_sum = records
        .iter()
        .fold(R::zero(), |acc, r| acc + r.summand);
    let rhs = R::PI() * R::PI() * R::of(-spec.euler_char as f64) * R::of(0.5);

    let completeness = completeness_constants(spec)?;
    let completeness_length = if completeness.valid {
        (R::of(2.0) * completeness.rho + R::of(max_word_length as f64) * completeness.gap
            - R::of(2.0) * completeness.reach)
            .max(R::zero())
    } else {
        R::zero()
    };

    Ok(Spectrum {
        boundary_lengths: spec.boundary_lengths,
        euler_char: spec.euler_char,
        max_word_length,
        records,
        completeness_length,
        completeness,
        partial_sum,
        rhs,
    })
}

impl<R: Real> Spectrum<R> {
    /// Restrict to the records whose canonical word length is ≤ `bound`:
    /// exactly the spectrum that enumeration at `bound` would produce,
    /// because canonical words are length-minimal in their class.
    pub fn truncated_partial_sums(&self, bound: usize) -> (usize, R, R) {
        let mut count = 0usize;
        let mut bridgeman = R::zero();
        let mut basmajian = R::zero();
        for r in &self.records {
            if r.word.len() <= bound {
                count += 1;
                bridgeman += r.summand;
                basmajian += R::of(2.0) * basmajian_term(r.length);
            }
        }
        (count, bridgeman, basmajian)
    }
}

/// `2 ln coth(l/2)`: the width of the boundary interval swept out around
/// one foot of an orthogeodesic of length `l` (the points whose inward
/// perpendicular ray crosses the opposite lift).
pub fn basmajian_term<R: Real>(length: R) -> R {
    let t = (length * R::of(0.5)).tanh();
    -R::of(2.0) * t.ln()
}

/// Partial sum of `L(1/cosh²(l_i/2))` against the limit `−π²χ/2`.
pub fn bridgeman_check<R: Real>(s: &Spectrum<R>) -> IdentityCheck<R> {
    IdentityCheck {
        partial_sum: s.partial_sum,
        rhs: s.rhs,
        residual: s.rhs - s.partial_sum,
    }
}

/// Partial sum of the boundary-interval widths against the total boundary
/// length: each record contributes `2 ln coth(l/2)` per foot, and an
/// unoriented orthogeodesic has two feet on the boundary (both on the same
/// component when `i = j`).
pub fn basmajian_check<R: Real>(s: &Spectrum<R>) -> IdentityCheck<R> {
    let partial = s
        .records
        .iter()
        .fold(R::zero(), |acc, r| acc + R::of(2.0) * basmajian_term(r.length));
    let rhs = s.boundary_lengths[0] + s.boundary_lengths[1] + s.boundary_lengths[2];
    IdentityCheck {
        partial_sum: partial,
        rhs,
        residual: rhs - partial,
    }
}

/// Compute the capture-bound constants from the Dirichlet bisector walls of
/// the four generators around a central basepoint.
///
/// The walls `W_g` (perpendicular bisectors of `[p0, g p0]`) satisfy exact
/// ping-pong: `g` maps the far side of `W_{g⁻¹}` onto the far side of
/// `W_g`.  If the four walls are pairwise disjoint, a reduced word
/// `g_1 … g_n` nests `n` wall images whose consecutive gaps pull back to
/// pairwise wall distances, giving `d(p0, w p0) ≥ 2 rho + (n−1) gap`.
/// Shifting the common-perpendicular feet into a fundamental window on each
/// boundary axis costs at most `reach_i + reach_j`, which yields the length
/// bound recorded in [`Spectrum::completeness_length`].
fn completeness_constants<R: Real>(spec: &SurfaceSpec<R>) -> Result<CompletenessInfo<R>> {
    let p0 = base_point(spec)?;
    let gens: [MoebiusMap<R>; 4] = [
        spec.gen_a,
        spec.gen_a.inverse(),
        spec.gen_b,
        spec.gen_b.inverse(),
    ];
    let mut rho = R::infinity();
    let mut walls = Vec::with_capacity(4);
    for g in &gens {
        let image = g.apply_interior(p0);
        rho = rho.min(hyp_dist(p0, image) * R::of(0.5));
        walls.push(perpendicular_bisector(p0, image)?);
    }
    let mut gap = R::infinity();
    let mut valid = true;
    for i in 0..4 {
        for j in (i + 1)..4 {
            match geodesic_distance(&walls[i], &walls[j]) {
                Ok(d) => gap = gap.min(d),
                Err(_) => {
                    valid = false;
                    gap = R::zero();
                }
            }
        }
    }
    let mut reach = R::zero();
    for k in 0..3 {
        let r = dist_to_geodesic(p0, &spec.boundary(k).axis)?
            + spec.boundary_lengths[k] * R::of(0.5);
        reach = reach.max(r);
    }
    Ok(CompletenessInfo {
        rho,
        gap,
        reach,
        valid,
    })
}

/// Midpoint of the common perpendicular between the axes of the two
/// generators; a reasonably central basepoint for the wall construction.
fn base_point<R: Real>(spec: &SurfaceSpec<R>) -> Result<HPoint<R>> {
    let g1 = &spec.boundary(0).axis;
    let g2 = &spec.boundary(1).axis;
    let to_std = MoebiusMap::to_standard_axis(g1);
    let img = to_std.apply_geodesic(g2);
    let a = img
        .e1
        .to_real()
        .ok_or_else(|| Error::Construction("axis image contains ∞".into()))?;
    let b = img
        .e2
        .to_real()
        .ok_or_else(|| Error::Construction("axis image contains ∞".into()))?;
    if a * b <= R::zero() {
        return Err(Error::Construction(
            "generator axes are not disjoint from (0, ∞)".into(),
        ));
    }
    // feet of the common perpendicular |z| = sqrt(ab) on both axes
    let r = (a * b).sqrt();
    let x0 = R::of(2.0) * a * b / (a + b);
    let y0 = (r * r - x0 * x0).max(R::zero()).sqrt();
    let theta1 = R::PI() * R::of(0.5);
    let theta2 = y0.atan2(x0);
    // hyperbolic arc-length parameter along |z| = r is ln tan(θ/2)
    let s_mid = ((theta1 * R::of(0.5)).tan().ln() + ((theta2 * R::of(0.5)).tan()).ln())
        * R::of(0.5);
    let theta_mid = R::of(2.0) * s_mid.exp().atan();
    let p0 = num_complex::Complex::new(r * theta_mid.cos(), r * theta_mid.sin());
    Ok(to_std.inverse().apply_interior(p0))
}
