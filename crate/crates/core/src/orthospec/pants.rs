//! Concrete Fuchsian realization of a hyperbolic pair of pants with totally
//! geodesic boundary, from its three boundary lengths.
//!
//! Construction: put the first boundary generator `A = diag(e^{b1/2},
//! e^{−b1/2})` on the axis `(0, ∞)`.  Right-angled hexagon trigonometry
//! fixes the distance `l12` between the first two boundary axes, so with
//! `t = tanh(l12/2)` the second axis is the semicircle `(t, 1/t)`, which
//! meets the unit semicircle — the common perpendicular — orthogonally.
//! Translating along that axis by `b2` *toward the common perpendicular's
//! positive side* (conjugated `diag(e^{−b2/2}, e^{b2/2})`) makes the trace
//! identity come out exactly:
//!
//! `tr(AB) = 2 cosh(b1/2)cosh(b2/2) − 2 cosh(l12) sinh(b1/2)sinh(b2/2)
//!         = −2 cosh(b3/2)`.
//!
//! The boundary words are `c1 = a`, `c2 = b`, `c3 = (ab)^{-1}`.

use super::word::Word;
use crate::error::{Error, Result};
use crate::hypgeom::{Geodesic, LinkClass, MoebiusMap};
use crate::real::Real;

/// Tolerance for the construction's self-checks on translation lengths.
pub const LENGTH_CHECK_TOL: f64 = 1e-9;

/// One boundary curve: its word in the generators, its matrix, axis, and
/// realized translation length.
#[derive(Debug, Clone)]
pub struct BoundaryCurve<R> {
    pub word: Word,
    pub map: MoebiusMap<R>,
    pub axis: Geodesic<R>,
    pub length: R,
}

/// A free, purely hyperbolic two-generator group presenting a surface with
/// three distinguished boundary curves; built-in construction is the pair
/// of pants (Euler characteristic −1).
#[derive(Debug, Clone)]
pub struct SurfaceSpec<R> {
    pub boundary_lengths: [R; 3],
    pub gen_a: MoebiusMap<R>,
    pub gen_b: MoebiusMap<R>,
    boundary: [BoundaryCurve<R>; 3],
    pub euler_char: i32,
}

impl<R: Real> SurfaceSpec<R> {
    /// Build the pair of pants with boundary lengths `(b1, b2, b3)`.
    ///
    /// Every positive triple is realizable; failures of the internal trace
    /// and disjointness checks surface as construction errors.
    pub fn pair_of_pants(b1: R, b2: R, b3: R) -> Result<Self> {
        for (name, b) in [("b1", b1), ("b2", b2), ("b3", b3)] {
            if !(b > R::zero() && b.is_finite()) {
                return Err(Error::Domain(format!(
                    "boundary length {name} must be positive, got {b}"
                )));
            }
        }
        let half = R::of(0.5);
        let gen_a = MoebiusMap::diagonal((b1 * half).exp())?;
        let l12 = hexagon_lengths([b1, b2, b3])?[0];
        let t = (l12 * half).tanh();
        // axis (t, 1/t), orthogonal to the unit semicircle
        let conj = MoebiusMap::new(R::one() / t, t, R::one(), R::one())?;
        let core = MoebiusMap::diagonal((-b2 * half).exp())?;
        let gen_b = conj.compose(&core).compose(&conj.inverse());
        Self::from_generators(gen_a, gen_b, [b1, b2, b3])
    }

    /// Escape hatch for user-supplied groups: accepts explicit generators,
    /// with the standard boundary words `a`, `b`, `(ab)^{-1}`.  Hyperbolicity
    /// of the boundary words, agreement with the expected lengths, and
    /// pairwise disjointness of the axes are checked; discreteness is not
    /// certified.
    pub fn from_generators(
        gen_a: MoebiusMap<R>,
        gen_b: MoebiusMap<R>,
        expected_lengths: [R; 3],
    ) -> Result<Self> {
        let c1_word = Word::parse("a").expect("static word");
        let c2_word = Word::parse("b").expect("static word");
        let c3_word = Word::parse("BA").expect("static word");
        let c1_map = gen_a;
        let c2_map = gen_b;
        let c3_map = gen_b.inverse().compose(&gen_a.inverse());
        let mut boundary = Vec::with_capacity(3);
        for (word, map, expected) in [
            (c1_word, c1_map, expected_lengths[0]),
            (c2_word, c2_map, expected_lengths[1]),
            (c3_word, c3_map, expected_lengths[2]),
        ] {
            let length = map.translation_length().map_err(|_| {
                Error::Construction(format!("boundary word {word} is not hyperbolic"))
            })?;
            if (length - expected).abs() > R::of(LENGTH_CHECK_TOL) {
                return Err(Error::Construction(format!(
                    "boundary word {word} has translation length {length}, expected {expected}"
                )));
            }
            let axis = map.axis()?;
            boundary.push(BoundaryCurve {
                word,
                map,
                axis,
                length,
            });
        }
        // boundary axes must be pairwise disjoint and unlinked
        for i in 0..3 {
            for j in (i + 1)..3 {
                if boundary[i].axis.link_class(&boundary[j].axis) != LinkClass::Disjoint {
                    return Err(Error::Construction(format!(
                        "boundary axes {} and {} are not disjoint",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let boundary: [BoundaryCurve<R>; 3] = boundary
            .try_into()
            .map_err(|_| Error::Construction("expected three boundary curves".into()))?;
        Ok(Self {
            boundary_lengths: expected_lengths,
            gen_a,
            gen_b,
            boundary,
            euler_char: -1,
        })
    }

    /// Boundary curve `i ∈ {0, 1, 2}`.
    pub fn boundary(&self, i: usize) -> &BoundaryCurve<R> {
        &self.boundary[i]
    }

    pub fn boundary_words(&self) -> [&Word; 3] {
        [
            &self.boundary[0].word,
            &self.boundary[1].word,
            &self.boundary[2].word,
        ]
    }

    pub fn total_boundary_length(&self) -> R {
        self.boundary_lengths[0] + self.boundary_lengths[1] + self.boundary_lengths[2]
    }

    /// Matrix of a word in the generators.
    pub fn word_matrix(&self, w: &Word) -> MoebiusMap<R> {
        use super::word::Letter;
        let mut m = MoebiusMap::identity();
        let a_inv = self.gen_a.inverse();
        let b_inv = self.gen_b.inverse();
        for &l in w.letters() {
            let g = match l {
                Letter::A => &self.gen_a,
                Letter::AInv => &a_inv,
                Letter::B => &self.gen_b,
                Letter::BInv => &b_inv,
            };
            m = m.compose(g);
        }
        m
    }
}

/// Closed-form lengths `(l12, l13, l23)` of the three simple inter-boundary
/// orthogeodesics of a pair of pants, from right-angled hexagon
/// trigonometry:
///
/// `cosh(l_ij) = (cosh(b_k/2) + cosh(b_i/2) cosh(b_j/2))
///             / (sinh(b_i/2) sinh(b_j/2))`.
pub fn hexagon_lengths<R: Real>(b: [R; 3]) -> Result<[R; 3]> {
    for len in b {
        if !(len > R::zero() && len.is_finite()) {
            return Err(Error::Domain(format!(
                "hexagon lengths need positive boundary lengths, got {len}"
            )));
        }
    }
    let half = R::of(0.5);
    let ch = [
        (b[0] * half).cosh(),
        (b[1] * half).cosh(),
        (b[2] * half).cosh(),
    ];
    let sh = [
        (b[0] * half).sinh(),
        (b[1] * half).sinh(),
        (b[2] * half).sinh(),
    ];
    let pair = |i: usize, j: usize, k: usize| ((ch[k] + ch[i] * ch[j]) / (sh[i] * sh[j])).acosh();
    Ok([pair(0, 1, 2), pair(0, 2, 1), pair(1, 2, 0)])
}
