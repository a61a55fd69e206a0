//! Orthospectrum enumeration for a hyperbolic pair of pants (and, through
//! the generator escape hatch, any free two-generator purely hyperbolic
//! group with three distinguished boundary words).
//!
//! Orthogeodesics between boundaries `i` and `j` correspond to double
//! cosets `⟨c_i⟩ \ Γ / ⟨c_j⟩` folded by orientation reversal, minus the
//! trivial class when `i = j`.  Deduplication is symbolic (canonical coset
//! words); lengths are measured afterwards as distances between boundary
//! axis lifts.

mod canonical;
mod export;
mod pants;
mod spectrum;
mod word;

pub use canonical::{canonicalize, Canonical, ClassKey};
pub use export::{
    spectrum_to_csv, spectrum_to_json, IdentityJson, RecordJson, SpectrumJson, SurfaceJson,
};
pub use pants::{hexagon_lengths, BoundaryCurve, SurfaceSpec, LENGTH_CHECK_TOL};
pub use spectrum::{
    basmajian_check, basmajian_term, bridgeman_check, ortho_length, spectrum, CompletenessInfo,
    IdentityCheck, OrthoRecord, Spectrum, MAX_WORD_LENGTH,
};
pub use word::{enumerate_words, reduced_word_count, visit_reduced_words, Letter, Word};
