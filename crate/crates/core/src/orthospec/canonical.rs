//! Canonical representatives of double cosets `⟨c_i⟩ \ Γ / ⟨c_j⟩`, folded by
//! orientation reversal `(i, w, j) ~ (j, w⁻¹, i)`.  One class per
//! orthogeodesic between boundaries `i` and `j`; the class of `(i, w, i)`
//! with `w ∈ ⟨c_i⟩` is degenerate (no orthogeodesic).
//!
//! Length minimization over `c_i^m · w · c_j^n` is a distance between two
//! lines in the Cayley tree, hence coordinate-wise convex with a bounded
//! plateau: strict descent by single boundary-letter multiplications lands
//! on the plateau, and a small window around it (±[`PLATEAU_WINDOW`]; the
//! boundary words have length ≤ 2, so plateaus span at most two steps)
//! contains every minimal-length member.  The canonical representative is
//! the minimum under (word length, shortlex letters, i, j) over both
//! orientations of that window.  Dedup is therefore exact and symbolic;
//! floating point never enters.

use super::word::Word;

/// Window width around the descent endpoint searched for equal-length
/// class members.
const PLATEAU_WINDOW: i32 = 2;

/// A canonical `(i, word, j)` triple; indices are 0-based boundary labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub len: usize,
    pub word: Word,
    pub i: u8,
    pub j: u8,
}

impl ClassKey {
    fn new(i: u8, word: Word, j: u8) -> Self {
        Self {
            len: word.len(),
            word,
            i,
            j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Canonical {
    Class(ClassKey),
    /// `i = j` and `w ∈ ⟨c_i⟩`: the trivial class.
    Degenerate,
}

/// Cheap test used to prune enumeration: `w` already has minimal length in
/// its one-sided orbits (no single multiplication by `c_i^{±1}` on the left
/// or `c_j^{±1}` on the right shortens it).  Words failing this were already
/// seen through a shorter class member.
pub fn is_locally_minimal(cs: &[Word; 3], i: u8, w: &Word, j: u8) -> bool {
    let ci = &cs[i as usize];
    let cj = &cs[j as usize];
    let ci_inv = ci.inverse();
    let cj_inv = cj.inverse();
    ci.concat_len(w) >= w.len()
        && ci_inv.concat_len(w) >= w.len()
        && w.concat_len(cj) >= w.len()
        && w.concat_len(&cj_inv) >= w.len()
}

/// Canonicalize `(i, w, j)`.
pub fn canonicalize(cs: &[Word; 3], i: u8, w: &Word, j: u8) -> Canonical {
    let forward = minimal_members(cs, i, w, j);
    let backward = minimal_members(cs, j, &w.inverse(), i);

    let min_len = forward
        .iter()
        .map(Word::len)
        .chain(backward.iter().map(Word::len))
        .min()
        .expect("windows are non-empty");

    if min_len == 0 && i == j {
        return Canonical::Degenerate;
    }

    let mut best: Option<ClassKey> = None;
    for (ii, jj, words) in [(i, j, &forward), (j, i, &backward)] {
        for word in words {
            if word.len() != min_len {
                continue;
            }
            let key = ClassKey::new(ii, word.clone(), jj);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    Canonical::Class(best.expect("at least one minimal member"))
}

/// All minimal-length members of `{c_i^m w c_j^n}` near the descent
/// endpoint.
fn minimal_members(cs: &[Word; 3], i: u8, w: &Word, j: u8) -> Vec<Word> {
    let ci = &cs[i as usize];
    let cj = &cs[j as usize];
    let ci_inv = ci.inverse();
    let cj_inv = cj.inverse();

    // strict descent: keep any single-step multiplication that shortens
    let mut cur = w.clone();
    loop {
        let mut improved = false;
        for cand in [
            ci.concat(&cur),
            ci_inv.concat(&cur),
            cur.concat(cj),
            cur.concat(&cj_inv),
        ] {
            if cand.len() < cur.len() {
                cur = cand;
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }

    // plateau sweep around the endpoint
    let mut members = Vec::new();
    let mut min_len = cur.len();
    for dm in -PLATEAU_WINDOW..=PLATEAU_WINDOW {
        let left = ci.power(dm).concat(&cur);
        for dn in -PLATEAU_WINDOW..=PLATEAU_WINDOW {
            let cand = left.concat(&cj.power(dn));
            if cand.len() < min_len {
                min_len = cand.len();
            }
            members.push(cand);
        }
    }
    members.retain(|m| m.len() == min_len);
    members
}

/// Brute-force reference over a wide power range; test oracle only.
#[cfg(test)]
pub fn canonicalize_brute_force(cs: &[Word; 3], i: u8, w: &Word, j: u8, radius: i32) -> Canonical {
    let mut best: Option<ClassKey> = None;
    let mut saw_empty_diag = false;
    for (ii, jj, base) in [(i, j, w.clone()), (j, i, w.inverse())] {
        let ci = &cs[ii as usize];
        let cj = &cs[jj as usize];
        for m in -radius..=radius {
            let left = ci.power(m).concat(&base);
            for n in -radius..=radius {
                let cand = left.concat(&cj.power(n));
                if cand.is_empty() && ii == jj {
                    saw_empty_diag = true;
                }
                let key = ClassKey::new(ii, cand, jj);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
    }
    if saw_empty_diag {
        Canonical::Degenerate
    } else {
        Canonical::Class(best.expect("non-empty search"))
    }
}

/// Pack a canonical key into a `u64`: 2 bits per letter (max length 26),
/// then length, then the boundary indices.  Exact and order-preserving
/// enough for dedup purposes.
pub fn encode_key(key: &ClassKey) -> u64 {
    debug_assert!(key.len <= 26);
    let mut bits: u64 = 0;
    for (pos, l) in key.word.letters().iter().enumerate() {
        bits |= (l.index() as u64) << (2 * pos);
    }
    bits | ((key.len as u64) << 52) | ((key.i as u64) << 58) | ((key.j as u64) << 61)
}

pub fn decode_key(bits: u64) -> ClassKey {
    use super::word::Letter;
    let len = ((bits >> 52) & 0x3f) as usize;
    let i = ((bits >> 58) & 0x7) as u8;
    let j = ((bits >> 61) & 0x7) as u8;
    let mut letters = Vec::with_capacity(len);
    for pos in 0..len {
        letters.push(Letter::from_index(((bits >> (2 * pos)) & 0x3) as u8));
    }
    ClassKey::new(i, Word::from_letters(&letters), j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn pants_words() -> [Word; 3] {
        [
            Word::parse("a").unwrap(),
            Word::parse("b").unwrap(),
            Word::parse("BA").unwrap(),
        ]
    }

    fn random_word(rng: &mut SplitMix64, max_len: u64) -> Word {
        use super::super::word::Letter;
        let len = rng.next_u64() % (max_len + 1);
        let letters: Vec<Letter> = (0..len)
            .map(|_| Letter::from_index((rng.next_u64() % 4) as u8))
            .collect();
        Word::from_letters(&letters)
    }

    #[test]
    fn boundary_power_is_degenerate() {
        let cs = pants_words();
        let a = Word::parse("a").unwrap();
        assert_eq!(canonicalize(&cs, 0, &a, 0), Canonical::Degenerate);
        let a3 = Word::parse("aaa").unwrap();
        assert_eq!(canonicalize(&cs, 0, &a3, 0), Canonical::Degenerate);
        let c3_pow = Word::parse("BABA").unwrap();
        assert_eq!(canonicalize(&cs, 2, &c3_pow, 2), Canonical::Degenerate);
        let empty = Word::empty();
        assert_eq!(canonicalize(&cs, 1, &empty, 1), Canonical::Degenerate);
    }

    #[test]
    fn empty_cross_pair_is_its_own_class() {
        let cs = pants_words();
        match canonicalize(&cs, 0, &Word::empty(), 1) {
            Canonical::Class(key) => {
                assert_eq!(key.i, 0);
                assert_eq!(key.j, 1);
                assert!(key.word.is_empty());
            }
            Canonical::Degenerate => panic!("cross pair must not be degenerate"),
        }
        // powers of the boundary words collapse onto the same class
        let w = Word::parse("aab").unwrap(); // a² · b ∈ ⟨c1⟩ ε ⟨c2⟩
        assert_eq!(
            canonicalize(&cs, 0, &w, 1),
            canonicalize(&cs, 0, &Word::empty(), 1)
        );
    }

    #[test]
    fn orientation_fold_matches() {
        let cs = pants_words();
        let mut rng = SplitMix64::new(0xf01d);
        let mut checked = 0;
        while checked < 100 {
            let w = random_word(&mut rng, 8);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            let fwd = canonicalize(&cs, i, &w, j);
            let bwd = canonicalize(&cs, j, &w.inverse(), i);
            assert_eq!(fwd, bwd, "orientation fold failed at ({i}, {w}, {j})");
            checked += 1;
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let cs = pants_words();
        let mut rng = SplitMix64::new(0x1de0);
        for _ in 0..200 {
            let w = random_word(&mut rng, 8);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            if let Canonical::Class(key) = canonicalize(&cs, i, &w, j) {
                let again = canonicalize(&cs, key.i, &key.word, key.j);
                assert_eq!(again, Canonical::Class(key.clone()), "not idempotent");
            }
        }
    }

    #[test]
    fn invariant_under_coset_moves() {
        let cs = pants_words();
        let mut rng = SplitMix64::new(0xc0de);
        for _ in 0..200 {
            let w = random_word(&mut rng, 6);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            let m = (rng.next_u64() % 7) as i32 - 3;
            let n = (rng.next_u64() % 7) as i32 - 3;
            let moved = cs[i as usize]
                .power(m)
                .concat(&w)
                .concat(&cs[j as usize].power(n));
            assert_eq!(
                canonicalize(&cs, i, &w, j),
                canonicalize(&cs, i, &moved, j),
                "coset move changed the class of ({i}, {w}, {j}) with (m, n) = ({m}, {n})"
            );
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let cs = pants_words();
        let mut rng = SplitMix64::new(0xb00f);
        for _ in 0..400 {
            let w = random_word(&mut rng, 7);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            let fast = canonicalize(&cs, i, &w, j);
            let slow = canonicalize_brute_force(&cs, i, &w, j, w.len() as i32 + 3);
            assert_eq!(fast, slow, "mismatch at ({i}, {w}, {j})");
        }
    }

    #[test]
    fn locally_minimal_filter_is_sound() {
        // every word failing the filter has a shorter class member; every
        // canonical representative passes it
        let cs = pants_words();
        let mut rng = SplitMix64::new(0x50fa);
        for _ in 0..300 {
            let w = random_word(&mut rng, 7);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            if let Canonical::Class(key) = canonicalize(&cs, i, &w, j) {
                assert!(
                    is_locally_minimal(&cs, key.i, &key.word, key.j),
                    "canonical rep ({}, {}, {}) fails the filter",
                    key.i,
                    key.word,
                    key.j
                );
                if !is_locally_minimal(&cs, i, &w, j) {
                    assert!(key.len < w.len() || w != key.word || i != key.i || j != key.j);
                }
            }
        }
    }

    #[test]
    fn key_encoding_roundtrips() {
        let cs = pants_words();
        let mut rng = SplitMix64::new(0xe2c0);
        for _ in 0..300 {
            let w = random_word(&mut rng, 12);
            let i = (rng.next_u64() % 3) as u8;
            let j = (rng.next_u64() % 3) as u8;
            if let Canonical::Class(key) = canonicalize(&cs, i, &w, j) {
                let bits = encode_key(&key);
                assert_eq!(decode_key(bits), key);
            }
        }
    }
}
