//! Freely reduced words in the rank-2 free group on `a`, `b`.
//!
//! Serialization convention: one character per letter over the alphabet
//! `a, A, b, B`, uppercase meaning inverse.  Word comparison is shortlex
//! with the letter order `a < A < b < B`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Self {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }

    /// Index 0..4 for compact encodings.
    pub fn index(self) -> u8 {
        match self {
            Letter::A => 0,
            Letter::AInv => 1,
            Letter::B => 2,
            Letter::BInv => 3,
        }
    }

    pub fn from_index(i: u8) -> Self {
        Letter::ALL[i as usize]
    }
}

/// A freely reduced word; the reduction invariant is maintained by every
/// constructor and operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Build from letters, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
        for &l in letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(
                Letter::from_char(c)
                    .ok_or_else(|| Error::Parameter(format!("invalid word letter '{c}'")))?,
            );
        }
        Ok(Self::from_letters(&letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Reduced concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut stack = self.0.clone();
        for &l in &other.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    /// `self^n` for a cyclically reduced `self` (no reduction can occur at
    /// the junctions); negative powers invert first.
    pub fn power(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word::from_letters(&out)
    }

    /// Length of the reduced product `self · other` without materializing it.
    pub fn concat_len(&self, other: &Self) -> usize {
        let mut cancel = 0usize;
        let max = self.len().min(other.len());
        while cancel < max {
            let left = self.0[self.len() - 1 - cancel];
            let right = other.0[cancel];
            if left == right.inverse() {
                cancel += 1;
            } else {
                break;
            }
        }
        self.len() + other.len() - 2 * cancel
    }
}

impl Ord for Word {
    /// Shortlex: length first, then letterwise `a < A < b < B`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Number of freely reduced words of length at most `max_len`:
/// `1 + Σ_{n=1}^{max_len} 4 · 3^{n−1}`.
pub fn reduced_word_count(max_len: usize) -> u64 {
    let mut count = 1u64;
    let mut layer = 4u64;
    for _ in 1..=max_len {
        count += layer;
        layer *= 3;
    }
    count
}

/// Visit every freely reduced word of length ≤ `max_len` exactly once,
/// starting from `prefix` (which must itself be reduced).  Depth-first, so
/// the visitor sees a word before its extensions.
pub fn visit_reduced_words<F: FnMut(&[Letter])>(
    prefix: &mut Vec<Letter>,
    max_len: usize,
    f: &mut F,
) {
    f(prefix);
    if prefix.len() >= max_len {
        return;
    }
    let last = prefix.last().copied();
    for l in Letter::ALL {
        if Some(l.inverse()) == last {
            continue;
        }
        prefix.push(l);
        visit_reduced_words(prefix, max_len, f);
        prefix.pop();
    }
}

/// Iterator over all freely reduced words of length ≤ `max_len`
/// (depth-first order, empty word first).
pub fn enumerate_words(max_len: usize) -> impl Iterator<Item = Word> {
    let mut words = Vec::new();
    let mut buf = Vec::new();
    visit_reduced_words(&mut buf, max_len, &mut |w| {
        words.push(Word::from_letters(w))
    });
    words.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn reduction_cancels_pairs() {
        let w = Word::parse("abBA").unwrap();
        assert!(w.is_empty());
        let w = Word::parse("abAB").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.to_string(), "abAB");
    }

    #[test]
    fn concat_and_inverse() {
        let u = Word::parse("ab").unwrap();
        let v = Word::parse("Ba").unwrap();
        assert_eq!(u.concat(&v).to_string(), "aa");
        assert_eq!(u.concat(&u.inverse()).len(), 0);
        assert_eq!(u.inverse().to_string(), "BA");
        assert_eq!(u.concat_len(&v), 2);
        assert_eq!(u.concat_len(&u.inverse()), 0);
    }

    #[test]
    fn powers_of_cyclically_reduced_words() {
        let c3 = Word::parse("BA").unwrap();
        assert_eq!(c3.power(3).to_string(), "BABABA");
        assert_eq!(c3.power(-2).to_string(), "abab");
        assert_eq!(c3.power(0).len(), 0);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(reduced_word_count(0), 1);
        assert_eq!(reduced_word_count(1), 5);
        assert_eq!(reduced_word_count(3), 53);
        for max_len in 0..=6 {
            let n = enumerate_words(max_len).count() as u64;
            assert_eq!(n, reduced_word_count(max_len), "at max_len {max_len}");
        }
    }

    #[test]
    fn enumeration_yields_unique_reduced_words() {
        let all: Vec<Word> = enumerate_words(4).collect();
        let mut seen = std::collections::HashSet::new();
        for w in &all {
            assert_eq!(*w, Word::from_letters(w.letters()), "not reduced: {w}");
            assert!(seen.insert(w.clone()), "duplicate {w}");
        }
    }

    #[test]
    fn shortlex_order() {
        let mut words: Vec<Word> = ["b", "", "aa", "A", "a", "ab"]
            .iter()
            .map(|s| Word::parse(s).unwrap())
            .collect();
        words.sort();
        let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, vec!["", "a", "A", "b", "aa", "ab"]);
    }

    #[test]
    fn concat_len_agrees_with_concat_on_random_words() {
        let mut rng = SplitMix64::new(0x90bd);
        for _ in 0..500 {
            let mut letters = Vec::new();
            for _ in 0..(rng.next_u64() % 12) {
                letters.push(Letter::from_index((rng.next_u64() % 4) as u8));
            }
            let u = Word::from_letters(&letters);
            letters.clear();
            for _ in 0..(rng.next_u64() % 12) {
                letters.push(Letter::from_index((rng.next_u64() % 4) as u8));
            }
            let v = Word::from_letters(&letters);
            assert_eq!(u.concat_len(&v), u.concat(&v).len(), "u = {u}, v = {v}");
        }
    }
}
