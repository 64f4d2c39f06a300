//! Words (monomials) of the free monoid on letters `x1..xd`.

use std::cmp::Ordering;
use std::fmt;

/// A word in the free monoid: a finite sequence of 0-based letter indices.
///
/// Ordered by degree first and lexicographically within a degree (deg-lex),
/// which is the canonical term order everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    /// The empty word (multiplicative identity).
    pub fn one() -> Self {
        Word(Vec::new())
    }

    /// Single-letter word for the 0-based variable index `i`.
    pub fn letter(i: u32) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · rhs`.
    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + rhs.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    /// Reversal (the involution on words).
    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Largest letter index plus one, i.e. the smallest alphabet containing
    /// the word. Zero for the empty word.
    pub fn min_alphabet(&self) -> u32 {
        self.0.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// If `self = prefix · w`, returns `w`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if self.len() < prefix.len() || self.0[..prefix.len()] != prefix.0[..] {
            return None;
        }
        Some(Word(self.0[prefix.len()..].to_vec()))
    }

    /// If `self = w · suffix`, returns `w`.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        if self.len() < suffix.len() {
            return None;
        }
        let cut = self.len() - suffix.len();
        if self.0[cut..] != suffix.0[..] {
            return None;
        }
        Some(Word(self.0[..cut].to_vec()))
    }

    /// All words of length `len` over `d` letters, in ascending deg-lex
    /// (here: plain lexicographic) order.
    pub fn all_of_len(d: u32, len: usize) -> Vec<Word> {
        assert!(d >= 1, "alphabet must be nonempty");
        let mut out = vec![Word::one()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for w in &out {
                for c in 0..d {
                    let mut v = w.0.clone();
                    v.push(c);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length `lo..=hi` over `d` letters, ascending deg-lex.
    pub fn all_up_to(d: u32, lo: usize, hi: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in lo..=hi {
            out.extend(Word::all_of_len(d, len));
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Run-length form with 1-based variable names: `x1^2*x2`. The empty
    /// word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let c = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == c {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "x{}", c + 1)?;
            } else {
                write!(f, "x{}^{}", c + 1, run)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let e = Word::one();
        let x1 = Word(vec![0]);
        let x2 = Word(vec![1]);
        let x1x1 = Word(vec![0, 0]);
        let x1x2 = Word(vec![0, 1]);
        let x2x1 = Word(vec![1, 0]);
        // Degree dominates, then lexicographic on letters.
        assert!(e < x1 && x1 < x2 && x2 < x1x1);
        assert!(x1x1 < x1x2 && x1x2 < x2x1);
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let words = Word::all_up_to(2, 0, 3);
        assert_eq!(words.len(), 1 + 2 + 4 + 8);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn affixes() {
        let w = Word(vec![0, 1, 1, 0]);
        assert_eq!(w.strip_prefix(&Word(vec![0, 1])), Some(Word(vec![1, 0])));
        assert_eq!(w.strip_prefix(&Word(vec![1])), None);
        assert_eq!(w.strip_suffix(&Word(vec![1, 0])), Some(Word(vec![0, 1])));
        assert_eq!(w.strip_suffix(&w), Some(Word::one()));
        assert_eq!(w.reversed(), Word(vec![0, 1, 1, 0]));
        assert_eq!(Word(vec![0, 1]).reversed(), Word(vec![1, 0]));
    }

    #[test]
    fn display_run_length() {
        assert_eq!(Word(vec![1, 0, 0]).to_string(), "x2*x1^2");
        assert_eq!(Word::one().to_string(), "1");
        assert_eq!(Word(vec![0, 0, 0]).to_string(), "x1^3");
    }
}
