//! Noncommutative polynomials over Q with a fixed alphabet `x1..xd`.
//!
//! Terms are kept in a map ordered by deg-lex on words, zero coefficients are
//! never stored, and the alphabet size travels with every polynomial so that
//! mixed-arity arithmetic fails loudly instead of silently reinterpreting
//! variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exactla::RatMatrix;
use crate::rat::{fmt_rat, Rat};
use crate::unipoly::UniPoly;
use crate::word::Word;

/// A polynomial in the free associative algebra Q<x1..xd>.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct NCPoly {
    d: u32,
    terms: BTreeMap<Word, Rat>,
}

impl NCPoly {
    /// The zero polynomial on `d` variables.
    pub fn zero(d: u32) -> Self {
        assert!(d >= 1, "alphabet must have at least one letter");
        NCPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(d: u32, c: Rat) -> Self {
        let mut p = NCPoly::zero(d);
        if !c.is_zero() {
            p.terms.insert(Word::one(), c);
        }
        p
    }

    pub fn one(d: u32) -> Self {
        NCPoly::constant(d, Rat::one())
    }

    /// The variable `x<i>` for a 1-based index `i` in `1..=d`.
    pub fn var(d: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= d, "variable x{i} outside alphabet of size {d}");
        let mut p = NCPoly::zero(d);
        p.terms.insert(Word::letter(i - 1), Rat::one());
        p
    }

    /// Builds a polynomial from (word, coefficient) pairs, merging duplicates
    /// and dropping zeros. Panics if a word uses a letter outside `0..d`.
    pub fn from_terms(d: u32, terms: impl IntoIterator<Item = (Word, Rat)>) -> Self {
        let mut p = NCPoly::zero(d);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c * w` in place.
    pub fn add_term(&mut self, w: Word, c: Rat) {
        assert!(
            w.min_alphabet() <= self.d,
            "word {w} uses a letter outside alphabet of size {}",
            self.d
        );
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            let w = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&w);
        }
    }

    /// Alphabet size `d`.
    pub fn nvars(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn is_constant(&self) -> bool {
        self.deg().map_or(true, |d| d == 0)
    }

    /// Coefficient of `w` (zero if absent).
    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Word::one())
    }

    /// Terms in ascending deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Deg-lex greatest word, `None` for zero.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Coefficient of the deg-lex greatest word.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    /// Homogeneous component of degree `m`.
    pub fn graded_part(&self, m: usize) -> NCPoly {
        NCPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest-degree homogeneous component (zero for the zero polynomial).
    pub fn leading_form(&self) -> NCPoly {
        match self.deg() {
            Some(n) => self.graded_part(n),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.deg() {
            None => true,
            Some(n) => self.terms.keys().all(|w| w.len() == n),
        }
    }

    fn assert_same_alphabet(&self, rhs: &NCPoly) {
        assert_eq!(
            self.d, rhs.d,
            "alphabet mismatch: {} vs {} variables",
            self.d, rhs.d
        );
    }

    pub fn scale(&self, c: &Rat) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.d);
        }
        NCPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    /// Reverses every word; an involution and an anti-automorphism.
    pub fn transpose(&self) -> NCPoly {
        NCPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> NCPoly {
        let mut acc = NCPoly::one(self.d);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a scalar point (the commutative collapse).
    pub fn eval_scalar(&self, tau: &[Rat]) -> Rat {
        assert_eq!(
            tau.len(),
            self.d as usize,
            "point has {} coordinates, polynomial has {} variables",
            tau.len(),
            self.d
        );
        let mut acc = Rat::zero();
        for (w, c) in &self.terms {
            let mut prod = c.clone();
            for &letter in &w.0 {
                prod *= &tau[letter as usize];
            }
            acc += prod;
        }
        acc
    }

    /// Exact right division: `q` with `self = q * g`, if it exists.
    pub fn right_divide(&self, g: &NCPoly) -> Option<NCPoly> {
        self.divide(g, false)
    }

    /// Exact left division: `q` with `self = g * q`, if it exists.
    pub fn left_divide(&self, g: &NCPoly) -> Option<NCPoly> {
        self.divide(g, true)
    }

    fn divide(&self, g: &NCPoly, from_left: bool) -> Option<NCPoly> {
        self.assert_same_alphabet(g);
        assert!(!g.is_zero(), "division by zero polynomial");
        let gw = g.leading_word().unwrap().clone();
        let gc = g.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut q = NCPoly::zero(self.d);
        while let Some(rw) = rem.leading_word().cloned() {
            if rw.len() < gw.len() {
                return None;
            }
            let u = if from_left {
                rw.strip_prefix(&gw)?
            } else {
                rw.strip_suffix(&gw)?
            };
            let c = rem.coeff(&rw) / &gc;
            let mut term = NCPoly::zero(self.d);
            term.terms.insert(u, c);
            let prod = if from_left { g * &term } else { &term * g };
            rem = &rem - &prod;
            q = &q + &term;
        }
        Some(q)
    }
}

impl Zero for NCPoly {
    fn zero() -> Self {
        panic!("NCPoly::zero requires an alphabet size; use NCPoly::zero(d)")
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn set_zero(&mut self) {
        self.terms.clear();
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.assert_same_alphabet(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.assert_same_alphabet(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.assert_same_alphabet(rhs);
        let mut out = NCPoly::zero(self.d);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: &NCPoly) -> NCPoly {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl fmt::Display for NCPoly {
    /// Canonical text form: terms ascending in deg-lex, explicit `*` between
    /// factors, `^` for repeated letters, rationals as `p/q`. This is exactly
    /// the grammar accepted by [`crate::parser::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if w.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

/// Substitutes `h` for the variable of `p`: returns `p(h)` in Q<x1..xd>.
pub fn compose_uni(p: &UniPoly, h: &NCPoly) -> NCPoly {
    let d = h.nvars();
    let coeffs = p.coeffs();
    let mut acc = NCPoly::zero(d);
    for c in coeffs.iter().rev() {
        acc = &(&acc * h) + &NCPoly::constant(d, c.clone());
    }
    acc
}

/// Writes `f` as a univariate polynomial in `h`, if possible.
///
/// Solves the linear system expressing `f` in `1, h, h^2, ..` up to the
/// degree bound `deg f / deg h` and re-verifies the result by composition.
pub fn express_in_powers(f: &NCPoly, h: &NCPoly) -> Option<UniPoly> {
    assert_eq!(f.nvars(), h.nvars(), "alphabet mismatch");
    let hd = h.deg().filter(|&n| n > 0)?;
    if f.is_zero() {
        return Some(UniPoly::zero());
    }
    let k = f.deg().unwrap() / hd;
    let mut powers = Vec::with_capacity(k + 1);
    let mut cur = NCPoly::one(f.nvars());
    for _ in 0..=k {
        powers.push(cur.clone());
        cur = &cur * h;
    }
    let mut support: Vec<Word> = Vec::new();
    for p in powers.iter().chain(std::iter::once(f)) {
        support.extend(p.terms.keys().cloned());
    }
    support.sort();
    support.dedup();
    let mut m = RatMatrix::zeros(support.len(), powers.len());
    let mut rhs = Vec::with_capacity(support.len());
    for (r, w) in support.iter().enumerate() {
        for (c, p) in powers.iter().enumerate() {
            m.set(r, c, p.coeff(w));
        }
        rhs.push(f.coeff(w));
    }
    let sol = crate::exactla::solve(&m, &rhs)?;
    let p = UniPoly::from_coeffs(sol.particular);
    if compose_uni(&p, h) == *f {
        Some(p)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn x(i: u32) -> NCPoly {
        NCPoly::var(2, i)
    }

    #[test]
    fn product_of_sum_and_difference() {
        // (x1+x2)(x1-x2) = x1^2 - x1x2 + x2x1 - x2^2
        let f = &x(1) + &x(2);
        let g = &x(1) - &x(2);
        let prod = &f * &g;
        let expected = NCPoly::from_terms(
            2,
            vec![
                (Word(vec![0, 0]), rint(1)),
                (Word(vec![0, 1]), rint(-1)),
                (Word(vec![1, 0]), rint(1)),
                (Word(vec![1, 1]), rint(-1)),
            ],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn degree_and_leading() {
        let f = NCPoly::from_terms(
            2,
            vec![
                (Word::one(), rint(3)),
                (Word(vec![0, 1]), rint(1)),
                (Word(vec![1, 0, 0]), rat(-1, 2)),
            ],
        );
        assert_eq!(f.deg(), Some(3));
        assert_eq!(f.leading_word(), Some(&Word(vec![1, 0, 0])));
        assert_eq!(f.leading_form(), f.graded_part(3));
        assert_eq!(NCPoly::zero(2).deg(), None);
        assert_eq!(f.to_string(), "3 + x1*x2 - 1/2*x2*x1^2");
    }

    #[test]
    fn compose_square_of_anticommutator() {
        // p = t^2, h = x1x2 + x2x1:
        // p(h) = x1x2x1x2 + x1x2^2x1 + x2x1^2x2 + x2x1x2x1
        let p = UniPoly::from_coeffs(vec![rint(0), rint(0), rint(1)]);
        let h = NCPoly::from_terms(
            2,
            vec![(Word(vec![0, 1]), rint(1)), (Word(vec![1, 0]), rint(1))],
        );
        let got = compose_uni(&p, &h);
        let expected = NCPoly::from_terms(
            2,
            vec![
                (Word(vec![0, 1, 0, 1]), rint(1)),
                (Word(vec![0, 1, 1, 0]), rint(1)),
                (Word(vec![1, 0, 0, 1]), rint(1)),
                (Word(vec![1, 0, 1, 0]), rint(1)),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn transpose_is_involutive_antiautomorphism() {
        let f = NCPoly::from_terms(
            2,
            vec![(Word(vec![0, 1]), rint(2)), (Word(vec![0]), rint(1))],
        );
        let g = NCPoly::from_terms(
            2,
            vec![(Word(vec![1, 1, 0]), rat(1, 3)), (Word::one(), rint(-1))],
        );
        assert_eq!(f.transpose().transpose(), f);
        assert_eq!((&f * &g).transpose(), &g.transpose() * &f.transpose());
    }

    #[test]
    fn scalar_evaluation() {
        let f = NCPoly::from_terms(
            2,
            vec![
                (Word(vec![0, 1]), rint(1)),
                (Word(vec![1, 0]), rint(-1)),
                (Word::one(), rint(5)),
            ],
        );
        // Commutative collapse kills the commutator part.
        assert_eq!(f.eval_scalar(&[rat(2, 3), rat(7, 5)]), rint(5));
    }

    #[test]
    fn division_exact_and_failing() {
        let g = NCPoly::from_terms(
            2,
            vec![(Word(vec![0, 1]), rint(1)), (Word::one(), rint(1))],
        );
        let h = NCPoly::from_terms(
            2,
            vec![(Word(vec![1, 0]), rint(1)), (Word::one(), rint(1))],
        );
        let f = &g * &h;
        assert_eq!(f.right_divide(&h), Some(g.clone()));
        assert_eq!(f.left_divide(&g), Some(h.clone()));
        assert_eq!(f.right_divide(&g), None);
        let x1 = x(1);
        assert_eq!((&f + &x1).right_divide(&h), None);
    }

    #[test]
    fn express_in_powers_roundtrip() {
        let h = NCPoly::from_terms(
            2,
            vec![(Word(vec![0, 1]), rint(1)), (Word(vec![1, 0]), rint(1))],
        );
        // f = 2 h^3 - h + 7
        let p = UniPoly::from_coeffs(vec![rint(7), rint(-1), rint(0), rint(2)]);
        let f = compose_uni(&p, &h);
        assert_eq!(express_in_powers(&f, &h), Some(p));
        let not_in = &f + &x(1);
        assert_eq!(express_in_powers(&not_in, &h), None);
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(NCPoly::zero(2).to_string(), "0");
        let f = &(-&x(1)) - &NCPoly::one(2);
        assert_eq!(f.to_string(), "-1 - x1");
        let g = NCPoly::from_terms(2, vec![(Word(vec![0]), rat(-1, 2))]);
        assert_eq!(g.to_string(), "-1/2*x1");
    }
}
