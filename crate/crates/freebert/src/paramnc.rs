//! Noncommutative polynomials whose coefficients live in Q[t].
//!
//! The scalar `t` is central: it commutes with every letter, so coefficients
//! multiply as univariate polynomials while words concatenate. This is the
//! natural home for pencils like `h - t` and for intertwiners discovered as
//! kernels of parametric linear systems.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ncpoly::NCPoly;
use crate::rat::Rat;
use crate::unipoly::UniPoly;
use crate::word::Word;

/// An element of Q[t]<x1..xd> with `t` central.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamNCPoly {
    d: u32,
    terms: BTreeMap<Word, UniPoly>,
}

impl ParamNCPoly {
    pub fn zero(d: u32) -> Self {
        ParamNCPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    /// Embeds a plain polynomial as one with constant coefficients.
    pub fn from_nc(f: &NCPoly) -> Self {
        let mut p = ParamNCPoly::zero(f.nvars());
        for (w, c) in f.terms() {
            p.terms.insert(w.clone(), UniPoly::constant(c.clone()));
        }
        p
    }

    /// The central scalar `t` (as `t * empty-word`).
    pub fn t(d: u32) -> Self {
        let mut p = ParamNCPoly::zero(d);
        p.terms.insert(Word::one(), UniPoly::t());
        p
    }

    pub fn nvars(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: UniPoly) {
        assert!(w.min_alphabet() <= self.d);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(UniPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Word) -> UniPoly {
        self.terms.get(w).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &UniPoly)> {
        self.terms.iter()
    }

    /// Largest power of `t` with a nonzero coefficient anywhere.
    pub fn t_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(UniPoly::deg).max()
    }

    /// The plain polynomial multiplying `t^i`.
    pub fn coeff_of_t(&self, i: usize) -> NCPoly {
        let mut out = NCPoly::zero(self.d);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.coeff(i));
        }
        out
    }

    pub fn add(&self, rhs: &ParamNCPoly) -> ParamNCPoly {
        assert_eq!(self.d, rhs.d);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ParamNCPoly) -> ParamNCPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ParamNCPoly {
        ParamNCPoly {
            d: self.d,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &ParamNCPoly) -> ParamNCPoly {
        assert_eq!(self.d, rhs.d);
        let mut out = ParamNCPoly::zero(self.d);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Substitutes a rational value for `t`.
    pub fn eval_t(&self, x: &Rat) -> NCPoly {
        let mut out = NCPoly::zero(self.d);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.eval(x));
        }
        out
    }

    /// Substitutes `h` for `t` with the powers of `h` on the right:
    /// `sum_i A_i t^i` becomes `sum_i A_i h^i`.
    pub fn t_substitute_right(&self, h: &NCPoly) -> NCPoly {
        assert_eq!(self.d, h.nvars());
        let top = match self.t_degree() {
            None => return NCPoly::zero(self.d),
            Some(k) => k,
        };
        let mut acc = self.coeff_of_t(top);
        for i in (0..top).rev() {
            acc = &(&acc * h) + &self.coeff_of_t(i);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn central_scalar_multiplication() {
        // (x1 + t)(x2 - t) = x1x2 + t(x2 - x1) - t^2.
        let x1 = ParamNCPoly::from_nc(&NCPoly::var(2, 1));
        let x2 = ParamNCPoly::from_nc(&NCPoly::var(2, 2));
        let t = ParamNCPoly::t(2);
        let prod = x1.add(&t).mul(&x2.sub(&t));
        assert_eq!(prod.coeff_of_t(0), &NCPoly::var(2, 1) * &NCPoly::var(2, 2));
        assert_eq!(
            prod.coeff_of_t(1),
            &NCPoly::var(2, 2) - &NCPoly::var(2, 1)
        );
        assert_eq!(
            prod.coeff_of_t(2),
            NCPoly::constant(2, rint(-1))
        );
        assert_eq!(prod.t_degree(), Some(2));
    }

    #[test]
    fn substitution_keeps_coefficients_on_the_left() {
        // A = x1 * t substituted at t -> x2 gives x1*x2, not x2*x1.
        let mut a = ParamNCPoly::zero(2);
        a.add_term(Word(vec![0]), UniPoly::t());
        let h = NCPoly::var(2, 2);
        let got = a.t_substitute_right(&h);
        assert_eq!(got, &NCPoly::var(2, 1) * &NCPoly::var(2, 2));
    }

    #[test]
    fn eval_matches_substitution_of_constants() {
        let mut a = ParamNCPoly::zero(2);
        a.add_term(Word(vec![0]), UniPoly::from_coeffs(vec![rint(1), rint(2)]));
        a.add_term(Word::one(), UniPoly::t());
        let at2 = a.eval_t(&rint(2));
        // (1 + 2t) x1 + t at t=2: 5 x1 + 2.
        let mut expected = NCPoly::zero(2);
        expected.add_term(Word(vec![0]), rint(5));
        expected.add_term(Word::one(), rint(2));
        assert_eq!(at2, expected);
        // Right-substitution of a constant agrees with eval.
        let h = NCPoly::constant(2, rint(2));
        assert_eq!(a.t_substitute_right(&h), expected);
    }
}
