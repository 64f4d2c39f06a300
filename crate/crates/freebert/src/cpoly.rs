//! Sparse commutative polynomials over Q, ordered by graded lexicographic
//! order. These carry the coefficient constraints that arise while peeling a
//! candidate factorization layer by layer, and feed the Groebner-basis solver.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{fmt_rat, Rat};

/// A monomial: sorted `(variable, exponent)` pairs, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Vec<(u32, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        for pair in pairs.windows(2) {
            assert!(pair[0].0 != pair[1].0, "duplicate variable in monomial");
        }
        Mono(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_deg(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    /// `Some((v, e))` when the monomial is a pure power of one variable.
    pub fn pure_power(&self) -> Option<(u32, u32)> {
        match self.0.as_slice() {
            [(v, e)] => Some((*v, *e)),
            _ => None,
        }
    }

    pub fn mul(&self, rhs: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < rhs.0.len() {
            match (self.0.get(i), rhs.0.get(j)) {
                (Some(&(v1, e1)), Some(&(v2, e2))) => {
                    if v1 == v2 {
                        out.push((v1, e1 + e2));
                        i += 1;
                        j += 1;
                    } else if v1 < v2 {
                        out.push((v1, e1));
                        i += 1;
                    } else {
                        out.push((v2, e2));
                        j += 1;
                    }
                }
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Mono(out)
    }

    pub fn divides(&self, rhs: &Mono) -> bool {
        self.0.iter().all(|&(v, e)| rhs.exponent(v) >= e)
    }

    /// `rhs / self` when `self` divides `rhs`.
    pub fn div_into(&self, rhs: &Mono) -> Option<Mono> {
        if !self.divides(rhs) {
            return None;
        }
        let mut out = Vec::new();
        for &(v, e) in &rhs.0 {
            let q = e - self.exponent(v);
            if q > 0 {
                out.push((v, q));
            }
        }
        Some(Mono(out))
    }

    pub fn lcm(&self, rhs: &Mono) -> Mono {
        let mut vars: Vec<u32> = self.vars().chain(rhs.vars()).collect();
        vars.sort();
        vars.dedup();
        Mono(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).max(rhs.exponent(v))))
                .collect(),
        )
    }

    pub fn coprime(&self, rhs: &Mono) -> bool {
        self.vars().all(|v| rhs.exponent(v) == 0)
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, then lex with the smallest
    /// variable index most significant.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_deg().cmp(&other.total_deg()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                // The side that still has a positive exponent on an earlier
                // variable is lex-greater.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v1, e1)), Some(&(v2, e2))) => {
                    if v1 < v2 {
                        return Ordering::Greater;
                    }
                    if v2 < v1 {
                        return Ordering::Less;
                    }
                    match e1.cmp(&e2) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "a{}", v + 1)?;
            } else {
                write!(f, "a{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Sparse commutative polynomial over Q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl Ord for CPoly {
    /// Compares term lists leading-monomial first, so sorting a slice of
    /// polynomials ascending puts smaller leading monomials before larger
    /// ones (with ties broken by the next term down, and a polynomial that
    /// is a strict "prefix" of another counting as smaller).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if ord != std::cmp::Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for CPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = CPoly::zero();
        p.add_term(Mono::one(), c);
        p
    }

    pub fn one() -> Self {
        CPoly::constant(Rat::one())
    }

    pub fn var(v: u32) -> Self {
        let mut p = CPoly::zero();
        p.add_term(Mono::var(v), Rat::one());
        p
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_deg(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_deg).max()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> CPoly {
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0 * c))
                .collect(),
        }
    }

    pub fn make_monic(&self) -> CPoly {
        match self.leading() {
            None => CPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &(v, e) in &m.0 {
                let x = &point[v as usize];
                for _ in 0..e {
                    prod *= x;
                }
            }
            acc += prod;
        }
        acc
    }

    /// Replaces one variable by a rational constant.
    pub fn substitute(&self, var: u32, value: &Rat) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
            } else {
                let rest = Mono(
                    m.0.iter()
                        .filter(|&&(v, _)| v != var)
                        .cloned()
                        .collect(),
                );
                let mut factor = c.clone();
                for _ in 0..e {
                    factor *= value;
                }
                out.add_term(rest, factor);
            }
        }
        out
    }

    /// When every term has degree at most one: `(coefficients, constant)`.
    pub fn as_linear(&self) -> Option<(Vec<(u32, Rat)>, Rat)> {
        let mut coeffs = Vec::new();
        let mut cst = Rat::zero();
        for (m, c) in &self.terms {
            match m.total_deg() {
                0 => cst = c.clone(),
                1 => coeffs.push((m.pure_power().unwrap().0, c.clone())),
                _ => return None,
            }
        }
        Some((coeffs, cst))
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.terms.keys().flat_map(|m| m.vars().collect::<Vec<_>>()).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rat(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rat(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn graded_lex_order() {
        let one = Mono::one();
        let a = Mono::var(0);
        let b = Mono::var(1);
        let a2 = a.mul(&a);
        let ab = a.mul(&b);
        let b2 = b.mul(&b);
        // a1^2 > a1*a2 > a2^2 > a1 > a2 > 1
        assert!(a2 > ab && ab > b2 && b2 > a && a > b && b > one);
    }

    #[test]
    fn monomial_division_and_lcm() {
        let m = Mono::from_pairs(vec![(0, 2), (1, 1)]);
        let n = Mono::from_pairs(vec![(0, 1)]);
        assert!(n.divides(&m));
        assert_eq!(n.div_into(&m), Some(Mono::from_pairs(vec![(0, 1), (1, 1)])));
        assert!(!m.divides(&n));
        let l = m.lcm(&Mono::from_pairs(vec![(1, 3)]));
        assert_eq!(l, Mono::from_pairs(vec![(0, 2), (1, 3)]));
        assert!(Mono::var(0).coprime(&Mono::var(1)));
        assert!(!m.coprime(&n));
    }

    #[test]
    fn arithmetic_and_eval() {
        // (a1 + a2)^2 = a1^2 + 2 a1 a2 + a2^2
        let s = CPoly::var(0).add(&CPoly::var(1));
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.eval(&[rint(2), rint(3)]), rint(25));
        assert_eq!(sq.total_deg(), Some(2));
        let z = sq.sub(&sq);
        assert!(z.is_zero());
    }

    #[test]
    fn substitution() {
        // a1^2 a2 + a1 at a1 = 1/2: a2/4 + 1/2.
        let p = CPoly::var(0)
            .mul(&CPoly::var(0))
            .mul(&CPoly::var(1))
            .add(&CPoly::var(0));
        let q = p.substitute(0, &rat(1, 2));
        let mut expected = CPoly::zero();
        expected.add_term(Mono::var(1), rat(1, 4));
        expected.add_term(Mono::one(), rat(1, 2));
        assert_eq!(q, expected);
    }

    #[test]
    fn linear_detection() {
        let lin = CPoly::var(0).scale(&rint(2)).add(&CPoly::constant(rint(-3)));
        let (coeffs, cst) = lin.as_linear().unwrap();
        assert_eq!(coeffs, vec![(0, rint(2))]);
        assert_eq!(cst, rint(-3));
        assert!(CPoly::var(0).mul(&CPoly::var(0)).as_linear().is_none());
        assert_eq!(CPoly::constant(rint(4)).as_constant(), Some(rint(4)));
        assert_eq!(lin.as_constant(), None);
    }

    #[test]
    fn display_reads_naturally() {
        let p = CPoly::var(0)
            .mul(&CPoly::var(0))
            .add(&CPoly::var(1).scale(&rat(-1, 2)));
        assert_eq!(p.to_string(), "-1/2*a2 + a1^2");
    }
}
