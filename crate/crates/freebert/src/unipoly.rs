//! Univariate polynomials over Q, plus the rational functions Q(t).
//!
//! Everything here is exact. The real-root machinery (Sturm chains, interval
//! isolation, complete rational-root extraction) backs both the solver for
//! zero-dimensional polynomial systems and the univariate sign checks used by
//! the convexity classifier.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{fmt_rat, Rat};

/// A polynomial in one variable `t`, coefficients ascending, trailing
/// coefficient nonzero (the zero polynomial has no coefficients at all).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The variable `t` itself.
    pub fn t() -> Self {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::from_coeffs(v)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero if absent).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, One::is_one)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn make_monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `(q, r)` with `self = q*g + r`, `deg r < deg g`.
    pub fn divrem(&self, g: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let gd = g.deg().unwrap();
        let glc = g.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(gd)];
        while let Some(rd) = rem.deg() {
            if rd < gd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &glc;
            let shift = rd - gd;
            q[shift] = c.clone();
            rem = &rem - &(&g.scale(&c) * &UniPoly::monomial(Rat::one(), shift));
        }
        (UniPoly::from_coeffs(q), rem)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, g: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(g);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Quotient by `gcd(p, p')`: same roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides")
    }

    /// Composition `self(inner(t))`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Sign of `self(t)` as `t -> +inf`, in `{-1, 0, 1}`.
    pub fn sign_at_pos_inf(&self) -> i32 {
        match self.leading_coeff() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Sign of `self(t)` as `t -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i32 {
        let s = self.sign_at_pos_inf();
        match self.deg() {
            Some(n) if n % 2 == 1 => -s,
            _ => s,
        }
    }

    /// An explicit `B > 0` with every real root in `(-B, B)`.
    pub fn cauchy_root_bound(&self) -> Rat {
        let lc = match self.leading_coeff() {
            None => return Rat::one(),
            Some(c) => c.clone(),
        };
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / &lc).abs();
            if q > m {
                m = q;
            }
        }
        m + Rat::one()
    }

    /// All rational roots with multiplicities, ascending.
    ///
    /// Complete: clears denominators, factors out the root at zero, then maps
    /// `x = y / c_n` to reduce to integer roots of a monic integer polynomial,
    /// which are pinned down by Sturm isolation plus exact candidate tests.
    /// No divisor enumeration, so huge constant terms cost nothing.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        assert!(!self.is_zero(), "every rational is a root of zero");
        if self.is_constant() {
            return Vec::new();
        }
        let mut roots: Vec<Rat> = Vec::new();
        let mut body = self.clone();
        // Root at zero.
        let mut zero_mult = 0usize;
        while body.coeff(0).is_zero() && !body.is_zero() {
            body = body.exact_div(&UniPoly::t()).expect("t divides");
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push(Rat::zero());
        }
        if !body.is_constant() {
            // Clear denominators to integer coefficients.
            let mut lcm = BigInt::one();
            for c in body.coeffs() {
                lcm = num_integer::lcm(lcm, c.denom().clone());
            }
            let int_coeffs: Vec<BigInt> = body
                .coeffs()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect();
            let n = int_coeffs.len() - 1;
            let cn = int_coeffs[n].clone();
            // Monic transform: q(y) = c_n^(n-1) * p(y / c_n) has integer
            // coefficients q_k = p_k * c_n^(n-1-k); roots y = c_n * x.
            let mut monic = Vec::with_capacity(n + 1);
            for (k, c) in int_coeffs.iter().enumerate() {
                let val = if k < n {
                    c * cn.pow((n - 1 - k) as u32)
                } else {
                    BigInt::one()
                };
                monic.push(Rat::from_integer(val));
            }
            let q = UniPoly::from_coeffs(monic);
            for y in integer_roots_of_monic(&q) {
                let x = Rat::new(y, cn.clone());
                if body.eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
        roots.sort();
        roots.dedup();
        let mut out = Vec::with_capacity(roots.len());
        for r in roots {
            let lin = UniPoly::from_coeffs(vec![-r.clone(), Rat::one()]);
            let mut mult = 0usize;
            let mut rem = self.clone();
            while let Some(qt) = rem.exact_div(&lin) {
                mult += 1;
                rem = qt;
            }
            debug_assert!(mult > 0);
            out.push((r, mult));
        }
        out
    }
}

/// Integer roots of a monic polynomial with integer coefficients.
fn integer_roots_of_monic(q: &UniPoly) -> Vec<BigInt> {
    let sf = q.squarefree_part();
    if sf.is_constant() {
        return Vec::new();
    }
    let bound = sf.cauchy_root_bound();
    let chain = sturm_chain(&sf);
    let mut found = Vec::new();
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    for loc in isolate_in(&sf, &chain, &(-bound.clone()), &bound) {
        let candidate = match loc {
            RootLoc::Exact(r) => Some(r),
            RootLoc::Open(mut lo, mut hi) => {
                let mut exact = None;
                while &hi - &lo >= half {
                    let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                    if sf.eval(&mid).is_zero() {
                        exact = Some(mid);
                        break;
                    }
                    if sturm_count(&chain, &lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                exact.or_else(|| {
                    // Width below one half: at most one integer strictly
                    // inside, and it can only be the first integer above lo.
                    let k = lo.floor() + Rat::one();
                    (k < hi).then_some(k)
                })
            }
        };
        if let Some(c) = candidate {
            if c.is_integer() && sf.eval(&c).is_zero() {
                found.push(c.to_integer());
            }
        }
    }
    found
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::from_coeffs(v)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers in the variable `t`: `t^3 - 2*t + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", fmt_rat(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", fmt_rat(&a))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sturm chain of `p`: remainders with flipped signs, ending before zero.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].divrem(&chain[n - 1]).1;
        chain.push(-r);
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn variations_at(chain: &[UniPoly], x: &Rat) -> usize {
    variations(chain.iter().map(|p| sign_of(&p.eval(x))))
}

/// Number of distinct real roots in the half-open `(a, b]`, for the Sturm
/// chain of a squarefree polynomial.
pub fn sturm_count(chain: &[UniPoly], a: &Rat, b: &Rat) -> usize {
    debug_assert!(a <= b);
    variations_at(chain, a) - variations_at(chain, b)
}

/// Location of one real root of a squarefree polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootLoc {
    /// The root is this rational number exactly.
    Exact(Rat),
    /// Exactly one root lies strictly inside this interval; the right
    /// endpoint is never a root.
    Open(Rat, Rat),
}

/// Locates every root of squarefree `p` in `(a, b]`, ascending and disjoint.
pub fn isolate_in(p: &UniPoly, chain: &[UniPoly], a: &Rat, b: &Rat) -> Vec<RootLoc> {
    let mut out = Vec::new();
    if a >= b {
        return out;
    }
    let mut stack = vec![(a.clone(), b.clone(), sturm_count(chain, a, b))];
    // Depth-first, left side pushed last so output comes out ascending.
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => {
                if p.eval(&hi).is_zero() {
                    out.push(RootLoc::Exact(hi));
                } else {
                    out.push(RootLoc::Open(lo, hi));
                }
            }
            _ => {
                let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                let left = sturm_count(chain, &lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out
}

/// Full real-root isolation of squarefree `p` across the whole line.
pub fn isolate_all(p: &UniPoly) -> Vec<RootLoc> {
    if p.is_constant() {
        return Vec::new();
    }
    let bound = p.cauchy_root_bound();
    let chain = sturm_chain(p);
    isolate_in(p, &chain, &-bound.clone(), &bound)
}

/// Base-`inner` digit expansion: `outer` with `target = outer(inner(t))`.
///
/// Repeated euclidean division by `inner` yields unique digits of degree
/// below `deg inner`; the composition exists exactly when every digit is
/// constant.
pub fn decompose_through(target: &UniPoly, inner: &UniPoly) -> Option<UniPoly> {
    let k = inner.deg()?;
    if k == 0 {
        return None;
    }
    let mut digits = Vec::new();
    let mut cur = target.clone();
    while !cur.is_zero() {
        let (q, r) = cur.divrem(inner);
        if !r.is_constant() {
            return None;
        }
        digits.push(r.coeff(0));
        cur = q;
    }
    let outer = UniPoly::from_coeffs(digits);
    debug_assert_eq!(outer.compose(inner), *target);
    Some(outer)
}

/// Writes `p = q(t^2 + c*t)` with the inner quadratic monic and vanishing at
/// zero, when such a regrouping exists. The inner polynomial is forced: its
/// linear coefficient is read off the top two coefficients of `p`.
pub fn decompose_through_quadratic(p: &UniPoly) -> Option<(UniPoly, UniPoly)> {
    let n = p.deg()?;
    if n < 2 || n % 2 != 0 {
        return None;
    }
    let m = n / 2;
    // p = q_m (t^2 + c t)^m + lower: coefficient of t^(2m-1) is q_m * m * c.
    let qm = p.coeff(n);
    let c = p.coeff(n - 1) / (&qm * Rat::from_integer(BigInt::from(m)));
    let inner = UniPoly::from_coeffs(vec![Rat::zero(), c, Rat::one()]);
    let outer = decompose_through(p, &inner)?;
    Some((outer, inner))
}

/// A rational function over Q(t), kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    pub fn from_poly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(UniPoly::one())
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RatFun { num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        self.num = self.num.exact_div(&g).expect("gcd divides");
        self.den = self.den.exact_div(&g).expect("gcd divides");
        let lc = self.den.leading_coeff().unwrap().recip();
        self.num = self.num.scale(&lc);
        self.den = self.den.scale(&lc);
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// The underlying polynomial when the denominator is one.
    pub fn to_poly(&self) -> Option<&UniPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "division by zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
