//! Exact factorization over the free algebra.
//!
//! A factorization `f = g h` with `deg g = k` forces the leading forms to
//! multiply, which pins `g`'s and `h`'s top components up to scalar through a
//! rank-one condition on a flattening of the top coefficients. Lower
//! components are then recovered degree by degree: at each layer the newest
//! unknown components enter linearly with rational coefficient matrices and
//! everything previously parametrized feeds the right-hand side. Leftover
//! equations become polynomial constraints on the parameters, which the
//! Groebner solver settles. Every candidate pair is re-verified by an exact
//! product before it is reported, and negative answers carry a flag saying
//! whether the search was actually conclusive.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::cpoly::CPoly;
use crate::exactla::{solve, RatMatrix};
use crate::gb::{gb_solve, Budget, BudgetExceeded};
use crate::ncpoly::NCPoly;
use crate::rat::{nth_root_exact, Rat};
use crate::word::Word;

/// Widest coefficient layer the dense peeling solver will handle.
const MAX_LAYER_WIDTH: usize = 4096;

/// `f = unit * factors[0] * ... * factors[m-1]`, each factor irreducible with
/// its deg-lex leading coefficient equal to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<NCPoly>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self, d: u32) -> NCPoly {
        let mut acc = NCPoly::constant(d, self.unit.clone());
        for g in &self.factors {
            acc = &acc * g;
        }
        acc
    }
}

/// Position of a word inside the deg-lex enumeration of its length class:
/// fixed-length words sort lexicographically, i.e. as base-`d` numerals.
fn word_rank(w: &Word, d: u32) -> usize {
    let mut r = 0usize;
    for &letter in &w.0 {
        r = r * d as usize + letter as usize;
    }
    r
}

/// Splits a homogeneous polynomial as `g * h` with `deg g = k`, when its
/// coefficient flattening at position `k` has rank one. The left factor is
/// normalized to coefficient one on its deg-lex least word; `None` means the
/// rank is not one, so no such split exists at all.
pub fn rank1_split(f: &NCPoly, k: usize) -> Option<(NCPoly, NCPoly)> {
    let n = f.deg()?;
    assert!(f.is_homogeneous(), "rank-one splitting needs a homogeneous input");
    if k == 0 || k >= n {
        return None;
    }
    let d = f.nvars();
    // Group coefficients into rows by length-k prefix.
    let mut rows: std::collections::BTreeMap<Word, std::collections::BTreeMap<Word, Rat>> =
        Default::default();
    for (w, c) in f.terms() {
        let u = Word(w.0[..k].to_vec());
        let v = Word(w.0[k..].to_vec());
        rows.entry(u).or_default().insert(v, c.clone());
    }
    let (_, row0) = rows.iter().next().unwrap();
    let row0 = row0.clone();
    let (c0, s) = row0.iter().next().unwrap();
    let (c0, s) = (c0.clone(), s.clone());
    let mut g = NCPoly::zero(d);
    for (u, row) in &rows {
        // Every row must be a multiple of the reference row.
        let ratio = match row.get(&c0) {
            Some(x) => x / &s,
            None => return None,
        };
        if row.len() != row0.len() {
            return None;
        }
        for (v, x) in row {
            if row0.get(v).map(|y| y * &ratio) != Some(x.clone()) {
                return None;
            }
        }
        g.add_term(u.clone(), ratio);
    }
    let mut h = NCPoly::zero(d);
    for (v, x) in &row0 {
        h.add_term(v.clone(), x.clone());
    }
    Some((g, h))
}

/// Result of searching for factorizations `f = g h` with `deg g = k`.
pub struct SplitOutcome {
    /// Verified pairs, deduplicated and sorted.
    pub pairs: Vec<(NCPoly, NCPoly)>,
    /// Meaningful when `pairs` is empty: `true` means the emptiness is
    /// proven, `false` means the constraint search was cut short.
    pub conclusive: bool,
}

/// Row-reduces `e y = rhs` where the right-hand side carries parameter
/// polynomials. Free columns become fresh parameters; returns the expression
/// for every unknown plus the constraints from vanished rows.
fn solve_layer(
    mut e: Vec<Vec<Rat>>,
    mut rhs: Vec<CPoly>,
    nparams: &mut u32,
) -> (Vec<CPoly>, Vec<CPoly>) {
    let rows = e.len();
    let cols = e.first().map_or(0, Vec::len);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pr = 0usize;
    for pc in 0..cols {
        let Some(sel) = (pr..rows).find(|&i| !e[i][pc].is_zero()) else {
            continue;
        };
        e.swap(pr, sel);
        rhs.swap(pr, sel);
        let inv = e[pr][pc].recip();
        for c in 0..cols {
            e[pr][c] = &e[pr][c] * &inv;
        }
        rhs[pr] = rhs[pr].scale(&inv);
        for i in 0..rows {
            if i == pr || e[i][pc].is_zero() {
                continue;
            }
            let f = e[i][pc].clone();
            for c in 0..cols {
                let v = &e[i][c] - &(&e[pr][c] * &f);
                e[i][c] = v;
            }
            rhs[i] = rhs[i].sub(&rhs[pr].scale(&f));
        }
        pivots.push((pr, pc));
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut assign: Vec<CPoly> = vec![CPoly::zero(); cols];
    for c in 0..cols {
        if !pivot_cols.contains(&c) {
            assign[c] = CPoly::var(*nparams);
            *nparams += 1;
        }
    }
    for &(r, c) in &pivots {
        let mut expr = rhs[r].clone();
        for fc in 0..cols {
            if !pivot_cols.contains(&fc) && !e[r][fc].is_zero() {
                expr = expr.sub(&assign[fc].scale(&e[r][fc]));
            }
        }
        assign[c] = expr;
    }
    let constraints = rhs[pr..].iter().filter(|p| !p.is_zero()).cloned().collect();
    (assign, constraints)
}

/// All factorizations `f = g h` with `deg g = k`, up to the solver's reach.
pub fn factor_at_split(
    f: &NCPoly,
    k: usize,
    budget: &mut Budget,
) -> Result<SplitOutcome, BudgetExceeded> {
    let n = f.deg().expect("factoring the zero polynomial");
    assert!(n >= 2 && k >= 1 && k < n, "split position out of range");
    let d = f.nvars();
    let empty_certain = SplitOutcome {
        pairs: Vec::new(),
        conclusive: true,
    };
    let Some((gtop, htop)) = rank1_split(&f.leading_form(), k) else {
        return Ok(empty_certain);
    };
    // Coefficient tables for each homogeneous component, indexed by word
    // rank; entries are polynomials in the parameters introduced so far.
    let table = |p: &NCPoly, len: usize| -> Vec<CPoly> {
        let mut t = vec![CPoly::zero(); (d as usize).pow(len as u32)];
        for (w, c) in p.terms() {
            t[word_rank(w, d)] = CPoly::constant(c.clone());
        }
        t
    };
    let mut gcomp: Vec<Option<Vec<CPoly>>> = vec![None; k + 1];
    let mut hcomp: Vec<Option<Vec<CPoly>>> = vec![None; n - k + 1];
    gcomp[k] = Some(table(&gtop, k));
    hcomp[n - k] = Some(table(&htop, n - k));
    let mut nparams: u32 = 0;
    let mut constraints: Vec<CPoly> = Vec::new();
    for m in (0..n).rev() {
        let words = Word::all_of_len(d, m);
        if words.len() > MAX_LAYER_WIDTH {
            return Err(BudgetExceeded(format!(
                "peeling a layer with {} words",
                words.len()
            )));
        }
        budget.spend(words.len() as u64, "peeling factor layers")?;
        let g_new = (m + k >= n).then(|| m + k - n);
        let h_new = (m >= k).then(|| m - k);
        let gw = g_new.map_or(0, |i| (d as usize).pow(i as u32));
        let hw = h_new.map_or(0, |j| (d as usize).pow(j as u32));
        let mut e = vec![vec![Rat::zero(); gw + hw]; words.len()];
        let mut rhs: Vec<CPoly> = Vec::with_capacity(words.len());
        for (r, w) in words.iter().enumerate() {
            // New-unknown columns: the prefix-suffix split is unique once the
            // prefix length is fixed.
            if let Some(i) = g_new {
                let u = Word(w.0[..i].to_vec());
                let v = Word(w.0[i..].to_vec());
                e[r][word_rank(&u, d)] = htop.coeff(&v);
            }
            if h_new.is_some() {
                let u = Word(w.0[..k].to_vec());
                let v = Word(w.0[k..].to_vec());
                e[r][gw + word_rank(&v, d)] = gtop.coeff(&u);
            }
            // Right-hand side: this degree of f minus the already-known
            // cross terms, which are quadratic in earlier parameters.
            let mut acc = CPoly::constant(f.coeff(w));
            for i in 0..=k.min(m) {
                let j = m - i;
                if j > n - k {
                    continue;
                }
                if Some(i) == g_new && j == n - k {
                    continue;
                }
                if i == k && Some(j) == h_new {
                    continue;
                }
                let gt = gcomp[i].as_ref().expect("filled by an earlier layer");
                let ht = hcomp[j].as_ref().expect("filled by an earlier layer");
                let u = Word(w.0[..i].to_vec());
                let v = Word(w.0[i..].to_vec());
                let prod = gt[word_rank(&u, d)].mul(&ht[word_rank(&v, d)]);
                acc = acc.sub(&prod);
            }
            rhs.push(acc);
        }
        let (assign, layer_constraints) = solve_layer(e, rhs, &mut nparams);
        for c in layer_constraints {
            if let Some(v) = c.as_constant() {
                if !v.is_zero() {
                    return Ok(empty_certain);
                }
            } else {
                constraints.push(c);
            }
        }
        if let Some(i) = g_new {
            gcomp[i] = Some(assign[..gw].to_vec());
        }
        if let Some(j) = h_new {
            hcomp[j] = Some(assign[gw..].to_vec());
        }
    }
    // Settle the parameter constraints.
    let (points, conclusive): (Vec<Vec<Rat>>, bool) = if nparams == 0 {
        (vec![Vec::new()], true)
    } else if constraints.is_empty() {
        // A parameter family; one representative suffices.
        (vec![vec![Rat::zero(); nparams as usize]], true)
    } else if let Some(linear) = constraints
        .iter()
        .map(CPoly::as_linear)
        .collect::<Option<Vec<_>>>()
    {
        let a = RatMatrix::from_fn(linear.len(), nparams as usize, |i, j| {
            linear[i]
                .0
                .iter()
                .find(|&&(v, _)| v as usize == j)
                .map_or_else(Rat::zero, |(_, c)| c.clone())
        });
        let b: Vec<Rat> = linear.iter().map(|(_, cst)| -cst.clone()).collect();
        match solve(&a, &b) {
            None => (Vec::new(), true),
            Some(sol) => (vec![sol.particular], true),
        }
    } else {
        let sol = gb_solve(&constraints, nparams, budget)?;
        let conclusive = sol.exhaustive;
        (sol.points, conclusive)
    };
    let instantiate = |tables: &[Option<Vec<CPoly>>], top: usize, pt: &[Rat]| -> NCPoly {
        let mut out = NCPoly::zero(d);
        for (deg, tab) in tables.iter().enumerate().take(top + 1) {
            let tab = tab.as_ref().expect("all components filled");
            let words = Word::all_of_len(d, deg);
            for (rank, cp) in tab.iter().enumerate() {
                out.add_term(words[rank].clone(), cp.eval(pt));
            }
        }
        out
    };
    let mut set: BTreeSet<(NCPoly, NCPoly)> = BTreeSet::new();
    for pt in &points {
        let g = instantiate(&gcomp, k, pt);
        let h = instantiate(&hcomp, n - k, pt);
        assert_eq!(&g * &h, *f, "candidate factor pair failed verification");
        set.insert((g, h));
    }
    let any = !set.is_empty();
    Ok(SplitOutcome {
        pairs: set.into_iter().collect(),
        conclusive: conclusive || any,
    })
}

/// Verdict on whether a polynomial of degree at least one factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A verified nontrivial factorization.
    Reducible { left: NCPoly, right: NCPoly },
}

/// Decides irreducibility with certificates. A `Reducible` answer carries a
/// verified pair; `Irreducible` is only returned when every split was
/// conclusively ruled out, and anything less becomes a budget error.
pub fn irreducibility(f: &NCPoly, budget: &mut Budget) -> Result<Irreducibility, BudgetExceeded> {
    let n = f.deg().expect("zero polynomial");
    assert!(n >= 1, "units are neither irreducible nor reducible");
    if n == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let mut all_conclusive = true;
    for k in 1..n {
        let outcome = factor_at_split(f, k, budget)?;
        if let Some((g, h)) = outcome.pairs.into_iter().next() {
            return Ok(Irreducibility::Reducible { left: g, right: h });
        }
        all_conclusive &= outcome.conclusive;
    }
    if all_conclusive {
        Ok(Irreducibility::Irreducible)
    } else {
        Err(BudgetExceeded(
            "ruling out every factorization split".into(),
        ))
    }
}

/// Complete factorization into irreducibles, left factors of minimal degree
/// first. The minimal-degree left factor is automatically irreducible: any
/// proper left divisor of it would give a factorization at a smaller split,
/// which was conclusively excluded.
pub fn factor(f: &NCPoly, budget: &mut Budget) -> Result<Factorization, BudgetExceeded> {
    let d = f.nvars();
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let unit = f.leading_coeff().unwrap().clone();
    let mut factors = Vec::new();
    let mut cur = f.scale(&unit.recip());
    'outer: while cur.deg().unwrap_or(0) >= 1 {
        let n = cur.deg().unwrap();
        if n == 1 {
            factors.push(cur);
            break;
        }
        for k in 1..n {
            let outcome = factor_at_split(&cur, k, budget)?;
            if let Some((g, h)) = outcome.pairs.into_iter().next() {
                // Renormalize so the extracted factor is leading-monic.
                let c = g.leading_coeff().unwrap().clone();
                factors.push(g.scale(&c.recip()));
                cur = h.scale(&c);
                continue 'outer;
            }
            if !outcome.conclusive {
                return Err(BudgetExceeded(format!(
                    "ruling out factorizations with a degree-{k} left factor"
                )));
            }
        }
        // No split works: irreducible.
        factors.push(cur);
        break;
    }
    let result = Factorization { unit, factors };
    debug_assert_eq!(result.product(d), *f);
    Ok(result)
}

/// Maximal exact power decomposition of a homogeneous polynomial: `(g, e)`
/// with `f = g^e` and `e` as large as possible (`e = 1` when `f` is not a
/// proper power).
pub fn power_decompose_homogeneous(f: &NCPoly) -> (NCPoly, usize) {
    assert!(
        f.is_homogeneous() && !f.is_zero(),
        "power decomposition expects a nonzero homogeneous polynomial"
    );
    let n = f.deg().unwrap();
    for e in (2..=n).rev() {
        if n % e != 0 {
            continue;
        }
        let k = n / e;
        let Some((a, _)) = rank1_split(f, k) else {
            continue;
        };
        let ae = a.pow(e);
        let ratio = f.leading_coeff().unwrap() / ae.leading_coeff().unwrap();
        if &ae.scale(&ratio) != f {
            continue;
        }
        if let Some(c) = nth_root_exact(&ratio, e as u32) {
            let g = a.scale(&c);
            debug_assert_eq!(g.pow(e), *f);
            return (g, e);
        }
    }
    (f.clone(), 1)
}
