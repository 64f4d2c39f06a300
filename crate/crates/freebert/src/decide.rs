//! Decision procedures driven by word-indexed exact linear algebra:
//! centralizer slices, composite detection with certified decompositions,
//! shifted-factorization sampling reports, stable association of
//! irreducibles, and intertwiner spaces.

use crate::exactla;
use crate::factor::{self, Irreducibility};
use crate::gb::{Budget, BudgetExceeded};
use crate::ncpoly::{compose_uni, express_in_powers, NCPoly};
use crate::rat::Rat;
use crate::sample;
use crate::unipoly::UniPoly;
use crate::word::Word;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Solves `sum_w c_w * col(w) = 0` over unknown coefficients indexed by
/// `unknowns` and returns the kernel as polynomials, echelonized so that each
/// basis element has a distinct deg-lex leading word with coefficient one and
/// that word appears in no other element. Sorted by leading word ascending.
fn echelon_kernel(d: u32, unknowns: &[Word], col: impl Fn(&Word) -> NCPoly) -> Vec<NCPoly> {
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut row_ix: BTreeMap<Word, usize> = BTreeMap::new();
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    for (j, w) in unknowns.iter().enumerate() {
        for (sw, c) in col(w).terms() {
            let next = row_ix.len();
            let i = *row_ix.entry(sw.clone()).or_insert(next);
            if i == rows.len() {
                rows.push(Vec::new());
            }
            rows[i].push((j, c.clone()));
        }
    }
    let ker = exactla::kernel_from_sparse_rows(&rows, unknowns.len());
    if ker.is_empty() {
        return Vec::new();
    }
    // Re-echelonize the (small) kernel basis with coordinates taken in
    // descending deg-lex order, so pivots become leading words.
    let m = unknowns.len();
    let rev = exactla::RatMatrix::from_fn(ker.len(), m, |i, j| ker[i][m - 1 - j].clone());
    let e = exactla::rref(&rev);
    let mut out: Vec<NCPoly> = (0..e.rank())
        .map(|i| {
            NCPoly::from_terms(
                d,
                (0..m).filter_map(|j| {
                    let c = e.r.get(i, m - 1 - j);
                    (!c.is_zero()).then(|| (unknowns[j].clone(), c.clone()))
                }),
            )
        })
        .collect();
    out.sort_by(|a, b| a.leading_word().unwrap().cmp(b.leading_word().unwrap()));
    out
}

/// Basis of `{p : 1 <= deg p <= dmax, p(0) = 0, f p - p f = 0}`, echelonized
/// with unit deg-lex leading coefficients and sorted by leading word. Empty
/// when the only such `p` is zero.
pub fn centralizer_slice(f: &NCPoly, dmax: usize) -> Vec<NCPoly> {
    assert!(!f.is_constant(), "centralizer slice needs a nonconstant input");
    let d = f.nvars();
    let unknowns = Word::all_up_to(d, 1, dmax);
    echelon_kernel(d, &unknowns, |w| {
        let p = NCPoly::from_terms(d, [(w.clone(), Rat::one())]);
        &(f * &p) - &(&p * f)
    })
}

/// A certified presentation `f = p(h)` with `h(0) = 0` and `h` itself not
/// composite; `composite` records whether `p` is nonlinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeDecomposition {
    pub p: UniPoly,
    pub h: NCPoly,
    pub composite: bool,
}

/// Decides whether `f` is composite and produces the decomposition through
/// the deepest inner polynomial. The test is the kernel computation behind
/// [`centralizer_slice`] at degree bound `deg f - 1`: a nonzero slice element
/// exists exactly when the centralizer of `f` is larger than the polynomials
/// in `f` itself, which happens exactly when `f` is composite — and because
/// the slice is cut out by linear equations over Q, the rational kernel also
/// settles compositeness over the algebraic closure.
pub fn composite_decompose(f: &NCPoly) -> CompositeDecomposition {
    assert!(!f.is_constant(), "composite test needs a nonconstant input");
    let n = f.deg().unwrap();
    let slice = centralizer_slice(f, n - 1);
    if slice.is_empty() {
        let f0 = f.constant_term();
        let h = f - &NCPoly::constant(f.nvars(), f0.clone());
        return CompositeDecomposition {
            p: UniPoly::from_coeffs(vec![f0, Rat::one()]),
            h,
            composite: false,
        };
    }
    // The minimal-degree slice element generates the centralizer's grading,
    // so it is the innermost composition factor; echelonization plus the
    // leading-word sort make it canonical (unit leading coefficient).
    let h = slice.into_iter().next().unwrap();
    let p = express_in_powers(f, &h)
        .expect("a nonzero centralizer slice element must express f as a univariate composition");
    debug_assert_eq!(p.deg().unwrap() * h.deg().unwrap(), n);
    debug_assert_eq!(&compose_uni(&p, &h), f);
    let composite = p.deg().unwrap() >= 2;
    debug_assert!(composite, "a nonzero slice at degree < deg f forces deg p >= 2");
    CompositeDecomposition { p, h, composite }
}

/// Outcome of one shifted-factorization probe `f - lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaOutcome {
    /// A verified rational factorization of the shift.
    Factors { left: NCPoly, right: NCPoly },
    /// Conclusively irreducible over Q.
    Irreducible,
    /// The factorization budget ran out before a verdict.
    Inconclusive { reason: String },
}

/// Composite test plus sampled evidence: for each sampled rational shift
/// `lambda`, whether `f - lambda` factors over Q. For composite `f` every
/// shift factors over the algebraic closure (the report may still show
/// `Irreducible` entries, which only means no *rational* split exists); for
/// non-composite `f` at most finitely many shifts factor, so `Factors`
/// entries form the sampled exceptional set.
#[derive(Clone, Debug)]
pub struct BertiniReport {
    pub decomposition: CompositeDecomposition,
    pub evidence: Vec<(Rat, LambdaOutcome)>,
    pub seed: u64,
}

impl BertiniReport {
    /// Sampled shifts with a rational factorization; for a non-composite
    /// input these are the (finitely many possible) exceptions.
    pub fn exceptional_lambdas(&self) -> Vec<Rat> {
        self.evidence
            .iter()
            .filter(|(_, o)| matches!(o, LambdaOutcome::Factors { .. }))
            .map(|(l, _)| l.clone())
            .collect()
    }
}

/// Runs the composite test and probes `samples` seeded random rational
/// shifts. Budget errors on individual shifts are recorded, not fatal.
pub fn bertini_report(f: &NCPoly, samples: usize, seed: u64, budget_level: u32) -> BertiniReport {
    let decomposition = composite_decompose(f);
    let lambdas = sample::lambda_sequence(seed, samples);
    let evidence = lambdas
        .into_iter()
        .map(|l| {
            let outcome = probe_shift(f, &l, budget_level);
            (l, outcome)
        })
        .collect();
    BertiniReport {
        decomposition,
        evidence,
        seed,
    }
}

/// Irreducibility of the single shift `f - lambda` under a fresh budget.
pub fn probe_shift(f: &NCPoly, lambda: &Rat, budget_level: u32) -> LambdaOutcome {
    let shifted = f - &NCPoly::constant(f.nvars(), lambda.clone());
    let mut budget = Budget::from_level(budget_level);
    match factor::irreducibility(&shifted, &mut budget) {
        Ok(Irreducibility::Irreducible) => LambdaOutcome::Irreducible,
        Ok(Irreducibility::Reducible { left, right }) => LambdaOutcome::Factors { left, right },
        Err(BudgetExceeded(reason)) => LambdaOutcome::Inconclusive { reason },
    }
}

/// Nonzero `g1, g2` with `f1 g1 = g2 f2` and `deg g_i < deg f_i`, the linear
/// witness pair for stable association of irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableAssociationWitness {
    pub g1: NCPoly,
    pub g2: NCPoly,
}

/// Decides stable association of two *irreducible* nonconstant polynomials
/// (the caller is responsible for irreducibility, e.g. via the factor
/// module). Two irreducibles are stably associated exactly when they have
/// equal degree and the linear system `f1 g1 - g2 f2 = 0` over coefficients
/// of `g1, g2` of degree below `deg f_i` has a nonzero solution; any such
/// solution is a valid witness and both halves are automatically nonzero.
pub fn stable_association(f1: &NCPoly, f2: &NCPoly) -> Option<StableAssociationWitness> {
    assert!(!f1.is_constant() && !f2.is_constant(), "inputs must be nonconstant");
    assert_eq!(f1.nvars(), f2.nvars(), "inputs must share an alphabet");
    let d = f1.nvars();
    let n1 = f1.deg().unwrap();
    let n2 = f2.deg().unwrap();
    if n1 != n2 {
        return None;
    }
    let w1 = Word::all_up_to(d, 0, n1 - 1);
    let w2 = Word::all_up_to(d, 0, n2 - 1);
    let mut row_ix: BTreeMap<Word, usize> = BTreeMap::new();
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    let mut add_col = |j: usize, p: NCPoly, rows: &mut Vec<Vec<(usize, Rat)>>| {
        for (sw, c) in p.terms() {
            let next = row_ix.len();
            let i = *row_ix.entry(sw.clone()).or_insert(next);
            if i == rows.len() {
                rows.push(Vec::new());
            }
            rows[i].push((j, c.clone()));
        }
    };
    for (j, w) in w1.iter().enumerate() {
        let p = NCPoly::from_terms(d, [(w.clone(), Rat::one())]);
        add_col(j, f1 * &p, &mut rows);
    }
    for (j, w) in w2.iter().enumerate() {
        let p = NCPoly::from_terms(d, [(w.clone(), Rat::one())]);
        add_col(w1.len() + j, -&(&p * f2), &mut rows);
    }
    let ker = exactla::kernel_from_sparse_rows(&rows, w1.len() + w2.len());
    let v = ker.into_iter().next()?;
    let g1 = NCPoly::from_terms(
        d,
        w1.iter()
            .enumerate()
            .map(|(j, w)| (w.clone(), v[j].clone())),
    );
    let g2 = NCPoly::from_terms(
        d,
        w2.iter()
            .enumerate()
            .map(|(j, w)| (w.clone(), v[w1.len() + j].clone())),
    );
    // In a domain, f1 g1 = g2 f2 with one side zero forces the whole
    // solution to zero, which a kernel basis vector never is.
    assert!(!g1.is_zero() && !g2.is_zero());
    let scale = g1.leading_coeff().unwrap().recip();
    let g1 = g1.scale(&scale);
    let g2 = g2.scale(&scale);
    debug_assert_eq!(f1 * &g1, &g2 * f2);
    Some(StableAssociationWitness { g1, g2 })
}

/// Basis of `{b : deg b <= dmax, f b = b g}` (constants included),
/// echelonized and sorted exactly like [`centralizer_slice`].
pub fn intertwiner_space(f: &NCPoly, g: &NCPoly, dmax: usize) -> Vec<NCPoly> {
    assert_eq!(f.nvars(), g.nvars(), "inputs must share an alphabet");
    let d = f.nvars();
    let unknowns = Word::all_up_to(d, 0, dmax);
    echelon_kernel(d, &unknowns, |w| {
        let p = NCPoly::from_terms(d, [(w.clone(), Rat::one())]);
        &(f * &p) - &(&p * g)
    })
}
