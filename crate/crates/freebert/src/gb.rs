//! Groebner bases over Q and rational-point enumeration for the coefficient
//! systems produced by factorization peeling.
//!
//! The solver is exact about what it knows. For zero-dimensional branches it
//! enumerates every rational solution (variable values are rational roots of
//! minimal polynomials, which are extracted completely). Positive-dimensional
//! branches are probed along finitely many hyperplane slices, and the result
//! is flagged non-exhaustive so callers never mistake a failed search for a
//! proof of emptiness.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cpoly::{CPoly, Mono};
use crate::exactla::{solve, RatMatrix};
use crate::rat::{rat, rint, Rat};
use crate::unipoly::UniPoly;

/// Work allowance shared across a whole decision. Spent per S-pair, per
/// reduction step, and per search node; exhausting it aborts with an error
/// instead of a wrong answer.
#[derive(Clone, Debug)]
pub struct Budget {
    units: u64,
}

#[derive(Debug, Error)]
#[error("computation budget exceeded while {0}")]
pub struct BudgetExceeded(pub String);

impl Budget {
    /// Maps the user-facing budget level to internal work units.
    pub fn from_level(level: u32) -> Budget {
        Budget {
            units: (level as u64 + 1).pow(2) * 2000,
        }
    }

    pub fn spend(&mut self, n: u64, what: &str) -> Result<(), BudgetExceeded> {
        if self.units < n {
            return Err(BudgetExceeded(what.to_string()));
        }
        self.units -= n;
        Ok(())
    }
}

/// Full normal form of `p` against `basis` (every term reduced).
pub fn reduce(p: &CPoly, basis: &[CPoly]) -> CPoly {
    let mut work = p.clone();
    let mut out = CPoly::zero();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let (glm, glc) = match g.leading() {
                Some((m, c)) => (m, c),
                None => continue,
            };
            if let Some(q) = glm.div_into(&lm) {
                let f = &lc / glc;
                work = work.sub(&g.mul_term(&q, &f));
                continue 'outer;
            }
        }
        out.add_term(lm.clone(), lc.clone());
        work.add_term(lm, -lc);
    }
    out
}

fn s_poly(f: &CPoly, g: &CPoly) -> CPoly {
    let (flm, flc) = f.leading().unwrap();
    let (glm, glc) = g.leading().unwrap();
    let l = flm.lcm(glm);
    let mf = flm.div_into(&l).unwrap();
    let mg = glm.div_into(&l).unwrap();
    f.mul_term(&mf, &flc.recip())
        .sub(&g.mul_term(&mg, &glc.recip()))
}

/// Reduced Groebner basis for graded lex order, monic elements sorted by
/// leading monomial. Deterministic for a given generating set.
pub fn groebner(gens: &[CPoly], budget: &mut Budget) -> Result<Vec<CPoly>, BudgetExceeded> {
    let mut basis: Vec<CPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(CPoly::make_monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some(pos) = {
        // Normal strategy: smallest lcm degree first.
        pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let l = basis[i].leading().unwrap().0.lcm(basis[j].leading().unwrap().0);
                (l.total_deg(), i, j)
            })
            .map(|(pos, _)| pos)
    } {
        let (i, j) = pairs.swap_remove(pos);
        budget.spend(1, "running Buchberger pairs")?;
        let (li, lj) = (
            basis[i].leading().unwrap().0.clone(),
            basis[j].leading().unwrap().0.clone(),
        );
        if li.coprime(&lj) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        budget.spend(s.num_terms() as u64, "reducing S-polynomials")?;
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.as_constant().is_some() {
            // Ideal is the whole ring; report the canonical basis {1}.
            return Ok(vec![CPoly::one()]);
        }
        let r = r.make_monic();
        let new = basis.len();
        for k in 0..new {
            pairs.push((k, new));
        }
        basis.push(r);
        budget.spend(new as u64, "growing the basis")?;
    }
    // Minimalize: ascending graded-lex order puts divisors first, so keeping
    // an element only when no already-kept leading monomial divides its own
    // leaves exactly one generator per minimal leading monomial.
    basis.sort();
    let mut minimal: Vec<CPoly> = Vec::new();
    for p in basis {
        let lm = p.leading().unwrap().0;
        if !minimal
            .iter()
            .any(|q| q.leading().unwrap().0.divides(lm))
        {
            minimal.push(p);
        }
    }
    // Tail-reduce each survivor against the others; leading terms are safe
    // because no other leading monomial divides them.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<CPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(reduce(&minimal[i], &others).make_monic());
    }
    reduced.sort();
    Ok(reduced)
}

/// All monomials outside the leading-term ideal, for a zero-dimensional
/// basis; `None` when some variable has no pure-power leading monomial or the
/// count would exceed `cap`.
fn standard_monomials(gb: &[CPoly], active: &[u32], cap: usize) -> Option<Vec<Mono>> {
    let mut bounds = Vec::with_capacity(active.len());
    for &v in active {
        let b = gb
            .iter()
            .filter_map(|p| p.leading().unwrap().0.pure_power())
            .filter(|&(w, _)| w == v)
            .map(|(_, e)| e)
            .min()?;
        bounds.push(b);
    }
    let mut size = 1usize;
    for &b in &bounds {
        size = size.checked_mul(b as usize)?;
        if size > cap {
            return None;
        }
    }
    let lead: Vec<Mono> = gb.iter().map(|p| p.leading().unwrap().0.clone()).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; active.len()];
    loop {
        let m = Mono::from_pairs(
            active
                .iter()
                .zip(&exps)
                .map(|(&v, &e)| (v, e))
                .collect(),
        );
        if !lead.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // Odometer over the exponent box.
        let mut i = 0;
        loop {
            if i == exps.len() {
                out.sort();
                return Some(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Minimal polynomial of variable `v` on the quotient ring, found as the
/// first linear dependence among normal forms of its powers.
fn minimal_polynomial(
    gb: &[CPoly],
    v: u32,
    smonos: &[Mono],
    budget: &mut Budget,
) -> Result<UniPoly, BudgetExceeded> {
    let index = |m: &Mono| smonos.binary_search(m).expect("normal form stays standard");
    let dim = smonos.len();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut nf = CPoly::one();
    for k in 0..=dim {
        budget.spend(1, "computing minimal polynomials")?;
        let mut col = vec![Rat::zero(); dim];
        for (m, c) in nf.terms() {
            col[index(m)] = c.clone();
        }
        if k > 0 {
            let m = RatMatrix::from_fn(dim, k, |i, j| cols[j][i].clone());
            if let Some(sol) = solve(&m, &col) {
                let mut coeffs = sol.particular;
                coeffs.iter_mut().for_each(|c| *c = -c.clone());
                coeffs.push(Rat::one());
                return Ok(UniPoly::from_coeffs(coeffs));
            }
        }
        cols.push(col);
        nf = reduce(&nf.mul(&CPoly::var(v)), gb);
    }
    unreachable!("powers of a variable must become dependent in a finite quotient")
}

/// Rational solution set of a polynomial system.
#[derive(Debug, Clone)]
pub struct RationalSolutions {
    /// Distinct rational points found, each of length `nvars`, sorted.
    pub points: Vec<Vec<Rat>>,
    /// When true, `points` is the complete set of rational solutions; an
    /// empty exhaustive result is a proof that none exist.
    pub exhaustive: bool,
}

fn probe_values() -> Vec<Rat> {
    vec![
        rint(0),
        rint(1),
        rint(-1),
        rint(2),
        rint(-2),
        rat(1, 2),
        rat(-1, 2),
        rint(3),
        rint(-3),
    ]
}

const STANDARD_MONOMIAL_CAP: usize = 4096;

/// Finds rational solutions of `system` in `nvars` variables.
///
/// Zero-dimensional branches are enumerated completely: each variable is a
/// rational root of its minimal polynomial, so recursion over those roots
/// visits every rational point. Positive-dimensional branches fix one
/// unbounded variable at a few probe values and recurse; whatever is found is
/// genuine, but the search is marked non-exhaustive. Unconstrained variables
/// are reported at zero.
pub fn gb_solve(
    system: &[CPoly],
    nvars: u32,
    budget: &mut Budget,
) -> Result<RationalSolutions, BudgetExceeded> {
    let mut points = Vec::new();
    let mut exhaustive = true;
    let assigned = vec![None; nvars as usize];
    solve_rec(
        system.to_vec(),
        assigned,
        &mut points,
        &mut exhaustive,
        budget,
    )?;
    points.sort();
    points.dedup();
    Ok(RationalSolutions { points, exhaustive })
}

fn solve_rec(
    system: Vec<CPoly>,
    assigned: Vec<Option<Rat>>,
    points: &mut Vec<Vec<Rat>>,
    exhaustive: &mut bool,
    budget: &mut Budget,
) -> Result<(), BudgetExceeded> {
    budget.spend(1, "searching for rational solutions")?;
    let mut sys: Vec<CPoly> = Vec::new();
    for p in system {
        match p.as_constant() {
            Some(c) if c.is_zero() => {}
            Some(_) => return Ok(()), // contradiction: dead branch
            None => sys.push(p),
        }
    }
    if sys.is_empty() {
        if assigned.iter().any(Option::is_none) {
            // A positive-dimensional family; report one representative.
            *exhaustive = false;
        }
        points.push(
            assigned
                .iter()
                .map(|a| a.clone().unwrap_or_else(Rat::zero))
                .collect(),
        );
        return Ok(());
    }
    let gb = groebner(&sys, budget)?;
    if gb.iter().any(|p| p.as_constant().map_or(false, |c| !c.is_zero())) {
        return Ok(());
    }
    let mut active: Vec<u32> = gb.iter().flat_map(|p| p.variables()).collect();
    active.sort();
    active.dedup();
    let has_pure_power = |v: u32| {
        gb.iter()
            .any(|p| matches!(p.leading().unwrap().0.pure_power(), Some((w, _)) if w == v))
    };
    let nonpure = active.iter().copied().find(|&v| !has_pure_power(v));
    match nonpure {
        None => {
            // Zero-dimensional: recurse over the rational roots of the first
            // active variable's minimal polynomial. No roots means no
            // rational points on this branch, provably.
            let v = active[0];
            let smonos = standard_monomials(&gb, &active, STANDARD_MONOMIAL_CAP)
                .ok_or_else(|| BudgetExceeded("enumerating standard monomials".into()))?;
            let mp = minimal_polynomial(&gb, v, &smonos, budget)?;
            for (root, _) in mp.rational_roots() {
                let sub: Vec<CPoly> = gb.iter().map(|p| p.substitute(v, &root)).collect();
                let mut next = assigned.clone();
                next[v as usize] = Some(root);
                solve_rec(sub, next, points, exhaustive, budget)?;
            }
        }
        Some(v) => {
            // Positive-dimensional: slice along finitely many values.
            *exhaustive = false;
            for c in probe_values() {
                let sub: Vec<CPoly> = gb.iter().map(|p| p.substitute(v, &c)).collect();
                let mut next = assigned.clone();
                next[v as usize] = Some(c);
                solve_rec(sub, next, points, exhaustive, budget)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_budget() -> Budget {
        Budget::from_level(24)
    }

    #[test]
    fn single_quadratic_both_roots() {
        // a1^2 - 1 = 0.
        let p = CPoly::var(0).mul(&CPoly::var(0)).sub(&CPoly::one());
        let sol = gb_solve(&[p], 1, &mut big_budget()).unwrap();
        assert!(sol.exhaustive);
        assert_eq!(sol.points, vec![vec![rint(-1)], vec![rint(1)]]);
    }

    #[test]
    fn linear_system_unique_point() {
        let x = CPoly::var(0);
        let y = CPoly::var(1);
        let sys = [
            x.add(&y).sub(&CPoly::constant(rint(3))),
            x.sub(&y).sub(&CPoly::constant(rint(1))),
        ];
        let sol = gb_solve(&sys, 2, &mut big_budget()).unwrap();
        assert!(sol.exhaustive);
        assert_eq!(sol.points, vec![vec![rint(2), rint(1)]]);
    }

    #[test]
    fn inconsistent_system_is_provably_empty() {
        let sys = [CPoly::var(0), CPoly::var(0).sub(&CPoly::one())];
        let sol = gb_solve(&sys, 1, &mut big_budget()).unwrap();
        assert!(sol.exhaustive);
        assert!(sol.points.is_empty());
    }

    #[test]
    fn irrational_roots_reported_empty_but_certain() {
        // a1^2 = 3 has no rational solutions, and the solver knows it.
        let p = CPoly::var(0)
            .mul(&CPoly::var(0))
            .sub(&CPoly::constant(rint(3)));
        let sol = gb_solve(&[p], 1, &mut big_budget()).unwrap();
        assert!(sol.exhaustive);
        assert!(sol.points.is_empty());
    }

    #[test]
    fn curve_slicing_finds_points_without_claiming_completeness() {
        // a1 a2 = 1.
        let p = CPoly::var(0).mul(&CPoly::var(1)).sub(&CPoly::one());
        let sol = gb_solve(&[p], 2, &mut big_budget()).unwrap();
        assert!(!sol.exhaustive);
        assert!(sol.points.contains(&vec![rint(1), rint(1)]));
        assert!(sol.points.contains(&vec![rint(2), rat(1, 2)]));
        for pt in &sol.points {
            assert_eq!(&pt[0] * &pt[1], rint(1));
        }
    }

    #[test]
    fn definite_curve_stays_inconclusive() {
        // a1^2 + a2^2 + 1 = 0 has no real points at all; the slicer cannot
        // prove that, so the honest answer is empty and non-exhaustive.
        let p = CPoly::var(0)
            .mul(&CPoly::var(0))
            .add(&CPoly::var(1).mul(&CPoly::var(1)))
            .add(&CPoly::one());
        let sol = gb_solve(&[p], 2, &mut big_budget()).unwrap();
        assert!(!sol.exhaustive);
        assert!(sol.points.is_empty());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let p = CPoly::var(0).mul(&CPoly::var(1)).sub(&CPoly::one());
        let mut tiny = Budget { units: 3 };
        assert!(gb_solve(&[p], 2, &mut tiny).is_err());
    }

    #[test]
    fn groebner_of_circle_and_line() {
        // {a1^2 + a2^2 - 1, a1 - a2}: solutions are irrational.
        let circle = CPoly::var(0)
            .mul(&CPoly::var(0))
            .add(&CPoly::var(1).mul(&CPoly::var(1)))
            .sub(&CPoly::one());
        let line = CPoly::var(0).sub(&CPoly::var(1));
        let sol = gb_solve(&[circle, line], 2, &mut big_budget()).unwrap();
        assert!(sol.exhaustive);
        assert!(sol.points.is_empty());
    }

    #[test]
    fn unconstrained_variable_gets_representative() {
        // Only a1 is constrained; a2 is free.
        let p = CPoly::var(0).sub(&CPoly::one());
        let sol = gb_solve(&[p], 2, &mut big_budget()).unwrap();
        assert!(!sol.exhaustive);
        assert_eq!(sol.points, vec![vec![rint(1), rint(0)]]);
    }
}
