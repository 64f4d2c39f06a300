//! Randomized algebraic laws. These are the structural invariants everything
//! else leans on: ring axioms, graded multiplicativity, the involution,
//! printing round trips, evaluation as a homomorphism, similarity invariance
//! of characteristic polynomials, and the two constructive certificates of
//! the semidefiniteness test.

use freebert::eigenlevel::{char_poly, eval, MatrixTuple};
use freebert::exactla::{ldlt_psd, quad_form, LdltOutcome, RatMatrix};
use freebert::parser;
use freebert::rat::rat;
use freebert::unipoly::{isolate_all, RootLoc, UniPoly};
use freebert::{NCPoly, Rat, Word};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn arb_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u32..2, 0..=3).prop_map(Word)
}

/// Polynomials in two letters, degree at most 3, at most four terms.
fn arb_poly() -> impl Strategy<Value = NCPoly> {
    proptest::collection::vec((arb_word(), arb_rat()), 0..=4)
        .prop_map(|ts| NCPoly::from_terms(2, ts))
}

fn arb_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(arb_rat(), n * n).prop_map(move |v| {
        RatMatrix::from_fn(n, n, |i, j| v[i * n + j].clone())
    })
}

fn arb_symmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    arb_matrix(n).prop_map(|m| {
        let t = m.transpose();
        m.add(&t)
    })
}

proptest! {
    #[test]
    fn ring_axioms_hold(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&g + &h) * &f, &(&g * &f) + &(&h * &f));
        let one = NCPoly::one(2);
        prop_assert_eq!(&f * &one, f.clone());
        prop_assert_eq!(&one * &f, f.clone());
    }

    #[test]
    fn degree_is_multiplicative(f in arb_poly(), g in arb_poly()) {
        // The free algebra has no zero divisors, so degrees add exactly.
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        prop_assert!(!fg.is_zero());
        prop_assert_eq!(
            fg.deg().unwrap(),
            f.deg().unwrap() + g.deg().unwrap()
        );
    }

    #[test]
    fn transpose_is_an_antiautomorphism(f in arb_poly(), g in arb_poly()) {
        prop_assert_eq!((&f * &g).transpose(), &g.transpose() * &f.transpose());
        prop_assert_eq!((&f + &g).transpose(), &f.transpose() + &g.transpose());
        prop_assert_eq!(f.transpose().transpose(), f.clone());
    }

    #[test]
    fn printing_round_trips(f in arb_poly()) {
        let text = parser::print(&f);
        let back = parser::parse(&text, 2).expect("canonical output reparses");
        prop_assert_eq!(back, f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        f in arb_poly(),
        g in arb_poly(),
        a in arb_matrix(2),
        b in arb_matrix(2),
    ) {
        let x = MatrixTuple::new(vec![a, b]);
        let ef = eval(&f, &x);
        let eg = eval(&g, &x);
        prop_assert_eq!(eval(&(&f + &g), &x), ef.add(&eg));
        prop_assert_eq!(eval(&(&f * &g), &x), ef.mul(&eg));
    }

    #[test]
    fn char_poly_ignores_factor_order(a in arb_matrix(3), b in arb_matrix(3)) {
        // AB and BA are always spectrally identical; this is the scalar
        // engine behind the determinant identity for intertwined pairs.
        prop_assert_eq!(char_poly(&a.mul(&b)), char_poly(&b.mul(&a)));
    }

    #[test]
    fn semidefiniteness_certificates_verify(s in arb_symmetric(3)) {
        match ldlt_psd(&s) {
            LdltOutcome::Psd { terms } => {
                let mut back = RatMatrix::zeros(3, 3);
                for (d, u) in &terms {
                    prop_assert!(d.is_positive());
                    let outer = RatMatrix::from_fn(3, 3, |i, j| &(&u[i] * &u[j]) * d);
                    back = back.add(&outer);
                }
                prop_assert_eq!(back, s);
            }
            LdltOutcome::NotPsd { witness } => {
                prop_assert!(quad_form(&s, &witness).is_negative());
            }
        }
    }

    #[test]
    fn sturm_isolation_finds_planted_roots(
        roots in proptest::collection::btree_set((-9i64..=9, 1i64..=4), 1..=4)
    ) {
        let roots: Vec<Rat> = roots
            .iter()
            .map(|(n, d)| rat(*n, *d))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut p = UniPoly::one();
        for r in &roots {
            p = &p * &UniPoly::from_coeffs(vec![-r.clone(), Rat::one()]);
        }
        let locs = isolate_all(&p);
        prop_assert_eq!(locs.len(), roots.len());
        for (loc, r) in locs.iter().zip(&roots) {
            match loc {
                RootLoc::Exact(v) => prop_assert_eq!(v, r),
                RootLoc::Open(lo, hi) => prop_assert!(lo < r && r <= hi),
            }
        }
        // Exact rational recovery agrees as well.
        let found: Vec<Rat> = p.rational_roots().into_iter().map(|(r, _)| r).collect();
        prop_assert_eq!(found, roots);
    }

    #[test]
    fn composition_associates(
        c0 in -6i64..=6,
        c1 in -6i64..=6,
        c2 in -6i64..=6,
        h in arb_poly(),
    ) {
        // p(q(h)) = (p o q)(h) for univariate p, q over any inner polynomial.
        prop_assume!(h.constant_term().is_zero());
        let q = UniPoly::from_coeffs(vec![rat(c0, 1), rat(c1, 1), rat(c2, 1)]);
        let p = UniPoly::from_coeffs(vec![rat(c1, 1), rat(c2, 1)]);
        let lhs = freebert::ncpoly::compose_uni(&p.compose(&q), &h);
        let rhs = freebert::ncpoly::compose_uni(&p, &freebert::ncpoly::compose_uni(&q, &h));
        prop_assert_eq!(lhs, rhs);
    }
}
