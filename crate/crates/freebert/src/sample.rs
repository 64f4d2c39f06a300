//! Seeded random generation of rationals, words, polynomials, and matrix
//! tuples. Everything here is deterministic in the seed so that reports and
//! test fixtures can be reproduced exactly from their recorded parameters.

use crate::ncpoly::NCPoly;
use crate::rat::Rat;
use crate::word::Word;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The stream cipher generator behind every sampler; small, fast, and stable
/// across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform rational with numerator in `-max_num..=max_num` and denominator in
/// `1..=max_den`, reduced.
pub fn rat_up_to(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rat {
    assert!(max_num >= 0 && max_den >= 1);
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Like [`rat_up_to`] but rejects zero.
pub fn nonzero_rat_up_to(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rat {
    loop {
        let r = rat_up_to(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// The shift values sampled by factorization-shift reports: uniform rationals
/// with numerator and denominator bounded by 10^3, deterministic in the seed.
pub fn lambda_sequence(seed: u64, n: usize) -> Vec<Rat> {
    let mut rng = rng(seed);
    (0..n).map(|_| rat_up_to(&mut rng, 1000, 1000)).collect()
}

/// Uniform word of exactly `len` letters over `d` letters.
pub fn word_of_len(rng: &mut impl Rng, d: u32, len: usize) -> Word {
    assert!(d >= 1);
    Word((0..len).map(|_| rng.gen_range(0..d)).collect())
}

/// Random polynomial of exact degree `deg` with at most `extra_terms`
/// additional lower-order terms, all coefficients small nonzero rationals.
pub fn poly(rng: &mut impl Rng, d: u32, deg: usize, extra_terms: usize) -> NCPoly {
    let mut p = NCPoly::zero(d);
    p.add_term(word_of_len(rng, d, deg), nonzero_rat_up_to(rng, 5, 3));
    for _ in 0..extra_terms {
        let len = rng.gen_range(0..=deg.saturating_sub(1).max(0));
        p.add_term(word_of_len(rng, d, len), rat_up_to(rng, 5, 3));
    }
    if p.deg() != Some(deg) {
        // The leading term was cancelled by a duplicate draw; retry.
        return poly(rng, d, deg, extra_terms);
    }
    p
}

/// Random `n x n` matrix with entries from [`rat_up_to`], row-major.
pub fn rat_matrix(rng: &mut impl Rng, n: usize, max_num: i64, max_den: i64) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|_| (0..n).map(|_| rat_up_to(rng, max_num, max_den)).collect())
        .collect()
}

/// Random symmetric `n x n` matrix.
pub fn symmetric_matrix(rng: &mut impl Rng, n: usize, max_num: i64, max_den: i64) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let v = rat_up_to(rng, max_num, max_den);
            m[i][j] = v.clone();
            m[j][i] = v;
        }
    }
    m
}

/// Tuple of `d` random `n x n` matrices.
pub fn tuple(rng: &mut impl Rng, d: u32, n: usize, max_num: i64, max_den: i64) -> Vec<Vec<Vec<Rat>>> {
    (0..d).map(|_| rat_matrix(rng, n, max_num, max_den)).collect()
}

/// Tuple of `d` random symmetric `n x n` matrices.
pub fn symmetric_tuple(
    rng: &mut impl Rng,
    d: u32,
    n: usize,
    max_num: i64,
    max_den: i64,
) -> Vec<Vec<Vec<Rat>>> {
    (0..d)
        .map(|_| symmetric_matrix(rng, n, max_num, max_den))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(lambda_sequence(7, 5), lambda_sequence(7, 5));
        assert_ne!(lambda_sequence(7, 5), lambda_sequence(8, 5));
        let (mut a, mut b) = (rng(3), rng(3));
        assert_eq!(word_of_len(&mut a, 3, 6), word_of_len(&mut b, 3, 6));
        assert_eq!(poly(&mut a, 2, 3, 4), poly(&mut b, 2, 3, 4));
    }

    #[test]
    fn bounds_respected() {
        let mut r = rng(0);
        for _ in 0..200 {
            let q = rat_up_to(&mut r, 1000, 1000);
            assert!(q.numer().magnitude() <= &1000u32.into());
            assert!(q.denom().magnitude() <= &1000u32.into());
            assert!(q.denom() > &BigInt::from(0));
        }
        for _ in 0..50 {
            assert!(!nonzero_rat_up_to(&mut r, 1, 1).is_zero());
        }
    }

    #[test]
    fn poly_has_exact_degree() {
        let mut r = rng(11);
        for deg in 1..5 {
            for _ in 0..10 {
                let p = poly(&mut r, 2, deg, 3);
                assert_eq!(p.deg(), Some(deg));
            }
        }
    }

    #[test]
    fn symmetric_matrices_are_symmetric() {
        let mut r = rng(5);
        let m = symmetric_matrix(&mut r, 4, 9, 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        let t = symmetric_tuple(&mut r, 3, 2, 9, 4);
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].len(), 2);
        let _ = rint(0);
    }
}
