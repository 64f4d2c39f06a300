//! Arbitrary-precision rational scalars and small numeric helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand constructor from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// Exact square root if `r` is a perfect square in Q, else `None`.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    nth_root_exact(r, 2)
}

/// Exact `n`-th root if one exists in Q, else `None`.
///
/// For even `n` the nonnegative root is returned; negative inputs only have
/// rational roots for odd `n`.
pub fn nth_root_exact(r: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1);
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let num_root = int_nth_root(r.numer(), n)?;
    let den_root = int_nth_root(r.denom(), n)?;
    Some(Rat::new(num_root, den_root))
}

fn int_nth_root(v: &BigInt, n: u32) -> Option<BigInt> {
    if v.is_negative() {
        let root = int_nth_root(&-v, n)?;
        return if n % 2 == 1 { Some(-root) } else { None };
    }
    let root = v.nth_root(n);
    if num_traits::pow(root.clone(), n as usize) == *v {
        Some(root)
    } else {
        None
    }
}

/// Parses a rational written as `p` or `p/q` (ASCII, optional leading sign).
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match t.split('/').collect::<Vec<_>>()[..] {
        [num] => num
            .parse::<BigInt>()
            .map(Rat::from)
            .map_err(|_| format!("invalid integer `{num}`")),
        [num, den] => {
            let n = num
                .parse::<BigInt>()
                .map_err(|_| format!("invalid numerator `{num}`"))?;
            let d = den
                .parse::<BigInt>()
                .map_err(|_| format!("invalid denominator `{den}`"))?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(Rat::new(n, d))
        }
        _ => Err(format!("invalid rational `{t}`")),
    }
}

/// Canonical display form: `p` for integers, `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-1, 1)), None);
        assert_eq!(nth_root_exact(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(nth_root_exact(&rat(27, 9), 3), None);
        assert_eq!(nth_root_exact(&Rat::zero(), 5), Some(Rat::zero()));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("7").unwrap(), rint(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("1/2/3").is_err());
        assert_eq!(fmt_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rat(&rint(5)), "5");
    }
}
