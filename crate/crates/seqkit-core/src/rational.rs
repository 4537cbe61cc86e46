//! Exact rational coefficients.
//!
//! Every coefficient in this crate is a [`Rat`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. No floating
//! point appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational p/q from machine integers. Panics if q == 0.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Parse "p/q" or "p" with optional sign. Whitespace is trimmed.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: Int = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Canonical "p/q" form used in JSON serialization. Integers keep the
/// explicit "/1" so the format stays uniform.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact display form: "p" when the denominator is 1, else "p/q".
pub fn display_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Generalized binomial coefficient binom(alpha, n) for rational alpha:
/// alpha (alpha-1) ... (alpha-n+1) / n!.
pub fn binomial_rat(alpha: &Rat, n: usize) -> Rat {
    let mut num = Rat::one();
    for i in 0..n {
        num *= alpha - rat(i as i64);
        num /= rat(i as i64 + 1);
    }
    num
}

/// Integer binomial coefficient binom(n, k) as a rational.
pub fn binomial_int(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    binomial_rat(&rat(n as i64), k as usize)
}
