//! Exact rational scalars.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator, so structural equality is value equality. Rendering
//! uses `p/q`, or `p` when the denominator is one, and parses back exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rat;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^m` as a rational.
pub fn sign(m: usize) -> Rat {
    if m.is_even() {
        Rat::one()
    } else {
        -Rat::one()
    }
}

pub fn pow(base: &Rat, exp: usize) -> Rat {
    num_traits::pow(base.clone(), exp)
}

/// Parses `p`, `p/q` or a decimal with a finite expansion such as `-0.5`.
pub fn parse(input: &str) -> Result<Rat> {
    let s = input.trim();
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if let Some((whole, fraction)) = s.split_once('.') {
        if s.contains('/') {
            return Err(err("mixed decimal and fraction"));
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fraction);
        let num: BigInt = digits.parse().map_err(|_| err("bad decimal"))?;
        let den = num_traits::pow(BigInt::from(10), fraction.len());
        let value = Rat::new(num, den);
        return Ok(if negative { -value } else { value });
    }
    let value: Rat = s.parse().map_err(|_| err("expected an integer or p/q"))?;
    Ok(value)
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r, frac(-3, 2));
    }

    #[test]
    fn renders_exactly() {
        assert_eq!(frac(-1, 2).to_string(), "-1/2");
        assert_eq!(int(11).to_string(), "11");
        assert_eq!(frac(4, 2).to_string(), "2");
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse("11/6").unwrap(), frac(11, 6));
        assert_eq!(parse("-0.5").unwrap(), frac(-1, 2));
        assert_eq!(parse(" 3 ").unwrap(), int(3));
        assert!(parse("1/0x").is_err());
        assert!(parse("1.5/2").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
