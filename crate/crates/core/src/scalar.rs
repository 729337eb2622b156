//! The ground field: exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rational scalar, always stored in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses a rational literal such as `3`, `-1/2` or `+4/6`. Floats are rejected.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Sign parameter taking the values +1 and -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_scalar(self) -> Scalar {
        match self {
            Sign::Plus => one(),
            Sign::Minus => -one(),
        }
    }

    pub fn pow(self, exp: usize) -> Sign {
        match self {
            Sign::Minus if exp % 2 == 1 => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar(" 4/6 ").unwrap(), ratio(2, 3));
        assert_eq!(parse_scalar("+5").unwrap(), int(5));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for s in ["1.5", "1e3", "", "/2", "1/0", "1/-2", "x", "--1"] {
            assert!(parse_scalar(s).is_err(), "{s}");
        }
    }

    #[test]
    fn lowest_terms() {
        let q = parse_scalar("-6/4").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn sign_powers() {
        assert_eq!(Sign::Minus.pow(0), Sign::Plus);
        assert_eq!(Sign::Minus.pow(3), Sign::Minus);
        assert_eq!(Sign::Plus.pow(7), Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
    }
}
