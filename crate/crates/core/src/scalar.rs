//! Exact rationals and the scalar combinatorics used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(k: u32) -> Scalar {
    (1..=k as i64).fold(Scalar::one(), |acc, j| acc * int(j))
}

/// Generalized binomial coefficient `(b choose i) = b(b-1)...(b-i+1) / i!`.
pub fn binomial(b: &Scalar, i: u32) -> Scalar {
    let mut num = Scalar::one();
    for k in 0..i {
        num *= b - int(k as i64);
    }
    num / factorial(i)
}

/// Canonical `p/q` text form. The denominator is always written.
pub fn to_text(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Accepts `p`, `p/q`, and a leading sign.
pub fn parse(text: &str) -> Result<Scalar, Error> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Malformed(format!("bad rational `{text}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Malformed(format!("bad rational `{text}`")))?;
    if den.is_zero() {
        return Err(Error::Malformed(format!("zero denominator in `{text}`")));
    }
    Ok(Scalar::new(num, den))
}

/// Short human form: `3`, `-1/2`.
pub fn display(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

/// The integer value of `s`, if it is an integer that fits in `i64`.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    if s.is_integer() {
        s.numer().to_i64()
    } else {
        None
    }
}

/// `#[serde(with = "scalar::text")]` for fields holding a [`Scalar`].
pub mod text {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Scalar;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_text(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let t = String::deserialize(d)?;
        super::parse(&t).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(&int(7), 0), int(1));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(2), 3), int(0));
        assert_eq!(binomial(&int(-1), 3), int(-1));
    }

    #[test]
    fn text_round_trip() {
        for s in [int(0), int(-4), rat(3, -6), rat(22, 7)] {
            assert_eq!(parse(&to_text(&s)).unwrap(), s);
            assert_eq!(parse(&display(&s)).unwrap(), s);
        }
        assert_eq!(to_text(&rat(2, -4)), "-1/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
