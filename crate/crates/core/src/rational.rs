//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Rational`] built on arbitrary-precision
//! integers; nothing is ever rounded. `num-rational` keeps values in lowest
//! terms with a positive denominator, which is exactly the representation the
//! rest of the toolkit relies on (2-adic valuations read numerator and
//! denominator separately).
//!
//! Rationals cross the serialization boundary as the strings `"p/q"`, or
//! `"p"` when the denominator is 1 — never as decimals.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

/// `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational. `q` must be nonzero.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient as a big integer; exact for all `n`, `k`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Serde adapter rendering rationals as `"p/q"` strings.
pub mod rational_string {
    use super::Rational;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        Rational::from_str(&text).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(ratio(7, 45).to_string(), "7/45");
        assert_eq!(ratio(-1, 45).to_string(), "-1/45");
        assert_eq!(int(3).to_string(), "3");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn always_reduced() {
        let r = ratio(12, -30);
        assert_eq!(r.to_string(), "-2/5");
        assert!(r.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn binomial_row_five() {
        let row: Vec<_> = (0..=5).map(|k| binomial(5, k)).collect();
        let expect: Vec<_> = [1, 5, 10, 10, 5, 1]
            .iter()
            .map(|&n| num_bigint::BigInt::from(n))
            .collect();
        assert_eq!(row, expect);
    }
}
