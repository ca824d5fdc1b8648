//! Exact arithmetic and linear algebra.
//!
//! Integers and rationals are arbitrary precision (`num-bigint` /
//! `num-rational`). Integer matrices carry the multiplicity data of the
//! depth algorithms; rational matrices carry structure constants and the
//! relative tensor quotients.

mod intmat;
pub(crate) mod kernel;
mod quotient;
mod ratmat;
mod sparse;

pub use intmat::{dominated_by, domination_witness, mat_mul, support, IntMatrix, SupportPattern};
pub use quotient::{quotient_basis, QuotientMap};
pub use ratmat::RatMatrix;
pub use sparse::{EchelonBasis, SparseVec};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational as BigRat;

use num_traits::{One, Zero};

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_zero() -> BigRat {
    BigRat::zero()
}

pub fn rat_one() -> BigRat {
    BigRat::one()
}

/// Canonical string form of a rational: `p` for integers, `p/q` otherwise.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> crate::Result<BigRat> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRat::new(p, q))
        }
        None => Ok(BigRat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// JSON number when it fits in the exactly representable range of an
/// IEEE double, decimal string otherwise.
pub fn int_to_json(v: &BigInt) -> serde_json::Value {
    const LIMIT: i64 = (1i64 << 53) - 1;
    match i64::try_from(v) {
        Ok(x) if (-LIMIT..=LIMIT).contains(&x) => serde_json::Value::from(x),
        _ => serde_json::Value::String(v.to_string()),
    }
}

pub fn int_from_json(v: &serde_json::Value) -> crate::Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(x) = n.as_i64() {
                Ok(BigInt::from(x))
            } else if let Some(x) = n.as_u64() {
                Ok(BigInt::from(x))
            } else {
                Err(crate::Error::Parse(format!("non-integer number {n}")))
            }
        }
        serde_json::Value::String(s) => s.trim().parse().map_err(|_| crate::Error::Parse(format!("bad integer `{s}`"))),
        other => Err(crate::Error::Parse(format!("expected integer, got {other}"))),
    }
}

pub fn rat_to_json(r: &BigRat) -> serde_json::Value {
    serde_json::Value::String(rat_to_string(r))
}

pub fn rat_from_json(v: &serde_json::Value) -> crate::Result<BigRat> {
    match v {
        serde_json::Value::String(s) => parse_rat(s),
        serde_json::Value::Number(_) => Ok(BigRat::from_integer(int_from_json(v)?)),
        other => Err(crate::Error::Parse(format!("expected rational, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_are_canonical() {
        assert_eq!(rat_to_string(&rat_frac(2, 4)), "1/2");
        assert_eq!(rat_to_string(&rat_frac(-6, 3)), "-2");
        assert_eq!(parse_rat(" -3/6 ").unwrap(), rat_frac(-1, 2));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn big_integers_become_strings() {
        let small = BigInt::from((1i64 << 53) - 1);
        let big = BigInt::from(1i64 << 53);
        assert!(int_to_json(&small).is_number());
        assert_eq!(int_to_json(&big), serde_json::Value::String("9007199254740992".into()));
        assert_eq!(int_from_json(&int_to_json(&big)).unwrap(), big);
    }
}
