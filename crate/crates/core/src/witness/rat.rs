//! Exact rationals and their JSON form `[num, den]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use super::WitnessError;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn half() -> Rat {
    rat(1, 2)
}

pub fn min(a: &Rat, b: &Rat) -> Rat {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn abs(a: &Rat) -> Rat {
    a.abs()
}

fn big_to_json(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(b.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt, WitnessError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| WitnessError::Invalid(format!("{n} is not an integer"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| WitnessError::Invalid(format!("{s:?} is not an integer"))),
        other => Err(WitnessError::Invalid(format!("expected an integer, found {other}"))),
    }
}

/// `[num, den]` in lowest terms with `den > 0`; integers that do not fit
/// in 64 bits are written as decimal strings.
pub fn to_json(q: &Rat) -> Value {
    Value::Array(vec![big_to_json(q.numer()), big_to_json(q.denom())])
}

pub fn from_json(v: &Value) -> Result<Rat, WitnessError> {
    let parts = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| WitnessError::Invalid(format!("expected [num, den], found {v}")))?;
    let n = big_from_json(&parts[0])?;
    let d = big_from_json(&parts[1])?;
    if d.is_zero() {
        return Err(WitnessError::Invalid("zero denominator".into()));
    }
    Ok(Rat::new(n, d))
}

pub fn vec_to_json(qs: &[Rat]) -> Value {
    Value::Array(qs.iter().map(to_json).collect())
}

pub fn vec_from_json(v: &Value) -> Result<Vec<Rat>, WitnessError> {
    v.as_array()
        .ok_or_else(|| WitnessError::Invalid(format!("expected an array, found {v}")))?
        .iter()
        .map(from_json)
        .collect()
}

/// `a/b` as a short decimal-free string, e.g. `-3/4` or `2`.
pub fn show(q: &Rat) -> String {
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for q in [rat(3, 4), rat(-6, 8), int(0), int(7)] {
            assert_eq!(from_json(&to_json(&q)).unwrap(), q);
        }
        assert_eq!(to_json(&rat(-6, 8)).to_string(), "[-3,4]");
        let big = Rat::from_integer(BigInt::from(10).pow(30));
        assert_eq!(from_json(&to_json(&big)).unwrap(), big);
        assert!(from_json(&serde_json::json!([1, 0])).is_err());
        assert!(from_json(&serde_json::json!([1])).is_err());
    }
}
