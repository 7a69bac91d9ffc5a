use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

/// Scalar field of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rational,
}

impl FieldTag {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "gf2" | "GF2" | "GF(2)" => Some(FieldTag::Gf2),
            "q" | "Q" | "rational" | "rationals" => Some(FieldTag::Rational),
            _ => None,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            FieldTag::Gf2 => "gf2",
            FieldTag::Rational => "q",
        }
    }

    /// Canonical representative of `x` in this field: `0` or `1` over GF(2).
    /// `None` when `x` has no image (an even denominator over GF(2)).
    pub fn reduce(self, x: &BigRational) -> Option<BigRational> {
        match self {
            FieldTag::Rational => Some(x.clone()),
            FieldTag::Gf2 => {
                let two = BigInt::from(2);
                if (x.denom() % &two).is_zero() {
                    return None;
                }
                let odd = !(x.numer() % &two).is_zero();
                Some(if odd { BigRational::one() } else { BigRational::zero() })
            }
        }
    }
}

/// Parses `"3"`, `"-2/5"` or a JSON integer into an exact rational.
pub fn parse_scalar(v: &serde_json::Value) -> Option<BigRational> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())),
        serde_json::Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p.trim().parse().ok()?;
                    let q: BigInt = q.trim().parse().ok()?;
                    (!q.is_zero()).then(|| BigRational::new(p, q))
                }
                None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn scalars_reduce_mod_two() {
        let half = parse_scalar(&json!("1/2")).unwrap();
        assert_eq!(FieldTag::Gf2.reduce(&half), None);
        let x = parse_scalar(&json!("-3/5")).unwrap();
        assert_eq!(FieldTag::Gf2.reduce(&x), Some(BigRational::one()));
        assert_eq!(FieldTag::Gf2.reduce(&parse_scalar(&json!(4)).unwrap()), Some(BigRational::zero()));
        assert_eq!(FieldTag::Rational.reduce(&x), Some(x.clone()));
        assert!(parse_scalar(&json!("1/0")).is_none());
    }
}
