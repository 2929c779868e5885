//! Text and JSON forms of a pencil.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Pencil, PencilError};

fn parse_rational(s: &str) -> Result<BigRational, PencilError> {
    let s = s.trim();
    let bad = || PencilError::Parse(format!("invalid coefficient {s:?}"));
    let int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| bad());
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(PencilError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(int(n)?, d))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

/// Parses four comma-separated coefficients, degree 3 first, into an array
/// indexed by degree.
fn parse_coeffs<'a>(items: impl Iterator<Item = &'a str>) -> Result<[BigRational; 4], PencilError> {
    let mut v = items.map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    if v.len() != 4 {
        return Err(PencilError::Parse(format!(
            "expected 4 coefficients, found {}",
            v.len()
        )));
    }
    v.reverse();
    Ok(v.try_into().expect("length checked"))
}

impl FromStr for Pencil {
    type Err = PencilError;

    /// Parses `P=a3,a2,a1,a0;Q=b3,b2,b1,b0`, entries integers or `num/den`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p_part, q_part) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| PencilError::Parse("expected `P=...;Q=...`".into()))?;
        let field = |part: &str, name: &str| -> Result<[BigRational; 4], PencilError> {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| PencilError::Parse(format!("missing `{name}=`")))?;
            if !key.trim().eq_ignore_ascii_case(name) {
                return Err(PencilError::Parse(format!("expected `{name}=`, found `{}=`", key.trim())));
            }
            parse_coeffs(value.split(','))
        };
        Pencil::new(field(p_part, "P")?, field(q_part, "Q")?)
    }
}

/// JSON form: `{"a": [a3, a2, a1, a0], "b": [b3, b2, b1, b0]}` with string
/// entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl Pencil {
    pub fn to_json(&self) -> PencilJson {
        let conv = |v: &[BigRational; 4]| v.iter().rev().map(|c| c.to_string()).collect();
        PencilJson {
            a: conv(self.a()),
            b: conv(self.b()),
        }
    }

    pub fn from_json(json: &PencilJson) -> Result<Self, PencilError> {
        Pencil::new(
            parse_coeffs(json.a.iter().map(String::as_str))?,
            parse_coeffs(json.b.iter().map(String::as_str))?,
        )
    }

    pub fn from_json_str(s: &str) -> Result<Self, PencilError> {
        let json: PencilJson =
            serde_json::from_str(s).map_err(|e| PencilError::Parse(format!("invalid JSON: {e}")))?;
        Self::from_json(&json)
    }
}

/// Accepts the text form, an inline JSON object, or `@path` to a JSON file.
pub fn parse_pencil_spec(spec: &str) -> Result<Pencil, PencilError> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PencilError::Parse(format!("cannot read {path}: {e}")))?;
        return Pencil::from_json_str(&text);
    }
    if spec.starts_with('{') {
        return Pencil::from_json_str(spec);
    }
    spec.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in [
            "P=0,0,1,0;Q=1,0,0,1",
            "P=1,-53/16,37/16,0;Q=-1008/2405,5744/2405,0,-576/65",
        ] {
            let p: Pencil = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p: Pencil = "P=0,0,1,0;Q=1,0,0,1".parse().unwrap();
        assert_eq!(p, Pencil::from_ints([0, 1, 0, 0], [1, 0, 0, 1]).unwrap());
        let spaced: Pencil = " P = 0, 0, 2/4, 0 ; Q = 1,0,0,1 ".parse().unwrap();
        assert_eq!(spaced.to_string(), "P=0,0,1/2,0;Q=1,0,0,1");
    }

    #[test]
    fn malformed_specs() {
        for s in ["", "P=1,2,3;Q=1,2,3,4", "P=1,2,3,4", "P=a,0,0,0;Q=1,0,0,0", "P=1/0,0,0,0;Q=1,0,0,0", "X=1,0,0,0;Q=1,0,0,0"] {
            assert!(s.parse::<Pencil>().is_err(), "{s}");
        }
        assert_eq!("P=0,0,0,0;Q=1,0,0,0".parse::<Pencil>(), Err(PencilError::ZeroPolynomial));
    }

    #[test]
    fn json_forms() {
        let p = Pencil::from_ints([0, 1, 0, 0], [1, 0, 0, 1]).unwrap();
        let json = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(json, r#"{"a":["0","0","1","0"],"b":["1","0","0","1"]}"#);
        assert_eq!(parse_pencil_spec(&json).unwrap(), p);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pencil.json");
        std::fs::write(&path, &json).unwrap();
        assert_eq!(parse_pencil_spec(&format!("@{}", path.display())).unwrap(), p);
        assert!(parse_pencil_spec("@/nonexistent/pencil.json").is_err());
    }
}
