//! The ideal interchange format and plain-text printing.
//!
//! An ideal file looks like
//! `{"ring":{"vars":["x","y","z"]},"gens":[[4,0,0],[3,1,0]]}`:
//! each generator is an exponent vector in ring order. Emission is
//! deterministic (canonical generator order, compact encoding), so a parsed
//! file re-serializes byte-identically once normalized.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::PolyRing;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid ideal JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("generator {index}: `{value}` is not a non-negative integer exponent")]
    BadExponent { index: usize, value: String },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Ring(#[from] crate::ring::RingError),
}

#[derive(Serialize, Deserialize)]
struct IdealDto {
    ring: RingDto,
    gens: Vec<Vec<Number>>,
}

#[derive(Serialize, Deserialize)]
struct RingDto {
    vars: Vec<String>,
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, IoError> {
    let dto: IdealDto = serde_json::from_str(text)?;
    let ring = PolyRing::new(dto.ring.vars)?;
    let mut gens = Vec::with_capacity(dto.gens.len());
    for (index, row) in dto.gens.iter().enumerate() {
        let mut exps = Vec::with_capacity(row.len());
        for n in row {
            let digits = n.to_string();
            let e = BigUint::from_str(&digits).map_err(|_| IoError::BadExponent {
                index,
                value: digits.clone(),
            })?;
            exps.push(e);
        }
        gens.push(Monomial::new(exps));
    }
    Ok(MonomialIdeal::new(ring, gens)?)
}

pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    let dto = IdealDto {
        ring: RingDto {
            vars: ideal.ring().vars().to_vec(),
        },
        gens: ideal
            .gens()
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .map(|e| Number::from_str(&e.to_string()).expect("integer literal"))
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&dto).expect("ideal serialization cannot fail")
}

/// Macaulay2-compatible plain text, e.g. `ideal(x^4, x^3*y)`.
pub fn print_ideal_m2(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "ideal(0)".to_string();
    }
    let vars = ideal.ring().vars();
    let parts: Vec<String> = ideal.gens().iter().map(|g| g.display(vars)).collect();
    format!("ideal({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let text = r#"{"ring":{"vars":["x","y","z"]},"gens":[[4,0,0],[3,1,0]]}"#;
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(print_ideal(&ideal), text);
    }

    #[test]
    fn parse_normalizes_generators() {
        let text = r#"{"ring":{"vars":["x"]},"gens":[[2],[1]]}"#;
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(print_ideal(&ideal), r#"{"ring":{"vars":["x"]},"gens":[[1]]}"#);
    }

    #[test]
    fn rejects_negative_and_fractional_exponents() {
        assert!(parse_ideal(r#"{"ring":{"vars":["x"]},"gens":[[-1]]}"#).is_err());
        assert!(parse_ideal(r#"{"ring":{"vars":["x"]},"gens":[[1.5]]}"#).is_err());
    }

    #[test]
    fn huge_exponents_survive() {
        let text = r#"{"ring":{"vars":["x"]},"gens":[[123456789012345678901234567890]]}"#;
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(print_ideal(&ideal), text);
    }

    #[test]
    fn m2_printing() {
        let text = r#"{"ring":{"vars":["x","y"]},"gens":[[4,0],[3,1]]}"#;
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(print_ideal_m2(&ideal), "ideal(x^4, x^3*y)");
        let zero = parse_ideal(r#"{"ring":{"vars":["x"]},"gens":[]}"#).unwrap();
        assert_eq!(print_ideal_m2(&zero), "ideal(0)");
        let unit = parse_ideal(r#"{"ring":{"vars":["x"]},"gens":[[0]]}"#).unwrap();
        assert_eq!(print_ideal_m2(&unit), "ideal(1)");
    }
}
