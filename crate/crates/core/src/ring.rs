//! Polynomial-ring contexts: ordered lists of named variables.
//!
//! A ring carries no coefficient data; everything downstream works with
//! exponent vectors relative to a ring's variable order.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("empty variable name")]
    EmptyVariableName,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` appears in both rings; joins require disjoint variables")]
    NameCollision(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is missing from the target ring")]
    MissingVariable(String),
}

/// A polynomial ring `k[x_1, ..., x_n]`, identified by its ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRing", into = "RawRing")]
pub struct PolyRing {
    vars: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RawRing {
    vars: Vec<String>,
}

impl TryFrom<RawRing> for PolyRing {
    type Error = RingError;
    fn try_from(raw: RawRing) -> Result<Self, RingError> {
        PolyRing::new(raw.vars)
    }
}

impl From<PolyRing> for RawRing {
    fn from(ring: PolyRing) -> Self {
        RawRing { vars: ring.vars }
    }
}

impl PolyRing {
    /// Builds a ring from variable names. Names must be unique and non-empty.
    pub fn new<I, S>(vars: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(RingError::EmptyVariableName);
            }
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(PolyRing { vars })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Concatenates two rings with disjoint variable sets.
    pub fn join(&self, other: &PolyRing) -> Result<PolyRing, RingError> {
        if let Some(v) = self.vars.iter().find(|v| other.vars.contains(v)) {
            return Err(RingError::NameCollision(v.clone()));
        }
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        Ok(PolyRing { vars })
    }

    /// The ring with one variable removed, together with the removed index.
    pub fn without(&self, var: &str) -> Result<(PolyRing, usize), RingError> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| RingError::UnknownVariable(var.to_string()))?;
        let mut vars = self.vars.clone();
        vars.remove(idx);
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        Ok((PolyRing { vars }, idx))
    }

    /// For each of our variables, its position in `target`. Errors if one is missing.
    pub fn embedding_into(&self, target: &PolyRing) -> Result<Vec<usize>, RingError> {
        self.vars
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| RingError::MissingVariable(v.clone()))
            })
            .collect()
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert_eq!(
            PolyRing::new(["x", "x"]).unwrap_err(),
            RingError::DuplicateVariable("x".into())
        );
        assert_eq!(PolyRing::new(["", "y"]).unwrap_err(), RingError::EmptyVariableName);
        assert_eq!(PolyRing::new(Vec::<String>::new()).unwrap_err(), RingError::NoVariables);
    }

    #[test]
    fn join_requires_disjoint_names() {
        let a = PolyRing::new(["x"]).unwrap();
        let b = PolyRing::new(["y"]).unwrap();
        assert_eq!(a.join(&b).unwrap().vars(), &["x", "y"]);
        assert_eq!(a.join(&a).unwrap_err(), RingError::NameCollision("x".into()));
    }

    #[test]
    fn embedding_maps_by_name() {
        let small = PolyRing::new(["z", "x"]).unwrap();
        let big = PolyRing::new(["x", "y", "z"]).unwrap();
        assert_eq!(small.embedding_into(&big).unwrap(), vec![2, 0]);
        assert!(big.embedding_into(&small).is_err());
    }
}
