//! Multigraded Betti tables over a chosen prime field.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::field::FieldSpec;
use crate::monomial::Monomial;

/// Finitely supported map `(homological index, multidegree) → count`.
///
/// Each table carries the field it was computed over. Comparing tables from
/// different characteristics is not an equality test but a question about
/// field dependence, so `PartialEq` is not implemented; use
/// [`BettiTable::try_eq`], which refuses mismatched characteristics.
#[derive(Debug, Clone)]
pub struct BettiTable {
    field: FieldSpec,
    entries: BTreeMap<(usize, Monomial), u64>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("cannot compare Betti tables over GF({left}) and GF({right})")]
pub struct FieldMismatch {
    pub left: u64,
    pub right: u64,
}

impl BettiTable {
    pub fn new(field: FieldSpec) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn insert(&mut self, i: usize, degree: Monomial, count: u64) {
        debug_assert!(count > 0);
        self.entries.insert((i, degree), count);
    }

    pub fn get(&self, i: usize, degree: &Monomial) -> u64 {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological index present.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Total Betti number in homological index `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, c)| c)
            .sum()
    }

    /// Coarsens to (i, total degree) with counts added up.
    pub fn graded(&self) -> BTreeMap<(usize, BigUint), u64> {
        let mut out: BTreeMap<(usize, BigUint), u64> = BTreeMap::new();
        for ((i, b), c) in &self.entries {
            *out.entry((*i, b.total_degree())).or_insert(0) += c;
        }
        out
    }

    pub fn try_eq(&self, other: &BettiTable) -> Result<bool, FieldMismatch> {
        if self.field != other.field {
            return Err(FieldMismatch {
                left: self.field.characteristic(),
                right: other.field.characteristic(),
            });
        }
        Ok(self.entries == other.entries)
    }

    /// `{"characteristic": p, "entries": [[i, [b...], count], ...]}` with
    /// entries in canonical order.
    pub fn to_json(&self) -> String {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, b), c)| {
                let degree: Vec<serde_json::Value> = b
                    .exponents()
                    .iter()
                    .map(|e| {
                        serde_json::Value::Number(
                            serde_json::Number::from_str(&e.to_string()).expect("integer"),
                        )
                    })
                    .collect();
                serde_json::json!([i, degree, c])
            })
            .collect();
        serde_json::json!({
            "characteristic": self.field.characteristic(),
            "entries": entries,
        })
        .to_string()
    }

    /// The usual triangular display: columns are homological indices, row
    /// `r` collects entries of total degree `r + i`.
    pub fn pretty(&self) -> String {
        if self.entries.is_empty() {
            return "empty Betti table\n".to_string();
        }
        let graded = self.graded();
        let pd = self.pd().unwrap();
        let mut min_row: Option<i128> = None;
        let mut max_row: Option<i128> = None;
        let mut cells: BTreeMap<(i128, usize), u64> = BTreeMap::new();
        for ((i, deg), c) in &graded {
            let deg: i128 = deg.to_string().parse().unwrap_or(i128::MAX);
            let row = deg - *i as i128;
            min_row = Some(min_row.map_or(row, |m| m.min(row)));
            max_row = Some(max_row.map_or(row, |m| m.max(row)));
            *cells.entry((row, *i)).or_insert(0) += c;
        }
        let (lo, hi) = (min_row.unwrap(), max_row.unwrap());
        let mut out = String::new();
        out.push_str("       ");
        for i in 0..=pd {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        out.push_str("total: ");
        for i in 0..=pd {
            out.push_str(&format!("{:>6}", self.total(i)));
        }
        out.push('\n');
        for row in lo..=hi {
            out.push_str(&format!("{row:>5}: "));
            for i in 0..=pd {
                match cells.get(&(row, i)) {
                    Some(c) => out.push_str(&format!("{c:>6}")),
                    None => out.push_str(&format!("{:>6}", ".")),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_characteristic_comparison_is_refused() {
        let a = BettiTable::new(FieldSpec::new(2).unwrap());
        let b = BettiTable::new(FieldSpec::new(32003).unwrap());
        assert!(a.try_eq(&b).is_err());
        assert!(a.try_eq(&a.clone()).unwrap());
    }

    #[test]
    fn pd_and_totals() {
        let mut t = BettiTable::new(FieldSpec::default_field());
        t.insert(0, Monomial::from_exps(&[1, 0]), 1);
        t.insert(0, Monomial::from_exps(&[0, 1]), 1);
        t.insert(1, Monomial::from_exps(&[1, 1]), 1);
        assert_eq!(t.pd(), Some(1));
        assert_eq!(t.total(0), 2);
        assert_eq!(t.total(1), 1);
        assert!(t.to_json().contains("\"characteristic\":32003"));
    }
}
