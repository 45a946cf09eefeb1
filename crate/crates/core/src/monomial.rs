//! Monomials as exponent vectors with arbitrary-precision entries.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An exponent vector. The ring it lives in is tracked by the surrounding
/// ideal; a bare monomial only knows its arity.
///
/// The canonical order is graded: total degree first, then reverse
/// lexicographic comparison of exponent vectors, so that within one degree
/// `x^2` sorts before `x*y` before `y^2`. All generator lists are stored and
/// printed in this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<BigUint>,
}

impl Monomial {
    pub fn new(exps: Vec<BigUint>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![BigUint::zero(); n],
        }
    }

    pub fn from_exps(exps: &[u64]) -> Self {
        Monomial {
            exps: exps.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> &BigUint {
        &self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn total_degree(&self) -> BigUint {
        self.exps.iter().sum()
    }

    /// Indices of variables that appear with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `<=`, the divisibility order.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self / x_i` when `x_i` divides `self`.
    pub fn divide_by_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i].is_zero() {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= BigUint::one();
        Some(Monomial { exps })
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|e| if e.is_zero() { BigUint::zero() } else { BigUint::one() })
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|e| *e <= BigUint::one())
    }

    /// True when exactly one variable appears.
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|e| !e.is_zero()).count() == 1
    }

    pub fn is_variable(&self) -> bool {
        self.is_pure_power() && self.exps.iter().all(|e| *e <= BigUint::one())
    }

    /// Renders `self` against variable names, e.g. `x^2*y`.
    pub fn display(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (name, e) in vars.iter().zip(&self.exps) {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
