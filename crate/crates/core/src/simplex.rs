//! A small exact simplex solver over arbitrary-precision rationals.
//!
//! Two-phase dense tableau method with Bland's anti-cycling rule. Problem
//! sizes here are tiny (one constraint per minimal prime, or one variable
//! per generator), so clarity and exactness win over sparsity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, relation: Relation, rhs: Rat) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    /// Minimum value and an attaining point.
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // m rows of length ncols + 1, rhs last
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rat {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `costs · x` from the current basic feasible solution with
    /// Bland's rule. `allowed` masks the columns that may enter. `Err` means
    /// unbounded.
    fn optimize(&mut self, costs: &[Rat], allowed: &[bool]) -> Result<(), ()> {
        loop {
            let mut entering = None;
            for j in 0..self.ncols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                // reduced cost r_j = c_j - c_B · column_j
                let mut rj = costs[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() && !costs[self.basis[i]].is_zero() {
                        rj -= &costs[self.basis[i]] * &row[j];
                    }
                }
                if rj.is_negative() {
                    entering = Some(j);
                    break; // Bland: smallest improving index enters
                }
            }
            let Some(c) = entering else {
                return Ok(());
            };
            // ratio test; ties broken by smallest basis variable index
            let mut leave: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = self.rhs(i) / &row[c];
                    let better = match &leave {
                        None => true,
                        Some((best, best_ratio)) => {
                            ratio < *best_ratio
                                || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Err(());
            };
            self.pivot(r, c);
        }
    }

    fn objective_value(&self, costs: &[Rat]) -> Rat {
        let mut v = Rat::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if !costs[b].is_zero() {
                v += &costs[b] * self.rhs(i);
            }
        }
        v
    }
}

/// Minimizes `objective · x` subject to the constraints and `x ≥ 0`.
pub fn solve_min(objective: &[Rat], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    let m = constraints.len();
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == n));

    // Normalize rows to non-negative right-hand sides.
    let mut normalized: Vec<(Vec<Rat>, Relation, Rat)> = constraints
        .iter()
        .map(|c| {
            if c.rhs.is_negative() {
                let coeffs = c.coeffs.iter().map(|a| -a).collect();
                let relation = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (coeffs, relation, -&c.rhs)
            } else {
                (c.coeffs.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();

    let n_slack = normalized.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
    let n_art = normalized.iter().filter(|(_, rel, _)| *rel != Relation::Le).count();
    let ncols = n + n_slack + n_art;

    let mut tableau = Tableau {
        rows: Vec::with_capacity(m),
        basis: vec![usize::MAX; m],
        ncols,
    };
    let mut next_slack = n;
    let mut next_art = n + n_slack;
    for (i, (coeffs, relation, rhs)) in normalized.drain(..).enumerate() {
        let mut row = vec![Rat::zero(); ncols + 1];
        row[..n].clone_from_slice(&coeffs);
        row[ncols] = rhs;
        match relation {
            Relation::Le => {
                row[next_slack] = Rat::one();
                tableau.basis[i] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rat::one();
                next_slack += 1;
                row[next_art] = Rat::one();
                tableau.basis[i] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rat::one();
                tableau.basis[i] = next_art;
                next_art += 1;
            }
        }
        tableau.rows.push(row);
    }
    let art_start = n + n_slack;

    // Phase 1: drive the artificial variables to zero.
    if n_art > 0 {
        let mut costs = vec![Rat::zero(); ncols];
        for c in costs.iter_mut().skip(art_start) {
            *c = Rat::one();
        }
        let allowed = vec![true; ncols];
        tableau
            .optimize(&costs, &allowed)
            .expect("phase 1 is bounded below by zero");
        if !tableau.objective_value(&costs).is_zero() {
            return LpOutcome::Infeasible;
        }
        // Pivot leftover basic artificials out, or drop redundant rows.
        let mut r = 0;
        while r < tableau.rows.len() {
            if tableau.basis[r] >= art_start {
                match (0..art_start).find(|&j| !tableau.rows[r][j].is_zero()) {
                    Some(c) => tableau.pivot(r, c),
                    None => {
                        tableau.rows.remove(r);
                        tableau.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // Phase 2: artificial columns may no longer enter.
    let mut costs = vec![Rat::zero(); ncols];
    costs[..n].clone_from_slice(objective);
    let mut allowed = vec![true; ncols];
    for a in allowed.iter_mut().skip(art_start) {
        *a = false;
    }
    if tableau.optimize(&costs, &allowed).is_err() {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![Rat::zero(); n];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            point[b] = tableau.rhs(i).clone();
        }
    }
    LpOutcome::Optimal {
        value: tableau.objective_value(&costs),
        point,
    }
}

/// Pure feasibility of `constraints` with `x ≥ 0`.
pub fn is_feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    let objective = vec![Rat::zero(); num_vars];
    !matches!(solve_min(&objective, constraints), LpOutcome::Infeasible)
}
