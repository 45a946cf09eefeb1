//! Irreducible decomposition, associated and minimal primes, dimension,
//! and symbolic powers of monomial ideals.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal};
use crate::monomial::Monomial;
use crate::report::{Check, VerificationReport};
use crate::ring::PolyRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("the zero ideal has no decomposition data")]
    ZeroIdeal,
    #[error("the unit ideal has no decomposition data")]
    UnitIdeal,
    #[error("symbolic powers need n >= 1, got {0}")]
    BadSymbolicExponent(u64),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A monomial prime: the ideal generated by a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: PolyRing,
    support: Vec<usize>,
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.support.len().cmp(&other.support.len()))
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl MonomialPrime {
    pub fn new(ring: PolyRing, mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        debug_assert!(support.iter().all(|&i| i < ring.num_vars()));
        MonomialPrime { ring, support }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    pub fn is_maximal(&self) -> bool {
        self.support.len() == self.ring.num_vars()
    }

    pub fn var_names(&self) -> Vec<String> {
        self.support.iter().map(|&i| self.ring.vars()[i].clone()).collect()
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        let gens = self.support.iter().map(|&i| {
            let mut exps = vec![0u64; n];
            exps[i] = 1;
            Monomial::from_exps(&exps)
        });
        MonomialIdeal::new(self.ring.clone(), gens).expect("prime generators are valid")
    }
}

impl std::fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.var_names().join(","))
    }
}

/// An irreducible monomial ideal: pure powers of a subset of the variables,
/// `(x_{i_1}^{a_1}, ..., x_{i_k}^{a_k})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    ring: PolyRing,
    pure_powers: BTreeMap<usize, BigUint>,
}

impl IrreducibleComponent {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, BigUint> {
        &self.pure_powers
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        let gens = self.pure_powers.iter().map(|(&i, e)| {
            let mut exps = vec![BigUint::zero(); n];
            exps[i] = e.clone();
            Monomial::new(exps)
        });
        MonomialIdeal::new(self.ring.clone(), gens).expect("component generators are valid")
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.ring.clone(), self.pure_powers.keys().copied().collect())
    }
}

fn ensure_proper_nonzero(ideal: &MonomialIdeal) -> Result<(), DecompError> {
    if ideal.is_zero() {
        return Err(DecompError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(DecompError::UnitIdeal);
    }
    Ok(())
}

/// Splits until every generator is a pure power. The pivot is the first
/// non-pure-power generator in canonical order; it factors as
/// `u = x_i^{e_i}` (smallest variable index) times the coprime rest `v`,
/// and `(G, uv) = (G, u) ∩ (G, v)`.
fn split_to_irreducibles(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, Vec<Vec<Monomial>>>,
) -> Vec<Vec<Monomial>> {
    if let Some(found) = memo.get(ideal.gens()) {
        return found.clone();
    }
    let pivot = ideal.gens().iter().find(|g| !g.is_pure_power() && !g.is_one());
    let result = match pivot {
        None => vec![ideal.gens().to_vec()],
        Some(g) => {
            let i = g
                .exponents()
                .iter()
                .position(|e| !e.is_zero())
                .expect("non-unit generator has support");
            let n = ideal.ring().num_vars();
            let mut u_exps = vec![BigUint::zero(); n];
            u_exps[i] = g.exponent(i).clone();
            let u = Monomial::new(u_exps);
            let v = g.checked_div(&u).expect("u divides g");
            let rest: Vec<Monomial> = ideal.gens().iter().filter(|h| *h != g).cloned().collect();
            let mut out = Vec::new();
            for piece in [u, v] {
                let mut gens = rest.clone();
                gens.push(piece);
                let sub = MonomialIdeal::new(ideal.ring().clone(), gens).expect("same ring");
                out.extend(split_to_irreducibles(&sub, memo));
            }
            out
        }
    };
    memo.insert(ideal.gens().to_vec(), result.clone());
    result
}

/// An irredundant irreducible decomposition. The intersection of the returned
/// components equals the input, and no component contains another.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>, DecompError> {
    ensure_proper_nonzero(ideal)?;
    let mut memo = HashMap::new();
    let raw = split_to_irreducibles(ideal, &mut memo);

    let mut components: Vec<IrreducibleComponent> = raw
        .into_iter()
        .map(|gens| {
            let mut pure_powers = BTreeMap::new();
            for g in gens {
                let i = g
                    .exponents()
                    .iter()
                    .position(|e| !e.is_zero())
                    .expect("pure power has support");
                let e = g.exponent(i).clone();
                // A generator list may repeat a variable; the minimal power wins.
                pure_powers
                    .entry(i)
                    .and_modify(|cur: &mut BigUint| {
                        if e < *cur {
                            *cur = e.clone();
                        }
                    })
                    .or_insert(e);
            }
            IrreducibleComponent {
                ring: ideal.ring().clone(),
                pure_powers,
            }
        })
        .collect();

    components.sort();
    components.dedup();

    // Irredundancy: drop any component containing another one. Irreducible
    // monomial ideals are intersection-prime, so the pairwise sweep suffices.
    let ideals: Vec<MonomialIdeal> = components.iter().map(|c| c.as_ideal()).collect();
    let mut keep = vec![true; components.len()];
    for i in 0..components.len() {
        for j in 0..components.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            // ideals[j] ⊆ ideals[i] makes i redundant
            if ideals[i].includes(&ideals[j]).expect("same ring") {
                keep[i] = false;
            }
        }
    }
    Ok(components
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect())
}

/// Associated primes: the radicals of the components of an irredundant
/// irreducible decomposition.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>, DecompError> {
    let comps = irreducible_decomposition(ideal)?;
    let mut primes: Vec<MonomialPrime> = comps.iter().map(|c| c.radical()).collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Inclusion-minimal associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>, DecompError> {
    let primes = associated_primes(ideal)?;
    let minimal: Vec<MonomialPrime> = primes
        .iter()
        .filter(|p| {
            !primes
                .iter()
                .any(|q| q != *p && q.support().iter().all(|i| p.contains_var(*i)))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize, DecompError> {
    let min = minimal_primes(ideal)?;
    Ok(min.iter().map(|p| p.height()).min().expect("proper ideal has a prime"))
}

pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize, DecompError> {
    Ok(ideal.ring().num_vars() - height(ideal)?)
}

/// The primary components of `ideal` at its minimal primes: for each minimal
/// prime, the intersection of the irreducible components with that radical.
pub fn minimal_primary_components(ideal: &MonomialIdeal) -> Result<Vec<(MonomialPrime, MonomialIdeal)>, DecompError> {
    let comps = irreducible_decomposition(ideal)?;
    let minimal = minimal_primes(ideal)?;
    let mut out = Vec::new();
    for p in minimal {
        let mut primary = MonomialIdeal::unit(ideal.ring().clone());
        for c in comps.iter().filter(|c| c.radical() == p) {
            primary = primary.intersect(&c.as_ideal())?;
        }
        out.push((p, primary));
    }
    Ok(out)
}

/// The n-th symbolic power: the intersection over minimal primes of the
/// monomial localizations of `ideal^n` (variables outside the prime's
/// support set to 1, then re-embedded).
pub fn symbolic_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal, DecompError> {
    ensure_proper_nonzero(ideal)?;
    if n == 0 {
        return Err(DecompError::BadSymbolicExponent(0));
    }
    let minimal = minimal_primes(ideal)?;
    let power = ideal.power(n);
    let mut result = MonomialIdeal::unit(ideal.ring().clone());
    for p in &minimal {
        result = result.intersect(&power.localize_at_support(p.support()))?;
    }
    Ok(result)
}

/// Associated primes of `ideal^n`.
pub fn ass_of_power(ideal: &MonomialIdeal, n: u64) -> Result<Vec<MonomialPrime>, DecompError> {
    ensure_proper_nonzero(ideal)?;
    if n == 0 {
        return Err(DecompError::BadSymbolicExponent(0));
    }
    associated_primes(&ideal.power(n))
}

/// Checks that the associated (and minimal) primes of `R/(I+J)` in the joined
/// ring are exactly the pairwise sums of the associated (minimal) primes of
/// `A/I` and `B/J`.
pub fn verify_ass_sum(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<VerificationReport, DecompError> {
    ensure_proper_nonzero(i)?;
    ensure_proper_nonzero(j)?;
    let joined = i.ring().join(j.ring()).map_err(IdealError::from)?;
    let ie = i.extend_to(&joined)?;
    let je = j.extend_to(&joined)?;
    let sum = ie.sum(&je)?;

    let mut report = VerificationReport::new(
        "ass-sum",
        &[&crate::io::print_ideal(i), &crate::io::print_ideal(j)],
    );

    let embed = |p: &MonomialPrime, offset_ring: &PolyRing| -> Vec<usize> {
        let map = offset_ring.embedding_into(&joined).expect("joined contains factors");
        p.support().iter().map(|&k| map[k]).collect()
    };

    for (label, direct, left, right) in [
        (
            "ass(R/(I+J)) = pairwise sums of ass",
            associated_primes(&sum)?,
            associated_primes(i)?,
            associated_primes(j)?,
        ),
        (
            "min(R/(I+J)) = pairwise sums of min",
            minimal_primes(&sum)?,
            minimal_primes(i)?,
            minimal_primes(j)?,
        ),
    ] {
        let mut predicted: Vec<MonomialPrime> = Vec::new();
        for p in &left {
            for q in &right {
                let mut support = embed(p, i.ring());
                support.extend(embed(q, j.ring()));
                predicted.push(MonomialPrime::new(joined.clone(), support));
            }
        }
        predicted.sort();
        predicted.dedup();
        let passed = predicted == direct;
        let fmt = |v: &[MonomialPrime]| {
            v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut check = Check::comparison(label, fmt(&direct), fmt(&predicted), passed);
        if !passed {
            let missing: Vec<String> = direct
                .iter()
                .filter(|p| !predicted.contains(p))
                .chain(predicted.iter().filter(|p| !direct.contains(p)))
                .map(|p| p.to_string())
                .collect();
            check = check.with_witness(missing.join(" "));
        }
        report.push(check);
    }
    Ok(report)
}
