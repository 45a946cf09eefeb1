//! Monomial ideals and the arithmetic that needs no decomposition:
//! sums, products, powers, intersections, colons, saturation, radicals,
//! variable substitution and ring extension.
//!
//! Every ideal is kept in canonical form: its generators are the unique
//! antichain of minimal generators, sorted in the canonical monomial order.
//! The zero ideal has no generators; the unit ideal is generated by `1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::monomial::Monomial;
use crate::ring::{PolyRing, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("monomial has {got} exponents but ring {ring} has {want} variables")]
    ArityMismatch { got: usize, want: usize, ring: String },
    #[error("ideals live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("cannot saturate with respect to the zero ideal")]
    SaturateByZero,
    #[error("renaming is not injective: `{0}` assigned twice")]
    NonInjectiveRename(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A monomial ideal: a ring context plus the antichain of minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: PolyRing,
    gens: Vec<Monomial>,
}

/// Minimalizes a generator list: sorts canonically and drops every monomial
/// divisible by an earlier one. Idempotent and order-insensitive.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in gens {
        if m.is_one() {
            return vec![m];
        }
        if kept.iter().any(|k| k.divides(&m)) {
            continue;
        }
        kept.push(m);
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to minimal generators.
    pub fn new<I>(ring: PolyRing, gens: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let want = ring.num_vars();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.arity() != want {
                return Err(IdealError::ArityMismatch {
                    got: g.arity(),
                    want,
                    ring: ring.to_string(),
                });
            }
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize(gens),
        })
    }

    /// Convenience constructor from plain exponent rows.
    pub fn from_exps(ring: PolyRing, rows: &[&[u64]]) -> Result<Self, IdealError> {
        let gens: Vec<Monomial> = rows.iter().map(|r| Monomial::from_exps(r)).collect();
        MonomialIdeal::new(ring, gens)
    }

    pub fn zero(ring: PolyRing) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: PolyRing) -> Self {
        let n = ring.num_vars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(ring: PolyRing) -> Self {
        let n = ring.num_vars();
        let gens = (0..n)
            .map(|i| {
                let mut exps = vec![0u64; n];
                exps[i] = 1;
                Monomial::from_exps(&exps)
            })
            .collect();
        MonomialIdeal { ring, gens }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.ring != other.ring {
            return Err(IdealError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    fn check_arity(&self, m: &Monomial) -> Result<(), IdealError> {
        if m.arity() != self.ring.num_vars() {
            return Err(IdealError::ArityMismatch {
                got: m.arity(),
                want: self.ring.num_vars(),
                ring: self.ring.to_string(),
            });
        }
        Ok(())
    }

    /// Membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, IdealError> {
        self.check_arity(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &MonomialIdeal) -> Result<bool, IdealError> {
        self.check_same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.gens.iter().any(|h| h.divides(g))))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect::<Vec<_>>();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `self^n`; the zeroth power is the unit ideal.
    pub fn power(&self, n: u64) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::unit(self.ring.clone());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Intersection via pairwise lcms of minimal generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `self : m`, generated by `g / gcd(g, m)` over minimal generators `g`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        self.check_arity(m)?;
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `self : other = ∩_{m ∈ gens(other)} (self : m)`. The colon by the zero
    /// ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_same_ring(other)?;
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for m in &other.gens {
            acc = acc.intersect(&self.colon_monomial(m)?)?;
        }
        Ok(acc)
    }

    /// Iterated colon until stable: `self : other^∞`.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Err(IdealError::SaturateByZero);
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Generated by the squarefree parts of the minimal generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.squarefree_part()).collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// Sets one variable to 1: drops its exponent everywhere and minimalizes
    /// in the ring without that variable.
    pub fn substitute_one(&self, var: &str) -> Result<MonomialIdeal, IdealError> {
        let (small, idx) = self.ring.without(var)?;
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let mut exps: Vec<BigUint> = g.exponents().to_vec();
                exps.remove(idx);
                Monomial::new(exps)
            })
            .collect();
        Ok(MonomialIdeal {
            ring: small,
            gens: minimalize(gens),
        })
    }

    /// Sets every variable outside `support` to 1 and re-embeds into the same
    /// ring: the monomial localization at the prime on `support`.
    pub fn localize_at_support(&self, support: &[usize]) -> MonomialIdeal {
        let keep = |i: usize| support.contains(&i);
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let exps: Vec<BigUint> = g
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, e)| if keep(i) { e.clone() } else { BigUint::zero() })
                    .collect();
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// Relabels variables. The mapping must stay injective; unmapped names
    /// are kept. Variable positions do not change.
    pub fn rename(&self, mapping: &BTreeMap<String, String>) -> Result<MonomialIdeal, IdealError> {
        for old in mapping.keys() {
            if self.ring.var_index(old).is_none() {
                return Err(RingError::UnknownVariable(old.clone()).into());
            }
        }
        let new_vars: Vec<String> = self
            .ring
            .vars()
            .iter()
            .map(|v| mapping.get(v).cloned().unwrap_or_else(|| v.clone()))
            .collect();
        for (i, v) in new_vars.iter().enumerate() {
            if new_vars[..i].contains(v) {
                return Err(IdealError::NonInjectiveRename(v.clone()));
            }
        }
        let ring = PolyRing::new(new_vars)?;
        Ok(MonomialIdeal {
            ring,
            gens: self.gens.clone(),
        })
    }

    /// Re-expresses the ideal in a larger ring containing all our variables,
    /// padding exponent vectors with zeros at the new positions.
    pub fn extend_to(&self, target: &PolyRing) -> Result<MonomialIdeal, IdealError> {
        let map = self.ring.embedding_into(target)?;
        let n = target.num_vars();
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![BigUint::zero(); n];
                for (src, dst) in map.iter().enumerate() {
                    exps[*dst] = g.exponent(src).clone();
                }
                Monomial::new(exps)
            })
            .collect();
        // Minimal generators stay minimal under an embedding.
        let mut gens = gens;
        gens.sort();
        Ok(MonomialIdeal {
            ring: target.clone(),
            gens,
        })
    }

    /// Applies a per-variable index map into `target` (used by the glue
    /// operations, where distinct source variables may map to one target
    /// variable). Exponents landing on the same variable add up.
    pub fn map_into(&self, target: &PolyRing, index_map: &[usize]) -> Result<MonomialIdeal, IdealError> {
        assert_eq!(index_map.len(), self.ring.num_vars());
        let n = target.num_vars();
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![BigUint::zero(); n];
                for (src, dst) in index_map.iter().enumerate() {
                    exps[*dst] += g.exponent(src);
                }
                Monomial::new(exps)
            })
            .collect();
        Ok(MonomialIdeal {
            ring: target.clone(),
            gens: minimalize(gens),
        })
    }

    /// Smallest total degree among the minimal generators. `None` for the
    /// zero ideal.
    pub fn min_degree(&self) -> Option<BigUint> {
        self.gens.first().map(|g| g.total_degree())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(self.ring.vars())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars.iter().copied()).unwrap()
    }

    fn ideal(r: &PolyRing, rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(r.clone(), rows).unwrap()
    }

    #[test]
    fn normalize_drops_dominated_generators() {
        let r = ring(&["x"]);
        let i = ideal(&r, &[&[1], &[2]]);
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.gens()[0], Monomial::from_exps(&[1]));

        let r2 = ring(&["x", "y"]);
        let j = ideal(&r2, &[&[2, 1], &[1, 2], &[2, 2]]);
        assert_eq!(j, ideal(&r2, &[&[2, 1], &[1, 2]]));
    }

    #[test]
    fn normalize_handles_zero_and_unit() {
        let r = ring(&["x"]);
        assert!(ideal(&r, &[]).is_zero());
        let u = ideal(&r, &[&[0], &[3]]);
        assert!(u.is_unit());
        assert!(!u.is_proper());
    }

    #[test]
    fn normalize_is_idempotent_and_order_insensitive() {
        let r = ring(&["x", "y"]);
        let a = ideal(&r, &[&[2, 0], &[1, 1], &[0, 3]]);
        let b = ideal(&r, &[&[0, 3], &[2, 0], &[1, 1], &[2, 2]]);
        assert_eq!(a, b);
        let renorm = MonomialIdeal::new(r, a.gens().to_vec()).unwrap();
        assert_eq!(renorm, a);
    }

    #[test]
    fn sum_product_power() {
        let r = ring(&["x", "y"]);
        let xi = ideal(&r, &[&[1, 0]]);
        let yi = ideal(&r, &[&[0, 1]]);
        assert_eq!(xi.product(&yi).unwrap(), ideal(&r, &[&[1, 1]]));
        assert_eq!(
            ideal(&r, &[&[2, 0]]).sum(&ideal(&r, &[&[0, 3]])).unwrap(),
            ideal(&r, &[&[2, 0], &[0, 3]])
        );
        // (x^2, xy)^2 = (x^4, x^3 y, x^2 y^2)
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.power(2), ideal(&r, &[&[4, 0], &[3, 1], &[2, 2]]));
        assert!(i.power(0).is_unit());
        assert!(MonomialIdeal::zero(r.clone()).power(0).is_unit());
        assert!(MonomialIdeal::zero(r).power(3).is_zero());
    }

    #[test]
    fn intersect_examples() {
        let r = ring(&["x", "y"]);
        let a = ideal(&r, &[&[1, 0]]);
        let b = ideal(&r, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(&r, &[&[1, 1]]));
        // (x^2, y) ∩ (x, y^2) = (x^2, xy, y^2)
        let i = ideal(&r, &[&[2, 0], &[0, 1]]);
        let j = ideal(&r, &[&[1, 0], &[0, 2]]);
        assert_eq!(i.intersect(&j).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    /// Brute-force membership over a degree box, used as an oracle for the
    /// lcm formula on small examples.
    fn brute_member_intersection(i: &MonomialIdeal, j: &MonomialIdeal, m: &Monomial) -> bool {
        i.contains(m).unwrap() && j.contains(m).unwrap()
    }

    #[test]
    fn intersect_agrees_with_membership_oracle_on_box() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &[&[2, 0], &[0, 1]]);
        let j = ideal(&r, &[&[1, 0], &[0, 2]]);
        let meet = i.intersect(&j).unwrap();
        for a in 0..=3u64 {
            for b in 0..=3u64 {
                let m = Monomial::from_exps(&[a, b]);
                assert_eq!(
                    meet.contains(&m).unwrap(),
                    brute_member_intersection(&i, &j, &m),
                    "disagree at x^{a} y^{b}"
                );
            }
        }
    }

    #[test]
    fn colon_and_saturation() {
        let r = ring(&["x", "y"]);
        // (x^2 y) : (y) = (x^2)
        let i = ideal(&r, &[&[2, 1]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(i.colon(&y).unwrap(), ideal(&r, &[&[2, 0]]));
        // (x^2, xy) : (x) = (x, y)
        let i2 = ideal(&r, &[&[2, 0], &[1, 1]]);
        let x = ideal(&r, &[&[1, 0]]);
        assert_eq!(i2.colon(&x).unwrap(), ideal(&r, &[&[1, 0], &[0, 1]]));
        // saturate((x^2, xy), (y)) = (x)
        assert_eq!(i2.saturate(&y).unwrap(), ideal(&r, &[&[1, 0]]));
        // colon by zero ideal is the unit ideal; saturating by zero is an error
        assert!(i2.colon(&MonomialIdeal::zero(r.clone())).unwrap().is_unit());
        assert!(matches!(
            i2.saturate(&MonomialIdeal::zero(r)),
            Err(IdealError::SaturateByZero)
        ));
    }

    #[test]
    fn colon_agrees_with_membership_oracle_on_box() {
        // m ∈ I : J iff m*g ∈ I for every generator g of J.
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let j = ideal(&r, &[&[1, 0]]);
        let colon = i.colon(&j).unwrap();
        for a in 0..=2u64 {
            for b in 0..=2u64 {
                let m = Monomial::from_exps(&[a, b]);
                let oracle = j.gens().iter().all(|g| i.contains(&m.mul(g)).unwrap());
                assert_eq!(colon.contains(&m).unwrap(), oracle, "disagree at x^{a} y^{b}");
            }
        }
    }

    #[test]
    fn radical_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(ideal(&r, &[&[4, 0], &[3, 1]]).radical(), ideal(&r, &[&[1, 0]]));
        let r3 = ring(&["y", "z", "t"]);
        let j = ideal(&r3, &[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]);
        assert_eq!(j.radical(), ideal(&r3, &[&[1, 0, 0], &[0, 1, 0]]));
        let u = MonomialIdeal::unit(r);
        assert!(u.radical().is_unit());
    }

    #[test]
    fn membership_and_equality() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &[&[1, 1]]);
        assert!(i.contains(&Monomial::from_exps(&[2, 1])).unwrap());
        assert!(!ideal(&r, &[&[2, 0], &[0, 2]])
            .contains(&Monomial::from_exps(&[1, 1]))
            .unwrap());
        assert_eq!(ideal(&r, &[&[1, 0], &[0, 1]]), ideal(&r, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn extension_and_join() {
        let a = ring(&["x"]);
        let b = ring(&["y"]);
        let r = a.join(&b).unwrap();
        let i = ideal(&a, &[&[2]]);
        let ext = i.extend_to(&r).unwrap();
        assert_eq!(ext, ideal(&r, &[&[2, 0]]));
        // extensions of (x) and (y) into k[x,y]: intersection = product
        let xi = ideal(&a, &[&[1]]).extend_to(&r).unwrap();
        let yi = ideal(&b, &[&[1]]).extend_to(&r).unwrap();
        assert_eq!(xi.intersect(&yi).unwrap(), xi.product(&yi).unwrap());
    }

    #[test]
    fn substitution_and_rename() {
        let r = ring(&["x", "y"]);
        // (x^2 y, y^3) with y -> 1 becomes the unit ideal
        let i = ideal(&r, &[&[2, 1], &[0, 3]]);
        assert!(i.substitute_one("y").unwrap().is_unit());

        let r3 = ring(&["y", "z", "t"]);
        let j = ideal(&r3, &[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]);
        let jt = j.substitute_one("t").unwrap();
        let yz = ring(&["y", "z"]);
        assert_eq!(jt, ideal(&yz, &[&[1, 0], &[0, 1]]).power(4));

        let x = ring(&["x"]);
        let map: BTreeMap<String, String> = [("x".to_string(), "t".to_string())].into();
        let renamed = ideal(&x, &[&[1]]).rename(&map).unwrap();
        assert_eq!(renamed.ring().vars(), &["t"]);
        assert!(matches!(
            ideal(&r, &[&[1, 0]]).rename(&[("x".to_string(), "y".to_string())].into()),
            Err(IdealError::NonInjectiveRename(_))
        ));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring(&["x"]);
        let s = ring(&["y"]);
        let i = ideal(&r, &[&[1]]);
        let j = ideal(&s, &[&[1]]);
        assert!(matches!(i.sum(&j), Err(IdealError::RingMismatch { .. })));
    }
}
