//! Subquotient modules `U/V` of the ring, presented by pairs of monomial
//! ideals with `V ⊆ U`. The multigraded piece at `b` is one-dimensional when
//! `x^b ∈ U \ V` and zero otherwise.

use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal};
use crate::ring::PolyRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("module numerator and denominator live in different rings")]
    RingMismatch,
    #[error("V is not contained in U: witness generator {witness}")]
    NotContained { witness: String },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialModule {
    u: MonomialIdeal,
    v: MonomialIdeal,
}

impl MonomialModule {
    pub fn new(u: MonomialIdeal, v: MonomialIdeal) -> Result<Self, ModuleError> {
        if u.ring() != v.ring() {
            return Err(ModuleError::RingMismatch);
        }
        if let Some(bad) = v.gens().iter().find(|g| !u.contains(g).expect("same ring")) {
            return Err(ModuleError::NotContained {
                witness: bad.display(u.ring().vars()),
            });
        }
        Ok(MonomialModule { u, v })
    }

    /// The ideal `I` viewed as a module: `I/0`.
    pub fn from_ideal(i: MonomialIdeal) -> Self {
        let v = MonomialIdeal::zero(i.ring().clone());
        MonomialModule { u: i, v }
    }

    /// The quotient ring `S/I` viewed as a module: `(1)/I`.
    pub fn quotient(i: MonomialIdeal) -> Self {
        let u = MonomialIdeal::unit(i.ring().clone());
        MonomialModule { u, v: i }
    }

    pub fn u(&self) -> &MonomialIdeal {
        &self.u
    }

    pub fn v(&self) -> &MonomialIdeal {
        &self.v
    }

    pub fn ring(&self) -> &PolyRing {
        self.u.ring()
    }

    pub fn is_zero_module(&self) -> bool {
        self.u == self.v
    }

    /// Annihilator `V : U`.
    pub fn annihilator(&self) -> MonomialIdeal {
        self.v.colon(&self.u).expect("same ring")
    }
}

/// The tensor product of modules over rings in disjoint variables, realized
/// inside the joined ring as `(U·U') / (U·V' + V·U')`.
pub fn tensor_disjoint(a: &MonomialModule, b: &MonomialModule) -> Result<MonomialModule, ModuleError> {
    let joined = a.ring().join(b.ring()).map_err(IdealError::from)?;
    let ua = a.u().extend_to(&joined)?;
    let va = a.v().extend_to(&joined)?;
    let ub = b.u().extend_to(&joined)?;
    let vb = b.v().extend_to(&joined)?;
    let u = ua.product(&ub)?;
    let v = ua.product(&vb)?.sum(&va.product(&ub)?)?;
    MonomialModule::new(u, v)
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
    fn containment_is_checked() {
        let r = ring(&["x", "y"]);
        let u = ideal(&r, &[&[2, 0]]);
        let v = ideal(&r, &[&[1, 0]]);
        assert!(MonomialModule::new(v.clone(), u.clone()).is_ok());
        assert!(matches!(
            MonomialModule::new(u, v),
            Err(ModuleError::NotContained { .. })
        ));
    }

    #[test]
    fn zero_module_detection() {
        let r = ring(&["x"]);
        let i = ideal(&r, &[&[2]]);
        assert!(MonomialModule::new(i.clone(), i).unwrap().is_zero_module());
    }

    #[test]
    fn tensor_of_shifted_points() {
        // (x)/(x^2) ⊗ (y)/(y^2) = (xy)/(x^2 y, x y^2)
        let a = ring(&["x"]);
        let b = ring(&["y"]);
        let ma = MonomialModule::new(ideal(&a, &[&[1]]), ideal(&a, &[&[2]])).unwrap();
        let mb = MonomialModule::new(ideal(&b, &[&[1]]), ideal(&b, &[&[2]])).unwrap();
        let t = tensor_disjoint(&ma, &mb).unwrap();
        let r = a.join(&b).unwrap();
        assert_eq!(t.u(), &ideal(&r, &[&[1, 1]]));
        assert_eq!(t.v(), &ideal(&r, &[&[2, 1], &[1, 2]]));
    }

    #[test]
    fn annihilator_of_quotient() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let m = MonomialModule::quotient(i.clone());
        assert_eq!(m.annihilator(), i);
    }
}
