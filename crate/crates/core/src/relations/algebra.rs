//! Relations linear in the e_i with coefficients in R[xi_0].
//!
//! A relation sum_j c_j e_j + c = 0 is checked symbolically by squaring and
//! multiplying by u_m: sum_j c_j^2 (u_m e_j^2) + u_m c^2 = 0, where u_m e_j^2
//! is an explicit element of R[xi_0]. Slot 0 always means xi_0 here.

use crate::error::{Error, Result};
use crate::invariants::{InvariantSet, SymbolicTower};
use crate::ring::Poly;
use crate::xialg::{Slot0, XiPoly};

#[derive(Clone, Debug)]
pub struct LinearRelation {
    pub name: String,
    /// (c_j, j) pairs.
    pub terms: Vec<(XiPoly, usize)>,
    pub constant: XiPoly,
}

impl LinearRelation {
    pub fn new(name: impl Into<String>, terms: Vec<(XiPoly, usize)>, constant: XiPoly) -> Self {
        LinearRelation { name: name.into(), terms, constant }
    }

    /// sum_j c_j^2 u e_j^2 + u c^2; zero iff the relation holds.
    pub fn symbolic_residual(&self, tower: &SymbolicTower) -> Result<XiPoly> {
        let mut acc = &tower.u * &self.constant.pow2k(1);
        for (c, j) in &self.terms {
            let e = tower.e_sq.get(*j).filter(|_| *j >= 1).ok_or(Error::IndexOutOfRange { what: "e index", index: *j as i64 })?;
            acc = &acc + &(&c.pow2k(1) * e);
        }
        Ok(acc)
    }

    /// sum_j c_j e_j + c evaluated in S_m[z].
    pub fn s_residual(&self, set: &InvariantSet) -> Result<Poly> {
        let mut ev = set.evaluator(Slot0::Xi0)?;
        let mut acc = ev.eval(&self.constant)?;
        for (c, j) in &self.terms {
            let t = ev.eval(c)?.mul_within(set.e(*j)?, set.budget())?;
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

/// The P in R with sum_j c_j e_j = P, certified by: u sum c_j^2 e_j^2 is free
/// of xi_0, divisible by u, and a square with all indices at most `k_max`.
pub fn extract_remainder(tower: &SymbolicTower, terms: &[(XiPoly, usize)], k_max: usize) -> Result<XiPoly> {
    let field = tower.field;
    let x = LinearRelation::new("", terms.to_vec(), XiPoly::zero(field)).symbolic_residual(tower)?;
    if x.uses_xibar() {
        return Err(Error::Consistency("combination of e's has a xi_0 component".into()));
    }
    let p_sq = x.div_exact(&tower.u)?.ok_or_else(|| Error::Consistency("u_m does not divide the squared combination".into()))?;
    let p = p_sq.sqrt()?;
    if p.max_index() > k_max {
        return Err(Error::Consistency(format!("remainder involves xi_{} beyond xi_{k_max}", p.max_index())));
    }
    Ok(p)
}
