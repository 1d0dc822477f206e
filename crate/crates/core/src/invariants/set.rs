//! All invariants for one (m, q), built lazily.
//!
//! The xi-algebra members are always available. Members of S_m[z] whose
//! construction passes the term budget report `BudgetExceeded` instead.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::invariants::{dickson_full_all_within, u_full, xi, SymbolicTower};
use crate::ring::{MonomialOrder, Poly, Ring};
use crate::steenrod::steenrod_k;
use crate::xialg::{PTable, Slot0, XiEvaluator, XiPoly};

/// Default cap on the number of terms in any intermediate polynomial.
pub const DEFAULT_TERM_BUDGET: usize = 3_000_000;

/// e_i and the z-free part b_i of its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPair {
    pub e: Poly,
    pub b: Poly,
}

pub struct InvariantSet {
    m: usize,
    field: Field,
    ring: Ring,
    budget: usize,
    sym: SymbolicTower,
    xi: Vec<Poly>,
    ptable: OnceLock<Result<PTable>>,
    dickson: OnceLock<Result<Vec<Poly>>>,
    u: OnceLock<Result<Poly>>,
    u_prev: OnceLock<Result<Poly>>,
    ud_bar: OnceLock<Result<Vec<Poly>>>,
    e: OnceLock<Result<Vec<EPair>>>,
}

impl std::fmt::Debug for InvariantSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InvariantSet").field("m", &self.m).field("q", &self.field.q()).finish()
    }
}

impl InvariantSet {
    pub fn new(m: usize, field: Field) -> Result<Self> {
        Self::with_budget(m, field, DEFAULT_TERM_BUDGET)
    }

    pub fn with_budget(m: usize, field: Field, budget: usize) -> Result<Self> {
        let ring = Ring::orthogonal(m, field)?;
        let mut xs = vec![xi(&ring, 0)?, xi(&ring, -1)?];
        for i in 1..=2 * m {
            xs.push(xi(&ring, i as i32)?);
        }
        Ok(InvariantSet {
            m,
            field,
            ring,
            budget,
            sym: SymbolicTower::new(m, field)?,
            xi: xs,
            ptable: OnceLock::new(),
            dickson: OnceLock::new(),
            u: OnceLock::new(),
            u_prev: OnceLock::new(),
            ud_bar: OnceLock::new(),
            e: OnceLock::new(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn symbolic(&self) -> &SymbolicTower {
        &self.sym
    }

    /// xi_i for 0 <= i <= 2m; i = -1 gives xibar_0.
    pub fn xi(&self, i: i32) -> Result<&Poly> {
        match i {
            0 => Ok(&self.xi[0]),
            -1 => Ok(&self.xi[1]),
            _ if i >= 1 && i as usize <= 2 * self.m => Ok(&self.xi[i as usize + 1]),
            _ => Err(Error::IndexOutOfRange { what: "xi index", index: i as i64 }),
        }
    }

    pub fn evaluator(&self, slot0: Slot0) -> Result<XiEvaluator> {
        XiEvaluator::new(self.ring, slot0, self.budget)
    }

    /// Image of an xi-polynomial in S_m[z], slot 0 read as xibar_0.
    pub fn eval(&self, p: &XiPoly) -> Result<Poly> {
        self.evaluator(Slot0::XiBar)?.eval(p)
    }

    /// P_{i,j} for j <= m.
    pub fn ptable(&self) -> Result<&PTable> {
        self.ptable.get_or_init(|| PTable::solve(self.m, self.field)).as_ref().map_err(Clone::clone)
    }

    /// `[1, d_{1,m}, ..., d_{2m,m}]`.
    pub fn dickson(&self) -> Result<&[Poly]> {
        self.dickson
            .get_or_init(|| dickson_full_all_within(&self.ring, self.budget))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// u_m by its orbit-sum description.
    pub fn u(&self) -> Result<&Poly> {
        self.u.get_or_init(|| u_full(&self.ring)).as_ref().map_err(Clone::clone)
    }

    /// u_(m-1), the image of its xi-polynomial.
    pub fn u_prev(&self) -> Result<&Poly> {
        self.u_prev.get_or_init(|| self.eval(&self.sym.u_prev)).as_ref().map_err(Clone::clone)
    }

    /// Images of u_(m-1) d_{i,m-1}, 0 <= i <= 2m-2.
    pub fn ud_bar(&self) -> Result<&[Poly]> {
        self.ud_bar
            .get_or_init(|| {
                let mut ev = self.evaluator(Slot0::XiBar)?;
                self.sym.ud_bar.iter().map(|p| ev.eval(p)).collect()
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// Image of delta_i.
    pub fn delta(&self, i: usize) -> Result<Poly> {
        let p = self.sym.delta.get(i).filter(|_| i >= 1).ok_or(Error::IndexOutOfRange { what: "delta index", index: i as i64 })?;
        self.eval(p)
    }

    /// e_1, ..., e_(2m-1) with their z-free parts; index 0 of the slice is e_1.
    pub fn e_all(&self) -> Result<&[EPair]> {
        self.e.get_or_init(|| self.build_e_all()).as_ref().map(|v| v.as_slice()).map_err(Clone::clone)
    }

    pub fn e(&self, i: usize) -> Result<&Poly> {
        if i == 0 || i >= 2 * self.m {
            return Err(Error::IndexOutOfRange { what: "e index", index: i as i64 });
        }
        Ok(&self.e_all()?[i - 1].e)
    }

    /// b_i^2 = d_i + u^(q-2)(delta_i + xibar_0 ud_bar_(i-1)^q).
    fn b_squared(&self, i: usize) -> Result<Poly> {
        let q = self.q() as u64;
        let d = &self.dickson()?[i];
        let u = self.u()?;
        let ubar = &self.ud_bar()?[i - 1];
        let inner = &self.delta(i)? + &self.xi[1].mul_within(&ubar.frobenius_pow(1), self.budget)?;
        let tail = u.pow_within(q - 2, self.budget)?.mul_within(&inner, self.budget)?;
        Ok(d + &tail)
    }

    /// u^(q/2-1) ud_bar_(i-1)^(q/2).
    fn z_coefficient(&self, i: usize) -> Result<Poly> {
        let h = self.q() as u64 / 2;
        let u = self.u()?;
        let ubar = &self.ud_bar()?[i - 1];
        u.pow_within(h - 1, self.budget)?.mul_within(&ubar.pow_within(h, self.budget)?, self.budget)
    }

    /// e_1 = u^(q/2-1) u_(m-1)^(q/2) z + b_1, checking its lex-leading term.
    pub fn build_e1(&self) -> Result<EPair> {
        let b = self.b_squared(1)?.sqrt()?;
        let e = &self.z_coefficient(1)?.mul_z_pow(1) + &b;
        let q = self.q();
        let expect_exp = q.pow(2 * self.m as u32 - 1) * (q - 1) / 2;
        let (lm, lc) = e.lead_term(MonomialOrder::Lex)?;
        let y1 = self.ring.y(1);
        if lc != 1 || lm.exponent(y1) != expect_exp || lm.degree() != expect_exp {
            return Err(Error::Consistency(format!("lead term of e_1 is {}", e.format_term(&lm, lc))));
        }
        Ok(EPair { e, b })
    }

    fn build_e_all(&self) -> Result<Vec<EPair>> {
        let q = self.q() as u64;
        let mut out = vec![self.build_e1()?];
        for i in 1..2 * self.m - 1 {
            let e = steenrod_k(&out[i - 1].e, q.pow((2 * self.m - 1 - i) as u32) / 2)?;
            if e.len() > self.budget {
                return Err(Error::BudgetExceeded { what: format!("e_{}", i + 1), terms: e.len(), budget: self.budget });
            }
            out.push(self.check_normal_form(i + 1, e)?);
        }
        Ok(out)
    }

    /// Checks e_i = u^(q/2-1) ud_bar_(i-1)^(q/2) z + b_i + c_i with b_i^2 as
    /// above and c_i the correction of [`SymbolicTower::e_correction`].
    fn check_normal_form(&self, i: usize, e: Poly) -> Result<EPair> {
        let corr = self.sym.e_correction(i);
        let reduced = if corr.is_zero() { e.clone() } else { &e + &self.evaluator(Slot0::Xi0)?.eval(&corr)? };
        self.check_reduced(i, &reduced)?;
        Ok(EPair { b: reduced.coeff_in_z(0), e })
    }

    fn check_reduced(&self, i: usize, e: &Poly) -> Result<()> {
        if e.z_degree() > 1 {
            return Err(Error::Consistency(format!("e_{i} has z-degree {}", e.z_degree())));
        }
        if e.coeff_in_z(1) != self.z_coefficient(i)? {
            return Err(Error::Consistency(format!("z-coefficient of e_{i} differs from its normal form")));
        }
        if e.coeff_in_z(0).square() != self.b_squared(i)? {
            return Err(Error::Consistency(format!("b_{i}^2 differs from its normal form")));
        }
        Ok(())
    }

    /// Re-verifies every e_i, however obtained: e_(i+1) = P^(q^(2m-1-i)/2)(e_i)
    /// and each e_i has the normal form with the stated b_i.
    pub fn verify_e_chain(&self) -> Result<()> {
        let pairs = self.e_all()?;
        let q = self.q() as u64;
        self.check_normal_form(1, pairs[0].e.clone())?;
        for i in 1..pairs.len() {
            let next = steenrod_k(&pairs[i - 1].e, q.pow((2 * self.m - 1 - i) as u32) / 2)?;
            if next != pairs[i].e {
                return Err(Error::Consistency(format!("e_{} is not the Steenrod image of e_{i}", i + 1)));
            }
            if self.check_normal_form(i + 1, next)?.b != pairs[i].b {
                return Err(Error::Consistency(format!("stored b_{} differs", i + 1)));
            }
        }
        Ok(())
    }

    /// Installs precomputed Dickson invariants; false if already present.
    pub fn seed_dickson(&self, d: Vec<Poly>) -> bool {
        d.len() == 2 * self.m + 1 && self.dickson.set(Ok(d)).is_ok()
    }

    pub fn seed_u(&self, u: Poly) -> bool {
        self.u.set(Ok(u)).is_ok()
    }

    /// Installs precomputed e_i; [`Self::verify_e_chain`] checks them.
    pub fn seed_e(&self, e: Vec<EPair>) -> bool {
        e.len() == 2 * self.m - 1 && self.e.set(Ok(e)).is_ok()
    }

    /// Members of S_m[z] already built successfully.
    pub fn built_dickson(&self) -> Option<&[Poly]> {
        self.dickson.get().and_then(|r| r.as_ref().ok()).map(|v| v.as_slice())
    }

    pub fn built_u(&self) -> Option<&Poly> {
        self.u.get().and_then(|r| r.as_ref().ok())
    }

    pub fn built_e(&self) -> Option<&[EPair]> {
        self.e.get().and_then(|r| r.as_ref().ok()).map(|v| v.as_slice())
    }

    /// Weighted degree of e_i: q^(2m-i)(q^i-1)/2.
    pub fn e_degree(&self, i: usize) -> u64 {
        let q = self.q() as u64;
        q.pow((2 * self.m - i) as u32) * (q.pow(i as u32) - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_for_m1_q2() {
        let f = Field::new(1).unwrap();
        let set = InvariantSet::new(1, f).unwrap();
        let r = set.ring();
        let expect = &(&r.var(r.z()) + &r.var(r.x(1))) + &r.var(r.y(1));
        assert_eq!(*set.e(1).unwrap(), expect);
    }

    #[test]
    fn e_degrees() {
        for (m, s) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)] {
            let set = InvariantSet::new(m, Field::new(s).unwrap()).unwrap();
            for i in 1..2 * m {
                assert_eq!(set.e(i).unwrap().homogeneous_degree().unwrap(), Some(set.e_degree(i) as u32));
            }
        }
    }

    #[test]
    fn symbolic_squares_match() {
        for (m, s) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
            let set = InvariantSet::new(m, Field::new(s).unwrap()).unwrap();
            let mut ev = set.evaluator(Slot0::Xi0).unwrap();
            let u = set.u().unwrap();
            for i in 1..2 * m {
                let lhs = u * &set.e(i).unwrap().square();
                assert_eq!(ev.eval(&set.symbolic().e_sq[i]).unwrap(), lhs, "m={m} s={s} i={i}");
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        let set = InvariantSet::with_budget(2, Field::new(2).unwrap(), 100).unwrap();
        assert!(matches!(set.dickson(), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(set.e(1), Err(Error::BudgetExceeded { .. })));
    }
}
