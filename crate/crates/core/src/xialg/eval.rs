//! The inclusion R_K -> S_m[z] and its partial inverse.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::invariants::xi;
use crate::ring::{MonomialOrder, Poly, Ring, TermMap};
use crate::xialg::{XiMonomial, XiPoly, XI_SLOTS};

/// How slot 0 of an xi-monomial is read in S_m[z].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot0 {
    /// The hyperbolic part x_1y_1 + ... + x_my_m.
    XiBar,
    /// The full quadratic form z^2 + x_1y_1 + ... + x_my_m.
    Xi0,
}

/// Caches xi_k^e in a fixed ring.
pub struct XiEvaluator {
    ring: Ring,
    slot0: Slot0,
    budget: usize,
    gens: Vec<Poly>,
    powers: FxHashMap<(usize, u32), Poly>,
}

impl XiEvaluator {
    pub fn new(ring: Ring, slot0: Slot0, budget: usize) -> Result<Self> {
        let m = ring.m().ok_or_else(|| Error::RingMismatch("xi evaluation needs S_m[z]".into()))?;
        let mut gens = vec![xi(&ring, if slot0 == Slot0::XiBar { -1 } else { 0 })?];
        for k in 1..=(2 * m).min(XI_SLOTS - 1) {
            gens.push(xi(&ring, k as i32)?);
        }
        Ok(XiEvaluator { ring, slot0, budget, gens, powers: FxHashMap::default() })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn slot0(&self) -> Slot0 {
        self.slot0
    }

    fn power(&mut self, k: usize, e: u32) -> Result<Poly> {
        if let Some(p) = self.powers.get(&(k, e)) {
            return Ok(p.clone());
        }
        let base = self.gens.get(k).ok_or(Error::IndexOutOfRange { what: "xi index for this m", index: k as i64 })?;
        let p = base.pow_within(e as u64, self.budget)?;
        self.powers.insert((k, e), p.clone());
        Ok(p)
    }

    pub fn monomial(&mut self, mono: &XiMonomial) -> Result<Poly> {
        let mut acc = Poly::one(self.ring);
        for k in 0..XI_SLOTS {
            let e = mono.exponent(k);
            if e > 0 {
                let p = self.power(k, e)?;
                acc = acc.mul_within(&p, self.budget)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&mut self, p: &XiPoly) -> Result<Poly> {
        if p.field() != self.ring.field() {
            return Err(Error::FieldMismatch(p.q(), self.ring.field().q()));
        }
        let field = p.field();
        let mut acc = TermMap::default();
        for (mono, c) in p.terms() {
            let img = self.monomial(mono)?;
            for (m, d) in img.terms() {
                *acc.entry(*m).or_insert(0) ^= field.mul(*c, *d);
            }
            if acc.len() > self.budget {
                return Err(Error::BudgetExceeded { what: "xi evaluation".into(), terms: acc.len(), budget: self.budget });
            }
        }
        Ok(Poly::from_map(self.ring, acc))
    }
}

/// Image of `p` in S_m[z], slot 0 read as the hyperbolic part.
pub fn eval_xi(p: &XiPoly, ring: &Ring) -> Result<Poly> {
    eval_xi_with(p, ring, Slot0::XiBar, usize::MAX)
}

pub fn eval_xi_with(p: &XiPoly, ring: &Ring, slot0: Slot0, budget: usize) -> Result<Poly> {
    XiEvaluator::new(*ring, slot0, budget)?.eval(p)
}

/// All xi-monomials of weighted degree `degree` in slots 1..=k_max, plus slot 0 if asked.
pub fn xi_monomials_of_degree(degree: u64, k_max: usize, q: u32, with_slot0: bool) -> Vec<XiMonomial> {
    let mut weights: Vec<(usize, u64)> = Vec::new();
    if with_slot0 {
        weights.push((0, 2));
    }
    for k in 1..=k_max.min(XI_SLOTS - 1) {
        weights.push((k, (q as u64).pow(k as u32) + 1));
    }
    let mut out = Vec::new();
    knapsack(&weights, degree, XiMonomial::one(), &mut out);
    out
}

fn knapsack(weights: &[(usize, u64)], rem: u64, cur: XiMonomial, out: &mut Vec<XiMonomial>) {
    let Some((&(k, w), rest)) = weights.split_last() else {
        if rem == 0 {
            out.push(cur);
        }
        return;
    };
    for e in 0..=rem / w {
        let mut next = cur;
        next.set(k, e as u32);
        knapsack(rest, rem - e * w, next, out);
    }
}

struct Row {
    image: Poly,
    combo: XiPoly,
}

/// Rewrites a homogeneous `f` as a polynomial in xi_1..xi_K (and slot 0 when
/// `slot0` is given) by Gaussian elimination on the images of the weighted
/// basis.
pub fn express_in_xi(f: &Poly, k_max: usize, slot0: Option<Slot0>, budget: usize) -> Result<XiPoly> {
    let field = f.field();
    let Some(degree) = f.homogeneous_degree()? else { return Ok(XiPoly::zero(field)) };
    let ring = f.ring();
    let mut ev = XiEvaluator::new(ring, slot0.unwrap_or(Slot0::XiBar), budget)?;
    let basis = xi_monomials_of_degree(degree as u64, k_max, field.q(), slot0.is_some());
    if basis.len() > budget {
        return Err(Error::BudgetExceeded { what: "xi-monomial basis".into(), terms: basis.len(), budget });
    }
    let mut pivots: FxHashMap<crate::ring::Monomial, Row> = FxHashMap::default();
    let reduce = |pivots: &FxHashMap<_, Row>, mut image: Poly, mut combo: XiPoly| -> Result<(Poly, XiPoly)> {
        while let Ok((lm, lc)) = image.lead_term(MonomialOrder::Grevlex) {
            let Some(row) = pivots.get(&lm) else { break };
            let (_, rc) = row.image.lead_term(MonomialOrder::Grevlex)?;
            let c = field.mul(lc, field.inv(rc)?);
            image = &image + &row.image.scale(c);
            combo = &combo + &row.combo.scale(c);
        }
        Ok((image, combo))
    };
    for mono in basis {
        let img = ev.monomial(&mono)?;
        let (img, combo) = reduce(&pivots, img, XiPoly::monomial(field, mono, 1))?;
        match img.lead_term(MonomialOrder::Grevlex) {
            Ok((lm, _)) => {
                pivots.insert(lm, Row { image: img, combo });
            }
            Err(_) => return Err(Error::AmbiguousSolution),
        }
    }
    let (rem, combo) = reduce(&pivots, f.clone(), XiPoly::zero(field))?;
    if !rem.is_zero() {
        let (lm, lc) = rem.lead_term(MonomialOrder::Grevlex)?;
        return Err(Error::NotInSubalgebra { residual_terms: rem.len(), leading: rem.format_term(&lm, lc) });
    }
    // f + sum(c_i image_i) = 0 and we are in characteristic 2.
    Ok(combo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::invariants::u_full;

    fn u2(f: Field) -> XiPoly {
        let q = f.q() as u64;
        let x = |k| XiPoly::var(f, k);
        &(&(&x(3) * &x(1).pow(q)) + &x(2).pow(q + 1)) + &x(1).pow(q * q + 1)
    }

    #[test]
    fn u2_round_trip() {
        for s in 1..=2 {
            let f = Field::new(s).unwrap();
            let ring = Ring::orthogonal(2, f).unwrap();
            let u = u_full(&ring).unwrap();
            assert_eq!(eval_xi(&u2(f), &ring).unwrap(), u);
            assert_eq!(express_in_xi(&u, 3, None, usize::MAX).unwrap(), u2(f));
        }
    }

    #[test]
    fn not_in_subalgebra() {
        let f = Field::new(1).unwrap();
        let ring = Ring::orthogonal(2, f).unwrap();
        let x1 = ring.var(ring.x(1));
        assert!(matches!(express_in_xi(&x1, 3, None, usize::MAX), Err(Error::NotInSubalgebra { .. })));
        assert!(eval_xi(&XiPoly::zero(f), &ring).unwrap().is_zero());
    }

    #[test]
    fn slot0_modes() {
        let f = Field::new(1).unwrap();
        let ring = Ring::orthogonal(1, f).unwrap();
        let p = XiPoly::var(f, 0);
        assert_eq!(eval_xi(&p, &ring).unwrap(), ring.xibar0());
        assert_eq!(eval_xi_with(&p, &ring, Slot0::Xi0, usize::MAX).unwrap(), ring.xi0());
        let back = express_in_xi(&ring.xi0(), 2, Some(Slot0::Xi0), usize::MAX).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn budget_guard() {
        let f = Field::new(2).unwrap();
        let ring = Ring::orthogonal(2, f).unwrap();
        let p = XiPoly::var(f, 3).pow(5);
        assert!(matches!(eval_xi_with(&p, &ring, Slot0::XiBar, 10), Err(Error::BudgetExceeded { .. })));
    }
}
