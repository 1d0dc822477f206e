use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use rustc_hash::FxHashMap;

use super::monomial::grevlex;
use super::{Monomial, MonomialOrder, Ring, MAX_VARS};
use crate::error::{Error, Result};
use crate::gf::Field;

/// A sparse polynomial. Terms are kept sorted in descending grevlex order
/// with no zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, u8)>,
}

pub(crate) type TermMap = FxHashMap<Monomial, u8>;

#[inline]
fn desc(a: &(Monomial, u8), b: &(Monomial, u8)) -> Ordering {
    grevlex(&b.0, &a.0)
}

impl Poly {
    pub fn zero(ring: Ring) -> Poly {
        Poly { ring, terms: Vec::new() }
    }

    pub fn one(ring: Ring) -> Poly {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: Ring, c: u8) -> Poly {
        Poly::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: Ring, mono: Monomial, c: u8) -> Poly {
        if c == 0 {
            return Poly::zero(ring);
        }
        Poly { ring, terms: vec![(mono, c)] }
    }

    /// Builds a polynomial from arbitrary terms; repeated monomials are summed.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, u8)>) -> Poly {
        let mut v: Vec<(Monomial, u8)> = terms.into_iter().collect();
        v.sort_unstable_by(desc);
        let mut out: Vec<(Monomial, u8)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 ^= c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1 == 0 {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1 == 0) {
            out.pop();
        }
        Poly { ring, terms: out }
    }

    pub(crate) fn from_map(ring: Ring, map: TermMap) -> Poly {
        let mut terms: Vec<(Monomial, u8)> = map.into_iter().filter(|t| t.1 != 0).collect();
        terms.sort_unstable_by(desc);
        Poly { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.ring.field()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (Monomial::one(), 1)
    }

    /// Terms in canonical (descending grevlex) order.
    #[inline]
    pub fn terms(&self) -> &[(Monomial, u8)] {
        &self.terms
    }

    pub fn coeff(&self, mono: &Monomial) -> u8 {
        self.terms
            .binary_search_by(|t| grevlex(mono, &t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Total degree of the leading term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.0.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    /// Degree of a homogeneous polynomial; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if !self.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        Ok(self.degree())
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match grevlex(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 ^ b[j].1;
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Poly { ring: self.ring, terms: out })
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.ring));
        }
        if self.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, self.terms[0].1));
        }
        if other.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, other.terms[0].1));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let field = self.field();
        let mut map = TermMap::default();
        map.reserve(big.len().saturating_mul(2).min(1 << 22));
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                *map.entry(ms.mul(mb)).or_insert(0) ^= field.mul(*cs, *cb);
            }
        }
        Ok(Poly::from_map(self.ring, map))
    }

    /// Product that gives up once the accumulator exceeds `budget` terms.
    pub fn mul_within(&self, other: &Poly, budget: usize) -> Result<Poly> {
        self.check_ring(other)?;
        let bound = self.len().saturating_mul(other.len());
        if bound <= budget {
            return self.checked_mul(other);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let field = self.field();
        let mut map = TermMap::default();
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                *map.entry(ms.mul(mb)).or_insert(0) ^= field.mul(*cs, *cb);
            }
            if map.len() > budget {
                return Err(Error::BudgetExceeded { what: "product".into(), terms: map.len(), budget });
            }
        }
        Ok(Poly::from_map(self.ring, map))
    }

    /// f^e under a term budget.
    pub fn pow_within(&self, e: u64, budget: usize) -> Result<Poly> {
        let mut acc = Poly::one(self.ring);
        for b in 0..64 {
            if (e >> b) & 1 == 1 {
                acc = acc.mul_within(&self.pow2k(b), budget)?;
            }
        }
        Ok(acc)
    }

    /// Multiplication by a single term. Monomial orders are multiplicative so
    /// the result stays sorted.
    pub fn mul_term(&self, mono: &Monomial, c: u8) -> Poly {
        if c == 0 {
            return Poly::zero(self.ring);
        }
        let field = self.field();
        let terms = self.terms.iter().map(|(m, d)| (m.mul(mono), field.mul(*d, c))).collect();
        Poly { ring: self.ring, terms }
    }

    pub fn scale(&self, c: u8) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    /// f^(2^k), computed termwise.
    pub fn pow2k(&self, k: u32) -> Poly {
        let field = self.field();
        let factor = 1u32 << k;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut c = *c;
                for _ in 0..k {
                    c = field.square(c);
                }
                (m.scale(factor), c)
            })
            .collect();
        Poly { ring: self.ring, terms }
    }

    pub fn square(&self) -> Poly {
        self.pow2k(1)
    }

    /// f^(q^k). Coefficients lie in GF(q) so only exponents change.
    pub fn frobenius_pow(&self, k: u32) -> Poly {
        let factor = self.field().q().pow(k);
        let terms = self.terms.iter().map(|(m, c)| (m.scale(factor), *c)).collect();
        Poly { ring: self.ring, terms }
    }

    /// f^e by multiplying the Frobenius twists f^(2^b) over the bits of e.
    pub fn pow(&self, e: u64) -> Poly {
        if e == 0 {
            return Poly::one(self.ring);
        }
        let mut acc: Option<Poly> = None;
        for b in 0..64 {
            if (e >> b) & 1 == 1 {
                let t = self.pow2k(b);
                acc = Some(match acc {
                    None => t,
                    Some(a) => &a * &t,
                });
            }
        }
        acc.unwrap()
    }

    /// The sum of the non-square terms.
    pub fn ns(&self) -> Poly {
        let terms = self.terms.iter().filter(|t| !t.0.is_square()).copied().collect();
        Poly { ring: self.ring, terms }
    }

    /// Termwise square root; fails on the first non-square term.
    pub fn sqrt(&self) -> Result<Poly> {
        let field = self.field();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            match m.halve() {
                Some(h) => terms.push((h, field.sqrt(*c))),
                None => return Err(Error::NonSquareInput(self.format_term(m, *c))),
            }
        }
        Ok(Poly { ring: self.ring, terms })
    }

    pub fn format_term(&self, m: &Monomial, c: u8) -> String {
        let mut s = format!("{:x}", c);
        for i in 0..self.ring.nvars() {
            match m.exponent(i) {
                0 => {}
                1 => s.push_str(&format!("*{}", self.ring.var_name(i))),
                e => s.push_str(&format!("*{}^{}", self.ring.var_name(i), e)),
            }
        }
        s
    }

    /// Image under the algebra map sending variable i to `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: images.len() });
        }
        let target = images[0].ring;
        if let Some(bad) = images.iter().find(|p| p.ring != target) {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", target, bad.ring)));
        }
        let field = target.field();
        let identity: Vec<bool> =
            (0..n).map(|i| self.ring == target && images[i] == target.var(i)).collect();
        let mut powers: FxHashMap<(usize, u32), Poly> = FxHashMap::default();
        let mut acc = TermMap::default();
        for (mono, c) in &self.terms {
            let mut shift = [0u32; MAX_VARS];
            let mut factor: Option<Cow<Poly>> = None;
            for i in 0..n {
                let e = mono.exponent(i);
                if e == 0 {
                    continue;
                }
                if identity[i] {
                    shift[i] = e;
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| images[i].pow(e as u64));
                factor = Some(match factor {
                    None => Cow::Owned(p.clone()),
                    Some(f) => Cow::Owned(&*f * &*p),
                });
            }
            let shift = Monomial::new(shift);
            match factor {
                None => *acc.entry(shift).or_insert(0) ^= *c,
                Some(f) => {
                    for (fm, fc) in f.terms.iter() {
                        *acc.entry(fm.mul(&shift)).or_insert(0) ^= field.mul(*fc, *c);
                    }
                }
            }
        }
        Ok(Poly::from_map(target, acc))
    }

    /// Relabels variable i of this ring to variable `map[i]` of `target`.
    pub fn map_vars(&self, target: Ring, map: &[usize]) -> Result<Poly> {
        if map.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: map.len() });
        }
        if target.field() != self.field() {
            return Err(Error::FieldMismatch(self.field().q(), target.field().q()));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = [0u32; MAX_VARS];
            for (i, &t) in map.iter().enumerate() {
                e[t] += m.exponent(i);
            }
            (Monomial::new(e), *c)
        });
        Ok(Poly::from_terms(target, terms))
    }

    pub fn lead_term(&self, order: MonomialOrder) -> Result<(Monomial, u8)> {
        match order {
            MonomialOrder::Grevlex => self.terms.first().copied(),
            MonomialOrder::Lex => self.terms.iter().max_by(|a, b| a.0.cmp_by(&b.0, order)).copied(),
        }
        .ok_or(Error::ZeroPolynomial)
    }

    pub fn z_degree(&self) -> u32 {
        let z = self.ring.z();
        self.terms.iter().map(|t| t.0.exponent(z)).max().unwrap_or(0)
    }

    /// Coefficient of z^k, as a z-free polynomial.
    pub fn coeff_in_z(&self, k: u32) -> Poly {
        let z = self.ring.z();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exponent(z) == k)
            .map(|(m, c)| {
                let mut m = *m;
                m.set(z, 0);
                (m, *c)
            })
            .collect();
        Poly { ring: self.ring, terms }
    }

    /// Leading coefficient as a polynomial in z.
    pub fn lc_z(&self) -> Poly {
        self.coeff_in_z(self.z_degree())
    }

    pub fn mul_z_pow(&self, k: u32) -> Poly {
        let mut e = [0u32; MAX_VARS];
        e[self.ring.z()] = k;
        self.mul_term(&Monomial::new(e), 1)
    }

    /// Division by the quadratic form, which is monic of degree 2 in z:
    /// returns (f, a, b) with self = f*xi0 + a*z + b and a, b free of z.
    pub fn divide_by_xi0(&self) -> Result<(Poly, Poly, Poly)> {
        let ring = self.ring;
        if ring.m().is_none() {
            return Err(Error::RingMismatch("division by xi0 needs S_m[z]".into()));
        }
        let xibar = ring.xibar0();
        let top = self.z_degree() as usize;
        let mut coeffs: Vec<Poly> = (0..=top).map(|k| self.coeff_in_z(k as u32)).collect();
        let mut quot: Vec<Poly> = vec![Poly::zero(ring); top.max(2) - 1];
        for k in (2..=top).rev() {
            let ck = std::mem::replace(&mut coeffs[k], Poly::zero(ring));
            if ck.is_zero() {
                continue;
            }
            coeffs[k - 2] = &coeffs[k - 2] + &(&ck * &xibar);
            quot[k - 2] = &quot[k - 2] + &ck;
        }
        let mut f = Poly::zero(ring);
        for (k, qk) in quot.iter().enumerate() {
            f = &f + &qk.mul_z_pow(k as u32);
        }
        let a = if top >= 1 { coeffs[1].clone() } else { Poly::zero(ring) };
        Ok((f, a, coeffs[0].clone()))
    }

    /// Evaluates at a point whose coordinates lie in `ext`, with coefficients
    /// embedded through `emb`.
    pub fn evaluate(&self, point: &[u8], ext: Field, emb: &[u8]) -> u8 {
        let n = self.ring.nvars();
        let mut acc = 0u8;
        for (m, c) in &self.terms {
            let mut v = emb[*c as usize];
            for (i, &p) in point.iter().enumerate().take(n) {
                let e = m.exponent(i);
                if e > 0 {
                    v = ext.mul(v, ext.pow(p, e as u64));
                    if v == 0 {
                        break;
                    }
                }
            }
            acc ^= v;
        }
        acc
    }

    /// Drops every term involving one of `vars` (i.e. sets them to zero).
    pub fn set_zero(&self, vars: &[usize]) -> Poly {
        let terms = self.terms.iter().filter(|t| vars.iter().all(|&v| t.0.exponent(v) == 0)).copied().collect();
        Poly { ring: self.ring, terms }
    }

    /// Whether the linear form `v` divides `self`, tested by exact division
    /// on the leading variable of `v`.
    pub fn divisible_by_linear(&self, v: &Poly) -> Result<bool> {
        Ok(self.div_exact(v)?.is_some())
    }

    /// Exact division with remainder check. Returns `None` when `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let field = self.field();
        let (lm, lc) = d.terms[0];
        let lc_inv = field.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(&(m, c)) = rem.terms.first() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let mut e = [0u32; MAX_VARS];
            for (i, slot) in e.iter_mut().enumerate() {
                *slot = m.exponent(i) - lm.exponent(i);
            }
            let qm = Monomial::new(e);
            let qc = field.mul(c, lc_inv);
            quot.push((qm, qc));
            rem = &rem + &d.mul_term(&qm, qc);
        }
        Ok(Some(Poly::from_terms(self.ring, quot)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        const SHOW: usize = 12;
        for (i, (m, c)) in self.terms.iter().take(SHOW).enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.format_term(m, *c))?;
        }
        if self.len() > SHOW {
            write!(f, " + ... ({} terms)", self.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: usize, s: u32) -> Ring {
        Ring::orthogonal(m, Field::new(s).unwrap()).unwrap()
    }

    #[test]
    fn char_two_basics() {
        let r = ring(1, 2);
        let (x1, y1, z) = (r.var(r.x(1)), r.var(r.y(1)), r.var(r.z()));
        let f = &(&z * &z) + &(&x1 * &y1);
        assert!((&f + &f).is_zero());
        let sq = &f * &f;
        assert_eq!(sq, &z.pow(4) + &(&x1.pow(2) * &y1.pow(2)));
        assert_eq!(sq, f.square());
        assert_eq!(&f * &Poly::one(r), f);
    }

    #[test]
    fn frobenius_is_termwise_power() {
        let r = ring(1, 2);
        let f = &r.var(r.x(1)) + &r.var(r.y(1)).scale(2);
        assert_eq!(f.frobenius_pow(1), f.pow(4));
        assert_eq!(f.frobenius_pow(0), f);
        assert_eq!(f.frobenius_pow(2), f.pow(16));
    }

    #[test]
    fn ns_and_sqrt() {
        let r = ring(1, 1);
        let (x1, y1) = (r.var(r.x(1)), r.var(r.y(1)));
        assert!((&x1 * &x1).pow(1).square().ns().is_zero());
        let f = &(&x1 * &y1) + &(&x1 * &x1);
        assert_eq!(f.ns(), &x1 * &y1);
        let z4 = r.var(r.z()).pow(4);
        assert_eq!(z4.sqrt().unwrap(), r.var(r.z()).pow(2));
        match f.sqrt() {
            Err(Error::NonSquareInput(t)) => assert!(t.contains("x1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn divide_by_xi0_small() {
        let r = ring(2, 2);
        let xi0 = r.xi0();
        let (f, a, b) = xi0.divide_by_xi0().unwrap();
        assert!(f.is_one() && a.is_zero() && b.is_zero());
        let z = r.var(r.z());
        let (f, a, b) = z.divide_by_xi0().unwrap();
        assert!(f.is_zero() && a.is_one() && b.is_zero());
        let g = &(&z.pow(5) + &r.var(0).pow(3)) + &(&z * &r.var(4)).pow(2);
        let (f, a, b) = g.divide_by_xi0().unwrap();
        let back = &(&(&f * &xi0) + &(&a * &z)) + &b;
        assert_eq!(back, g);
        assert_eq!(a.z_degree(), 0);
        assert_eq!(b.z_degree(), 0);
    }

    #[test]
    fn lex_lead_term() {
        let r = ring(1, 1);
        let f = &r.var(r.x(1)) + &r.var(r.y(1));
        let (m, _) = f.lead_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m.exponent(r.y(1)), 1);
        assert_eq!(Poly::zero(r).lead_term(MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring(1, 1).var(0);
        let b = ring(1, 2).var(0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn exact_division() {
        let r = ring(1, 2);
        let v = &r.var(0) + &r.var(2);
        let f = &v * &(&r.var(1).pow(3) + &r.var(0));
        assert_eq!(f.div_exact(&v).unwrap().unwrap(), &r.var(1).pow(3) + &r.var(0));
        assert!(r.var(1).div_exact(&v).unwrap().is_none());
    }
}
