use std::cmp::Ordering;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::ring::text_kv;

/// Slots: 0 is xibar_0, k >= 1 is xi_k.
pub const XI_SLOTS: usize = 9;

/// Exponents on (xibar_0, xi_1, ..., xi_8). Compared lexicographically with
/// xibar_0 most significant, which is a monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct XiMonomial([u32; XI_SLOTS]);

impl XiMonomial {
    pub const fn new(exps: [u32; XI_SLOTS]) -> Self {
        XiMonomial(exps)
    }

    pub fn one() -> Self {
        XiMonomial([0; XI_SLOTS])
    }

    /// xi_k^e (k = 0 meaning xibar_0).
    pub fn var_pow(k: usize, e: u32) -> Self {
        let mut x = [0; XI_SLOTS];
        x[k] = e;
        XiMonomial(x)
    }

    #[inline]
    pub fn exponent(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn exponents(&self) -> &[u32; XI_SLOTS] {
        &self.0
    }

    pub fn set(&mut self, k: usize, e: u32) {
        self.0[k] = e;
    }

    /// Weighted degree: deg xi_k = q^k + 1, deg xibar_0 = 2.
    pub fn degree(&self, q: u32) -> u64 {
        let mut d = 2 * self.0[0] as u64;
        let mut qk = 1u64;
        for k in 1..XI_SLOTS {
            qk *= q as u64;
            d += self.0[k] as u64 * (qk + 1);
        }
        d
    }

    /// Largest k with a nonzero exponent on xi_k (0 if none).
    pub fn max_index(&self) -> usize {
        (1..XI_SLOTS).rev().find(|&k| self.0[k] > 0).unwrap_or(0)
    }

    pub fn mul(&self, other: &XiMonomial) -> XiMonomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        XiMonomial(e)
    }

    pub fn scale(&self, f: u32) -> XiMonomial {
        XiMonomial(self.0.map(|e| e * f))
    }

    pub fn divides(&self, other: &XiMonomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &XiMonomial) -> XiMonomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        XiMonomial(e)
    }

    /// Natural: every exponent has only base-q digits 0 and 1.
    pub fn is_natural(&self, q: u32) -> bool {
        self.0[1..].iter().all(|&e| {
            let mut e = e;
            while e > 0 {
                if e % q > 1 {
                    return false;
                }
                e /= q;
            }
            true
        })
    }
}

/// A polynomial in xibar_0, xi_1, ..., xi_8 over GF(q), terms sorted in
/// decreasing monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XiPoly {
    field: Field,
    terms: Vec<(XiMonomial, u8)>,
}

fn desc(a: &(XiMonomial, u8), b: &(XiMonomial, u8)) -> Ordering {
    b.0.cmp(&a.0)
}

impl XiPoly {
    pub fn zero(field: Field) -> Self {
        XiPoly { field, terms: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        XiPoly::monomial(field, XiMonomial::one(), 1)
    }

    pub fn monomial(field: Field, m: XiMonomial, c: u8) -> Self {
        if c == 0 {
            return XiPoly::zero(field);
        }
        XiPoly { field, terms: vec![(m, c)] }
    }

    /// xi_k (k = 0 gives xibar_0).
    pub fn var(field: Field, k: usize) -> Self {
        XiPoly::monomial(field, XiMonomial::var_pow(k, 1), 1)
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (XiMonomial, u8)>) -> Self {
        let mut map: FxHashMap<XiMonomial, u8> = FxHashMap::default();
        for (m, c) in terms {
            *map.entry(m).or_insert(0) ^= c;
        }
        XiPoly::from_map(field, map)
    }

    pub(crate) fn from_map(field: Field, map: FxHashMap<XiMonomial, u8>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|t| t.1 != 0).collect();
        terms.sort_unstable_by(desc);
        XiPoly { field, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn terms(&self) -> &[(XiMonomial, u8)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &XiMonomial) -> u8 {
        self.terms.binary_search_by(|t| m.cmp(&t.0)).map(|i| self.terms[i].1).unwrap_or(0)
    }

    pub fn max_index(&self) -> usize {
        self.terms.iter().map(|t| t.0.max_index()).max().unwrap_or(0)
    }

    pub fn uses_xibar(&self) -> bool {
        self.terms.iter().any(|t| t.0.exponent(0) > 0)
    }

    /// Weighted degree of a homogeneous polynomial; `Ok(None)` for zero.
    pub fn degree(&self) -> Result<Option<u64>> {
        let q = self.q();
        let mut it = self.terms.iter().map(|t| t.0.degree(q));
        let Some(d) = it.next() else { return Ok(None) };
        if it.any(|e| e != d) {
            return Err(Error::NonHomogeneous);
        }
        Ok(Some(d))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_ok()
    }

    fn check(&self, other: &XiPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.q(), other.q()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &XiPoly) -> Result<XiPoly> {
        self.check(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
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
        Ok(XiPoly { field: self.field, terms: out })
    }

    pub fn checked_mul(&self, other: &XiPoly) -> Result<XiPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(XiPoly::zero(self.field));
        }
        if self.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, self.terms[0].1));
        }
        if other.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, other.terms[0].1));
        }
        let f = self.field;
        let mut map: FxHashMap<XiMonomial, u8> = FxHashMap::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *map.entry(a.mul(b)).or_insert(0) ^= f.mul(*ca, *cb);
            }
        }
        Ok(XiPoly::from_map(f, map))
    }

    pub fn mul_term(&self, m: &XiMonomial, c: u8) -> XiPoly {
        if c == 0 {
            return XiPoly::zero(self.field);
        }
        let f = self.field;
        let terms = self.terms.iter().map(|(a, d)| (a.mul(m), f.mul(*d, c))).collect();
        XiPoly { field: f, terms }
    }

    pub fn scale(&self, c: u8) -> XiPoly {
        self.mul_term(&XiMonomial::one(), c)
    }

    /// p^(2^k), termwise.
    pub fn pow2k(&self, k: u32) -> XiPoly {
        let f = self.field;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut c = *c;
                for _ in 0..k {
                    c = f.square(c);
                }
                (m.scale(1 << k), c)
            })
            .collect();
        XiPoly { field: f, terms }
    }

    /// p^(q^k): coefficients are fixed by Frobenius.
    pub fn frobenius_pow(&self, k: u32) -> XiPoly {
        let factor = self.q().pow(k);
        let terms = self.terms.iter().map(|(m, c)| (m.scale(factor), *c)).collect();
        XiPoly { field: self.field, terms }
    }

    pub fn pow(&self, e: u64) -> XiPoly {
        let mut acc = XiPoly::one(self.field);
        for b in 0..64 {
            if (e >> b) & 1 == 1 {
                acc = &acc * &self.pow2k(b);
            }
        }
        acc
    }

    /// Termwise square root; fails if some exponent is odd.
    pub fn sqrt(&self) -> Result<XiPoly> {
        let f = self.field;
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if m.0.iter().any(|e| e & 1 == 1) {
                return Err(Error::NonSquareInput(format!("{:?}", XiPoly::monomial(f, *m, *c))));
            }
            terms.push((XiMonomial(m.0.map(|e| e / 2)), f.sqrt(*c)));
        }
        Ok(XiPoly { field: f, terms })
    }

    /// Exact division in the polynomial ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &XiPoly) -> Result<Option<XiPoly>> {
        self.check(d)?;
        let (lm, lc) = *d.terms.first().ok_or(Error::ZeroPolynomial)?;
        let f = self.field;
        let lc_inv = f.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(&(m, c)) = rem.terms.first() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = m.div(&lm);
            let qc = f.mul(c, lc_inv);
            quot.push((qm, qc));
            rem = &rem + &d.mul_term(&qm, qc);
        }
        Ok(Some(XiPoly::from_terms(f, quot)))
    }

    /// Sets xi_k to zero for every k in `indices`.
    pub fn set_zero(&self, indices: &[usize]) -> XiPoly {
        let terms = self.terms.iter().filter(|t| indices.iter().all(|&k| t.0.exponent(k) == 0)).copied().collect();
        XiPoly { field: self.field, terms }
    }

    /// Substitutes xi_k -> images[k] (index 0 for xibar_0); missing slots map to themselves.
    pub fn substitute(&self, images: &[Option<XiPoly>]) -> XiPoly {
        let f = self.field;
        let mut acc = XiPoly::zero(f);
        for (m, c) in &self.terms {
            let mut keep = [0u32; XI_SLOTS];
            let mut term = XiPoly::one(f);
            for k in 0..XI_SLOTS {
                let e = m.exponent(k);
                if e == 0 {
                    continue;
                }
                match images.get(k).and_then(|x| x.as_ref()) {
                    Some(img) => term = &term * &img.pow(e as u64),
                    None => keep[k] = e,
                }
            }
            acc = &acc + &term.mul_term(&XiMonomial(keep), *c);
        }
        acc
    }

    pub fn to_text(&self) -> String {
        let k = self.max_index().max(1);
        let xibar = self.uses_xibar();
        let mut out = format!("xi K={} q={}{}\n", k, self.q(), if xibar { " xibar" } else { "" });
        for (m, c) in &self.terms {
            write!(out, "{:x}", c).unwrap();
            for i in 1..=k {
                write!(out, " {}", m.exponent(i)).unwrap();
            }
            if xibar {
                write!(out, " {}", m.exponent(0)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<XiPoly> {
        let mut lines = text.lines().enumerate();
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let (_, header) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
        let mut parts = header.split_ascii_whitespace();
        if parts.next() != Some("xi") {
            return Err(perr(1, "expected `xi` header"));
        }
        let k = text_kv(parts.next(), "K", 1)? as usize;
        if k == 0 || k >= XI_SLOTS {
            return Err(perr(1, "K out of range"));
        }
        let field = Field::with_order(text_kv(parts.next(), "q", 1)?)?;
        let xibar = match parts.next() {
            None => false,
            Some("xibar") => true,
            Some(_) => return Err(perr(1, "unexpected header token")),
        };
        let mut terms = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let ln = idx + 1;
            let mut it = line.split_ascii_whitespace();
            let c = u8::from_str_radix(it.next().unwrap(), 16).map_err(|_| perr(ln, "bad coefficient"))?;
            if c == 0 || c as u32 >= field.q() {
                return Err(perr(ln, "coefficient out of range"));
            }
            let mut e = [0u32; XI_SLOTS];
            let slots: Vec<usize> = (1..=k).chain(xibar.then_some(0)).collect();
            for s in slots {
                e[s] = it.next().ok_or_else(|| perr(ln, "too few exponents"))?.parse().map_err(|_| perr(ln, "bad exponent"))?;
            }
            if it.next().is_some() {
                return Err(perr(ln, "too many exponents"));
            }
            terms.push((XiMonomial(e), c));
        }
        let n = terms.len();
        let p = XiPoly::from_terms(field, terms);
        if p.len() != n {
            return Err(perr(0, "repeated monomial"));
        }
        Ok(p)
    }
}

impl<'a> Add<&'a XiPoly> for &'a XiPoly {
    type Output = XiPoly;
    fn add(self, rhs: &'a XiPoly) -> XiPoly {
        self.checked_add(rhs).expect("field mismatch in xi addition")
    }
}

impl<'a> Mul<&'a XiPoly> for &'a XiPoly {
    type Output = XiPoly;
    fn mul(self, rhs: &'a XiPoly) -> XiPoly {
        self.checked_mul(rhs).expect("field mismatch in xi multiplication")
    }
}

impl fmt::Debug for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if i == 16 {
                return write!(f, "... ({} terms)", self.len());
            }
            let mut first = true;
            if *c != 1 {
                write!(f, "{:x}", c)?;
                first = false;
            }
            for k in 0..XI_SLOTS {
                let e = m.exponent(k);
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let name = if k == 0 { "xb0".to_string() } else { format!("x{k}") };
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
            if first {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}
