//! Natural monomials: products of distinct natural factors xi_j^(q^r), where
//! the factor has head q^(j+r) and tail q^r.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::xialg::{XiMonomial, XiPoly, XI_SLOTS};

/// xi_j^(q^r); j = 0 stands for xibar_0^(q^r), whose head and tail coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaturalFactor {
    pub j: u32,
    pub r: u32,
}

impl NaturalFactor {
    pub fn head(&self, q: u64) -> u64 {
        q.pow(self.j + self.r)
    }

    pub fn tail(&self, q: u64) -> u64 {
        q.pow(self.r)
    }

    pub fn degree(&self, q: u64) -> u64 {
        self.head(q) + self.tail(q)
    }

    fn monomial(&self, q: u32) -> XiMonomial {
        XiMonomial::var_pow(self.j as usize, q.pow(self.r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaturalMonomial {
    pub factors: Vec<NaturalFactor>,
}

impl NaturalMonomial {
    pub fn natural_degree(&self) -> usize {
        self.factors.len()
    }

    pub fn to_xi(&self, q: u32) -> XiMonomial {
        self.factors.iter().fold(XiMonomial::one(), |acc, f| acc.mul(&f.monomial(q)))
    }

    /// Whether the degree is a base-q sum without carries, i.e. all heads and
    /// tails are distinct powers of q.
    pub fn is_carry_free(&self) -> bool {
        let mut seen: Vec<u32> = Vec::with_capacity(2 * self.factors.len());
        for f in &self.factors {
            if f.j == 0 {
                return false;
            }
            seen.push(f.r);
            seen.push(f.r + f.j);
        }
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// Which natural monomials to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    /// Only those whose degree is a carry-free base-q sum (pairings of the
    /// base-q digit support).
    Partitions,
    /// Every natural monomial of the given degree and natural degree.
    All { allow_xibar: bool },
}

/// Natural monomials in xi_1..xi_K of the given weighted degree and natural degree.
pub fn natural_monomials(degree: u64, natdeg: usize, k_max: usize, q: u32, mode: Enumeration) -> Vec<NaturalMonomial> {
    let qq = q as u64;
    let allow_xibar = matches!(mode, Enumeration::All { allow_xibar: true });
    let mut factors = Vec::new();
    let first = if allow_xibar { 0 } else { 1 };
    for j in first..=k_max.min(XI_SLOTS - 1) as u32 {
        for r in 0.. {
            let f = NaturalFactor { j, r };
            if j + r > 40 || f.degree(qq) > degree {
                break;
            }
            factors.push(f);
        }
    }
    factors.sort_by_key(|f| std::cmp::Reverse(f.degree(qq)));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    dfs(&factors, qq, 0, degree, natdeg, &mut chosen, &mut out);
    if mode == Enumeration::Partitions {
        out.retain(|m| m.is_carry_free());
    }
    out
}

fn dfs(
    factors: &[NaturalFactor],
    q: u64,
    start: usize,
    remaining: u64,
    count: usize,
    chosen: &mut Vec<NaturalFactor>,
    out: &mut Vec<NaturalMonomial>,
) {
    if count == 0 {
        if remaining == 0 {
            out.push(NaturalMonomial { factors: chosen.clone() });
        }
        return;
    }
    for idx in start..factors.len() {
        let d = factors[idx].degree(q);
        if d > remaining {
            continue;
        }
        // Factors are sorted by decreasing degree, so the rest are too small.
        if d * (count as u64) < remaining {
            break;
        }
        chosen.push(factors[idx]);
        dfs(factors, q, idx + 1, remaining - d, count - 1, chosen, out);
        chosen.pop();
    }
}

/// The sum of the given natural monomials, each with coefficient one.
pub fn natural_sum(field: Field, monomials: &[NaturalMonomial]) -> XiPoly {
    XiPoly::from_terms(field, monomials.iter().map(|m| (m.to_xi(field.q()), 1)))
}

/// The sum of the natural monomials pairing up the powers q^e, e in `exps`.
pub fn partition_sum(field: Field, exps: &[u32]) -> XiPoly {
    let q = field.q() as u64;
    let degree: u64 = exps.iter().map(|&e| q.pow(e)).sum();
    let k_max = exps.iter().max().copied().unwrap_or(0) as usize;
    let mons = natural_monomials(degree, exps.len() / 2, k_max.max(1), field.q(), Enumeration::Partitions);
    natural_sum(field, &mons)
}

/// delta_{jk}^{(i)}: pairings of {q, ..., q^(2m-1)} minus {q^(2m-i), q^j, q^k}.
pub fn delta_jk(j: usize, k: usize, i: usize, m: usize, field: Field) -> Result<XiPoly> {
    let bad = |index: usize| Error::IndexOutOfRange { what: "delta_jk index", index: index as i64 };
    if !(0 < j && j < k && k < 2 * m) {
        return Err(bad(if j == 0 || j >= k { j } else { k }));
    }
    if i == 0 || i >= 2 * m || i == 2 * m - j || i == 2 * m - k {
        return Err(bad(i));
    }
    let exps: Vec<u32> = (1..2 * m as u32).filter(|&e| ![(2 * m - i) as u32, j as u32, k as u32].contains(&e)).collect();
    Ok(partition_sum(field, &exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u2_census() {
        for s in 1..=3 {
            let f = Field::new(s).unwrap();
            let q = f.q();
            let p = partition_sum(f, &[0, 1, 2, 3]);
            let xi = |k| XiPoly::var(f, k);
            let expect = &(&(&xi(3) * &xi(1).pow(q as u64)) + &xi(2).pow(q as u64 + 1)) + &xi(1).pow((q * q) as u64 + 1);
            assert_eq!(p, expect);
        }
    }

    #[test]
    fn delta_small() {
        let f = Field::new(2).unwrap();
        assert_eq!(delta_jk(1, 2, 1, 2, f).unwrap(), XiPoly::one(f));
        assert_eq!(delta_jk(1, 2, 1, 3, f).unwrap(), XiPoly::var(f, 1).frobenius_pow(3));
        assert_eq!(delta_jk(3, 4, 1, 3, f).unwrap(), XiPoly::var(f, 1).frobenius_pow(1));
        assert!(delta_jk(1, 5, 1, 3, f).is_err());
        assert!(delta_jk(2, 1, 1, 3, f).is_err());
    }

    #[test]
    fn natural_flags() {
        let q = 4;
        let f = Field::new(2).unwrap();
        for m in natural_monomials(1 + 4 + 16 + 64 + 256 + 1024, 3, 5, q, Enumeration::All { allow_xibar: false }) {
            assert!(m.to_xi(q).is_natural(q));
            assert!(m.is_carry_free());
        }
        assert_eq!(natural_sum(f, &[]).len(), 0);
    }
}
