//! Steenrod operations.
//!
//! On S[z] the total operation is the algebra map with P(t)(v) = v + v^q t on
//! linear forms. On a monomial with exponents a_i the coefficient of t^k is a
//! sum over tuples (k_i) with k_i a bit-submask of a_i (Lucas) and sum k, each
//! contributing the monomial with exponents a_i + (q-1)k_i.
//!
//! The symbolic operation on the xi-algebra lives in [`xi`].

mod xi;

pub use xi::{steenrod_xi, steenrod_xi_full};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Poly, MAX_VARS};

/// All coefficients of P(t)(f) for a homogeneous f of degree d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteenrodExpansion {
    pub source: Poly,
    pub coefficients: Vec<Poly>,
}

impl SteenrodExpansion {
    pub fn get(&self, k: usize) -> Poly {
        self.coefficients.get(k).cloned().unwrap_or_else(|| Poly::zero(self.source.ring()))
    }
}

/// The coefficient of t^k in P(t)(f).
pub fn steenrod_k(f: &Poly, k: u64) -> Result<Poly> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    Ok(steenrod_k_unchecked(f, k))
}

pub(crate) fn steenrod_k_unchecked(f: &Poly, k: u64) -> Poly {
    let ring = f.ring();
    if k == 0 {
        return f.clone();
    }
    match f.degree() {
        None => return Poly::zero(ring),
        Some(d) if k > d as u64 => return Poly::zero(ring),
        _ => {}
    }
    let n = ring.nvars();
    let shift = ring.field().q() - 1;
    let mut acc: FxHashMap<Monomial, u8> = FxHashMap::default();
    let mut chosen = [0u32; MAX_VARS];
    for (mono, c) in f.terms() {
        let a = mono.exponents();
        let mut suffix = [0u64; MAX_VARS + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + a[i] as u64;
        }
        let mut emit = |ks: &[u32; MAX_VARS]| {
            let mut e = *a;
            for i in 0..n {
                e[i] += shift * ks[i];
            }
            *acc.entry(Monomial::new(e)).or_insert(0) ^= *c;
        };
        lucas_dfs(a, &suffix, n, 0, k, &mut chosen, &mut emit);
    }
    Poly::from_terms(ring, acc.into_iter().filter(|t| t.1 != 0))
}

/// Enumerates tuples ks with ks[i] a submask of a[i] and sum(ks) = remaining.
fn lucas_dfs(
    a: &[u32; MAX_VARS],
    suffix: &[u64; MAX_VARS + 1],
    n: usize,
    i: usize,
    remaining: u64,
    chosen: &mut [u32; MAX_VARS],
    emit: &mut impl FnMut(&[u32; MAX_VARS]),
) {
    if remaining == 0 {
        for c in chosen.iter_mut().take(n).skip(i) {
            *c = 0;
        }
        emit(chosen);
        return;
    }
    if i == n || suffix[i] < remaining {
        return;
    }
    let ai = a[i];
    // Walk the submasks of ai in decreasing order, including 0.
    let mut sub = ai;
    loop {
        if (sub as u64) <= remaining && suffix[i + 1] >= remaining - sub as u64 {
            chosen[i] = sub;
            lucas_dfs(a, suffix, n, i + 1, remaining - sub as u64, chosen, emit);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & ai;
    }
}

/// Every coefficient P^0(f), ..., P^d(f).
pub fn steenrod_full(f: &Poly) -> Result<SteenrodExpansion> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let d = f.degree().unwrap_or(0) as u64;
    let coefficients = (0..=d).map(|k| steenrod_k_unchecked(f, k)).collect();
    Ok(SteenrodExpansion { source: f.clone(), coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::ring::Ring;

    #[test]
    fn linear_form() {
        let r = Ring::orthogonal(1, Field::new(2).unwrap()).unwrap();
        let v = &r.var(0) + &r.var(2);
        assert_eq!(steenrod_k(&v, 1).unwrap(), v.pow(4));
        assert_eq!(steenrod_k(&v, 0).unwrap(), v);
        assert!(steenrod_k(&v, 2).unwrap().is_zero());
    }

    #[test]
    fn non_homogeneous_rejected() {
        let r = Ring::orthogonal(1, Field::new(1).unwrap()).unwrap();
        let f = &r.var(0) + &Poly::one(r);
        assert_eq!(steenrod_k(&f, 1), Err(Error::NonHomogeneous));
    }

    #[test]
    fn xi0_expansion() {
        for s in 1..=3 {
            let r = Ring::orthogonal(2, Field::new(s).unwrap()).unwrap();
            let q = r.field().q();
            let xi0 = r.xi0();
            let full = steenrod_full(&xi0).unwrap();
            assert_eq!(full.coefficients.len(), 3);
            assert_eq!(full.get(2), xi0.frobenius_pow(1));
            let xi1 = steenrod_k(&xi0, 1).unwrap();
            let expect = (1..=2).fold(Poly::zero(r), |acc, j| {
                let (x, y) = (r.var(r.x(j)), r.var(r.y(j)));
                &(&acc + &(&x * &y.pow(q as u64))) + &(&y * &x.pow(q as u64))
            });
            assert_eq!(xi1, expect);
        }
    }
}
