//! Dimensions of the spaces of invariant forms of a given degree.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::group::GroupElement;
use crate::ring::{Monomial, Poly, Ring, MAX_VARS};

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, rem: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = rem;
            out.push(Monomial::new(*cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            rec(i + 1, n, rem - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(0, n, d, &mut [0; MAX_VARS], &mut out);
    }
    out
}

fn axpy(field: Field, dst: &mut [u8], src: &[u8], c: u8) {
    if c == 1 {
        for (a, b) in dst.iter_mut().zip(src) {
            *a ^= b;
        }
    } else {
        let mut tbl = [0u8; 16];
        for (x, t) in tbl.iter_mut().enumerate() {
            *t = field.mul(c, x as u8);
        }
        for (a, b) in dst.iter_mut().zip(src) {
            *a ^= tbl[*b as usize];
        }
    }
}

/// (g - 1) applied to each basis monomial, as sparse columns.
fn difference_columns(g: &GroupElement, ring: &Ring, basis: &[Monomial], index: &FxHashMap<Monomial, usize>) -> Result<Vec<Vec<(usize, u8)>>> {
    let images = g.images(ring);
    let mut powers: FxHashMap<(usize, u32), Poly> = FxHashMap::default();
    let mut out = Vec::with_capacity(basis.len());
    for beta in basis {
        let mut img = Poly::one(*ring);
        for (v, image) in images.iter().enumerate() {
            let e = beta.exponent(v);
            if e > 0 {
                let p = powers.entry((v, e)).or_insert_with(|| image.pow(e as u64));
                img = &img * p;
            }
        }
        img = &img + &Poly::monomial(*ring, *beta, 1);
        let col = img
            .terms()
            .iter()
            .map(|(m, c)| index.get(m).map(|&i| (i, *c)).ok_or(Error::NonHomogeneous))
            .collect::<Result<Vec<_>>>()?;
        out.push(col);
    }
    Ok(out)
}

/// dim of the degree-d forms fixed by every generator, by successively
/// intersecting kernels of g - 1. Fails if the monomial basis exceeds `budget`.
pub fn fixed_space_dim(ring: &Ring, gens: &[GroupElement], d: u32, budget: usize) -> Result<usize> {
    let field = ring.field();
    let basis = monomials_of_degree(ring.nvars(), d);
    let n = basis.len();
    if n > budget {
        return Err(Error::BudgetExceeded { what: format!("degree {d} monomial basis"), terms: n, budget });
    }
    let index: FxHashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // None stands for the full space with the monomial basis.
    let mut kernel: Option<Vec<Vec<u8>>> = None;
    for g in gens {
        let cols = difference_columns(g, ring, &basis, &index)?;
        let k = kernel.as_ref().map_or(n, |v| v.len());
        if k == 0 {
            return Ok(0);
        }
        let mut pivots: Vec<(usize, Vec<u8>)> = Vec::new();
        let mut next: Vec<Vec<u8>> = Vec::new();
        for v in 0..k {
            let mut row = vec![0u8; n + k];
            match &kernel {
                None => {
                    for &(i, c) in &cols[v] {
                        row[i] ^= c;
                    }
                }
                Some(kv) => {
                    for (b, &coef) in kv[v].iter().enumerate() {
                        if coef != 0 {
                            for &(i, c) in &cols[b] {
                                row[i] ^= field.mul(coef, c);
                            }
                        }
                    }
                }
            }
            row[n + v] = 1;
            for (p, prow) in &pivots {
                let c = row[*p];
                if c != 0 {
                    axpy(field, &mut row, prow, field.mul(c, field.inv(prow[*p])?));
                }
            }
            match row[..n].iter().position(|&c| c != 0) {
                Some(p) => pivots.push((p, row)),
                None => {
                    let combo = &row[n..];
                    next.push(match &kernel {
                        None => combo.to_vec(),
                        Some(kv) => {
                            let mut acc = vec![0u8; n];
                            for (j, &a) in combo.iter().enumerate() {
                                if a != 0 {
                                    axpy(field, &mut acc, &kv[j], a);
                                }
                            }
                            acc
                        }
                    });
                }
            }
        }
        kernel = Some(next);
    }
    Ok(kernel.map_or(n, |v| v.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generators;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 12).len(), 1820);
    }

    #[test]
    fn small_fixed_dims() {
        let f = Field::new(1).unwrap();
        let ring = Ring::orthogonal(1, f).unwrap();
        let gens = generators(&ring).unwrap();
        // Invariants are F_2[xi_0, xi_1, e_1] with degrees 2, 3, 1.
        let dims: Vec<usize> = (0..=4).map(|d| fixed_space_dim(&ring, &gens, d, 1000).unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 4]);
    }
}
