//! Steenrod operations on the xi-algebra, from the total operation on the
//! generators:
//!
//! P(t)(xibar_0) = xibar_0 + xi_1 t + xibar_0^q t^2
//! P(t)(xi_1)    = xi_1 + xi_2 t^q + xi_1^q t^(q+1)
//! P(t)(xi_i)    = xi_i + xi_(i-1)^q t + xi_(i+1) t^(q^i) + xi_i^q t^(q^i+1)
//!
//! A power xi_i^a splits over the binary digits of a, each digit giving a
//! Frobenius twist of the sum above. The coefficient of t^k is a sum over one
//! choice per twisted factor.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::xialg::{XiMonomial, XiPoly, XI_SLOTS};

type Factor = Vec<(u64, XiMonomial)>;

fn generator_factor(i: usize, q: u64, b: u32) -> Result<Factor> {
    let w = 1u64 << b;
    let e = 1u32 << b;
    let qe = e * q as u32;
    let v = XiMonomial::var_pow;
    if i + 1 >= XI_SLOTS && i > 0 {
        return Err(Error::IndexOutOfRange { what: "xi index under Steenrod", index: i as i64 + 1 });
    }
    Ok(match i {
        0 => vec![(0, v(0, e)), (w, v(1, e)), (2 * w, v(0, qe))],
        1 => vec![(0, v(1, e)), (q * w, v(2, e)), ((q + 1) * w, v(1, qe))],
        _ => {
            let qi = q.pow(i as u32);
            vec![(0, v(i, e)), (w, v(i - 1, qe)), (qi * w, v(i + 1, e)), ((qi + 1) * w, v(i, qe))]
        }
    })
}

/// P^k applied to a weighted-homogeneous xi-polynomial.
pub fn steenrod_xi(p: &XiPoly, k: u64) -> Result<XiPoly> {
    let field = p.field();
    let q = field.q() as u64;
    let Some(deg) = p.degree()? else { return Ok(XiPoly::zero(field)) };
    if k == 0 {
        return Ok(p.clone());
    }
    if k > deg {
        return Ok(XiPoly::zero(field));
    }
    let mut acc: FxHashMap<XiMonomial, u8> = FxHashMap::default();
    for (mono, c) in p.terms() {
        let mut factors: Vec<Factor> = Vec::new();
        for i in 0..XI_SLOTS {
            let a = mono.exponent(i);
            for b in 0..32 {
                if (a >> b) & 1 == 1 {
                    factors.push(generator_factor(i, q, b)?);
                }
            }
        }
        let mut suffix = vec![0u64; factors.len() + 1];
        for j in (0..factors.len()).rev() {
            suffix[j] = suffix[j + 1] + factors[j].last().unwrap().0;
        }
        dfs(&factors, &suffix, 0, k, XiMonomial::one(), &mut |m| {
            *acc.entry(m).or_insert(0) ^= *c;
        });
    }
    Ok(XiPoly::from_map(field, acc))
}

fn dfs(factors: &[Factor], suffix: &[u64], j: usize, remaining: u64, cur: XiMonomial, emit: &mut impl FnMut(XiMonomial)) {
    if j == factors.len() {
        if remaining == 0 {
            emit(cur);
        }
        return;
    }
    if suffix[j] < remaining {
        return;
    }
    for (t, m) in &factors[j] {
        if *t <= remaining {
            dfs(factors, suffix, j + 1, remaining - t, cur.mul(m), emit);
        }
    }
}

/// Every coefficient P^0(p), ..., P^d(p).
pub fn steenrod_xi_full(p: &XiPoly) -> Result<Vec<XiPoly>> {
    let d = p.degree()?.unwrap_or(0);
    (0..=d).map(|k| steenrod_xi(p, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn generators() {
        let f = Field::new(2).unwrap();
        let xi = |k| XiPoly::var(f, k);
        assert_eq!(steenrod_xi(&xi(0), 1).unwrap(), xi(1));
        assert!(steenrod_xi(&xi(1), 1).unwrap().is_zero());
        assert_eq!(steenrod_xi(&xi(1), 4).unwrap(), xi(2));
        assert_eq!(steenrod_xi(&xi(2), 1).unwrap(), xi(1).frobenius_pow(1));
        assert_eq!(steenrod_xi(&xi(2), 17).unwrap(), xi(2).frobenius_pow(1));
        let p = &xi(1) * &xi(2);
        assert_eq!(steenrod_xi(&p, 16).unwrap(), &xi(1) * &xi(3));
        assert_eq!(steenrod_xi(&p, 0).unwrap(), p);
        assert!(steenrod_xi(&p, 100).unwrap().is_zero());
    }
}
