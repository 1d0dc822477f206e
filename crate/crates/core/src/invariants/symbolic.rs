//! The invariants that live in R: u_m, u_m d_{i,m}, delta_i and u_m e_i^2.
//!
//! Everything here is exact in xi_1, xi_2, ... with slot 0 read as xi_0
//! where it appears. Since xi_0, xi_1, ..., xi_2m are algebraically
//! independent in S_m[z], identities proved here hold in S_m[z].

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::steenrod::steenrod_xi;
use crate::xialg::{delta_jk, partition_sum, XiPoly};

/// u_m: the pairings of {1, q, ..., q^(2m-1)}. u_0 = 1.
pub fn u_xi(m: usize, field: Field) -> XiPoly {
    let exps: Vec<u32> = (0..2 * m as u32).collect();
    partition_sum(field, &exps)
}

/// [u_m d_{0,m}, ..., u_m d_{2m,m}] via u_m d_i = P^(q^(2m-i))(u_m d_(i-1)).
pub fn ud_xi(m: usize, field: Field) -> Result<Vec<XiPoly>> {
    let q = field.q() as u64;
    let mut out = vec![u_xi(m, field)];
    for i in 1..=2 * m {
        let next = steenrod_xi(&out[i - 1], q.pow((2 * m - i) as u32))?;
        out.push(next);
    }
    Ok(out)
}

/// u_m d_{i,m} as the pairings of {1, q, ..., q^(2m)} minus q^(2m-i).
pub fn ud_xi_natural(m: usize, i: usize, field: Field) -> Result<XiPoly> {
    if i > 2 * m {
        return Err(Error::IndexOutOfRange { what: "Dickson index", index: i as i64 });
    }
    let exps: Vec<u32> = (0..=2 * m as u32).filter(|&e| e != (2 * m - i) as u32).collect();
    Ok(partition_sum(field, &exps))
}

/// delta_1 = sum over 0 < j < k < 2m-1 of xi_j xi_k delta_jk.
pub fn delta1(m: usize, field: Field) -> Result<XiPoly> {
    let mut acc = XiPoly::zero(field);
    for k in 2..(2 * m).saturating_sub(1) {
        for j in 1..k {
            let t = &(&XiPoly::var(field, j) * &XiPoly::var(field, k)) * &delta_jk(j, k, 1, m, field)?;
            acc = &acc + &t;
        }
    }
    Ok(acc)
}

/// [delta_1, ..., delta_(2m-1)] with delta_(i+1) = P^(q^(2m-1-i))(delta_i). Entry 0 is unused zero.
pub fn deltas(m: usize, field: Field) -> Result<Vec<XiPoly>> {
    let q = field.q() as u64;
    let mut out = vec![XiPoly::zero(field)];
    if m == 0 {
        return Ok(out);
    }
    out.push(delta1(m, field)?);
    for i in 1..2 * m - 1 {
        let next = steenrod_xi(&out[i], q.pow((2 * m - 1 - i) as u32))?;
        out.push(next);
    }
    Ok(out)
}

/// delta_i as the enumeration over 0 < j < k < 2m with j, k != 2m-i.
pub fn delta_enumerated(i: usize, m: usize, field: Field) -> Result<XiPoly> {
    let mut acc = XiPoly::zero(field);
    for k in 2..2 * m {
        for j in 1..k {
            if j == 2 * m - i || k == 2 * m - i {
                continue;
            }
            let t = &(&XiPoly::var(field, j) * &XiPoly::var(field, k)) * &delta_jk(j, k, i, m, field)?;
            acc = &acc + &t;
        }
    }
    Ok(acc)
}

/// The symbolic tower for one (m, q).
#[derive(Clone, Debug)]
pub struct SymbolicTower {
    pub m: usize,
    pub field: Field,
    /// u_m.
    pub u: XiPoly,
    /// u_(m-1).
    pub u_prev: XiPoly,
    /// `ud[i]` = u_m d_{i,m}, 0 <= i <= 2m.
    pub ud: Vec<XiPoly>,
    /// `ud_bar[i]` = u_(m-1) d_{i,m-1}, 0 <= i <= 2m-2.
    pub ud_bar: Vec<XiPoly>,
    /// `delta[i]`, 1 <= i <= 2m-1.
    pub delta: Vec<XiPoly>,
    /// `e_sq[i]` = u_m e_i^2 with slot 0 read as xi_0, 1 <= i <= 2m-1.
    pub e_sq: Vec<XiPoly>,
}

impl SymbolicTower {
    pub fn new(m: usize, field: Field) -> Result<Self> {
        if m == 0 {
            return Err(Error::IndexOutOfRange { what: "m", index: 0 });
        }
        let q = field.q() as u64;
        let u = u_xi(m, field);
        let ud = ud_xi(m, field)?;
        let ud_bar = ud_xi(m - 1, field)?;
        let delta = deltas(m, field)?;
        let u_q1 = u.pow(q - 1);
        let xi0 = XiPoly::var(field, 0);
        let mut tower = SymbolicTower { m, field, u_prev: ud_bar[0].clone(), u, ud, ud_bar, delta, e_sq: Vec::new() };
        let mut e_sq = vec![XiPoly::zero(field)];
        for i in 1..2 * m {
            let inner = &tower.delta[i] + &(&xi0 * &tower.ud_bar[i - 1].frobenius_pow(1));
            let corr = tower.e_correction(i);
            let mut sq = &tower.ud[i] + &(&u_q1 * &inner);
            if !corr.is_zero() {
                sq = &sq + &(&tower.u * &corr.pow(2));
            }
            e_sq.push(sq);
        }
        tower.e_sq = e_sq;
        Ok(tower)
    }

    /// e_i minus its normal form, with slot 0 read as xi_0. Nonzero only for
    /// q = 2 and i = 2m-1, where P^1(z) = z^2 contributes xi_0 ud_bar_(2m-3).
    pub fn e_correction(&self, i: usize) -> XiPoly {
        if self.field.q() == 2 && self.m >= 2 && i == 2 * self.m - 1 {
            &XiPoly::var(self.field, 0) * &self.ud_bar[2 * self.m - 3]
        } else {
            XiPoly::zero(self.field)
        }
    }

    /// The coefficient of z in e_i: u_m^(q/2-1) ud_bar_(i-1)^(q/2).
    pub fn e_z_coefficient(&self, i: usize) -> XiPoly {
        let h = self.field.q() as u64 / 2;
        &self.u.pow(h - 1) * &self.ud_bar[i - 1].pow(h)
    }

    /// b_i^2 = d_{i,m} + u^(q-2)(delta_i + xibar_0 ud_bar_(i-1)^q), scaled by u_m^2 so that it lies in R.
    pub fn b_sq_times_u2(&self, i: usize) -> XiPoly {
        let q = self.field.q() as u64;
        let inner = &self.delta[i] + &(&XiPoly::var(self.field, 0) * &self.ud_bar[i - 1].frobenius_pow(1));
        &(&self.ud[i] * &self.u) + &(&self.u.pow(q) * &inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for s in 1..=3 {
            let f = Field::new(s).unwrap();
            let q = f.q();
            let x = |k| XiPoly::var(f, k);
            assert_eq!(u_xi(1, f), x(1));
            assert!(delta1(1, f).unwrap().is_zero());
            assert_eq!(delta1(2, f).unwrap(), &x(1) * &x(2));
            let d = deltas(2, f).unwrap();
            let extra = if q == 2 { x(1).pow(4) } else { XiPoly::zero(f) };
            assert_eq!(d[2], &(&x(1) * &x(3)) + &extra);
            let ud = ud_xi(1, f).unwrap();
            assert_eq!(ud[1], x(2));
            assert_eq!(ud[2], x(1).pow(q as u64));
        }
    }

    #[test]
    fn steenrod_matches_natural_sums() {
        for s in 1..=2 {
            let f = Field::new(s).unwrap();
            for m in 1..=3 {
                let ud = ud_xi(m, f).unwrap();
                for (i, p) in ud.iter().enumerate() {
                    assert_eq!(*p, ud_xi_natural(m, i, f).unwrap(), "m={m} i={i}");
                }
                assert_eq!(ud[2 * m], u_xi(m, f).pow(f.q() as u64));
            }
        }
    }

    #[test]
    fn delta_enumeration_for_large_q() {
        let f = Field::new(2).unwrap();
        for m in 2..=3 {
            let d = deltas(m, f).unwrap();
            for i in 1..2 * m {
                assert_eq!(d[i], delta_enumerated(i, m, f).unwrap(), "m={m} i={i}");
            }
        }
    }
}
