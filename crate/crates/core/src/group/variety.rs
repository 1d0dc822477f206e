//! Point counts over extension fields for the parameter-system claims.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::group::GroupElement;
use crate::ring::{Poly, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCheck {
    pub points: usize,
    pub bad: usize,
    /// A coordinate vector of the first offending point, if any.
    pub witness: Option<Vec<u8>>,
}

impl PointCheck {
    pub fn passed(&self) -> bool {
        self.bad == 0
    }
}

/// GF(2^t), t <= 8, by log tables over a primitive modulus. Only used to
/// evaluate polynomials at points of extension fields.
struct PointField {
    t: u32,
    log: Vec<u16>,
    exp: Vec<u8>,
}

const PRIMITIVE: [u16; 9] = [0, 0b11, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d];

impl PointField {
    fn new(t: u32) -> Result<Self> {
        if !(1..=8).contains(&t) {
            return Err(Error::FieldDegree(t));
        }
        let order = (1usize << t) - 1;
        let mut exp = vec![0u8; 2 * order];
        let mut log = vec![0u16; order + 1];
        let mut x: u16 = 1;
        for i in 0..order {
            exp[i] = x as u8;
            exp[i + order] = x as u8;
            log[x as usize] = i as u16;
            x <<= 1;
            if x >> t & 1 == 1 {
                x ^= PRIMITIVE[t as usize];
            }
            if t == 1 {
                x = 1;
            }
        }
        Ok(PointField { t, log, exp })
    }

    fn size(&self) -> u32 {
        1 << self.t
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    fn pow(&self, a: u8, e: u32) -> u8 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (1u64 << self.t) - 1;
        self.exp[((self.log[a as usize] as u64 * e as u64) % order) as usize]
    }

    /// Image of GF(q) under an embedding: the generator goes to a root of its modulus.
    fn embedding(&self, field: Field) -> Result<Vec<u8>> {
        if !self.t.is_multiple_of(field.s()) {
            return Err(Error::FieldMismatch(field.q(), self.size()));
        }
        let modulus = field.modulus();
        let s = field.s();
        let root = (0..self.size())
            .map(|r| r as u8)
            .find(|&r| (0..=s).filter(|b| modulus >> b & 1 == 1).fold(0u8, |acc, b| acc ^ self.pow(r, b)) == 0)
            .ok_or(Error::FieldMismatch(field.q(), self.size()))?;
        Ok((0..field.q())
            .map(|v| (0..s).filter(|b| v >> b & 1 == 1).fold(0u8, |acc, b| acc ^ self.pow(root, b)))
            .collect())
    }

    fn evaluate(&self, f: &Poly, emb: &[u8], point: &[u8]) -> u8 {
        let mut acc = 0u8;
        for (m, c) in f.terms() {
            let mut v = emb[*c as usize];
            for (i, &p) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = self.mul(v, self.pow(p, e));
                    if v == 0 {
                        break;
                    }
                }
            }
            acc ^= v;
        }
        acc
    }
}

fn extension(field: Field, k: u32) -> Result<(PointField, Vec<u8>)> {
    let ext = PointField::new(field.s() * k)?;
    let emb = ext.embedding(field)?;
    Ok((ext, emb))
}

fn for_each_point(n: usize, q: u32, mut f: impl FnMut(&[u8])) {
    let mut p = vec![0u8; n];
    loop {
        f(&p);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if (p[i] as u32) + 1 < q {
                p[i] += 1;
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// Every common zero of `polys` over GF(q^k) must be the origin.
pub fn nullcone_check(ring: &Ring, polys: &[Poly], k: u32) -> Result<PointCheck> {
    let (ext, emb) = extension(ring.field(), k)?;
    let mut out = PointCheck { points: 0, bad: 0, witness: None };
    for_each_point(ring.nvars(), ext.size(), |p| {
        out.points += 1;
        if p.iter().any(|&c| c != 0) && polys.iter().all(|f| ext.evaluate(f, &emb, p) == 0) {
            out.bad += 1;
            out.witness.get_or_insert_with(|| p.to_vec());
        }
    });
    Ok(out)
}

/// Over GF(q^k), a point is a zero of xi_1..xi_m iff some group element
/// sends y_1..y_m to forms vanishing there.
pub fn coverage_check(ring: &Ring, xis: &[Poly], elements: &[GroupElement], k: u32) -> Result<PointCheck> {
    let m = ring.m().ok_or_else(|| Error::RingMismatch("coverage needs S_m[z]".into()))?;
    let (ext, emb) = extension(ring.field(), k)?;
    let n = ring.nvars();
    let rows: Vec<Vec<Vec<u8>>> = elements
        .iter()
        .map(|g| (1..=m).map(|i| g.row(ring.y(i)).iter().map(|&c| emb[c as usize]).collect()).collect())
        .collect();
    let mut out = PointCheck { points: 0, bad: 0, witness: None };
    for_each_point(n, ext.size(), |p| {
        out.points += 1;
        let on_variety = xis.iter().all(|f| ext.evaluate(f, &emb, p) == 0);
        let covered = rows.iter().any(|forms| {
            forms.iter().all(|row| row.iter().zip(p).fold(0u8, |acc, (&a, &b)| acc ^ ext.mul(a, b)) == 0)
        });
        if on_variety != covered {
            out.bad += 1;
            out.witness.get_or_insert_with(|| p.to_vec());
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generators, group_elements};
    use crate::invariants::InvariantSet;

    #[test]
    fn embeddings_are_ring_maps() {
        for s in 1..=4 {
            let f = Field::new(s).unwrap();
            for k in 1..=8 / s {
                let (ext, emb) = extension(f, k).unwrap();
                for a in 0..f.q() as u8 {
                    for b in 0..f.q() as u8 {
                        assert_eq!(emb[f.mul(a, b) as usize], ext.mul(emb[a as usize], emb[b as usize]));
                        assert_eq!(emb[(a ^ b) as usize], emb[a as usize] ^ emb[b as usize]);
                    }
                }
            }
        }
        assert!(PointField::new(9).is_err());
    }

    #[test]
    fn m1_parameters_over_gf64() {
        let set = InvariantSet::new(1, Field::new(3).unwrap()).unwrap();
        let polys = [set.xi(0).unwrap().clone(), set.xi(1).unwrap().clone(), set.e(1).unwrap().clone()];
        let pc = nullcone_check(set.ring(), &polys, 2).unwrap();
        assert_eq!(pc.points, 1 << 18);
        assert!(pc.passed());
        // Dropping e_1 leaves nonzero common zeros.
        assert!(!nullcone_check(set.ring(), &polys[..2], 2).unwrap().passed());
    }

    #[test]
    fn coverage_m1_q2() {
        let set = InvariantSet::new(1, Field::new(1).unwrap()).unwrap();
        let g = group_elements(&generators(set.ring()).unwrap(), set.field(), 100).unwrap();
        let pc = coverage_check(set.ring(), &[set.xi(1).unwrap().clone()], &g, 3).unwrap();
        assert!(pc.passed());
    }
}
