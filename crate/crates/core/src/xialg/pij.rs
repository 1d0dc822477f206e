//! The P_{i,j} of the Dickson row relations
//! d_{j+i,j} = sum_{l=i}^{j} P_{i,l}^(q^(j-l)) d_{j-l,j}, d_{0,j} = 1.
//!
//! Multiplying by u_j puts every term in R, so P_{i,j} is solved level by
//! level as an exact quotient by u_j.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::invariants::{u_xi, ud_xi};
use crate::xialg::XiPoly;

#[derive(Clone, Debug)]
pub struct PTable {
    field: Field,
    levels: usize,
    /// `p[j][i]` for 1 <= i <= j.
    p: Vec<Vec<XiPoly>>,
}

impl PTable {
    pub fn solve(levels: usize, field: Field) -> Result<Self> {
        let q = field.q() as u64;
        let mut p: Vec<Vec<XiPoly>> = vec![Vec::new()];
        for j in 1..=levels {
            let u = u_xi(j, field);
            let ud = ud_xi(j, field)?;
            let mut row = vec![XiPoly::zero(field)];
            for i in 1..=j {
                let mut num = ud[j + i].clone();
                for l in i..j {
                    num = &num + &(&p[l][i].frobenius_pow((j - l) as u32) * &ud[j - l]);
                }
                let pij = num.div_exact(&u)?.ok_or_else(|| {
                    Error::NoSolution(format!("u_{j} does not divide the row relation for P_{{{i},{j}}}"))
                })?;
                let expect = q.pow(2 * j as u32) - q.pow((j - i) as u32);
                if pij.degree()? != Some(expect) {
                    return Err(Error::NoSolution(format!("P_{{{i},{j}}} has degree {:?}, expected {expect}", pij.degree()?)));
                }
                row.push(pij);
            }
            p.push(row);
        }
        Ok(PTable { field, levels, p })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    /// P_{i,j}, 1 <= i <= j <= levels.
    pub fn get(&self, i: usize, j: usize) -> Result<&XiPoly> {
        if j == 0 || j > self.levels {
            return Err(Error::IndexOutOfRange { what: "P_{i,j} level", index: j as i64 });
        }
        if i == 0 || i > j {
            return Err(Error::IndexOutOfRange { what: "P_{i,j} row", index: i as i64 });
        }
        Ok(&self.p[j][i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_entries() {
        for s in 1..=2 {
            let f = Field::new(s).unwrap();
            let q = f.q() as u64;
            let t = PTable::solve(3, f).unwrap();
            assert_eq!(*t.get(1, 1).unwrap(), XiPoly::var(f, 1).pow(q - 1));
            for j in 1..=3 {
                assert_eq!(*t.get(j, j).unwrap(), u_xi(j, f).pow(q - 1));
            }
            assert!(t.get(2, 1).is_err());
        }
    }
}
