//! Matrices over R and their determinants.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::xialg::{PTable, XiPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiMatrix {
    field: Field,
    rows: Vec<Vec<XiPoly>>,
}

impl XiMatrix {
    pub fn new(field: Field, rows: Vec<Vec<XiPoly>>) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch { expected: width, got: bad.len() });
        }
        Ok(XiMatrix { field, rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Entry at 1-based (row, col).
    pub fn entry(&self, r: usize, c: usize) -> &XiPoly {
        &self.rows[r - 1][c - 1]
    }

    pub fn rows(&self) -> &[Vec<XiPoly>] {
        &self.rows
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&XiPoly) -> XiPoly) -> XiMatrix {
        XiMatrix { field: self.field, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    /// Drops the 1-based column `c`.
    pub fn without_column(&self, c: usize) -> XiMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k + 1 != c).map(|(_, x)| x.clone()).collect())
            .collect();
        XiMatrix { field: self.field, rows }
    }

    /// Determinant by cofactor expansion down the rows, memoised on the set
    /// of columns still available. Signs are irrelevant in characteristic 2.
    pub fn det(&self) -> Result<XiPoly> {
        let n = self.nrows();
        if self.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.ncols() });
        }
        if n > 16 {
            return Err(Error::IndexOutOfRange { what: "determinant size", index: n as i64 });
        }
        let mut memo = FxHashMap::default();
        Ok(self.det_rec(0, (1u32 << n) - 1, &mut memo))
    }

    fn det_rec(&self, row: usize, cols: u32, memo: &mut FxHashMap<u32, XiPoly>) -> XiPoly {
        if row == self.nrows() {
            return XiPoly::one(self.field);
        }
        if let Some(d) = memo.get(&cols) {
            return d.clone();
        }
        let mut acc = XiPoly::zero(self.field);
        for c in 0..self.ncols() {
            if cols & (1 << c) == 0 || self.rows[row][c].is_zero() {
                continue;
            }
            let minor = self.det_rec(row + 1, cols & !(1 << c), memo);
            if !minor.is_zero() {
                acc = &acc + &(&self.rows[row][c] * &minor);
            }
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// The determinant with 1-based column `c` removed.
    pub fn minor(&self, c: usize) -> Result<XiPoly> {
        self.without_column(c).det()
    }
}

/// The 2m x (2m+1) matrix whose maximal minors give u_m and u_m d_{i,m}.
///
/// Rows 1..m hold xi_|c-r|^(q^(min(c,r)-1)) off the diagonal. Row m+k, with
/// i = m+1-k, has 1 in column k, P_{i,j}^(q^(m-j)) in column m+1+j for
/// i <= j < m, and P_{i,m} in the last column.
pub fn m_matrix(m: usize, table: &PTable) -> Result<XiMatrix> {
    let field = table.field();
    let q = field.q();
    let width = 2 * m + 1;
    let mut rows = Vec::with_capacity(2 * m);
    for r in 1..=m {
        let row = (1..=width)
            .map(|c| {
                if c == r {
                    XiPoly::zero(field)
                } else {
                    XiPoly::var(field, c.abs_diff(r)).pow(q.pow((c.min(r) - 1) as u32) as u64)
                }
            })
            .collect();
        rows.push(row);
    }
    for k in 1..=m {
        let i = m + 1 - k;
        let mut row = vec![XiPoly::zero(field); width];
        row[k - 1] = XiPoly::one(field);
        for j in i..=m {
            row[m + j] = table.get(i, j)?.frobenius_pow((m - j) as u32);
        }
        rows.push(row);
    }
    XiMatrix::new(field, rows)
}

pub fn m_minor(m: usize, j: usize, table: &PTable) -> Result<XiPoly> {
    m_matrix(m, table)?.minor(j)
}

/// The (2m-2) x (2m-2) matrix: M_(m-1) without its last column, each entry
/// raised to the power q/2. Its determinant is u_(m-1)^(q/2).
pub fn m_tilde_matrix(m: usize, table: &PTable) -> Result<XiMatrix> {
    if m < 2 {
        return Err(Error::IndexOutOfRange { what: "m for the reduced matrix", index: m as i64 });
    }
    let h = table.field().q() as u64 / 2;
    Ok(m_matrix(m - 1, table)?.without_column(2 * m - 1).map(|x| x.pow(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{u_xi, ud_xi};

    #[test]
    fn minors_of_m1() {
        let f = Field::new(2).unwrap();
        let t = PTable::solve(1, f).unwrap();
        let x = |k| XiPoly::var(f, k);
        assert_eq!(m_minor(1, 3, &t).unwrap(), x(1));
        assert_eq!(m_minor(1, 2, &t).unwrap(), x(2));
        assert_eq!(m_minor(1, 1, &t).unwrap(), x(1).pow(4));
    }

    #[test]
    fn determinant_identity() {
        for s in 1..=2 {
            let f = Field::new(s).unwrap();
            let t = PTable::solve(3, f).unwrap();
            for m in 1..=3 {
                let mm = m_matrix(m, &t).unwrap();
                let ud = ud_xi(m, f).unwrap();
                assert_eq!(mm.minor(2 * m + 1).unwrap(), u_xi(m, f));
                for i in 1..=2 * m {
                    assert_eq!(mm.minor(2 * m + 1 - i).unwrap(), ud[i], "m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn reduced_matrix() {
        for s in 1..=2 {
            let f = Field::new(s).unwrap();
            let q = f.q() as u64;
            let t = PTable::solve(2, f).unwrap();
            for m in 2..=3 {
                let mt = m_tilde_matrix(m, &t).unwrap();
                let d = mt.det().unwrap();
                assert_eq!(d, u_xi(m - 1, f).pow(q / 2));
                assert_eq!(d.pow(2), u_xi(m - 1, f).pow(q));
            }
            let x = |k| XiPoly::var(f, k);
            let mt = m_tilde_matrix(3, &t).unwrap();
            assert_eq!(*mt.entry(1, 4), x(3).pow(q / 2));
            assert_eq!(*mt.entry(2, 4), x(2).pow(q * q / 2));
            assert_eq!(*mt.entry(4, 4), x(1).pow((q - 1) * q * q / 2));
            assert!(mt.entry(3, 2).is_zero() && mt.entry(3, 1) == &XiPoly::one(f));
        }
    }
}
