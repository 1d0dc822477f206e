//! Sparse polynomials over GF(q).
//!
//! The main ring is S_m[z] = F_q[y_1..y_m, z, x_m..x_1], stored in exactly
//! that variable order. An auxiliary "affine" layout F_q[x_1..x_n] hosts the
//! Dickson invariants before they are relabelled into S_m.

mod monomial;
mod poly;
mod text;

pub(crate) use text::text_kv;

pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::Poly;
pub(crate) use poly::TermMap;

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Layout {
    /// `[y_1..y_m, z, x_m..x_1]`, 2m+1 variables.
    Orthogonal { m: u8 },
    /// `[x_1..x_n]`.
    Affine { n: u8 },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Field,
    layout: Layout,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layout {
            Layout::Orthogonal { m } => write!(f, "S_{}[z] over {:?}", m, self.field),
            Layout::Affine { n } => write!(f, "F_q[x_1..x_{}] over {:?}", n, self.field),
        }
    }
}

impl Ring {
    pub fn orthogonal(m: usize, field: Field) -> Result<Ring> {
        if m == 0 || 2 * m + 1 > MAX_VARS {
            return Err(Error::IndexOutOfRange { what: "number of hyperbolic pairs", index: m as i64 });
        }
        Ok(Ring { field, layout: Layout::Orthogonal { m: m as u8 } })
    }

    pub fn affine(n: usize, field: Field) -> Result<Ring> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::IndexOutOfRange { what: "number of variables", index: n as i64 });
        }
        Ok(Ring { field, layout: Layout::Affine { n: n as u8 } })
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        match self.layout {
            Layout::Orthogonal { m } => 2 * m as usize + 1,
            Layout::Affine { n } => n as usize,
        }
    }

    /// Number of hyperbolic pairs, for the orthogonal layout.
    pub fn m(&self) -> Option<usize> {
        match self.layout {
            Layout::Orthogonal { m } => Some(m as usize),
            Layout::Affine { .. } => None,
        }
    }

    fn expect_m(&self) -> usize {
        self.m().expect("orthogonal ring required")
    }

    /// Index of y_i (1-based i).
    pub fn y(&self, i: usize) -> usize {
        let m = self.expect_m();
        assert!((1..=m).contains(&i), "y_{i} out of range");
        i - 1
    }

    /// Index of x_i (1-based i).
    pub fn x(&self, i: usize) -> usize {
        match self.layout {
            Layout::Orthogonal { m } => {
                let m = m as usize;
                assert!((1..=m).contains(&i), "x_{i} out of range");
                2 * m + 1 - i
            }
            Layout::Affine { n } => {
                assert!((1..=n as usize).contains(&i), "x_{i} out of range");
                i - 1
            }
        }
    }

    pub fn z(&self) -> usize {
        self.expect_m()
    }

    pub fn var_name(&self, idx: usize) -> String {
        match self.layout {
            Layout::Orthogonal { m } => {
                let m = m as usize;
                if idx < m {
                    format!("y{}", idx + 1)
                } else if idx == m {
                    "z".to_string()
                } else {
                    format!("x{}", 2 * m + 1 - idx)
                }
            }
            Layout::Affine { .. } => format!("x{}", idx + 1),
        }
    }

    pub fn var(&self, idx: usize) -> Poly {
        let mut exps = [0u32; MAX_VARS];
        exps[idx] = 1;
        Poly::monomial(*self, Monomial::new(exps), 1)
    }

    /// The hyperbolic part x_1y_1 + ... + x_my_m of the quadratic form.
    pub fn xibar0(&self) -> Poly {
        let m = self.expect_m();
        let terms = (1..=m).map(|j| {
            let mut e = [0u32; MAX_VARS];
            e[self.x(j)] = 1;
            e[self.y(j)] = 1;
            (Monomial::new(e), 1u8)
        });
        Poly::from_terms(*self, terms)
    }

    /// The quadratic form z^2 + x_1y_1 + ... + x_my_m.
    pub fn xi0(&self) -> Poly {
        let mut e = [0u32; MAX_VARS];
        e[self.z()] = 2;
        &self.xibar0() + &Poly::monomial(*self, Monomial::new(e), 1)
    }

    /// Monomial symmetric function: the sum of all distinct monomials obtained
    /// by permuting the exponents of `beta` among the variables it involves.
    pub fn sigma(&self, beta: &Monomial) -> Result<Poly> {
        if let Some(m) = self.m() {
            if beta.exponent(m) != 0 {
                return Err(Error::ZInOrbitSum);
            }
        }
        let support: Vec<usize> = (0..self.nvars()).filter(|&i| beta.exponent(i) > 0).collect();
        let mut exps: Vec<u32> = support.iter().map(|&i| beta.exponent(i)).collect();
        exps.sort_unstable();
        let mut out = Vec::new();
        loop {
            let mut e = [0u32; MAX_VARS];
            for (&v, &x) in support.iter().zip(&exps) {
                e[v] = x;
            }
            out.push((Monomial::new(e), 1u8));
            if !next_permutation(&mut exps) {
                break;
            }
        }
        Ok(Poly::from_terms(*self, out))
    }
}

/// Lexicographic next permutation; returns false after the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2(m: usize, s: u32) -> Ring {
        Ring::orthogonal(m, Field::new(s).unwrap()).unwrap()
    }

    #[test]
    fn variable_order() {
        let r = s2(2, 1);
        let names: Vec<_> = (0..r.nvars()).map(|i| r.var_name(i)).collect();
        assert_eq!(names, ["y1", "y2", "z", "x2", "x1"]);
        assert_eq!(r.x(1), 4);
        assert_eq!(r.y(2), 1);
    }

    #[test]
    fn sigma_counts() {
        let r = Ring::affine(3, Field::new(2).unwrap()).unwrap();
        let beta = Monomial::from_slice(&[1, 4, 16]);
        assert_eq!(r.sigma(&beta).unwrap().len(), 6);
        let beta = Monomial::from_slice(&[1, 1, 0]);
        let s = r.sigma(&beta).unwrap();
        assert_eq!(s, &r.var(0) * &r.var(1));
    }

    #[test]
    fn sigma_rejects_z() {
        let r = s2(1, 1);
        let mut e = [0u32; MAX_VARS];
        e[r.z()] = 1;
        assert_eq!(r.sigma(&Monomial::new(e)), Err(Error::ZInOrbitSum));
    }
}
