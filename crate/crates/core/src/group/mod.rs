//! The orthogonal group O(2m+1, q) acting on S_m[z], generated by lifts of
//! symplectic transvections.

mod fixed;
mod variety;

pub use fixed::{fixed_space_dim, monomials_of_degree};
pub use variety::{coverage_check, nullcone_check, PointCheck};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::ring::{Monomial, Poly, Ring, MAX_VARS};

/// A linear substitution of S_m[z]: row i holds the coefficients of the
/// image of variable i, in ring variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    n: usize,
    entries: Vec<u8>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        GroupElement { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, var: usize, coord: usize) -> u8 {
        self.entries[var * self.n + coord]
    }

    /// Image of variable `var` as a coefficient row.
    pub fn row(&self, var: usize) -> &[u8] {
        &self.entries[var * self.n..(var + 1) * self.n]
    }

    /// The substitution "first self, then other": var -> self(var) -> other applied to it.
    pub fn then(&self, other: &GroupElement, field: Field) -> GroupElement {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] ^= field.mul(a, other.entries[k * n + j]);
                }
            }
        }
        GroupElement { n, entries }
    }

    /// Images of the variables as linear forms.
    pub fn images(&self, ring: &Ring) -> Vec<Poly> {
        (0..self.n)
            .map(|i| {
                let terms = (0..self.n).filter(|&j| self.entry(i, j) != 0).map(|j| {
                    let mut e = [0u32; MAX_VARS];
                    e[j] = 1;
                    (Monomial::new(e), self.entry(i, j))
                });
                Poly::from_terms(*ring, terms)
            })
            .collect()
    }

    pub fn act(&self, f: &Poly) -> Result<Poly> {
        if f.ring().nvars() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: f.ring().nvars() });
        }
        f.substitute(&self.images(&f.ring()))
    }

    pub fn fixes(&self, f: &Poly) -> Result<bool> {
        Ok(self.act(f)? == *f)
    }
}

/// Ring indices of the 2m symplectic coordinates: y_1..y_m, x_m..x_1.
fn symplectic_vars(ring: &Ring) -> Vec<usize> {
    let z = ring.z();
    (0..ring.nvars()).filter(|&i| i != z).collect()
}

/// The Gram matrix of the alternating form in the coordinates
/// y_1..y_m, x_m..x_1: antidiagonal ones, pairing y_i with x_i.
pub fn bilinear_matrix(m: usize) -> Vec<Vec<u8>> {
    (0..2 * m).map(|r| (0..2 * m).map(|c| u8::from(r + c == 2 * m - 1)).collect()).collect()
}

fn bilinear(field: Field, a: &[u8], b: &[u8]) -> u8 {
    let n = a.len();
    (0..n).fold(0, |acc, i| acc ^ field.mul(a[i], b[n - 1 - i]))
}

/// T = I + alpha v v^T J, the symplectic transvection a -> a + alpha B(v, a) v.
pub fn symplectic_transvection(field: Field, v: &[u8], alpha: u8) -> Result<Vec<Vec<u8>>> {
    if v.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    if alpha == 0 {
        return Err(Error::ZeroInverse);
    }
    let n = v.len();
    if !n.is_multiple_of(2) {
        return Err(Error::DimensionMismatch { expected: n + 1, got: n });
    }
    let mut t = vec![vec![0u8; n]; n];
    for (c, col) in (0..n).map(|c| (c, (0..n).map(|k| u8::from(k == c)).collect::<Vec<u8>>())) {
        let s = field.mul(alpha, bilinear(field, v, &col));
        for r in 0..n {
            t[r][c] = col[r] ^ field.mul(s, v[r]);
        }
    }
    Ok(t)
}

/// Lifts a symplectic matrix (acting on the y, x coordinates) to S_m[z]:
/// z -> z + sqrt(xibar_0 + g(xibar_0)).
pub fn orthogonal_lift(ring: &Ring, sym: &[Vec<u8>]) -> Result<GroupElement> {
    let coords = symplectic_vars(ring);
    let n = ring.nvars();
    if sym.len() != coords.len() {
        return Err(Error::DimensionMismatch { expected: coords.len(), got: sym.len() });
    }
    let mut g = GroupElement::identity(n);
    for (k, &var) in coords.iter().enumerate() {
        for j in 0..n {
            g.entries[var * n + j] = 0;
        }
        for (l, &target) in coords.iter().enumerate() {
            // Column k of sym is the image of coordinate k.
            g.entries[var * n + target] = sym[l][k];
        }
    }
    let xibar = ring.xibar0();
    let moved = g.act(&xibar)?;
    let ell = (&xibar + &moved).sqrt()?;
    if ell.degree().unwrap_or(1) != 1 {
        return Err(Error::Consistency("orthogonal lift is not linear".into()));
    }
    let z = ring.z();
    for (mono, c) in ell.terms() {
        let j = (0..n).find(|&j| mono.exponent(j) == 1).expect("linear term");
        g.entries[z * n + j] ^= *c;
    }
    if g.act(&ring.xi0())? != ring.xi0() {
        return Err(Error::Consistency("lift does not fix xi_0".into()));
    }
    Ok(g)
}

/// Lifted transvections for v in {l_i, u_i, l_i + l_j, u_i + u_j, l_i + u_j}
/// (l_i, u_i the hyperbolic basis) and alpha over a GF(2)-basis of the field.
pub fn generators(ring: &Ring) -> Result<Vec<GroupElement>> {
    let m = ring.m().ok_or_else(|| Error::RingMismatch("generators need S_m[z]".into()))?;
    let field = ring.field();
    let n = 2 * m;
    let unit = |k: usize| (0..n).map(|i| u8::from(i == k)).collect::<Vec<u8>>();
    let lam = |i: usize| unit(i - 1);
    let mu = |i: usize| unit(n - i);
    let sum = |a: Vec<u8>, b: Vec<u8>| a.iter().zip(&b).map(|(x, y)| x ^ y).collect::<Vec<u8>>();
    let mut vs = Vec::new();
    for i in 1..=m {
        vs.push(lam(i));
        vs.push(mu(i));
    }
    for i in 1..=m {
        for j in i + 1..=m {
            vs.push(sum(lam(i), lam(j)));
            vs.push(sum(mu(i), mu(j)));
        }
        for j in 1..=m {
            vs.push(sum(lam(i), mu(j)));
        }
    }
    let mut out = Vec::new();
    for v in &vs {
        for &alpha in &field.gf2_basis() {
            out.push(orthogonal_lift(ring, &symplectic_transvection(field, v, alpha)?)?);
        }
    }
    Ok(out)
}

/// All group elements by breadth-first closure, failing past `cap`.
pub fn group_elements(gens: &[GroupElement], field: Field, cap: usize) -> Result<Vec<GroupElement>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let id = GroupElement::identity(first.dim());
    let mut seen: FxHashSet<GroupElement> = FxHashSet::default();
    seen.insert(id.clone());
    let mut order = vec![id];
    let mut head = 0;
    while head < order.len() {
        let g = order[head].clone();
        head += 1;
        for s in gens {
            let h = g.then(s, field);
            if seen.insert(h.clone()) {
                order.push(h);
                if order.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
            }
        }
    }
    Ok(order)
}

pub fn group_order_bfs(gens: &[GroupElement], field: Field, cap: usize) -> Result<usize> {
    Ok(group_elements(gens, field, cap)?.len())
}

/// |O(2m+1, q)| = |Sp(2m, q)| = q^(m^2) prod (q^(2i) - 1).
pub fn expected_order(m: usize, q: u64) -> u128 {
    let q = q as u128;
    (1..=m as u32).fold(q.pow((m * m) as u32), |acc, i| acc * (q.pow(2 * i) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::xi;

    #[test]
    fn orders() {
        for (m, s, expect) in [(1, 1, 6), (1, 2, 60), (1, 3, 504), (2, 1, 720)] {
            let f = Field::new(s).unwrap();
            let ring = Ring::orthogonal(m, f).unwrap();
            let gens = generators(&ring).unwrap();
            assert_eq!(group_order_bfs(&gens, f, 100_000).unwrap(), expect);
            assert_eq!(expected_order(m, f.q() as u64), expect as u128);
        }
    }

    #[test]
    fn xi_invariant() {
        let f = Field::new(2).unwrap();
        let ring = Ring::orthogonal(2, f).unwrap();
        for g in generators(&ring).unwrap() {
            for i in 0..=4 {
                assert!(g.fixes(&xi(&ring, i).unwrap()).unwrap());
            }
            assert!(!g.fixes(&ring.var(ring.z())).unwrap() || g.row(ring.z()).iter().filter(|&&c| c != 0).count() == 1);
        }
    }

    #[test]
    fn bad_inputs() {
        let f = Field::new(1).unwrap();
        assert_eq!(symplectic_transvection(f, &[0, 0], 1), Err(Error::ZeroVector));
        let ring = Ring::orthogonal(1, f).unwrap();
        let gens = generators(&ring).unwrap();
        assert_eq!(group_order_bfs(&gens, f, 3), Err(Error::CapExceeded(3)));
        assert_eq!(bilinear_matrix(1), vec![vec![0, 1], vec![1, 0]]);
    }
}
