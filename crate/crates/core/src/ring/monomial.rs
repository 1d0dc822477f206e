use std::cmp::Ordering;

/// Upper bound on the number of variables of any ring (m <= 4).
pub const MAX_VARS: usize = 9;

/// Exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial([u32; MAX_VARS]);

impl Monomial {
    #[inline]
    pub const fn new(exps: [u32; MAX_VARS]) -> Self {
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut e = [0u32; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    #[inline]
    pub fn exponents(&self) -> &[u32; MAX_VARS] {
        &self.0
    }

    #[inline]
    pub fn set(&mut self, var: usize, e: u32) {
        self.0[var] = e;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// A monomial is a square iff every exponent is even.
    #[inline]
    pub fn is_square(&self) -> bool {
        self.0.iter().all(|e| e & 1 == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    #[inline]
    pub fn scale(&self, factor: u32) -> Monomial {
        let mut e = self.0;
        for a in e.iter_mut() {
            *a *= factor;
        }
        Monomial(e)
    }

    pub fn halve(&self) -> Option<Monomial> {
        if !self.is_square() {
            return None;
        }
        let mut e = self.0;
        for a in e.iter_mut() {
            *a /= 2;
        }
        Some(Monomial(e))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Number of hyperbolic pairs (x_i, y_i) involved, for S_m with `m` pairs.
    pub fn support(&self, m: usize) -> usize {
        (0..m).filter(|&i| self.0[i] > 0 || self.0[2 * m - i] > 0).count()
    }

    pub fn cmp_by(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Lex => self.0.cmp(&other.0),
            MonomialOrder::Grevlex => grevlex(self, other),
        }
    }
}

/// Graded reverse lexicographic comparison over the ring's variable order.
#[inline]
pub(crate) fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..MAX_VARS).rev() {
        if a.0[i] != b.0[i] {
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_refines_degree() {
        let a = Monomial::from_slice(&[0, 0, 3]);
        let b = Monomial::from_slice(&[1, 1, 0]);
        assert_eq!(a.cmp_by(&b, MonomialOrder::Grevlex), Ordering::Greater);
        assert_eq!(a.cmp_by(&b, MonomialOrder::Lex), Ordering::Less);
        // equal degree: the one with smaller last exponent wins
        let c = Monomial::from_slice(&[2, 0, 1]);
        let d = Monomial::from_slice(&[1, 2, 0]);
        assert_eq!(d.cmp_by(&c, MonomialOrder::Grevlex), Ordering::Greater);
    }

    #[test]
    fn squares_and_support() {
        assert!(Monomial::from_slice(&[2, 0, 4]).is_square());
        assert!(!Monomial::from_slice(&[2, 1, 4]).is_square());
        assert_eq!(Monomial::from_slice(&[2, 0, 4]).halve(), Some(Monomial::from_slice(&[1, 0, 2])));
        // m = 2: [y1, y2, z, x2, x1]
        assert_eq!(Monomial::from_slice(&[1, 0, 5, 0, 1]).support(2), 1);
        assert_eq!(Monomial::from_slice(&[1, 0, 0, 1, 0]).support(2), 2);
    }
}
