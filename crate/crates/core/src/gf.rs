//! Arithmetic in GF(2^s) for s = 1..=4.
//!
//! Elements are bit patterns of degree < s over GF(2). Multiplication and
//! inversion go through static tables built at compile time from the fixed
//! moduli x, x^2+x+1, x^3+x+1 and x^4+x+1.

use std::fmt;

use crate::error::{Error, Result};

/// Moduli indexed by `s`, including the leading bit.
const MODULI: [u8; 5] = [0, 0b10, 0b111, 0b1011, 0b1_0011];

const fn clmul_reduce(a: u8, b: u8, s: usize) -> u8 {
    let mut acc: u16 = 0;
    let mut i = 0;
    while i < 8 {
        if (b >> i) & 1 == 1 {
            acc ^= (a as u16) << i;
        }
        i += 1;
    }
    let modulus = MODULI[s] as u16;
    let mut bit = 15;
    while bit >= s {
        if (acc >> bit) & 1 == 1 {
            acc ^= modulus << (bit - s);
        }
        bit -= 1;
    }
    acc as u8
}

const fn build_mul() -> [[[u8; 16]; 16]; 5] {
    let mut t = [[[0u8; 16]; 16]; 5];
    let mut s = 1;
    while s <= 4 {
        let q = 1usize << s;
        let mut a = 0;
        while a < q {
            let mut b = 0;
            while b < q {
                t[s][a][b] = clmul_reduce(a as u8, b as u8, s);
                b += 1;
            }
            a += 1;
        }
        s += 1;
    }
    t
}

const fn build_inv(mul: &[[[u8; 16]; 16]; 5]) -> [[u8; 16]; 5] {
    let mut t = [[0u8; 16]; 5];
    let mut s = 1;
    while s <= 4 {
        let q = 1usize << s;
        let mut a = 1;
        while a < q {
            let mut b = 1;
            while b < q {
                if mul[s][a][b] == 1 {
                    t[s][a] = b as u8;
                }
                b += 1;
            }
            a += 1;
        }
        s += 1;
    }
    t
}

static MUL: [[[u8; 16]; 16]; 5] = build_mul();
static INV: [[u8; 16]; 5] = build_inv(&MUL);

/// A finite field GF(2^s). Cheap to copy; all tables are static.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    s: u8,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl Field {
    pub fn new(s: u32) -> Result<Field> {
        if !(1..=4).contains(&s) {
            return Err(Error::FieldDegree(s));
        }
        Ok(Field { s: s as u8 })
    }

    /// The field with `q` elements, for q in {2, 4, 8, 16}.
    pub fn with_order(q: u32) -> Result<Field> {
        match q {
            2 => Field::new(1),
            4 => Field::new(2),
            8 => Field::new(3),
            16 => Field::new(4),
            _ => Err(Error::FieldDegree(q.trailing_zeros())),
        }
    }

    #[inline]
    pub fn s(self) -> u32 {
        self.s as u32
    }

    #[inline]
    pub fn q(self) -> u32 {
        1 << self.s
    }

    /// Bit pattern of the modulus, including the leading coefficient.
    pub fn modulus(self) -> u8 {
        MODULI[self.s as usize]
    }

    #[inline(always)]
    pub fn add(self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    #[inline(always)]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        MUL[self.s as usize][a as usize][b as usize]
    }

    pub fn inv(self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(INV[self.s as usize][a as usize])
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn square(self, a: u8) -> u8 {
        self.mul(a, a)
    }

    /// The unique square root, a^(q/2).
    pub fn sqrt(self, a: u8) -> u8 {
        self.pow(a, (self.q() / 2) as u64)
    }

    /// All elements as raw bit patterns, zero first.
    pub fn values(self) -> impl Iterator<Item = u8> {
        0..(self.q() as u8)
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        self.values().map(move |v| FieldElement { value: v, field: self })
    }

    pub fn element(self, value: u8) -> Result<FieldElement> {
        if (value as u32) >= self.q() {
            return Err(Error::IndexOutOfRange {
                what: "field element bit pattern",
                index: value as i64,
            });
        }
        Ok(FieldElement { value, field: self })
    }

    /// A GF(2)-basis of the field: 1, w, w^2, ...
    pub fn gf2_basis(self) -> Vec<u8> {
        (0..self.s).map(|i| 1u8 << i).collect()
    }

    /// Embedding table of this field into `larger`, which must contain it as a
    /// subfield. Entry `v` is the image of the element with bit pattern `v`.
    pub fn embedding_into(self, larger: Field) -> Result<Vec<u8>> {
        if !larger.s.is_multiple_of(self.s) {
            return Err(Error::FieldMismatch(self.q(), larger.q()));
        }
        // Image of the generator: any root of our modulus in the larger field.
        let modulus = self.modulus();
        let root = larger
            .values()
            .find(|&r| {
                let mut acc = 0u8;
                for bit in (0..=self.s).rev() {
                    acc = larger.mul(acc, r);
                    if (modulus >> bit) & 1 == 1 {
                        acc ^= 1;
                    }
                }
                acc == 0
            })
            .ok_or(Error::FieldMismatch(self.q(), larger.q()))?;
        Ok(self
            .values()
            .map(|v| {
                let mut acc = 0u8;
                let mut power = 1u8;
                for bit in 0..self.s {
                    if (v >> bit) & 1 == 1 {
                        acc ^= power;
                    }
                    power = larger.mul(power, root);
                }
                acc
            })
            .collect())
    }
}

/// An element of a [`Field`], tagged with its field so that mixed-field
/// arithmetic is caught.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    value: u8,
    field: Field,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

impl FieldElement {
    pub fn zero(field: Field) -> Self {
        FieldElement { value: 0, field }
    }

    pub fn one(field: Field) -> Self {
        FieldElement { value: 1, field }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<Field> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.q(), other.field.q()));
        }
        Ok(self.field)
    }

    pub fn checked_add(self, other: FieldElement) -> Result<FieldElement> {
        let field = self.same_field(other)?;
        Ok(FieldElement { value: self.value ^ other.value, field })
    }

    pub fn checked_mul(self, other: FieldElement) -> Result<FieldElement> {
        let field = self.same_field(other)?;
        Ok(FieldElement { value: field.mul(self.value, other.value), field })
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement { value: self.field.inv(self.value)?, field: self.field })
    }

    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement { value: self.field.pow(self.value, e), field: self.field }
    }

    pub fn sqrt(self) -> FieldElement {
        FieldElement { value: self.field.sqrt(self.value), field: self.field }
    }

    /// Dispatches one of the four arithmetic kinds. `other` is ignored for the
    /// unary kinds but must still come from the same field.
    pub fn arith(self, other: FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.same_field(other)?;
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Inv => self.inv(),
            ArithOp::Pow(e) => Ok(self.pow(e)),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(s: u32) -> Field {
        Field::new(s).unwrap()
    }

    #[test]
    fn rejects_bad_degree() {
        assert_eq!(Field::new(0), Err(Error::FieldDegree(0)));
        assert_eq!(Field::new(5), Err(Error::FieldDegree(5)));
    }

    #[test]
    fn gf4_examples() {
        let f = gf(2);
        let w = 0b10;
        assert_eq!(f.mul(w, w), 0b11);
        assert_eq!(f.inv(w).unwrap(), 0b11);
        assert_eq!(f.sqrt(w), 0b11);
        assert_eq!(f.values().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn gf8_generator_relation() {
        let f = gf(3);
        let w = 0b10;
        assert_eq!(f.pow(w, 3), w ^ 1);
        assert_eq!(f.values().count(), 8);
    }

    #[test]
    fn sqrt_and_frobenius_exhaustive() {
        for s in 1..=4 {
            let f = gf(s);
            for a in f.values() {
                assert_eq!(f.pow(a, f.q() as u64), a);
                assert_eq!(f.square(f.sqrt(a)), a);
                assert_eq!(f.sqrt(f.square(a)), a);
                assert_eq!(a ^ a, 0);
            }
            assert_eq!(f.sqrt(0), 0);
            assert_eq!(f.sqrt(1), 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for s in 1..=3 {
            let f = gf(s);
            for a in f.values() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.values() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.values() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn element_errors() {
        let a = gf(2).element(2).unwrap();
        let b = gf(3).element(2).unwrap();
        assert_eq!(a.checked_add(b), Err(Error::FieldMismatch(4, 8)));
        assert_eq!(FieldElement::zero(gf(2)).inv(), Err(Error::ZeroInverse));
        assert_eq!(a.arith(a, ArithOp::Add).unwrap().value(), 0);
        assert_eq!(a.arith(a, ArithOp::Pow(3)).unwrap().value(), 1);
        assert_eq!(format!("{}", gf(4).element(0xb).unwrap()), "b");
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for (small, large) in [(1, 2), (1, 4), (2, 4), (1, 3)] {
            let (fs, fl) = (gf(small), gf(large));
            let emb = fs.embedding_into(fl).unwrap();
            for a in fs.values() {
                for b in fs.values() {
                    assert_eq!(emb[fs.mul(a, b) as usize], fl.mul(emb[a as usize], emb[b as usize]));
                    assert_eq!(emb[(a ^ b) as usize], emb[a as usize] ^ emb[b as usize]);
                }
            }
        }
        assert!(gf(2).embedding_into(gf(3)).is_err());
    }
}
