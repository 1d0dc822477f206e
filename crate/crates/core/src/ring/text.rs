//! Line-oriented text format: a `ring m=<m> q=<q>` (or `ring n=<n> q=<q>`)
//! header, then one `<coeff-hex> <exponents...>` line per term in canonical
//! order.

use std::fmt::Write as _;

use super::{Layout, Monomial, Poly, Ring, MAX_VARS};
use crate::error::{Error, Result};
use crate::gf::Field;

impl Poly {
    pub fn to_text(&self) -> String {
        let ring = self.ring();
        let mut out = match ring.layout() {
            Layout::Orthogonal { m } => format!("ring m={} q={}\n", m, ring.field().q()),
            Layout::Affine { n } => format!("ring n={} q={}\n", n, ring.field().q()),
        };
        for (m, c) in self.terms() {
            write!(out, "{:x}", c).unwrap();
            for i in 0..ring.nvars() {
                write!(out, " {}", m.exponent(i)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Poly> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let ring = parse_header(header)?;
        let n = ring.nvars();
        let q = ring.field().q();
        let mut terms = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_ascii_whitespace();
            let c = u8::from_str_radix(parts.next().unwrap(), 16).map_err(|_| err("bad coefficient"))?;
            if c == 0 || c as u32 >= q {
                return Err(err("coefficient out of range"));
            }
            let mut e = [0u32; MAX_VARS];
            for slot in e.iter_mut().take(n) {
                *slot = parts
                    .next()
                    .ok_or_else(|| err("too few exponents"))?
                    .parse()
                    .map_err(|_| err("bad exponent"))?;
            }
            if parts.next().is_some() {
                return Err(err("too many exponents"));
            }
            terms.push((Monomial::new(e), c));
        }
        let p = Poly::from_terms(ring, terms.iter().copied());
        if p.len() != terms.len() {
            return Err(Error::Parse { line: 0, msg: "repeated monomial".into() });
        }
        Ok(p)
    }
}

pub(crate) fn text_kv(token: Option<&str>, key: &str, line: usize) -> Result<u32> {
    let token = token.ok_or_else(|| Error::Parse { line, msg: format!("missing {key}=") })?;
    token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse { line, msg: format!("expected {key}=<int>, got {token}") })
}

fn parse_header(header: &str) -> Result<Ring> {
    let mut parts = header.split_ascii_whitespace();
    if parts.next() != Some("ring") {
        return Err(Error::Parse { line: 1, msg: "expected `ring` header".into() });
    }
    let first = parts.next();
    let q = text_kv(parts.next(), "q", 1)?;
    let field = Field::with_order(q)?;
    match first {
        Some(t) if t.starts_with("m=") => Ring::orthogonal(text_kv(Some(t), "m", 1)? as usize, field),
        Some(t) if t.starts_with("n=") => Ring::affine(text_kv(Some(t), "n", 1)? as usize, field),
        _ => Err(Error::Parse { line: 1, msg: "expected m= or n=".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::orthogonal(2, Field::new(2).unwrap()).unwrap();
        let f = &(&r.xi0() * &r.var(1).scale(3)) + &r.var(4).pow(7);
        let t = f.to_text();
        assert!(t.starts_with("ring m=2 q=4\n"));
        assert_eq!(Poly::from_text(&t).unwrap(), f);
        let zero = Poly::zero(r);
        assert_eq!(Poly::from_text(&zero.to_text()).unwrap(), zero);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Poly::from_text("ring m=1 q=4\n4 0 0 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Poly::from_text("ring m=1 q=4\n1 0 0"), Err(Error::Parse { line: 2, .. })));
        assert!(Poly::from_text("poly m=1 q=4").is_err());
        assert!(Poly::from_text("ring m=1 q=6").is_err());
    }
}
