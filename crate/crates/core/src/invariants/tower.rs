//! Free-standing constructors: the xi's, the Dickson invariants and the u's.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::ring::{Monomial, Poly, Ring, MAX_VARS};

/// xi_i in S_m[z]. Index 0 is the quadratic form, -1 its hyperbolic part.
pub fn xi(ring: &Ring, i: i32) -> Result<Poly> {
    let m = ring.m().ok_or_else(|| Error::RingMismatch("xi needs S_m[z]".into()))?;
    if i < -1 || i > 2 * m as i32 + 2 {
        return Err(Error::IndexOutOfRange { what: "xi index", index: i as i64 });
    }
    Ok(match i {
        -1 => ring.xibar0(),
        0 => ring.xi0(),
        _ => {
            let qi = ring.field().q().pow(i as u32);
            let terms = (1..=m).flat_map(|j| {
                let (x, y) = (ring.x(j), ring.y(j));
                let mut a = [0u32; MAX_VARS];
                a[x] = 1;
                a[y] = qi;
                let mut b = [0u32; MAX_VARS];
                b[x] = qi;
                b[y] = 1;
                [(Monomial::new(a), 1u8), (Monomial::new(b), 1u8)]
            });
            Poly::from_terms(*ring, terms)
        }
    })
}

/// Dickson invariants of F_q[x_1..x_n] by induction on n:
/// d_{i,n} = d_{i,n-1}^q + d_{i-1,n-1} N(x_n)^(q-1) with
/// N(x_n) = sum_j d_{j,n-1} x_n^(q^(n-1-j)). Entry `[i]` is d_{i,n}, entry 0 is 1.
pub fn dickson_tilde_all(n: usize, field: Field) -> Result<Vec<Poly>> {
    dickson_tilde_all_within(n, field, usize::MAX)
}

/// As [`dickson_tilde_all`], failing with `BudgetExceeded` once an
/// intermediate product passes `budget` terms.
pub fn dickson_tilde_all_within(n: usize, field: Field, budget: usize) -> Result<Vec<Poly>> {
    let ring = Ring::affine(n, field)?;
    let q = field.q() as u64;
    let mut prev: Vec<Poly> = vec![Poly::one(ring)];
    for k in 1..=n {
        let xk = ring.var(k - 1);
        let mut norm = Poly::zero(ring);
        for (j, d) in prev.iter().enumerate() {
            norm = &norm + &d.mul_within(&xk.pow(q.pow((k - 1 - j) as u32)), budget)?;
        }
        let norm_q1 = norm.pow_within(q - 1, budget)?;
        let mut next = vec![Poly::one(ring)];
        for i in 1..=k {
            let mut d = if i < k { prev[i].frobenius_pow(1) } else { Poly::zero(ring) };
            d = &d + &prev[i - 1].mul_within(&norm_q1, budget)?;
            next.push(d);
        }
        prev = next;
    }
    Ok(prev)
}

pub fn dickson_tilde(i: usize, n: usize, field: Field) -> Result<Poly> {
    if i > n {
        return Err(Error::IndexOutOfRange { what: "Dickson index", index: i as i64 });
    }
    Ok(dickson_tilde_all(n, field)?.swap_remove(i))
}

/// Variable map F_q[x~_1..x~_2m] -> S_m: x~_i -> x_i, x~_(m+j) -> y_(m+1-j).
pub fn relabel_map(ring: &Ring) -> Vec<usize> {
    let m = ring.m().expect("orthogonal ring");
    (1..=2 * m).map(|i| if i <= m { ring.x(i) } else { ring.y(2 * m + 1 - i) }).collect()
}

pub fn relabel(p: &Poly, ring: &Ring) -> Result<Poly> {
    p.map_vars(*ring, &relabel_map(ring))
}

/// u~_n = sigma(x_1 x_2^q ... x_n^(q^(n-1))).
pub fn u_tilde(n: usize, field: Field) -> Result<Poly> {
    let ring = Ring::affine(n, field)?;
    let q = field.q();
    let exps: Vec<u32> = (0..n as u32).map(|k| q.pow(k)).collect();
    ring.sigma(&Monomial::from_slice(&exps))
}

/// u_m in S_m, the relabelled u~_2m.
pub fn u_full(ring: &Ring) -> Result<Poly> {
    let m = ring.m().ok_or_else(|| Error::RingMismatch("u_m needs S_m[z]".into()))?;
    relabel(&u_tilde(2 * m, ring.field())?, ring)
}

/// d_{i,m} in S_m for 0 <= i <= 2m.
pub fn dickson_full_all(ring: &Ring) -> Result<Vec<Poly>> {
    dickson_full_all_within(ring, usize::MAX)
}

pub fn dickson_full_all_within(ring: &Ring, budget: usize) -> Result<Vec<Poly>> {
    let m = ring.m().ok_or_else(|| Error::RingMismatch("d_{i,m} needs S_m[z]".into()))?;
    dickson_tilde_all_within(2 * m, ring.field(), budget)?.iter().map(|d| relabel(d, ring)).collect()
}
