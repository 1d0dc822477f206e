//! Checks of the supporting lemmas: Steenrod operations on Dickson
//! invariants, non-square parts, natural monomial expansions and the
//! Adem and Cartan formulas.

use crate::error::Result;
use crate::gf::Field;
use crate::invariants::{dickson_tilde_all_within, u_tilde, ud_xi_natural, xi, InvariantSet};
use crate::relations::{run_check, CheckResult, Outcome};
use crate::ring::{Monomial, Poly, Ring, MAX_VARS};
use crate::steenrod::{steenrod_full, steenrod_k};
use crate::xialg::{delta_jk, Slot0, XiPoly};

/// Term budget for the auxiliary Dickson computations in F_q[x_1..x_n].
pub const LEMMA_BUDGET: usize = 200_000;

fn poly_residual(detail: impl Into<String>, lhs: &Poly, rhs: &Poly) -> Outcome {
    let r = lhs + rhs;
    Outcome::from_residual(detail, (!r.is_zero()).then(|| r.to_text()))
}

fn xi_residual(detail: impl Into<String>, lhs: &XiPoly, rhs: &XiPoly) -> Outcome {
    let r = lhs + rhs;
    Outcome::from_residual(detail, (!r.is_zero()).then(|| r.to_text()))
}

fn tilde_ns(set: &InvariantSet) -> usize {
    (2 * set.m()).clamp(2, 4)
}

/// Exponents {q^0, ..., q^n} without q^(n-i), in variable order.
fn ud_tilde_exponents(n: usize, i: usize, q: u32) -> Vec<u32> {
    (0..=n as u32).filter(|&k| k != (n - i) as u32).map(|k| q.pow(k)).collect()
}

/// Steenrod operations on u~_n: the first nonzero one is P^(q^(n-1)),
/// giving u~_n d~_{1,n}, and each P^k(u~_n) is zero or some u~_n d~_{i,n}.
pub fn verify_stn_un(set: &InvariantSet) -> Vec<CheckResult> {
    let field = set.field();
    let q = field.q();
    let mut out = Vec::new();
    for n in 1..=tilde_ns(set) {
        out.push(run_check(format!("stn-un/n{n}"), || {
            let ring = Ring::affine(n, field)?;
            let u = u_tilde(n, field)?;
            let d = dickson_tilde_all_within(n, field, LEMMA_BUDGET)?;
            let ud: Vec<Poly> = d.iter().map(|di| u.mul_within(di, LEMMA_BUDGET)).collect::<Result<_>>()?;
            for i in 0..=n {
                let sigma = ring.sigma(&Monomial::from_slice(&ud_tilde_exponents(n, i, q)))?;
                if sigma != ud[i] {
                    return Ok(Outcome::fail(format!("u~_{n} d~_{i},{n} differs from its orbit sum"), (&sigma + &ud[i]).to_text()));
                }
            }
            let first = (q as u64).pow(n as u32 - 1);
            let full = steenrod_full(&u)?;
            for (k, pk) in full.coefficients.iter().enumerate().skip(1) {
                if pk.is_zero() {
                    continue;
                }
                if (k as u64) < first {
                    return Ok(Outcome::fail(format!("P^{k}(u~_{n}) is nonzero below q^(n-1)"), pk.to_text()));
                }
                if (k as u64) == first && *pk != ud[1] {
                    return Ok(Outcome::fail(format!("P^{k}(u~_{n}) is not u~_{n} d~_1,{n}"), (pk + &ud[1]).to_text()));
                }
                if !ud.contains(pk) {
                    return Ok(Outcome::fail(format!("P^{k}(u~_{n}) is not of the form u~_{n} d~_i,{n}"), pk.to_text()));
                }
            }
            Ok(Outcome::pass(format!("checked P^k(u~_{n}) for k <= {}", full.coefficients.len() - 1)))
        }));
    }
    out
}

/// Exponents of the orbit-sum representative in the non-square part of d~_{i,n}.
fn ns_di_exponents(n: usize, i: usize, q: u32) -> Vec<u32> {
    let mut e = vec![1u32];
    for k in 2..=n {
        e.push(if k <= n - i + 1 { q.pow(k as u32 - 2) } else { q.pow(k as u32 - 1) });
    }
    e
}

/// ns(d~_{i,n}) = u~_n^(q-2) sigma(...) for 1 <= i < n, and d~_{n,n} has no square terms.
pub fn verify_ns_di(set: &InvariantSet) -> Vec<CheckResult> {
    let field = set.field();
    let q = field.q();
    let mut out = Vec::new();
    for n in 2..=tilde_ns(set) {
        out.push(run_check(format!("ns-di/n{n}"), || {
            let ring = Ring::affine(n, field)?;
            let u = u_tilde(n, field)?;
            let d = dickson_tilde_all_within(n, field, LEMMA_BUDGET)?;
            let uq2 = u.pow_within(q as u64 - 2, LEMMA_BUDGET)?;
            for i in 1..n {
                let sigma = ring.sigma(&Monomial::from_slice(&ns_di_exponents(n, i, q)))?;
                let want = uq2.mul_within(&sigma, LEMMA_BUDGET)?;
                let got = d[i].ns();
                if got != want {
                    return Ok(Outcome::fail(format!("ns(d~_{i},{n}) differs"), (&got + &want).to_text()));
                }
            }
            if d[n].ns() != d[n] {
                return Ok(Outcome::fail(format!("d~_{n},{n} has square terms"), ""));
            }
            Ok(Outcome::pass(format!("i = 1..{n}")))
        }));
    }
    out
}

/// u_m and u_m d_{i,m} as sums of natural monomials, compared with the
/// Steenrod chain and, in S, with the orbit sum and the Dickson invariants.
pub fn verify_nat_mon(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    let f = set.field();
    let t = set.symbolic();
    let mut out = vec![run_check("nat-mon/u-orbit-sum", || {
        let got = set.eval(&t.u)?;
        Ok(poly_residual("natural sum for u_m equals the orbit sum", &got, set.u()?))
    })];
    out.push(run_check("nat-mon/steenrod-chain", || {
        for i in 0..=2 * m {
            let nat = ud_xi_natural(m, i, f)?;
            if nat != t.ud[i] {
                return Ok(xi_residual(format!("u_m d_{i},m by natural sum and Steenrod chain"), &nat, &t.ud[i]));
            }
        }
        Ok(Outcome::pass(format!("i = 0..{}", 2 * m)))
    }));
    out.push(run_check("nat-mon/dickson", || {
        let d = set.dickson()?;
        let u = set.u()?;
        let mut ev = set.evaluator(Slot0::XiBar)?;
        for i in 1..=2 * m {
            let want = u.mul_within(&d[i], set.budget())?;
            let got = ev.eval(&t.ud[i])?;
            if got != want {
                return Ok(poly_residual(format!("u_m d_{i},m in S"), &got, &want));
            }
        }
        Ok(Outcome::pass(format!("i = 1..{}", 2 * m)))
    }));
    out
}

/// sigma(x_1 x_2 x_3^q ... x_m^(q^(m-2)) y_m^(q^(m-1)) ... y_1^(q^(2m-2))) = xibar_0 u_(m-1)^q + ns(delta_1).
pub fn verify_ns_sig(set: &InvariantSet) -> Vec<CheckResult> {
    vec![run_check("ns-sig", || {
        let ring = set.ring();
        let m = set.m();
        let q = set.q();
        let mut e = [0u32; MAX_VARS];
        e[ring.x(1)] = 1;
        for k in 2..=m {
            e[ring.x(k)] = q.pow(k as u32 - 2);
        }
        for j in 1..=m {
            e[ring.y(j)] = q.pow((2 * m - 1 - j) as u32);
        }
        let sigma = ring.sigma(&Monomial::new(e))?;
        let rhs = &set.xi(-1)?.mul_within(&set.u_prev()?.frobenius_pow(1), set.budget())? + &set.delta(1)?.ns();
        Ok(poly_residual("orbit sum equals xibar_0 u_(m-1)^q + ns(delta_1)", &sigma, &rhs))
    })]
}

/// The total Steenrod operation on xi_0, xi_1, ..., xi_(2m-1) in S.
pub fn verify_com_st(set: &InvariantSet) -> Vec<CheckResult> {
    let ring = *set.ring();
    let q = set.q() as u64;
    let m = set.m();
    let mut out = Vec::new();
    for i in 0..2 * m {
        out.push(run_check(format!("com-st/xi{i}"), || {
            let g = |k: i32| xi(&ring, k);
            let xi_i = g(i as i32)?;
            let expected: Vec<(u64, Poly)> = match i {
                0 => vec![(1, g(1)?), (2, xi_i.frobenius_pow(1))],
                1 => vec![(q, g(2)?), (q + 1, xi_i.frobenius_pow(1))],
                _ => {
                    let qi = q.pow(i as u32);
                    vec![(1, g(i as i32 - 1)?.frobenius_pow(1)), (qi, g(i as i32 + 1)?), (qi + 1, xi_i.frobenius_pow(1))]
                }
            };
            let deg = xi_i.degree().unwrap_or(0) as u64;
            let ks: Vec<u64> = if deg <= 4096 { (1..=deg).collect() } else { expected.iter().map(|e| e.0).chain([2, 3, q - 1, deg - 1]).collect() };
            for k in ks {
                let got = steenrod_k(&xi_i, k)?;
                let want = expected.iter().find(|e| e.0 == k).map(|e| e.1.clone()).unwrap_or_else(|| Poly::zero(ring));
                if got != want {
                    return Ok(poly_residual(format!("P^{k}(xi_{i})"), &got, &want));
                }
            }
            Ok(Outcome::pass(format!("degree {deg}")))
        }));
    }
    out
}

/// delta_i as a sum of xi_j xi_k times the partition sums, q > 2.
pub fn verify_delta_gen(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    if set.q() == 2 || m < 2 {
        return vec![run_check("delta-gen", || Ok(Outcome::Skip("stated for q > 2 and m >= 2".into())))];
    }
    let f = set.field();
    let t = set.symbolic();
    (1..2 * m)
        .map(|i| {
            run_check(format!("delta-gen/delta{i}"), || {
                let mut acc = XiPoly::zero(f);
                for j in 1..2 * m {
                    for k in j + 1..2 * m {
                        if j == 2 * m - i || k == 2 * m - i {
                            continue;
                        }
                        let xjk = &XiPoly::var(f, j) * &XiPoly::var(f, k);
                        acc = &acc + &(&xjk * &delta_jk(j, k, i, m, f)?);
                    }
                }
                Ok(xi_residual("Steenrod chain equals the partition expansion", &t.delta[i], &acc))
            })
        })
        .collect()
}

/// u_m = xi_m^(1+q+...+q^(m-1)) modulo xi_1, ..., xi_(m-1).
pub fn verify_um_lt(set: &InvariantSet) -> Vec<CheckResult> {
    let f = set.field();
    let t = set.symbolic();
    let q = set.q() as u64;
    let mut out = Vec::new();
    for (m, u) in [(set.m(), &t.u), (set.m() - 1, &t.u_prev)] {
        if m == 0 {
            continue;
        }
        out.push(run_check(format!("um-lt/u{m}"), || {
            let idx: Vec<usize> = (1..m).collect();
            let e = (q.pow(m as u32) - 1) / (q - 1);
            Ok(xi_residual("reduction modulo the lower xi's", &u.set_zero(&idx), &XiPoly::var(f, m).pow(e)))
        }));
    }
    out
}

/// The normal form of each e_i, the symbolic square u e_i^2, invariance of
/// the generators and the lead term of e_1.
pub fn verify_ei(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    let mut out = vec![run_check("ei/normal-form", || {
        set.verify_e_chain()?;
        let note = if set.q() == 2 && m >= 2 {
            format!("; e_{} needs the correction xi_0 ud_bar_{} since q = 2", 2 * m - 1, 2 * m - 3)
        } else {
            String::new()
        };
        Ok(Outcome::pass(format!("e_1..e_{} built by Steenrod operations and matched{note}", 2 * m - 1)))
    })];
    for i in 1..2 * m {
        out.push(run_check(format!("ei/square{i}"), || {
            let e = set.e(i)?;
            let lhs = set.u()?.mul_within(&e.square(), set.budget())?;
            let rhs = set.evaluator(Slot0::Xi0)?.eval(&set.symbolic().e_sq[i])?;
            Ok(poly_residual(format!("u_m e_{i}^2 equals its xi-expression"), &lhs, &rhs))
        }));
    }
    out
}

fn binom_odd(n: u64, k: u64) -> bool {
    k <= n && (k & !n) == 0
}

/// Small test polynomials in S_m[z] of several degrees.
fn probes(ring: &Ring) -> Vec<Poly> {
    let n = ring.nvars();
    let v = |i: usize| ring.var(i % n);
    vec![
        &(&v(0) * &v(1).pow(2)) + &v(n - 1).pow(3),
        &(&v(0) * &v(n - 1)) + &v(ring.z()).pow(2),
        &(&v(1).pow(3) * &v(n - 2)) + &(&v(0) * &v(n - 1).pow(3)),
    ]
}

/// Adem relations P^a P^b = sum_j binom((q-1)(b-j)-1, a-qj) P^(a+b-j) P^j for a < qb,
/// and the Cartan formula, on probe polynomials.
pub fn verify_adem_cartan(set: &InvariantSet) -> Vec<CheckResult> {
    let ring = *set.ring();
    let q = set.q() as u64;
    let ps = probes(&ring);
    let adem = run_check("steenrod/adem", || {
        let mut count = 0;
        for f in &ps {
            for b in 1..=3u64 {
                for a in 1..q * b {
                    if a > 6 {
                        break;
                    }
                    let lhs = steenrod_k(&steenrod_k(f, b)?, a)?;
                    let mut rhs = Poly::zero(ring);
                    for j in 0..=a / q {
                        if binom_odd((q - 1) * (b - j) - 1, a - q * j) {
                            rhs = &rhs + &steenrod_k(&steenrod_k(f, j)?, a + b - j)?;
                        }
                    }
                    if lhs != rhs {
                        return Ok(poly_residual(format!("P^{a} P^{b}"), &lhs, &rhs));
                    }
                    count += 1;
                }
            }
        }
        Ok(Outcome::pass(format!("{count} relations")))
    });
    let cartan = run_check("steenrod/cartan", || {
        for (f, g) in ps.iter().zip(ps.iter().skip(1)) {
            let fg = f * g;
            let (ef, eg) = (steenrod_full(f)?, steenrod_full(g)?);
            for k in 0..=fg.degree().unwrap_or(0) as usize {
                let mut rhs = Poly::zero(ring);
                for i in 0..=k {
                    rhs = &rhs + &(&ef.get(i) * &eg.get(k - i));
                }
                let lhs = steenrod_k(&fg, k as u64)?;
                if lhs != rhs {
                    return Ok(poly_residual(format!("P^{k} of a product"), &lhs, &rhs));
                }
            }
        }
        Ok(Outcome::pass("all degrees"))
    });
    let linear = run_check("steenrod/linear-factor", || {
        let v = &ring.var(0) + &ring.var(ring.nvars() - 1);
        for f in &ps {
            let vf = &v * f;
            for (k, p) in steenrod_full(&vf)?.coefficients.iter().enumerate() {
                if p.div_exact(&v)?.is_none() {
                    return Ok(Outcome::fail(format!("linear factor does not divide P^{k}"), p.to_text()));
                }
            }
        }
        Ok(Outcome::pass("v divides every P^k(v f)"))
    });
    vec![adem, cartan, linear]
}

/// Field sanity: GF(q) is a field of order q and xi_i is fixed by the generators.
pub fn verify_field(field: Field) -> Vec<CheckResult> {
    vec![run_check("field/axioms", || {
        let q = field.q();
        for a in 1..q {
            let a = a as u8;
            if field.mul(a, field.inv(a)?) != 1 || field.pow(a, q as u64) != a {
                return Ok(Outcome::fail(format!("element {a} fails inversion or a^q = a"), ""));
            }
        }
        Ok(Outcome::pass(format!("GF({q}) with modulus {:#x}", field.modulus())))
    })]
}
