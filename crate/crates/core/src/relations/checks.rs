//! Checks of the symplectic rows, the delta relations, the main relation
//! system, the reduced matrix equation and the q = 2, m = 3 relations.

use crate::error::Result;
use crate::invariants::InvariantSet;
use crate::relations::algebra::{extract_remainder, LinearRelation};
use crate::relations::{run_check, CheckResult, Outcome};
use crate::ring::Poly;
use crate::xialg::{express_in_xi, m_matrix, m_tilde_matrix, XiMatrix, XiPoly};

fn xi_residual(detail: impl Into<String>, residual: &XiPoly) -> Outcome {
    Outcome::from_residual(detail, (!residual.is_zero()).then(|| residual.to_text()))
}

fn s_residual(detail: impl Into<String>, residual: &Poly) -> Outcome {
    Outcome::from_residual(detail, (!residual.is_zero()).then(|| residual.to_text()))
}

fn skip_unless(cond: bool, name: &str, reason: &str) -> Option<CheckResult> {
    (!cond).then(|| run_check(name, || Ok(Outcome::Skip(reason.to_string()))))
}

/// Symbolic and evaluated checks of one linear relation in the e_i.
fn relation_checks(set: &InvariantSet, rel: &LinearRelation) -> Vec<CheckResult> {
    let sym = run_check(format!("{}/symbolic", rel.name), || {
        Ok(xi_residual("u_m * (relation)^2 vanishes in R[xi_0]", &rel.symbolic_residual(set.symbolic())?))
    });
    let s = run_check(format!("{}/S", rel.name), || Ok(s_residual("relation vanishes in S[z]", &rel.s_residual(set)?)));
    vec![sym, s]
}

fn x(set: &InvariantSet, k: usize) -> XiPoly {
    XiPoly::var(set.field(), k)
}

/// Rows of M_m: sum_{c<=2m} M[r,c] d_{2m+1-c} = M[r,2m+1].
pub fn verify_symplectic_rows(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    let mat = match set.ptable().and_then(|t| m_matrix(m, t)) {
        Ok(mat) => mat,
        Err(e) => return vec![run_check("symplectic-rows", || Err(e))],
    };
    let mut out = Vec::new();
    for r in 1..=2 * m {
        out.push(run_check(format!("symplectic-rows/row{r}/symbolic"), || {
            let tower = set.symbolic();
            let mut acc = mat.entry(r, 2 * m + 1) * &tower.u;
            for c in 1..=2 * m {
                acc = &acc + &(mat.entry(r, c) * &tower.ud[2 * m + 1 - c]);
            }
            Ok(xi_residual("u_m times the row relation vanishes in R", &acc))
        }));
        out.push(run_check(format!("symplectic-rows/row{r}/S"), || {
            let d = set.dickson()?;
            let mut acc = set.eval(mat.entry(r, 2 * m + 1))?;
            for c in 1..=2 * m {
                let coef = set.eval(mat.entry(r, c))?;
                acc = &acc + &coef.mul_within(&d[2 * m + 1 - c], set.budget())?;
            }
            Ok(s_residual("row relation vanishes in S", &acc))
        }));
    }
    out
}

/// Both parts of the delta relation as (name, a, b) with a u_m + b = 0 in R.
pub fn del_rel_residuals(set: &InvariantSet) -> Vec<(String, XiPoly, XiPoly)> {
    let m = set.m();
    let q = set.q() as u64;
    let t = set.symbolic();
    let mut out = Vec::new();
    let mut a = &x(set, 1).pow(2) * &t.u_prev.pow(q * q);
    for j in 1..=2 * m - 2 {
        a = &a + &(&x(set, 2 * m - 1 - j).frobenius_pow(1) * &t.delta[j]);
    }
    out.push(("del-rel/a".to_string(), x(set, 1), a));
    for i in 2..m {
        let mut b = &x(set, i).pow(2) * &t.ud_bar[2 * m - 1 - i].frobenius_pow(1);
        for j in 1..=2 * m - 1 - i {
            b = &b + &(&t.delta[j] * &x(set, 2 * m - i - j).frobenius_pow(i as u32));
        }
        for k in 1..i {
            b = &b + &(&x(set, k).frobenius_pow((i - k) as u32) * &t.delta[2 * m - i + k]);
        }
        out.push((format!("del-rel/b{i}"), x(set, i), b));
    }
    out
}

pub fn verify_del_rel(set: &InvariantSet) -> Vec<CheckResult> {
    if let Some(skip) = skip_unless(set.q() > 2, "del-rel", "the delta relations are stated for q > 2") {
        return vec![skip];
    }
    let mut out = Vec::new();
    for (name, a, b) in del_rel_residuals(set) {
        out.push(run_check(format!("{name}/symbolic"), || {
            Ok(xi_residual("identity holds in R", &(&(&a * &set.symbolic().u) + &b)))
        }));
        out.push(run_check(format!("{name}/S"), || {
            // u_m enters through its orbit-sum description.
            let lhs = set.eval(&a)?.mul_within(set.u()?, set.budget())?;
            Ok(s_residual("identity holds in S with u_m as an orbit sum", &(&lhs + &set.eval(&b)?)))
        }));
    }
    out
}

/// xi_(2m-i)^(q^i/2) = sum ... e_j + ... + xi_i ud_bar_(2m-1-i)^(q/2) u^(q/2-1), 1 <= i < m.
pub fn main_relation(set: &InvariantSet, i: usize) -> LinearRelation {
    let m = set.m();
    let q = set.q() as u64;
    let t = set.symbolic();
    let half = |k: u32| q.pow(k) / 2;
    let mut terms = Vec::new();
    for j in 1..=2 * m - 1 - i {
        terms.push((x(set, 2 * m - i - j).pow(half(i as u32)), j));
    }
    for k in 1..i {
        terms.push((x(set, k).pow(half((i - k) as u32)), 2 * m - i + k));
    }
    let tail = &(&x(set, i) * &t.ud_bar[2 * m - 1 - i].pow(q / 2)) * &t.u.pow(q / 2 - 1);
    let constant = &x(set, 2 * m - i).pow(half(i as u32)) + &tail;
    LinearRelation::new(format!("main/eqn{i}"), terms, constant)
}

/// e_(2m-i) + sum_{j=1}^{i} P_{m-i,m-j}^(q^j/2) e_j, whose value is P_(2m-i).
pub fn exrel_terms(set: &InvariantSet, i: usize) -> Result<Vec<(XiPoly, usize)>> {
    let m = set.m();
    let q = set.q() as u64;
    let table = set.ptable()?;
    let mut terms = vec![(XiPoly::one(set.field()), 2 * m - i)];
    for j in 1..=i {
        terms.push((table.get(m - i, m - j)?.pow(q.pow(j as u32) / 2), j));
    }
    Ok(terms)
}

pub fn verify_main_relations(set: &InvariantSet) -> Vec<CheckResult> {
    if let Some(skip) = skip_unless(set.q() > 2, "main", "the general relation system is stated for q > 2") {
        return vec![skip];
    }
    let m = set.m();
    let mut out = Vec::new();
    for i in 1..m {
        out.extend(relation_checks(set, &main_relation(set, i)));
    }
    for i in 1..m {
        let name = format!("main/exrel{i}");
        let p = exrel_terms(set, i).and_then(|terms| Ok((extract_remainder(set.symbolic(), &terms, 2 * m - 1)?, terms)));
        out.push(run_check(format!("{name}/remainder-in-R"), || {
            let (p, _) = p.clone()?;
            Ok(Outcome::pass(format!("P_{} lies in R_{} ({} terms)", 2 * m - i, 2 * m - 1, p.len())))
        }));
        out.push(run_check(format!("{name}/express-in-S"), || {
            let (p, terms) = p.clone()?;
            let mut ev = set.evaluator(crate::xialg::Slot0::Xi0)?;
            let mut acc = Poly::zero(*set.ring());
            for (c, j) in &terms {
                acc = &acc + &ev.eval(c)?.mul_within(set.e(*j)?, set.budget())?;
            }
            let found = express_in_xi(&acc, 2 * m - 1, None, set.budget())?;
            Ok(xi_residual("express_in_xi recovers the same remainder", &(&found + &p)))
        }));
    }
    if m >= 2 {
        out.push(run_check("main/exrel1-coefficient", || {
            let q = set.q() as u64;
            let t = set.ptable()?;
            let lhs = t.get(m - 1, m - 1)?.pow(q / 2);
            let rhs = set.symbolic().u_prev.pow(q * (q - 1) / 2);
            Ok(xi_residual("P_{m-1,m-1}^(q/2) = u_(m-1)^((q^2-q)/2)", &(&lhs + &rhs)))
        }));
    }
    out
}

/// The reduced system M~ (e_(2m-1), ..., e_2)^T = a e_1 + b, row by row.
fn tilde_rows(set: &InvariantSet, mt: &XiMatrix) -> Result<Vec<(XiPoly, XiPoly)>> {
    let m = set.m();
    let q = set.q() as u64;
    let t = set.symbolic();
    let table = set.ptable()?;
    let mut rows = Vec::new();
    for r in 1..m {
        let a = x(set, 2 * m - 1 - r).pow(q.pow(r as u32) / 2);
        let b = &x(set, 2 * m - r).pow(q.pow(r as u32) / 2)
            + &(&(&t.u.pow(q / 2 - 1) * &x(set, r)) * &t.ud_bar[2 * m - 1 - r].pow(q / 2));
        rows.push((a, b));
    }
    for i in 1..m {
        let a = table.get(m - i, m - 1)?.pow(q / 2);
        let b = extract_remainder(t, &exrel_terms(set, i)?, 2 * m - 1)?;
        rows.push((a, b));
    }
    debug_assert_eq!(rows.len(), mt.nrows());
    Ok(rows)
}

pub fn verify_matrix_equation(set: &InvariantSet) -> Vec<CheckResult> {
    if let Some(skip) = skip_unless(set.q() > 2 && set.m() >= 2, "matrix", "the reduced matrix equation needs q > 2 and m >= 2") {
        return vec![skip];
    }
    let m = set.m();
    let q = set.q() as u64;
    let mut out = Vec::new();
    let mt = match set.ptable().and_then(|t| m_tilde_matrix(m, t)) {
        Ok(mt) => mt,
        Err(e) => return vec![run_check("matrix", || Err(e))],
    };
    let det = mt.det();
    out.push(run_check("matrix/det", || {
        let d = det.clone()?;
        Ok(xi_residual("det = u_(m-1)^(q/2)", &(&d + &set.symbolic().u_prev.pow(q / 2))))
    }));
    let rows = match tilde_rows(set, &mt) {
        Ok(r) => r,
        Err(e) => {
            out.push(run_check("matrix/rows", || Err(e)));
            return out;
        }
    };
    let n = mt.nrows();
    for (r, (a, b)) in rows.iter().enumerate() {
        let mut terms: Vec<(XiPoly, usize)> =
            (1..=n).filter(|&c| !mt.entry(r + 1, c).is_zero()).map(|c| (mt.entry(r + 1, c).clone(), 2 * m - c)).collect();
        terms.push((a.clone(), 1));
        out.extend(relation_checks(set, &LinearRelation::new(format!("matrix/row{}", r + 1), terms, b.clone())));
    }
    // Cramer: det * e_(2m-c) = det(M~ with column c := a) e_1 + det(M~ with column c := b).
    for c in 1..=n {
        out.push(run_check(format!("matrix/cramer{c}/symbolic"), || {
            let d = det.clone()?;
            let replace = |col: &dyn Fn(usize) -> XiPoly| -> Result<XiPoly> {
                let rows2 = (1..=n)
                    .map(|r| (1..=n).map(|k| if k == c { col(r) } else { mt.entry(r, k).clone() }).collect())
                    .collect();
                XiMatrix::new(set.field(), rows2)?.det()
            };
            let da = replace(&|r| rows[r - 1].0.clone())?;
            let db = replace(&|r| rows[r - 1].1.clone())?;
            let rel = LinearRelation::new("", vec![(d, 2 * m - c), (da, 1)], db);
            Ok(xi_residual(format!("u_(m-1)^(q/2) e_{} lies in R[e_1]", 2 * m - c), &rel.symbolic_residual(set.symbolic())?))
        }));
    }
    out
}

/// The two relations of the m = 2, q > 2 example and F in R_3.
pub fn verify_m2_example(set: &InvariantSet) -> Vec<CheckResult> {
    if let Some(skip) = skip_unless(set.m() == 2 && set.q() > 2, "m2-example", "needs m = 2 and q > 2") {
        return vec![skip];
    }
    let q = set.q() as u64;
    let f = set.field();
    let t = set.symbolic();
    let mut out = Vec::new();
    let x = |k| XiPoly::var(f, k);
    out.push(run_check("m2-example/deltas", || {
        let r = &(&t.delta[1] + &(&x(1) * &x(2))) + &(&t.delta[2] + &(&x(1) * &x(3)));
        Ok(xi_residual("delta_1 = xi_1 xi_2 and delta_2 = xi_1 xi_3", &r))
    }));
    out.push(run_check("m2-example/delta-identity", || {
        let lhs = &(&(&x(1) * &t.u) + &(&x(2).frobenius_pow(1) * &t.delta[1])) + &(&x(1).frobenius_pow(1) * &t.delta[2]);
        Ok(xi_residual("xi_1 u_2 + xi_2^q delta_1 + xi_1^q delta_2 = xi_1^(q^2+2)", &(&lhs + &x(1).pow(q * q + 2))))
    }));
    let constant = &x(3).pow(q / 2) + &(&t.u.pow(q / 2 - 1) * &x(1).pow(q * q / 2 + 1));
    let rel = LinearRelation::new("m2-example/xi3-relation", vec![(x(2).pow(q / 2), 1), (x(1).pow(q / 2), 2)], constant);
    out.extend(relation_checks(set, &rel));
    out.push(run_check("m2-example/F-in-R3", || {
        let p = extract_remainder(t, &[(x(2).pow(q / 2), 1), (x(1).pow(q / 2), 2)], 3)?;
        let want = &x(3).pow(q / 2) + &(&t.u.pow(q / 2 - 1) * &x(1).pow(q * q / 2 + 1));
        Ok(xi_residual("F = xi_2^(q/2) e_1 + xi_1^(q/2) e_2 lies in R_3 with the stated value", &(&p + &want)))
    }));
    out
}

fn parse_xi(f: crate::gf::Field, terms: &[&[(usize, u32)]]) -> XiPoly {
    XiPoly::from_terms(
        f,
        terms.iter().map(|t| {
            let mut mono = crate::xialg::XiMonomial::one();
            for &(k, e) in t.iter() {
                mono.set(k, mono.exponent(k) + e);
            }
            (mono, 1u8)
        }),
    )
}

/// The q = 2 delta lists as displayed.
pub fn q2_m3_delta_lists(f: crate::gf::Field) -> Vec<XiPoly> {
    vec![
        XiPoly::zero(f),
        parse_xi(f, &[&[(1, 9), (2, 1)], &[(1, 1), (3, 1), (2, 4)], &[(1, 5), (4, 1)], &[(2, 1), (3, 3)], &[(2, 3), (4, 1)], &[(3, 1), (4, 1), (1, 2)]]),
        parse_xi(f, &[&[(1, 1), (2, 9)], &[(1, 1), (3, 5)], &[(1, 5), (5, 1)], &[(2, 1), (3, 1), (4, 2)], &[(2, 3), (5, 1)], &[(3, 1), (5, 1), (1, 2)], &[(1, 4), (3, 4)]]),
        parse_xi(f, &[&[(1, 17), (2, 1)], &[(1, 1), (4, 1), (3, 4)], &[(1, 1), (5, 1), (2, 4)], &[(2, 1), (4, 3)], &[(2, 1), (5, 1), (3, 2)], &[(4, 1), (5, 1), (1, 2)]]),
        parse_xi(f, &[&[(1, 17), (3, 1)], &[(1, 1), (4, 1), (2, 8)], &[(1, 9), (5, 1)], &[(3, 1), (4, 3)], &[(3, 3), (5, 1)], &[(4, 1), (5, 1), (2, 2)], &[(1, 20)]]),
        parse_xi(f, &[&[(2, 1), (3, 1), (1, 16)], &[(2, 9), (4, 1)], &[(2, 1), (5, 1), (1, 8)], &[(3, 5), (4, 1)], &[(3, 1), (5, 1), (2, 4)], &[(4, 1), (5, 1), (1, 4)], &[(2, 2), (3, 2), (4, 2)]]),
    ]
}

pub fn verify_q2_m3(set: &InvariantSet) -> Vec<CheckResult> {
    if let Some(skip) = skip_unless(set.m() == 3 && set.q() == 2, "q2m3", "needs m = 3 and q = 2") {
        return vec![skip];
    }
    let f = set.field();
    let t = set.symbolic();
    let x = |k| XiPoly::var(f, k);
    let mut out = Vec::new();
    let lists = q2_m3_delta_lists(f);
    for i in 1..=5 {
        out.push(run_check(format!("q2m3/delta{i}"), || Ok(xi_residual("Steenrod delta_i equals the displayed list", &(&t.delta[i] + &lists[i])))));
    }
    let ub3 = &t.ud_bar[3];
    out.push(run_check("q2m3/delta-identity1", || {
        let lhs = &(&(&(&t.delta[1] * &x(4).pow(2)) + &(&t.delta[2] * &x(3).pow(2))) + &(&t.delta[3] * &x(2).pow(2))) + &(&t.delta[4] * &x(1).pow(2));
        let rhs = &(&(&(&x(1) * &t.u) + &(&x(1).pow(2) * &t.u_prev.pow(4))) + &x(1).pow(22)) + &(&x(1).pow(4) * &x(3).pow(6));
        Ok(xi_residual("delta_1 xi_4^2 + delta_2 xi_3^2 + delta_3 xi_2^2 + delta_4 xi_1^2 = xi_1 u_3 + xi_1^2 u_2^4 + xi_1^22 + xi_1^4 xi_3^6", &(&lhs + &rhs)))
    }));
    out.push(run_check("q2m3/delta-identity1-printed", || {
        let diff = &t.delta[4] * &(&x(1).pow(2) + &x(2).pow(2));
        if diff.is_zero() {
            return Ok(Outcome::pass("delta_4 xi_2^2 and delta_4 xi_1^2 agree"));
        }
        Ok(Outcome::pass(format!("the printed term delta_4 xi_2^2 differs from delta_4 xi_1^2 by {} terms; only the latter holds", diff.len())))
    }));
    out.push(run_check("q2m3/delta-identity2", || {
        let lhs = &(&(&(&t.delta[1] * &x(3).pow(4)) + &(&t.delta[2] * &x(2).pow(4))) + &(&t.delta[3] * &x(1).pow(4))) + &(&t.delta[5] * &x(1).pow(2));
        let rhs = &(&(&(&x(2) * &t.u) + &(&x(2).pow(2) * &ub3.pow(2))) + &(&(&x(1).pow(4) * &x(2).pow(4)) * &x(3).pow(4)))
            + &(&(&(&x(1).pow(2) * &x(2).pow(2)) * &x(3).pow(2)) * &x(4).pow(2));
        Ok(xi_residual("second delta identity", &(&lhs + &rhs)))
    }));
    let c5 = &(&(&x(5) + &(&x(1) * &t.u_prev.pow(2))) + &x(1).pow(11)) + &(&x(1).pow(2) * &x(3).pow(3));
    let rel5 = LinearRelation::new("q2m3/xi5", vec![(x(4), 1), (x(3), 2), (x(2), 3), (x(1), 4)], c5);
    out.extend(relation_checks(set, &rel5));
    // With e_5 read in its normal form e_5 + xi_0 ud_bar_3 and xi_2 ud_bar_3 in place of xi_1 u_2^2.
    let tail = &(&(&x(2) * ub3) + &(&(&x(1).pow(2) * &x(2).pow(2)) * &x(3).pow(2))) + &(&(&(&x(1) * &x(2)) * &x(3)) * &x(4));
    let c4 = &(&x(4).pow(2) + &tail) + &(&(&x(0) * &x(1)) * ub3);
    let rel4 = LinearRelation::new("q2m3/xi4-squared", vec![(x(3).pow(2), 1), (x(2).pow(2), 2), (x(1).pow(2), 3), (x(1), 5)], c4);
    out.extend(relation_checks(set, &rel4));
    out.push(run_check("q2m3/xi4-squared-printed-term", || {
        let printed = (&x(1) * &t.u_prev.pow(2)).degree()?;
        let lhs = x(4).pow(2).degree()?;
        if printed == lhs {
            return Ok(Outcome::fail("printed term xi_1 u_2^2 unexpectedly has the relation's degree", ""));
        }
        Ok(Outcome::pass(format!(
            "printed term xi_1 u_2^2 has degree {} but the relation has degree {}; xi_2 ud_bar_3 (degree {}) is the term that holds",
            printed.unwrap_or(0),
            lhs.unwrap_or(0),
            (&x(2) * ub3).degree()?.unwrap_or(0)
        )))
    }));
    out
}
