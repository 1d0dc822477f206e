//! Named groups of checks.

use crate::error::{Error, Result};
use crate::group::{coverage_check, expected_order, generators, group_elements, nullcone_check};
use crate::invariants::InvariantSet;
use crate::relations::{
    hilbert_check, rank_formula_check, run_check, verify_adem_cartan, verify_com_st, verify_del_rel, verify_delta_gen,
    verify_ei, verify_field, verify_m2_example, verify_main_relations, verify_matrix_equation, verify_nat_mon, verify_ns_di,
    verify_ns_sig, verify_q2_m3, verify_stn_un, verify_symplectic_rows, verify_um_lt, CheckResult, Outcome,
};
use crate::xialg::m_matrix;

pub const SUITES: &[&str] = &[
    "field",
    "steenrod",
    "dickson",
    "natmon",
    "delta",
    "generators-e",
    "detthm",
    "relations",
    "q2m3",
    "group",
    "hsop",
    "hilbert",
    "rank",
    "all",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Highest degree compared against fixed-space dimensions.
    pub degree_cap: u32,
    /// Largest group enumerated by closure.
    pub group_cap: usize,
    /// Largest monomial basis used for a fixed-space dimension.
    pub basis_budget: usize,
    /// Largest number of points enumerated in a variety check.
    pub point_budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { degree_cap: 12, group_cap: 200_000, basis_budget: 5_000, point_budget: 1 << 18 }
    }
}

pub fn run_suite(name: &str, set: &InvariantSet, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    Ok(match name {
        "field" => verify_field(set.field()),
        "steenrod" => [verify_com_st(set), verify_adem_cartan(set)].concat(),
        "dickson" => [verify_stn_un(set), verify_ns_di(set)].concat(),
        "natmon" => [verify_nat_mon(set), verify_ns_sig(set), verify_um_lt(set)].concat(),
        "delta" => [verify_delta_gen(set), verify_del_rel(set)].concat(),
        "generators-e" => [verify_ei(set), verify_invariance(set)].concat(),
        "detthm" => [verify_determinants(set), verify_symplectic_rows(set)].concat(),
        "relations" => [verify_main_relations(set), verify_matrix_equation(set), verify_m2_example(set)].concat(),
        "q2m3" => verify_q2_m3(set),
        "group" => verify_group(set, opts),
        "hsop" => verify_hsop(set, opts),
        "hilbert" => hilbert_check(set, opts.degree_cap, opts.basis_budget),
        "rank" => rank_formula_check(set.m(), set.q() as u64),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().filter(|s| **s != "all") {
                out.extend(run_suite(s, set, opts)?);
            }
            out
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Maximal minors of M_m against the Steenrod chain, and the degrees of P_{i,j}.
pub fn verify_determinants(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    let t = set.symbolic();
    let mut out = vec![run_check("detthm/minors", || {
        let mat = m_matrix(m, set.ptable()?)?;
        if mat.minor(2 * m + 1)? != t.u {
            return Ok(Outcome::fail("M_m(2m+1) differs from u_m", (&mat.minor(2 * m + 1)? + &t.u).to_text()));
        }
        for i in 1..=2 * m {
            let minor = mat.minor(2 * m + 1 - i)?;
            if minor != t.ud[i] {
                return Ok(Outcome::fail(format!("M_m({}) differs from u_m d_{i},m", 2 * m + 1 - i), (&minor + &t.ud[i]).to_text()));
            }
        }
        Ok(Outcome::pass(format!("all {} maximal minors", 2 * m + 1)))
    })];
    out.push(run_check("detthm/p-degrees", || {
        let table = set.ptable()?;
        let q = set.q() as u64;
        for j in 1..=m {
            for i in 1..=j {
                let p = table.get(i, j)?;
                let want = q.pow(2 * j as u32) - q.pow((j - i) as u32);
                if !p.is_zero() && p.degree()? != Some(want) {
                    return Ok(Outcome::fail(format!("P_{i},{j} has degree {:?}, expected {want}", p.degree()?), p.to_text()));
                }
            }
            if j == 1 && *table.get(1, 1)? != crate::xialg::XiPoly::var(set.field(), 1).pow(q - 1) {
                return Ok(Outcome::fail("P_1,1 is not xi_1^(q-1)", ""));
            }
            if *table.get(j, j)? != t_u(set, j)?.pow(q - 1) {
                return Ok(Outcome::fail(format!("P_{j},{j} is not u_{j}^(q-1)"), ""));
            }
        }
        Ok(Outcome::pass("P_{i,j} homogeneous of degree q^(2j) - q^(j-i), P_{1,1} = xi_1^(q-1), P_{j,j} = u_j^(q-1)"))
    }));
    out
}

fn t_u(set: &InvariantSet, j: usize) -> Result<crate::xialg::XiPoly> {
    Ok(crate::invariants::u_xi(j, set.field()))
}

/// xi_0, ..., xi_2m and e_1, ..., e_(2m-1) are fixed by every generator.
pub fn verify_invariance(set: &InvariantSet) -> Vec<CheckResult> {
    let m = set.m();
    vec![
        run_check("generators/xi-invariant", || {
            let gens = generators(set.ring())?;
            for i in -1..=2 * m as i32 {
                let f = set.xi(i)?;
                let fixed = gens.iter().map(|g| g.fixes(f)).collect::<Result<Vec<_>>>()?;
                if i >= 0 && fixed.iter().any(|b| !b) {
                    return Ok(Outcome::fail(format!("xi_{i} is moved by a generator"), ""));
                }
                if i == -1 && fixed.iter().all(|b| *b) {
                    return Ok(Outcome::fail("xibar_0 is fixed by every generator", ""));
                }
            }
            Ok(Outcome::pass(format!("{} generators fix xi_0..xi_{} and move xibar_0", gens.len(), 2 * m)))
        }),
        run_check("generators/e-invariant", || {
            let gens = generators(set.ring())?;
            for i in 1..2 * m {
                let e = set.e(i)?;
                for g in &gens {
                    if !g.fixes(e)? {
                        return Ok(Outcome::fail(format!("e_{i} is moved by a generator"), ""));
                    }
                }
            }
            Ok(Outcome::pass(format!("e_1..e_{} fixed by {} generators", 2 * m - 1, gens.len())))
        }),
    ]
}

/// Group order by closure against q^(m^2) prod (q^(2i) - 1).
pub fn verify_group(set: &InvariantSet, opts: &SuiteOptions) -> Vec<CheckResult> {
    let (m, q) = (set.m(), set.q() as u64);
    let expected = expected_order(m, q);
    vec![run_check("group/order", || {
        if expected > opts.group_cap as u128 {
            return Ok(Outcome::Skip(format!("order {expected} exceeds the closure cap {}", opts.group_cap)));
        }
        let gens = generators(set.ring())?;
        let n = group_elements(&gens, set.field(), opts.group_cap)?.len();
        if n as u128 == expected {
            Ok(Outcome::pass(format!("closure has {n} elements")))
        } else {
            Ok(Outcome::fail(format!("closure has {n} elements, expected {expected}"), n.to_string()))
        }
    })]
}

/// H = {xi_0, xi_1..xi_m, e_1..e_m} has only the origin as common zero over
/// GF(q^k), and zeros of xi_1..xi_m are translates of {y = 0}.
pub fn verify_hsop(set: &InvariantSet, opts: &SuiteOptions) -> Vec<CheckResult> {
    let (m, s) = (set.m(), set.field().s());
    let n = 2 * m + 1;
    let ks: Vec<u32> = (1..=8 / s).filter(|k| 1usize.checked_shl(s * k * n as u32).is_some_and(|p| p <= opts.point_budget)).collect();
    let mut out = Vec::new();
    if ks.is_empty() {
        out.push(run_check("hsop/nullcone", || Ok(Outcome::Skip(format!("GF(q)^{n} exceeds the point budget")))));
    }
    for &k in &ks {
        out.push(run_check(format!("hsop/nullcone/k{k}"), || {
            let mut polys = vec![set.xi(0)?.clone()];
            for i in 1..=m {
                polys.push(set.xi(i as i32)?.clone());
                polys.push(set.e(i)?.clone());
            }
            let pc = nullcone_check(set.ring(), &polys, k)?;
            Ok(point_outcome(&pc, format!("{} points over GF(2^{})", pc.points, s * k)))
        }));
        out.push(run_check(format!("hsop/coverage/k{k}"), || {
            if expected_order(m, set.q() as u64) > opts.group_cap as u128 {
                return Ok(Outcome::Skip("group too large to enumerate".into()));
            }
            let elements = group_elements(&generators(set.ring())?, set.field(), opts.group_cap)?;
            let xis = (1..=m).map(|i| set.xi(i as i32).cloned()).collect::<Result<Vec<_>>>()?;
            let pc = coverage_check(set.ring(), &xis, &elements, k)?;
            Ok(point_outcome(&pc, format!("{} points over GF(2^{})", pc.points, s * k)))
        }));
    }
    out.push(run_check("hsop/degree-product", || {
        let q = set.q() as u128;
        let mut prod = 2u128;
        for i in 1..=m {
            prod *= q.pow(i as u32) + 1;
            prod *= set.e_degree(i) as u128;
        }
        let order = expected_order(m, q as u64);
        let gens: u128 = (1..m).map(|i| q.pow(i as u32) / 2).product();
        if prod == order * gens {
            Ok(Outcome::pass(format!("degree product {prod} = |G| * {gens}")))
        } else {
            Ok(Outcome::fail(format!("degree product {prod}, |G| = {order}"), prod.to_string()))
        }
    }));
    out
}

fn point_outcome(pc: &crate::group::PointCheck, detail: String) -> Outcome {
    match &pc.witness {
        None => Outcome::pass(detail),
        Some(w) => Outcome::fail(format!("{detail}; {} bad points", pc.bad), format!("{w:?}")),
    }
}
