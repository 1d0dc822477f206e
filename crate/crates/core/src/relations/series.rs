//! Hilbert series of the invariant ring in two closed forms, compared with
//! each other and with fixed-space dimensions, and the rank count.

use num::{BigInt, BigRational, One};

use crate::error::Result;
use crate::group::{fixed_space_dim, generators};
use crate::invariants::InvariantSet;
use crate::relations::{run_check, CheckResult, Outcome};

/// Power series truncated after degree `len - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    pub coeffs: Vec<i128>,
}

impl PowerSeries {
    pub fn one(len: usize) -> Self {
        let mut coeffs = vec![0; len];
        if len > 0 {
            coeffs[0] = 1;
        }
        PowerSeries { coeffs }
    }

    /// Multiplies by 1 - t^d.
    pub fn mul_one_minus(&mut self, d: u64) {
        let d = d as usize;
        for k in (d..self.coeffs.len()).rev() {
            self.coeffs[k] -= self.coeffs[k - d];
        }
    }

    /// Divides by 1 - t^d.
    pub fn div_one_minus(&mut self, d: u64) {
        let d = d as usize;
        for k in d..self.coeffs.len() {
            self.coeffs[k] += self.coeffs[k - d];
        }
    }

    /// Multiplies by 1 + t^d + ... + t^((n-1)d).
    pub fn mul_geometric(&mut self, d: u64, n: u64) {
        self.div_one_minus(d);
        self.mul_one_minus(d.saturating_mul(n));
    }
}

fn pow(q: u64, k: usize) -> u64 {
    q.pow(k as u32)
}

fn e_degree(m: usize, q: u64, i: usize) -> u64 {
    pow(q, 2 * m - i) * (pow(q, i) - 1) / 2
}

/// Free module over F_q[H], H = {xi_0, xi_1..xi_m, e_1..e_m}, on the
/// monomial factors of prod_{i<m} xi_(2m-i)^(q^i/2 - 1).
pub fn free_module_series(m: usize, q: u64, len: usize) -> PowerSeries {
    let mut s = PowerSeries::one(len);
    for i in 1..m {
        s.mul_geometric(pow(q, 2 * m - i) + 1, pow(q, i) / 2);
    }
    s.div_one_minus(2);
    for i in 1..=m {
        s.div_one_minus(pow(q, i) + 1);
        s.div_one_minus(e_degree(m, q, i));
    }
    s
}

/// Complete intersection on xi_0, xi_1..xi_(2m-1), e_1..e_(2m-1) with
/// relations in degrees (q^i/2)(q^(2m-i)+1) and deg e_(2m-i), i < m.
pub fn ci_series(m: usize, q: u64, len: usize) -> PowerSeries {
    let mut s = PowerSeries::one(len);
    for i in 1..m {
        s.mul_one_minus(pow(q, i) / 2 * (pow(q, 2 * m - i) + 1));
        s.mul_one_minus(e_degree(m, q, 2 * m - i));
    }
    s.div_one_minus(2);
    for i in 1..2 * m {
        s.div_one_minus(pow(q, i) + 1);
        s.div_one_minus(e_degree(m, q, i));
    }
    s
}

/// Both closed forms agree to degree `cap`, and match the dimension of the
/// fixed forms of each degree while the monomial basis stays under `basis_budget`.
pub fn hilbert_check(set: &InvariantSet, cap: u32, basis_budget: usize) -> Vec<CheckResult> {
    let (m, q) = (set.m(), set.q() as u64);
    let len = cap as usize + 1;
    let free = free_module_series(m, q, len);
    let ci = ci_series(m, q, len);
    let forms = run_check("hilbert/closed-forms", || {
        let far = 4096;
        let (a, b) = (free_module_series(m, q, far), ci_series(m, q, far));
        match a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y) {
            None => Ok(Outcome::pass(format!("free-module and complete-intersection forms agree to degree {}", far - 1))),
            Some(d) => Ok(Outcome::fail(format!("forms differ in degree {d}"), format!("{} vs {}", a.coeffs[d], b.coeffs[d]))),
        }
    });
    let dims = run_check("hilbert/fixed-dims", || {
        let ring = set.ring();
        let gens = generators(ring)?;
        let mut checked = 0;
        for d in 0..=cap {
            let dim = match fixed_space_dim(ring, &gens, d, basis_budget) {
                Ok(dim) => dim,
                Err(crate::error::Error::BudgetExceeded { .. }) if d > 0 => break,
                Err(e) => return Err(e),
            };
            if dim as i128 != free.coeffs[d as usize] || dim as i128 != ci.coeffs[d as usize] {
                return Ok(Outcome::fail(
                    format!("degree {d}: fixed space {dim}, series {}", free.coeffs[d as usize]),
                    format!("{d}:{dim}"),
                ));
            }
            checked = d;
        }
        Ok(Outcome::pass(format!("dimensions agree through degree {checked}")))
    });
    vec![forms, dims]
}

/// |O(2m+1,q)| against the product of the parameter degrees divided by the
/// number of module generators.
pub fn rank_formula_check(m: usize, q: u64) -> Vec<CheckResult> {
    vec![run_check("rank/formula", || -> Result<Outcome> {
        let big = |x: u64| BigRational::from_integer(BigInt::from(x));
        let qb = big(q);
        let two = big(2);
        let mut num = two.clone();
        for i in 1..=m {
            num *= big(pow(q, i) + 1);
            num *= big(pow(q, i) - 1) * big(pow(q, 2 * m - i)) / &two;
        }
        let mut den = num::pow(qb.clone(), m * m);
        for k in 1..=m {
            den *= big(pow(q, 2 * k) - 1);
        }
        let lhs = num / den;
        let mut rhs = BigRational::one();
        for i in 1..m {
            rhs *= big(pow(q, i)) / &two;
        }
        if lhs == rhs {
            Ok(Outcome::pass(format!("degree product / group order = {rhs}; module basis {}", module_basis_text(m, q))))
        } else {
            Ok(Outcome::fail(format!("ratio {lhs} but {rhs} module generators"), lhs.to_string()))
        }
    })]
}

/// The monomial factors of prod_{i<m} xi_(2m-i)^(q^i/2 - 1), listed when few.
pub fn module_basis_text(m: usize, q: u64) -> String {
    let mut basis = vec![String::new()];
    for i in 1..m {
        let mut next = Vec::new();
        for b in &basis {
            for a in 0..pow(q, i) / 2 {
                let f = match a {
                    0 => String::new(),
                    1 => format!("xi_{}", 2 * m - i),
                    _ => format!("xi_{}^{a}", 2 * m - i),
                };
                next.push(match (b.is_empty(), f.is_empty()) {
                    (true, _) => f,
                    (false, true) => b.clone(),
                    (false, false) => format!("{b} {f}"),
                });
            }
        }
        basis = next;
        if basis.len() > 16 {
            return format!("of {} monomials", (1..m).map(|i| pow(q, i) / 2).product::<u64>());
        }
    }
    let items: Vec<String> = basis.into_iter().map(|b| if b.is_empty() { "1".into() } else { b }).collect();
    format!("{{{}}}", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_series() {
        // m = 2, q = 2 is polynomial on degrees 2, 3, 5, 4, 6.
        let s = free_module_series(2, 2, 13);
        assert_eq!(s.coeffs, [1, 0, 1, 1, 2, 2, 4, 3, 6, 6, 9, 9, 14]);
        assert_eq!(ci_series(2, 2, 13), s);
        let s = free_module_series(1, 8, 30);
        assert_eq!(s.coeffs[28], 3);
        assert_eq!(module_basis_text(2, 4), "{1, xi_3}");
    }
}
