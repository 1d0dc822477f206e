//! Randomized property suites with fixed seeds, shared by the core property
//! tests and the acceptance target.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use orthoinv_core::gf::Field;
use orthoinv_core::group::generators;
use orthoinv_core::ring::{Monomial, Poly, Ring, MAX_VARS};
use orthoinv_core::steenrod::{steenrod_full, steenrod_k};
use orthoinv_core::xialg::{XiMonomial, XiPoly};
use orthoinv_core::Error;

pub const CASES: u32 = 64;

/// A homogeneous polynomial in S_m[z] for m in 1..=2 and q in {2, 4}.
#[derive(Clone, Debug)]
pub struct Sample {
    pub ring: Ring,
    pub f: Poly,
    pub g: Poly,
}

fn homogeneous(ring: Ring, terms: &[(Vec<usize>, u8)]) -> Poly {
    let n = ring.nvars();
    let q = ring.field().q() as u8;
    Poly::from_terms(
        ring,
        terms.iter().map(|(vars, c)| {
            let mut e = [0u32; MAX_VARS];
            for v in vars {
                e[v % n] += 1;
            }
            (Monomial::new(e), 1 + c % (q - 1))
        }),
    )
}

pub fn sample() -> impl Strategy<Value = Sample> {
    let term = |d: usize| (prop::collection::vec(0usize..5, d), any::<u8>());
    (1usize..=2, 1u32..=2, 1usize..=4, 1usize..=3).prop_flat_map(move |(m, s, df, dg)| {
        (prop::collection::vec(term(df), 1..5), prop::collection::vec(term(dg), 1..4)).prop_map(move |(tf, tg)| {
            let ring = Ring::orthogonal(m, Field::new(s).unwrap()).unwrap();
            Sample { ring, f: homogeneous(ring, &tf), g: homogeneous(ring, &tg) }
        })
    })
}

fn xi_sample() -> impl Strategy<Value = XiPoly> {
    (1u32..=3, prop::collection::vec((prop::collection::vec(0u32..4, 6), any::<u8>()), 0..6)).prop_map(|(s, terms)| {
        let f = Field::new(s).unwrap();
        let q = f.q() as u8;
        XiPoly::from_terms(
            f,
            terms.into_iter().map(|(e, c)| {
                let mut mono = XiMonomial::one();
                for (k, x) in e.into_iter().enumerate() {
                    mono.set(k, x);
                }
                (mono, 1 + c % (q - 1))
            }),
        )
    })
}

fn runner(seed: u64) -> TestRunner {
    TestRunner::new(Config { cases: CASES, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() })
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg.into()))
    }
}

fn check(seed: u64, body: impl Fn(Sample) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner(seed).run(&sample(), body).map_err(|e| e.to_string())
}

pub fn cartan() -> Result<(), String> {
    check(0xCA27A4, |s| {
        let fg = &s.f * &s.g;
        let (ef, eg) = (steenrod_full(&s.f).unwrap(), steenrod_full(&s.g).unwrap());
        for k in 0..=fg.degree().unwrap_or(0) as usize {
            let mut rhs = Poly::zero(s.ring);
            for i in 0..=k {
                rhs = &rhs + &(&ef.get(i) * &eg.get(k - i));
            }
            ensure(steenrod_k(&fg, k as u64).unwrap() == rhs, format!("Cartan fails at k = {k}"))?;
        }
        Ok(())
    })
}

pub fn extremes() -> Result<(), String> {
    check(0xE87, |s| {
        let d = s.f.degree().unwrap_or(0) as u64;
        let q = s.ring.field().q() as u64;
        ensure(steenrod_k(&s.f, 0).unwrap() == s.f, "P^0 is not the identity")?;
        ensure(steenrod_k(&s.f, d).unwrap() == s.f.pow(q), "P^deg is not the q-th power")?;
        ensure(steenrod_k(&s.f, d + 1).unwrap().is_zero(), "P^k nonzero above the degree")
    })
}

pub fn q_power_rule() -> Result<(), String> {
    check(0x9B0, |s| {
        let q = s.ring.field().q() as u64;
        let fq = s.f.pow(q);
        for k in 0..=fq.degree().unwrap_or(0) as u64 {
            let want = if k % q == 0 { steenrod_k(&s.f, k / q).unwrap().pow(q) } else { Poly::zero(s.ring) };
            ensure(steenrod_k(&fq, k).unwrap() == want, format!("q-power rule fails at k = {k}"))?;
        }
        Ok(())
    })
}

pub fn group_equivariance() -> Result<(), String> {
    check(0x6E0, |s| {
        let gens = generators(&s.ring).unwrap();
        let d = s.f.degree().unwrap_or(0) as u64;
        for g in gens.iter().take(4) {
            let gf = g.act(&s.f).unwrap();
            for k in 0..=d {
                let lhs = g.act(&steenrod_k(&s.f, k).unwrap()).unwrap();
                ensure(lhs == steenrod_k(&gf, k).unwrap(), format!("P^{k} does not commute with a generator"))?;
            }
        }
        Ok(())
    })
}

pub fn ns_laws() -> Result<(), String> {
    check(0x25, |s| {
        let h = &s.f + &s.f.square();
        ensure((&h + &s.f).ns() == &h.ns() + &s.f.ns(), "ns is not additive")?;
        ensure(s.f.ns().ns() == s.f.ns(), "ns is not idempotent")?;
        ensure((&s.f + &s.f.ns()).sqrt().is_ok(), "f + ns(f) is not a square")
    })
}

pub fn sqrt_round_trip() -> Result<(), String> {
    check(0x5097, |s| {
        ensure(s.f.square().sqrt().unwrap() == s.f, "sqrt(f^2) != f")?;
        if !s.f.ns().is_zero() {
            ensure(matches!(s.f.sqrt(), Err(Error::NonSquareInput(_))), "non-square accepted")?;
        }
        Ok(())
    })
}

pub fn serialization() -> Result<(), String> {
    check(0x7E47, |s| {
        ensure(Poly::from_text(&s.f.to_text()).unwrap() == s.f, "polynomial text round trip")?;
        ensure(Poly::from_text(&s.g.to_text()).unwrap() == s.g, "polynomial text round trip")
    })?;
    runner(0x7E48)
        .run(&xi_sample(), |p| ensure(XiPoly::from_text(&p.to_text()).unwrap() == p, "xi-polynomial text round trip"))
        .map_err(|e| e.to_string())
}

pub type Property = fn() -> Result<(), String>;

/// Every property suite by name.
pub fn all() -> Vec<(&'static str, Property)> {
    vec![
        ("cartan", cartan),
        ("p0-pdeg", extremes),
        ("q-power", q_power_rule),
        ("group-equivariance", group_equivariance),
        ("ns-laws", ns_laws),
        ("sqrt-round-trip", sqrt_round_trip),
        ("serialization", serialization),
    ]
}

/// The runner reports a property that is false on some input.
pub fn detects_failure() -> bool {
    check(1, |s| ensure(s.f.ns().is_zero(), "nonsquare sample")).is_err()
}
