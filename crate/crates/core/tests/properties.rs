mod support;

use support::properties as p;

#[test]
fn cartan() {
    p::cartan().unwrap();
}

#[test]
fn p0_and_pdeg() {
    p::extremes().unwrap();
}

#[test]
fn q_power_rule() {
    p::q_power_rule().unwrap();
}

#[test]
fn group_equivariance() {
    p::group_equivariance().unwrap();
}

#[test]
fn ns_laws() {
    p::ns_laws().unwrap();
}

#[test]
fn sqrt_round_trip() {
    p::sqrt_round_trip().unwrap();
}

#[test]
fn serialization_round_trip() {
    p::serialization().unwrap();
}

#[test]
fn runner_reports_false_properties() {
    assert!(p::detects_failure());
    assert_eq!(p::all().len(), 7);
}
