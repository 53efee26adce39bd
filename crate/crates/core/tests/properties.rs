mod common;

use common::CASES;

#[test]
fn field_axioms() {
    common::field_axioms(CASES).unwrap();
}

#[test]
fn euler_identity() {
    common::euler_identity(CASES).unwrap();
}

#[test]
fn yun_reconstruction() {
    common::yun_reconstruction(CASES).unwrap();
}

#[test]
fn group_law() {
    common::group_law(CASES).unwrap();
}

#[test]
fn ring_homomorphism() {
    common::ring_homomorphism(CASES).unwrap();
}
