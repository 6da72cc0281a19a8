use c2webs::ring::{FractionField, PrimeField, SymbolicA};
use c2webs::webs::relation_suite;

#[test]
fn relations_hold_over_a() {
    for r in relation_suite(SymbolicA) {
        assert!(r.passed, "{}: {:?}", r.name, r.witness);
    }
}

#[test]
fn relations_hold_over_fields() {
    for r in relation_suite(FractionField) {
        assert!(r.passed, "{}: {:?}", r.name, r.witness);
    }
    for r in relation_suite(PrimeField::new(7, 2).unwrap()) {
        assert!(r.passed, "{}: {:?}", r.name, r.witness);
    }
}
