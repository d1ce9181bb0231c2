use std::sync::Arc;

use ffmzv::algebra::{FieldSpec, GaloisField, LaurentSeries, Poly};
use ffmzv::eval::{EvalBudget, Evaluator, ValueFamily};
use ffmzv::indices::Index;
use ffmzv::witness::{find_dependence, DependenceProblem};

fn setup(q: u32) -> (Arc<GaloisField>, Evaluator) {
    let k = Arc::new(GaloisField::new(FieldSpec::from_order(q).unwrap()));
    let ev = Evaluator::new(Arc::clone(&k), EvalBudget::default());
    (k, ev)
}

#[test]
fn recovers_l1_against_one() {
    let (k, _) = setup(2);
    let l1 = Poly::theta().add(&Poly::theta().pow(2, &k), &k);
    let values = vec![LaurentSeries::one(30), LaurentSeries::from_poly(&l1, 30)];
    let dep = find_dependence(&DependenceProblem { values, deg_bound: 2 }, &k).unwrap();
    assert_eq!(dep.kernel, vec![vec![l1, Poly::one()]]);
    assert!(dep.warning.is_none());
}

#[test]
fn zeta_one_squared_is_zeta_two_in_characteristic_two() {
    let (k, ev) = setup(2);
    let z1 = ev.eval_index(ValueFamily::Zeta, &Index::single(1), 32).unwrap();
    let z2 = ev.eval_index(ValueFamily::Zeta, &Index::single(2), 32).unwrap();
    let dep = find_dependence(&DependenceProblem { values: vec![z1.mul(&z1, &k), z2], deg_bound: 1 }, &k).unwrap();
    assert_eq!(dep.kernel, vec![vec![Poly::one(), Poly::one()]]);
}

#[test]
fn no_relation_between_one_and_zeta_one() {
    for q in [2, 3] {
        let (k, ev) = setup(q);
        let z1 = ev.eval_index(ValueFamily::Zeta, &Index::single(1), 30).unwrap();
        let dep = find_dependence(&DependenceProblem { values: vec![LaurentSeries::one(30), z1], deg_bound: 2 }, &k).unwrap();
        assert!(dep.kernel.is_empty(), "q={q}: {:?}", dep.kernel);
    }
}

#[test]
fn low_precision_is_flagged() {
    let (k, ev) = setup(3);
    let z1 = ev.eval_index(ValueFamily::Zeta, &Index::single(1), 6).unwrap();
    let dep = find_dependence(&DependenceProblem { values: vec![LaurentSeries::one(6), z1], deg_bound: 2 }, &k).unwrap();
    assert!(dep.warning.is_some());
}
