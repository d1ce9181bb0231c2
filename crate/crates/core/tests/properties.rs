use std::collections::BTreeMap;
use std::sync::Arc;

use ffmzv::algebra::{FieldElem, FieldSpec, GaloisField, LaurentSeries, Poly, RatFunc};
use ffmzv::charzero::{dual_index, mzdv_num, mzv_num};
use ffmzv::eval::{EvalBudget, Evaluator, ValueFamily};
use ffmzv::indices::{Index, IndexAlgebra, ProductKind};
use ffmzv::reduction::decompose_t;
use proptest::prelude::*;

const ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

fn field(q: u32) -> GaloisField {
    GaloisField::new(FieldSpec::from_order(q).unwrap())
}

fn elem(k: &GaloisField, i: u32) -> FieldElem {
    k.elements().nth((i % k.q()) as usize).unwrap()
}

fn poly(k: &GaloisField, cs: &[u32]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| elem(k, c)).collect())
}

fn index_strategy(max_depth: usize, max_entry: u32) -> impl Strategy<Value = Index> {
    prop::collection::vec(1..=max_entry, 0..=max_depth).prop_map(|e| Index::new(e).unwrap())
}

fn as_map(terms: &[(Index, FieldElem)]) -> BTreeMap<Index, FieldElem> {
    terms.iter().cloned().collect()
}

/// Quasi-shuffle built from the last entries instead of the first.
fn stuffle_from_right(a: &[u32], b: &[u32], k: &GaloisField) -> BTreeMap<Vec<u32>, FieldElem> {
    let mut out = BTreeMap::new();
    if a.is_empty() || b.is_empty() {
        out.insert([a, b].concat(), FieldElem::ONE);
        return out;
    }
    let (ai, al) = a.split_at(a.len() - 1);
    let (bi, bl) = b.split_at(b.len() - 1);
    let mut push = |m: BTreeMap<Vec<u32>, FieldElem>, last: u32| {
        for (mut w, c) in m {
            w.push(last);
            let e = out.entry(w).or_insert(FieldElem::ZERO);
            *e = k.add(*e, c);
        }
    };
    push(stuffle_from_right(ai, b, k), al[0]);
    push(stuffle_from_right(a, bi, k), bl[0]);
    push(stuffle_from_right(ai, bi, k), al[0] + bl[0]);
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(qi in 0usize..ORDERS.len(), a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
        let k = field(ORDERS[qi]);
        let (a, b, c) = (elem(&k, a), elem(&k, b), elem(&k, c));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
        prop_assert_eq!(k.add(a, k.neg(a)), FieldElem::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), FieldElem::ONE);
        }
        prop_assert_eq!(k.pow(a, k.q() as u64), a);
        prop_assert_eq!(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
        prop_assert_eq!(k.frobenius(k.mul(a, b)), k.mul(k.frobenius(a), k.frobenius(b)));
    }

    #[test]
    fn polynomial_division(qi in 0usize..ORDERS.len(), a in prop::collection::vec(0u32..9, 0..8), b in prop::collection::vec(0u32..9, 1..5)) {
        let k = field(ORDERS[qi]);
        let (a, b) = (poly(&k, &a), poly(&k, &b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b, &k).unwrap();
        prop_assert_eq!(quo.mul(&b, &k).add(&rem, &k), a);
        prop_assert!(rem.degree().map_or(true, |d| d < b.degree().unwrap()));
    }

    #[test]
    fn laurent_expansion_is_a_ring_map(
        qi in 0usize..4,
        n1 in prop::collection::vec(0u32..9, 0..4), d1 in prop::collection::vec(0u32..9, 1..4),
        n2 in prop::collection::vec(0u32..9, 0..4), d2 in prop::collection::vec(0u32..9, 1..4),
    ) {
        let k = field(ORDERS[qi]);
        let f = RatFunc::new(poly(&k, &n1), poly(&k, &d1), &k);
        let g = RatFunc::new(poly(&k, &n2), poly(&k, &d2), &k);
        prop_assume!(f.is_ok() && g.is_ok());
        let (f, g) = (f.unwrap(), g.unwrap());
        let x = |r: &RatFunc| LaurentSeries::from_ratfunc(r, 25, &k).unwrap();
        prop_assert!(x(&f.mul(&g, &k)).eq_to_common_prec(&x(&f).mul(&x(&g), &k)));
        prop_assert!(x(&f.add(&g, &k)).eq_to_common_prec(&x(&f).add(&x(&g), &k)));
        prop_assert!(x(&f).frobenius(&k).eq_to_common_prec(&x(&f).pow(k.p(), &k)));
    }

    #[test]
    fn precision_is_sound(q in 2u32..=3, s in index_strategy(2, 3)) {
        prop_assume!(!s.is_empty());
        let ev = Evaluator::new(Arc::new(field(q)), EvalBudget::default());
        for fam in [ValueFamily::Li, ValueFamily::Zeta, ValueFamily::LiDagger] {
            let lo = ev.eval_index(fam, &s, 12).unwrap();
            let hi = ev.eval_index(fam, &s, 24).unwrap();
            prop_assert!(lo.prec() <= 12 + 1);
            prop_assert!(hi.truncate(lo.prec()).eq_to_common_prec(&lo));
        }
    }

    #[test]
    fn products_commute_with_unit(q in 2u32..=4, a in index_strategy(3, 4), b in index_strategy(3, 4)) {
        let alg = IndexAlgebra::new(Arc::new(field(q)));
        for kind in [ProductKind::Harmonic, ProductKind::QShuffle] {
            let ab = as_map(&alg.product_indices(&a, &b, kind));
            let ba = as_map(&alg.product_indices(&b, &a, kind));
            prop_assert_eq!(ab, ba);
            let unit = alg.product_indices(&a, &Index::empty(), kind);
            prop_assert_eq!(unit.as_slice(), &[(a.clone(), FieldElem::ONE)][..]);
        }
    }

    #[test]
    fn harmonic_matches_right_recursion(q in 2u32..=5, a in index_strategy(3, 5), b in index_strategy(3, 5)) {
        let k = Arc::new(field(q));
        let alg = IndexAlgebra::new(Arc::clone(&k));
        let got: BTreeMap<Vec<u32>, FieldElem> = alg
            .product_indices(&a, &b, ProductKind::Harmonic)
            .iter()
            .map(|(s, c)| (s.entries().to_vec(), *c))
            .collect();
        prop_assert_eq!(got, stuffle_from_right(a.entries(), b.entries(), &k));
    }

    #[test]
    fn delta_is_symmetric(q in 2u32..=9, s in 1u32..20, n in 1u32..20, j in 0u32..40) {
        prop_assume!(ffmzv::algebra::gf::prime_power(q).is_some());
        let alg = IndexAlgebra::new(Arc::new(field(q)));
        prop_assert_eq!(alg.delta(s, n, j), alg.delta(n, s, j));
    }

    #[test]
    fn decomposition_round_trip(q in 2u32..=5, a in index_strategy(6, 7)) {
        let d = decompose_t(&a, q);
        prop_assert!(d.m >= 1);
        prop_assert_eq!(d.reassemble(q), a);
        prop_assert!(d.n.first().map_or(true, |n1| n1 > q));
    }

    #[test]
    fn duality_is_an_involution(first in 2u32..6, rest in prop::collection::vec(1u32..5, 0..4)) {
        let s = Index::new([vec![first], rest].concat()).unwrap();
        let d = dual_index(&s).unwrap();
        prop_assert_eq!(d.weight(), s.weight());
        prop_assert_eq!(dual_index(&d).unwrap(), s);
    }

    #[test]
    fn dagger_sum_by_inclusion_exclusion(a in 1u32..5, b in 2u32..5) {
        // Σ_{m1 ≤ m2} m1^-a m2^-b = ζ(b,a) + ζ(a+b) over the same cutoff
        let m = 2_000;
        let dag = mzdv_num(&Index::from([a, b]), m).unwrap().to_f64();
        let split = mzv_num(&Index::from([b, a]), m).unwrap().to_f64() + mzv_num(&Index::single(a + b), m).unwrap().to_f64();
        prop_assert!((dag - split).abs() < 1e-12, "{} vs {}", dag, split);
    }
}

fn times(alg: &IndexAlgebra, x: &BTreeMap<Index, FieldElem>, y: &Index, kind: ProductKind) -> BTreeMap<Index, FieldElem> {
    let k = alg.field();
    let mut out: BTreeMap<Index, FieldElem> = BTreeMap::new();
    for (s, c) in x {
        for (t, e) in alg.product_indices(s, y, kind).iter() {
            let slot = out.entry(t.clone()).or_insert(FieldElem::ZERO);
            *slot = k.add(*slot, k.mul(*c, *e));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Not used by any algorithm; checked on samples only.
    #[test]
    fn products_are_associative(q in 2u32..=4, a in index_strategy(2, 4), b in index_strategy(2, 4), c in index_strategy(2, 4)) {
        let alg = IndexAlgebra::new(Arc::new(field(q)));
        for kind in [ProductKind::Harmonic, ProductKind::QShuffle] {
            let ab = as_map(&alg.product_indices(&a, &b, kind));
            let bc = as_map(&alg.product_indices(&b, &c, kind));
            let left = times(&alg, &ab, &c, kind);
            let right = times(&alg, &bc, &a, kind);
            prop_assert_eq!(left, right, "{:?} q={}", kind, q);
        }
    }
}
