//! Values against direct nested sums over monic polynomials.

use std::sync::Arc;

use ffmzv::algebra::{FieldSpec, GaloisField, LaurentSeries, Poly};
use ffmzv::eval::{EvalBudget, Evaluator, ValueFamily};
use ffmzv::indices::Index;

fn monic(k: &GaloisField, d: u32) -> Vec<Poly> {
    let elems: Vec<_> = k.elements().collect();
    let q = elems.len();
    (0..q.pow(d))
        .map(|mut t| {
            let mut c = Vec::new();
            for _ in 0..d {
                c.push(elems[t % q]);
                t /= q;
            }
            c.push(elems[1]);
            Poly::from_coeffs(c)
        })
        .collect()
}

fn carlitz_l(k: &GaloisField, d: u32) -> Poly {
    let q = k.q() as usize;
    let mut l = Poly::one();
    for i in 1..=d {
        let x = Poly::theta().sub(&Poly::monomial(k.elements().nth(1).unwrap(), q.pow(i)), k);
        l = l.mul(&x, k);
    }
    l
}

/// Per degree, the list of denominators that appear at that level.
fn levels(k: &GaloisField, li: bool, top: u32) -> Vec<Vec<Poly>> {
    (0..=top).map(|d| if li { vec![carlitz_l(k, d)] } else { monic(k, d) }).collect()
}

fn brute(k: &GaloisField, li: bool, dagger: bool, s: &[u32], top: u32, prec: i64) -> LaurentSeries {
    let lv = levels(k, li, top);
    let inv = |a: &Poly, e: u32| LaurentSeries::from_fraction(&Poly::one(), &a.pow(e as u64, k), prec, k).unwrap();
    let mut acc = LaurentSeries::zero(prec);
    match s {
        [a] => {
            for ps in &lv {
                for p in ps {
                    acc = acc.add(&inv(p, *a), k);
                }
            }
        }
        [a, b] => {
            for (d1, p1s) in lv.iter().enumerate() {
                for (d2, p2s) in lv.iter().enumerate() {
                    let keep = if dagger { d1 <= d2 } else { d1 > d2 };
                    if !keep {
                        continue;
                    }
                    for p1 in p1s {
                        for p2 in p2s {
                            acc = acc.add(&inv(p1, *a).mul(&inv(p2, *b), k), k);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    if dagger && s.len() % 2 == 1 {
        acc.neg(k)
    } else {
        acc
    }
}

#[test]
fn nested_sums_match_evaluator() {
    for (q, top) in [(2u32, 4u32), (3, 3)] {
        let k = Arc::new(GaloisField::new(FieldSpec::from_order(q).unwrap()));
        let ev = Evaluator::new(Arc::clone(&k), EvalBudget::default());
        for w in 1..=4 {
            for s in Index::compositions_bounded(w, 2) {
                let e = s.entries();
                for (fam, li, dagger) in [
                    (ValueFamily::Zeta, false, false),
                    (ValueFamily::ZetaDagger, false, true),
                    (ValueFamily::Li, true, false),
                    (ValueFamily::LiDagger, true, true),
                ] {
                    // the first omitted level has degree top + 1 in the outermost variable
                    let outer = if dagger { *e.last().unwrap() } else { e[0] };
                    let exact_to = if li {
                        (outer as i64 * (1..=top + 1).map(|i| q.pow(i) as i64).sum::<i64>() - 1).min(30)
                    } else {
                        (top as i64 + 1) * outer as i64 - 1
                    };
                    let want = brute(&k, li, dagger, e, top, exact_to + 4);
                    let got = ev.eval_index(fam, &s, exact_to).unwrap();
                    assert!(
                        got.eq_to_common_prec(&want.truncate(exact_to)),
                        "q={q} {fam}{s}: {} vs {}",
                        got.format(&k),
                        want.format(&k)
                    );
                }
            }
        }
    }
}

#[test]
fn star_values_are_reversed_daggers() {
    let k = Arc::new(GaloisField::new(FieldSpec::from_order(3).unwrap()));
    let ev = Evaluator::new(Arc::clone(&k), EvalBudget::default());
    let s = Index::from([2, 1]);
    let star = ev.eval_index(ValueFamily::ZetaStar, &s, 20).unwrap();
    // Σ_{deg a1 ≥ deg a2} = ζ(2,1) + Σ_{equal degrees}
    let plain = ev.eval_index(ValueFamily::Zeta, &s, 20).unwrap();
    let mut diag = LaurentSeries::zero(20);
    for d in 0..=20 {
        diag = diag.add(&ev.power_sum(d, 2, 20).unwrap().mul(&ev.power_sum(d, 1, 20).unwrap(), &k), &k);
    }
    assert!(star.eq_to_common_prec(&plain.add(&diag, &k)));
}
