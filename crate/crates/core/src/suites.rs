//! Verification suites over a configured field, each producing a `Report`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FieldElem, FieldSpec, GaloisField, Poly, RatFunc};
use crate::error::Result;
use crate::eval::{EvalBudget, Evaluator, ValueFamily};
use crate::indices::{Index, IndexAlgebra, IndexPoly, ProductKind};
use crate::reduction::{Family, Reducer};
use crate::report::{Report, Status};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// A field together with the evaluator and the symbolic engine built on it.
#[derive(Debug)]
pub struct Session {
    pub field: Arc<GaloisField>,
    pub evaluator: Evaluator,
    pub reducer: Reducer,
}

impl Session {
    pub fn new(spec: FieldSpec, budget: EvalBudget, cap: usize) -> Self {
        let field = Arc::new(GaloisField::new(spec));
        let alg = Arc::new(IndexAlgebra::new(Arc::clone(&field)));
        Self {
            evaluator: Evaluator::new(Arc::clone(&field), budget),
            reducer: Reducer::new(alg, cap),
            field,
        }
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn algebra(&self) -> &IndexAlgebra {
        self.reducer.algebra()
    }

    fn prec(&self) -> i64 {
        self.evaluator.budget().prec
    }

    /// S_d(q) − L_1 S_{d+1}(1) Σ_{i ≤ d} S_i(q−1) = 0 as rational functions.
    pub fn fundamental(&self, max_d: u32) -> Result<Report> {
        let mut rep = Report::new("fundamental").param("q", self.q()).param("max_d", max_d);
        for d in 0..=max_d {
            let r = self.evaluator.fundamental_residual(d)?;
            let detail = if r.is_zero() { "identically zero".into() } else { format!("residual {}", r.format(&self.field)) };
            rep.check(format!("d={d}"), r.is_zero(), detail);
        }
        Ok(rep.finish())
    }

    /// S_d(s) = 1/L_d^s exactly for s ≤ q.
    pub fn powersum(&self, max_d: u32) -> Result<Report> {
        let mut rep = Report::new("powersum").param("q", self.q()).param("max_d", max_d);
        for d in 0..=max_d {
            for s in 1..=self.q() {
                let ok = self.evaluator.power_sum_exact(d, s)? == self.evaluator.l_inverse_power(d, s);
                rep.check(format!("d={d} s={s}"), ok, if ok { "equal" } else { "differ" });
            }
        }
        Ok(rep.finish())
    }

    fn random_element(&self, rng: &mut ChaCha8Rng, w: u32) -> IndexPoly {
        let k = &*self.field;
        let comps = Index::compositions(w);
        let elems: Vec<FieldElem> = k.elements().collect();
        let mut out = IndexPoly::zero();
        while out.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let s = comps[rng.gen_range(0..comps.len())].clone();
                let coeffs: Vec<FieldElem> = (0..2).map(|_| elems[rng.gen_range(0..elems.len())]).collect();
                out.add_term(s, &RatFunc::from_poly(Poly::from_coeffs(coeffs)), k);
            }
        }
        out
    }

    /// eval(P)·eval(Q) = eval(P *• Q) on random homogeneous pairs.
    pub fn products(&self, max_w: u32, pairs: usize, seed: u64) -> Result<Report> {
        let k = &*self.field;
        let prec = self.prec();
        let mut rep = Report::new("products")
            .param("q", self.q())
            .param("max_weight", max_w)
            .param("pairs", pairs)
            .param("seed", seed)
            .param("prec", prec);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kinds = [
            (ProductKind::Harmonic, ValueFamily::Li),
            (ProductKind::Harmonic, ValueFamily::LiDagger),
            (ProductKind::QShuffle, ValueFamily::Zeta),
        ];
        for i in 0..pairs {
            let (wp, wq) = (rng.gen_range(1..=max_w), rng.gen_range(1..=max_w));
            let (p, q) = (self.random_element(&mut rng, wp), self.random_element(&mut rng, wq));
            for (kind, fam) in kinds {
                let lhs = self.evaluator.eval(fam, &p, prec)?.mul(&self.evaluator.eval(fam, &q, prec)?, k);
                let rhs = self.evaluator.eval(fam, &self.algebra().product(&p, &q, kind), prec)?;
                let ok = lhs.eq_to_common_prec(&rhs);
                rep.check(
                    format!("pair {i} {fam} weights ({wp},{wq})"),
                    ok,
                    if ok { format!("agree through T^-{}", lhs.prec().min(rhs.prec())) } else { format!("P={} Q={}", p.format(k), q.format(k)) },
                );
            }
        }
        Ok(rep.finish())
    }

    /// Σ_i •(s[:i])·•†(s[i+1:]) = 0 and the mirrored sum, for every index in range.
    pub fn prodsum(&self, max_w: u32, max_depth: usize) -> Result<Report> {
        let k = &*self.field;
        let prec = self.prec();
        let mut rep = Report::new("prodsum").param("q", self.q()).param("max_weight", max_w).param("prec", prec);
        for fam in [ValueFamily::Zeta, ValueFamily::Li] {
            for w in 1..=max_w {
                for s in Index::compositions_bounded(w, max_depth) {
                    let mut plain = crate::algebra::LaurentSeries::zero(prec);
                    let mut mirror = plain.clone();
                    for i in 0..=s.depth() {
                        let (head, tail) = (s.prefix(i), s.suffix(i + 1));
                        let a = self.evaluator.eval_index(fam, &head, prec)?;
                        let b = self.evaluator.eval_index(fam.dagger(), &tail, prec)?;
                        plain = plain.add(&a.mul(&b, k), k);
                        let a = self.evaluator.eval_index(fam.dagger(), &head, prec)?;
                        let b = self.evaluator.eval_index(fam, &tail, prec)?;
                        mirror = mirror.add(&a.mul(&b, k), k);
                    }
                    let ok = plain.is_zero_to_prec() && mirror.is_zero_to_prec();
                    rep.check(format!("{fam} {s}"), ok, if ok { "both sums vanish" } else { "nonzero sum" });
                }
            }
        }
        Ok(rep.finish())
    }

    /// eval(•†, s) = eval(•, D(s)).
    pub fn dagger(&self, max_w: u32, max_depth: usize) -> Result<Report> {
        let prec = self.prec();
        let mut rep = Report::new("dagger").param("q", self.q()).param("max_weight", max_w).param("prec", prec);
        for fam in [Family::Zeta, Family::Li] {
            for w in 1..=max_w {
                for s in Index::compositions_bounded(w, max_depth) {
                    let lhs = self.evaluator.eval_index(fam.dagger_value(), &s, prec)?;
                    let rhs = self.evaluator.eval(fam.value(), &self.reducer.dagger_expand(fam, &s), prec)?;
                    let ok = lhs.eq_to_common_prec(&rhs);
                    rep.check(format!("{fam} {s}"), ok, if ok { "agree" } else { "differ" });
                }
            }
        }
        Ok(rep.finish())
    }

    pub fn kernel(&self, max_w: u32) -> Report {
        let mut rep = Report::new("kernel").param("q", self.q()).param("max_weight", max_w);
        for fam in [Family::Li, Family::Zeta] {
            for w in 0..=max_w {
                let sub = self.reducer.check_kernel(fam, w);
                for case in sub.cases {
                    rep.push(format!("{fam} {}", case.input), case.status, case.detail);
                }
            }
        }
        rep.finish()
    }

    pub fn theorem(&self, max_w: u32) -> Result<Report> {
        let mut rep = Report::new("theorem").param("q", self.q()).param("max_weight", max_w);
        for w in 0..=max_w {
            let sub = self.reducer.check_theorem(w)?;
            for case in sub.cases {
                rep.push(format!("w={w} {}", case.input), case.status, case.detail);
            }
        }
        Ok(rep.finish())
    }

    pub fn prop41(&self, max_entry: u32) -> Result<Report> {
        let mut rep = Report::new("prop41").param("q", self.q()).param("max_entry", max_entry);
        for s in 1..=max_entry {
            for n in 1..=max_entry {
                rep.absorb(self.reducer.check_prop41(s, n)?);
            }
        }
        Ok(rep.finish())
    }

    /// All (s, n) with generator weight ≤ max_w; cases outside the hypotheses are observations.
    pub fn prop42(&self, max_w: u32) -> Result<Report> {
        let q = self.q();
        let mut rep = Report::new("prop42").param("q", q).param("max_weight", max_w);
        if max_w < q {
            return Ok(rep.finish());
        }
        for ws in 0..=max_w - q {
            for s in Index::compositions(ws) {
                for wn in 0..=max_w - q - ws {
                    for n in Index::compositions(wn) {
                        rep.absorb(self.reducer.check_prop42(&s, &n)?);
                    }
                }
            }
        }
        Ok(rep.finish())
    }

    /// Small (s, n, c_1…c_m) with m ≤ 2 and total weight ≤ max_w.
    pub fn keylemma(&self, max_w: u32) -> Result<Report> {
        let q = self.q();
        let mut rep = Report::new("keylemma").param("q", q).param("max_weight", max_w);
        let mut chains: Vec<Vec<u32>> = vec![vec![]];
        for c in 1..=max_w {
            chains.push(vec![c]);
            for c2 in 1..=max_w {
                chains.push(vec![c, c2]);
            }
        }
        for cs in chains {
            let base = cs.iter().sum::<u32>() + cs.len() as u32 * (q - 1);
            if base > max_w {
                continue;
            }
            for ws in 0..=max_w - base {
                for wn in 0..=max_w - base - ws {
                    for s in Index::compositions(ws) {
                        for n in Index::compositions(wn) {
                            if s.depth() + n.depth() + cs.len() == 0 {
                                continue;
                            }
                            rep.absorb(self.reducer.check_keylemma(&s, &n, &cs)?);
                        }
                    }
                }
            }
        }
        Ok(rep.finish())
    }

    pub fn nontrivial(&self) -> Result<Report> {
        self.reducer.check_nontrivial()
    }

    /// ι(class ζ(s)) against class ζ†(s) for every index of weight ≤ max_w.
    pub fn conjecture(&self, max_w: u32) -> Result<Report> {
        let mut rep = Report::new("conjecture").param("q", self.q()).param("max_weight", max_w);
        for w in 0..=max_w {
            for s in Index::compositions(w) {
                rep.absorb(self.reducer.check_conjecture(&s)?);
            }
        }
        debug_assert!(rep.cases.iter().all(|c| c.status == Status::Observation));
        Ok(rep.finish())
    }
}
