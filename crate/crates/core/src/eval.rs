//! Numeric values in F_q((1/θ)): L_d, power sums S_d(s), and the value
//! families ζ_A, ζ†_A, Li(1), Li†(1) with their star variants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use crate::algebra::{FieldElem, GaloisField, LaurentSeries, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::indices::{Index, IndexPoly};

pub const DEFAULT_MAX_BRUTEFORCE: u64 = 1 << 20;

/// Default precision of the verification suites for inputs of weight `w`.
pub fn default_prec(w: u32) -> i64 {
    4 * w as i64 + 24
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueFamily {
    Zeta,
    ZetaDagger,
    Li,
    LiDagger,
    ZetaStar,
    LiStar,
}

impl ValueFamily {
    pub const ALL: [ValueFamily; 6] = [
        ValueFamily::Zeta,
        ValueFamily::ZetaDagger,
        ValueFamily::Li,
        ValueFamily::LiDagger,
        ValueFamily::ZetaStar,
        ValueFamily::LiStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValueFamily::Zeta => "zeta",
            ValueFamily::ZetaDagger => "zeta-dagger",
            ValueFamily::Li => "li",
            ValueFamily::LiDagger => "li-dagger",
            ValueFamily::ZetaStar => "zeta-star",
            ValueFamily::LiStar => "li-star",
        }
    }

    /// Whether the level terms are power sums S_d(s) rather than 1/L_d^s.
    pub fn uses_power_sums(self) -> bool {
        matches!(self, ValueFamily::Zeta | ValueFamily::ZetaDagger | ValueFamily::ZetaStar)
    }

    pub fn dagger(self) -> ValueFamily {
        if self.uses_power_sums() {
            ValueFamily::ZetaDagger
        } else {
            ValueFamily::LiDagger
        }
    }

    pub fn plain(self) -> ValueFamily {
        if self.uses_power_sums() {
            ValueFamily::Zeta
        } else {
            ValueFamily::Li
        }
    }
}

impl fmt::Display for ValueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ValueFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('-', "_") == s)
            .ok_or_else(|| Error::Parse(format!("unknown value family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalBudget {
    /// Target precision: coefficients of θ^j for j ≥ −prec.
    pub prec: i64,
    /// Largest number of monic polynomials a brute-force power sum may enumerate.
    pub max_bruteforce: u64,
}

impl Default for EvalBudget {
    fn default() -> Self {
        Self { prec: 40, max_bruteforce: DEFAULT_MAX_BRUTEFORCE }
    }
}

/// Evaluator with memo tables for L_d and the level terms.
pub struct Evaluator {
    k: Arc<GaloisField>,
    q: u32,
    budget: EvalBudget,
    l_polys: Mutex<Vec<Poly>>,
    // keyed by (uses power sums, d, s); entries are kept at the largest precision computed
    terms: Mutex<HashMap<(bool, u32, u32), LaurentSeries>>,
}

impl fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Evaluator").field("q", &self.q).field("budget", &self.budget).finish()
    }
}

impl Evaluator {
    pub fn new(k: Arc<GaloisField>, budget: EvalBudget) -> Self {
        let q = k.q();
        Self { k, q, budget, l_polys: Mutex::new(vec![Poly::one()]), terms: Mutex::default() }
    }

    pub fn field(&self) -> &GaloisField {
        &self.k
    }

    pub fn budget(&self) -> EvalBudget {
        self.budget
    }

    /// L_d = ∏_{i=1}^{d} (θ − θ^{q^i}).
    pub fn l_poly(&self, d: u32) -> Poly {
        let mut cache = self.l_polys.lock().expect("cache lock");
        while cache.len() <= d as usize {
            let i = cache.len() as u32;
            let factor = Poly::theta().sub(&Poly::monomial(FieldElem::ONE, (self.q as usize).pow(i)), &self.k);
            let next = cache[i as usize - 1].mul(&factor, &self.k);
            cache.push(next);
        }
        cache[d as usize].clone()
    }

    /// deg L_d = q + q² + … + q^d.
    pub fn l_degree(&self, d: u32) -> u64 {
        (1..=d).map(|i| (self.q as u64).pow(i)).sum()
    }

    fn check_budget(&self, d: u32, s: u32) -> Result<()> {
        let count = (self.q as u128).pow(d);
        if count > self.budget.max_bruteforce as u128 {
            return Err(Error::PrecisionTooExpensive { d, s, count, budget: self.budget.max_bruteforce });
        }
        Ok(())
    }

    fn monic_polys(&self, d: u32) -> impl Iterator<Item = Poly> + '_ {
        let q = self.q as u64;
        let elems: Vec<FieldElem> = self.k.elements().collect();
        (0..q.pow(d)).map(move |mut tail| {
            let mut coeffs = Vec::with_capacity(d as usize + 1);
            for _ in 0..d {
                coeffs.push(elems[(tail % q) as usize]);
                tail /= q;
            }
            coeffs.push(FieldElem::ONE);
            Poly::from_coeffs(coeffs)
        })
    }

    /// S_d(s) by direct summation over the q^d monic polynomials of degree d.
    pub fn power_sum_bruteforce(&self, d: u32, s: u32, prec: i64) -> Result<LaurentSeries> {
        self.check_budget(d, s)?;
        if (s as i64) * (d as i64) > prec {
            return Ok(LaurentSeries::zero(prec));
        }
        let mut acc = LaurentSeries::zero(prec);
        for a in self.monic_polys(d) {
            let term = LaurentSeries::from_fraction(&Poly::one(), &a.pow(s as u64, &self.k), prec, &self.k)?;
            acc = acc.add(&term, &self.k);
        }
        Ok(acc)
    }

    /// S_d(s) as an exact rational function, summed over a common denominator.
    pub fn power_sum_exact(&self, d: u32, s: u32) -> Result<RatFunc> {
        self.check_budget(d, s)?;
        let k = &*self.k;
        let polys: Vec<Poly> = self.monic_polys(d).collect();
        let m = polys.iter().fold(Poly::one(), |acc, a| acc.lcm(a, k));
        let mut num = Poly::zero();
        for a in &polys {
            num = num.add(&m.div_exact(a, k)?.pow(s as u64, k), k);
        }
        RatFunc::new(num, m.pow(s as u64, k), k)
    }

    /// 1/L_d^s as an exact rational function.
    pub fn l_inverse_power(&self, d: u32, s: u32) -> RatFunc {
        RatFunc::new(Poly::one(), self.l_poly(d).pow(s as u64, &self.k), &self.k).expect("L_d is nonzero")
    }

    /// Order in 1/θ of the level-d term for entry s, or a lower bound for it.
    fn term_order(&self, power_sums: bool, d: u32, s: u32) -> i64 {
        let (t, _) = split_p_power(s, self.k.p());
        if !power_sums || t <= self.q {
            s as i64 * self.l_degree(d) as i64
        } else {
            s as i64 * d as i64
        }
    }

    /// The level term u_d(s): S_d(s) for the zeta families, 1/L_d^s for the Li families.
    pub fn level_term(&self, power_sums: bool, d: u32, s: u32, prec: i64) -> Result<LaurentSeries> {
        if self.term_order(power_sums, d, s) > prec {
            return Ok(LaurentSeries::zero(prec));
        }
        let key = (power_sums, d, s);
        if let Some(hit) = self.terms.lock().expect("cache lock").get(&key) {
            if hit.prec() >= prec {
                return Ok(hit.truncate(prec));
            }
        }
        let value = self.compute_level_term(power_sums, d, s, prec)?;
        self.terms.lock().expect("cache lock").insert(key, value.clone());
        Ok(value)
    }

    fn compute_level_term(&self, power_sums: bool, d: u32, s: u32, prec: i64) -> Result<LaurentSeries> {
        let k = &*self.k;
        if !power_sums {
            return LaurentSeries::from_fraction(&Poly::one(), &self.l_poly(d).pow(s as u64, k), prec, k);
        }
        // S_d(t p^v) = S_d(t)^{p^v}, and S_d(t) = 1/L_d^t for t ≤ q
        let (t, v) = split_p_power(s, k.p());
        let pv = (k.p() as i64).pow(v);
        let base_prec = prec / pv + 1;
        let mut x = if t <= self.q {
            LaurentSeries::from_fraction(&Poly::one(), &self.l_poly(d).pow(t as u64, k), base_prec, k)?
        } else {
            self.power_sum_bruteforce(d, t, base_prec)?
        };
        for _ in 0..v {
            x = x.frobenius(k);
        }
        Ok(x.truncate(prec))
    }

    /// S_d(s) to precision `prec`.
    pub fn power_sum(&self, d: u32, s: u32, prec: i64) -> Result<LaurentSeries> {
        self.level_term(true, d, s, prec)
    }

    fn max_level(&self, power_sums: bool, s: u32, prec: i64) -> Option<u32> {
        if self.term_order(power_sums, 0, s) > prec {
            return None;
        }
        let mut d = 0;
        while self.term_order(power_sums, d + 1, s) <= prec {
            d += 1;
        }
        Some(d)
    }

    /// Value of a single index at working precision `prec`.
    pub fn eval_index(&self, family: ValueFamily, s: &Index, prec: i64) -> Result<LaurentSeries> {
        let k = &*self.k;
        match family {
            ValueFamily::ZetaStar | ValueFamily::LiStar => {
                let v = self.eval_index(family.dagger(), &s.reversed(), prec)?;
                return Ok(if s.depth() % 2 == 1 { v.neg(k) } else { v });
            }
            _ => {}
        }
        let power_sums = family.uses_power_sums();
        let dagger = matches!(family, ValueFamily::ZetaDagger | ValueFamily::LiDagger);
        let e = s.entries();
        let r = e.len();
        if r == 0 {
            return Ok(LaurentSeries::one(prec));
        }
        let top = e.iter().filter_map(|&x| self.max_level(power_sums, x, prec)).max();
        let Some(top) = top else {
            return Ok(LaurentSeries::zero(prec));
        };
        let zero = LaurentSeries::zero(prec);
        if dagger {
            // f[j] = Σ_{0 ≤ d_1 ≤ … ≤ d_j ≤ D} ∏_{i ≤ j} u_{d_i}(s_i)
            let mut f = vec![zero; r + 1];
            f[0] = LaurentSeries::one(prec);
            for d in 0..=top {
                for j in 1..=r {
                    let u = self.level_term(power_sums, d, e[j - 1], prec)?;
                    if !u.is_zero_to_prec() {
                        f[j] = f[j].add(&u.mul(&f[j - 1], k), k).truncate(prec);
                    }
                }
            }
            let v = f.pop().expect("r >= 1");
            Ok(if r % 2 == 1 { v.neg(k) } else { v })
        } else {
            // g[j] = Σ_{D ≥ d_j > … > d_r ≥ 0} ∏_{i ≥ j} u_{d_i}(s_i), updated level by level
            let mut g = vec![zero; r + 1];
            g[r] = LaurentSeries::one(prec);
            for d in 0..=top {
                for j in 0..r {
                    let u = self.level_term(power_sums, d, e[j], prec)?;
                    if !u.is_zero_to_prec() {
                        g[j] = g[j].add(&u.mul(&g[j + 1], k), k).truncate(prec);
                    }
                }
            }
            Ok(g.swap_remove(0))
        }
    }

    /// Value of a linear combination, correct through θ^{-prec}.
    pub fn eval(&self, family: ValueFamily, p: &IndexPoly, prec: i64) -> Result<LaurentSeries> {
        let k = &*self.k;
        // coefficients with numerator degree above denominator degree shift precision down
        let extra = p.iter().filter_map(|(_, c)| c.valuation_degree()).max().unwrap_or(0).max(0);
        let work = prec + extra;
        let mut acc = LaurentSeries::zero(work);
        for (s, c) in p.iter() {
            let v = self.eval_index(family, s, work)?;
            let cs = LaurentSeries::from_ratfunc(c, work, k)?;
            acc = acc.add(&cs.mul(&v, k), k);
        }
        Ok(acc.truncate(prec))
    }

    /// Value of a single index, correct through θ^{-prec}.
    pub fn eval_single(&self, family: ValueFamily, s: &Index, prec: i64) -> Result<LaurentSeries> {
        self.eval_index(family, s, prec)
    }

    /// S_d(q) − L_1 S_{d+1}(1) Σ_{i ≤ d} S_i(q−1), computed exactly.
    pub fn fundamental_residual(&self, d: u32) -> Result<RatFunc> {
        let k = &*self.k;
        let q = self.q;
        self.check_budget(d + 1, 1)?;
        let l1 = RatFunc::from_poly(self.l_poly(1));
        let mut inner = RatFunc::zero();
        for i in 0..=d {
            inner = inner.add(&self.power_sum_exact(i, q - 1)?, k);
        }
        let rhs = l1.mul(&self.power_sum_exact(d + 1, 1)?, k).mul(&inner, k);
        Ok(self.power_sum_exact(d, q)?.sub(&rhs, k))
    }
}

/// Writes s = t·p^v with p ∤ t.
pub fn split_p_power(mut s: u32, p: u32) -> (u32, u32) {
    let mut v = 0;
    while s % p == 0 {
        s /= p;
        v += 1;
    }
    (s, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, FieldSpec};

    fn ev(q: u32) -> Evaluator {
        Evaluator::new(Arc::new(GaloisField::new(FieldSpec::from_order(q).unwrap())), EvalBudget::default())
    }

    #[test]
    fn l_polynomials() {
        let e = ev(2);
        let k = e.field();
        assert!(e.l_poly(0).is_one());
        assert_eq!(e.l_poly(1).format(k), "T^2+T");
        let expected = parse_ratfunc("(T+T^2)*(T+T^4)", k).unwrap();
        assert_eq!(&e.l_poly(2), expected.num());
        for d in 0..4 {
            assert_eq!(e.l_poly(d).degree().unwrap() as u64, e.l_degree(d));
        }
    }

    #[test]
    fn small_power_sums() {
        let e = ev(2);
        let k = e.field();
        for s in 1..5 {
            assert_eq!(e.power_sum(0, s, 10).unwrap(), LaurentSeries::one(10));
        }
        let s11 = e.power_sum_exact(1, 1).unwrap();
        assert_eq!(s11, e.l_inverse_power(1, 1));
        // S_1(3) over {θ, θ+1}
        let oracle = parse_ratfunc("(T^2+T+1)/(T^3*(T+1)^3)", k).unwrap();
        assert_eq!(e.power_sum_exact(1, 3).unwrap(), oracle);
        let num = e.power_sum_bruteforce(1, 3, 30).unwrap();
        assert_eq!(num, LaurentSeries::from_ratfunc(&oracle, 30, k).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let k = Arc::new(GaloisField::new(FieldSpec::from_order(2).unwrap()));
        let e = Evaluator::new(k, EvalBudget { prec: 40, max_bruteforce: 8 });
        assert!(matches!(e.power_sum_bruteforce(4, 3, 40), Err(Error::PrecisionTooExpensive { .. })));
        assert!(e.power_sum_bruteforce(3, 3, 40).is_ok());
    }

    #[test]
    fn low_depth_conventions() {
        let e = ev(3);
        let k = e.field();
        let empty = IndexPoly::unit();
        for fam in ValueFamily::ALL {
            assert_eq!(e.eval(fam, &empty, 20).unwrap(), LaurentSeries::one(20));
        }
        for s in 1..6 {
            let idx = Index::single(s);
            let li = e.eval_single(ValueFamily::Li, &idx, 30).unwrap();
            let lid = e.eval_single(ValueFamily::LiDagger, &idx, 30).unwrap();
            assert_eq!(lid, li.neg(k));
            let z = e.eval_single(ValueFamily::Zeta, &idx, 30).unwrap();
            assert_eq!(e.eval_single(ValueFamily::ZetaStar, &idx, 30).unwrap(), z);
        }
    }

    #[test]
    fn fundamental_relation_numerically() {
        let e = ev(2);
        let l1 = RatFunc::from_poly(e.l_poly(1));
        let lhs = e.eval_single(ValueFamily::Li, &Index::single(2), 30).unwrap();
        let rhs = e.eval(ValueFamily::Li, &IndexPoly::monomial(Index::from([1, 1]), l1), 30).unwrap();
        assert_eq!(lhs, rhs);
        assert!(e.fundamental_residual(1).unwrap().is_zero());
    }
}
