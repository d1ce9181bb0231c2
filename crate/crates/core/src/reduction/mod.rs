//! Relation generators, rewriting to the Thakur basis, dagger expansion, and
//! the quotient by the ideal generated by ζ_A(q−1).

mod checks;
mod linalg;
mod quotient;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

pub use checks::{enumerate_triples, NontrivialityWitness, Triple};
pub use linalg::{linear_solve, BasisVector, Echelon};
pub use quotient::{IotaMatrix, QuotientSpace};

use crate::algebra::{GaloisField, RatFunc};
use crate::error::{Error, Result};
use crate::eval::ValueFamily;
use crate::indices::{Index, IndexAlgebra, IndexPoly, ProductKind};

pub const DEFAULT_CAP: usize = 10_000;

/// The two value families with their own product and relation generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Zeta,
    Li,
}

impl Family {
    pub fn kind(self) -> ProductKind {
        match self {
            Family::Zeta => ProductKind::QShuffle,
            Family::Li => ProductKind::Harmonic,
        }
    }

    pub fn value(self) -> ValueFamily {
        match self {
            Family::Zeta => ValueFamily::Zeta,
            Family::Li => ValueFamily::Li,
        }
    }

    pub fn dagger_value(self) -> ValueFamily {
        self.value().dagger()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Zeta => "zeta",
            Family::Li => "li",
        }
    }

    fn slot(self) -> usize {
        match self {
            Family::Zeta => 0,
            Family::Li => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(Family::Zeta),
            "li" => Ok(Family::Li),
            _ => Err(Error::Parse(format!("unknown family '{s}' (expected zeta or li)"))),
        }
    }
}

/// a = (s, {q}^{m−1}, n) with s ∈ I^T, m ≥ 1 and n ∈ I′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDecomposition {
    pub s: Index,
    pub m: u32,
    pub n: Index,
}

impl TDecomposition {
    pub fn reassemble(&self, q: u32) -> Index {
        self.s.concat(&Index::repeat(q, self.m as usize - 1)).concat(&self.n)
    }
}

/// Splits off the suffix starting at the first entry > q and the run of q's before it.
pub fn decompose_t(a: &Index, q: u32) -> TDecomposition {
    let e = a.entries();
    let cut = e.iter().position(|&x| x > q).unwrap_or(e.len());
    let mut start = cut;
    while start > 0 && e[start - 1] == q {
        start -= 1;
    }
    TDecomposition { s: a.prefix(start), m: (cut - start) as u32 + 1, n: a.suffix(cut + 1) }
}

type IndexCache = Mutex<HashMap<Index, Arc<IndexPoly>>>;

/// Symbolic engine: generators, rewriting, dagger expansion and quotient spaces.
pub struct Reducer {
    alg: Arc<IndexAlgebra>,
    cap: usize,
    reduced: [IndexCache; 2],
    daggers: [IndexCache; 2],
    quotients: Mutex<HashMap<u32, Arc<QuotientSpace>>>,
}

impl fmt::Debug for Reducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Reducer").field("q", &self.alg.q()).field("cap", &self.cap).finish()
    }
}

struct Walk {
    steps: usize,
    active: HashSet<Index>,
    trail: Vec<Index>,
}

impl Reducer {
    pub fn new(alg: Arc<IndexAlgebra>, cap: usize) -> Self {
        Self {
            alg,
            cap,
            reduced: Default::default(),
            daggers: Default::default(),
            quotients: Mutex::default(),
        }
    }

    pub fn algebra(&self) -> &IndexAlgebra {
        &self.alg
    }

    pub fn field(&self) -> &GaloisField {
        self.alg.field()
    }

    pub fn q(&self) -> u32 {
        self.alg.q()
    }

    /// The relation generator A^•(s; m; n).
    pub fn gen_a(&self, family: Family, s: &Index, m: u32, n: &Index) -> IndexPoly {
        assert!(m >= 1, "generators need m >= 1");
        let alg = &*self.alg;
        let k = alg.field();
        let q = alg.q();
        let kind = family.kind();
        let n_poly = IndexPoly::from_index(n.clone());
        let qm = Index::repeat(q, m as usize);
        let l1m = alg.l1().pow(m as u64, k);
        let alpha = alg.alpha(1, &Index::single(q - 1), kind, &n_poly, m);

        let mut out = IndexPoly::from_index(s.concat(&qm).concat(n));
        if let Some(t) = IndexAlgebra::boxplus_index(&qm, n) {
            out.add_term(s.concat(&t), &RatFunc::one(), k);
        }
        if family == Family::Zeta {
            let dq = alg.d_operator(&Index::single(q), &n_poly).expect("nonempty head");
            out.add_assign(&dq.prefixed(&s.concat(&Index::repeat(q, m as usize - 1))), k);
        }
        let neg_l1m = l1m.neg(k);
        out.add_scaled(&alpha.prefixed(s), &neg_l1m, k);
        if !s.is_empty() {
            out.add_scaled(&alg.boxplus(&IndexPoly::from_index(s.clone()), &alpha), &neg_l1m, k);
            if family == Family::Zeta {
                let head = Index::single(s.last().expect("nonempty"));
                let d = alg.d_operator(&head, &alpha).expect("nonempty head");
                out.add_scaled(&d.prefixed(&s.plus().expect("nonempty")), &neg_l1m, k);
            }
        }
        out
    }

    /// The kernel element subtracted from `a` by one rewriting step, or `None` for a ∈ I^T.
    pub fn step_generator(&self, family: Family, a: &Index) -> Option<IndexPoly> {
        let q = self.q();
        let dec = decompose_t(a, q);
        if let Some(n1) = dec.n.first() {
            let tail = dec.n.suffix(2).prepend(n1 - q);
            Some(self.gen_a(family, &dec.s, dec.m, &tail))
        } else if dec.m >= 2 {
            Some(self.gen_a(family, &dec.s, dec.m - 1, &Index::empty()))
        } else {
            None
        }
    }

    /// One rewriting step on a single index.
    pub fn u_step_index(&self, family: Family, a: &Index) -> Result<IndexPoly> {
        let k = self.field();
        let Some(gen) = self.step_generator(family, a) else {
            return Ok(IndexPoly::from_index(a.clone()));
        };
        let c = gen.coeff(a);
        if c.is_zero() {
            return Err(Error::InvalidInput(format!("rewriting generator for {a} does not contain it")));
        }
        let scale = c.inv(k)?.neg(k);
        let mut out = IndexPoly::from_index(a.clone());
        out.add_scaled(&gen, &scale, k);
        Ok(out)
    }

    /// U^• extended linearly.
    pub fn u_step(&self, family: Family, p: &IndexPoly) -> Result<IndexPoly> {
        let k = self.field();
        let mut out = IndexPoly::zero();
        for (a, c) in p.iter() {
            out.add_scaled(&self.u_step_index(family, a)?, c, k);
        }
        Ok(out)
    }

    /// Coordinates of the value of `p` in the Thakur basis.
    pub fn reduce(&self, family: Family, p: &IndexPoly) -> Result<IndexPoly> {
        let k = self.field();
        let mut walk = Walk { steps: 0, active: HashSet::new(), trail: Vec::new() };
        let mut out = IndexPoly::zero();
        for (a, c) in p.iter() {
            out.add_scaled(&*self.reduce_rec(family, a, &mut walk)?, c, k);
        }
        Ok(out)
    }

    pub fn reduce_index(&self, family: Family, a: &Index) -> Result<Arc<IndexPoly>> {
        let mut walk = Walk { steps: 0, active: HashSet::new(), trail: Vec::new() };
        self.reduce_rec(family, a, &mut walk)
    }

    fn reduce_rec(&self, family: Family, a: &Index, walk: &mut Walk) -> Result<Arc<IndexPoly>> {
        if a.in_thakur(self.q()) {
            return Ok(Arc::new(IndexPoly::from_index(a.clone())));
        }
        let cache = &self.reduced[family.slot()];
        if let Some(hit) = cache.lock().expect("cache lock").get(a) {
            return Ok(Arc::clone(hit));
        }
        walk.steps += 1;
        walk.trail.push(a.clone());
        if walk.steps > self.cap || !walk.active.insert(a.clone()) {
            return Err(Error::ReductionDiverged {
                steps: walk.steps,
                trail: walk.trail.iter().map(Index::to_string).collect(),
            });
        }
        let k = self.field();
        let image = self.u_step_index(family, a)?;
        let mut out = IndexPoly::zero();
        for (t, c) in image.iter() {
            out.add_scaled(&*self.reduce_rec(family, t, walk)?, c, k);
        }
        walk.active.remove(a);
        walk.trail.pop();
        let out = Arc::new(out);
        cache.lock().expect("cache lock").insert(a.clone(), Arc::clone(&out));
        Ok(out)
    }

    /// D(s) with value^•(D(s)) = value^{•†}(s).
    pub fn dagger_expand(&self, family: Family, s: &Index) -> Arc<IndexPoly> {
        if s.is_empty() {
            return Arc::new(IndexPoly::unit());
        }
        let cache = &self.daggers[family.slot()];
        if let Some(hit) = cache.lock().expect("cache lock").get(s) {
            return Arc::clone(hit);
        }
        let k = self.field();
        let mut acc = IndexPoly::zero();
        for i in 1..=s.depth() {
            let tail = self.dagger_expand(family, &s.suffix(i + 1));
            acc.add_assign(&self.alg.product_with_index(&s.prefix(i), &tail, family.kind()), k);
        }
        let out = Arc::new(acc.neg(k));
        cache.lock().expect("cache lock").insert(s.clone(), Arc::clone(&out));
        out
    }

    /// Linear extension of the dagger expansion.
    pub fn dagger_linear(&self, family: Family, p: &IndexPoly) -> IndexPoly {
        let k = self.field();
        let mut out = IndexPoly::zero();
        for (a, c) in p.iter() {
            out.add_scaled(&self.dagger_expand(family, a), c, k);
        }
        out
    }

    /// The quotient of the weight-w part by the ideal generated by ζ_A(q−1).
    pub fn quotient_space(&self, w: u32) -> Result<Arc<QuotientSpace>> {
        if let Some(hit) = self.quotients.lock().expect("cache lock").get(&w) {
            return Ok(Arc::clone(hit));
        }
        let space = Arc::new(QuotientSpace::build(self, w)?);
        self.quotients.lock().expect("cache lock").insert(w, Arc::clone(&space));
        Ok(space)
    }

    /// Matrix of ι on the quotient coordinates at weight w.
    pub fn iota_matrix(&self, w: u32) -> Result<IotaMatrix> {
        IotaMatrix::build(self, &*self.quotient_space(w)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    fn reducer(q: u32) -> Reducer {
        let k = Arc::new(GaloisField::new(FieldSpec::from_order(q).unwrap()));
        Reducer::new(Arc::new(IndexAlgebra::new(k)), DEFAULT_CAP)
    }

    fn idx(s: &[u32]) -> Index {
        Index::from(s)
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_t(&idx(&[1, 2, 2, 5, 1]), 2);
        assert_eq!(d, TDecomposition { s: idx(&[1]), m: 3, n: idx(&[5, 1]) });
        assert_eq!(decompose_t(&idx(&[2]), 2), TDecomposition { s: Index::empty(), m: 2, n: Index::empty() });
        let a = idx(&[2, 1, 1]);
        assert_eq!(decompose_t(&a, 3), TDecomposition { s: a.clone(), m: 1, n: Index::empty() });
    }

    #[test]
    fn fundamental_generators() {
        for q in [2, 3, 4] {
            let r = reducer(q);
            let k = r.field();
            let l1 = r.algebra().l1();
            let expected = IndexPoly::from_index(Index::single(q))
                .sub(&IndexPoly::monomial(idx(&[1, q - 1]), l1), k);
            for fam in [Family::Li, Family::Zeta] {
                let g = r.gen_a(fam, &Index::empty(), 1, &Index::empty());
                assert_eq!(g, expected, "q={q} {fam}");
                assert_eq!(g.weight(), Some(q));
            }
        }
    }

    #[test]
    fn rewriting_examples() {
        let r = reducer(2);
        let k = r.field();
        let l1 = r.algebra().l1();
        assert_eq!(r.u_step_index(Family::Li, &idx(&[2])).unwrap(), IndexPoly::monomial(idx(&[1, 1]), l1.clone()));
        let three = r.u_step_index(Family::Li, &idx(&[3])).unwrap();
        let expected = IndexPoly::from_index(idx(&[2, 1])).add(&IndexPoly::monomial(idx(&[1, 2]), l1), k);
        assert_eq!(three, expected);
        assert_eq!(r.u_step_index(Family::Zeta, &idx(&[1])).unwrap(), IndexPoly::from_index(idx(&[1])));
    }

    #[test]
    fn dagger_examples() {
        let r = reducer(3);
        let k = r.field();
        for s in 1..5 {
            let d = r.dagger_expand(Family::Li, &Index::single(s));
            assert_eq!(*d, IndexPoly::from_index(Index::single(s)).neg(k));
        }
        let d = r.dagger_expand(Family::Li, &idx(&[3, 3]));
        let expected = IndexPoly::from_index(idx(&[3, 3])).add(&IndexPoly::from_index(idx(&[6])), k);
        assert_eq!(*d, expected);
        let d = r.dagger_expand(Family::Li, &idx(&[1, 2]));
        let expected = IndexPoly::from_index(idx(&[2, 1])).add(&IndexPoly::from_index(idx(&[3])), k);
        assert_eq!(*d, expected);
    }

    #[test]
    fn reduce_fixes_thakur_indices() {
        let r = reducer(3);
        for a in Index::thakur_basis(3, 5) {
            assert_eq!(*r.reduce_index(Family::Zeta, &a).unwrap(), IndexPoly::from_index(a));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let k = Arc::new(GaloisField::new(FieldSpec::from_order(2).unwrap()));
        let r = Reducer::new(Arc::new(IndexAlgebra::new(k)), 1);
        let err = r.reduce_index(Family::Li, &idx(&[6])).unwrap_err();
        assert!(matches!(err, Error::ReductionDiverged { .. }));
    }
}
