use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::index::Index;
use super::ipoly::IndexPoly;
use crate::algebra::{lucas_binom, FieldElem, GaloisField, Poly, RatFunc};
use crate::error::{Error, Result};

/// Which product structure on h¹ is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// The harmonic product `*`, matching Li values.
    Harmonic,
    /// The q-shuffle product `*ζ`, matching zeta values.
    QShuffle,
}

/// F_p-combination of indices; every product of two indices is one of these.
pub type Terms = Vec<(Index, FieldElem)>;

type Cache = Mutex<HashMap<(Index, Index), Arc<Terms>>>;

/// The algebra h¹ over F_q(θ) with its two products, Δ, D, α and ⊞.
///
/// Products of basis indices have coefficients in F_p and are memoized.
pub struct IndexAlgebra {
    k: Arc<GaloisField>,
    q: u32,
    harmonic: Cache,
    qshuffle: Cache,
}

impl std::fmt::Debug for IndexAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IndexAlgebra").field("q", &self.q).finish()
    }
}

fn accumulate(acc: &mut BTreeMap<Index, FieldElem>, s: Index, c: FieldElem, k: &GaloisField) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(s).or_insert(FieldElem::ZERO);
    *e = k.add(*e, c);
}

fn collect(acc: BTreeMap<Index, FieldElem>) -> Terms {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl IndexAlgebra {
    pub fn new(k: Arc<GaloisField>) -> Self {
        let q = k.q();
        Self { k, q, harmonic: Mutex::default(), qshuffle: Mutex::default() }
    }

    pub fn field(&self) -> &GaloisField {
        &self.k
    }

    pub fn field_arc(&self) -> Arc<GaloisField> {
        Arc::clone(&self.k)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.k.p()
    }

    /// L_1 = θ − θ^q
    pub fn l1(&self) -> RatFunc {
        let k = &*self.k;
        RatFunc::from_poly(Poly::theta().sub(&Poly::monomial(FieldElem::ONE, self.q as usize), k))
    }

    /// Δ_{s,n}^{[j]} reduced into the prime field.
    pub fn delta(&self, s: u32, n: u32, j: u32) -> FieldElem {
        if j == 0 || j >= s + n || j % (self.q - 1) != 0 {
            return FieldElem::ZERO;
        }
        let k = &*self.k;
        let p = self.p();
        let sign = |e: u32| if e % 2 == 0 { FieldElem::ONE } else { k.neg(FieldElem::ONE) };
        let a = k.mul(sign(s - 1), k.from_int(lucas_binom((j - 1) as u64, (s - 1) as u64, p) as i64));
        let b = k.mul(sign(n - 1), k.from_int(lucas_binom((j - 1) as u64, (n - 1) as u64, p) as i64));
        k.add(a, b)
    }

    /// Product of two indices as an F_p-combination.
    pub fn product_indices(&self, s: &Index, n: &Index, kind: ProductKind) -> Arc<Terms> {
        if s.is_empty() {
            return Arc::new(vec![(n.clone(), FieldElem::ONE)]);
        }
        if n.is_empty() {
            return Arc::new(vec![(s.clone(), FieldElem::ONE)]);
        }
        let cache = match kind {
            ProductKind::Harmonic => &self.harmonic,
            ProductKind::QShuffle => &self.qshuffle,
        };
        let key = (s.clone(), n.clone());
        if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let k = &*self.k;
        let (s1, sm) = (s.entries()[0], s.suffix(2));
        let (n1, nm) = (n.entries()[0], n.suffix(2));
        let mut acc = BTreeMap::new();
        for (t, c) in self.product_indices(&sm, n, kind).iter() {
            accumulate(&mut acc, t.prepend(s1), *c, k);
        }
        for (t, c) in self.product_indices(s, &nm, kind).iter() {
            accumulate(&mut acc, t.prepend(n1), *c, k);
        }
        let tail = self.product_indices(&sm, &nm, kind);
        for (t, c) in tail.iter() {
            accumulate(&mut acc, t.prepend(s1 + n1), *c, k);
        }
        if kind == ProductKind::QShuffle {
            for (t, c) in self.d_terms(s1, n1, &tail) {
                accumulate(&mut acc, t, c, k);
            }
        }
        let out = Arc::new(collect(acc));
        cache.lock().expect("cache lock").insert(key, Arc::clone(&out));
        out
    }

    /// Σ_j Δ_{s1,n1}^{[j]} (s1+n1−j, (j) *ζ X) for X = s₋ *ζ n₋ given as `tail`.
    fn d_terms(&self, s1: u32, n1: u32, tail: &Terms) -> Terms {
        let k = &*self.k;
        let mut acc = BTreeMap::new();
        let step = self.q - 1;
        let mut j = step;
        while j < s1 + n1 {
            let d = self.delta(s1, n1, j);
            if !d.is_zero() {
                let head = Index::single(j);
                for (x, c) in tail {
                    let cx = k.mul(*c, d);
                    for (t, e) in self.product_indices(&head, x, ProductKind::QShuffle).iter() {
                        accumulate(&mut acc, t.prepend(s1 + n1 - j), k.mul(cx, *e), k);
                    }
                }
            }
            j += step;
        }
        collect(acc)
    }

    /// D_head(n) for a single index n; zero when n = ∅.
    pub fn d_index(&self, head: &Index, n: &Index) -> Result<Terms> {
        let s1 = head.first().ok_or(Error::EmptyIndex("D-operator head"))?;
        let Some(n1) = n.first() else {
            return Ok(Vec::new());
        };
        let tail = self.product_indices(&head.suffix(2), &n.suffix(2), ProductKind::QShuffle);
        Ok(self.d_terms(s1, n1, &tail))
    }

    /// Linear extension of D_head.
    pub fn d_operator(&self, head: &Index, p: &IndexPoly) -> Result<IndexPoly> {
        let k = &*self.k;
        let mut out = IndexPoly::zero();
        for (n, c) in p.iter() {
            for (t, e) in self.d_index(head, n)? {
                out.add_term(t, &c.scale(e, k), k);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the index product.
    pub fn product(&self, a: &IndexPoly, b: &IndexPoly, kind: ProductKind) -> IndexPoly {
        let k = &*self.k;
        let mut acc: BTreeMap<Index, RatFunc> = BTreeMap::new();
        for (s, cs) in a.iter() {
            for (n, cn) in b.iter() {
                let c = cs.mul(cn, k);
                for (t, e) in self.product_indices(s, n, kind).iter() {
                    let term = c.scale(*e, k);
                    let slot = acc.entry(t.clone()).or_default();
                    *slot = slot.add(&term, k);
                }
            }
        }
        IndexPoly::from_terms(acc, k)
    }

    /// s *• P for a single index s.
    pub fn product_with_index(&self, s: &Index, p: &IndexPoly, kind: ProductKind) -> IndexPoly {
        self.product(&IndexPoly::from_index(s.clone()), p, kind)
    }

    /// α_{c;s}^ℓ(P), where α_{c;s}(P) = (c, s *• P).
    pub fn alpha(&self, c: u32, s: &Index, kind: ProductKind, p: &IndexPoly, ell: u32) -> IndexPoly {
        let head = Index::single(c);
        let mut cur = p.clone();
        for _ in 0..ell {
            cur = self.product_with_index(s, &cur, kind).prefixed(&head);
        }
        cur
    }

    /// s ⊞ n = (s₊, s_r + n_1, n₋), and zero if either side is ∅.
    pub fn boxplus_index(s: &Index, n: &Index) -> Option<Index> {
        let (sr, n1) = (s.last()?, n.first()?);
        let mut v = s.entries()[..s.depth() - 1].to_vec();
        v.push(sr + n1);
        v.extend_from_slice(&n.entries()[1..]);
        Some(Index::new(v).expect("positive entries"))
    }

    pub fn boxplus(&self, a: &IndexPoly, b: &IndexPoly) -> IndexPoly {
        let k = &*self.k;
        let mut out = IndexPoly::zero();
        for (s, cs) in a.iter() {
            for (n, cn) in b.iter() {
                if let Some(t) = Self::boxplus_index(s, n) {
                    out.add_term(t, &cs.mul(cn, k), k);
                }
            }
        }
        out
    }

    /// Number of memoized index products (both kinds).
    pub fn cache_size(&self) -> usize {
        self.harmonic.lock().map(|c| c.len()).unwrap_or(0) + self.qshuffle.lock().map(|c| c.len()).unwrap_or(0)
    }
}
