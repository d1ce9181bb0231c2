use std::collections::BTreeMap;

use super::index::Index;
use crate::algebra::{FieldElem, GaloisField, RatFunc};

/// A finite F_q(θ)-linear combination of indices, kept without zero terms
/// and iterated in lexicographic index order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexPoly {
    terms: BTreeMap<Index, RatFunc>,
}

impl IndexPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit ∅.
    pub fn unit() -> Self {
        Self::from_index(Index::empty())
    }

    pub fn from_index(s: Index) -> Self {
        Self::monomial(s, RatFunc::one())
    }

    pub fn monomial(s: Index, c: RatFunc) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(s, c);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Index, RatFunc)>, k: &GaloisField) -> Self {
        let mut p = Self::zero();
        for (s, c) in terms {
            p.add_term(s, &c, k);
        }
        p
    }

    pub fn add_term(&mut self, s: Index, c: &RatFunc, k: &GaloisField) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(old) => {
                let sum = old.add(c, k);
                if sum.is_zero() {
                    self.terms.remove(&s);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(s, c.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &Index) -> RatFunc {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Index> {
        self.terms.keys()
    }

    /// Common weight of all terms; `None` if empty or inhomogeneous.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Index::weight);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }

    pub fn add(&self, other: &IndexPoly, k: &GaloisField) -> IndexPoly {
        let mut out = self.clone();
        out.add_assign(other, k);
        out
    }

    pub fn add_assign(&mut self, other: &IndexPoly, k: &GaloisField) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c, k);
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &IndexPoly, c: &RatFunc, k: &GaloisField) {
        if c.is_zero() {
            return;
        }
        for (s, a) in &other.terms {
            self.add_term(s.clone(), &a.mul(c, k), k);
        }
    }

    pub fn neg(&self, k: &GaloisField) -> IndexPoly {
        Self { terms: self.terms.iter().map(|(s, c)| (s.clone(), c.neg(k))).collect() }
    }

    pub fn sub(&self, other: &IndexPoly, k: &GaloisField) -> IndexPoly {
        self.add(&other.neg(k), k)
    }

    pub fn scale(&self, c: &RatFunc, k: &GaloisField) -> IndexPoly {
        let mut out = Self::zero();
        out.add_scaled(self, c, k);
        out
    }

    pub fn scale_elem(&self, c: FieldElem, k: &GaloisField) -> IndexPoly {
        self.scale(&RatFunc::constant(c), k)
    }

    /// Linear extension of an index map.
    pub fn map_indices(&self, f: impl Fn(&Index) -> Index, k: &GaloisField) -> IndexPoly {
        Self::from_terms(self.terms.iter().map(|(s, c)| (f(s), c.clone())), k)
    }

    /// (a, P)
    pub fn prefixed(&self, a: &Index) -> IndexPoly {
        // concatenation with a fixed prefix is injective, so no terms merge
        Self { terms: self.terms.iter().map(|(s, c)| (a.concat(s), c.clone())).collect() }
    }

    /// (P, a)
    pub fn suffixed(&self, a: &Index) -> IndexPoly {
        Self { terms: self.terms.iter().map(|(s, c)| (s.concat(a), c.clone())).collect() }
    }

    /// Human-readable form such as `(2) + (T^2+T)*(1,1)`; `0` when empty.
    pub fn format(&self, k: &GaloisField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(s, c)| {
                if c.is_one() {
                    s.to_string()
                } else if c.is_compound(k) {
                    format!("({})*{s}", c.format(k))
                } else {
                    format!("{}*{s}", c.format(k))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    #[test]
    fn cancellation_and_weight() {
        let k = GaloisField::new(FieldSpec::from_order(3).unwrap());
        let a = IndexPoly::from_index(Index::from([2, 1]));
        let b = IndexPoly::monomial(Index::from([3]), RatFunc::constant(k.from_int(2)));
        let p = a.add(&b, &k);
        assert_eq!(p.weight(), Some(3));
        assert!(p.sub(&p, &k).is_zero());
        assert_eq!(p.format(&k), "(2,1) + 2*(3)");
        let inhom = p.add(&IndexPoly::unit(), &k);
        assert!(!inhom.is_homogeneous());
    }
}
