//! Symbolic verification of the ideal-membership statements, one report per check.

use std::fmt;

use super::{Family, Reducer};
use crate::algebra::{GaloisField, RatFunc};
use crate::error::Result;
use crate::indices::{Index, IndexAlgebra, IndexPoly, ProductKind};
use crate::report::{Report, Status};

/// Generator parameters (s, m, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub s: Index,
    pub m: u32,
    pub n: Index,
}

impl Triple {
    pub fn weight(&self, q: u32) -> u32 {
        self.s.weight() + self.m * q + self.n.weight()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} m={} n={}", self.s, self.m, self.n)
    }
}

/// All (s, m, n) of weight exactly w, ordered by (wt(s), s, m, n).
pub fn enumerate_triples(q: u32, w: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for ws in 0..=w {
        let mut ss = Index::compositions(ws);
        ss.sort();
        for s in ss {
            let mut m = 1;
            while ws + m * q <= w {
                let mut ns = Index::compositions(w - ws - m * q);
                ns.sort();
                out.extend(ns.into_iter().map(|n| Triple { s: s.clone(), m, n }));
                m += 1;
            }
        }
    }
    out
}

/// The non-vanishing statements showing ι is not the identity.
#[derive(Clone, Debug)]
pub struct NontrivialityWitness {
    pub weight: u32,
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

fn fmt_coords(v: &[RatFunc], k: &GaloisField) -> String {
    let cells: Vec<String> = v.iter().map(|c| c.format(k)).collect();
    format!("[{}]", cells.join(", "))
}

fn sub_vec(a: &[RatFunc], b: &[RatFunc], k: &GaloisField) -> Vec<RatFunc> {
    a.iter().zip(b).map(|(x, y)| x.sub(y, k)).collect()
}

impl Reducer {
    /// gen_A reduces to zero for every triple of weight w.
    pub fn check_kernel(&self, family: Family, w: u32) -> Report {
        let k = self.field();
        let mut rep = Report::new("kernel").param("family", family.name()).param("q", self.q()).param("weight", w);
        for t in enumerate_triples(self.q(), w) {
            let gen = self.gen_a(family, &t.s, t.m, &t.n);
            match self.reduce(family, &gen) {
                Ok(r) if r.is_zero() => rep.push(t.to_string(), Status::Pass, "reduces to 0"),
                Ok(r) => rep.push(t.to_string(), Status::Fail, format!("residue {}", r.format(k))),
                Err(e) => rep.push(t.to_string(), Status::Fail, e.to_string()),
            }
        }
        rep.finish()
    }

    /// Dagger images of the Li generators lie in the ideal, and ι² = 1, at weight w.
    pub fn check_theorem(&self, w: u32) -> Result<Report> {
        let k = self.field();
        let space = self.quotient_space(w)?;
        let mut rep = Report::new("theorem")
            .param("q", self.q())
            .param("weight", w)
            .param("quotient_dim", space.dim());
        for t in enumerate_triples(self.q(), w) {
            let gen = self.gen_a(Family::Li, &t.s, t.m, &t.n);
            let v = self.reduce(Family::Li, &self.dagger_linear(Family::Li, &gen))?;
            let ok = space.in_ideal(&v, k)?;
            let detail = if ok {
                "dagger image in ideal".to_string()
            } else {
                format!("class {}", fmt_coords(&space.coords(&v, k)?, k))
            };
            rep.check(t.to_string(), ok, detail);
        }
        let iota = self.iota_matrix(w)?;
        rep.check("iota^2", iota.square(k).is_identity(), format!("{}x{} matrix", iota.dim(), iota.dim()));
        for a in space.basis() {
            let lhs = iota.apply(&space.coords(&IndexPoly::from_index(a.clone()), k)?, k);
            let rhs = space.coords(&self.reduce(Family::Li, &self.dagger_expand(Family::Li, a))?, k)?;
            let ok = lhs == rhs;
            let detail = if ok { "consistent".into() } else { format!("difference {}", fmt_coords(&sub_vec(&lhs, &rhs, k), k)) };
            rep.check(format!("iota{a}"), ok, detail);
        }
        Ok(rep.finish())
    }

    fn alpha_chain(&self, cs: &[u32], p: &IndexPoly) -> IndexPoly {
        let head = Index::single(self.q() - 1);
        cs.iter()
            .rev()
            .fold(p.clone(), |acc, &c| self.algebra().alpha(c, &head, ProductKind::Harmonic, &acc, 1))
    }

    /// Li(X)·Li†(Y) as a single element, via Li†(Y) = Li(D(Y)) and the harmonic product.
    fn li_times_dagger(&self, x: &IndexPoly, y: &IndexPoly) -> IndexPoly {
        self.algebra().product(x, &self.dagger_linear(Family::Li, y), ProductKind::Harmonic)
    }

    /// The congruence expanding Li†(s, α_{c_1}∘⋯∘α_{c_m}(n)).
    pub fn check_keylemma(&self, s: &Index, n: &Index, cs: &[u32]) -> Result<Report> {
        let k = self.field();
        let q = self.q();
        let m = cs.len();
        let w = s.weight() + n.weight() + cs.iter().sum::<u32>() + m as u32 * (q - 1);
        let cs_txt: Vec<String> = cs.iter().map(u32::to_string).collect();
        let mut rep = Report::new("keylemma")
            .param("q", q)
            .param("s", s.to_string())
            .param("n", n.to_string())
            .param("cs", format!("[{}]", cs_txt.join(",")));
        let input = format!("s={s} n={n} cs=[{}]", cs_txt.join(","));
        if s.depth() + n.depth() + m == 0 {
            rep.push(input, Status::Fail, "needs depth(s)+depth(n)+len(cs) >= 1");
            return Ok(rep.finish());
        }
        let n_poly = IndexPoly::from_index(n.clone());
        let full = self.alpha_chain(cs, &n_poly);
        let mut diff = self.dagger_linear(Family::Li, &full.prefixed(s));
        for i in 1..=s.depth() {
            let x = IndexPoly::from_index(s.prefix(i));
            diff.add_assign(&self.li_times_dagger(&x, &full.prefixed(&s.suffix(i + 1))), k);
        }
        for i in 1..=m {
            let x = self.alpha_chain(&cs[..i], &IndexPoly::unit()).prefixed(s);
            let y = self.alpha_chain(&cs[i..], &n_poly);
            diff.add_assign(&self.li_times_dagger(&x, &y), k);
        }
        for i in 1..=n.depth() {
            let x = self.alpha_chain(cs, &IndexPoly::from_index(n.prefix(i))).prefixed(s);
            let y = IndexPoly::from_index(n.suffix(i + 1));
            diff.add_assign(&self.li_times_dagger(&x, &y), k);
        }
        let v = self.reduce(Family::Li, &diff)?;
        if m == 0 {
            rep.check(input, v.is_zero(), if v.is_zero() { "exact zero".into() } else { format!("residue {}", v.format(k)) });
        } else {
            let space = self.quotient_space(w)?;
            let ok = space.in_ideal(&v, k)?;
            let detail = if ok { "in ideal".into() } else { format!("class {}", fmt_coords(&space.coords(&v, k)?, k)) };
            rep.check(input, ok, detail);
        }
        Ok(rep.finish())
    }

    /// ζ†(s)ζ†(n) against ζ†((s) *ζ (n)), exactly and modulo the ideal.
    pub fn check_prop41(&self, s: u32, n: u32) -> Result<Report> {
        let k = self.field();
        let alg: &IndexAlgebra = self.algebra();
        let z = Family::Zeta;
        let (si, ni) = (Index::single(s), Index::single(n));
        let mut rep = Report::new("prop41").param("q", self.q()).param("s", s).param("n", n);

        let lhs = alg.product(&self.dagger_expand(z, &si), &self.dagger_expand(z, &ni), ProductKind::QShuffle);
        let prod = IndexPoly::from_terms(
            alg.product_indices(&si, &ni, ProductKind::QShuffle)
                .iter()
                .map(|(t, e)| (t.clone(), RatFunc::constant(*e))),
            k,
        );
        let plain = lhs.sub(&self.dagger_linear(z, &prod), k);
        let mut exact = plain.clone();
        for j in 1..s + n {
            let d = alg.delta(s, n, j);
            if d.is_zero() {
                continue;
            }
            let term = alg.product_with_index(
                &Index::single(s + n - j),
                &self.dagger_expand(z, &Index::single(j)),
                ProductKind::QShuffle,
            );
            exact.add_scaled(&term, &RatFunc::constant(k.neg(d)), k);
        }
        let v = self.reduce(z, &exact)?;
        let detail = if v.is_zero() { "exact zero".into() } else { format!("residue {}", v.format(k)) };
        rep.check(format!("({s}),({n}) exact"), v.is_zero(), detail);

        let space = self.quotient_space(s + n)?;
        let u = self.reduce(z, &plain)?;
        let ok = space.in_ideal(&u, k)?;
        let detail = if ok { "in ideal".into() } else { format!("class {}", fmt_coords(&space.coords(&u, k)?, k)) };
        rep.check(format!("({s}),({n}) congruence"), ok, detail);
        Ok(rep.finish())
    }

    pub fn prop42_hypotheses(&self, s: &Index, n: &Index) -> bool {
        s.last().map_or(true, |x| x < self.q()) && n.depth() <= 1
    }

    /// ζ†(A^ζ(s; 1; n)) modulo the ideal; inputs outside the hypotheses become observations.
    pub fn check_prop42(&self, s: &Index, n: &Index) -> Result<Report> {
        let k = self.field();
        let z = Family::Zeta;
        let mut rep = Report::new("prop42").param("q", self.q()).param("s", s.to_string()).param("n", n.to_string());
        let gen = self.gen_a(z, s, 1, n);
        let w = s.weight() + self.q() + n.weight();
        let v = self.reduce(z, &self.dagger_linear(z, &gen))?;
        let space = self.quotient_space(w)?;
        let ok = space.in_ideal(&v, k)?;
        let detail = if ok { "in ideal".into() } else { format!("class {}", fmt_coords(&space.coords(&v, k)?, k)) };
        let input = format!("s={s} n={n}");
        if self.prop42_hypotheses(s, n) {
            rep.check(input, ok, detail);
        } else {
            rep.push(input, Status::Observation, format!("beyond proven hypotheses; {detail}"));
        }
        Ok(rep.finish())
    }

    /// Compares ι(class ζ(s)) with class ζ†(s). Always an observation.
    pub fn check_conjecture(&self, s: &Index) -> Result<Report> {
        let k = self.field();
        let z = Family::Zeta;
        let w = s.weight();
        let mut rep = Report::new("conjecture").param("q", self.q()).param("index", s.to_string());
        let space = self.quotient_space(w)?;
        let iota = self.iota_matrix(w)?;
        let lhs = iota.apply(&space.coords(&*self.reduce_index(z, s)?, k)?, k);
        let rhs = space.coords(&self.reduce(z, &self.dagger_expand(z, s))?, k)?;
        let detail = if lhs == rhs {
            "classes equal".to_string()
        } else {
            format!("classes differ by {}", fmt_coords(&sub_vec(&lhs, &rhs, k), k))
        };
        rep.push(s.to_string(), Status::Observation, detail);
        Ok(rep.finish())
    }

    /// Whether the two classes agree; used by callers that need the bare answer.
    pub fn conjecture_holds(&self, s: &Index) -> Result<bool> {
        let k = self.field();
        let z = Family::Zeta;
        let w = s.weight();
        let space = self.quotient_space(w)?;
        let iota = self.iota_matrix(w)?;
        let lhs = iota.apply(&space.coords(&*self.reduce_index(z, s)?, k)?, k);
        let rhs = space.coords(&self.reduce(z, &self.dagger_expand(z, s))?, k)?;
        Ok(lhs == rhs)
    }

    /// The non-vanishing statements applicable at this q.
    pub fn nontriviality_witnesses(&self) -> Result<Vec<NontrivialityWitness>> {
        let k = self.field();
        let q = self.q();
        let li = Family::Li;
        let mut out = Vec::new();
        let class_of = |p: &IndexPoly, w: u32| -> Result<Vec<RatFunc>> {
            self.quotient_space(w)?.coords(&self.reduce(li, p)?, k)
        };
        let nonzero = |v: &[RatFunc]| v.iter().any(|c| !c.is_zero());

        if k.p() != 2 {
            let one = Index::single(1);
            let d = (*self.dagger_expand(li, &one)).sub(&IndexPoly::from_index(one), k);
            let c = class_of(&d, 1)?;
            out.push(NontrivialityWitness {
                weight: 1,
                label: "class(D(1) - (1)) != 0".into(),
                holds: nonzero(&c),
                detail: fmt_coords(&c, k),
            });
        }
        if q >= 4 {
            let two = IndexPoly::from_index(Index::single(2));
            let c = class_of(&two, 2)?;
            out.push(NontrivialityWitness {
                weight: 2,
                label: "class((2)) != 0".into(),
                holds: nonzero(&c),
                detail: fmt_coords(&c, k),
            });
            let a = Index::from([1, 1]);
            let d = (*self.dagger_expand(li, &a)).sub(&IndexPoly::from_index(a), k);
            let cd = class_of(&d, 2)?;
            out.push(NontrivialityWitness {
                weight: 2,
                label: "class(D(1,1) - (1,1)) = class((2))".into(),
                holds: cd == c,
                detail: fmt_coords(&cd, k),
            });
        }
        if q == 2 {
            let space = self.quotient_space(6)?;
            out.push(NontrivialityWitness {
                weight: 6,
                label: "dim quotient = 3".into(),
                holds: space.dim() == 3,
                detail: format!("dim {}", space.dim()),
            });
            let six = IndexPoly::from_index(Index::single(6));
            let c6 = class_of(&six, 6)?;
            out.push(NontrivialityWitness {
                weight: 6,
                label: "class((6)) != 0".into(),
                holds: nonzero(&c6),
                detail: fmt_coords(&c6, k),
            });
            let a = Index::from([3, 3]);
            let d = (*self.dagger_expand(li, &a)).sub(&IndexPoly::from_index(a), k);
            let cd = class_of(&d, 6)?;
            out.push(NontrivialityWitness {
                weight: 6,
                label: "class(D(3,3) - (3,3)) = class((6))".into(),
                holds: cd == c6,
                detail: fmt_coords(&cd, k),
            });
            let reps: Vec<IndexPoly> = [&[6u32][..], &[5, 1], &[3, 3]]
                .iter()
                .map(|e| self.reduce(li, &IndexPoly::from_index(Index::from(*e))))
                .collect::<Result<_>>()?;
            let rank = space.class_rank(&reps, k)?;
            out.push(NontrivialityWitness {
                weight: 6,
                label: "classes of Li(6), Li(5,1), Li(3,3) independent".into(),
                holds: rank == 3,
                detail: format!("rank {rank}"),
            });
        }
        Ok(out)
    }

    pub fn check_nontrivial(&self) -> Result<Report> {
        let mut rep = Report::new("nontrivial").param("q", self.q());
        for wit in self.nontriviality_witnesses()? {
            rep.check(format!("w={} {}", wit.weight, wit.label), wit.holds, wit.detail);
        }
        Ok(rep.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_counts() {
        let t = enumerate_triples(2, 2);
        assert_eq!(t, vec![Triple { s: Index::empty(), m: 1, n: Index::empty() }]);
        assert!(enumerate_triples(3, 2).is_empty());
        for tr in enumerate_triples(2, 5) {
            assert_eq!(tr.weight(2), 5);
        }
    }
}
