//! Weight-graded quotient by the ideal generated by ζ_A(q−1), in Thakur-basis coordinates.

use super::linalg::{BasisVector, Echelon};
use super::{Family, Reducer};
use crate::algebra::{GaloisField, RatFunc};
use crate::error::{Error, Result};
use crate::indices::{Index, IndexPoly};

/// Z_w modulo the ideal, with the non-pivot Thakur indices as quotient basis.
#[derive(Debug)]
pub struct QuotientSpace {
    weight: u32,
    basis: Vec<Index>,
    generators: Vec<IndexPoly>,
    echelon: Echelon,
    free: Vec<usize>,
}

impl QuotientSpace {
    pub(super) fn build(r: &Reducer, w: u32) -> Result<Self> {
        let q = r.q();
        let k = r.field();
        let mut basis = Index::thakur_basis(q, w);
        basis.sort();
        let mut generators = Vec::new();
        if w >= q - 1 {
            let head = Index::single(q - 1);
            for b in Index::thakur_basis(q, w - (q - 1)) {
                let prod = r.algebra().product_with_index(&head, &IndexPoly::from_index(b), Family::Li.kind());
                generators.push(r.reduce(Family::Li, &prod)?);
            }
        }
        let rows: Vec<Vec<RatFunc>> = generators
            .iter()
            .map(|g| {
                BasisVector::from_poly(g, &basis, w)
                    .map(|v| v.coords)
                    .ok_or_else(|| Error::InvalidInput("ideal generator left the Thakur basis".into()))
            })
            .collect::<Result<_>>()?;
        let echelon = Echelon::new(&rows, basis.len(), k);
        let free = echelon.non_pivots();
        Ok(Self { weight: w, basis, generators, echelon, free })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// I^T_w in sorted order; these are the ambient coordinates.
    pub fn basis(&self) -> &[Index] {
        &self.basis
    }

    /// Reduced ideal generators Li(q−1) * Li(b), b ∈ I^T_{w−q+1}.
    pub fn generators(&self) -> &[IndexPoly] {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Indices whose classes form the quotient basis.
    pub fn quotient_basis(&self) -> Vec<Index> {
        self.free.iter().map(|&i| self.basis[i].clone()).collect()
    }

    pub fn vector(&self, v: &IndexPoly) -> Result<BasisVector> {
        BasisVector::from_poly(v, &self.basis, self.weight).ok_or_else(|| {
            Error::InvalidInput(format!("element is not supported on I^T of weight {}", self.weight))
        })
    }

    /// Coordinates of the class of `v` (already in Thakur coordinates).
    pub fn coords(&self, v: &IndexPoly, k: &GaloisField) -> Result<Vec<RatFunc>> {
        let (rem, _) = self.echelon.reduce(&self.vector(v)?.coords, k);
        Ok(self.free.iter().map(|&i| rem[i].clone()).collect())
    }

    pub fn in_ideal(&self, v: &IndexPoly, k: &GaloisField) -> Result<bool> {
        Ok(self.echelon.contains(&self.vector(v)?.coords, k))
    }

    /// Coefficients over the generators expressing `v`, when `v` lies in the ideal.
    pub fn ideal_witness(&self, v: &IndexPoly, k: &GaloisField) -> Result<Option<Vec<RatFunc>>> {
        let (rem, used) = self.echelon.reduce(&self.vector(v)?.coords, k);
        Ok(rem.iter().all(RatFunc::is_zero).then_some(used))
    }

    /// Rank of the span of the classes of the given elements.
    pub fn class_rank(&self, vs: &[IndexPoly], k: &GaloisField) -> Result<usize> {
        let rows = vs.iter().map(|v| self.coords(v, k)).collect::<Result<Vec<_>>>()?;
        Ok(Echelon::new(&rows, self.dim(), k).rank())
    }
}

/// Matrix of ι: class of Li(a) ↦ class of Li†(a), in quotient coordinates.
#[derive(Clone, Debug)]
pub struct IotaMatrix {
    pub weight: u32,
    pub basis: Vec<Index>,
    /// `entries[i][j]`: coordinate i of the image of basis element j.
    pub entries: Vec<Vec<RatFunc>>,
}

impl IotaMatrix {
    pub(super) fn build(r: &Reducer, space: &QuotientSpace) -> Result<Self> {
        let k = r.field();
        let basis = space.quotient_basis();
        let n = basis.len();
        let mut entries = vec![vec![RatFunc::zero(); n]; n];
        for (j, a) in basis.iter().enumerate() {
            let image = r.reduce(Family::Li, &r.dagger_expand(Family::Li, a))?;
            for (i, c) in space.coords(&image, k)?.into_iter().enumerate() {
                entries[i][j] = c;
            }
        }
        Ok(Self { weight: space.weight(), basis, entries })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn apply(&self, x: &[RatFunc], k: &GaloisField) -> Vec<RatFunc> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).fold(RatFunc::zero(), |acc, (a, b)| acc.add(&a.mul(b, k), k)))
            .collect()
    }

    pub fn square(&self, k: &GaloisField) -> IotaMatrix {
        let n = self.dim();
        let mut entries = vec![vec![RatFunc::zero(); n]; n];
        for j in 0..n {
            let col: Vec<RatFunc> = (0..n).map(|i| self.entries[i][j].clone()).collect();
            for (i, v) in self.apply(&col, k).into_iter().enumerate() {
                entries[i][j] = v;
            }
        }
        IotaMatrix { weight: self.weight, basis: self.basis.clone(), entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    pub fn format(&self, k: &GaloisField) -> String {
        let labels: Vec<String> = self.basis.iter().map(Index::to_string).collect();
        let mut out = format!("basis: {}\n", labels.join(" "));
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.format(k)).collect();
            out.push_str(&format!("[ {} ]\n", cells.join(", ")));
        }
        out
    }
}
