//! Exact Gaussian elimination over rational functions.

use crate::algebra::{GaloisField, RatFunc};
use crate::indices::{Index, IndexPoly};

/// Dense coordinates of a homogeneous element against a fixed index list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub weight: u32,
    pub coords: Vec<RatFunc>,
}

impl BasisVector {
    /// `None` when `p` has support outside `basis`.
    pub fn from_poly(p: &IndexPoly, basis: &[Index], weight: u32) -> Option<Self> {
        let mut coords = vec![RatFunc::zero(); basis.len()];
        for (s, c) in p.iter() {
            let i = basis.binary_search(s).ok()?;
            coords[i] = c.clone();
        }
        Some(Self { weight, coords })
    }

    pub fn to_poly(&self, basis: &[Index], k: &GaloisField) -> IndexPoly {
        IndexPoly::from_terms(basis.iter().cloned().zip(self.coords.iter().cloned()), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }
}

/// Reduced row echelon form, with each row remembering how it was built from the input rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<RatFunc>>,
    combos: Vec<Vec<RatFunc>>,
    pivots: Vec<usize>,
}

fn axpy(dst: &mut [RatFunc], c: &RatFunc, src: &[RatFunc], k: &GaloisField) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.sub(&c.mul(s, k), k);
        }
    }
}

impl Echelon {
    /// Columns are scanned left to right; among candidate pivots the one of least height wins.
    pub fn new(input: &[Vec<RatFunc>], ncols: usize, k: &GaloisField) -> Self {
        let n = input.len();
        let mut rows: Vec<Vec<RatFunc>> = input.to_vec();
        let mut combos: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| {
                let mut e = vec![RatFunc::zero(); n];
                e[i] = RatFunc::one();
                e
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            let best = (top..n)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| (rows[r][col].height(), r));
            let Some(r) = best else { continue };
            rows.swap(top, r);
            combos.swap(top, r);
            let inv = rows[top][col].inv(k).expect("nonzero pivot");
            rows[top] = rows[top].iter().map(|x| x.mul(&inv, k)).collect();
            combos[top] = combos[top].iter().map(|x| x.mul(&inv, k)).collect();
            let (prow, pcombo) = (rows[top].clone(), combos[top].clone());
            for other in 0..n {
                if other == top || rows[other][col].is_zero() {
                    continue;
                }
                let f = rows[other][col].clone();
                axpy(&mut rows[other], &f, &prow, k);
                axpy(&mut combos[other], &f, &pcombo, k);
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        combos.truncate(top);
        Self { ncols, rows, combos, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after clearing pivot columns, and the input-row combination removed.
    pub fn reduce(&self, v: &[RatFunc], k: &GaloisField) -> (Vec<RatFunc>, Vec<RatFunc>) {
        let n_in = self.combos.first().map_or(0, Vec::len);
        let mut rem = v.to_vec();
        let mut used = vec![RatFunc::zero(); n_in];
        for (row, (&col, combo)) in self.rows.iter().zip(self.pivots.iter().zip(&self.combos)) {
            let f = rem[col].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut rem, &f, row, k);
            for (u, c) in used.iter_mut().zip(combo) {
                *u = u.add(&f.mul(c, k), k);
            }
        }
        (rem, used)
    }

    pub fn contains(&self, v: &[RatFunc], k: &GaloisField) -> bool {
        self.reduce(v, k).0.iter().all(RatFunc::is_zero)
    }
}

/// Coefficients c with Σ c_i · rows_i = target, if any.
pub fn linear_solve(rows: &[Vec<RatFunc>], target: &[RatFunc], k: &GaloisField) -> Option<Vec<RatFunc>> {
    let ech = Echelon::new(rows, target.len(), k);
    let (rem, used) = ech.reduce(target, k);
    if !rem.iter().all(RatFunc::is_zero) {
        return None;
    }
    Some(if rows.is_empty() { Vec::new() } else { used })
}
