//! Linear dependencies over F_q[θ] among truncated Laurent series.
//!
//! Candidates are exact kernel vectors of a finite linear system and are only
//! as trustworthy as the precision they were found at.

use crate::algebra::{FieldElem, GaloisField, LaurentSeries, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DependenceProblem {
    pub values: Vec<LaurentSeries>,
    pub deg_bound: u32,
}

#[derive(Clone, Debug)]
pub struct Dependence {
    /// Candidate tuples (a_1, …, a_m) with Σ a_j v_j ≡ 0 to `precision`.
    pub kernel: Vec<Vec<Poly>>,
    /// Last order in θ^{-1} at which the combination is forced to vanish.
    pub precision: i64,
    pub equations: usize,
    pub unknowns: usize,
    pub warning: Option<String>,
}

/// Suggested input precision for m values with coefficient degree ≤ d.
pub fn recommended_prec(m: usize, d: u32) -> i64 {
    (m as i64) * (d as i64 + 1) + 8
}

/// Null space of a dense matrix over GF(q), one basis vector per free column.
fn null_space(mut a: Vec<Vec<FieldElem>>, ncols: usize, k: &GaloisField) -> Vec<Vec<FieldElem>> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(r) = (top..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(top, r);
        let inv = k.inv(a[top][col]).expect("nonzero pivot");
        for x in a[top].iter_mut() {
            *x = k.mul(*x, inv);
        }
        let prow = a[top].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, &p) in row.iter_mut().zip(&prow) {
                *x = k.sub(*x, k.mul(f, p));
            }
        }
        pivots.push(col);
        top += 1;
        if top == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElem::ZERO; ncols];
        v[free] = FieldElem::ONE;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = k.neg(a[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Divides out the common polynomial factor and makes the first nonzero entry monic.
fn normalize(tuple: Vec<Poly>, k: &GaloisField) -> Vec<Poly> {
    let content = tuple.iter().fold(Poly::zero(), |g, a| g.gcd(a, k));
    if content.is_zero() {
        return tuple;
    }
    let tuple: Vec<Poly> = tuple.iter().map(|a| a.div_exact(&content, k).expect("content divides")).collect();
    let lead = tuple.iter().find(|a| !a.is_zero()).map(Poly::lead).expect("nonzero tuple");
    let inv = k.inv(lead).expect("nonzero lead");
    tuple.iter().map(|a| a.scale(inv, k)).collect()
}

fn combination_vanishes(values: &[LaurentSeries], tuple: &[Poly], upto: i64, k: &GaloisField) -> bool {
    let mut acc = LaurentSeries::zero(upto);
    for (v, a) in values.iter().zip(tuple) {
        let a = LaurentSeries::from_poly(a, v.prec() + a.degree().unwrap_or(0) as i64 + 1);
        acc = acc.add(&a.mul(v, k), k);
    }
    acc.truncate(upto).is_zero_to_prec()
}

pub fn find_dependence(prob: &DependenceProblem, k: &GaloisField) -> Result<Dependence> {
    let m = prob.values.len();
    if m == 0 {
        return Err(Error::InvalidInput("dependence search needs at least one value".into()));
    }
    let d = prob.deg_bound as i64;
    let width = d as usize + 1;
    let unknowns = m * width;
    let min_prec = prob.values.iter().map(LaurentSeries::prec).min().expect("nonempty");
    let top = prob.values.iter().map(LaurentSeries::order).min().expect("nonempty") - d;
    let upto = min_prec - d;

    // column j*(D+1)+e carries the coefficient of θ^e in a_j
    let rows: Vec<Vec<FieldElem>> = (top..=upto)
        .map(|o| {
            let mut row = vec![FieldElem::ZERO; unknowns];
            for (j, v) in prob.values.iter().enumerate() {
                for e in 0..=d {
                    row[j * width + e as usize] = v.coeff_at_order(o + e).unwrap_or(FieldElem::ZERO);
                }
            }
            row
        })
        .collect();
    let equations = rows.len();

    let mut kernel: Vec<Vec<Poly>> = Vec::new();
    for v in null_space(rows, unknowns, k) {
        let tuple: Vec<Poly> = (0..m).map(|j| Poly::from_coeffs(v[j * width..(j + 1) * width].to_vec())).collect();
        let tuple = normalize(tuple, k);
        if !kernel.contains(&tuple) && combination_vanishes(&prob.values, &tuple, upto, k) {
            kernel.push(tuple);
        }
    }
    kernel.sort_by_key(|t| t.iter().map(|a| a.degree().map_or(0, |x| x + 1)).sum::<usize>());

    let want = recommended_prec(m, prob.deg_bound);
    let warning = (min_prec < want).then(|| {
        format!("precision {min_prec} is below the recommended {want} for {m} values at degree bound {d}")
    });
    Ok(Dependence { kernel, precision: upto, equations, unknowns, warning })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    #[test]
    fn rational_relation() {
        let k = GaloisField::new(FieldSpec::from_order(3).unwrap());
        let t = Poly::theta();
        let f = LaurentSeries::from_fraction(&Poly::one(), &t.add(&Poly::one(), &k), 30, &k).unwrap();
        let prob = DependenceProblem { values: vec![LaurentSeries::one(30), f], deg_bound: 1 };
        let dep = find_dependence(&prob, &k).unwrap();
        assert_eq!(dep.kernel.len(), 1);
        // 1 − (θ+1)·f = 0, normalized to lead 1 in the first slot
        assert_eq!(dep.kernel[0][1], t.add(&Poly::one(), &k).neg(&k));
        assert!(dep.warning.is_none());
    }

    #[test]
    fn single_value_has_trivial_kernel() {
        let k = GaloisField::new(FieldSpec::from_order(2).unwrap());
        let prob = DependenceProblem { values: vec![LaurentSeries::one(20)], deg_bound: 2 };
        assert!(find_dependence(&prob, &k).unwrap().kernel.is_empty());
        let empty = DependenceProblem { values: vec![], deg_bound: 2 };
        assert!(find_dependence(&empty, &k).is_err());
    }
}
