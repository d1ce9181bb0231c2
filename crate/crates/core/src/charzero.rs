//! Classical multiple zeta values and their dagger variants, by truncated
//! nested sums in double-double arithmetic.

use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::indices::Index;
use crate::report::{Report, Status};

pub const DEFAULT_TERMS: u64 = 1_000_000;
pub const DEFAULT_TOL: f64 = 1e-5;

/// The indices whose duality is checked by default.
pub const DUALITY_CORPUS: [&[u32]; 6] = [&[2], &[3], &[4], &[2, 2], &[2, 4], &[3, 1]];

/// A truncated sum together with a bound on the discarded tail.
#[derive(Clone, Copy, Debug)]
pub struct RealValue {
    pub value: TwoFloat,
    pub tail_bound: f64,
}

impl RealValue {
    pub fn exact(x: f64) -> Self {
        Self { value: TwoFloat::from(x), tail_bound: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.value.hi() + self.value.lo()
    }

    /// Product with first-order error propagation.
    pub fn times(self, other: RealValue) -> RealValue {
        let (a, b) = (self.to_f64().abs(), other.to_f64().abs());
        RealValue {
            value: self.value * other.value,
            tail_bound: a * other.tail_bound + b * self.tail_bound + self.tail_bound * other.tail_bound,
        }
    }

    pub fn format(self) -> String {
        format!("{:.15} (tail <= {:.1e})", self.to_f64(), self.tail_bound)
    }
}

/// s = (a_1+1, {1}^{b_1−1}, …, a_n+1, {1}^{b_n−1}) ↦ (b_n+1, {1}^{a_n−1}, …, b_1+1, {1}^{a_1−1}).
pub fn dual_index(s: &Index) -> Result<Index> {
    let e = s.entries();
    if e.is_empty() {
        return Ok(Index::empty());
    }
    if e[0] < 2 {
        return Err(Error::NotAdmissible(format!("{s} has first entry 1")));
    }
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    for &x in e {
        if x > 1 {
            blocks.push((x - 1, 1));
        } else {
            blocks.last_mut().expect("first entry > 1").1 += 1;
        }
    }
    let mut out = Vec::new();
    for &(a, b) in blocks.iter().rev() {
        out.push(b + 1);
        out.extend(std::iter::repeat_n(1, a as usize - 1));
    }
    Index::new(out)
}

/// ∫_M^∞ x^{−σ−1}(1 + ln x)^k dx, which dominates the tail once the integrand decreases.
fn tail_integral(sigma: f64, k: usize, m: u64) -> f64 {
    let l = 1.0 + (m as f64).ln();
    let mut sum = 0.0;
    let mut falling = 1.0;
    for j in 0..=k {
        sum += falling * l.powi((k - j) as i32) / sigma.powi(j as i32 + 1);
        falling *= (k - j) as f64;
    }
    (m as f64).powf(-sigma) * sum
}

fn rounding_slack(depth: usize, m: u64) -> f64 {
    (depth as f64) * (m as f64) * f64::EPSILON * f64::EPSILON * 8.0
}

fn inv_pow(m: u64, s: u32) -> TwoFloat {
    TwoFloat::from(m as f64).recip().powi(s as i32)
}

fn check_terms(s: &Index, m: u64) -> Result<()> {
    if (m as usize) < s.depth() {
        return Err(Error::InvalidInput(format!("cutoff {m} is below the depth of {s}")));
    }
    Ok(())
}

/// ζ(s) = Σ_{m_1 > ⋯ > m_r ≥ 1} m_1^{−s_1}⋯m_r^{−s_r}, truncated at m_1 ≤ M.
pub fn mzv_num(s: &Index, m: u64) -> Result<RealValue> {
    let e = s.entries();
    let r = e.len();
    if r == 0 {
        return Ok(RealValue::exact(1.0));
    }
    if e[0] < 2 {
        return Err(Error::NotAdmissible(format!("zeta{s} diverges: first entry must exceed 1")));
    }
    check_terms(s, m)?;
    // f[j]: partial sum over m ≥ m_{j+1} > ⋯ > m_r, f[r] = 1
    let mut f = vec![TwoFloat::from(0.0); r + 1];
    f[r] = TwoFloat::from(1.0);
    for n in 1..=m {
        for j in 0..r {
            let inner = f[j + 1];
            f[j] += inv_pow(n, e[j]) * inner;
        }
    }
    let tail = tail_integral((e[0] - 1) as f64, r - 1, m) + rounding_slack(r, m);
    Ok(RealValue { value: f[0], tail_bound: tail })
}

/// ζ†(s) = (−1)^r Σ_{1 ≤ m_1 ≤ ⋯ ≤ m_r} m_1^{−s_1}⋯m_r^{−s_r}, truncated at m_r ≤ M.
pub fn mzdv_num(s: &Index, m: u64) -> Result<RealValue> {
    let e = s.entries();
    let r = e.len();
    if r == 0 {
        return Ok(RealValue::exact(1.0));
    }
    if e[r - 1] < 2 {
        return Err(Error::NotAdmissible(format!("zeta-dagger{s} diverges: last entry must exceed 1")));
    }
    check_terms(s, m)?;
    // g[j]: partial sum over m_1 ≤ ⋯ ≤ m_j ≤ m, g[0] = 1
    let mut g = vec![TwoFloat::from(0.0); r + 1];
    g[0] = TwoFloat::from(1.0);
    for n in 1..=m {
        for j in 1..=r {
            let prev = g[j - 1];
            g[j] += inv_pow(n, e[j - 1]) * prev;
        }
    }
    let value = if r % 2 == 0 { g[r] } else { -g[r] };
    let tail = tail_integral((e[r - 1] - 1) as f64, r - 1, m) + rounding_slack(r, m);
    Ok(RealValue { value, tail_bound: tail })
}

/// |ζ(s) − ζ(s†)| within tolerance plus both tail bounds, for each index.
pub fn check_duality(corpus: &[Index], m: u64, tol: f64) -> Result<Report> {
    let mut rep = Report::new("duality").param("terms", m).param("tol", tol);
    for s in corpus {
        let d = dual_index(s)?;
        let (a, b) = (mzv_num(s, m)?, mzv_num(&d, m)?);
        let diff = (a.value - b.value).hi().abs();
        let allowed = tol + a.tail_bound + b.tail_bound;
        rep.check(
            format!("{s} vs {d}"),
            diff <= allowed,
            format!("|diff| = {diff:.3e}, allowed {allowed:.3e}"),
        );
    }
    Ok(rep.finish())
}

pub fn default_corpus() -> Vec<Index> {
    DUALITY_CORPUS.iter().map(|e| Index::from(*e)).collect()
}

/// Σ_{i=0}^{r} ζ(s[:i]) ζ†(s[i+1:]) = 0 numerically.
pub fn check_prodsum0(s: &Index, m: u64, tol: f64) -> Result<Report> {
    let mut rep = Report::new("prodsum0").param("index", s.to_string()).param("terms", m).param("tol", tol);
    let r = s.depth();
    if r > 0 && (s.entries()[0] < 2 || s.entries()[r - 1] < 2) {
        return Err(Error::NotAdmissible(format!("{s}: every slice must converge, so both end entries must exceed 1")));
    }
    let mut total = TwoFloat::from(0.0);
    let mut bound = 0.0;
    for i in 0..=r {
        let term = mzv_num(&s.prefix(i), m)?.times(mzdv_num(&s.suffix(i + 1), m)?);
        total += term.value;
        bound += term.tail_bound;
    }
    let residual = total.hi().abs();
    rep.check(
        s.to_string(),
        residual <= tol + bound,
        format!("|sum| = {residual:.3e}, allowed {:.3e}", tol + bound),
    );
    Ok(rep.finish())
}

/// ζ(2,4) against ζ(2,1,1,2), and the three quantities ζ†(2,4), −ζ†(2,1,1,2), ζ(3)².
pub fn example45_report(m: u64, tol: f64) -> Result<Report> {
    let mut rep = Report::new("example45").param("terms", m).param("tol", tol);
    let a = Index::from([2, 4]);
    let b = Index::from([2, 1, 1, 2]);
    let (za, zb) = (mzv_num(&a, m)?, mzv_num(&b, m)?);
    let diff = (za.value - zb.value).hi().abs();
    let allowed = tol + za.tail_bound + zb.tail_bound;
    rep.check("zeta(2,4) = zeta(2,1,1,2)", diff <= allowed, format!("|diff| = {diff:.3e}, allowed {allowed:.3e}"));

    let da = mzdv_num(&a, m)?;
    let db = mzdv_num(&b, m)?;
    let neg_db = RealValue { value: -db.value, tail_bound: db.tail_bound };
    let z3 = mzv_num(&Index::single(3), m)?;
    rep.push("zeta-dagger(2,4)", Status::Observation, da.format());
    rep.push("-zeta-dagger(2,1,1,2)", Status::Observation, neg_db.format());
    rep.push("zeta(3)^2", Status::Observation, z3.times(z3).format());
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_examples() {
        let d = |e: &[u32]| dual_index(&Index::from(e)).unwrap();
        assert_eq!(d(&[3]), Index::from([2, 1]));
        assert_eq!(d(&[2]), Index::from([2]));
        assert_eq!(d(&[2, 4]), Index::from([2, 1, 1, 2]));
        assert!(dual_index(&Index::from([1, 2])).is_err());
    }

    #[test]
    fn zeta_two() {
        let z = mzv_num(&Index::single(2), 100_000).unwrap();
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        assert!((z.to_f64() - exact).abs() <= z.tail_bound);
        assert!(z.tail_bound < 2e-5);
        let d = mzdv_num(&Index::single(2), 100_000).unwrap();
        assert_eq!(d.to_f64(), -z.to_f64());
    }

    #[test]
    fn divergent_inputs_rejected() {
        assert!(matches!(mzv_num(&Index::from([1, 2]), 10), Err(Error::NotAdmissible(_))));
        assert!(matches!(mzdv_num(&Index::from([2, 1]), 10), Err(Error::NotAdmissible(_))));
    }
}
