//! Truncated Laurent series in θ^{-1} with explicit absolute precision.
//!
//! A series is stored by its order `val` (the exponent of θ^{-1} of the
//! first stored coefficient) and its precision `prec`: every coefficient of
//! θ^{-j} with j ≤ prec is known. Nothing is known beyond `prec`, so two
//! series can only be compared down to the smaller of their precisions.

use std::cmp::{max, min};

use super::gf::{FieldElem, GaloisField};
use super::poly::{format_term, Poly};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    /// Order in θ^{-1} of `coeffs[0]`; equals `prec + 1` for a series that is zero to precision.
    val: i64,
    /// Coefficients of θ^{-val}, θ^{-val-1}, …, θ^{-prec}; first entry nonzero.
    coeffs: Vec<FieldElem>,
    prec: i64,
}

impl LaurentSeries {
    /// The series O(θ^{-(prec+1)}).
    pub fn zero(prec: i64) -> Self {
        Self { val: prec + 1, coeffs: Vec::new(), prec }
    }

    pub fn one(prec: i64) -> Self {
        Self::from_orders(0, vec![FieldElem::ONE], prec)
    }

    /// Builds a series from coefficients of θ^{-val}, θ^{-val-1}, …; entries past `prec` are dropped
    /// and missing ones up to `prec` are zero.
    pub fn from_orders(val: i64, mut coeffs: Vec<FieldElem>, prec: i64) -> Self {
        let len = (prec - val + 1).max(0) as usize;
        coeffs.resize(len, FieldElem::ZERO);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(prec),
            Some(i) => Self { val: val + i as i64, coeffs: coeffs.split_off(i), prec },
        }
    }

    pub fn from_poly(f: &Poly, prec: i64) -> Self {
        let Some(deg) = f.degree() else {
            return Self::zero(prec);
        };
        let val = -(deg as i64);
        let coeffs = (0..=deg).rev().map(|i| f.coeff(i)).collect();
        Self::from_orders(val, coeffs, prec)
    }

    /// Expansion of `num/den` at infinity, exact through θ^{-prec}.
    pub fn from_ratfunc(f: &RatFunc, prec: i64, k: &GaloisField) -> Result<Self> {
        Self::from_fraction(f.num(), f.den(), prec, k)
    }

    pub fn from_fraction(num: &Poly, den: &Poly, prec: i64, k: &GaloisField) -> Result<Self> {
        let dd = den.degree().ok_or(Error::DivisionByZero)? as i64;
        let Some(dn) = num.degree() else {
            return Ok(Self::zero(prec));
        };
        let dn = dn as i64;
        let val = dd - dn;
        if val > prec {
            return Ok(Self::zero(prec));
        }
        let lead_inv = k.inv(den.lead())?;
        // long division in decreasing powers of θ
        let len = (prec - val + 1) as usize;
        let mut rem: Vec<FieldElem> = (0..=dn).rev().map(|i| num.coeff(i as usize)).collect();
        rem.resize(len + dd as usize, FieldElem::ZERO);
        let den_desc: Vec<FieldElem> = (0..=dd).rev().map(|i| den.coeff(i as usize)).collect();
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let c = k.mul(rem[i], lead_inv);
            out.push(c);
            if !c.is_zero() {
                for (j, &d) in den_desc.iter().enumerate().skip(1) {
                    rem[i + j] = k.sub(rem[i + j], k.mul(c, d));
                }
            }
        }
        Ok(Self::from_orders(val, out, prec))
    }

    /// Absolute precision: coefficients of θ^j are known for all j ≥ −prec.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Order in θ^{-1}: the smallest j with a nonzero coefficient of θ^{-j}; `prec + 1` if none.
    pub fn order(&self) -> i64 {
        self.val
    }

    /// Highest power of θ present; `None` when the series is zero to precision.
    pub fn lead(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(-self.val)
    }

    pub fn is_zero_to_prec(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of θ^{-j}; `None` past the precision.
    pub fn coeff_at_order(&self, j: i64) -> Option<FieldElem> {
        if j > self.prec {
            None
        } else if j < self.val {
            Some(FieldElem::ZERO)
        } else {
            Some(self.coeffs[(j - self.val) as usize])
        }
    }

    /// Coefficient of θ^e; `None` past the precision.
    pub fn coeff(&self, e: i64) -> Option<FieldElem> {
        self.coeff_at_order(-e)
    }

    fn at(&self, j: i64) -> FieldElem {
        self.coeff_at_order(j).unwrap_or(FieldElem::ZERO)
    }

    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        Self::from_orders(self.val, self.coeffs.clone(), prec)
    }

    pub fn add(&self, other: &Self, k: &GaloisField) -> Self {
        let prec = min(self.prec, other.prec);
        let val = min(self.val, other.val);
        if val > prec {
            return Self::zero(prec);
        }
        let coeffs = (val..=prec).map(|j| k.add(self.at(j), other.at(j))).collect();
        Self::from_orders(val, coeffs, prec)
    }

    pub fn neg(&self, k: &GaloisField) -> Self {
        Self { val: self.val, coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect(), prec: self.prec }
    }

    pub fn sub(&self, other: &Self, k: &GaloisField) -> Self {
        self.add(&other.neg(k), k)
    }

    pub fn scale(&self, c: FieldElem, k: &GaloisField) -> Self {
        Self::from_orders(self.val, self.coeffs.iter().map(|&x| k.mul(x, c)).collect(), self.prec)
    }

    /// Product; precision is min(prec_x + ord_y, prec_y + ord_x).
    pub fn mul(&self, other: &Self, k: &GaloisField) -> Self {
        let prec = min(self.prec + other.val, other.prec + self.val);
        if self.is_zero_to_prec() || other.is_zero_to_prec() {
            return Self::zero(prec);
        }
        let val = self.val + other.val;
        let len = (prec - val + 1).max(0) as usize;
        let mut out = vec![FieldElem::ZERO; len];
        for (i, &a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Self::from_orders(val, out, prec)
    }

    /// Multiplicative inverse; the relative precision is preserved.
    pub fn inv(&self, k: &GaloisField) -> Result<Self> {
        if self.is_zero_to_prec() {
            return Err(Error::InsufficientPrecision(format!(
                "cannot invert a series that vanishes through T^-{}",
                self.prec
            )));
        }
        let rel = (self.prec - self.val) as usize;
        let c0_inv = k.inv(self.coeffs[0])?;
        let mut w = Vec::with_capacity(rel + 1);
        w.push(c0_inv);
        for n in 1..=rel {
            let mut acc = FieldElem::ZERO;
            for j in 1..=n.min(self.coeffs.len() - 1) {
                acc = k.add(acc, k.mul(self.coeffs[j], w[n - j]));
            }
            w.push(k.neg(k.mul(acc, c0_inv)));
        }
        Ok(Self::from_orders(-self.val, w, self.prec - 2 * self.val))
    }

    pub fn div(&self, other: &Self, k: &GaloisField) -> Result<Self> {
        Ok(self.mul(&other.inv(k)?, k))
    }

    pub fn pow(&self, n: u32, k: &GaloisField) -> Self {
        let mut acc = Self::one(max(self.prec - self.val, 0));
        for _ in 0..n {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// x ↦ x^p, computed coefficient-wise.
    pub fn frobenius(&self, k: &GaloisField) -> Self {
        let p = k.p() as i64;
        let prec = p * (self.prec + 1) - 1;
        if self.is_zero_to_prec() {
            return Self::zero(prec);
        }
        let mut coeffs = vec![FieldElem::ZERO; (prec - p * self.val + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p as usize] = k.frobenius(c);
        }
        Self::from_orders(p * self.val, coeffs, prec)
    }

    /// Multiplication by θ^{-m}.
    pub fn shift_order(&self, m: i64) -> Self {
        Self { val: self.val + m, coeffs: self.coeffs.clone(), prec: self.prec + m }
    }

    /// Equality of all coefficients down to the smaller precision.
    pub fn eq_to_common_prec(&self, other: &Self) -> bool {
        let prec = min(self.prec, other.prec);
        (min(self.val, other.val)..=prec).all(|j| self.at(j) == other.at(j))
    }

    /// Textual form such as `T^-1 + T^-3 + O(T^-10)`.
    pub fn format(&self, k: &GaloisField) -> String {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| format_term(c, -(self.val + i as i64), k))
            .collect();
        let tail = -(self.prec + 1);
        parts.push(if tail == 0 { "O(1)".into() } else if tail == 1 { "O(T)".into() } else { format!("O(T^{tail})") });
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FieldSpec;

    fn k(q: u32) -> GaloisField {
        GaloisField::new(FieldSpec::from_order(q).unwrap())
    }

    fn theta_pow(e: i64, prec: i64) -> LaurentSeries {
        LaurentSeries::from_orders(-e, vec![FieldElem::ONE], prec)
    }

    #[test]
    fn polynomial_expansion_is_exact() {
        let k = k(2);
        let f = Poly::from_coeffs(vec![FieldElem::ONE, FieldElem::ZERO, FieldElem::ONE]);
        let s = LaurentSeries::from_poly(&f, 5);
        assert_eq!(s.lead(), Some(2));
        assert_eq!(s.prec(), 5);
        assert_eq!(s.format(&k), "T^2 + 1 + O(T^-6)");
    }

    #[test]
    fn inverse_of_theta() {
        let k = k(3);
        let f = RatFunc::new(Poly::one(), Poly::theta(), &k).unwrap();
        let s = LaurentSeries::from_ratfunc(&f, 3, &k).unwrap();
        assert_eq!(s.format(&k), "T^-1 + O(T^-4)");
    }

    #[test]
    fn geometric_expansion_matches_oracle() {
        // 1/(θ − 1) = Σ_{j≥1} θ^{-j}
        let k = k(3);
        let den = Poly::theta().sub(&Poly::one(), &k);
        let s = LaurentSeries::from_fraction(&Poly::one(), &den, 3, &k).unwrap();
        let oracle = LaurentSeries::from_orders(1, vec![FieldElem::ONE; 3], 3);
        assert_eq!(s, oracle);
    }

    #[test]
    fn product_precision_rule() {
        let k = k(5);
        let x = theta_pow(-1, 10);
        let y = theta_pow(-2, 10);
        let z = x.mul(&y, &k);
        assert_eq!(z.prec(), 11);
        assert_eq!(z.lead(), Some(-3));
    }

    #[test]
    fn char_two_squaring() {
        let k = k(2);
        let x = LaurentSeries::from_orders(0, vec![FieldElem::ONE, FieldElem::ONE], 12);
        let sq = x.mul(&x, &k);
        let expected = LaurentSeries::from_orders(0, vec![FieldElem::ONE, FieldElem::ZERO, FieldElem::ONE], 12);
        assert_eq!(sq, expected);
        assert_eq!(x.frobenius(&k).truncate(12), expected);
    }

    #[test]
    fn adding_zero_and_inverting() {
        let k = k(3);
        let x = LaurentSeries::from_orders(-2, vec![FieldElem::ONE, k.from_int(2), FieldElem::ZERO, FieldElem::ONE], 8);
        assert_eq!(x.add(&LaurentSeries::zero(20), &k), x);
        let inv = x.inv(&k).unwrap();
        assert!(x.mul(&inv, &k).eq_to_common_prec(&LaurentSeries::one(30)));
        assert!(matches!(LaurentSeries::zero(4).inv(&k), Err(Error::InsufficientPrecision(_))));
    }
}
