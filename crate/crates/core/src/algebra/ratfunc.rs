//! Rational functions in θ over GF(q), kept in lowest terms with a monic
//! denominator so that structural equality is equality of functions.

use super::gf::{FieldElem, GaloisField};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly, k: &GaloisField) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den, k))
    }

    fn reduced(num: Poly, den: Poly, k: &GaloisField) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = num.gcd(&den, k);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g, k).expect("gcd divides"), den.div_exact(&g, k).expect("gcd divides"))
        };
        let lead_inv = k.inv(den.lead()).expect("nonzero denominator");
        Self { num: num.scale(lead_inv, k), den: den.scale(lead_inv, k) }
    }

    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        Self { num, den: Poly::one() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value, if this is an element of GF(q).
    pub fn as_constant(&self) -> Option<FieldElem> {
        (self.den.is_one() && self.num.degree().unwrap_or(0) == 0).then(|| self.num.coeff(0))
    }

    /// deg num − deg den; `None` for zero.
    pub fn valuation_degree(&self) -> Option<i64> {
        self.num.degree().map(|d| d as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    /// deg num + deg den, used to rank pivots by size.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn add(&self, other: &RatFunc, k: &GaloisField) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduced(self.num.add(&other.num, k), self.den.clone(), k);
        }
        let num = self.num.mul(&other.den, k).add(&other.num.mul(&self.den, k), k);
        Self::reduced(num, self.den.mul(&other.den, k), k)
    }

    pub fn neg(&self, k: &GaloisField) -> RatFunc {
        Self { num: self.num.neg(k), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFunc, k: &GaloisField) -> RatFunc {
        self.add(&other.neg(k), k)
    }

    pub fn scale(&self, c: FieldElem, k: &GaloisField) -> RatFunc {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c, k), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc, k: &GaloisField) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c, k);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(c, k);
        }
        if self.is_poly() && other.is_poly() {
            return Self::from_poly(self.num.mul(&other.num, k));
        }
        Self::reduced(self.num.mul(&other.num, k), self.den.mul(&other.den, k), k)
    }

    pub fn inv(&self, k: &GaloisField) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone(), k))
    }

    pub fn div(&self, other: &RatFunc, k: &GaloisField) -> Result<RatFunc> {
        Ok(self.mul(&other.inv(k)?, k))
    }

    pub fn pow(&self, n: u64, k: &GaloisField) -> RatFunc {
        if self.is_zero() {
            return if n == 0 { Self::one() } else { Self::zero() };
        }
        Self { num: self.num.pow(n, k), den: self.den.pow(n, k) }
    }

    /// `num/den`, or just the numerator when the denominator is one.
    pub fn format(&self, k: &GaloisField) -> String {
        if self.den.is_one() {
            self.num.format(k)
        } else {
            let wrap = |p: &Poly| {
                let s = p.format(k);
                if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            };
            format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }

    /// Whether the printed form needs parentheses when used as a coefficient.
    pub fn is_compound(&self, k: &GaloisField) -> bool {
        !self.den.is_one() || self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || {
            let c = self.num.lead();
            self.num.degree() == Some(0) && k.is_compound(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FieldSpec;

    #[test]
    fn canonical_form() {
        let k = GaloisField::new(FieldSpec::from_order(3).unwrap());
        let t = Poly::theta();
        let one = Poly::one();
        // (2T^2 + 2T) / (2T) = T + 1
        let num = t.mul(&t, &k).add(&t, &k).scale(k.from_int(2), &k);
        let den = t.scale(k.from_int(2), &k);
        let f = RatFunc::new(num, den, &k).unwrap();
        assert_eq!(f, RatFunc::from_poly(t.add(&one, &k)));
        assert!(RatFunc::new(one.clone(), Poly::zero(), &k).is_err());
        let g = RatFunc::new(one, t.clone(), &k).unwrap();
        assert_eq!(g.mul(&RatFunc::from_poly(t), &k), RatFunc::one());
        assert_eq!(g.format(&k), "1/T");
    }
}
