//! Dense univariate polynomials over GF(q) in the variable θ (written `T`).

use super::gf::{FieldElem, GaloisField};
use crate::error::{Error, Result};

/// A polynomial in θ, coefficients lowest degree first, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::ONE)
    }

    /// θ
    pub fn theta() -> Self {
        Self::monomial(FieldElem::ONE, 1)
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElem::ONE
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElem::ONE
    }

    pub fn add(&self, other: &Poly, k: &GaloisField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, k: &GaloisField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, k: &GaloisField) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect() }
    }

    pub fn scale(&self, c: FieldElem, k: &GaloisField) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|&x| k.mul(x, c)).collect() }
    }

    pub fn mul(&self, other: &Poly, k: &GaloisField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiplication by θ^shift.
    pub fn shift(&self, shift: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; shift];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Euclidean division: `self = quot * divisor + rem` with deg rem < deg divisor.
    pub fn div_rem(&self, divisor: &Poly, k: &GaloisField) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = k.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = k.mul(c, lead_inv);
            quot[i - dd] = f;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = k.sub(rem[idx], k.mul(f, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly, k: &GaloisField) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor, k)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidInput("inexact polynomial division".into()))
        }
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, k: &GaloisField) -> Poly {
        match k.inv(self.lead()) {
            Ok(inv) => self.scale(inv, k),
            Err(_) => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly, k: &GaloisField) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, k).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn lcm(&self, other: &Poly, k: &GaloisField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other, k);
        self.div_exact(&g, k).expect("gcd divides").mul(other, k).monic(k)
    }

    /// Coefficient-wise p-th power composed with θ ↦ θ^p, i.e. f ↦ f^p.
    pub fn frobenius(&self, k: &GaloisField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let p = k.p() as usize;
        let mut coeffs = vec![FieldElem::ZERO; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = k.frobenius(c);
        }
        Poly { coeffs }
    }

    /// f^n, splitting off the largest power of p as iterated Frobenius.
    pub fn pow(&self, mut n: u64, k: &GaloisField) -> Poly {
        let p = k.p() as u64;
        let mut frob = 0;
        while n > 0 && n % p == 0 {
            n /= p;
            frob += 1;
        }
        let mut acc = Poly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, k);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, k);
            }
        }
        for _ in 0..frob {
            acc = acc.frobenius(k);
        }
        acc
    }

    /// Textual form in `T`, highest degree first, e.g. `T^2+u*T+1`.
    pub fn format(&self, k: &GaloisField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&format_term(c, i as i64, k));
        }
        out
    }
}

/// `c*T^e` with the usual elisions; shared with the Laurent series printer.
pub(crate) fn format_term(c: FieldElem, e: i64, k: &GaloisField) -> String {
    let var = match e {
        0 => String::new(),
        1 => "T".into(),
        _ => format!("T^{e}"),
    };
    let coef = k.format(c);
    let coef = if k.is_compound(c) { format!("({coef})") } else { coef };
    match (e, c == FieldElem::ONE) {
        (0, _) => coef,
        (_, true) => var,
        _ => format!("{coef}*{var}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FieldSpec;

    fn k(q: u32) -> GaloisField {
        GaloisField::new(FieldSpec::from_order(q).unwrap())
    }

    fn poly(k: &GaloisField, c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| k.from_int(x)).collect())
    }

    #[test]
    fn division_round_trip() {
        let k = k(3);
        let a = poly(&k, &[1, 2, 0, 1, 2]);
        let b = poly(&k, &[2, 1, 1]);
        let (q, r) = a.div_rem(&b, &k).unwrap();
        assert_eq!(q.mul(&b, &k).add(&r, &k), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&Poly::zero(), &k), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let k = k(5);
        let f = poly(&k, &[1, 1]);
        let a = f.mul(&poly(&k, &[3, 0, 1]), &k);
        let b = f.mul(&poly(&k, &[2, 4]), &k).scale(k.from_int(3), &k);
        assert_eq!(a.gcd(&b, &k), f);
    }

    #[test]
    fn pow_with_frobenius_matches_repeated_product() {
        let k = k(3);
        let f = poly(&k, &[1, 2, 1, 1]);
        let mut direct = Poly::one();
        for n in 0..13u64 {
            assert_eq!(f.pow(n, &k), direct);
            direct = direct.mul(&f, &k);
        }
    }

    #[test]
    fn formatting() {
        let k4 = k(4);
        let u = k4.generator().unwrap();
        let f = Poly::from_coeffs(vec![FieldElem::ONE, u, FieldElem::ONE]);
        assert_eq!(f.format(&k4), "T^2+u*T+1");
        let g = Poly::from_coeffs(vec![FieldElem::ZERO, k4.add(u, FieldElem::ONE)]);
        assert_eq!(g.format(&k4), "(u+1)*T");
        assert_eq!(poly(&k(3), &[0, 2]).format(&k(3)), "2*T");
    }
}
