//! Finite fields GF(p^e) represented as F_p[u]/(modulus), with full
//! addition and multiplication tables.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u32 = 1024;

/// Description of a finite field of order q = p^e.
///
/// `modulus` holds the coefficients of a monic irreducible polynomial over
/// F_p, lowest degree first. For prime fields it is the placeholder `u`
/// (that is `[0, 1]`), which is never used.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    modulus: Vec<u32>,
}

/// Built-in moduli for the small non-prime orders.
const BUILTIN_MODULI: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),    // u^2 + u + 1
    (8, &[1, 1, 0, 1]), // u^3 + u + 1
    (9, &[1, 0, 1]),    // u^2 + 1
];

impl FieldSpec {
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER as u64).ok_or_else(|| {
            Error::InvalidField(format!("field order {p}^{e} exceeds the supported maximum {MAX_ORDER}"))
        })? as u32;
        let modulus = match modulus {
            Some(m) => m,
            None if e == 1 => vec![0, 1],
            None => BUILTIN_MODULI
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, m)| m.to_vec())
                .ok_or_else(|| {
                    Error::InvalidField(format!(
                        "no built-in modulus for q = {q}; pass one explicitly with --modulus"
                    ))
                })?,
        };
        if modulus.len() != e as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients, got {}",
                e + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficients must lie in 0..{p}")));
        }
        if modulus[e as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if e > 1 && !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        Ok(Self { p, e, modulus })
    }

    /// Field of order `q`, using the built-in modulus table when q is not prime.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.e)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

/// An element of GF(q), stored as the base-p integer whose digits are the
/// coefficients of its representative in F_p[u] (lowest degree first).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn raw(self) -> u32 {
        self.0 as u32
    }
}

/// Arithmetic of a concrete finite field.
pub struct GaloisField {
    spec: FieldSpec,
    q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField").field("spec", &self.spec).finish()
    }
}

impl GaloisField {
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.q();
        let (p, e) = (spec.p, spec.e as usize);
        let digits = |x: u32| -> Vec<u32> {
            let mut d = vec![0; e];
            let mut x = x;
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let all: Vec<Vec<u32>> = (0..q).map(digits).collect();

        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = all[a].iter().zip(&all[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * n + b] = undigits(&s) as u16;
                mul[a * n + b] = undigits(&mul_mod(&all[a], &all[b], &spec.modulus, p)) as u16;
            }
        }
        let neg = (0..n)
            .map(|a| {
                let s: Vec<u32> = all[a].iter().map(|x| (p - x) % p).collect();
                undigits(&s) as u16
            })
            .collect();
        let mut inv = vec![0u16; n];
        for a in 1..n {
            inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).expect("nonzero element is invertible") as u16;
        }
        Self { spec, q, add, mul, neg, inv }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElem(self.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, mut n: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// The p-th power map.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.spec.p as u64)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.spec.p as i64) as u16)
    }

    /// Element with the given F_p-coordinates (lowest power of u first).
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElem> {
        if digits.len() > self.spec.e as usize || digits.iter().any(|&d| d >= self.spec.p) {
            return Err(Error::InvalidInput(format!("{digits:?} is not an element of GF({})", self.q)));
        }
        Ok(FieldElem(digits.iter().rev().fold(0, |acc, &c| acc * self.spec.p + c) as u16))
    }

    /// Coordinates over F_p, exactly `e` of them.
    pub fn digits(&self, a: FieldElem) -> Vec<u32> {
        let mut x = a.raw();
        (0..self.spec.e)
            .map(|_| {
                let d = x % self.spec.p;
                x /= self.spec.p;
                d
            })
            .collect()
    }

    /// The class of `u` in F_p[u]/(modulus); `None` for prime fields.
    pub fn generator(&self) -> Option<FieldElem> {
        (self.spec.e > 1).then_some(FieldElem(self.spec.p as u16))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u16).map(FieldElem)
    }

    /// Whether `a` lies in the prime subfield (a single nonzero digit at u^0).
    pub fn is_prime_subfield(&self, a: FieldElem) -> bool {
        a.raw() < self.spec.p
    }

    /// Textual form: integers for F_p, polynomials in `u` otherwise.
    pub fn format(&self, a: FieldElem) -> String {
        if self.spec.e == 1 || self.is_prime_subfield(a) {
            return a.raw().to_string();
        }
        let mut parts = Vec::new();
        for (i, &d) in self.digits(a).iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            };
            parts.push(match (d, i) {
                (_, 0) => d.to_string(),
                (1, _) => var,
                _ => format!("{d}*{var}"),
            });
        }
        parts.join("+")
    }

    /// True when the formatted element needs parentheses as a coefficient.
    pub fn is_compound(&self, a: FieldElem) -> bool {
        self.digits(a).iter().filter(|&&d| d != 0).count() > 1
    }
}

fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (k, &m) in modulus.iter().enumerate() {
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    prod.truncate(e);
    prod
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Splits `q` as p^e.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// No monic factor of degree <= deg/2 divides `f` (coefficients mod p).
fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for tail in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut t = tail;
            for slot in g.iter_mut().take(d) {
                *slot = (t % p as u64) as u32;
                t /= p as u64;
            }
            g[d] = 1;
            if rem_mod_p(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn rem_mod_p(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (k, &gk) in g.iter().enumerate() {
            r[shift + k] = (r[shift + k] + (p - c) * gk) % p;
        }
        r.pop();
    }
    r
}
