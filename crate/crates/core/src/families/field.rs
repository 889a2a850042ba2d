//! GF(p^k) in the polynomial basis.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of its coefficient vector, so element order coincides with the
//! lexicographic order of coefficient tuples read from the highest degree
//! down. Multiplication and inversion are tabulated at construction.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 256;

/// An element of some [`FiniteField`]; only meaningful together with the
/// field that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u16);

impl FieldElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: usize,
    modulus: Vec<u32>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Splits `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FiniteField {
    /// GF(p^k) with the lexicographically least monic irreducible modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidInput("extension degree must be ≥ 1".into()));
        }
        let order = (p as usize)
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| {
                Error::Capability(format!(
                    "field order {p}^{k} exceeds the supported maximum {MAX_ORDER}"
                ))
            })?;

        let modulus = (0..order)
            .map(|low| {
                let mut poly = digits(low, p, k as usize);
                poly.push(1);
                poly
            })
            .find(|poly| is_irreducible(poly, p))
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {k} over GF({p})")))?;

        let mut field = FiniteField {
            p,
            k,
            order,
            modulus,
            mul: Vec::new(),
            inv: Vec::new(),
        };
        field.mul = (0..order * order)
            .map(|ab| field.mul_slow(ab / order, ab % order) as u16)
            .collect();
        field.inv = vec![0; order];
        for a in 1..order {
            let b = (1..order)
                .find(|&b| field.mul[a * order + b] == 1)
                .ok_or_else(|| Error::Internal(format!("element {a} has no inverse")))?;
            field.inv[a] = b as u16;
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients of the monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order as u16).map(FieldElement)
    }

    /// Element with the given coefficients (constant term first, length `k`).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients in 0..{}",
                self.k, self.p
            )));
        }
        Ok(FieldElement(undigits(coeffs, self.p) as u16))
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        digits(a.index(), self.p, self.k as usize)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        let sum: Vec<u32> = self
            .coefficients(a)
            .iter()
            .zip(self.coefficients(b))
            .map(|(x, y)| (x + y) % p)
            .collect();
        FieldElement(undigits(&sum, p) as u16)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p;
        let c: Vec<u32> = self.coefficients(a).iter().map(|x| (p - x) % p).collect();
        FieldElement(undigits(&c, p) as u16)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.index() * self.order + b.index()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::Domain("zero has no multiplicative inverse".into()));
        }
        Ok(FieldElement(self.inv[a.index()]))
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let k = self.k as usize;
        let prod = poly_mul(&digits(a, self.p, k), &digits(b, self.p, k), self.p);
        let mut rem = poly_rem(&prod, &self.modulus, self.p);
        rem.resize(k, 0);
        undigits(&rem, self.p)
    }
}

fn digits(mut x: usize, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push((x % p as usize) as u32);
        x /= p as usize;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| acc * p as usize + c as usize)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
            }
        }
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..(p as usize).pow(d as u32) {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
