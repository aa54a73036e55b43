//! Finite fields `F_{p^k}` as quotients `F_p[a] / (f(a))`.
//!
//! The modulus `f` is the Conway polynomial for the pairs listed in
//! [`CONWAY`]; for any other `(p, k)` it is the first primitive monic
//! polynomial of degree `k` when the lower coefficients, read as a base-`p`
//! number with the constant term least significant, are counted upward
//! from zero.

use super::{is_prime, Elem};
use crate::error::{Error, Result};

/// Largest supported field order.
pub const FIELD_ORDER_CAP: usize = 4096;

/// Conway polynomials, coefficients from the constant term upward.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    k: u32,
    order: usize,
    /// Monic, length `k + 1`, constant term first.
    modulus: Vec<u32>,
}

impl GaloisField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("field degree must be >= 1".into()));
        }
        let order = (p as usize)
            .checked_pow(k)
            .filter(|&q| q <= FIELD_ORDER_CAP)
            .ok_or(Error::SizeCap {
                what: "field order",
                size: (p as f64).powi(k as i32).min(usize::MAX as f64) as usize,
                cap: FIELD_ORDER_CAP,
            })?;
        let conway = CONWAY
            .iter()
            .find(|(cp, ck, _)| *cp == p && *ck == k)
            .map(|(_, _, c)| c.to_vec());
        let mut field = GaloisField { p, k, order, modulus: vec![0; k as usize + 1] };
        match conway {
            Some(m) => field.modulus = m,
            None => {
                let lower = order;
                let found = (0..lower).find_map(|c| {
                    let mut m = field.digits(c as Elem);
                    m.push(1);
                    let candidate = GaloisField { modulus: m, ..field.clone() };
                    candidate.is_primitive().then_some(candidate.modulus)
                });
                field.modulus = found.expect("a primitive polynomial exists for every degree");
            }
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

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn digits(&self, x: Elem) -> Vec<u32> {
        let mut x = x;
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> Elem {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let d: Vec<u32> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&d)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * k];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce from the top using a^k = -(m_0 + m_1 a + ... + m_{k-1} a^{k-1})
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] % p;
                prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Norm to the prime field: `x^((q-1)/(p-1))`, with `N(0) = 0`. The
    /// result is a prime-field element, i.e. an index below `p`.
    pub fn norm(&self, x: Elem) -> u32 {
        if x == 0 {
            return 0;
        }
        let e = (self.order as u64 - 1) / (self.p as u64 - 1);
        let n = self.pow(x, e);
        debug_assert!(n < self.p, "norm must land in the prime field");
        n
    }

    /// `{x : N(x) ∈ values}` in increasing index order.
    pub fn norm_preimage(&self, values: &[u32]) -> Result<Vec<Elem>> {
        if let Some(v) = values.iter().find(|&&v| v >= self.p) {
            return Err(Error::InvalidParameter(format!(
                "norm value {v} is outside the prime field F_{}",
                self.p
            )));
        }
        Ok((0..self.order as Elem)
            .filter(|&x| values.contains(&self.norm(x)))
            .collect())
    }

    /// The class of `a` generates the multiplicative group, which also
    /// forces the modulus to be irreducible.
    pub fn is_primitive(&self) -> bool {
        let q1 = self.order as u64 - 1;
        let a: Elem = if self.k == 1 {
            // degree-one modulus a - g: the generator is g itself
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        };
        if a == 0 || self.pow(a, q1) != 1 {
            return false;
        }
        prime_factors(q1).into_iter().all(|r| self.pow(a, q1 / r) != 1)
    }

    pub fn label(&self, x: Elem) -> String {
        let digits = self.digits(x);
        let mut terms = Vec::new();
        for (deg, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && deg > 0 { String::new() } else { c.to_string() };
            terms.push(match deg {
                0 => c.to_string(),
                1 => format!("{coeff}a"),
                _ => format!("{coeff}a^{deg}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
