//! Finite fields `GF(p^k)` with log/antilog tables.
//!
//! An element is stored as the integer whose base-`p` digits are its
//! polynomial coefficients, constant term first. The default modulus is the
//! monic irreducible polynomial whose lower coefficients give the smallest
//! such integer, so `GF(8)` is built on `x^3 + x + 1`.

use std::fmt;

use crate::numtheory;

use super::ModError;

/// Field element, encoded as described in the module docs.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    k: u32,
    order: u32,
    /// monic, constant term first, length `k + 1`
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {}", self.p, self.k, format_poly(&self.modulus))
    }
}

/// Renders a coefficient list (constant term first) as `x^3 + x + 1`.
pub fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        terms.push(match i {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo the monic polynomial `m` over `GF(p)`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm && r.len() >= m.len() {
        let lead = *r.last().unwrap();
        let shift = r.len() - m.len();
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    trim(out)
}

fn digits(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

/// A monic factor of degree `1..=deg/2` if `poly` is reducible over `GF(p)`.
///
/// Candidates are tried in ascending degree and then ascending encoding.
pub fn find_factor(poly: &[u32], p: u32) -> Option<Vec<u32>> {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut cand = digits(code, p, d);
            cand.push(1);
            let rem = poly_rem(poly, &cand, p);
            if rem.iter().all(|&c| c == 0) {
                return Some(cand);
            }
        }
    }
    None
}

impl Field {
    /// Builds `GF(p^k)`. Without a modulus the smallest monic irreducible
    /// polynomial of degree `k` is used.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self, ModError> {
        if !numtheory::is_prime(p as u64) {
            return Err(ModError::NotPrime(p));
        }
        if k == 0 {
            return Err(ModError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or(ModError::FieldTooLarge { p, k })?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(ModError::BadModulus(m));
                }
                if let Some(factor) = find_factor(&m, p) {
                    return Err(ModError::Reducible { modulus: m, factor });
                }
                m
            }
            None => Self::default_modulus(p, k),
        };
        let mut field = Field {
            p,
            k,
            order: order as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    /// The prime field `GF(p)`.
    pub fn prime(p: u32) -> Result<Self, ModError> {
        Self::new(p, 1, None)
    }

    fn default_modulus(p: u32, k: u32) -> Vec<u32> {
        let count = (p as u64).pow(k);
        (0..count)
            .map(|code| {
                let mut m = digits(code, p, k as usize);
                m.push(1);
                m
            })
            .find(|m| find_factor(m, p).is_none())
            .expect("irreducible polynomials exist in every degree")
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let pa = self.coeffs(a);
        let pb = self.coeffs(b);
        let prod = poly_rem(&poly_mul(&pa, &pb, self.p), &self.modulus, self.p);
        self.encode_unchecked(&prod)
    }

    fn build_tables(&mut self) {
        let n = self.order as usize;
        let group_order = self.order as u64 - 1;
        let primes: Vec<u64> = numtheory::factor(group_order.max(1))
            .expect("positive")
            .primes()
            .collect();
        let slow_pow = |f: &Field, mut b: Elem, mut e: u64| {
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = f.slow_mul(acc, b);
                }
                b = f.slow_mul(b, b);
                e >>= 1;
            }
            acc
        };
        let gen = (1..self.order)
            .find(|&g| primes.iter().all(|&l| slow_pow(self, g, group_order / l) != 1))
            .expect("the multiplicative group is cyclic");
        let mut exp = vec![0; n - 1];
        let mut log = vec![0; n];
        let mut x: Elem = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = self.slow_mul(x, gen);
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The generator of the multiplicative group used for the log tables:
    /// the primitive element with the smallest encoding.
    pub fn primitive_element(&self) -> Elem {
        if self.order == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// The class of `x`; a generator of the field over the prime field.
    pub fn generator_x(&self) -> Elem {
        if self.k == 1 {
            self.primitive_element()
        } else {
            self.p
        }
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a as u64, self.p, self.k as usize)
    }

    fn encode_unchecked(&self, coeffs: &[u32]) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64) as Elem
    }

    /// Element with the given coefficients (constant term first, length `k`).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem, ModError> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(ModError::BadElement(coeffs.to_vec()));
        }
        Ok(self.encode_unchecked(coeffs))
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.order
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.order - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % m;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let m = self.order - 1;
        Some(self.exp[((m - self.log[a as usize]) % m) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let m = (self.order - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % m)) % m) as usize]
    }

    /// `a -> a^p`
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        let f = Field::new(2, 3, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(format_poly(f.modulus()), "x^3 + x + 1");
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        match Field::new(2, 2, Some(vec![1, 0, 1])) {
            Err(ModError::Reducible { factor, .. }) => assert_eq!(factor, vec![1, 1]),
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(matches!(Field::new(2, 2, Some(vec![1, 1])), Err(ModError::BadModulus(_))));
        assert!(matches!(Field::new(4, 1, None), Err(ModError::NotPrime(4))));
        assert!(matches!(Field::new(2, 17, None), Err(ModError::FieldTooLarge { .. })));
    }

    #[test]
    fn field_axioms_spot_check() {
        for (p, k) in [(2, 3), (3, 2), (5, 1), (2, 4), (7, 2)] {
            let f = Field::new(p, k, None).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
            }
            // Frobenius is additive
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn gf8_multiplication() {
        let f = Field::new(2, 3, None).unwrap();
        let x = f.generator_x();
        assert_eq!(x, 2);
        // x^3 = x + 1
        assert_eq!(f.pow(x, 3), 0b011);
        assert_eq!(f.from_coeffs(&[1, 1, 0]).unwrap(), 3);
        assert!(f.from_coeffs(&[2, 0, 0]).is_err());
    }
}
