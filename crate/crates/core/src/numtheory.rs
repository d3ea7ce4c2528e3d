//! Exact integer arithmetic: factorization, prime-divisor sets, primitive
//! prime divisors and the repunit equation behind Sylow counts.
//!
//! Everything here is exact. Machine-word inputs use trial division backed by
//! a deterministic Miller–Rabin test; the primitive-prime-divisor search is
//! carried out on arbitrary-precision integers because `r^a - 1` leaves `u64`
//! almost immediately.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("{base}^{exp} does not fit in 64 bits")]
    Overflow { base: u64, exp: u32 },
    #[error("smallest primitive prime divisor of {r}^{a} - 1 not found within the search budget")]
    SearchLimit { r: u64, a: u32 },
}

/// Bases that make Miller–Rabin deterministic for every `n < 3.3 * 10^24`.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Extra bases used above the deterministic range (strong probable primes).
const MR_EXTRA_BASES: [u64; 7] = [43, 47, 53, 59, 61, 67, 71];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64, NumError> {
    base.checked_pow(exp).ok_or(NumError::Overflow { base, exp })
}

/// Canonical prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly ascending primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factors back together.
    pub fn recompose(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factors `n` by trial division, stopping as soon as the cofactor is prime.
pub fn factor(n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut p = 5u64;
    while rest > 1 {
        if p.checked_mul(p).is_none_or(|sq| sq > rest) || is_prime(rest) {
            push(rest, &mut rest);
            break;
        }
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    Ok(Factorization { n, factors })
}

/// The set of prime divisors of `n`, optionally without 2.
pub fn prime_set(n: u64, odd_only: bool) -> Result<BTreeSet<u64>, NumError> {
    Ok(factor(n)?
        .primes()
        .filter(|&p| !(odd_only && p == 2))
        .collect())
}

/// Part of `r^a - 1` coprime to every `r^i - 1` with `i < a`.
///
/// Its prime divisors are exactly the primitive prime divisors of `r^a - 1`.
pub fn primitive_part(r: u64, a: u32) -> BigUint {
    let big_r = BigUint::from(r);
    let one = BigUint::one();
    let mut rest = big_r.pow(a) - &one;
    for i in 1..a {
        if a % i != 0 {
            continue;
        }
        let lower = big_r.pow(i) - &one;
        loop {
            let g = rest.gcd(&lower);
            if g.is_one() {
                break;
            }
            rest /= g;
        }
    }
    rest
}

/// Whether `r^a - 1` has a primitive prime divisor.
pub fn has_ppd(r: u64, a: u32) -> bool {
    a >= 1 && !primitive_part(r, a).is_one()
}

/// Largest trial divisor tried before switching to Pollard–Brent.
const TRIAL_LIMIT: u64 = 1 << 21;
/// Total Pollard–Brent iterations allowed for one query.
const RHO_BUDGET: u64 = 1 << 22;

/// Smallest primitive prime divisor of `r^a - 1`: the least prime dividing
/// `r^a - 1` and no `r^i - 1` for `1 <= i < a`.
///
/// `Ok(None)` is returned exactly in the Zsygmondy exceptions. The value can
/// exceed 64 bits. Cofactors above `3.3 * 10^24` are certified as strong
/// probable primes to 20 bases.
pub fn ppd(r: u64, a: u32) -> Result<Option<BigUint>, NumError> {
    if !is_prime(r) {
        return Err(NumError::NotPrime(r));
    }
    if a == 0 {
        return Err(NumError::ZeroExponent);
    }
    let part = primitive_part(r, a);
    if part.is_one() {
        return Ok(None);
    }
    // Every prime t dividing the primitive part has multiplicative order a
    // modulo t, so t == 1 (mod a). The first candidate of that shape which
    // divides `part` is therefore prime.
    let step = a as u64;
    let mut t = step + 1;
    while t <= TRIAL_LIMIT {
        let t_big = BigUint::from(t);
        if &t_big * &t_big > part {
            return Ok(Some(part));
        }
        if (&part % t).is_zero() {
            return Ok(Some(t_big));
        }
        t += step;
    }
    let mut budget = RHO_BUDGET;
    let mut primes = Vec::new();
    if !factor_big(part, &mut budget, &mut primes) {
        return Err(NumError::SearchLimit { r, a });
    }
    Ok(primes.into_iter().min())
}

fn factor_big(n: BigUint, budget: &mut u64, out: &mut Vec<BigUint>) -> bool {
    if n.is_one() {
        return true;
    }
    if is_probable_prime_big(&n) {
        out.push(n);
        return true;
    }
    match pollard_brent(&n, budget) {
        Some(d) => {
            let other = &n / &d;
            factor_big(d, budget, out) && factor_big(other, budget, out)
        }
        None => false,
    }
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let minus_one = n - &one;
    let s = minus_one.trailing_zeros().unwrap_or(0);
    let d = &minus_one >> s;
    let deterministic = *n < BigUint::from(3_317_044_064_679_887_385_961_981u128);
    let bases = MR_BASES
        .iter()
        .chain(if deterministic { [].iter() } else { MR_EXTRA_BASES.iter() });
    'bases: for &a in bases {
        let base = BigUint::from(a);
        if (n % &base).is_zero() {
            return false;
        }
        let mut x = base.modpow(&d, n);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard's rho. Consumes `budget` iterations.
fn pollard_brent(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    const BATCH: u64 = 128;
    for c in 1u32.. {
        if *budget == 0 {
            return None;
        }
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x;
        let mut ys;
        let mut q = one.clone();
        let mut g;
        let mut len = 1u64;
        loop {
            x = y.clone();
            for _ in 0..len {
                y = f(&y);
            }
            let mut done = 0;
            loop {
                ys = y.clone();
                let chunk = BATCH.min(len - done);
                for _ in 0..chunk {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                done += chunk;
                *budget = budget.saturating_sub(chunk);
                if !g.is_one() || done >= len || *budget == 0 {
                    break;
                }
            }
            len *= 2;
            if !g.is_one() || *budget == 0 {
                break;
            }
        }
        if g == *n {
            // overshot inside a batch: retrace one step at a time
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// A solution of `(r^(bc) - 1) / (r^b - 1) = N`, i.e.
/// `N = 1 + r^b + r^(2b) + ... + r^(b(c-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepunitSolution {
    pub r: u64,
    pub b: u32,
    pub c: u32,
}

impl RepunitSolution {
    /// The exponent `a = b * c` of `|V| = r^a`.
    pub fn a(&self) -> u32 {
        self.b * self.c
    }
}

impl fmt::Display for RepunitSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} b={} c={}", self.r, self.b, self.c)
    }
}

/// All `(r, b, c)` with `r <= r_max` prime, `b >= 1`, `c >= 2` and
/// `1 + r^b + ... + r^(b(c-1)) = n`, ordered by `(r, b)`.
///
/// The sum is grown term by term, so the last term `r^(b(c-1))` never
/// exceeds `n`; that is the cap on `b * c`.
pub fn solve_repunit(n: u64, r_max: u64) -> Vec<RepunitSolution> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let r_top = r_max.min(n - 1);
    for r in 2..=r_top {
        if !is_prime(r) {
            continue;
        }
        let mut b = 1u32;
        while let Some(step) = r.checked_pow(b).filter(|&s| s < n) {
            let mut sum = 1u64;
            let mut term = 1u64;
            let mut c = 1u32;
            while sum < n {
                term = match term.checked_mul(step) {
                    Some(t) if t <= n => t,
                    _ => break,
                };
                sum += term;
                c += 1;
            }
            if sum == n && c >= 2 {
                out.push(RepunitSolution { r, b, c });
            }
            b += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        assert!(factor(1).unwrap().factors().is_empty());
        assert_eq!(factor(63).unwrap().factors(), &[(3, 2), (7, 1)]);
        assert_eq!(
            factor(175_560).unwrap().factors(),
            &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)]
        );
        assert_eq!(factor(0), Err(NumError::Zero));
    }

    #[test]
    fn factor_large_inputs() {
        let f = factor(u64::MAX).unwrap();
        assert_eq!(f.recompose(), u64::MAX);
        assert!(f.primes().all(is_prime));
        // 2^61 - 1 is a Mersenne prime
        let m61 = (1u64 << 61) - 1;
        assert_eq!(factor(m61).unwrap().factors(), &[(m61, 1)]);
        assert_eq!(factor(1 << 63).unwrap().factors(), &[(2, 63)]);
    }

    #[test]
    fn primality_edge_cases() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        // strong pseudoprime to every prime base up to 23
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn prime_set_examples() {
        assert_eq!(prime_set(15, false).unwrap(), BTreeSet::from([3, 5]));
        assert_eq!(prime_set(16 + 1, true).unwrap(), BTreeSet::from([17]));
        assert_eq!(prime_set(12, true).unwrap(), BTreeSet::from([3]));
        assert!(prime_set(1, false).unwrap().is_empty());
    }

    #[test]
    fn ppd_examples() {
        assert_eq!(ppd(2, 6).unwrap(), None);
        assert_eq!(ppd(2, 4).unwrap(), Some(BigUint::from(5u32)));
        assert_eq!(ppd(3, 2).unwrap(), None);
        assert_eq!(ppd(2, 1).unwrap(), None);
        assert_eq!(ppd(4, 2), Err(NumError::NotPrime(4)));
        assert_eq!(ppd(3, 0), Err(NumError::ZeroExponent));
    }

    #[test]
    fn ppd_beyond_u64() {
        // the primitive part of 19^19 - 1 is a 24-digit prime
        let t = ppd(19, 19).unwrap().unwrap();
        assert!(t > BigUint::from(u64::MAX));
        assert_eq!((BigUint::from(19u32).pow(19) - 1u32) % &t, BigUint::zero());
    }

    #[test]
    fn repunit_examples() {
        assert_eq!(solve_repunit(6, 6), vec![RepunitSolution { r: 5, b: 1, c: 2 }]);
        assert_eq!(
            solve_repunit(31, 31),
            vec![
                RepunitSolution { r: 2, b: 1, c: 5 },
                RepunitSolution { r: 5, b: 1, c: 3 }
            ]
        );
        assert_eq!(solve_repunit(7, 7), vec![RepunitSolution { r: 2, b: 1, c: 3 }]);
        assert!(solve_repunit(1, 10).is_empty());
    }

    #[test]
    fn repunit_respects_r_max() {
        assert_eq!(solve_repunit(31, 3), vec![RepunitSolution { r: 2, b: 1, c: 5 }]);
        // 21 = 1 + 4 + 16 = 1 + 2^2 + 2^4
        assert_eq!(solve_repunit(21, 21), vec![RepunitSolution { r: 2, b: 2, c: 3 }]);
    }
}
