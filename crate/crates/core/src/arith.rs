//! Small exact-integer helpers: gcd, modular inverses, factorization,
//! and binomial coefficients over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended Euclid on i128: returns (g, x, y) with a*x + b*y = g.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1 and m >= 1.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Prime factorization by trial division, ascending primes.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factorize(n) == vec![(n, 1)]
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Binomial coefficient C(n, k) for natural arguments; 0 when k > n.
pub(crate) fn binomial_nat(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut res = BigInt::one();
    for i in 0..k {
        res = res * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    res
}

/// Binomial function C(x, k) for any integer x and natural k:
/// x(x-1)...(x-k+1)/k!, which is always an integer.
pub(crate) fn binomial_int(x: i64, k: u32) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if x >= 0 {
        return binomial_nat(x as u64, k as u64);
    }
    // C(x, k) = (-1)^k C(k - 1 - x, k) for x < 0.
    let m = (k as i64 - 1 - x) as u64;
    let b = binomial_nat(m, k as u64);
    if k.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// Reduce a big integer into the canonical residue range [0, m).
pub(crate) fn big_mod_u64(v: &BigInt, m: u64) -> u64 {
    debug_assert!(m >= 1);
    let m_big = BigInt::from(m);
    let mut r = v % &m_big;
    if r.is_negative() {
        r += &m_big;
    }
    // fits by construction
    u64::try_from(r).unwrap()
}
