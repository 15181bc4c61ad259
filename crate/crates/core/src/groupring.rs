//! Arithmetic in the group ring `Z_m[G]` for finite commutative `G`,
//! direct computation of the nilpotency degree of the augmentation ideal,
//! and the cyclic quotient-ring kernel `Z_m[x]/(x^n - 1)`.
//!
//! Everything here is computed from raw convolutions; no closed-form degree
//! formula enters, which is what makes this module usable as an independent
//! cross-check.

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use std::collections::HashSet;

/// An element of `Z_m[G]`: a dense array of residues mod `m`, indexed by
/// [`Group::enumerate`] order. Multiplication is convolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    modulus: u64,
    group: Group,
    coeffs: Vec<u64>,
}

impl GroupRingElement {
    pub fn zero(modulus: u64, group: &Group) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidInput("group ring modulus must be at least 2".into()));
        }
        let order = group
            .order()
            .ok_or_else(|| Error::Unsupported("group rings here require a finite group".into()))?;
        Ok(GroupRingElement {
            modulus,
            group: group.clone(),
            coeffs: vec![0; order as usize],
        })
    }

    /// The basis element concentrated at `at`.
    pub fn delta(modulus: u64, at: &GroupElement) -> Result<Self> {
        let mut e = GroupRingElement::zero(modulus, at.group())?;
        e.coeffs[at.group().index_of(at)] = 1 % modulus;
        Ok(e)
    }

    /// The ring identity: the basis element at the group identity.
    pub fn one(modulus: u64, group: &Group) -> Result<Self> {
        GroupRingElement::delta(modulus, &group.zero())
    }

    /// The generator difference `x_{e_i} - 1`.
    pub fn generator_difference(modulus: u64, group: &Group, i: usize) -> Result<Self> {
        let gen = group.unit_vector(i)?;
        Ok(GroupRingElement::delta(modulus, &gen)?.sub(&GroupRingElement::one(modulus, group)?))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, at: &GroupElement) -> u64 {
        self.coeffs[self.group.index_of(at)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b, m| (a + b) % m)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b, m| (a + m - b) % m)
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64, u64) -> u64) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!(self.group, other.group, "mixed groups");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b, self.modulus))
            .collect();
        GroupRingElement { modulus: self.modulus, group: self.group.clone(), coeffs }
    }

    /// Convolution product: `(ab)(h) = sum_g a(g) b(h - g)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus || self.group != other.group {
            return Err(Error::Mismatch("group ring elements over different rings".into()));
        }
        let elems = self.group.enumerate()?;
        let mut coeffs = vec![0u64; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = self.group.index_of(&elems[i].add(&elems[j]));
                coeffs[k] = ((coeffs[k] as u128 + a as u128 * b as u128)
                    % self.modulus as u128) as u64;
            }
        }
        Ok(GroupRingElement { modulus: self.modulus, group: self.group.clone(), coeffs })
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = GroupRingElement::one(self.modulus, &self.group)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// The augmentation: the sum of all coefficients, a ring homomorphism
    /// onto `Z_m`.
    pub fn augmentation(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(0u64, |acc, &c| ((acc as u128 + c as u128) % self.modulus as u128) as u64)
    }
}

/// Cyclic convolution of two coefficient arrays of equal length, mod `m`.
pub(crate) fn cyclic_mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let mut out = vec![0u64; n];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let k = (i + j) % n;
            out[k] = ((out[k] as u128 + ai as u128 * bj as u128) % m as u128) as u64;
        }
    }
    out
}

/// `(x - 1)^delta` in `Z_{p^beta}[x]/(x^{p^alpha} - 1)` by square-and-multiply
/// with cyclic convolution. Returns the `p^alpha` residue coefficients.
pub fn quotient_power(p: u64, alpha: u32, beta: u32, delta: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if alpha == 0 || beta == 0 {
        return Err(Error::InvalidInput("alpha and beta must be positive".into()));
    }
    let len = p
        .checked_pow(alpha)
        .filter(|&l| l <= 1 << 20)
        .ok_or_else(|| Error::InvalidInput("p^alpha is too large".into()))? as usize;
    let m = p
        .checked_pow(beta)
        .ok_or_else(|| Error::InvalidInput("p^beta overflows".into()))?;

    let mut base = vec![0u64; len];
    base[0] = m - 1;
    base[1] = 1;
    let mut acc = vec![0u64; len];
    acc[0] = 1;
    let mut exp = delta;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = cyclic_mul(&acc, &base, m);
        }
        exp >>= 1;
        if exp > 0 {
            base = cyclic_mul(&base, &base, m);
        }
    }
    Ok(acc)
}

/// p-adic valuation of a residue mod `p^cap`, capped at `cap` (the residue 0
/// gets the cap).
fn residue_valuation(mut r: u64, p: u64, cap: u32) -> u32 {
    if r == 0 {
        return cap;
    }
    let mut v = 0;
    while r.is_multiple_of(p) && v < cap {
        r /= p;
        v += 1;
    }
    v
}

/// For one cyclic factor `Z_q` inside `Z_{p^e}[G]`: the largest exponent d
/// such that `(x - 1)^d` (reduced mod `x^q - 1` and `p^e`) still has a
/// coefficient of p-adic valuation at most v, for each budget v < e.
///
/// Powers are walked one multiplication at a time; the minimum coefficient
/// valuation never decreases, so the thresholds are well defined. If the
/// power sequence cycles before vanishing the ideal is not nilpotent and an
/// error is returned.
fn difference_power_thresholds(q: u64, p: u64, e: u32) -> Result<Vec<u64>> {
    let m = p
        .checked_pow(e)
        .ok_or_else(|| Error::InvalidInput("prime power overflows".into()))?;
    let len = q as usize;
    let mut poly = vec![0u64; len];
    poly[0] = 1 % m;
    let mut base = vec![0u64; len];
    base[0] = (m - 1) % m;
    base[(1 % q) as usize] = (base[(1 % q) as usize] + 1) % m;

    let mut thresholds = vec![0u64; e as usize];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut d = 0u64;
    loop {
        let w = poly
            .iter()
            .map(|&c| residue_valuation(c, p, e))
            .min()
            .unwrap_or(e);
        if w >= e {
            return Ok(thresholds);
        }
        for v in w..e {
            thresholds[v as usize] = d;
        }
        if !seen.insert(poly.clone()) {
            return Err(Error::Inconsistency(format!(
                "augmentation ideal of Z_{m}[Z_{q}] is not nilpotent"
            )));
        }
        poly = cyclic_mul(&poly, &base, m);
        d += 1;
    }
}

/// Smallest nu such that every product of nu generator differences
/// `(x_{e_i} - 1)` vanishes in `Z_m[G]`.
///
/// Products of generator differences suffice because any `(g + h)`-difference
/// expands into generator differences. Each product factors coordinatewise
/// (the group ring of a product is the tensor product of the factor rings),
/// so its vanishing mod `p^e` is decided by summing per-coordinate
/// coefficient valuations; maximizing the total exponent over valuation
/// budgets is a small dynamic program instead of an enumeration of all
/// multi-indices, which keeps groups like sixteen copies of `Z_2` tractable.
pub fn nilpotency_oracle(m: u64, group: &Group) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidInput("modulus must be at least 2".into()));
    }
    group
        .order()
        .ok_or_else(|| Error::Unsupported("nilpotency oracle requires a finite group".into()))?;

    let mut nu = 1u64;
    for (p, e) in factorize(m) {
        let mut dp = vec![0u64; e as usize];
        for &q in group.moduli() {
            let thresholds = difference_power_thresholds(q, p, e)?;
            let mut next = vec![0u64; e as usize];
            for (v, slot) in next.iter_mut().enumerate() {
                *slot = (0..=v)
                    .map(|v1| dp[v - v1] + thresholds[v1])
                    .max()
                    .unwrap();
            }
            dp = next;
        }
        nu = nu.max(dp[e as usize - 1] + 1);
    }
    Ok(nu)
}
