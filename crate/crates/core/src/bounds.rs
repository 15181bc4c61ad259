//! Closed-form answers to "how large can a finite functional degree be":
//! the extremal degree of the indicator of zero between cyclic p-groups,
//! its product-group and product-codomain generalizations, the induced
//! nilpotency degree of the group-ring augmentation ideal, and the general
//! two-group verdict. Also the Taylor coefficients of the indicator, both
//! as exact alternating binomial sums and through quotient-ring reduction.

use crate::arith::{self, big_mod_u64, is_prime};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::groupring::quotient_power;
use crate::polyfract::{MultiIndex, Polyfract};
use num_bigint::BigInt;
use num_traits::Zero;

/// Parameters of a map family `Z_{p^a1} x ... x Z_{p^an} -> Z_{p^b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PGroupSpec {
    prime: u64,
    alphas: Vec<u32>,
    beta: u32,
}

impl PGroupSpec {
    pub fn new(prime: u64, alphas: Vec<u32>, beta: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::InvalidInput(format!("{prime} is not prime")));
        }
        if alphas.is_empty() || alphas.contains(&0) || beta == 0 {
            return Err(Error::InvalidInput("exponents must be positive".into()));
        }
        for &a in &alphas {
            arith::checked_pow(prime, a)
                .ok_or_else(|| Error::InvalidInput("p^alpha overflows".into()))?;
        }
        arith::checked_pow(prime, beta)
            .ok_or_else(|| Error::InvalidInput("p^beta overflows".into()))?;
        Ok(PGroupSpec { prime, alphas, beta })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// The domain group `Z_{p^a1} x ... x Z_{p^an}`.
    pub fn domain(&self) -> Group {
        Group::new(self.alphas.iter().map(|&a| self.prime.pow(a)).collect()).unwrap()
    }

    /// The codomain ring modulus `p^beta`.
    pub fn codomain_modulus(&self) -> u64 {
        self.prime.pow(self.beta)
    }
}

/// Largest finite functional degree verdict for maps between two finite
/// groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxDegreeVerdict {
    /// One of the groups is trivial; every map is constant.
    Trivial,
    /// The orders are coprime; only constant maps have finite degree.
    ConstantsOnly,
    /// Orders share a prime; the largest finite degree is this bound and it
    /// is attained.
    Bound(u64),
}

impl MaxDegreeVerdict {
    pub fn bound(&self) -> Option<u64> {
        match self {
            MaxDegreeVerdict::Bound(b) => Some(*b),
            _ => None,
        }
    }
}

/// Integer representative of the Taylor coefficient of the zero-indicator
/// `Z_{p^alpha} -> Z_{p^beta}` at order `delta`: the alternating sum of
/// `C(delta, i)` over `i = delta (mod p^alpha)`, reduced mod `p^beta`.
///
/// The sum must be taken over exact integers and reduced once at the end:
/// its residue lives on cancellation across terms, so summing term-by-term
/// reductions of the binomials would be wrong whenever the sign flips.
pub fn c_hat(delta: u64, alpha: u32, p: u64, beta: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if alpha == 0 || beta == 0 {
        return Err(Error::InvalidInput("alpha and beta must be positive".into()));
    }
    let pa = arith::checked_pow(p, alpha)
        .ok_or_else(|| Error::InvalidInput("p^alpha overflows".into()))?;
    let pb = arith::checked_pow(p, beta)
        .ok_or_else(|| Error::InvalidInput("p^beta overflows".into()))?;

    let mut sum = BigInt::zero();
    let mut row = BigInt::from(1); // running C(delta, i)
    for i in 0..=delta {
        if i > 0 {
            row = row * BigInt::from(delta - i + 1) / BigInt::from(i);
        }
        if i % pa == delta % pa {
            if i % 2 == 0 {
                sum += &row;
            } else {
                sum -= &row;
            }
        }
    }
    Ok(big_mod_u64(&sum, pb))
}

/// The same coefficient through the quotient-ring route: the coefficient of
/// `x^(delta mod p^alpha)` in `(1 - x)^delta` reduced modulo
/// `(x^{p^alpha} - 1, p^beta)`. The kernel computes powers of `x - 1`, so
/// odd `delta` flips the sign of the extracted coefficient.
pub fn c_hat_via_reduction(delta: u64, alpha: u32, p: u64, beta: u32) -> Result<u64> {
    let pa = arith::checked_pow(p, alpha)
        .ok_or_else(|| Error::InvalidInput("p^alpha overflows".into()))?;
    let pb = arith::checked_pow(p, beta)
        .ok_or_else(|| Error::InvalidInput("p^beta overflows".into()))?;
    let coeffs = quotient_power(p, alpha, beta, delta)?;
    let c = coeffs[(delta % pa) as usize];
    Ok(if delta.is_multiple_of(2) { c } else { (pb - c) % pb })
}

/// Largest finite degree of a map `Z_{p^alpha} -> Z_{p^beta}`:
/// `beta p^alpha - (beta - 1) p^(alpha - 1) - 1`, attained by the indicator
/// of zero.
pub fn max_degree_cyclic(p: u64, alpha: u32, beta: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if alpha == 0 || beta == 0 {
        return Err(Error::InvalidInput("alpha and beta must be positive".into()));
    }
    let pa = arith::checked_pow(p, alpha)
        .ok_or_else(|| Error::InvalidInput("p^alpha overflows".into()))?;
    Ok(beta as u64 * pa - (beta as u64 - 1) * (pa / p) - 1)
}

/// Largest finite degree of maps `Z_{p^a1} x ... x Z_{p^an} -> Z_{p^beta}`:
/// `sum_j p^(a_j) - n + (beta - 1)(p - 1) p^(a_max - 1)`.
pub fn max_degree_p_group(spec: &PGroupSpec) -> u64 {
    let p = spec.prime;
    let n = spec.alphas.len() as u64;
    let sum: u64 = spec.alphas.iter().map(|&a| p.pow(a)).sum();
    let a_max = *spec.alphas.iter().max().unwrap();
    sum - n + (spec.beta as u64 - 1) * (p - 1) * p.pow(a_max - 1)
}

/// Product codomains `Z_{p^b1} x ... x Z_{p^bt}`: the component with the
/// largest exponent dominates, so the bound is the single-codomain formula
/// at `beta_max`.
pub fn max_degree_p_to_product(p: u64, alphas: &[u32], betas: &[u32]) -> Result<u64> {
    if betas.is_empty() {
        return Err(Error::InvalidInput("at least one codomain exponent is required".into()));
    }
    let beta_max = *betas.iter().max().unwrap();
    let spec = PGroupSpec::new(p, alphas.to_vec(), beta_max)?;
    Ok(max_degree_p_group(&spec))
}

/// Nilpotency degree of the augmentation ideal of
/// `Z_{p^beta}[Z_{p^a1} x ... x Z_{p^an}]`: the largest finite degree plus
/// one.
pub fn nilpotency_degree(spec: &PGroupSpec) -> u64 {
    max_degree_p_group(spec) + 1
}

/// Per-prime bounds entering the general two-group verdict: for each prime
/// dividing `gcd(|A|, |B|)`, the product-to-product bound built from the
/// nontrivial prime-power factors on both sides.
pub fn per_prime_bounds(a: &Group, b: &Group) -> Result<Vec<(u64, u64)>> {
    let order_a = a
        .order()
        .ok_or_else(|| Error::Unsupported("degree bounds require finite groups".into()))?;
    let order_b = b
        .order()
        .ok_or_else(|| Error::Unsupported("degree bounds require finite groups".into()))?;
    let g = arith::gcd(order_a, order_b);
    let mut out = Vec::new();
    for (p, _) in arith::factorize(g) {
        let alphas: Vec<u32> = a
            .moduli()
            .iter()
            .map(|&q| p_adic_exponent(q, p))
            .filter(|&e| e > 0)
            .collect();
        let betas: Vec<u32> = b
            .moduli()
            .iter()
            .map(|&q| p_adic_exponent(q, p))
            .filter(|&e| e > 0)
            .collect();
        out.push((p, max_degree_p_to_product(p, &alphas, &betas)?));
    }
    Ok(out)
}

fn p_adic_exponent(mut q: u64, p: u64) -> u32 {
    let mut e = 0;
    while q > 0 && q.is_multiple_of(p) {
        q /= p;
        e += 1;
    }
    e
}

/// The general verdict for finite `A` and `B`: trivial groups admit only
/// constants, coprime orders admit only constants among finite-degree maps,
/// and otherwise the largest finite degree is the max of the per-prime
/// bounds.
pub fn max_degree_general(a: &Group, b: &Group) -> Result<MaxDegreeVerdict> {
    let order_a = a
        .order()
        .ok_or_else(|| Error::Unsupported("degree bounds require finite groups".into()))?;
    let order_b = b
        .order()
        .ok_or_else(|| Error::Unsupported("degree bounds require finite groups".into()))?;
    if order_a == 1 || order_b == 1 {
        return Ok(MaxDegreeVerdict::Trivial);
    }
    if arith::gcd(order_a, order_b) == 1 {
        return Ok(MaxDegreeVerdict::ConstantsOnly);
    }
    let best = per_prime_bounds(a, b)?
        .into_iter()
        .map(|(_, bound)| bound)
        .max()
        .unwrap();
    Ok(MaxDegreeVerdict::Bound(best))
}

/// The cap certifying termination of brute-force degree searches: any map
/// with finite degree between these groups has degree at most this value.
pub(crate) fn degree_cap(a: &Group, b: &Group) -> Result<u64> {
    Ok(match max_degree_general(a, b)? {
        MaxDegreeVerdict::Trivial | MaxDegreeVerdict::ConstantsOnly => 0,
        MaxDegreeVerdict::Bound(bound) => bound,
    })
}

/// The polyfract of the multivariate indicator of zero
/// `Z_{p^a1} x ... x Z_{p^an} -> Z_{p^beta}`: the tensor product of the
/// univariate expansions, whose order-`delta` coefficients are
/// [`c_hat`]`(delta, a_j, p, beta)`.
pub fn lagrange_coefficients(p: u64, alphas: &[u32], beta: u32) -> Result<Polyfract> {
    let spec = PGroupSpec::new(p, alphas.to_vec(), beta)?;
    let codomain = Group::cyclic(spec.codomain_modulus());
    let mut acc: Option<Polyfract> = None;
    for &alpha in alphas {
        let top = max_degree_cyclic(p, alpha, beta)?;
        let mut terms = Vec::new();
        for delta in 0..=top {
            let c = c_hat(delta, alpha, p, beta)?;
            if c != 0 {
                terms.push((
                    MultiIndex::new(vec![delta as u32]),
                    codomain.element(&[c as i64])?,
                ));
            }
        }
        let univariate = Polyfract::from_terms(1, &codomain, terms)?;
        acc = Some(match acc {
            None => univariate,
            Some(prev) => prev.tensor_product(&univariate)?,
        });
    }
    Ok(acc.unwrap())
}
