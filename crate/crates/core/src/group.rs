//! Finitely generated commutative groups as products of cyclic groups,
//! their elements, and primary (Sylow) decomposition with explicit CRT maps.
//!
//! A group is an ordered list of moduli `(q_1, ..., q_n)` with `q_i >= 0`;
//! `q_i = 0` encodes the integers and `q_i = 1` a trivial dummy factor.
//! The order of the moduli is significant: difference operators and all
//! degree notions are defined coordinatewise, so moduli are never reordered.

use crate::arith::{factorize, mod_inverse};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;

/// A finitely generated commutative group `Z_{q_1} x ... x Z_{q_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    moduli: Vec<u64>,
}

impl Group {
    /// Builds a group from its moduli. The list must be non-empty; the
    /// order of the moduli is preserved verbatim.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidInput("a group needs at least one modulus".into()));
        }
        Ok(Group { moduli })
    }

    /// Convenience constructor for the cyclic group `Z_q`.
    pub fn cyclic(q: u64) -> Self {
        Group { moduli: vec![q] }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of coordinates (including dummy factors).
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// True iff every modulus is at least 1, i.e. no integer factor.
    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&q| q >= 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.iter().all(|&q| q == 1)
    }

    /// The order of the group; `None` when some factor is infinite.
    pub fn order(&self) -> Option<u64> {
        let mut n = 1u64;
        for &q in &self.moduli {
            if q == 0 {
                return None;
            }
            n = n.checked_mul(q).expect("group order exceeds u64");
        }
        Some(n)
    }

    /// The identity element.
    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coords: vec![0; self.rank()],
        }
    }

    /// Builds the element with the given coordinates, reducing each finite
    /// coordinate to its canonical representative in `[0, q_i)`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Mismatch(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        Ok(GroupElement {
            group: self.clone(),
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &q)| reduce(c, q))
                .collect(),
        })
    }

    /// The generator `e_i`: 1 in coordinate `i` (zero-based), 0 elsewhere.
    /// When `q_i = 1` this is the zero element.
    pub fn unit_vector(&self, i: usize) -> Result<GroupElement> {
        if i >= self.rank() {
            return Err(Error::OutOfRange(format!(
                "coordinate {i} in a rank-{} group",
                self.rank()
            )));
        }
        let mut coords = vec![0i64; self.rank()];
        coords[i] = reduce(1, self.moduli[i]);
        Ok(GroupElement { group: self.clone(), coords })
    }

    /// All elements of a finite group in lexicographic order on canonical
    /// coordinates (first coordinate most significant).
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        let order = self
            .order()
            .ok_or_else(|| Error::Unsupported("cannot enumerate an infinite group".into()))?;
        let mut out = Vec::with_capacity(order as usize);
        let mut coords = vec![0i64; self.rank()];
        loop {
            out.push(GroupElement { group: self.clone(), coords: coords.clone() });
            // mixed-radix increment, last coordinate fastest
            let mut i = self.rank();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coords[i] += 1;
                if (coords[i] as u64) < self.moduli[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    /// Index of a canonical element in the `enumerate` order.
    pub fn index_of(&self, x: &GroupElement) -> usize {
        assert_eq!(self, &x.group, "element belongs to a different group");
        let mut idx = 0usize;
        for (c, &q) in x.coords.iter().zip(&self.moduli) {
            idx = idx * q as usize + *c as usize;
        }
        idx
    }

    /// Inverse of `index_of`, valid for finite groups.
    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0i64; self.rank()];
        for i in (0..self.rank()).rev() {
            let q = self.moduli[i] as usize;
            coords[i] = (index % q) as i64;
            index /= q;
        }
        GroupElement { group: self.clone(), coords }
    }

    /// Decomposition of a finite group into its primary components, over
    /// exactly the primes dividing the order.
    pub fn primary_decomposition(&self) -> Result<PrimaryDecomposition> {
        let order = self.order().ok_or_else(|| {
            Error::Unsupported("primary decomposition requires a finite group".into())
        })?;
        let primes: Vec<u64> = factorize(order).into_iter().map(|(p, _)| p).collect();
        PrimaryDecomposition::over_primes(self, &primes)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|q| q.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn reduce(c: i64, q: u64) -> i64 {
    if q == 0 {
        c
    } else {
        c.rem_euclid(q as i64)
    }
}

/// An element of a [`Group`], stored as the canonical representative:
/// `0 <= coord_i < q_i` whenever `q_i >= 1`, unrestricted integers on
/// infinite factors. Equality is representative equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    group: Group,
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinatewise sum, canonically reduced. Panics if the elements do
    /// not belong to the same group.
    pub fn add(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.group, other.group, "sum of elements of different groups");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.group.moduli())
            .map(|((&a, &b), &q)| reduce(a.checked_add(b).expect("coordinate overflow"), q))
            .collect();
        GroupElement { group: self.group.clone(), coords }
    }

    pub fn neg(&self) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &q)| reduce(a.checked_neg().expect("coordinate overflow"), q))
            .collect();
        GroupElement { group: self.group.clone(), coords }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    /// Action of an integer scalar: `k * x` coordinatewise. On a finite
    /// coordinate the scalar is reduced modulo `q_i` first, so arbitrarily
    /// large scalars never produce big intermediates.
    pub fn scalar_mul_big(&self, k: &BigInt) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &q)| {
                if q == 0 {
                    let exact = k * BigInt::from(a);
                    i64::try_from(exact).expect("integer coordinate overflow")
                } else {
                    let kr = crate::arith::big_mod_u64(k, q);
                    ((kr as u128 * a as u128) % q as u128) as i64
                }
            })
            .collect();
        GroupElement { group: self.group.clone(), coords }
    }

    pub fn scalar_mul(&self, k: i64) -> GroupElement {
        self.scalar_mul_big(&BigInt::from(k))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Primary decomposition of a finite group: one component per prime, each
/// collecting the p-parts of every modulus (rank is preserved, with dummy
/// factors `Z_1` where a modulus has no p-part), plus the CRT data needed
/// to project and reassemble elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    group: Group,
    primes: Vec<u64>,
    components: Vec<Group>,
    /// crt_basis[i][j]: the residue b mod q_i with b = 1 mod (p_j-part of q_i)
    /// and b = 0 mod every other prime part, so coordinate i reassembles as
    /// x_i = sum_j r_{i,j} * b_{i,j} mod q_i.
    crt_basis: Vec<Vec<u64>>,
}

impl PrimaryDecomposition {
    /// Decomposes over the given ascending list of distinct primes, which
    /// must cover every prime dividing the group order. Primes that do not
    /// divide the order yield all-dummy components.
    pub fn over_primes(group: &Group, primes: &[u64]) -> Result<Self> {
        let order = group.order().ok_or_else(|| {
            Error::Unsupported("primary decomposition requires a finite group".into())
        })?;
        for w in primes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput("primes must be ascending and distinct".into()));
            }
        }
        for &p in primes {
            if !crate::arith::is_prime(p) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
        }
        {
            let mut rest = order;
            for &p in primes {
                while rest % p == 0 {
                    rest /= p;
                }
            }
            if rest != 1 {
                return Err(Error::InvalidInput(format!(
                    "prime list misses a divisor of the group order {order}"
                )));
            }
        }

        let n = group.rank();
        let mut components = Vec::with_capacity(primes.len());
        let mut parts = vec![vec![1u64; primes.len()]; n]; // p_j-part of q_i
        for (j, &p) in primes.iter().enumerate() {
            let mut moduli = Vec::with_capacity(n);
            for (i, &q) in group.moduli().iter().enumerate() {
                let mut part = 1u64;
                let mut rest = q;
                while rest % p == 0 {
                    part *= p;
                    rest /= p;
                }
                parts[i][j] = part;
                moduli.push(part);
            }
            components.push(Group { moduli });
        }

        let mut crt_basis = vec![vec![0u64; primes.len()]; n];
        for (i, &q) in group.moduli().iter().enumerate() {
            for j in 0..primes.len() {
                let m = parts[i][j];
                if m == 1 {
                    crt_basis[i][j] = 0;
                    continue;
                }
                let cof = q / m;
                let inv = mod_inverse(cof % m, m)
                    .expect("cofactor is coprime to the prime part");
                crt_basis[i][j] = ((cof as u128 * inv as u128) % q as u128) as u64;
            }
        }

        Ok(PrimaryDecomposition {
            group: group.clone(),
            primes: primes.to_vec(),
            components,
            crt_basis,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn components(&self) -> &[Group] {
        &self.components
    }

    pub fn component(&self, j: usize) -> Result<&Group> {
        self.components
            .get(j)
            .ok_or_else(|| Error::OutOfRange(format!("prime index {j} of {}", self.primes.len())))
    }

    /// The p_j-coordinate of `x` under the CRT identification: each
    /// coordinate of `x` reduced to the p_j-part of its modulus.
    pub fn project(&self, x: &GroupElement, j: usize) -> Result<GroupElement> {
        if x.group() != &self.group {
            return Err(Error::Mismatch("element is not in the decomposed group".into()));
        }
        let component = self.component(j)?;
        let coords: Vec<i64> = x
            .coords()
            .iter()
            .zip(component.moduli())
            .map(|(&c, &m)| c.rem_euclid(m as i64))
            .collect();
        component.element(&coords)
    }

    /// Inverse of projecting to every component: CRT-reassembles one part
    /// per prime into an element of the original group.
    pub fn reassemble(&self, parts: &[GroupElement]) -> Result<GroupElement> {
        if parts.len() != self.primes.len() {
            return Err(Error::Mismatch(format!(
                "expected {} components, got {}",
                self.primes.len(),
                parts.len()
            )));
        }
        for (j, part) in parts.iter().enumerate() {
            if part.group() != &self.components[j] {
                return Err(Error::Mismatch(format!(
                    "component {j} lives in the wrong group"
                )));
            }
        }
        let n = self.group.rank();
        let mut coords = vec![0i64; n];
        for (i, slot) in coords.iter_mut().enumerate() {
            let q = self.group.moduli()[i];
            let mut acc = 0u128;
            for (j, part) in parts.iter().enumerate() {
                let r = part.coords()[i] as u128;
                acc = (acc + r * self.crt_basis[i][j] as u128) % q as u128;
            }
            *slot = acc as i64;
        }
        self.group.element(&coords)
    }
}
