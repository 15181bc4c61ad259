//! Polyfracts: finite linear combinations of products of binomial functions
//! `C(X_i, d_i)` with coefficients in a commutative group. These play the
//! role polynomials play over rings: a map between finite commutative
//! groups has finite functional degree exactly when it is given by a
//! periodic polyfract, and then total/partial degree of the term
//! representation equal functional/partial functional degree.
//!
//! Canonical form: no stored coefficient is zero. Substitution into the
//! symbolic variables is injective on canonical polyfracts, so structural
//! equality is functional equality.

use crate::arith::binomial_int;
use crate::calculus::{Degree, FunctionTable};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent tuple of a monofract. Ordered lexicographically; the
/// componentwise partial order is exposed separately as [`MultiIndex::dominates`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree: the sum of the exponents.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(&a, &b)| a >= b)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Value of the monofract `prod_i C(x_i, d_i)` at an integer point. Each
/// factor is `x(x-1)...(x-d+1)/d!`, an integer for every integer `x`.
pub fn monofract_value(x: &[i64], delta: &MultiIndex) -> BigInt {
    assert_eq!(x.len(), delta.len(), "point and exponent tuple have different lengths");
    let mut acc = BigInt::one();
    for (&xi, &di) in x.iter().zip(delta.exponents()) {
        let factor = binomial_int(xi, di);
        if factor.is_zero() {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// A finite association of multi-indices to nonzero codomain elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyfract {
    n_vars: usize,
    codomain: Group,
    terms: BTreeMap<MultiIndex, GroupElement>,
}

impl Polyfract {
    pub fn zero(n_vars: usize, codomain: &Group) -> Self {
        Polyfract { n_vars, codomain: codomain.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, value: GroupElement) -> Self {
        let codomain = value.group().clone();
        let mut p = Polyfract::zero(n_vars, &codomain);
        if !value.is_zero() {
            p.terms.insert(MultiIndex::new(vec![0; n_vars]), value);
        }
        p
    }

    /// Builds a canonical polyfract: duplicate multi-indices are summed,
    /// zero coefficients dropped.
    pub fn from_terms(
        n_vars: usize,
        codomain: &Group,
        terms: impl IntoIterator<Item = (MultiIndex, GroupElement)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<MultiIndex, GroupElement> = BTreeMap::new();
        for (delta, coeff) in terms {
            if delta.len() != n_vars {
                return Err(Error::Mismatch(format!(
                    "multi-index {delta} in a {n_vars}-variable polyfract"
                )));
            }
            if coeff.group() != codomain {
                return Err(Error::Mismatch(format!(
                    "coefficient {coeff} does not live in the codomain {codomain}"
                )));
            }
            match map.remove(&delta) {
                None => {
                    map.insert(delta, coeff);
                }
                Some(prev) => {
                    map.insert(delta, prev.add(&coeff));
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polyfract { n_vars, codomain: codomain.clone(), terms: map })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GroupElement)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient at `delta` (zero when the term is absent).
    pub fn coefficient(&self, delta: &MultiIndex) -> GroupElement {
        self.terms
            .get(delta)
            .cloned()
            .unwrap_or_else(|| self.codomain.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficientwise sum, re-canonicalized. Panics if variable counts or
    /// codomains differ.
    pub fn add(&self, other: &Polyfract) -> Polyfract {
        assert_eq!(self.n_vars, other.n_vars, "sum of polyfracts in different variable counts");
        assert_eq!(self.codomain, other.codomain, "sum of polyfracts over different codomains");
        let mut terms = self.terms.clone();
        for (delta, coeff) in &other.terms {
            match terms.remove(delta) {
                None => {
                    terms.insert(delta.clone(), coeff.clone());
                }
                Some(prev) => {
                    let sum = prev.add(coeff);
                    if !sum.is_zero() {
                        terms.insert(delta.clone(), sum);
                    }
                }
            }
        }
        Polyfract { n_vars: self.n_vars, codomain: self.codomain.clone(), terms }
    }

    pub fn neg(&self) -> Polyfract {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.clone(), c.neg()))
            .collect();
        Polyfract { n_vars: self.n_vars, codomain: self.codomain.clone(), terms }
    }

    pub fn sub(&self, other: &Polyfract) -> Polyfract {
        self.add(&other.neg())
    }

    /// Substitutes an integer point: `sum_delta b_delta * prod C(x_i, d_i)`,
    /// the integer scalars acting on the codomain by repeated addition.
    pub fn evaluate(&self, x: &[i64]) -> GroupElement {
        assert_eq!(x.len(), self.n_vars, "evaluation point has the wrong arity");
        let mut acc = self.codomain.zero();
        for (delta, coeff) in &self.terms {
            let scalar = monofract_value(x, delta);
            if scalar.is_zero() {
                continue;
            }
            acc = acc.add(&coeff.scalar_mul_big(&scalar));
        }
        acc
    }

    /// Symbolic forward difference along variable `i`: by Pascal's rule each
    /// term's exponent drops by one in coordinate `i`, and terms constant in
    /// that variable vanish.
    pub fn delta_symbolic(&self, i: usize) -> Result<Polyfract> {
        if i >= self.n_vars {
            return Err(Error::OutOfRange(format!(
                "variable {i} in a {}-variable polyfract",
                self.n_vars
            )));
        }
        let terms = self
            .terms
            .iter()
            .filter(|(d, _)| d.exponents()[i] > 0)
            .map(|(d, c)| {
                let mut e = d.exponents().to_vec();
                e[i] -= 1;
                (MultiIndex::new(e), c.clone())
            })
            .collect();
        Ok(Polyfract { n_vars: self.n_vars, codomain: self.codomain.clone(), terms })
    }

    /// Total degree: the largest exponent sum over stored terms; 0 for the
    /// zero polyfract.
    pub fn deg(&self) -> u64 {
        self.terms.keys().map(|d| d.total()).max().unwrap_or(0)
    }

    /// Partial degree in variable `i`; 0 for the zero polyfract.
    pub fn deg_i(&self, i: usize) -> Result<u64> {
        if i >= self.n_vars {
            return Err(Error::OutOfRange(format!(
                "variable {i} in a {}-variable polyfract",
                self.n_vars
            )));
        }
        Ok(self
            .terms
            .keys()
            .map(|d| d.exponents()[i] as u64)
            .max()
            .unwrap_or(0))
    }

    /// The unique polyfract representing `X -> P(X + a)`, computed per
    /// variable through `C(X + a, d) = sum_k C(a, d - k) C(X, k)`.
    pub fn shift(&self, a: &[i64]) -> Polyfract {
        assert_eq!(a.len(), self.n_vars, "shift vector has the wrong arity");
        let mut acc: BTreeMap<MultiIndex, GroupElement> = BTreeMap::new();
        for (delta, coeff) in &self.terms {
            let exps = delta.exponents();
            // walk the box k <= delta with a mixed-radix counter
            let mut k = vec![0u32; self.n_vars];
            loop {
                let mut scalar = BigInt::one();
                for i in 0..self.n_vars {
                    scalar *= binomial_int(a[i], exps[i] - k[i]);
                    if scalar.is_zero() {
                        break;
                    }
                }
                if !scalar.is_zero() {
                    let contribution = coeff.scalar_mul_big(&scalar);
                    if !contribution.is_zero() {
                        let key = MultiIndex::new(k.clone());
                        match acc.remove(&key) {
                            None => {
                                acc.insert(key, contribution);
                            }
                            Some(prev) => {
                                acc.insert(key, prev.add(&contribution));
                            }
                        }
                    }
                }
                // advance the counter; full wrap-around ends the box walk
                let mut done = true;
                for i in (0..self.n_vars).rev() {
                    k[i] += 1;
                    if k[i] <= exps[i] {
                        done = false;
                        break;
                    }
                    k[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polyfract { n_vars: self.n_vars, codomain: self.codomain.clone(), terms: acc }
    }

    /// True iff shifting any variable by its modulus fixes the polyfract
    /// (variables with modulus 0 are unconstrained).
    pub fn is_periodic(&self, periods: &Group) -> bool {
        assert_eq!(periods.rank(), self.n_vars, "period tuple has the wrong arity");
        for (i, &q) in periods.moduli().iter().enumerate() {
            if q == 0 {
                continue;
            }
            let mut a = vec![0i64; self.n_vars];
            a[i] = q as i64;
            if &self.shift(&a) != self {
                return false;
            }
        }
        true
    }

    /// Product across disjoint variable blocks: indices concatenate and
    /// coefficients multiply. Requires both factors to share a cyclic
    /// codomain, where multiplication of coefficients makes sense.
    pub fn tensor_product(&self, other: &Polyfract) -> Result<Polyfract> {
        if self.codomain != other.codomain || self.codomain.rank() != 1 {
            return Err(Error::Unsupported(
                "tensor products need a common cyclic coefficient ring".into(),
            ));
        }
        let m = self.codomain.moduli()[0];
        let n_vars = self.n_vars + other.n_vars;
        let mut terms = BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let mut exps = da.exponents().to_vec();
                exps.extend_from_slice(db.exponents());
                let a = ca.coords()[0];
                let b = cb.coords()[0];
                let prod = if m == 0 {
                    a.checked_mul(b).expect("integer coefficient overflow")
                } else {
                    // canonical coords are nonnegative below the modulus
                    ((a as u128 * b as u128) % m as u128) as i64
                };
                let coeff = self.codomain.element(&[prod])?;
                if !coeff.is_zero() {
                    terms.insert(MultiIndex::new(exps), coeff);
                }
            }
        }
        Ok(Polyfract { n_vars, codomain: self.codomain.clone(), terms })
    }
}

/// Discrete Taylor interpolation over the integers: given values of `f` on
/// the full grid `[0, d_1] x ... x [0, d_n]` (flattened with the last index
/// fastest, like [`Group::enumerate`]), returns the polyfract whose
/// coefficient at `delta <= d` is the iterated forward difference of `f`
/// of order `delta` taken at 0. The coefficients are computed by an
/// in-place difference tableau, one dimension at a time.
pub fn taylor_interpolate_z(values: &[GroupElement], box_degrees: &MultiIndex) -> Result<Polyfract> {
    let n = box_degrees.len();
    let sizes: Vec<usize> = box_degrees.exponents().iter().map(|&d| d as usize + 1).collect();
    let total: usize = sizes.iter().product();
    if values.len() != total {
        return Err(Error::Mismatch(format!(
            "grid has {} values but the box holds {total}",
            values.len()
        )));
    }
    let codomain = values[0].group().clone();
    if let Some(v) = values.iter().find(|v| v.group() != &codomain) {
        return Err(Error::Mismatch(format!("grid value {v} lives in the wrong group")));
    }

    let mut work: Vec<GroupElement> = values.to_vec();
    for axis in 0..n {
        let s = sizes[axis];
        if s == 1 {
            continue;
        }
        let stride: usize = sizes[axis + 1..].iter().product();
        for base in 0..total {
            // visit each 1-dimensional line once, at its zero digit
            if !(base / stride).is_multiple_of(s) {
                continue;
            }
            for step in 1..s {
                for t in (step..s).rev() {
                    let hi = base + t * stride;
                    let lo = hi - stride;
                    work[hi] = work[hi].sub(&work[lo]);
                }
            }
        }
    }

    let mut terms = Vec::new();
    for (idx, coeff) in work.into_iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut rem = idx;
        let mut exps = vec![0u32; n];
        for i in (0..n).rev() {
            exps[i] = (rem % sizes[i]) as u32;
            rem /= sizes[i];
        }
        terms.push((MultiIndex::new(exps), coeff));
    }
    Polyfract::from_terms(n, &codomain, terms)
}

/// A polyfract together with periods it respects, i.e. a term
/// representation of a map from `Z_{q_1} x ... x Z_{q_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicPolyfract {
    polyfract: Polyfract,
    periods: Group,
}

impl PeriodicPolyfract {
    /// Pairs a polyfract with periods, verifying the periodicity symbolically.
    pub fn new(polyfract: Polyfract, periods: Group) -> Result<Self> {
        if periods.rank() != polyfract.n_vars() {
            return Err(Error::Mismatch(format!(
                "{} periods for a {}-variable polyfract",
                periods.rank(),
                polyfract.n_vars()
            )));
        }
        if !polyfract.is_periodic(&periods) {
            return Err(Error::InvalidInput(format!(
                "polyfract is not ({periods})-periodic"
            )));
        }
        Ok(PeriodicPolyfract { polyfract, periods })
    }

    pub fn polyfract(&self) -> &Polyfract {
        &self.polyfract
    }

    pub fn periods(&self) -> &Group {
        &self.periods
    }

    pub fn into_polyfract(self) -> Polyfract {
        self.polyfract
    }

    /// Tabulates the represented map on its finite domain by evaluating at
    /// the canonical representatives.
    pub fn to_table(&self) -> Result<FunctionTable> {
        let codomain = self.polyfract.codomain().clone();
        let values = self
            .periods
            .enumerate()?
            .iter()
            .map(|x| self.polyfract.evaluate(x.coords()))
            .collect();
        FunctionTable::new(self.periods.clone(), codomain, values)
    }
}

/// Interpolates a finite-degree table into its periodic polyfract: the map
/// is lifted to a periodic function on the integers, its partial degrees
/// bound the Taylor box, and the difference tableau over that box yields
/// the coefficients. Maps of infinite degree have no such representation
/// and are rejected.
pub fn interpolate_table(f: &FunctionTable) -> Result<PeriodicPolyfract> {
    let domain = f.domain().clone();
    let n = domain.rank();
    let mut box_degrees = vec![0u32; n];
    for (i, slot) in box_degrees.iter_mut().enumerate() {
        match f.pdeg(i)? {
            Degree::Finite(d) => {
                *slot = u32::try_from(d).expect("partial degree exceeds u32");
            }
            Degree::Infinite => {
                return Err(Error::NoRepresentation(format!(
                    "the map has infinite partial degree along coordinate {i}"
                )));
            }
        }
    }
    let box_index = MultiIndex::new(box_degrees.clone());
    let sizes: Vec<usize> = box_degrees.iter().map(|&d| d as usize + 1).collect();
    let total: usize = sizes.iter().product();
    let mut values = Vec::with_capacity(total);
    let mut counter = vec![0usize; n];
    for _ in 0..total {
        let coords: Vec<i64> = counter.iter().map(|&c| c as i64).collect();
        // Group::element reduces each coordinate, which is exactly the
        // periodic lift evaluated at the grid point
        values.push(f.get(&domain.element(&coords)?).clone());
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            counter[i] += 1;
            if counter[i] < sizes[i] {
                break;
            }
            counter[i] = 0;
        }
    }
    let polyfract = taylor_interpolate_z(&values, &box_index)?;
    PeriodicPolyfract::new(polyfract, domain)
}

/// The worked three-variable polyfract with codomain Z_2 x Z_9 x Z_7 x Z_7:
/// (1,0,0,0) C(x1,3) + (1,0,0,0) C(x1,1) + (0,6,0,0) C(x2,1) + (0,3,4,5).
#[cfg(test)]
pub(crate) fn worked_example_polyfract() -> Polyfract {
    let codomain = Group::new(vec![2, 9, 7, 7]).unwrap();
    let term = |d: &[u32], c: &[i64]| {
        (MultiIndex::new(d.to_vec()), codomain.element(c).unwrap())
    };
    Polyfract::from_terms(
        3,
        &codomain,
        vec![
            term(&[3, 0, 0], &[1, 0, 0, 0]),
            term(&[1, 0, 0], &[1, 0, 0, 0]),
            term(&[0, 1, 0], &[0, 6, 0, 0]),
            term(&[0, 0, 0], &[0, 3, 4, 5]),
        ],
    )
    .unwrap()
}
