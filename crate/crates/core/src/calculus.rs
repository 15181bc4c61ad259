//! Dense function tables on finite groups, difference operators, and
//! brute-force functional/partial degree computation.
//!
//! This module is the ground-truth layer: degrees are computed by actually
//! iterating difference operators on tables, with termination certified by
//! the closed-form caps from [`crate::bounds`]. Nothing here consults a
//! term representation.

use crate::bounds;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, PrimaryDecomposition};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// A functional degree: a non-negative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

impl Degree {
    pub fn is_finite(&self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(*d),
            Degree::Infinite => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Total and per-coordinate degrees of one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub fdeg: Degree,
    pub pdeg: Vec<Degree>,
}

/// A total map from a finite group to a codomain group, stored as a dense
/// value table indexed by [`Group::enumerate`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    domain: Group,
    codomain: Group,
    values: Vec<GroupElement>,
}

impl FunctionTable {
    pub fn new(domain: Group, codomain: Group, values: Vec<GroupElement>) -> Result<Self> {
        let order = domain
            .order()
            .ok_or_else(|| Error::Unsupported("function tables need a finite domain".into()))?;
        if values.len() != order as usize {
            return Err(Error::Mismatch(format!(
                "table has {} values for a domain of order {order}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.group() != &codomain) {
            return Err(Error::Mismatch(format!(
                "value {v} does not live in the codomain {codomain}"
            )));
        }
        Ok(FunctionTable { domain, codomain, values })
    }

    pub fn from_fn(
        domain: Group,
        codomain: Group,
        f: impl FnMut(&GroupElement) -> GroupElement,
    ) -> Result<Self> {
        let values: Vec<GroupElement> = domain.enumerate()?.iter().map(f).collect();
        FunctionTable::new(domain, codomain, values)
    }

    pub fn zero(domain: Group, codomain: Group) -> Result<Self> {
        let z = codomain.zero();
        FunctionTable::from_fn(domain, codomain.clone(), |_| z.clone())
    }

    pub fn constant(domain: Group, value: GroupElement) -> Result<Self> {
        let codomain = value.group().clone();
        FunctionTable::from_fn(domain, codomain, |_| value.clone())
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn get(&self, x: &GroupElement) -> &GroupElement {
        &self.values[self.domain.index_of(x)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &FunctionTable) -> FunctionTable {
        assert_eq!(self.domain, other.domain, "sum of tables over different domains");
        assert_eq!(self.codomain, other.codomain, "sum of tables with different codomains");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        FunctionTable { domain: self.domain.clone(), codomain: self.codomain.clone(), values }
    }

    /// Difference along an arbitrary step: `x -> f(x + g) - f(x)`.
    pub fn delta_g(&self, g: &GroupElement) -> Result<FunctionTable> {
        if g.group() != &self.domain {
            return Err(Error::Mismatch("step element is not in the table's domain".into()));
        }
        let values = self
            .domain
            .enumerate()?
            .iter()
            .map(|x| self.get(&x.add(g)).sub(self.get(x)))
            .collect();
        Ok(FunctionTable {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            values,
        })
    }

    /// Forward difference along coordinate `i` (zero-based), i.e. the step
    /// is the i-th generator. Index arithmetic avoids re-enumerating.
    pub fn delta_i(&self, i: usize) -> Result<FunctionTable> {
        let n = self.domain.rank();
        if i >= n {
            return Err(Error::OutOfRange(format!("coordinate {i} in a rank-{n} domain")));
        }
        let moduli = self.domain.moduli();
        let q = moduli[i] as usize;
        let stride: usize = moduli[i + 1..].iter().map(|&m| m as usize).product();
        let block = stride * q;
        let mut values = Vec::with_capacity(self.values.len());
        for (idx, v) in self.values.iter().enumerate() {
            let digit = (idx / stride) % q;
            let shifted = if digit + 1 < q { idx + stride } else { idx + stride - block };
            values.push(self.values[shifted].sub(v));
        }
        Ok(FunctionTable {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            values,
        })
    }

    /// The univariate table `x -> f(a_1, ..., a_{i-1}, x, a_{i+1}, ..., a_n)`
    /// on the cyclic factor `Z_{q_i}`.
    pub fn section(&self, i: usize, a: &GroupElement) -> Result<FunctionTable> {
        if a.group() != &self.domain {
            return Err(Error::Mismatch("base point is not in the table's domain".into()));
        }
        let n = self.domain.rank();
        if i >= n {
            return Err(Error::OutOfRange(format!("coordinate {i} in a rank-{n} domain")));
        }
        let qi = self.domain.moduli()[i];
        let line = Group::cyclic(qi);
        let mut coords = a.coords().to_vec();
        let values = (0..qi as i64)
            .map(|x| {
                coords[i] = x;
                self.get(&self.domain.element(&coords).unwrap()).clone()
            })
            .collect();
        FunctionTable::new(line, self.codomain.clone(), values)
    }

    /// The functional degree: the smallest m such that every iterated
    /// difference of order m + 1 vanishes, or `Infinite` if an iterated
    /// difference of order cap + 1 survives (the cap certifies that any
    /// finite degree is at most the largest finite degree possible between
    /// the two groups).
    pub fn fdeg(&self) -> Result<Degree> {
        let cap = bounds::degree_cap(&self.domain, &self.codomain)?;
        if self.is_zero() {
            return Ok(Degree::Finite(0));
        }
        let n = self.domain.rank();
        // nonvanishing multi-indices are downward closed, so a level-by-level
        // sweep that only expands nonzero tables finds them all
        let mut frontier: HashMap<Vec<u32>, FunctionTable> = HashMap::new();
        frontier.insert(vec![0u32; n], self.clone());
        let mut reached = 0u64;
        for level in 1..=cap + 1 {
            let mut next: HashMap<Vec<u32>, FunctionTable> = HashMap::new();
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            for (delta, table) in &frontier {
                for i in 0..n {
                    let mut child = delta.clone();
                    child[i] += 1;
                    if !seen.insert(child.clone()) {
                        continue;
                    }
                    let diff = table.delta_i(i)?;
                    if !diff.is_zero() {
                        next.insert(child, diff);
                    }
                }
            }
            if next.is_empty() {
                return Ok(Degree::Finite(reached));
            }
            reached = level;
            frontier = next;
        }
        Ok(Degree::Infinite)
    }

    /// The i-th partial degree: the smallest m with the (m+1)-fold
    /// difference along coordinate i identically zero, or `Infinite` when
    /// the certified per-coordinate cap is exceeded.
    pub fn pdeg(&self, i: usize) -> Result<Degree> {
        let n = self.domain.rank();
        if i >= n {
            return Err(Error::OutOfRange(format!("coordinate {i} in a rank-{n} domain")));
        }
        // sections along coordinate i are maps from the cyclic factor, so
        // their largest possible finite degree caps the partial degree
        let cap = bounds::degree_cap(&Group::cyclic(self.domain.moduli()[i]), &self.codomain)?;
        let mut t = self.delta_i(i)?;
        for m in 0..=cap {
            if t.is_zero() {
                return Ok(Degree::Finite(m));
            }
            if m < cap {
                t = t.delta_i(i)?;
            }
        }
        Ok(Degree::Infinite)
    }

    pub fn degree_report(&self) -> Result<DegreeReport> {
        let fdeg = self.fdeg()?;
        let pdeg = (0..self.domain.rank())
            .map(|i| self.pdeg(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeReport { fdeg, pdeg })
    }

    /// Splits the map along the primary decompositions of its domain and
    /// codomain (over the primes of |A||B|) and checks whether, for every
    /// prime, the p-component of the output depends only on the p-component
    /// of the input. This decides finiteness of the functional degree.
    pub fn classify(&self) -> Result<Classification> {
        let order_a = self.domain.order().unwrap();
        let order_b = self.codomain.order().ok_or_else(|| {
            Error::Unsupported("classification requires a finite codomain".into())
        })?;
        let mut primes: Vec<u64> = crate::arith::factorize(order_a)
            .into_iter()
            .chain(crate::arith::factorize(order_b))
            .map(|(p, _)| p)
            .collect();
        primes.sort_unstable();
        primes.dedup();

        let domain_parts = PrimaryDecomposition::over_primes(&self.domain, &primes)?;
        let codomain_parts = PrimaryDecomposition::over_primes(&self.codomain, &primes)?;
        let elems = self.domain.enumerate()?;

        let mut components = Vec::with_capacity(primes.len());
        for j in 0..primes.len() {
            let comp_domain = domain_parts.component(j)?.clone();
            let comp_codomain = codomain_parts.component(j)?.clone();
            let comp_order = comp_domain.order().unwrap() as usize;
            let mut table: Vec<Option<GroupElement>> = vec![None; comp_order];
            let mut witness_rep: Vec<Option<&GroupElement>> = vec![None; comp_order];
            for x in &elems {
                let aj = domain_parts.project(x, j)?;
                let bj = codomain_parts.project(self.get(x), j)?;
                let slot = comp_domain.index_of(&aj);
                match &table[slot] {
                    None => {
                        table[slot] = Some(bj);
                        witness_rep[slot] = Some(x);
                    }
                    Some(prev) if *prev == bj => {}
                    Some(_) => {
                        let other = witness_rep[slot].unwrap();
                        let j1 = (0..primes.len())
                            .find(|&k| {
                                k != j
                                    && domain_parts.project(x, k).unwrap()
                                        != domain_parts.project(other, k).unwrap()
                            })
                            .expect("distinct inputs with equal projections everywhere");
                        return Ok(Classification {
                            primes: primes.clone(),
                            domain_parts,
                            codomain_parts,
                            verdict: Verdict::Infinite { witness: (primes[j1], primes[j]) },
                        });
                    }
                }
            }
            let values = table.into_iter().map(|v| v.unwrap()).collect();
            components.push(FunctionTable::new(comp_domain, comp_codomain, values)?);
        }

        Ok(Classification {
            primes,
            domain_parts,
            codomain_parts,
            verdict: Verdict::Finite { components },
        })
    }
}

/// The indicator of zero: maps 0 to the codomain element with every
/// coordinate 1 and everything else to 0. This is the map of largest
/// finite degree between p-groups to a common prime.
pub fn lagrange(domain: &Group, codomain: &Group) -> Result<FunctionTable> {
    let one = codomain.element(&vec![1; codomain.rank()])?;
    let zero = codomain.zero();
    FunctionTable::from_fn(domain.clone(), codomain.clone(), |x| {
        if x.is_zero() { one.clone() } else { zero.clone() }
    })
}

/// Outcome of [`FunctionTable::classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    primes: Vec<u64>,
    domain_parts: PrimaryDecomposition,
    codomain_parts: PrimaryDecomposition,
    verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The degree is finite; one component map per prime.
    Finite { components: Vec<FunctionTable> },
    /// The degree is infinite; `witness` is a pair (domain prime,
    /// codomain prime) whose interaction forces this.
    Infinite { witness: (u64, u64) },
}

impl Classification {
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn domain_parts(&self) -> &PrimaryDecomposition {
        &self.domain_parts
    }

    pub fn codomain_parts(&self) -> &PrimaryDecomposition {
        &self.codomain_parts
    }

    pub fn verdict(&self) -> &Verdict {
        &self.verdict
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.verdict, Verdict::Finite { .. })
    }

    pub fn components(&self) -> Option<&[FunctionTable]> {
        match &self.verdict {
            Verdict::Finite { components } => Some(components),
            Verdict::Infinite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<(u64, u64)> {
        match &self.verdict {
            Verdict::Finite { .. } => None,
            Verdict::Infinite { witness } => Some(*witness),
        }
    }
}

/// Iterator over every map between two finite groups, in a fixed
/// mixed-radix order; intended for exhaustive sweeps on small groups.
pub fn all_maps(domain: &Group, codomain: &Group) -> Result<AllMaps> {
    let order_a = domain
        .order()
        .ok_or_else(|| Error::Unsupported("domain must be finite".into()))?;
    let order_b = codomain
        .order()
        .ok_or_else(|| Error::Unsupported("codomain must be finite".into()))?;
    Ok(AllMaps {
        domain: domain.clone(),
        codomain: codomain.clone(),
        codomain_elems: codomain.enumerate()?,
        counter: Some(vec![0usize; order_a as usize]),
        radix: order_b as usize,
    })
}

pub struct AllMaps {
    domain: Group,
    codomain: Group,
    codomain_elems: Vec<GroupElement>,
    counter: Option<Vec<usize>>,
    radix: usize,
}

impl Iterator for AllMaps {
    type Item = FunctionTable;

    fn next(&mut self) -> Option<FunctionTable> {
        let counter = self.counter.as_mut()?;
        let values: Vec<GroupElement> = counter
            .iter()
            .map(|&k| self.codomain_elems[k].clone())
            .collect();
        let table = FunctionTable {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            values,
        };
        // advance
        let mut i = 0;
        loop {
            if i == counter.len() {
                self.counter = None;
                break;
            }
            counter[i] += 1;
            if counter[i] < self.radix {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
        Some(table)
    }
}

/// The worked three-variable map used across the crate's tests:
/// (x1, x2, x3) in Z_4 x Z_3 x Z_5 goes to
/// (C(x1,3) + C(x1,1) mod 2, 6 x2 + 3 mod 9, 4, 5) in Z_2 x Z_9 x Z_7 x Z_7.
#[cfg(test)]
pub(crate) fn worked_example_table() -> FunctionTable {
    let domain = Group::new(vec![4, 3, 5]).unwrap();
    let codomain = Group::new(vec![2, 9, 7, 7]).unwrap();
    let f1 = [0i64, 1, 0, 0]; // C(x,3) + C(x,1) mod 2 for x = 0..3
    let f2 = [3i64, 0, 6]; // 6x + 3 mod 9
    FunctionTable::from_fn(domain, codomain.clone(), |x| {
        let c = x.coords();
        codomain
            .element(&[f1[c[0] as usize], f2[c[1] as usize], 4, 5])
            .unwrap()
    })
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(moduli: &[u64]) -> Group {
        Group::new(moduli.to_vec()).unwrap()
    }

    fn table(domain: &[u64], codomain: &[u64], values: &[&[i64]]) -> FunctionTable {
        let d = g(domain);
        let c = g(codomain);
        let vals = values.iter().map(|v| c.element(v).unwrap()).collect();
        FunctionTable::new(d, c, vals).unwrap()
    }

    #[test]
    fn delta_along_arbitrary_steps() {
        // indicator of zero on Z_2, stepped by 1: constant 1
        let chi = table(&[2], &[2], &[&[1], &[0]]);
        let step = g(&[2]).element(&[1]).unwrap();
        assert_eq!(chi.delta_g(&step).unwrap(), table(&[2], &[2], &[&[1], &[1]]));

        // zero step annihilates anything
        let zero_step = g(&[2]).zero();
        assert!(chi.delta_g(&zero_step).unwrap().is_zero());

        // constants are annihilated by every step
        let c = FunctionTable::constant(g(&[2]), g(&[5]).element(&[3]).unwrap()).unwrap();
        assert!(c.delta_g(&step).unwrap().is_zero());

        // elements of a foreign group are rejected
        let foreign = g(&[3]).element(&[1]).unwrap();
        assert!(c.delta_g(&foreign).is_err());
    }

    #[test]
    fn coordinate_differences() {
        // f(x1, x2) = x1 on Z_2 x Z_2 -> Z_2
        let f = table(&[2, 2], &[2], &[&[0], &[0], &[1], &[1]]);
        assert_eq!(f.delta_i(0).unwrap(), table(&[2, 2], &[2], &[&[1], &[1], &[1], &[1]]));
        assert!(f.delta_i(1).unwrap().is_zero());
        assert!(f.delta_i(2).is_err());

        // indicator of zero on Z_4 -> Z_2
        let chi = table(&[4], &[2], &[&[1], &[0], &[0], &[0]]);
        assert_eq!(
            chi.delta_i(0).unwrap(),
            table(&[4], &[2], &[&[1], &[0], &[0], &[1]])
        );
    }

    #[test]
    fn delta_i_matches_delta_g_on_generators() {
        let f = table(&[3, 2], &[6], &[&[0], &[4], &[1], &[3], &[2], &[5]]);
        for i in 0..2 {
            let e = f.domain().unit_vector(i).unwrap();
            assert_eq!(f.delta_i(i).unwrap(), f.delta_g(&e).unwrap());
        }
    }

    #[test]
    fn functional_degree_of_indicators() {
        // iterated-difference ground truth, then the fdeg sweep
        let chi22 = table(&[2], &[2], &[&[1], &[0]]);
        assert!(!chi22.delta_i(0).unwrap().is_zero());
        assert!(chi22.delta_i(0).unwrap().delta_i(0).unwrap().is_zero());
        assert_eq!(chi22.fdeg().unwrap(), Degree::Finite(1));

        let chi24 = table(&[2], &[4], &[&[1], &[0]]);
        let d2 = chi24.delta_i(0).unwrap().delta_i(0).unwrap();
        assert_eq!(d2, table(&[2], &[4], &[&[2], &[2]]));
        assert!(d2.delta_i(0).unwrap().is_zero());
        assert_eq!(chi24.fdeg().unwrap(), Degree::Finite(2));

        // the identity "map" Z_2 -> Z_3 never dies under differences
        let ident = table(&[2], &[3], &[&[0], &[1]]);
        assert_eq!(ident.fdeg().unwrap(), Degree::Infinite);
    }

    #[test]
    fn degree_of_constants_and_zero() {
        let z = FunctionTable::zero(g(&[4, 3]), g(&[6])).unwrap();
        assert_eq!(z.fdeg().unwrap(), Degree::Finite(0));
        let c = FunctionTable::constant(g(&[4, 3]), g(&[6]).element(&[5]).unwrap()).unwrap();
        assert_eq!(c.fdeg().unwrap(), Degree::Finite(0));
        for i in 0..2 {
            assert_eq!(c.pdeg(i).unwrap(), Degree::Finite(0));
        }
    }

    #[test]
    fn partial_degrees() {
        let f = table(&[2, 2], &[2], &[&[0], &[0], &[1], &[1]]);
        assert_eq!(f.pdeg(1).unwrap(), Degree::Finite(0));
        assert_eq!(f.pdeg(0).unwrap(), Degree::Finite(1));

        let chi = table(&[4], &[2], &[&[1], &[0], &[0], &[0]]);
        assert_eq!(chi.pdeg(0).unwrap(), Degree::Finite(3));

        // a coordinate with no finite partial degree
        let ident = table(&[3], &[2], &[&[0], &[1], &[1]]);
        assert_eq!(ident.pdeg(0).unwrap(), Degree::Infinite);
    }

    #[test]
    fn sections() {
        let f = table(&[2, 2], &[2], &[&[0], &[0], &[1], &[1]]);
        let a = f.domain().element(&[1, 0]).unwrap();
        assert_eq!(f.section(1, &a).unwrap(), table(&[2], &[2], &[&[1], &[1]]));
        let origin = f.domain().zero();
        assert_eq!(f.section(0, &origin).unwrap(), table(&[2], &[2], &[&[0], &[1]]));

        // indicator of zero on Z_2 x Z_2: the line through (0, 1) misses 0
        let chi = table(&[2, 2], &[2], &[&[1], &[0], &[0], &[0]]);
        let base = chi.domain().element(&[0, 1]).unwrap();
        assert!(chi.section(0, &base).unwrap().is_zero());
    }

    #[test]
    fn lagrange_tables() {
        assert_eq!(
            lagrange(&g(&[2]), &g(&[2])).unwrap(),
            table(&[2], &[2], &[&[1], &[0]])
        );
        assert_eq!(
            lagrange(&g(&[2, 2]), &g(&[2])).unwrap(),
            table(&[2, 2], &[2], &[&[1], &[0], &[0], &[0]])
        );
        assert_eq!(
            lagrange(&g(&[3]), &g(&[9])).unwrap(),
            table(&[3], &[9], &[&[1], &[0], &[0]])
        );
        assert!(lagrange(&g(&[0]), &g(&[2])).is_err());
    }

    #[test]
    fn classification_of_coprime_pairs() {
        // maps Z_2 -> Z_3 have finite degree iff they are constant
        for f in all_maps(&g(&[2]), &g(&[3])).unwrap() {
            let constant = f.values()[0] == f.values()[1];
            assert_eq!(f.classify().unwrap().is_finite(), constant);
        }
    }

    #[test]
    fn classification_witness_names_the_interacting_primes() {
        let ident = table(&[2], &[3], &[&[0], &[1]]);
        let c = ident.classify().unwrap();
        assert!(!c.is_finite());
        assert_eq!(c.witness(), Some((2, 3)));
    }

    #[test]
    fn zero_map_classifies_with_zero_components() {
        let z = FunctionTable::zero(g(&[6]), g(&[6])).unwrap();
        let c = z.classify().unwrap();
        assert!(c.is_finite());
        for comp in c.components().unwrap() {
            assert!(comp.is_zero());
        }
    }

    #[test]
    fn worked_example_classifies_finite_with_expected_components() {
        let f = worked_example_table();
        let c = f.classify().unwrap();
        assert_eq!(c.primes(), &[2, 3, 5, 7]);
        assert!(c.is_finite());
        let comps = c.components().unwrap();
        // p = 2: depends on x1 only, through C(x1,3) + C(x1,1)
        assert_eq!(comps[0].domain().moduli(), &[4, 1, 1]);
        assert_eq!(comps[0].codomain().moduli(), &[2, 1, 1, 1]);
        // p = 5: the 5-part of the codomain is trivial, so the component is zero
        assert!(comps[2].is_zero());
        // p = 7: constant component (4, 5)
        assert_eq!(comps[3].fdeg().unwrap(), Degree::Finite(0));

        assert_eq!(f.fdeg().unwrap(), Degree::Finite(3));
        assert_eq!(f.pdeg(0).unwrap(), Degree::Finite(3));
        assert_eq!(f.pdeg(1).unwrap(), Degree::Finite(1));
        assert_eq!(f.pdeg(2).unwrap(), Degree::Finite(0));
    }

    #[test]
    fn degree_does_not_depend_on_the_generating_set() {
        // brute-force variant of the degree using every group element as a
        // step, compared against the coordinate-generator definition
        fn fdeg_full_steps(f: &FunctionTable) -> Degree {
            let cap = crate::bounds::degree_cap(f.domain(), f.codomain()).unwrap();
            if f.is_zero() {
                return Degree::Finite(0);
            }
            let steps = f.domain().enumerate().unwrap();
            let mut frontier = vec![f.clone()];
            let mut reached = 0u64;
            for level in 1..=cap + 1 {
                let mut next: Vec<FunctionTable> = Vec::new();
                for t in &frontier {
                    for s in &steps {
                        let d = t.delta_g(s).unwrap();
                        if !d.is_zero() && !next.contains(&d) {
                            next.push(d);
                        }
                    }
                }
                if next.is_empty() {
                    return Degree::Finite(reached);
                }
                reached = level;
                frontier = next;
            }
            Degree::Infinite
        }

        for f in all_maps(&g(&[2, 2]), &g(&[2])).unwrap() {
            assert_eq!(fdeg_full_steps(&f), f.fdeg().unwrap());
        }
        for f in all_maps(&g(&[4]), &g(&[2])).unwrap() {
            assert_eq!(fdeg_full_steps(&f), f.fdeg().unwrap());
        }
    }

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(&g(&[2, 2]), &g(&[2])).unwrap().count(), 16);
        assert_eq!(all_maps(&g(&[3]), &g(&[3])).unwrap().count(), 27);
    }

    #[test]
    fn degree_computations_need_a_finite_codomain() {
        let f = FunctionTable::new(
            g(&[2]),
            g(&[0]),
            vec![g(&[0]).element(&[0]).unwrap(), g(&[0]).element(&[5]).unwrap()],
        )
        .unwrap();
        // differences on integer-valued tables still work
        assert_eq!(
            f.delta_i(0).unwrap().values(),
            &[g(&[0]).element(&[5]).unwrap(), g(&[0]).element(&[-5]).unwrap()]
        );
        assert!(f.fdeg().is_err());
        assert!(f.pdeg(0).is_err());
        assert!(f.classify().is_err());
    }

    #[test]
    fn trivial_domains_and_codomains() {
        let one = FunctionTable::constant(g(&[1]), g(&[6]).element(&[4]).unwrap()).unwrap();
        assert_eq!(one.fdeg().unwrap(), Degree::Finite(0));
        assert!(one.classify().unwrap().is_finite());

        let collapse = FunctionTable::zero(g(&[4]), g(&[1])).unwrap();
        assert_eq!(collapse.fdeg().unwrap(), Degree::Finite(0));
        assert_eq!(collapse.pdeg(0).unwrap(), Degree::Finite(0));
    }
}
