//! Randomized generators used by the verification sweeps: random finite
//! groups, random maps of guaranteed finite degree, and random canonical
//! polyfracts. All take a caller-provided RNG so sweeps stay reproducible.

use crate::calculus::FunctionTable;
use crate::group::{Group, GroupElement, PrimaryDecomposition};
use crate::polyfract::{MultiIndex, Polyfract};
use rand::Rng;

/// A random finite group with at most `max_rank` coordinates and order at
/// most `max_order`. Dummy factors are allowed; the trivial group is not.
pub fn random_group(rng: &mut impl Rng, max_order: u64, max_rank: usize) -> Group {
    loop {
        let rank = rng.gen_range(1..=max_rank);
        let mut moduli = Vec::with_capacity(rank);
        let mut budget = max_order;
        for _ in 0..rank {
            let q = rng.gen_range(1..=budget);
            budget /= q;
            moduli.push(q);
        }
        let group = Group::new(moduli).unwrap();
        if group.order().unwrap() >= 2 {
            return group;
        }
    }
}

pub fn random_element(rng: &mut impl Rng, group: &Group) -> GroupElement {
    let coords: Vec<i64> = group
        .moduli()
        .iter()
        .map(|&q| if q == 0 { rng.gen_range(-8..=8) } else { rng.gen_range(0..q as i64) })
        .collect();
    group.element(&coords).unwrap()
}

/// A uniformly random map among those of finite functional degree: one
/// random component per prime of |A||B|, assembled so that each prime part
/// of the output depends only on the matching prime part of the input.
pub fn random_finite_degree_table(
    rng: &mut impl Rng,
    domain: &Group,
    codomain: &Group,
) -> FunctionTable {
    let mut primes: Vec<u64> = crate::arith::factorize(domain.order().unwrap())
        .into_iter()
        .chain(crate::arith::factorize(codomain.order().unwrap()))
        .map(|(p, _)| p)
        .collect();
    primes.sort_unstable();
    primes.dedup();
    let domain_parts = PrimaryDecomposition::over_primes(domain, &primes).unwrap();
    let codomain_parts = PrimaryDecomposition::over_primes(codomain, &primes).unwrap();

    let components: Vec<Vec<GroupElement>> = (0..primes.len())
        .map(|j| {
            let comp_domain = &domain_parts.components()[j];
            let comp_codomain = &codomain_parts.components()[j];
            (0..comp_domain.order().unwrap())
                .map(|_| random_element(rng, comp_codomain))
                .collect()
        })
        .collect();

    FunctionTable::from_fn(domain.clone(), codomain.clone(), |x| {
        let parts: Vec<GroupElement> = (0..primes.len())
            .map(|j| {
                let aj = domain_parts.project(x, j).unwrap();
                let idx = domain_parts.components()[j].index_of(&aj);
                components[j][idx].clone()
            })
            .collect();
        codomain_parts.reassemble(&parts).unwrap()
    })
    .unwrap()
}

/// A random canonical polyfract: up to `max_terms` terms with exponents
/// below `max_exponent` and nonzero random coefficients. May come out zero
/// if the codomain is trivial.
pub fn random_polyfract(
    rng: &mut impl Rng,
    n_vars: usize,
    codomain: &Group,
    max_terms: usize,
    max_exponent: u32,
) -> Polyfract {
    let terms: Vec<(MultiIndex, GroupElement)> = (0..rng.gen_range(0..=max_terms))
        .map(|_| {
            let exps: Vec<u32> = (0..n_vars).map(|_| rng.gen_range(0..max_exponent)).collect();
            (MultiIndex::new(exps), random_element(rng, codomain))
        })
        .collect();
    Polyfract::from_terms(n_vars, codomain, terms).unwrap()
}
