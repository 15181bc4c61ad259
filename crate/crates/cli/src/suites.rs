//! The `verify` suites: self-contained cross-checks between the formula
//! layer, the brute-force layer, and the term representation. Each check
//! reports a name and whether it held; nothing stops at the first failure.

use fundeg_core::bounds::{
    c_hat, c_hat_via_reduction, max_degree_cyclic, max_degree_p_group, nilpotency_degree,
    PGroupSpec,
};
use fundeg_core::calculus::{all_maps, Degree};
use fundeg_core::format::write_polyfract;
use fundeg_core::group::Group;
use fundeg_core::groupring::nilpotency_oracle;
use fundeg_core::polyfract::interpolate_table;
use fundeg_core::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub type Check = (String, bool);

fn group(moduli: &[u64]) -> Group {
    Group::new(moduli.to_vec()).unwrap()
}

/// Exhaustive small-group checks: supremacy of the product-domain bound,
/// the finite-classification biconditional, and the degree inequalities.
pub fn small() -> Vec<Check> {
    let mut checks = Vec::new();

    for (domain, codomain, spec) in [
        (group(&[2, 2]), group(&[2]), PGroupSpec::new(2, vec![1, 1], 1).unwrap()),
        (group(&[3]), group(&[3]), PGroupSpec::new(3, vec![1], 1).unwrap()),
    ] {
        let bound = max_degree_p_group(&spec);
        let mut attained = 0u64;
        let mut ok = true;
        for f in all_maps(&domain, &codomain).unwrap() {
            match f.fdeg().unwrap() {
                Degree::Finite(d) => {
                    ok &= d <= bound;
                    attained = attained.max(d);
                }
                Degree::Infinite => ok = false,
            }
        }
        ok &= attained == bound;
        checks.push((format!("supremacy {domain} -> {codomain} at bound {bound}"), ok));
    }

    for codomain in [group(&[3]), group(&[2])] {
        let domain = group(&[2, 3]);
        let mut biconditional = true;
        let mut inequalities = true;
        for f in all_maps(&domain, &codomain).unwrap() {
            let report = f.degree_report().unwrap();
            biconditional &= f.classify().unwrap().is_finite() == report.fdeg.is_finite();
            if let Degree::Finite(total) = report.fdeg {
                let mut sum = 0u64;
                for (i, p) in report.pdeg.iter().enumerate() {
                    let p = match p {
                        Degree::Finite(p) => *p,
                        Degree::Infinite => {
                            inequalities = false;
                            continue;
                        }
                    };
                    inequalities &= p <= total;
                    sum += p;
                    let over_sections = domain
                        .enumerate()
                        .unwrap()
                        .iter()
                        .map(|a| f.section(i, a).unwrap().fdeg().unwrap())
                        .try_fold(0u64, |acc, d| d.finite().map(|d| acc.max(d)));
                    inequalities &= over_sections == Some(p);
                }
                inequalities &= total <= sum;
            }
        }
        checks.push((
            format!("classification biconditional {domain} -> {codomain}"),
            biconditional,
        ));
        checks.push((
            format!("degree inequalities and sections {domain} -> {codomain}"),
            inequalities,
        ));
    }

    checks
}

/// The coefficient valuation sweep: last nonzero representative, its exact
/// value, the vanishing window above it, and agreement of the two routes.
pub fn lemma51() -> Vec<Check> {
    let mut checks = Vec::new();
    for p in [2u64, 3, 5] {
        for alpha in [1u32, 2, 3] {
            for beta in [1u32, 2, 3] {
                let pa = p.pow(alpha);
                let pb = p.pow(beta);
                let dstar = max_degree_cyclic(p, alpha, beta).unwrap();
                let at_star = c_hat(dstar, alpha, p, beta).unwrap();
                let minus_p = pb - p % pb;
                let expected = (0..beta as u64 - 1).fold(1u64 % pb, |acc, _| {
                    (acc as u128 * minus_p as u128 % pb as u128) as u64
                });
                let mut ok = at_star != 0 && at_star == expected;
                for delta in dstar + 1..=dstar + 2 * pa {
                    ok &= c_hat(delta, alpha, p, beta).unwrap() == 0;
                }
                for delta in (0..=120).chain(dstar..=dstar + 2 * pa) {
                    ok &= c_hat(delta, alpha, p, beta).unwrap()
                        == c_hat_via_reduction(delta, alpha, p, beta).unwrap();
                }
                checks.push((format!("valuations p={p} alpha={alpha} beta={beta}"), ok));
            }
        }
    }
    checks
}

/// Seeded random round trips: interpolation reproduces the table, term
/// degrees equal brute-force degrees, substitution is injective, and the
/// worked three-variable example serializes byte-exactly.
pub fn roundtrip() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = StdRng::seed_from_u64(200_003);

    let mut round_trips = true;
    let mut degrees_match = true;
    for _ in 0..200 {
        let a = sample::random_group(&mut rng, 60, 3);
        let b = sample::random_group(&mut rng, 60, 3);
        let f = sample::random_finite_degree_table(&mut rng, &a, &b);
        let p = interpolate_table(&f).unwrap();
        round_trips &= p.to_table().unwrap() == f;
        degrees_match &= Degree::Finite(p.polyfract().deg()) == f.fdeg().unwrap();
        for i in 0..a.rank() {
            degrees_match &=
                Degree::Finite(p.polyfract().deg_i(i).unwrap()) == f.pdeg(i).unwrap();
        }
    }
    checks.push(("interpolate/evaluate round trip on 200 random tables".into(), round_trips));
    checks.push(("term degrees equal brute-force degrees".into(), degrees_match));

    let mut injective = true;
    let mut done = 0;
    while done < 200 {
        let codomain = sample::random_group(&mut rng, 30, 2);
        let p = sample::random_polyfract(&mut rng, 1 + done % 3, &codomain, 6, 8);
        if p.is_zero() {
            continue;
        }
        let eps = p
            .terms()
            .map(|(d, _)| d.clone())
            .min_by_key(|d| (d.total(), d.clone()))
            .unwrap();
        let x: Vec<i64> = eps.exponents().iter().map(|&e| e as i64).collect();
        injective &= p.evaluate(&x) == p.coefficient(&eps) && !p.evaluate(&x).is_zero();
        done += 1;
    }
    checks.push(("evaluation at minimal support is the coefficient".into(), injective));

    let worked = {
        let domain = group(&[4, 3, 5]);
        let codomain = group(&[2, 9, 7, 7]);
        let f1 = [0i64, 1, 0, 0];
        let f2 = [3i64, 0, 6];
        fundeg_core::FunctionTable::from_fn(domain, codomain.clone(), |x| {
            let c = x.coords();
            codomain
                .element(&[f1[c[0] as usize], f2[c[1] as usize], 4, 5])
                .unwrap()
        })
        .unwrap()
    };
    let payload = write_polyfract(interpolate_table(&worked).unwrap().polyfract());
    let expected = "vars: 3\ncodomain: 2,9,7,7\n3,0,0 : 1,0,0,0\n1,0,0 : 1,0,0,0\n0,1,0 : 0,6,0,0\n0,0,0 : 0,3,4,5\n";
    checks.push(("worked example serializes byte-exactly".into(), payload == expected));

    checks
}

/// Formula vs. group-ring oracle over the full grid: p in {2, 3}, every
/// non-decreasing exponent tuple with sum of p^alpha_j at most 32, beta up
/// to 3.
pub fn nilpotency() -> Vec<Check> {
    fn tuples(p: u64, budget: u64, min_alpha: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let mut alpha = min_alpha;
        while p.pow(alpha) <= budget {
            prefix.push(alpha);
            out.push(prefix.clone());
            tuples(p, budget - p.pow(alpha), alpha, prefix, out);
            prefix.pop();
            alpha += 1;
        }
    }

    let mut checks = Vec::new();
    for p in [2u64, 3] {
        let mut all = Vec::new();
        tuples(p, 32, 1, &mut Vec::new(), &mut all);
        let mut ok = true;
        let mut cases = 0usize;
        for alphas in all {
            let grp = Group::new(alphas.iter().map(|&a| p.pow(a)).collect()).unwrap();
            for beta in 1..=3u32 {
                let spec = PGroupSpec::new(p, alphas.clone(), beta).unwrap();
                ok &= nilpotency_degree(&spec) == nilpotency_oracle(p.pow(beta), &grp).unwrap();
                cases += 1;
            }
        }
        checks.push((format!("formula = oracle for p={p} ({cases} cases)"), ok));
    }
    checks
}
