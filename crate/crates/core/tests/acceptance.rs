//! Acceptance suite: each test is one exit criterion, checked exactly
//! (tolerance zero everywhere; all quantities are integers). Each test
//! prints a PASS line once its criterion holds, so running with
//! `--nocapture` gives one line per criterion.

use fundeg_core::bounds::{
    c_hat, c_hat_via_reduction, max_degree_cyclic, max_degree_general, max_degree_p_group,
    nilpotency_degree, MaxDegreeVerdict, PGroupSpec,
};
use fundeg_core::calculus::{all_maps, lagrange, Degree, FunctionTable};
use fundeg_core::format::write_polyfract;
use fundeg_core::group::Group;
use fundeg_core::groupring::nilpotency_oracle;
use fundeg_core::polyfract::interpolate_table;
use fundeg_core::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn g(moduli: &[u64]) -> Group {
    Group::new(moduli.to_vec()).unwrap()
}

/// The worked three-variable map, built from raw component values with no
/// polyfract machinery involved.
fn worked_example_table() -> FunctionTable {
    let domain = g(&[4, 3, 5]);
    let codomain = g(&[2, 9, 7, 7]);
    let f1 = [0i64, 1, 0, 0]; // C(x,3) + C(x,1) mod 2 on 0..=3
    let f2 = [3i64, 0, 6]; // 6x + 3 mod 9
    FunctionTable::from_fn(domain, codomain.clone(), |x| {
        let c = x.coords();
        codomain
            .element(&[f1[c[0] as usize], f2[c[1] as usize], 4, 5])
            .unwrap()
    })
    .unwrap()
}

/// Criterion 1: brute-force degree of the indicator of zero between cyclic
/// prime-power groups equals `beta p^alpha - (beta-1) p^(alpha-1) - 1`,
/// over p in {2,3}, alpha in {1,2}, beta in {1,2}.
#[test]
fn criterion_1_indicator_degree_formula_cyclic() {
    for p in [2u64, 3] {
        for alpha in [1u32, 2] {
            for beta in [1u32, 2] {
                let domain = Group::cyclic(p.pow(alpha));
                let codomain = Group::cyclic(p.pow(beta));
                let chi = lagrange(&domain, &codomain).unwrap();
                let expected = max_degree_cyclic(p, alpha, beta).unwrap();
                assert_eq!(
                    chi.fdeg().unwrap(),
                    Degree::Finite(expected),
                    "p={p} alpha={alpha} beta={beta}"
                );
            }
        }
    }
    println!("PASS criterion 1: cyclic indicator degrees match the closed formula");
}

/// Criterion 2: over all 16 maps Z_2 x Z_2 -> Z_2 and all 27 maps
/// Z_3 -> Z_3, the largest finite degree equals the product-domain formula
/// value (2 in both families) and no map exceeds it.
#[test]
fn criterion_2_exhaustive_supremacy() {
    let cases = [
        (g(&[2, 2]), g(&[2]), PGroupSpec::new(2, vec![1, 1], 1).unwrap()),
        (g(&[3]), g(&[3]), PGroupSpec::new(3, vec![1], 1).unwrap()),
    ];
    for (domain, codomain, spec) in cases {
        let bound = max_degree_p_group(&spec);
        assert_eq!(bound, 2);
        let mut attained = 0u64;
        let mut count = 0usize;
        for f in all_maps(&domain, &codomain).unwrap() {
            count += 1;
            let d = f
                .fdeg()
                .unwrap()
                .finite()
                .expect("maps between p-groups to one prime have finite degree");
            assert!(d <= bound, "{domain} -> {codomain}: degree {d} exceeds {bound}");
            attained = attained.max(d);
        }
        assert_eq!(count, (codomain.order().unwrap() as usize).pow(domain.order().unwrap() as u32));
        assert_eq!(attained, bound, "{domain} -> {codomain}: bound not attained");
    }
    println!("PASS criterion 2: exhaustive supremacy on Z_2xZ_2 -> Z_2 and Z_3 -> Z_3");
}

/// Criterion 3: classification is finite exactly when the brute-force
/// degree is finite, over all 3^6 maps Z_2 x Z_3 -> Z_3 and all 2^6 maps
/// Z_2 x Z_3 -> Z_2.
#[test]
fn criterion_3_classification_biconditional() {
    let domain = g(&[2, 3]);
    for codomain in [g(&[3]), g(&[2])] {
        let mut count = 0usize;
        for f in all_maps(&domain, &codomain).unwrap() {
            count += 1;
            assert_eq!(
                f.classify().unwrap().is_finite(),
                f.fdeg().unwrap().is_finite(),
                "map {:?}",
                f.values()
            );
        }
        assert_eq!(count, (codomain.order().unwrap() as usize).pow(6));
    }
    println!("PASS criterion 3: finite classification <=> finite brute-force degree");
}

/// Criterion 4: the coefficient valuation sweep. With
/// `d* = beta p^alpha - (beta-1) p^(alpha-1) - 1`: the representative at d*
/// is nonzero mod p^beta and congruent to (-p)^(beta-1); every
/// representative in (d*, d* + 2 p^alpha] vanishes; and the alternating-sum
/// route agrees with the quotient-ring route on the whole sweep.
#[test]
fn criterion_4_coefficient_valuation_sweep() {
    for p in [2u64, 3, 5] {
        for alpha in [1u32, 2, 3] {
            for beta in [1u32, 2, 3] {
                let pa = p.pow(alpha);
                let pb = p.pow(beta);
                let dstar = max_degree_cyclic(p, alpha, beta).unwrap();

                let at_star = c_hat(dstar, alpha, p, beta).unwrap();
                assert_ne!(at_star, 0, "p={p} alpha={alpha} beta={beta}");
                let minus_p = pb - p % pb;
                let expected = (0..beta as u64 - 1).fold(1u64 % pb, |acc, _| {
                    (acc as u128 * minus_p as u128 % pb as u128) as u64
                });
                assert_eq!(at_star, expected, "p={p} alpha={alpha} beta={beta}");

                for delta in dstar + 1..=dstar + 2 * pa {
                    assert_eq!(
                        c_hat(delta, alpha, p, beta).unwrap(),
                        0,
                        "p={p} alpha={alpha} beta={beta} delta={delta}"
                    );
                }

                for delta in (0..=200).chain(dstar..=dstar + 2 * pa) {
                    assert_eq!(
                        c_hat(delta, alpha, p, beta).unwrap(),
                        c_hat_via_reduction(delta, alpha, p, beta).unwrap(),
                        "p={p} alpha={alpha} beta={beta} delta={delta}"
                    );
                }
            }
        }
    }
    println!("PASS criterion 4: valuation sweep and cross-route coefficient identity");
}

/// Criterion 5: the nilpotency formula equals the group-ring oracle for
/// p in {2,3}, every non-decreasing alpha-tuple with sum of p^alpha_j at
/// most 32, and beta up to 3.
#[test]
fn criterion_5_nilpotency_formula_vs_oracle() {
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

    let mut cases = 0usize;
    for p in [2u64, 3] {
        let mut all = Vec::new();
        tuples(p, 32, 1, &mut Vec::new(), &mut all);
        for alphas in all {
            let group = Group::new(alphas.iter().map(|&a| p.pow(a)).collect()).unwrap();
            for beta in 1..=3u32 {
                let spec = PGroupSpec::new(p, alphas.clone(), beta).unwrap();
                assert_eq!(
                    nilpotency_degree(&spec),
                    nilpotency_oracle(p.pow(beta), &group).unwrap(),
                    "p={p} alphas={alphas:?} beta={beta}"
                );
                cases += 1;
            }
        }
    }
    assert!(cases > 500, "grid unexpectedly small: {cases}");
    println!("PASS criterion 5: nilpotency formula = oracle on {cases} cases");
}

fn random_pair(rng: &mut StdRng) -> (Group, Group) {
    (
        sample::random_group(rng, 60, 3),
        sample::random_group(rng, 60, 3),
    )
}

/// Criterion 6: for 1000 random finite-degree tables on groups of order at
/// most 60 (plus the worked example, byte-exactly), interpolation followed
/// by evaluation reproduces the table, and the term degrees equal the
/// brute-force degrees.
#[test]
fn criterion_6_interpolation_round_trip() {
    let expected_payload = "vars: 3\n\
                            codomain: 2,9,7,7\n\
                            3,0,0 : 1,0,0,0\n\
                            1,0,0 : 1,0,0,0\n\
                            0,1,0 : 0,6,0,0\n\
                            0,0,0 : 0,3,4,5\n";
    let worked = worked_example_table();
    let mut tables = vec![worked.clone()];

    let mut rng = StdRng::seed_from_u64(60_001);
    while tables.len() < 1001 {
        let (a, b) = random_pair(&mut rng);
        tables.push(sample::random_finite_degree_table(&mut rng, &a, &b));
    }

    for f in &tables {
        let p = interpolate_table(f).unwrap();
        assert_eq!(&p.to_table().unwrap(), f, "round trip failed");
        assert_eq!(Degree::Finite(p.polyfract().deg()), f.fdeg().unwrap());
        for i in 0..f.domain().rank() {
            assert_eq!(
                Degree::Finite(p.polyfract().deg_i(i).unwrap()),
                f.pdeg(i).unwrap()
            );
        }
    }

    let interpolated = interpolate_table(&worked).unwrap();
    assert_eq!(write_polyfract(interpolated.polyfract()), expected_payload);
    println!("PASS criterion 6: 1000 random round trips plus the worked byte-exact payload");
}

/// Criterion 7: 1000 random nonzero canonical polyfracts each evaluate to
/// their (nonzero) coefficient at a minimal support index.
#[test]
fn criterion_7_substitution_injectivity() {
    let mut rng = StdRng::seed_from_u64(70_007);
    let mut checked = 0usize;
    while checked < 1000 {
        let codomain = sample::random_group(&mut rng, 30, 2);
        let n_vars = 1 + checked % 3;
        let p = sample::random_polyfract(&mut rng, n_vars, &codomain, 6, 8);
        if p.is_zero() {
            continue;
        }
        let eps = p
            .terms()
            .map(|(d, _)| d.clone())
            .min_by_key(|d| (d.total(), d.clone()))
            .unwrap();
        let x: Vec<i64> = eps.exponents().iter().map(|&e| e as i64).collect();
        let value = p.evaluate(&x);
        assert_eq!(value, p.coefficient(&eps));
        assert!(!value.is_zero());
        checked += 1;
    }
    println!("PASS criterion 7: 1000 nonzero polyfracts evaluate nonzero at minimal support");
}

/// Criterion 8: on the same population as criterion 6, the partial degrees
/// bound the total degree from below, their sum bounds it from above, and
/// each partial degree is the maximum over sections.
#[test]
fn criterion_8_degree_inequalities_and_sections() {
    let mut tables = vec![worked_example_table()];
    let mut rng = StdRng::seed_from_u64(60_001);
    while tables.len() < 1001 {
        let (a, b) = random_pair(&mut rng);
        tables.push(sample::random_finite_degree_table(&mut rng, &a, &b));
    }

    for f in &tables {
        let report = f.degree_report().unwrap();
        let total = report.fdeg.finite().expect("population has finite degrees");
        let mut sum = 0u64;
        for (i, p) in report.pdeg.iter().enumerate() {
            let p = p.finite().expect("finite partials");
            assert!(p <= total);
            sum += p;

            let over_sections = f
                .domain()
                .enumerate()
                .unwrap()
                .iter()
                .map(|a| {
                    f.section(i, a)
                        .unwrap()
                        .fdeg()
                        .unwrap()
                        .finite()
                        .expect("sections of finite-degree maps have finite degree")
                })
                .max()
                .unwrap();
            assert_eq!(p, over_sections);
        }
        assert!(total <= sum);
    }
    println!("PASS criterion 8: degree inequalities and section maxima on 1001 tables");
}

/// Criterion 9: the worked two-group instance. The bound for
/// Z_60 -> Z_126 x Z_7 is 4, coming from the prime 3, and the indicator of
/// zero on the 3-components attains it by brute force.
#[test]
fn criterion_9_mixed_prime_worked_instance() {
    let a = g(&[60]);
    let b = g(&[126, 7]);
    assert_eq!(max_degree_general(&a, &b).unwrap(), MaxDegreeVerdict::Bound(4));
    assert_eq!(
        fundeg_core::bounds::per_prime_bounds(&a, &b).unwrap(),
        vec![(2, 3), (3, 4)]
    );

    // 3-primary components: Z_3 inside Z_60, Z_9 x Z_1 inside Z_126 x Z_7
    let a3 = g(&[3]);
    let b3 = g(&[9, 1]);
    let chi = lagrange(&a3, &b3).unwrap();
    assert_eq!(chi.fdeg().unwrap(), Degree::Finite(4));
    println!("PASS criterion 9: mixed-prime bound 4 computed and attained");
}
