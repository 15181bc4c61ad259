//! `fundeg`: functional-degree computations from the command line.
//!
//! Subcommands: `fdeg`, `interpolate`, `eval`, `maxdeg`, `nilpotency`,
//! `classify`, `verify`. Output is a stable `key: value` layout; `--json`
//! switches to one JSON record per result. Exit codes: 0 success, 1 bad
//! input, 2 internal inconsistency (two routes that must agree disagreed).

mod suites;

use fundeg_core::bounds::{
    max_degree_general, nilpotency_degree, per_prime_bounds, MaxDegreeVerdict, PGroupSpec,
};
use fundeg_core::calculus::Degree;
use fundeg_core::format::{parse_group_spec, parse_polyfract, parse_table, write_polyfract, write_table};
use fundeg_core::groupring::nilpotency_oracle;
use fundeg_core::polyfract::{interpolate_table, PeriodicPolyfract};
use fundeg_core::Error;
use std::process::ExitCode;

const USAGE: &str = "\
usage: fundeg [--json] <command> [args]

commands:
  fdeg <table-file>                 total and partial functional degrees
  interpolate <table-file>          polyfract of a finite-degree table
  eval <polyfract-file> --domain <moduli>   tabulate on a finite group
  eval <polyfract-file> --at <coords>       evaluate at one integer point
  maxdeg <domain> <codomain>        largest finite degree between two groups
  nilpotency <p> <alphas> <beta> [--oracle]  augmentation-ideal nilpotency
  classify <table-file>             finite/infinite split into prime parts
  verify <suite>                    suite in {small, lemma51, roundtrip, nilpotency}

group specs are comma-separated moduli, e.g. 4,3,5 (0 denotes the integers)";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let args: Vec<&str> = args.iter().map(String::as_str).filter(|a| *a != "--json").collect();

    if args.is_empty() {
        eprintln!("{USAGE}");
        return ExitCode::from(1);
    }

    let result = match args[0] {
        "fdeg" => cmd_fdeg(&args[1..], json),
        "interpolate" => cmd_interpolate(&args[1..], json),
        "eval" => cmd_eval(&args[1..], json),
        "maxdeg" => cmd_maxdeg(&args[1..], json),
        "nilpotency" => cmd_nilpotency(&args[1..], json),
        "classify" => cmd_classify(&args[1..], json),
        "verify" => cmd_verify(&args[1..]),
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            return ExitCode::SUCCESS;
        }
        other => {
            eprintln!("unknown command `{other}`\n{USAGE}");
            return ExitCode::from(1);
        }
    };

    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
}

fn expect_args(args: &[&str], n: usize, what: &str) -> Result<(), Error> {
    if args.len() != n {
        return Err(Error::InvalidInput(format!("expected {what}")));
    }
    Ok(())
}

fn degree_json(d: &Degree) -> String {
    match d {
        Degree::Finite(v) => v.to_string(),
        Degree::Infinite => "\"INFINITE\"".into(),
    }
}

fn cmd_fdeg(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    expect_args(args, 1, "a table file: fdeg <table-file>")?;
    let table = parse_table(&read_file(args[0])?)?;
    let report = table.degree_report()?;
    let witness = match report.fdeg {
        Degree::Infinite => table.classify()?.witness(),
        Degree::Finite(_) => None,
    };
    let pdeg: Vec<String> = report.pdeg.iter().map(|d| d.to_string()).collect();
    if json {
        let pdeg_json: Vec<String> = report.pdeg.iter().map(degree_json).collect();
        let mut record = format!("{{\"fdeg\":{}", degree_json(&report.fdeg));
        if let Some((p, q)) = witness {
            record.push_str(&format!(",\"witness\":[{p},{q}]"));
        }
        record.push_str(&format!(",\"pdeg\":[{}]}}", pdeg_json.join(",")));
        println!("{record}");
    } else {
        println!("fdeg: {}", report.fdeg);
        if let Some((p, q)) = witness {
            println!("witness: {p},{q}");
        }
        println!("pdeg: {}", pdeg.join(","));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_interpolate(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    expect_args(args, 1, "a table file: interpolate <table-file>")?;
    let table = parse_table(&read_file(args[0])?)?;
    let periodic = interpolate_table(&table)?;
    let p = periodic.polyfract();
    if json {
        let mut terms: Vec<_> = p.terms().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        let body: Vec<String> = terms
            .iter()
            .map(|(d, c)| format!("{{\"delta\":\"{d}\",\"coeff\":\"{c}\"}}"))
            .collect();
        println!(
            "{{\"vars\":{},\"codomain\":\"{}\",\"terms\":[{}]}}",
            p.n_vars(),
            p.codomain(),
            body.join(",")
        );
    } else {
        print!("{}", write_polyfract(p));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    if args.len() != 3 || (args[1] != "--domain" && args[1] != "--at") {
        return Err(Error::InvalidInput(
            "expected: eval <polyfract-file> --domain <moduli> | --at <coords>".into(),
        ));
    }
    let polyfract = parse_polyfract(&read_file(args[0])?)?;
    match args[1] {
        "--domain" => {
            let domain = parse_group_spec(args[2])?;
            let table = PeriodicPolyfract::new(polyfract, domain)?.to_table()?;
            if json {
                let rows: Vec<String> = table
                    .domain()
                    .enumerate()?
                    .iter()
                    .zip(table.values())
                    .map(|(x, v)| format!("{{\"x\":\"{x}\",\"value\":\"{v}\"}}"))
                    .collect();
                println!(
                    "{{\"domain\":\"{}\",\"codomain\":\"{}\",\"rows\":[{}]}}",
                    table.domain(),
                    table.codomain(),
                    rows.join(",")
                );
            } else {
                print!("{}", write_table(&table));
            }
        }
        _ => {
            let coords: Result<Vec<i64>, Error> = args[2]
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("bad coordinate `{s}`")))
                })
                .collect();
            let coords = coords?;
            if coords.len() != polyfract.n_vars() {
                return Err(Error::InvalidInput(format!(
                    "point has {} coordinates, polyfract has {} variables",
                    coords.len(),
                    polyfract.n_vars()
                )));
            }
            let value = polyfract.evaluate(&coords);
            if json {
                println!("{{\"value\":\"{value}\"}}");
            } else {
                println!("value: {value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maxdeg(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    expect_args(args, 2, "two group specs: maxdeg <domain> <codomain>")?;
    let a = parse_group_spec(args[0])?;
    let b = parse_group_spec(args[1])?;
    let verdict = max_degree_general(&a, &b)?;
    match verdict {
        MaxDegreeVerdict::Trivial => {
            if json {
                println!("{{\"verdict\":\"trivial\"}}");
            } else {
                println!("verdict: trivial");
            }
        }
        MaxDegreeVerdict::ConstantsOnly => {
            if json {
                println!("{{\"verdict\":\"constants_only\"}}");
            } else {
                println!("verdict: constants_only");
            }
        }
        MaxDegreeVerdict::Bound(bound) => {
            let per_prime = per_prime_bounds(&a, &b)?;
            if json {
                let parts: Vec<String> = per_prime
                    .iter()
                    .map(|(p, v)| format!("\"{p}\":{v}"))
                    .collect();
                println!(
                    "{{\"verdict\":\"bound\",\"bound\":{bound},\"per_prime\":{{{}}}}}",
                    parts.join(",")
                );
            } else {
                println!("verdict: bound");
                println!("bound: {bound}");
                for (p, v) in per_prime {
                    println!("p={p}: {v}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_nilpotency(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    let oracle = args.contains(&"--oracle");
    let args: Vec<&str> = args.iter().filter(|a| **a != "--oracle").copied().collect();
    expect_args(&args, 3, "nilpotency <p> <alphas> <beta> [--oracle]")?;
    let p: u64 = args[0]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad prime `{}`", args[0])))?;
    let alphas: Result<Vec<u32>, Error> = args[1]
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad exponent `{s}`")))
        })
        .collect();
    let alphas = alphas?;
    let beta: u32 = args[2]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad exponent `{}`", args[2])))?;

    let spec = PGroupSpec::new(p, alphas, beta)?;
    let nu = nilpotency_degree(&spec);

    if !oracle {
        if json {
            println!("{{\"nu\":{nu}}}");
        } else {
            println!("nu: {nu}");
        }
        return Ok(ExitCode::SUCCESS);
    }

    let direct = nilpotency_oracle(spec.codomain_modulus(), &spec.domain())?;
    let agree = direct == nu;
    if json {
        println!(
            "{{\"nu\":{nu},\"oracle\":{direct},\"agreement\":{}}}",
            if agree { "true" } else { "false" }
        );
    } else {
        println!("nu: {nu}");
        println!("oracle: {direct}");
        println!("agreement: {}", if agree { "ok" } else { "MISMATCH" });
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_classify(args: &[&str], json: bool) -> Result<ExitCode, Error> {
    expect_args(args, 1, "a table file: classify <table-file>")?;
    let table = parse_table(&read_file(args[0])?)?;
    let classification = table.classify()?;
    match classification.witness() {
        Some((p, q)) => {
            if json {
                println!("{{\"verdict\":\"infinite\",\"witness\":[{p},{q}]}}");
            } else {
                println!("verdict: infinite");
                println!("witness: {p},{q}");
            }
        }
        None => {
            let components = classification.components().unwrap();
            if json {
                let parts: Vec<String> = classification
                    .primes()
                    .iter()
                    .zip(components)
                    .map(|(p, c)| {
                        format!(
                            "{{\"p\":{p},\"domain\":\"{}\",\"codomain\":\"{}\",\"fdeg\":{}}}",
                            c.domain(),
                            c.codomain(),
                            degree_json(&c.fdeg().unwrap())
                        )
                    })
                    .collect();
                println!(
                    "{{\"verdict\":\"finite\",\"primes\":\"{}\",\"components\":[{}]}}",
                    classification
                        .primes()
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                    parts.join(",")
                );
            } else {
                println!("verdict: finite");
                println!(
                    "primes: {}",
                    classification
                        .primes()
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                );
                for (p, c) in classification.primes().iter().zip(components) {
                    println!(
                        "component p={p}: domain {} codomain {} fdeg {}",
                        c.domain(),
                        c.codomain(),
                        c.fdeg().unwrap()
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &[&str]) -> Result<ExitCode, Error> {
    expect_args(args, 1, "a suite name: verify <small|lemma51|roundtrip|nilpotency>")?;
    let checks = match args[0] {
        "small" => suites::small(),
        "lemma51" => suites::lemma51(),
        "roundtrip" => suites::roundtrip(),
        "nilpotency" => suites::nilpotency(),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite `{other}` (expected small, lemma51, roundtrip, or nilpotency)"
            )))
        }
    };
    let mut failures = 0usize;
    for (name, ok) in &checks {
        if *ok {
            println!("ok {name}");
        } else {
            println!("FAIL {name}");
            failures += 1;
        }
    }
    if failures == 0 {
        println!("suite {}: {} checks passed", args[0], checks.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("suite {}: {failures} of {} checks FAILED", args[0], checks.len());
        Ok(ExitCode::from(2))
    }
}
