//! Line-oriented text formats for function tables and polyfracts.
//!
//! Function table:
//! ```text
//! domain: 4,3,5
//! codomain: 2,9,7,7
//! 0,0,0 -> 1,3,4,5
//! ...
//! ```
//! one line per domain element, all elements required, order free; the
//! parser canonicalizes coordinates and the writer emits enumeration order.
//!
//! Polyfract:
//! ```text
//! vars: 3
//! codomain: 2,9,7,7
//! 3,0,0 : 1,0,0,0
//! ...
//! ```
//! one term per line, exponent tuple before the colon, coefficient after;
//! zero-coefficient lines are rejected on read; the writer emits terms in
//! lexicographically descending exponent order.

use crate::calculus::FunctionTable;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::polyfract::{MultiIndex, Polyfract};
use std::fmt::Write as _;

/// Parses a comma-separated moduli list such as `4,3,5`; `0` denotes the
/// integers.
pub fn parse_group_spec(s: &str) -> Result<Group> {
    let moduli = parse_u64_list(s)?;
    Group::new(moduli)
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad number `{}`", part.trim())))
        })
        .collect()
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad number `{}`", part.trim())))
        })
        .collect()
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad number `{}`", part.trim())))
        })
        .collect()
}

fn header_value<'a>(line: &'a str, key: &str, line_no: usize) -> Result<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| {
            Error::InvalidInput(format!("line {line_no}: expected `{key}: ...`"))
        })
}

/// Parses the function-table format. Every domain element must appear
/// exactly once; values are canonicalized into the codomain.
pub fn parse_table(text: &str) -> Result<FunctionTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (no, first) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty table payload".into()))?;
    let domain = parse_group_spec(header_value(first, "domain", no)?)?;
    let (no, second) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("missing codomain header".into()))?;
    let codomain = parse_group_spec(header_value(second, "codomain", no)?)?;

    let order = domain
        .order()
        .ok_or_else(|| Error::Unsupported("cannot tabulate an infinite domain".into()))?
        as usize;
    let mut values: Vec<Option<crate::group::GroupElement>> = vec![None; order];
    for (no, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| Error::InvalidInput(format!("line {no}: expected `x -> f(x)`")))?;
        let x = domain.element(&parse_i64_list(lhs)?)?;
        let v = codomain.element(&parse_i64_list(rhs)?)?;
        let idx = domain.index_of(&x);
        if values[idx].is_some() {
            return Err(Error::InvalidInput(format!("line {no}: duplicate entry for {x}")));
        }
        values[idx] = Some(v);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(idx, v)| {
            v.ok_or_else(|| {
                Error::InvalidInput(format!("missing entry for {}", domain.element_at(idx)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FunctionTable::new(domain, codomain, values)
}

/// Canonical serialization of a function table: headers, then one line per
/// domain element in enumeration order.
pub fn write_table(f: &FunctionTable) -> String {
    let mut out = String::new();
    writeln!(out, "domain: {}", f.domain()).unwrap();
    writeln!(out, "codomain: {}", f.codomain()).unwrap();
    for (x, v) in f.domain().enumerate().unwrap().iter().zip(f.values()) {
        writeln!(out, "{x} -> {v}").unwrap();
    }
    out
}

/// Parses the polyfract format. Coefficients are canonicalized; lines whose
/// coefficient reduces to zero are rejected, as are duplicate exponents.
pub fn parse_polyfract(text: &str) -> Result<Polyfract> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (no, first) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty polyfract payload".into()))?;
    let n_vars = header_value(first, "vars", no)?
        .parse::<usize>()
        .map_err(|_| Error::InvalidInput(format!("line {no}: bad variable count")))?;
    if n_vars == 0 {
        return Err(Error::InvalidInput("a polyfract needs at least one variable".into()));
    }
    let (no, second) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("missing codomain header".into()))?;
    let codomain = parse_group_spec(header_value(second, "codomain", no)?)?;

    let mut terms = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (no, line) in lines {
        let (lhs, rhs) = line
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("line {no}: expected `delta : coeff`")))?;
        let exps = parse_u32_list(lhs)?;
        if exps.len() != n_vars {
            return Err(Error::InvalidInput(format!(
                "line {no}: exponent tuple has {} entries, expected {n_vars}",
                exps.len()
            )));
        }
        let delta = MultiIndex::new(exps);
        if !seen.insert(delta.clone()) {
            return Err(Error::InvalidInput(format!("line {no}: duplicate term {delta}")));
        }
        let coeff = codomain.element(&parse_i64_list(rhs)?)?;
        if coeff.is_zero() {
            return Err(Error::InvalidInput(format!(
                "line {no}: zero coefficient at {delta}"
            )));
        }
        terms.push((delta, coeff));
    }
    Polyfract::from_terms(n_vars, &codomain, terms)
}

/// Canonical serialization of a polyfract: headers, then terms in
/// lexicographically descending exponent order. The zero polyfract has an
/// empty term list.
pub fn write_polyfract(p: &Polyfract) -> String {
    let mut out = String::new();
    writeln!(out, "vars: {}", p.n_vars()).unwrap();
    writeln!(out, "codomain: {}", p.codomain()).unwrap();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    for (delta, coeff) in terms {
        writeln!(out, "{delta} : {coeff}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyfract::interpolate_table;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("4,3,5").unwrap(), Group::new(vec![4, 3, 5]).unwrap());
        assert_eq!(parse_group_spec("0").unwrap(), Group::cyclic(0));
        assert!(parse_group_spec("4,,5").is_err());
        assert!(parse_group_spec("-2").is_err());
        assert_eq!(format!("{}", Group::new(vec![2, 9, 7, 7]).unwrap()), "2,9,7,7");
    }

    #[test]
    fn table_round_trip_with_free_order_and_canonicalization() {
        let text = "domain: 2,2\ncodomain: 3\n1,1 -> 2\n0,0 -> 0\n0,1 -> 4\n1,0 -> -1\n";
        let table = parse_table(text).unwrap();
        // 4 canonicalizes to 1, -1 to 2
        assert_eq!(
            write_table(&table),
            "domain: 2,2\ncodomain: 3\n0,0 -> 0\n0,1 -> 1\n1,0 -> 2\n1,1 -> 2\n"
        );
        assert_eq!(parse_table(&write_table(&table)).unwrap(), table);
    }

    #[test]
    fn table_rejects_missing_and_duplicate_entries() {
        assert!(matches!(
            parse_table("domain: 2\ncodomain: 2\n0 -> 1\n"),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            parse_table("domain: 2\ncodomain: 2\n0 -> 1\n0 -> 0\n1 -> 1\n"),
            Err(Error::InvalidInput(_))
        ));
        assert!(parse_table("domain: 0\ncodomain: 2\n").is_err());
        assert!(parse_table("codomain: 2\ndomain: 2\n").is_err());
    }

    #[test]
    fn worked_example_serializes_byte_exactly() {
        let expected = "vars: 3\n\
                        codomain: 2,9,7,7\n\
                        3,0,0 : 1,0,0,0\n\
                        1,0,0 : 1,0,0,0\n\
                        0,1,0 : 0,6,0,0\n\
                        0,0,0 : 0,3,4,5\n";
        let p = crate::polyfract::worked_example_polyfract();
        assert_eq!(write_polyfract(&p), expected);
        assert_eq!(parse_polyfract(expected).unwrap(), p);

        // and the table of the map interpolates to exactly this payload
        let table = crate::calculus::worked_example_table();
        let interpolated = interpolate_table(&table).unwrap();
        assert_eq!(write_polyfract(interpolated.polyfract()), expected);
    }

    #[test]
    fn polyfract_rejects_zero_and_duplicate_terms() {
        assert!(matches!(
            parse_polyfract("vars: 1\ncodomain: 2\n1 : 2\n"),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            parse_polyfract("vars: 1\ncodomain: 2\n1 : 1\n1 : 1\n"),
            Err(Error::InvalidInput(_))
        ));
        assert!(parse_polyfract("vars: 2\ncodomain: 2\n1 : 1\n").is_err());
        // zero polyfract: headers only
        let z = parse_polyfract("vars: 2\ncodomain: 5\n").unwrap();
        assert!(z.is_zero());
        assert_eq!(write_polyfract(&z), "vars: 2\ncodomain: 5\n");
    }
}
