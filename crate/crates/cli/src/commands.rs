use std::path::Path;

use rayon::prelude::*;

use chardeg_core::bounds::{
    binomial_constraint_solutions, bundled_brauer_degrees, casoab_orders, divisor_sum,
    first_method_threshold, kp_h2, prime_power_values, second_method_values,
    secondcase_orders, smallest_brauer_degree, solvablecase_orders, solvablecase_raw_orders,
    Factored, Family, KpCase, KpModule, SecondCase, SecondMethodInstance,
};
use chardeg_core::catalog::{
    counter_examples, parse_group_file, theorem_b_catalog, CatalogEntry, FixtureSet, GroupSpec,
    Status,
};
use chardeg_core::chartab::{CharacterTable, TableOptions};
use chardeg_core::classifier::{
    all_pass, lemma_checks, lookup_listed, theorem_b_verdict, MultiplicityReport, Verdict,
};
use chardeg_core::error::{Error, Result};
use chardeg_core::permgroup::{PermGroup, DEFAULT_CAP};
use chardeg_core::symchar::{extendible_triple, m_alt, m_sym, MAX_N};

use crate::render;
use crate::Outcome;

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Consistent
    } else {
        Outcome::Inconsistent
    }
}

fn load(path: &Path) -> Result<(GroupSpec, PermGroup)> {
    let spec = parse_group_file(path)?;
    let group = spec.build()?;
    Ok((spec, group))
}

fn compute(group: &PermGroup, seed: u64) -> Result<CharacterTable> {
    CharacterTable::compute(
        group,
        &TableOptions {
            seed,
            ..TableOptions::default()
        },
    )
}

pub fn table(file: &Path, seed: u64) -> Result<Outcome> {
    let (_, group) = load(file)?;
    print!("{}", render::table(&compute(&group, seed)?));
    Ok(Outcome::Consistent)
}

pub fn mult(file: &Path, json: bool) -> Result<Outcome> {
    let (_, group) = load(file)?;
    let report = MultiplicityReport::new(&compute(&group, 0)?);
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(outcome(report.verdict != Verdict::Inconsistent))
}

enum Row {
    Table(MultiplicityReport, bool),
    Hook(usize, bool),
    Skipped(String),
}

fn check_entry(entry: &CatalogEntry, max_order: u64, seed: u64) -> Result<Row> {
    match entry.status() {
        Status::Table if entry.order > max_order.min(DEFAULT_CAP).into() => Ok(Row::Skipped(
            format!("order {} above --max-order {max_order}", entry.order),
        )),
        Status::Table => {
            let group = entry.build(seed)?;
            let report = MultiplicityReport::new(&compute(&group, seed)?);
            let ok = entry.expected.holds(report.m) && report.verdict == Verdict::Consistent;
            Ok(Row::Table(report, ok))
        }
        Status::HookFormula => {
            let m = entry.hook_m().ok_or_else(|| Error::InvalidArgument(entry.name.into()))?;
            Ok(Row::Hook(m, entry.expected.holds(m)))
        }
        Status::BoundsOnly => Ok(Row::Skipped(bounds_only_note(entry))),
    }
}

fn bounds_only_note(entry: &CatalogEntry) -> String {
    let records = bundled_brauer_degrees();
    let Some(order) = Factored::from_smooth(&entry.order, 1000) else {
        return "bounds-only".into();
    };
    let notes: Vec<String> = records
        .iter()
        .filter(|r| r.group == entry.name)
        .map(|r| {
            let e = first_method_threshold(&order, r.p);
            if r.degree as u128 > e as u128 {
                format!("p = {}: t = {} > {e}, so V = 1 in the first method", r.p, r.degree)
            } else {
                format!("p = {}: t = {} ≤ {e}, first method inconclusive", r.p, r.degree)
            }
        })
        .collect();
    if notes.is_empty() {
        "bounds-only".into()
    } else {
        format!("bounds-only; {}", notes.join("; "))
    }
}

pub fn verify_theorem_b(max_order: u64, seed: u64) -> Result<Outcome> {
    let entries: Vec<CatalogEntry> = theorem_b_catalog().into_iter().chain(counter_examples()).collect();
    let rows: Vec<Result<Row>> = entries
        .par_iter()
        .map(|e| check_entry(e, max_order, seed))
        .collect();
    let mut ok = true;
    for (entry, row) in entries.iter().zip(rows) {
        let expectation = match entry.expected {
            chardeg_core::catalog::Expectation::Listed => "listed",
            chardeg_core::catalog::Expectation::Excluded => "excluded",
        };
        match row? {
            Row::Table(report, pass) => {
                ok &= pass;
                println!(
                    "{:<13} {expectation:<8} m = {}  |G| = {}  {}",
                    entry.name,
                    report.m,
                    report.order,
                    if pass { "consistent" } else { "INCONSISTENT" }
                );
            }
            Row::Hook(m, pass) => {
                ok &= pass;
                println!(
                    "{:<13} {expectation:<8} m = {m}  (hook-length formula)  {}",
                    entry.name,
                    if pass { "consistent" } else { "INCONSISTENT" }
                );
            }
            Row::Skipped(note) => println!("{:<13} {expectation:<8} {note}", entry.name),
        }
    }
    Ok(outcome(ok))
}

pub fn verify_lemmas(path: &Path) -> Result<Outcome> {
    let specs = if path.is_dir() {
        FixtureSet::load_dir(path)?.specs
    } else {
        vec![parse_group_file(path)?]
    };
    let results: Vec<Result<(String, bool)>> = specs
        .par_iter()
        .map(|spec| {
            let group = spec.build()?;
            let table = compute(&group, 0)?;
            let checks = lemma_checks(&group, &table, spec.solvable);
            Ok((render::checks(&spec.name, &checks), all_pass(&checks)))
        })
        .collect();
    let mut ok = true;
    for r in results {
        let (text, pass) = r?;
        ok &= pass;
        print!("{text}");
    }
    Ok(outcome(ok))
}

pub fn sym(max_n: usize) -> Result<Outcome> {
    if max_n == 0 || max_n > MAX_N {
        return Err(Error::InvalidArgument(format!("--max-n must be in 1..={MAX_N}")));
    }
    let mut ok = true;
    println!("{:>3}  {:>6}  {:>6}  extendible triple degree", "n", "m(Sn)", "m(An)");
    for n in 1..=max_n {
        let ms = m_sym(n)?;
        let (ma, triple) = if n >= 2 {
            (Some(m_alt(n)?), extendible_triple(n)?)
        } else {
            (None, None)
        };
        if n >= 2 {
            ok &= theorem_b_verdict(&format!("S{n}"), ms) != Verdict::Inconsistent;
        }
        if n >= 5 {
            ok &= theorem_b_verdict(&format!("A{n}"), ma.unwrap_or(0)) != Verdict::Inconsistent;
        }
        if n >= 13 && n != 16 {
            ok &= triple.is_some();
        }
        println!(
            "{n:>3}  {ms:>6}  {:>6}  {}",
            ma.map_or("-".to_string(), |m| m.to_string()),
            triple.map_or("none".to_string(), |d| d.to_string())
        );
    }
    Ok(outcome(ok))
}

pub fn first_method(order: Option<&str>, group: Option<&str>, p: u64, t: Option<u64>) -> Result<Outcome> {
    let (label, factored, t) = match (order, group) {
        (Some(order), _) => {
            let t = t.ok_or_else(|| Error::InvalidArgument("--t is required with --order".into()))?;
            (order.to_string(), order.parse::<Factored>()?, t)
        }
        (None, Some(name)) => {
            let listed = lookup_listed(name)
                .ok_or_else(|| Error::InvalidArgument(format!("{name} is not a listed group")))?;
            let order = listed.order.parse().expect("listed orders are integers");
            let factored = Factored::from_smooth(&order, 1000)
                .ok_or_else(|| Error::InvalidArgument(format!("cannot factor |{name}|")))?;
            let t = match t {
                Some(t) => t,
                None => smallest_brauer_degree(&bundled_brauer_degrees(), listed.name, p)
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("no bundled {p}-Brauer degree for {name}; pass --t"))
                    })?,
            };
            (listed.name.to_string(), factored, t)
        }
        (None, None) => return Err(Error::InvalidArgument("give --order or --group".into())),
    };
    let e = first_method_threshold(&factored, p);
    println!("|G/V| = {factored} ({label})");
    println!("2σ(|G/V|) = {}", divisor_sum(&factored) * 2u32);
    println!("largest e with {p}^e ≤ 2σ: {e}");
    if t > e as u64 {
        println!("t = {t} > {e}: a nontrivial V is impossible");
    } else {
        println!("t = {t} ≤ {e}: not ruled out");
    }
    Ok(Outcome::Consistent)
}

pub fn second_method(quotient: u64, indices: Vec<u64>, primes: &[u64]) -> Result<Outcome> {
    if quotient == 0 {
        return Err(Error::InvalidArgument("--quotient must be positive".into()));
    }
    let values = second_method_values(&SecondMethodInstance::new(quotient, indices));
    let filter = (!primes.is_empty()).then_some(primes);
    let powers = prime_power_values(&values, filter);
    let list = |set: &std::collections::BTreeSet<u64>| {
        set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    println!("values: {}", list(&values));
    println!("max: {}", values.iter().max().copied().unwrap_or(0));
    println!("prime powers: {}", if powers.is_empty() { "none".into() } else { list(&powers) });
    Ok(Outcome::Consistent)
}

pub fn solvable_orders() -> Result<Outcome> {
    let list = |set: std::collections::BTreeSet<u64>| {
        set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    println!("|G:G'| = 2, G'' = 1: {}", list(casoab_orders()));
    for (label, case) in [("S3", SecondCase::S3), ("D10", SecondCase::D10)] {
        println!("G/G'' = {label}, G''' = 1: {}", list(secondcase_orders(case, false)));
        println!("  divisible by |G:G''|: {}", list(secondcase_orders(case, true)));
        println!("  published list: {}", list(case.printed_orders()));
    }
    println!("G/G''' = S4: {} raw candidates", solvablecase_raw_orders().len());
    println!("  |G|/24 a power of 3, 5, 7 or 13: {}", list(solvablecase_orders()));
    Ok(Outcome::Consistent)
}

pub fn kp(family: Family, n: u64, p: u64, module: KpModule) -> Result<Outcome> {
    let dim = kp_h2(&KpCase { family, n, p, module })?;
    let h = match family {
        Family::Alternating => "A",
        Family::Symmetric => "S",
    };
    println!("dim H^2({h}{n}, {module:?}) over F_{p} = {dim}");
    Ok(Outcome::Consistent)
}

pub fn binomial(max_n: u64) -> Result<Outcome> {
    let solutions = binomial_constraint_solutions(max_n);
    let shown: Vec<String> = solutions.iter().map(|n| n.to_string()).collect();
    println!("n ≤ {max_n} with C(n, n/2) = a + b·c: {}", shown.join(" "));
    Ok(Outcome::Consistent)
}

pub fn scan(dir: &Path, expect_none_m2: bool, solvable_only: bool, seed: u64) -> Result<Outcome> {
    let set = FixtureSet::load_dir(dir)?;
    let specs: Vec<&GroupSpec> = set
        .specs
        .iter()
        .filter(|s| !solvable_only || s.solvable == Some(true))
        .collect();
    let reports: Vec<Result<MultiplicityReport>> = specs
        .par_iter()
        .map(|spec| {
            let group = spec.build()?;
            Ok(MultiplicityReport::new(&compute(&group, seed)?))
        })
        .collect();
    let mut with_two = Vec::new();
    for report in reports {
        let report = report?;
        println!("{:<24} |G| = {:<8} m = {:<3} {}", report.name, report.order, report.m, report.pattern);
        if report.m == 2 {
            with_two.push(report.name);
        }
    }
    println!(
        "scanned {} of {} groups; m = 2: {}",
        specs.len(),
        set.len(),
        if with_two.is_empty() { "none".to_string() } else { with_two.join(", ") }
    );
    Ok(outcome(!(expect_none_m2 && !with_two.is_empty())))
}
