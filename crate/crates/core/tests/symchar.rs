mod support;

use num_bigint::BigUint;
use proptest::prelude::*;

use chardeg_core::chartab::character_table;
use chardeg_core::permgroup::PermGroup;
use chardeg_core::symchar::*;
use support::{count_tableaux, partition_count};

#[test]
fn partition_counts() {
    assert_eq!(partitions(4).unwrap().len(), 5);
    assert_eq!(partitions(10).unwrap().len(), 42);
    for n in 1..=30 {
        let ps = partitions(n).unwrap();
        assert_eq!(ps.len() as u64, partition_count(n));
        let mut dedup = ps.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ps.len());
        assert!(ps.iter().all(|p| p.n() == n));
    }
}

#[test]
fn hook_formula_counts_tableaux() {
    for n in 1..=12 {
        for lambda in partitions(n).unwrap() {
            assert_eq!(
                hook_degree(&lambda),
                BigUint::from(count_tableaux(lambda.parts())),
                "{lambda}"
            );
        }
    }
}

#[test]
fn squares_sum_to_factorial() {
    for n in 1..=30 {
        assert_eq!(sym_pattern(n).unwrap().sum_of_squares(), factorial(n));
    }
    for n in 5..=30 {
        assert_eq!(
            alt_pattern(n).unwrap().sum_of_squares(),
            factorial(n) / BigUint::from(2u32)
        );
    }
}

#[test]
fn symmetric_multiplicities() {
    assert_eq!(m_sym(4).unwrap(), 2);
    assert_eq!(m_sym(10).unwrap(), 2);
    assert!(m_sym(6).unwrap() >= 3);
    let at_most_two: Vec<usize> = (1..=25).filter(|&n| m_sym(n).unwrap() <= 2).collect();
    assert_eq!(at_most_two, vec![1, 2, 3, 4, 5, 8, 10]);
}

#[test]
fn alternating_multiplicities() {
    assert_eq!(m_alt(5).unwrap(), 2);
    assert_eq!(m_alt(16).unwrap(), 2);
    assert!(m_alt(8).unwrap() >= 3);
}

#[test]
fn extendible_triples() {
    for n in [13, 14, 15, 17, 18, 19, 20] {
        assert!(extendible_triple_exists(n).unwrap(), "n = {n}");
    }
    for n in (5..=12).chain([16]) {
        assert!(!extendible_triple_exists(n).unwrap(), "n = {n}");
    }
}

/// `(1 2 3)` with `(1 … n)` for odd `n`, `(2 … n)` for even `n`.
fn alternating_generators(n: usize) -> Vec<String> {
    let start = if n % 2 == 1 { 1 } else { 2 };
    let pts: Vec<String> = (start..=n).map(|i| i.to_string()).collect();
    vec!["(1 2 3)".to_string(), format!("({})", pts.join(" "))]
}

#[test]
fn alternating_patterns_match_tables() {
    for n in 5..=8 {
        let gens = alternating_generators(n);
        let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
        let g = PermGroup::from_cycles(format!("A{n}"), n, &gens).unwrap();
        let table = character_table(&g).unwrap();
        assert_eq!(table.degree_pattern(), alt_pattern(n).unwrap(), "A{n}");
    }
}

proptest! {
    #[test]
    fn conjugation_preserves_degree(parts in prop::collection::vec(1usize..8, 1..7)) {
        let lambda = Partition::new(parts);
        prop_assert_eq!(hook_degree(&lambda), hook_degree(&lambda.conjugate()));
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
    }
}
