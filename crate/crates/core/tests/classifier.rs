mod support;

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use chardeg_core::bounds::Factored;
use chardeg_core::chartab::character_table;
use chardeg_core::classifier::*;
use chardeg_core::permgroup::{PermGroup, Permutation};
use chardeg_core::symchar::factorial;
use support::{closure, conjugacy_classes, perms};

fn group(name: &str, degree: usize, cycles: &[&str]) -> PermGroup {
    PermGroup::from_cycles(name, degree, cycles).unwrap()
}

fn pattern(degrees: &[u64]) -> DegreePattern {
    DegreePattern::from_degrees(degrees.iter().copied())
}

fn outcomes(checks: &[Check]) -> Vec<Outcome> {
    checks.iter().map(|c| c.outcome).collect()
}

/// Classes of `S` mapped to themselves by every generator of `A`; with a
/// cyclic quotient this counts the characters of `S` extending to `A`.
fn stable_class_count(s: &[&str], a: &[&str], degree: usize) -> usize {
    let elements = closure(&perms(degree, s));
    let classes = conjugacy_classes(&elements);
    let amb = perms(degree, a);
    classes
        .iter()
        .filter(|class| {
            let members: HashSet<&Permutation> = class.iter().collect();
            amb.iter()
                .all(|x| members.contains(&class[0].conjugate_by(x)))
        })
        .count()
}

#[test]
fn patterns_of_small_groups() {
    let trivial = character_table(&group("1", 1, &["()"])).unwrap();
    assert_eq!(trivial.degree_pattern(), pattern(&[1]));
    assert_eq!(trivial.degree_pattern().m(), 1);

    let s3 = character_table(&group("S3", 3, &["(1 2 3)", "(1 2)"])).unwrap();
    assert_eq!(s3.degree_pattern(), pattern(&[1, 1, 2]));
    assert_eq!(s3.degree_pattern().m(), 2);

    let s4 = character_table(&group("S4", 4, &["(1 2 3 4)", "(1 2)"])).unwrap();
    assert_eq!(s4.degree_pattern(), pattern(&[1, 1, 2, 3, 3]));
    assert_eq!(s4.degree_pattern().m(), 2);
}

#[test]
fn basic_constraints() {
    use Outcome::*;
    let six = BigUint::from(6u32);
    assert!(all_pass(&verify_basic_constraints(&pattern(&[1, 1, 2]), &six)));
    let five = verify_basic_constraints(&pattern(&[1, 2]), &BigUint::from(5u32));
    // 1 + 4 = 5, so only divisibility fails
    assert_eq!(outcomes(&five), vec![Pass, Fail, Pass]);
    let twelve = verify_basic_constraints(&pattern(&[1, 1, 3]), &BigUint::from(12u32));
    assert_eq!(outcomes(&twelve), vec![Fail, Pass, Pass]);
}

#[test]
fn tent() {
    assert_eq!(tent_check(true, 1, &Factored::from_u64(24)), TentOutcome::Pass);
    assert_eq!(tent_check(true, 2, &Factored::from_u64(22)), TentOutcome::Fail(vec![11]));
    assert_eq!(tent_check(false, 1, &Factored::from_u64(22)), TentOutcome::Skipped);
    assert_eq!(tent_check(true, 4, &Factored::from_u64(22)), TentOutcome::Skipped);
}

#[test]
fn verdicts() {
    assert_eq!(theorem_b_verdict("SL(2,5)", 2), Verdict::Consistent);
    assert_eq!(theorem_b_verdict("A8", 3), Verdict::Consistent);
    assert_eq!(theorem_b_verdict("Σ4", 3), Verdict::Inconsistent);
    assert_eq!(theorem_b_verdict("S6", 2), Verdict::Inconsistent);
    assert_eq!(theorem_b_verdict("(C2)^4⋊A7", 2), Verdict::Consistent);
    assert_eq!(theorem_b_verdict("SmallGroup(48,3)", 4), Verdict::Unlisted);
}

#[test]
fn listed_orders() {
    let order = |name: &str| -> BigUint { lookup_listed(name).unwrap().order.parse().unwrap() };
    for n in [5, 6, 7, 9, 10, 16] {
        assert_eq!(order(&format!("A{n}")), factorial(n) / 2u32);
    }
    for n in [3, 4, 5, 8, 10] {
        assert_eq!(order(&format!("S{n}")), factorial(n));
    }
    let factored = |s: &str| s.parse::<Factored>().unwrap().value();
    assert_eq!(order("McL"), factored("2^7*3^6*5^3*7*11"));
    assert_eq!(order("Th"), factored("2^15*3^10*5^3*7^2*13*19*31"));
    assert_eq!(order("F3+"), factored("2^21*3^16*5^2*7^3*11*13*17*23*29"));
    assert_eq!(order("Co1"), factored("2^21*3^9*5^4*7^2*11*13*23"));
    assert_eq!(order("B"), factored("2^41*3^13*5^6*7^2*11*13*17*19*23*31*47"));
    assert_eq!(order("J2"), factored("2^7*3^3*5^2*7"));
    assert_eq!(order("M22"), factored("2^7*3^2*5*7*11"));
    assert_eq!(order("M12.2"), factored("2^7*3^3*5*11"));
    assert_eq!(order("U3(5).2"), factored("2^5*3^2*5^3*7"));
    assert_eq!(order("L3(3).2"), factored("2^5*3^3*13"));
    assert_eq!(order("11^2:SL(2,5)"), BigUint::from(121u32 * 120));
    assert_eq!(order("2^4:A7"), BigUint::from(16u32 * 2520));

    let names: HashSet<&str> = THEOREM_B.iter().map(|g| g.name).collect();
    assert_eq!(names.len(), THEOREM_B.len());
    assert!(ALMOST_SIMPLE.iter().all(|n| names.contains(n)));
    assert!(!is_almost_simple_listed("SL(2,5)"));
    assert!(is_almost_simple_listed("Σ10"));
}

#[test]
fn extendible_counts() {
    let a5 = ["(1 2 3 4 5)", "(3 4 5)"];
    let s5 = ["(1 2 3 4 5)", "(1 2)"];
    assert_eq!(stable_class_count(&a5, &s5, 5), 3);
    let max = extendible_same_degree_max(&group("A5", 5, &a5), &group("S5", 5, &s5)).unwrap();
    assert_eq!(max, 1);

    let a6 = ["(1 2 3)", "(2 3 4 5 6)"];
    let s6 = ["(1 2 3 4 5 6)", "(1 2)"];
    assert_eq!(stable_class_count(&a6, &s6, 6), 5);
    let max = extendible_same_degree_max(&group("A6", 6, &a6), &group("S6", 6, &s6)).unwrap();
    assert_eq!(max, 2);

    for (name, gens, degree) in [("S4", &["(1 2 3 4)", "(1 2)"][..], 4), ("A5", &a5[..], 5)] {
        let g = group(name, degree, gens);
        let m = character_table(&g).unwrap().degree_pattern().m();
        assert_eq!(extendible_same_degree_max(&g, &g).unwrap(), m);
    }
}

#[test]
fn extendible_rejects_bad_pairs() {
    let s5 = group("S5", 5, &["(1 2 3 4 5)", "(1 2)"]);
    let a5 = group("A5", 5, &["(1 2 3 4 5)", "(3 4 5)"]);
    assert!(extendible_same_degree_max(&s5, &a5).is_err());
    let c5 = group("C5", 5, &["(1 2 3 4 5)"]);
    assert!(extendible_same_degree_max(&c5, &s5).is_err());
}

#[test]
fn report_json_key_order() {
    let t = character_table(&group("S4", 4, &["(1 2 3 4)", "(1 2)"])).unwrap();
    let report = MultiplicityReport::new(&t);
    assert!(report.quadratic_rational);
    assert_eq!(
        report.to_json(),
        r#"{"name":"S4","order":24,"classes":5,"pattern":"1^2 2 3^2","m":2,"maxFieldDegree":1,"verdict":"consistent"}"#
    );
}

#[test]
fn lemma_suite_on_small_groups() {
    let cases: [(&str, usize, &[&str]); 5] = [
        ("S4", 4, &["(1 2 3 4)", "(1 2)"]),
        ("A5", 5, &["(1 2 3 4 5)", "(3 4 5)"]),
        ("D10", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
        ("C7", 7, &["(1 2 3 4 5 6 7)"]),
        ("1", 1, &["()"]),
    ];
    for (name, degree, gens) in cases {
        let g = group(name, degree, gens);
        let t = character_table(&g).unwrap();
        let checks = lemma_checks(&g, &t, None);
        assert!(all_pass(&checks), "{name}: {checks:?}");
    }
}

#[test]
fn tent_failure_is_reported() {
    // C11 is solvable but not quadratic rational, so the prime test is skipped
    let g = group("C11", 11, &["(1 2 3 4 5 6 7 8 9 10 11)"]);
    let t = character_table(&g).unwrap();
    let tent = lemma_checks(&g, &t, Some(true))
        .into_iter()
        .find(|c| c.name == "tent-primes")
        .unwrap();
    assert_eq!(tent.outcome, Outcome::Skipped);
    assert_eq!(t.max_field_degree(), 10);
}

proptest! {
    #[test]
    fn m_is_max_multiplicity(degrees in prop::collection::vec(1u64..20, 1..30)) {
        let p = pattern(&degrees);
        let direct = degrees.iter().map(|d| degrees.iter().filter(|&e| e == d).count()).max().unwrap();
        prop_assert_eq!(p.m(), direct);
        prop_assert_eq!(p.len(), degrees.len());
        let sum: u64 = degrees.iter().map(|d| d * d).sum();
        prop_assert_eq!(p.sum_of_squares(), BigUint::from(sum));
    }

    #[test]
    fn verdict_truth_table(listed in prop::sample::select(THEOREM_B.to_vec()), m in 1usize..6) {
        let expected = if m == 2 { Verdict::Consistent } else { Verdict::Inconsistent };
        prop_assert_eq!(theorem_b_verdict(listed.name, m), expected);
    }
}
