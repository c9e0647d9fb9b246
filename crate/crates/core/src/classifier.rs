//! Degree patterns, the multiplicity statistic `m(G)`, and checks of
//! computed tables against the classification of groups with `m(G) = 2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::bounds::Factored;
use crate::chartab::{extendible_characters, CharacterTable, TableOptions};
use crate::cyclotomic::CyclotomicReducer;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

/// Multiset of character degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreePattern {
    counts: BTreeMap<BigUint, usize>,
}

impl DegreePattern {
    pub fn from_degrees<D: Into<BigUint>>(degrees: impl IntoIterator<Item = D>) -> Self {
        let mut counts = BTreeMap::new();
        for d in degrees {
            *counts.entry(d.into()).or_insert(0) += 1;
        }
        DegreePattern { counts }
    }

    /// Degree → multiplicity, ascending by degree.
    pub fn counts(&self) -> &BTreeMap<BigUint, usize> {
        &self.counts
    }

    /// Maximal multiplicity of a single degree.
    pub fn m(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, degree: u64) -> usize {
        self.counts.get(&BigUint::from(degree)).copied().unwrap_or(0)
    }

    /// Degrees with repetition, ascending. Panics if a degree exceeds `u64`.
    pub fn degrees(&self) -> Vec<u64> {
        self.counts
            .iter()
            .flat_map(|(d, &c)| {
                let d: u64 = d.try_into().expect("degree fits in u64");
                std::iter::repeat_n(d, c)
            })
            .collect()
    }

    pub fn sum_of_squares(&self) -> BigUint {
        self.counts
            .iter()
            .map(|(d, &c)| d * d * BigUint::from(c))
            .sum()
    }
}

impl fmt::Display for DegreePattern {
    /// `1^2 2 3^2` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, &c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of a single check in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Outcome::Fail
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            outcome: Outcome::from_bool(ok),
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            outcome: Outcome::Skipped,
            detail: detail.into(),
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.outcome.is_failure())
}

/// Necessary conditions on a degree pattern of a group of the given order.
pub fn verify_basic_constraints(pattern: &DegreePattern, order: &BigUint) -> Vec<Check> {
    let sum = pattern.sum_of_squares();
    let bad_degrees: Vec<String> = pattern
        .counts()
        .keys()
        .filter(|d| (order % *d) != BigUint::ZERO)
        .map(|d| d.to_string())
        .collect();
    let linear = pattern.multiplicity(1);
    vec![
        Check::new("sum-of-squares", sum == *order, format!("Σd² = {sum}, |G| = {order}")),
        Check::new(
            "degrees-divide-order",
            bad_degrees.is_empty(),
            if bad_degrees.is_empty() {
                String::new()
            } else {
                format!("non-divisors: {}", bad_degrees.join(" "))
            },
        ),
        Check::new(
            "linear-count-divides-order",
            linear >= 1 && order % BigUint::from(linear) == BigUint::ZERO,
            format!("{linear} linear characters"),
        ),
    ]
}

/// Primes allowed in the order of a solvable quadratic rational group.
pub const TENT_PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TentOutcome {
    /// Not solvable, or not quadratic rational.
    Skipped,
    Pass,
    /// Prime divisors of the order outside [`TENT_PRIMES`].
    Fail(Vec<u64>),
}

pub fn tent_check(solvable: bool, max_field_degree: usize, order: &Factored) -> TentOutcome {
    if !solvable || max_field_degree > 2 {
        return TentOutcome::Skipped;
    }
    let bad: Vec<u64> = order
        .factors()
        .iter()
        .map(|f| f.0)
        .filter(|p| !TENT_PRIMES.contains(p))
        .collect();
    if bad.is_empty() {
        TentOutcome::Pass
    } else {
        TentOutcome::Fail(bad)
    }
}

/// A group on the classification list, with its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ListedGroup {
    pub name: &'static str,
    pub order: &'static str,
    pub aliases: &'static [&'static str],
}

const fn listed(
    name: &'static str,
    order: &'static str,
    aliases: &'static [&'static str],
) -> ListedGroup {
    ListedGroup {
        name,
        order,
        aliases,
    }
}

/// Every group with `m(G) = 2`.
pub const THEOREM_B: [ListedGroup; 30] = [
    listed("C2", "2", &["Z2", "S2", "Sym(2)"]),
    listed("S3", "6", &["Sym(3)", "D6"]),
    listed("D10", "10", &[]),
    listed("S4", "24", &["Sym(4)"]),
    listed("A5", "60", &["Alt(5)", "L2(5)", "L2(4)", "PSL(2,5)", "PSL(2,4)"]),
    listed("S5", "120", &["Sym(5)", "PGL(2,5)"]),
    listed("A6", "360", &["Alt(6)", "L2(9)", "PSL(2,9)"]),
    listed("A7", "2520", &["Alt(7)"]),
    listed("S8", "40320", &["Sym(8)"]),
    listed("A9", "181440", &["Alt(9)"]),
    listed("A10", "1814400", &["Alt(10)"]),
    listed("S10", "3628800", &["Sym(10)"]),
    listed("A16", "10461394944000", &["Alt(16)"]),
    listed("L2(11)", "660", &["PSL(2,11)"]),
    listed("L2(7)", "168", &["PSL(2,7)", "L3(2)", "PSL(3,2)"]),
    listed("L3(3).2", "11232", &["PSL(3,3).2"]),
    listed("U3(5).2", "252000", &["PSU(3,5).2"]),
    listed("M12.2", "190080", &[]),
    listed("M22", "443520", &[]),
    listed("McL", "898128000", &[]),
    listed("Th", "90745943887872000", &[]),
    listed("J2", "604800", &["HJ"]),
    listed("J2.2", "1209600", &["HJ.2"]),
    listed("F3+", "1255205709190661721292800", &["Fi24'"]),
    listed("Co1", "4157776806543360000", &[]),
    listed("B", "4154781481226426191177580544000000", &["BM"]),
    listed("SL(2,5)", "120", &["2.A5"]),
    listed("2^4:A6", "5760", &[]),
    listed("2^4:A7", "40320", &[]),
    listed("11^2:SL(2,5)", "14520", &[]),
];

/// The almost-simple groups with `m(G) = 2`.
pub const ALMOST_SIMPLE: [&str; 22] = [
    "A5", "S5", "A6", "A7", "S8", "A9", "A10", "S10", "A16", "L2(11)", "L2(7)", "L3(3).2",
    "U3(5).2", "M12.2", "M22", "McL", "Th", "J2", "J2.2", "F3+", "Co1", "B",
];

/// Canonical spelling: no whitespace, `Σ` as `S`, `⋊` as `:`, and cyclic
/// factors `(Cp)^k` or `Cp^k` as `p^k`.
pub fn normalize_name(name: &str) -> String {
    let mut s: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'Σ' => 'S',
            '⋊' => ':',
            '′' => '\'',
            _ => c,
        })
        .collect();
    s = s.replace('_', "");
    for (from, to) in [("(C2)^4", "2^4"), ("C2^4", "2^4"), ("(C11)^2", "11^2"), ("C11^2", "11^2")] {
        s = s.replace(from, to);
    }
    s
}

/// Entry of [`THEOREM_B`] matching a name or alias.
pub fn lookup_listed(name: &str) -> Option<&'static ListedGroup> {
    let key = normalize_name(name);
    THEOREM_B
        .iter()
        .find(|g| g.name == key || g.aliases.iter().any(|a| normalize_name(a) == key))
}

pub fn is_almost_simple_listed(name: &str) -> bool {
    lookup_listed(name).is_some_and(|g| ALMOST_SIMPLE.contains(&g.name))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Inconsistent,
    /// The name resolves neither to a listed group nor to a known
    /// non-member, so membership cannot be judged.
    Unlisted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent => "inconsistent",
            Verdict::Unlisted => "unlisted",
        })
    }
}

/// Agreement of a computed `m` with list membership: listed names need
/// `m = 2`, known non-members need `m ≠ 2`.
pub fn theorem_b_verdict(name: &str, m: usize) -> Verdict {
    let listed = lookup_listed(name).is_some();
    if !listed && !is_known_name(name) {
        return Verdict::Unlisted;
    }
    if listed == (m == 2) {
        Verdict::Consistent
    } else {
        Verdict::Inconsistent
    }
}

/// Names outside the list that still denote definite groups: the `A_n`,
/// `S_n`, `C_n`, `D_n` families and the bundled counter-examples.
fn is_known_name(name: &str) -> bool {
    let key = normalize_name(name);
    let family = |prefix: &str| {
        key.strip_prefix(prefix)
            .is_some_and(|n| !n.is_empty() && n.bytes().all(|b| b.is_ascii_digit()))
    };
    ["A", "S", "C", "D"].into_iter().any(family)
        || ["2.A6", "SL(2,7)", "SL(2,9)", "SL(2,3)", "L2(8)", "L2(13)"].contains(&key.as_str())
}

/// Per-group summary with `m`, field degrees and the list verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub name: String,
    pub order: u64,
    pub classes: usize,
    pub pattern: DegreePattern,
    pub m: usize,
    pub max_field_degree: usize,
    pub quadratic_rational: bool,
    pub verdict: Verdict,
}

#[derive(serde::Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportRecord<'a> {
    name: &'a str,
    order: u64,
    classes: usize,
    pattern: String,
    m: usize,
    max_field_degree: usize,
    verdict: Verdict,
}

impl MultiplicityReport {
    pub fn new(table: &CharacterTable) -> Self {
        let pattern = table.degree_pattern();
        let m = pattern.m();
        let max_field_degree = table.max_field_degree();
        MultiplicityReport {
            name: table.name().to_string(),
            order: table.group_order(),
            classes: table.classes().len(),
            verdict: theorem_b_verdict(table.name(), m),
            pattern,
            m,
            max_field_degree,
            quadratic_rational: max_field_degree <= 2,
        }
    }

    /// Single-line JSON with keys in a fixed order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ReportRecord {
            name: &self.name,
            order: self.order,
            classes: self.classes,
            pattern: self.pattern.to_string(),
            m: self.m,
            max_field_degree: self.max_field_degree,
            verdict: self.verdict,
        })
        .expect("report serializes")
    }
}

impl fmt::Display for MultiplicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: |G| = {}, {} classes, degrees {}, m = {}, max field degree {}{}, {}",
            self.name,
            self.order,
            self.classes,
            self.pattern,
            self.m,
            self.max_field_degree,
            if self.quadratic_rational {
                " (quadratic rational)"
            } else {
                ""
            },
            self.verdict
        )
    }
}

/// Largest number of characters of `S` of one degree that extend to `A`.
/// `S` must be a normal subgroup of `A` on the same points.
pub fn extendible_same_degree_max(s: &PermGroup, a: &PermGroup) -> Result<usize> {
    if s.generators().iter().any(|g| !a.contains(g)) {
        return Err(Error::NotMember {
            group: a.name().to_string(),
        });
    }
    let normal = a.generators().iter().all(|x| {
        s.generators()
            .iter()
            .all(|g| s.contains(&g.conjugate_by(x)))
    });
    if !normal {
        return Err(Error::InvalidArgument(format!(
            "{} is not normal in {}",
            s.name(),
            a.name()
        )));
    }
    let amb = CharacterTable::compute(a, &TableOptions::default())?;
    let sub = CharacterTable::compute(
        s,
        &TableOptions {
            prime: Some(amb.prime()),
            ..TableOptions::default()
        },
    )?;
    let fusion = amb.fusion_from(&sub)?;
    let flags = extendible_characters(&sub, &amb, &fusion)?;
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for (i, _) in flags.iter().enumerate().filter(|f| *f.1) {
        *counts.entry(sub.degree(i)).or_insert(0) += 1;
    }
    Ok(counts.into_values().max().unwrap_or(0))
}

/// Largest character count for which the exact orthogonality check runs.
pub const ORTHOGONALITY_CLASS_LIMIT: usize = 128;

/// Property checks for a computed table: basic constraints, the linear
/// count, quotient multiplicities, field degrees, the lower bound on `m`,
/// Tent's prime test and exact row orthogonality.
///
/// `solvable` is catalog metadata; when absent it is computed from the
/// derived series.
pub fn lemma_checks(group: &PermGroup, table: &CharacterTable, solvable: Option<bool>) -> Vec<Check> {
    let order = table.group_order();
    let pattern = table.degree_pattern();
    let m = pattern.m();
    let mut checks = verify_basic_constraints(&pattern, &BigUint::from(order));

    let derived = group.derived_subgroup().order();
    let abelianization = BigUint::from(order) / &derived;
    checks.push(Check::new(
        "linear-count-is-abelianization",
        BigUint::from(table.linear_count()) == abelianization,
        format!("{} linear, |G:G'| = {abelianization}", table.linear_count()),
    ));

    let quotients: Vec<String> = table
        .normal_subgroups()
        .iter()
        .filter_map(|n| {
            let qm = table.quotient_degree_pattern(n).m();
            (qm > m).then(|| format!("|N| = {} gives m = {qm}", n.order))
        })
        .collect();
    checks.push(Check::new(
        "quotient-multiplicity",
        quotients.is_empty(),
        quotients.join("; "),
    ));

    let fields = table.max_field_degree();
    checks.push(Check::new(
        "field-degree-at-most-m",
        fields <= m,
        format!("max |Q(χ):Q| = {fields}, m = {m}"),
    ));

    checks.push(Check::new(
        "nontrivial-implies-m-at-least-2",
        if order == 1 { m == 1 } else { m >= 2 },
        format!("m = {m}"),
    ));

    let solvable = solvable.unwrap_or_else(|| group.is_solvable());
    checks.push(match tent_check(solvable, fields, &Factored::from_u64(order)) {
        TentOutcome::Skipped => Check::skipped("tent-primes", "not solvable quadratic rational"),
        TentOutcome::Pass => Check::new("tent-primes", true, ""),
        TentOutcome::Fail(ps) => Check::new("tent-primes", false, format!("primes {ps:?}")),
    });

    checks.push(if orthogonality_feasible(table) {
        Check::new("row-orthogonality", table.verify_row_orthogonality(), "")
    } else {
        Check::skipped(
            "row-orthogonality",
            format!("{} characters, exponent {}", table.len(), table.classes().exponent()),
        )
    });
    checks
}

fn orthogonality_feasible(table: &CharacterTable) -> bool {
    let e = table.classes().exponent();
    let pairs = (table.len() * (table.len() + 1) / 2) as u64;
    table.len() <= ORTHOGONALITY_CLASS_LIMIT
        && pairs.saturating_mul(e + CyclotomicReducer::table_size(e)) <= 500_000_000
}
