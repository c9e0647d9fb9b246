//! Arithmetic bounds on minimal normal subgroups and candidate group
//! orders.
//!
//! Orders of large groups are handled as factored integers, and every
//! logarithmic comparison is done with exact integer powers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::modp::is_prime;

/// A positive integer as a product of prime powers, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    factors: Vec<(u64, u32)>,
}

impl Factored {
    pub fn new(mut factors: Vec<(u64, u32)>) -> Result<Self> {
        factors.retain(|f| f.1 > 0);
        factors.sort_unstable();
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidArgument(format!("prime {} repeated", w[0].0)));
            }
        }
        if let Some(&(p, _)) = factors.iter().find(|f| !is_prime(f.0)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(Factored { factors })
    }

    pub fn from_u64(mut n: u64) -> Self {
        assert!(n >= 1);
        let mut factors = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            factors.push((n, 1));
        }
        Factored { factors }
    }

    /// Factors `n` by trial division with primes up to `bound`; `None` if a
    /// larger prime factor remains.
    pub fn from_smooth(n: &BigUint, bound: u64) -> Option<Self> {
        if *n == BigUint::ZERO {
            return None;
        }
        let mut rest = n.clone();
        let mut factors = Vec::new();
        for p in (2..=bound).filter(|&p| is_prime(p)) {
            let mut e = 0;
            while (&rest % p) == BigUint::ZERO {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        rest.is_one().then_some(Factored { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// Exponent of `p`.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|f| f.0 == p)
            .map_or(0, |f| f.1)
    }
}

impl FromStr for Factored {
    type Err = Error;

    /// `2^41*3^13*5` or a plain decimal integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |why: &str| Error::InvalidArgument(format!("`{s}`: {why}"));
        if !s.contains('^') && !s.contains('*') {
            let n: u64 = s.parse().map_err(|_| bad("not an integer"))?;
            if n == 0 {
                return Err(bad("zero"));
            }
            return Ok(Factored::from_u64(n));
        }
        let factors = s
            .split('*')
            .map(|term| {
                let (p, e) = term.trim().split_once('^').unwrap_or((term.trim(), "1"));
                let p: u64 = p.trim().parse().map_err(|_| bad("bad prime"))?;
                let e: u32 = e.trim().parse().map_err(|_| bad("bad exponent"))?;
                Ok((p, e))
            })
            .collect::<Result<Vec<_>>>()?;
        Factored::new(factors)
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `σ(n)`, the sum of the divisors, computed multiplicatively.
pub fn divisor_sum(n: &Factored) -> BigUint {
    n.factors.iter().fold(BigUint::one(), |acc, &(p, e)| {
        // 1 + p + … + p^e
        let p = BigUint::from(p);
        acc * ((p.pow(e + 1) - 1u32) / (p - 1u32))
    })
}

/// Largest `e` with `p^e ≤ 2σ(order)`.
pub fn first_method_threshold(order: &Factored, p: u64) -> u32 {
    assert!(p >= 2);
    let bound = divisor_sum(order) * 2u32;
    let p = BigUint::from(p);
    let mut e = 0;
    let mut power = p.clone();
    while power <= bound {
        e += 1;
        power *= &p;
    }
    e
}

/// Whether a smallest nontrivial `p`-Brauer degree `t` forces `V = 1`:
/// `|V| ≥ p^t` yet `|V| ≤ 2σ(|G/V|)`.
pub fn first_method_rules_out(order: &Factored, p: u64, t: u64) -> bool {
    t > first_method_threshold(order, p) as u64
}

/// `|V| = 1 + a|G/V| + Σ a_H |G:H|` with `a ∈ {0,1,2}`, `a_H ∈ {0,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondMethodInstance {
    pub quotient_order: u64,
    /// Indices `|G:H|` of the proper subgroups `H` with `m(H) = 2`.
    pub indices: Vec<u64>,
}

impl SecondMethodInstance {
    pub fn new(quotient_order: u64, indices: Vec<u64>) -> Self {
        SecondMethodInstance {
            quotient_order,
            indices,
        }
    }
}

pub fn second_method_values(inst: &SecondMethodInstance) -> BTreeSet<u64> {
    let mut values: BTreeSet<u64> = (0..3).map(|a| 1 + a * inst.quotient_order).collect();
    for &index in &inst.indices {
        let shifted: Vec<u64> = values.iter().map(|v| v + index).collect();
        values.extend(shifted);
    }
    values
}

/// `(p, d)` with `n = p^d`, `d ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = Factored::from_u64(n.max(1));
    match f.factors() {
        [(p, d)] => Some((*p, *d)),
        _ => None,
    }
}

/// Values that are prime powers, optionally restricted to the given primes.
pub fn prime_power_values(values: &BTreeSet<u64>, primes: Option<&[u64]>) -> BTreeSet<u64> {
    values
        .iter()
        .copied()
        .filter(|&v| match prime_power(v) {
            Some((p, _)) => primes.is_none_or(|ps| ps.contains(&p)),
            None => false,
        })
        .collect()
}

/// Admissible dimensions `k'·n` of a non-central minimal normal subgroup,
/// given Brauer degrees `n` occurring `k` times.
pub fn minnorm_dims(degrees: &[(u64, usize)]) -> BTreeSet<u64> {
    degrees
        .iter()
        .flat_map(|&(n, k)| (1..=k as u64).map(move |j| j * n))
        .collect()
}

/// `|G| = 2 + a·2²`, `a ∈ {1, 2}`: metabelian groups with `|G:G'| = 2`.
pub fn casoab_orders() -> BTreeSet<u64> {
    (1..=2).map(|a| 2 + a * 4).collect()
}

/// The two possibilities for `G/G''` when `G''' = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SecondCase {
    S3,
    D10,
}

impl SecondCase {
    /// `(|G:G''|, |G':G''|)`.
    pub fn indices(self) -> (u64, u64) {
        match self {
            SecondCase::S3 => (6, 3),
            SecondCase::D10 => (10, 5),
        }
    }

    /// The candidate sets as printed alongside the derivation; they differ
    /// from the enumeration of the affine form.
    pub fn printed_orders(self) -> BTreeSet<u64> {
        let printed: &[u64] = match self {
            SecondCase::S3 => &[15, 24, 32, 51, 60, 78, 81, 90],
            SecondCase::D10 => &[35, 60, 110, 135, 160, 210, 260],
        };
        printed.iter().copied().collect()
    }
}

/// `|G| = |G:G''| + a|G:G''|² + b|G':G''|²` over `a, b ∈ {0,1,2}`,
/// `(a, b) ≠ (0, 0)`; with `divisible`, only orders divisible by `|G:G''|`.
pub fn secondcase_orders(case: SecondCase, divisible: bool) -> BTreeSet<u64> {
    let (q, r) = case.indices();
    let mut out = BTreeSet::new();
    for a in 0..3 {
        for b in 0..3 {
            if (a, b) == (0, 0) {
                continue;
            }
            let n = q + a * q * q + b * r * r;
            if !divisible || n % q == 0 {
                out.insert(n);
            }
        }
    }
    out
}

/// `24 + a·2² + b·4² + c·6² + d·8² + e·12² + f·24²` with `a ≤ 1` and the
/// other coefficients at most 2.
pub fn solvablecase_raw_orders() -> BTreeSet<u64> {
    let mut out = BTreeSet::from([24u64]);
    for (square, max) in [(4u64, 1u64), (16, 2), (36, 2), (64, 2), (144, 2), (576, 2)] {
        let current: Vec<u64> = out.iter().copied().collect();
        for v in current {
            for k in 1..=max {
                out.insert(v + k * square);
            }
        }
    }
    out
}

/// Raw orders for which `|G|/24` is a power of 3, 5, 7 or 13.
pub fn solvablecase_orders() -> BTreeSet<u64> {
    solvablecase_raw_orders()
        .into_iter()
        .filter(|&n| {
            n % 24 == 0
                && prime_power(n / 24).is_some_and(|(p, _)| [3, 5, 7, 13].contains(&p))
        })
        .collect()
}

/// A central minimal normal subgroup of order `p` needs `p` to divide
/// `|(G/V)'|`.
pub fn central_case_allows(p: u64, derived_quotient_order: u64) -> bool {
    derived_quotient_order.is_multiple_of(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Alternating,
    Symmetric,
}

/// Submodules of the natural permutation module: `I` is the augmentation
/// module (dimension `n-1`), `L = I / l` the heart (dimension `n-2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KpModule {
    L,
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KpCase {
    pub family: Family,
    pub n: u64,
    pub p: u64,
    pub module: KpModule,
}

/// `dim H²(H, M)` for `H ∈ {A_n, S_n}` and the small permutation-module
/// constituents, from the published classification.
pub fn kp_h2(case: &KpCase) -> Result<u32> {
    let KpCase {
        family,
        n,
        p,
        module,
    } = *case;
    if n < 5 {
        return Err(Error::InvalidArgument(format!("n = {n} < 5")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let alt = family == Family::Alternating;
    let dim = match module {
        KpModule::L => {
            (p == 2 && n % 2 == 0 && !alt)
                || (p == 3 && [5, 8, 9].contains(&n) && alt)
                || (p == 5 && n == 5 && alt)
        }
        KpModule::I => {
            if n % p == 0 {
                return Err(Error::InvalidArgument(format!(
                    "I is only covered for p not dividing n (p = {p}, n = {n})"
                )));
            }
            p == 3 && [5, 8].contains(&n) && alt
        }
    };
    Ok(dim as u32)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `n ≤ max_n` with `C(n, ⌊n/2⌋) = a + b·c`, `a, b ∈ {0,1}`, `c ∈ {7, 60}`.
pub fn binomial_constraint_solutions(max_n: u64) -> BTreeSet<u64> {
    let targets: BTreeSet<BigUint> = [0u32, 1]
        .iter()
        .flat_map(|&a| {
            [0u32, 1]
                .iter()
                .flat_map(move |&b| [7u32, 60].map(move |c| BigUint::from(a + b * c)))
        })
        .collect();
    (1..=max_n)
        .filter(|&n| targets.contains(&binomial(n, n / 2)))
        .collect()
}

/// Smallest nontrivial `p`-Brauer degree of a group, with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerDegreeRecord {
    pub group: String,
    pub p: u64,
    pub degree: u64,
    pub source: String,
}

const BRAUER_DATA: &str = include_str!("../data/brauer_degrees.tsv");
const DIMENSION_DATA: &str = include_str!("../data/possible_dimensions.tsv");

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split('\t').collect()))
}

/// Parses `group<TAB>p<TAB>degree<TAB>source` records.
pub fn parse_brauer_records(name: &str, text: &str) -> Result<Vec<BrauerDegreeRecord>> {
    data_lines(text)
        .map(|(line, fields)| {
            let err = |reason: &str| Error::Syntax {
                file: name.to_string(),
                line,
                reason: reason.to_string(),
            };
            let [group, p, degree, source] = fields[..] else {
                return Err(err("expected four tab-separated fields"));
            };
            let p: u64 = p.parse().map_err(|_| err("bad prime"))?;
            if !is_prime(p) {
                return Err(err("p is not prime"));
            }
            Ok(BrauerDegreeRecord {
                group: group.to_string(),
                p,
                degree: degree.parse().map_err(|_| err("bad degree"))?,
                source: source.to_string(),
            })
        })
        .collect()
}

pub fn bundled_brauer_degrees() -> Vec<BrauerDegreeRecord> {
    parse_brauer_records("brauer_degrees.tsv", BRAUER_DATA).expect("bundled data parses")
}

pub fn smallest_brauer_degree(records: &[BrauerDegreeRecord], group: &str, p: u64) -> Option<u64> {
    records
        .iter()
        .find(|r| r.group == group && r.p == p)
        .map(|r| r.degree)
}

/// Reference table of the dimensions of `V` left open by the First and
/// Second Method steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionRecord {
    pub group: String,
    pub p: u64,
    pub dims: Vec<u32>,
}

pub fn possible_dimensions() -> Vec<DimensionRecord> {
    data_lines(DIMENSION_DATA)
        .map(|(_, f)| DimensionRecord {
            group: f[0].to_string(),
            p: f[1].parse().expect("bundled prime"),
            dims: f[2].split(',').map(|d| d.parse().expect("bundled dimension")).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factored_round_trip() {
        let f: Factored = "2^3*3*5^2".parse().unwrap();
        assert_eq!(f.to_string(), "2^3*3*5^2");
        assert_eq!(f.value(), BigUint::from(600u32));
        assert_eq!(f.valuation(5), 2);
        assert_eq!("600".parse::<Factored>().unwrap(), f);
        assert_eq!(Factored::from_smooth(&BigUint::from(600u32), 5), Some(f));
        assert_eq!(Factored::from_smooth(&BigUint::from(14u32), 5), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(1, 0), BigUint::one());
    }
}
