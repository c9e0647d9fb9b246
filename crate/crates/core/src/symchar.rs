//! Character degrees of symmetric and alternating groups from partitions
//! and the hook-length formula.
//!
//! The `A_n` degrees come from restricting `S_n` characters: a conjugate
//! pair `{λ, λ'}` restricts to one irreducible character of degree `f^λ`,
//! and a self-conjugate `λ` splits into two characters of degree `f^λ / 2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::classifier::DegreePattern;
use crate::error::{Error, Result};

pub const MAX_N: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts are sorted into weakly decreasing order; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn check_range(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::InvalidArgument(format!(
            "n = {n} outside {min}..={MAX_N}"
        )));
    }
    Ok(())
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    check_range(n, 1)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux, `n! / Π hooks`.
pub fn hook_degree(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(lambda.n()) / hooks
}

/// Degrees of `S_n`, one entry per partition.
#[derive(Clone, Debug)]
pub struct SymDegreeTable {
    pub n: usize,
    pub entries: Vec<(Partition, BigUint)>,
}

impl SymDegreeTable {
    pub fn new(n: usize) -> Result<Self> {
        let entries = partitions(n)?
            .into_iter()
            .map(|l| {
                let d = hook_degree(&l);
                (l, d)
            })
            .collect();
        Ok(SymDegreeTable { n, entries })
    }

    pub fn pattern(&self) -> DegreePattern {
        DegreePattern::from_degrees(self.entries.iter().map(|e| e.1.clone()))
    }

    /// Degrees of `A_n` obtained by restriction.
    pub fn alt_degrees(&self) -> Result<Vec<BigUint>> {
        let mut out = Vec::new();
        for (lambda, d) in &self.entries {
            let conj = lambda.conjugate();
            if conj == *lambda {
                let two = BigUint::from(2u32);
                if d % &two != BigUint::ZERO {
                    return Err(Error::InvalidArgument(format!(
                        "self-conjugate {lambda} has odd degree {d}"
                    )));
                }
                let half = d / two;
                out.push(half.clone());
                out.push(half);
            } else if *lambda > conj {
                out.push(d.clone());
            }
        }
        Ok(out)
    }
}

pub fn sym_pattern(n: usize) -> Result<DegreePattern> {
    Ok(SymDegreeTable::new(n)?.pattern())
}

pub fn m_sym(n: usize) -> Result<usize> {
    Ok(sym_pattern(n)?.m())
}

/// Degree pattern of `A_n`, `2 ≤ n ≤ 60`.
pub fn alt_pattern(n: usize) -> Result<DegreePattern> {
    check_range(n, 2)?;
    Ok(DegreePattern::from_degrees(
        SymDegreeTable::new(n)?.alt_degrees()?,
    ))
}

pub fn m_alt(n: usize) -> Result<usize> {
    Ok(alt_pattern(n)?.m())
}

/// Smallest degree shared by at least three `A_n` characters that extend to
/// `S_n`, i.e. by three conjugate pairs of non-self-conjugate partitions.
pub fn extendible_triple(n: usize) -> Result<Option<BigUint>> {
    check_range(n, 2)?;
    let table = SymDegreeTable::new(n)?;
    let mut pairs: BTreeMap<BigUint, usize> = BTreeMap::new();
    for (lambda, d) in &table.entries {
        if *lambda > lambda.conjugate() {
            *pairs.entry(d.clone()).or_insert(0) += 1;
        }
    }
    Ok(pairs.into_iter().find(|&(_, c)| c >= 3).map(|(d, _)| d))
}

pub fn extendible_triple_exists(n: usize) -> Result<bool> {
    Ok(extendible_triple(n)?.is_some())
}
