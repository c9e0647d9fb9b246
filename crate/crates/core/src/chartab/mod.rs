//! Ordinary character tables by the modular method.
//!
//! Central characters are the common eigenvectors of the class matrices
//! over `F_p` with `p ≡ 1 (mod exp G)` and `p > 2√|G|`. Degrees follow from
//! the norm of each central character, and every value `χ(g)` is lifted to
//! the multiset of eigenvalues of `ρ(g)`, stored as multiplicities of powers
//! of a fixed primitive root of unity. In that form equality, complex
//! conjugation and the Galois action are index permutations.

mod dixon;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::{Integer, Roots};

use crate::classifier::DegreePattern;
use crate::cyclotomic::CyclotomicReducer;
use crate::error::{Error, Result};
use crate::modp::{is_prime, PrimeField};
use crate::permgroup::{ClassSet, ElementIndex, PermGroup, DEFAULT_CAP};

use dixon::{central_characters, degree_of, ClassAlgebra, RootTables};

/// `χ(g) = Σ_a μ_a ζ_o^a` for an element `g` of order `o`, held as the
/// nonzero `(a, μ_a)` pairs in increasing `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterValue {
    order: u32,
    terms: Vec<(u32, u32)>,
}

impl CharacterValue {
    pub(crate) fn from_terms(order: u32, mut terms: Vec<(u32, u32)>) -> Self {
        terms.retain(|t| t.1 > 0);
        terms.sort_unstable();
        CharacterValue { order, terms }
    }

    /// Value `n` on an element of order `order`.
    pub fn integer(order: u32, n: u32) -> Self {
        CharacterValue::from_terms(order, vec![(0, n)])
    }

    pub fn order_of_element(&self) -> u32 {
        self.order
    }

    /// Nonzero `(a, μ_a)` pairs.
    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    /// Dense profile `μ_0, …, μ_{o-1}`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.order as usize];
        for &(a, m) in &self.terms {
            out[a as usize] = m;
        }
        out
    }

    /// `Σ μ_a`, the degree of the owning character.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.1 as u64).sum()
    }

    /// The value at `g⁻¹`.
    pub fn conjugate(&self) -> Self {
        self.galois(self.order as u64 - 1)
    }

    /// Image under `ζ ↦ ζ^k`.
    pub fn galois(&self, k: u64) -> Self {
        let o = self.order as u64;
        let terms = self
            .terms
            .iter()
            .map(|&(a, m)| ((a as u64 * k % o) as u32, m))
            .collect();
        CharacterValue::from_terms(self.order, terms)
    }

    /// The rational integer value when the profile only uses `±1`.
    pub fn as_integer(&self) -> Option<i64> {
        let half = self.order.is_multiple_of(2).then_some(self.order / 2);
        let mut n = 0i64;
        for &(a, m) in &self.terms {
            if a == 0 {
                n += m as i64;
            } else if Some(a) == half {
                n -= m as i64;
            } else {
                return None;
            }
        }
        Some(n)
    }

    /// Lexicographic order on the dense profiles.
    pub fn cmp_profile(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => return self.order.cmp(&other.order),
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(a, m)), Some(&(b, n))) => match a.cmp(&b) {
                    // the side without an entry at the smaller exponent has 0 there
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal if m != n => return m.cmp(&n),
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Removes zero sums `Σ_k ζ^{r + k·o/q}` over cosets of each prime-order
/// subgroup until none remains, then shrinks `o` while every exponent is a
/// multiple of the quotient. Returns the shortened `(order, μ)`.
fn display_form(order: u32, mut mu: Vec<i64>) -> (u32, Vec<i64>) {
    let o = order as usize;
    let primes: Vec<usize> = (2..=o).filter(|&q| o.is_multiple_of(q) && (2..q).all(|d| q % d != 0)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &q in &primes {
            let step = o / q;
            for r in 0..step {
                let min = (0..q).map(|k| mu[r + k * step]).min().unwrap_or(0);
                if min > 0 {
                    (0..q).for_each(|k| mu[r + k * step] -= min);
                    changed = true;
                }
            }
        }
    }
    let used: Vec<usize> = (0..o).filter(|&a| mu[a] != 0).collect();
    let g = used.iter().fold(o, |g, &a| g.gcd(&a));
    let reduced = (0..o / g).map(|a| mu[a * g]).collect();
    ((o / g) as u32, reduced)
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        // eigenvalue sums such as 1+ζ_3+ζ_3² can still be rational
        let coeffs: Vec<i128> = self.multiplicities().iter().map(|&m| m as i128).collect();
        if let Some(n) = CyclotomicReducer::new(self.order as u64).as_integer(&coeffs) {
            return write!(f, "{n}");
        }
        let (o, mu) = display_form(self.order, self.multiplicities().iter().map(|&m| m as i64).collect());
        let mut first = true;
        for (a, &m) in mu.iter().enumerate().filter(|t| *t.1 != 0) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}*")?;
            }
            match a {
                0 => f.write_str("1")?,
                1 => write!(f, "E({o})")?,
                _ => write!(f, "E({o})^{a}")?,
            }
        }
        Ok(())
    }
}

/// A normal subgroup as a union of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroupRecord {
    /// Class ids, ascending; always contains the identity class 0.
    pub classes: Vec<usize>,
    pub order: u64,
    /// Characters whose kernels contain the subgroup; their kernels
    /// intersect to exactly this subgroup.
    pub kernels: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct TableOptions {
    /// Seed for the random projections used while splitting eigenspaces.
    pub seed: u64,
    /// Prime to work over instead of the default Dixon prime. It must be
    /// admissible for the group (`p ≡ 1 mod exponent`, `p > 2⌈√|G|⌉`).
    pub prime: Option<u64>,
    pub cap: u64,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            seed: 0,
            prime: None,
            cap: DEFAULT_CAP,
        }
    }
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2⌈√order⌉`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let bound = 2 * ceil_sqrt(order);
    let mut p = bound / exponent * exponent + 1;
    while p <= bound || !is_prime(p) {
        p += exponent;
    }
    p
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut s = n.sqrt();
    if s * s < n {
        s += 1;
    }
    s
}

/// Character table of an enumerated group; characters are ordered by degree
/// and then by descending value profile, so the principal character is 0.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    name: String,
    index: ElementIndex,
    classes: ClassSet,
    prime: u64,
    degrees: Vec<u64>,
    values: Vec<Vec<CharacterValue>>,
    residues: Vec<Vec<u64>>,
}

pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    CharacterTable::compute(group, &TableOptions::default())
}

/// All class matrices `M_i[j][k] = #{(x, y) ∈ C_i × C_j : xy = g_k}`.
pub fn class_matrices(classes: &ClassSet, index: &ElementIndex) -> Vec<Vec<Vec<u64>>> {
    let mut algebra = ClassAlgebra::new(index, classes);
    (0..classes.len())
        .map(|i| {
            algebra
                .matrix(i)
                .iter()
                .map(|row| row.iter().map(|&x| x as u64).collect())
                .collect()
        })
        .collect()
}

impl CharacterTable {
    pub fn compute(group: &PermGroup, opts: &TableOptions) -> Result<Self> {
        let index = group.enumerate(opts.cap)?;
        let classes = ClassSet::compute(group, &index);
        CharacterTable::from_classes(group.name(), index, classes, opts)
    }

    pub fn from_classes(
        name: &str,
        index: ElementIndex,
        classes: ClassSet,
        opts: &TableOptions,
    ) -> Result<Self> {
        let order = classes.group_order();
        let exponent = classes.exponent();
        let prime = match opts.prime {
            None => dixon_prime(order, exponent),
            Some(p) => {
                if !is_prime(p) || p % exponent != 1 || p <= 2 * ceil_sqrt(order) {
                    return Err(Error::InvalidArgument(format!(
                        "{p} is not an admissible prime for {name}"
                    )));
                }
                p
            }
        };
        let field = PrimeField::new(prime);
        let divisors: Vec<u64> = (1..=order.sqrt()).filter(|d| order.is_multiple_of(*d)).collect();

        let central = {
            let mut algebra = ClassAlgebra::new(&index, &classes);
            central_characters(&mut algebra, &field, opts.seed)?
        };

        let mut roots = RootTables::new(field);
        let mut chars: Vec<(u64, Vec<CharacterValue>, Vec<u64>)> = Vec::with_capacity(central.len());
        for omega in &central {
            let d = degree_of(&field, &classes, omega, &divisors)?;
            let residues: Vec<u64> = omega
                .iter()
                .enumerate()
                .map(|(j, &w)| field.mul(field.mul(field.reduce(d), w), field.inv(field.reduce(classes.size(j)))))
                .collect();
            let values = (0..classes.len())
                .map(|j| roots.lift(&classes, &residues, j, d))
                .collect::<Result<Vec<_>>>()?;
            chars.push((d, values, residues));
        }
        chars.sort_by(|a, b| {
            a.0.cmp(&b.0).then_with(|| {
                b.1.iter()
                    .zip(&a.1)
                    .map(|(x, y)| x.cmp_profile(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        });

        let table = CharacterTable {
            name: name.to_string(),
            index,
            classes,
            prime,
            degrees: chars.iter().map(|c| c.0).collect(),
            residues: chars.iter().map(|c| c.2.clone()).collect(),
            values: chars.into_iter().map(|c| c.1).collect(),
        };
        let sum: u128 = table.degrees.iter().map(|&d| d as u128 * d as u128).sum();
        if sum != order as u128 {
            return Err(Error::Lifting(format!(
                "degrees square-sum to {sum}, not |G| = {order}"
            )));
        }
        Ok(table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn classes(&self) -> &ClassSet {
        &self.classes
    }

    pub fn index(&self) -> &ElementIndex {
        &self.index
    }

    /// The prime the table was computed over.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, character: usize) -> u64 {
        self.degrees[character]
    }

    pub fn values(&self, character: usize) -> &[CharacterValue] {
        &self.values[character]
    }

    pub fn value(&self, character: usize, class: usize) -> &CharacterValue {
        &self.values[character][class]
    }

    /// `χ(g_j)` reduced modulo the table prime.
    pub fn residue(&self, character: usize, class: usize) -> u64 {
        self.residues[character][class]
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn degree_pattern(&self) -> DegreePattern {
        DegreePattern::from_degrees(self.degrees.iter().copied())
    }

    /// Classes on which `χ(g) = χ(1)`.
    pub fn kernel_classes(&self, character: usize) -> NormalSubgroupRecord {
        let classes: Vec<usize> = self.kernel_set(character);
        self.record(classes)
    }

    fn kernel_set(&self, character: usize) -> Vec<usize> {
        let d = self.degrees[character] as u32;
        (0..self.classes.len())
            .filter(|&j| self.values[character][j].terms() == [(0, d)])
            .collect()
    }

    fn record(&self, classes: Vec<usize>) -> NormalSubgroupRecord {
        let order = classes.iter().map(|&c| self.classes.size(c)).sum();
        let kernels = (0..self.len())
            .filter(|&i| {
                let k = self.kernel_set(i);
                classes.iter().all(|c| k.binary_search(c).is_ok())
            })
            .collect();
        NormalSubgroupRecord {
            classes,
            order,
            kernels,
        }
    }

    /// Every normal subgroup, as the intersection-closure of the character
    /// kernels, sorted by order.
    pub fn normal_subgroups(&self) -> Vec<NormalSubgroupRecord> {
        let r = self.classes.len();
        let kernels: BTreeSet<Vec<bool>> = (0..self.len())
            .map(|i| {
                let mut mask = vec![false; r];
                for j in self.kernel_set(i) {
                    mask[j] = true;
                }
                mask
            })
            .collect();
        let mut all = kernels.clone();
        let mut frontier: Vec<Vec<bool>> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &kernels {
                    let meet: Vec<bool> = a.iter().zip(b).map(|(&x, &y)| x && y).collect();
                    if all.insert(meet.clone()) {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<NormalSubgroupRecord> = all
            .into_iter()
            .map(|mask| self.record((0..r).filter(|&j| mask[j]).collect()))
            .collect();
        out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.classes.cmp(&b.classes)));
        out
    }

    /// Degrees of the characters of `G/N`, i.e. those with `N ≤ ker χ`.
    pub fn quotient_degree_pattern(&self, normal: &NormalSubgroupRecord) -> DegreePattern {
        DegreePattern::from_degrees(normal.kernels.iter().map(|&i| self.degrees[i]))
    }

    /// Permutation of characters induced by `ζ ↦ ζ^k`, via
    /// `χ^{σ_k}(g) = χ(g^k)`.
    pub fn galois_permutation(&self, k: u64) -> Vec<usize> {
        let lookup: HashMap<&[u64], usize> = self
            .residues
            .iter()
            .enumerate()
            .map(|(i, row)| (row.as_slice(), i))
            .collect();
        let pm = self.classes.power_map(k);
        self.residues
            .iter()
            .map(|row| {
                let image: Vec<u64> = pm.iter().map(|&j| row[j]).collect();
                lookup[image.as_slice()]
            })
            .collect()
    }

    /// Orbits of the Galois group on the characters; each orbit is sorted.
    pub fn galois_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let perms: Vec<Vec<usize>> = unit_generators(self.classes.exponent())
            .into_iter()
            .map(|k| self.galois_permutation(k))
            .collect();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for p in &perms {
                    let y = p[x];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn galois_orbit(&self, character: usize) -> Vec<usize> {
        self.galois_orbits()
            .into_iter()
            .find(|o| o.contains(&character))
            .unwrap()
    }

    /// `|Q(χ):Q|`, the number of Galois conjugates of `χ`.
    pub fn field_degree(&self, character: usize) -> usize {
        self.galois_orbit(character).len()
    }

    pub fn max_field_degree(&self) -> usize {
        self.galois_orbits().iter().map(Vec::len).max().unwrap_or(1)
    }

    /// Reducer for `Z[ζ_e]`, `e` the group exponent.
    pub fn cyclotomic_reducer(&self) -> CyclotomicReducer {
        CyclotomicReducer::new(self.classes.exponent())
    }

    /// `Σ_j |C_j| χ_i(g_j) χ_l(g_j⁻¹)` evaluated exactly; `None` if the sum
    /// is not a rational integer.
    pub fn row_inner_product(&self, reducer: &CyclotomicReducer, i: usize, l: usize) -> Option<i128> {
        let e = self.classes.exponent() as usize;
        let mut acc = vec![0i128; e];
        for j in 0..self.classes.len() {
            let o = self.classes.element_order(j) as usize;
            let scale = e / o;
            let w = self.classes.size(j) as i128;
            for &(a, m) in self.values[i][j].terms() {
                for &(b, n) in self.values[l][j].terms() {
                    let x = (a as usize + o - b as usize) % o * scale;
                    acc[x] += w * m as i128 * n as i128;
                }
            }
        }
        reducer.as_integer(&acc)
    }

    /// Exact first orthogonality relation for every pair of rows.
    pub fn verify_row_orthogonality(&self) -> bool {
        let reducer = self.cyclotomic_reducer();
        let n = self.group_order() as i128;
        (0..self.len()).all(|i| {
            (i..self.len()).all(|l| {
                let expected = if i == l { n } else { 0 };
                self.row_inner_product(&reducer, i, l) == Some(expected)
            })
        })
    }

    /// Class fusion of `sub` (a table of a subgroup on the same points)
    /// into this table.
    pub fn fusion_from(&self, sub: &CharacterTable) -> Result<Vec<usize>> {
        fusion_map(sub.classes(), &self.index, &self.classes, &self.name)
    }
}

/// Generators of `(Z/eZ)^*`, chosen greedily.
fn unit_generators(e: u64) -> Vec<u64> {
    if e <= 2 {
        return Vec::new();
    }
    let mut covered = vec![false; e as usize];
    covered[1] = true;
    let mut elems = vec![1u64];
    let mut gens = Vec::new();
    for k in 2..e {
        if covered[k as usize] || k.gcd(&e) != 1 {
            continue;
        }
        gens.push(k);
        // close the subgroup under multiplication by the generators
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &g in &gens {
                let y = x * g % e;
                if !covered[y as usize] {
                    covered[y as usize] = true;
                    elems.push(y);
                }
            }
        }
    }
    gens
}

fn fusion_map(
    sub_classes: &ClassSet,
    amb_index: &ElementIndex,
    amb_classes: &ClassSet,
    amb_name: &str,
) -> Result<Vec<usize>> {
    sub_classes
        .reps()
        .iter()
        .map(|g| {
            amb_index
                .rank(g)
                .map(|r| amb_classes.class_of_rank(r))
                .ok_or_else(|| Error::NotMember {
                    group: amb_name.to_string(),
                })
        })
        .collect()
}

/// Map from the classes of `sub` to the classes of `amb`.
pub fn class_fusion(sub: &PermGroup, amb: &PermGroup) -> Result<Vec<usize>> {
    if sub.degree() != amb.degree() {
        return Err(Error::DegreeMismatch {
            expected: amb.degree(),
            found: sub.degree(),
        });
    }
    if sub.generators().iter().any(|g| !amb.contains(g)) {
        return Err(Error::NotMember {
            group: amb.name().to_string(),
        });
    }
    let sub_index = sub.enumerate(DEFAULT_CAP)?;
    let sub_classes = ClassSet::compute(sub, &sub_index);
    let amb_index = amb.enumerate(DEFAULT_CAP)?;
    let amb_classes = ClassSet::compute(amb, &amb_index);
    fusion_map(&sub_classes, &amb_index, &amb_classes, amb.name())
}

/// For each character of the normal subgroup, whether some character of
/// the overgroup of equal degree restricts to it. Both tables must share a
/// prime so that their value profiles use the same roots of unity.
pub fn extendible_characters(
    sub: &CharacterTable,
    amb: &CharacterTable,
    fusion: &[usize],
) -> Result<Vec<bool>> {
    if sub.prime() != amb.prime() {
        return Err(Error::InvalidArgument(format!(
            "tables use different primes ({} and {})",
            sub.prime(),
            amb.prime()
        )));
    }
    Ok((0..sub.len())
        .map(|i| {
            (0..amb.len()).any(|a| {
                amb.degree(a) == sub.degree(i)
                    && fusion
                        .iter()
                        .enumerate()
                        .all(|(j, &fj)| amb.value(a, fj) == sub.value(i, j))
            })
        })
        .collect())
}

pub fn kernel_classes(table: &CharacterTable, character: usize) -> NormalSubgroupRecord {
    table.kernel_classes(character)
}

pub fn normal_subgroups(table: &CharacterTable) -> Vec<NormalSubgroupRecord> {
    table.normal_subgroups()
}

pub fn quotient_degree_pattern(table: &CharacterTable, normal: &NormalSubgroupRecord) -> DegreePattern {
    table.quotient_degree_pattern(normal)
}

pub fn galois_orbit(table: &CharacterTable, character: usize) -> Vec<usize> {
    table.galois_orbit(character)
}

pub fn field_degree(table: &CharacterTable, character: usize) -> usize {
    table.field_degree(character)
}
