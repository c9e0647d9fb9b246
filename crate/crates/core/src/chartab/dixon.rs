//! Class matrices, common eigenvectors over `F_p`, degree recovery and the
//! lifting of values to root-of-unity multiplicities.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modp::PrimeField;
use crate::permgroup::{ClassSet, ElementIndex, MAX_BASE};

use super::CharacterValue;

/// Random projection vectors tried per split before giving up.
const RETRY_BUDGET: usize = 64;

/// Class matrices computed on demand, smallest classes first.
pub(crate) struct ClassAlgebra<'a> {
    index: &'a ElementIndex,
    classes: &'a ClassSet,
    members: Vec<Vec<u32>>,
    cache: Vec<Option<Vec<Vec<u32>>>>,
}

impl<'a> ClassAlgebra<'a> {
    pub fn new(index: &'a ElementIndex, classes: &'a ClassSet) -> Self {
        ClassAlgebra {
            index,
            classes,
            members: classes.members(),
            cache: vec![None; classes.len()],
        }
    }

    /// `M_i[j][k] = #{(x, y) ∈ C_i × C_j : xy = g_k}`.
    pub fn matrix(&mut self, i: usize) -> &[Vec<u32>] {
        if self.cache[i].is_none() {
            self.cache[i] = Some(self.compute(i));
        }
        self.cache[i].as_deref().unwrap()
    }

    fn compute(&self, i: usize) -> Vec<Vec<u32>> {
        let index = self.index;
        let r = self.classes.len();
        let k = index.base_len();
        let base = index.base();
        let reps: Vec<&[u32]> = self.classes.reps().iter().map(|g| g.images()).collect();
        let mut m = vec![vec![0u32; r]; r];
        let mut digits = [0u32; MAX_BASE];
        let mut zb = [0u32; MAX_BASE];
        let mut images = [0u32; MAX_BASE];
        // x ∈ C_i, y = x⁻¹ g_col
        for &z in &self.members[self.classes.inverse_class(i)] {
            index.digits(z as u64, &mut digits);
            for t in 0..k {
                zb[t] = index.apply_digits(&digits, base[t]);
            }
            for (col, g) in reps.iter().enumerate() {
                for t in 0..k {
                    images[t] = g[zb[t] as usize];
                }
                let y = index.rank_from_base_images(&mut images[..k]);
                m[self.classes.class_of_rank(y)][col] += 1;
            }
        }
        m
    }
}

/// A subspace of `F_p^r` in reduced row echelon form.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn full(r: usize) -> Self {
        let basis = (0..r)
            .map(|i| {
                let mut v = vec![0u64; r];
                v[i] = 1;
                v
            })
            .collect();
        Space {
            basis,
            pivots: (0..r).collect(),
        }
    }

    fn echelon(f: &PrimeField, mut rows: Vec<Vec<u64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == rows.len() {
                break;
            }
            let Some(r) = (row..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(row, r);
            let inv = f.inv(rows[row][col]);
            for x in rows[row].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = rows[row].clone();
            for (r2, other) in rows.iter_mut().enumerate() {
                if r2 != row && other[col] != 0 {
                    let c = other[col];
                    for (x, &y) in other.iter_mut().zip(&pivot_row) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        rows.truncate(row);
        Space {
            basis: rows,
            pivots,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `m` restricted to this (invariant) subspace, acting on
    /// coordinate columns.
    fn restrict(&self, f: &PrimeField, m: &[Vec<u32>]) -> Vec<Vec<u64>> {
        let p = f.modulus();
        let dim = self.dim();
        let mut out = vec![vec![0u64; dim]; dim];
        for (l, b) in self.basis.iter().enumerate() {
            for (c, &pc) in self.pivots.iter().enumerate() {
                let mut acc: u128 = 0;
                for (&a, &x) in m[pc].iter().zip(b) {
                    acc += a as u128 * x as u128;
                }
                out[c][l] = (acc % p as u128) as u64;
            }
        }
        out
    }

    fn lift(&self, f: &PrimeField, coords: &[u64]) -> Vec<u64> {
        let r = self.basis[0].len();
        let mut v = vec![0u64; r];
        for (&c, b) in coords.iter().zip(&self.basis) {
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        v
    }
}

fn is_scalar(m: &[Vec<u64>]) -> bool {
    let d = m[0][0];
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == if i == j { d } else { 0 }))
}

/// Distinct roots with multiplicities.
fn roots_with_multiplicity(f: &PrimeField, poly: &[u64]) -> Vec<(u64, usize)> {
    let mut poly = poly.to_vec();
    let mut out = Vec::new();
    for x in 0..f.modulus() {
        if poly.len() <= 1 {
            break;
        }
        let mut mult = 0;
        while poly.len() > 1 && f.eval(&poly, x) == 0 {
            poly = deflate(f, &poly, x);
            mult += 1;
        }
        if mult > 0 {
            out.push((x, mult));
        }
    }
    out
}

/// `poly / (x - root)` for a root of `poly`.
fn deflate(f: &PrimeField, poly: &[u64], root: u64) -> Vec<u64> {
    let n = poly.len() - 1;
    let mut q = vec![0u64; n];
    let mut carry = 0u64;
    for i in (0..n).rev() {
        carry = f.add(poly[i + 1], f.mul(carry, root));
        q[i] = carry;
    }
    q
}

/// Splits `space` into the eigenspaces of `rmat`, which must be
/// diagonalizable with all eigenvalues in `F_p`.
fn split(
    f: &PrimeField,
    rmat: &[Vec<u64>],
    space: &Space,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Space>> {
    let dim = space.dim();
    let roots = roots_with_multiplicity(f, &f.charpoly(rmat));
    if roots.iter().map(|r| r.1).sum::<usize>() != dim {
        return Err(Error::Splitting(
            "class matrix has eigenvalues outside the prime field".into(),
        ));
    }
    let mut out = Vec::new();

    // Simple eigenvalues: project a random vector with the minimal
    // polynomial divided by (x - λ).
    let simple: Vec<u64> = roots.iter().filter(|r| r.1 == 1).map(|r| r.0).collect();
    if !simple.is_empty() {
        let mut minpoly = vec![1u64];
        for &(lambda, _) in &roots {
            let mut next = vec![0u64; minpoly.len() + 1];
            for (d, &c) in minpoly.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(c, lambda));
            }
            minpoly = next;
        }
        let s = roots.len();
        let mut attempt = 0;
        'retry: loop {
            if attempt == RETRY_BUDGET {
                return Err(Error::Splitting(format!(
                    "no separating vector after {RETRY_BUDGET} attempts"
                )));
            }
            attempt += 1;
            let v: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..f.modulus())).collect();
            let mut krylov = vec![v];
            for t in 1..s {
                let prev = &krylov[t - 1];
                let next: Vec<u64> = rmat
                    .iter()
                    .map(|row| {
                        let acc: u128 = row.iter().zip(prev).map(|(&a, &b)| a as u128 * b as u128).sum();
                        (acc % f.modulus() as u128) as u64
                    })
                    .collect();
                krylov.push(next);
            }
            let mut found = Vec::with_capacity(simple.len());
            for &lambda in &simple {
                let q = deflate(f, &minpoly, lambda);
                let mut u = vec![0u64; dim];
                for (qc, kv) in q.iter().zip(&krylov) {
                    if *qc == 0 {
                        continue;
                    }
                    for (x, &y) in u.iter_mut().zip(kv) {
                        *x = f.add(*x, f.mul(*qc, y));
                    }
                }
                if u.iter().all(|&x| x == 0) {
                    continue 'retry;
                }
                found.push(u);
            }
            for u in found {
                out.push(Space::echelon(f, vec![space.lift(f, &u)]));
            }
            break;
        }
    }

    for &(lambda, mult) in roots.iter().filter(|r| r.1 > 1) {
        let shifted: Vec<Vec<u64>> = rmat
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut row = row.clone();
                row[i] = f.sub(row[i], lambda);
                row
            })
            .collect();
        let null = f.nullspace(&shifted, dim);
        if null.len() != mult {
            return Err(Error::Splitting("class matrix is not diagonalizable".into()));
        }
        let lifted = null.iter().map(|u| space.lift(f, u)).collect();
        out.push(Space::echelon(f, lifted));
    }
    Ok(out)
}

/// Common eigenvectors of all class matrices, normalised so that the
/// identity-class coordinate is 1. These are the central characters
/// `ω_χ(K_j) = |C_j| χ(g_j) / χ(1)` reduced modulo `p`.
pub(crate) fn central_characters(
    algebra: &mut ClassAlgebra<'_>,
    f: &PrimeField,
    seed: u64,
) -> Result<Vec<Vec<u64>>> {
    let classes = algebra.classes;
    let r = classes.len();
    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&c| (classes.size(c), c));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![(Space::full(r), 0usize)];
    let mut found = Vec::with_capacity(r);
    while let Some((space, start)) = stack.pop() {
        if space.dim() == 1 {
            found.push(space.basis.into_iter().next().unwrap());
            continue;
        }
        let mut pos = start;
        loop {
            let Some(&c) = order.get(pos) else {
                return Err(Error::Splitting(format!(
                    "common eigenspace of dimension {} survives every class matrix",
                    space.dim()
                )));
            };
            let rmat = space.restrict(f, algebra.matrix(c));
            if is_scalar(&rmat) {
                pos += 1;
                continue;
            }
            for part in split(f, &rmat, &space, &mut rng)? {
                stack.push((part, pos + 1));
            }
            break;
        }
    }

    found
        .into_iter()
        .map(|w| {
            if w[0] == 0 {
                return Err(Error::Splitting(
                    "eigenvector vanishes on the identity class".into(),
                ));
            }
            let inv = f.inv(w[0]);
            Ok(w.iter().map(|&x| f.mul(x, inv)).collect())
        })
        .collect()
}

/// Degree from `d² = |G| / Σ_j ω_j ω_{j*} / |C_j|`, as the divisor of `|G|`
/// with `d² ≤ |G|` whose square has the right residue.
pub(crate) fn degree_of(
    f: &PrimeField,
    classes: &ClassSet,
    omega: &[u64],
    divisors: &[u64],
) -> Result<u64> {
    let mut s = 0u64;
    for (j, &w) in omega.iter().enumerate() {
        let wi = omega[classes.inverse_class(j)];
        let term = f.mul(f.mul(w, wi), f.inv(f.reduce(classes.size(j))));
        s = f.add(s, term);
    }
    if s == 0 {
        return Err(Error::Lifting("vanishing norm for a central character".into()));
    }
    let order = classes.group_order();
    let target = f.mul(f.reduce(order), f.inv(s));
    let mut hits = divisors
        .iter()
        .copied()
        .filter(|&d| d * d <= order && f.mul(f.reduce(d), f.reduce(d)) == target);
    match (hits.next(), hits.next()) {
        (Some(d), None) => Ok(d),
        (None, _) => Err(Error::Lifting("no divisor of |G| fits the degree residue".into())),
        (Some(_), Some(_)) => Err(Error::Lifting("ambiguous degree residue".into())),
    }
}

/// Root-of-unity tables for the element orders met during lifting.
pub(crate) struct RootTables {
    field: PrimeField,
    generator: u64,
    powers: HashMap<u32, Vec<u64>>,
    logs: HashMap<u32, HashMap<u64, u32>>,
}

impl RootTables {
    pub fn new(field: PrimeField) -> Self {
        RootTables {
            generator: field.primitive_root(),
            field,
            powers: HashMap::new(),
            logs: HashMap::new(),
        }
    }

    /// `ζ_o^a` for `a = 0..o`, with `ζ_o = g^{(p-1)/o}`.
    fn powers(&mut self, o: u32) -> &[u64] {
        let f = self.field;
        let g = self.generator;
        self.powers.entry(o).or_insert_with(|| {
            let z = f.pow(g, (f.modulus() - 1) / o as u64);
            let mut out = Vec::with_capacity(o as usize);
            let mut x = 1u64;
            for _ in 0..o {
                out.push(x);
                x = f.mul(x, z);
            }
            out
        })
    }

    fn log(&mut self, o: u32, x: u64) -> Option<u32> {
        if !self.logs.contains_key(&o) {
            let table = self
                .powers(o)
                .iter()
                .enumerate()
                .map(|(a, &z)| (z, a as u32))
                .collect();
            self.logs.insert(o, table);
        }
        self.logs[&o].get(&x).copied()
    }

    /// Eigenvalue multiplicities of `ρ(g)` for `g` in `class`, from the
    /// values `row[power_class(class, l)] = χ(g^l)` modulo `p`.
    ///
    /// Newton's identities turn the power sums `χ(g^l)`, `l ≤ d`, into the
    /// characteristic polynomial of `ρ(g)`, whose roots are read off among
    /// the `o`-th roots of unity.
    pub fn lift(
        &mut self,
        classes: &ClassSet,
        row: &[u64],
        class: usize,
        degree: u64,
    ) -> Result<CharacterValue> {
        let f = self.field;
        let o = classes.element_order(class);
        if degree == 1 {
            let v = row[class];
            let a = self
                .log(o, v)
                .ok_or_else(|| Error::Lifting(format!("linear value {v} is not a root of unity")))?;
            return Ok(CharacterValue::from_terms(o, vec![(a, 1)]));
        }
        let d = degree as usize;
        let power_sums: Vec<u64> = (0..=d)
            .map(|l| row[classes.power_class(class, l as u64)])
            .collect();
        // elementary symmetric functions e_0..e_d
        let mut e = vec![0u64; d + 1];
        e[0] = 1;
        for k in 1..=d {
            let mut acc = 0u64;
            for i in 1..=k {
                let t = f.mul(e[k - i], power_sums[i]);
                acc = if i % 2 == 1 { f.add(acc, t) } else { f.sub(acc, t) };
            }
            e[k] = f.mul(acc, f.inv(k as u64));
        }
        let mut poly: Vec<u64> = (0..=d)
            .map(|i| {
                let k = d - i;
                if k.is_multiple_of(2) {
                    e[k]
                } else {
                    f.neg(e[k])
                }
            })
            .collect();
        let roots = self.powers(o).to_vec();
        let mut terms = Vec::new();
        for (a, &z) in roots.iter().enumerate() {
            if poly.len() == 1 {
                break;
            }
            let mut mult = 0u32;
            while poly.len() > 1 && f.eval(&poly, z) == 0 {
                poly = deflate(&f, &poly, z);
                mult += 1;
            }
            if mult > 0 {
                terms.push((a as u32, mult));
            }
        }
        if poly.len() != 1 {
            return Err(Error::Lifting(format!(
                "eigenvalues on class {class} are not {o}-th roots of unity"
            )));
        }
        Ok(CharacterValue::from_terms(o, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deflation_and_roots() {
        let f = PrimeField::new(13);
        // (x-2)^2 (x-5)
        let poly = [6, 11, 4, 1];
        assert_eq!(roots_with_multiplicity(&f, &poly), vec![(2, 2), (5, 1)]);
        assert_eq!(deflate(&f, &poly, 5), vec![4, 9, 1]);
    }

    #[test]
    fn echelon_drops_dependent_rows() {
        let f = PrimeField::new(7);
        let s = Space::echelon(&f, vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots, vec![0, 1]);
        assert_eq!(s.basis[0][0], 1);
    }
}
