//! Brute-force reference computations, independent of the library's
//! stabilizer chains and modular splitting.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use chardeg_core::permgroup::Permutation;

pub fn perms(degree: usize, cycles: &[&str]) -> Vec<Permutation> {
    cycles
        .iter()
        .map(|c| Permutation::parse(c, degree).unwrap())
        .collect()
}

/// All elements of `⟨gens⟩` by breadth-first closure.
pub fn closure(gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(gens[0].degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Conjugacy classes by conjugating with every element.
pub fn conjugacy_classes(elements: &[Permutation]) -> Vec<Vec<Permutation>> {
    let mut assigned: HashSet<Permutation> = HashSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if assigned.contains(x) {
            continue;
        }
        let mut class: Vec<Permutation> = elements
            .iter()
            .map(|s| x.conjugate_by(s))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        class.sort_by_key(|p| p.images().to_vec());
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    // identity first
    classes.sort_by_key(|c| (c[0].order(), c.len()));
    classes
}

/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = rep_k}` by a double loop.
pub fn class_structure_constants(classes: &[Vec<Permutation>]) -> Vec<Vec<Vec<u64>>> {
    let r = classes.len();
    let class_of: HashMap<&Permutation, usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |p| (p, i)))
        .collect();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            for x in ci {
                for y in cj {
                    let z = x.then(y);
                    let k = class_of[&z];
                    if classes[k][0] == z {
                        a[i][j][k] += 1;
                    }
                }
            }
        }
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Every vector `ω` over `F_p` with `ω_0 = 1` and
/// `ω_i ω_j = Σ_k a_ijk ω_k`, found by exhaustive search.
pub fn central_characters_by_search(a: &[Vec<Vec<u64>>], p: u64) -> Vec<Vec<u64>> {
    let r = a.len();
    let mut out = Vec::new();
    let total = p.pow(r as u32 - 1);
    for code in 0..total {
        let mut w = vec![1u64; r];
        let mut c = code;
        for x in w.iter_mut().skip(1) {
            *x = c % p;
            c /= p;
        }
        let ok = (0..r).all(|i| {
            (0..r).all(|j| {
                let rhs = (0..r).fold(0, |s, k| (s + a[i][j][k] % p * w[k]) % p);
                w[i] * w[j] % p == rhs
            })
        });
        if ok {
            out.push(w);
        }
    }
    out
}

/// Degrees recovered from central characters through
/// `d² = |G| / Σ_j ω_j ω_{j*} / |C_j|`.
pub fn degrees_from_central(
    central: &[Vec<u64>],
    sizes: &[u64],
    inverse: &[usize],
    order: u64,
    p: u64,
) -> Vec<u64> {
    let mut degrees: Vec<u64> = central
        .iter()
        .map(|w| {
            let s = (0..w.len()).fold(0, |acc, j| {
                (acc + w[j] * w[inverse[j]] % p * pow_mod(sizes[j], p - 2, p)) % p
            });
            let target = order % p * pow_mod(s, p - 2, p) % p;
            (1..=order)
                .find(|d| order.is_multiple_of(*d) && d * d <= order && d * d % p == target)
                .expect("degree")
        })
        .collect();
    degrees.sort();
    degrees
}

/// Degrees of all irreducible characters from the naive pipeline above.
pub fn brute_degrees(gens: &[Permutation], p: u64) -> Vec<u64> {
    let elements = closure(gens);
    let classes = conjugacy_classes(&elements);
    let a = class_structure_constants(&classes);
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let inverse: Vec<usize> = classes
        .iter()
        .map(|c| {
            let inv = c[0].inverse();
            classes.iter().position(|d| d.contains(&inv)).unwrap()
        })
        .collect();
    let central = central_characters_by_search(&a, p);
    assert_eq!(central.len(), classes.len(), "one central character per class");
    degrees_from_central(&central, &sizes, &inverse, elements.len() as u64, p)
}

/// Number of standard Young tableaux of shape `parts`, by removing corners.
pub fn count_tableaux(parts: &[usize]) -> u128 {
    fn go(shape: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if shape.iter().all(|&x| x == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > next {
                shape[i] -= 1;
                total += go(shape, memo);
                shape[i] += 1;
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    go(&mut parts.to_vec(), &mut HashMap::new())
}

/// Number of partitions of `n` by the recurrence over the largest part.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

pub fn sum_divisors_naive(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}
