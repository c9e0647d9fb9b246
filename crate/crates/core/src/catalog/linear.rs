//! Matrix groups over prime fields as permutation groups: projective lines,
//! nonzero vectors and affine spaces. Matrices act on row vectors from the
//! right, so `perm(A).then(perm(B)) = perm(AB)`.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartab::{CharacterTable, TableOptions};
use crate::classifier::DegreePattern;
use crate::error::{Error, Result};
use crate::modp::{is_prime, PrimeField};
use crate::permgroup::{PermGroup, Permutation, DEFAULT_CAP};

/// Largest affine space handled by [`construct_affine`].
pub const MAX_AFFINE_POINTS: u64 = 20_000;

/// Largest prime for the projective constructions.
pub const MAX_PROJECTIVE_Q: u64 = 61;

/// Largest prime for [`construct_sl2`].
pub const MAX_SL2_Q: u64 = 13;

/// Default number of pairs tried by [`find_linear_subgroup`].
pub const SEARCH_BUDGET: u64 = 1_000_000;

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u64,
    dim: usize,
    entries: Vec<u64>,
}

impl Matrix {
    pub fn new(p: u64, rows: &[&[i64]]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix must be square and nonempty".into()));
        }
        let f = PrimeField::new(p);
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| f.reduce_signed(x as i128))).collect();
        Ok(Matrix { p, dim, entries })
    }

    pub fn identity(p: u64, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { p, dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.dim + col] = value % self.p;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum::<u64>()
                    % self.p;
            }
        }
        Matrix {
            p: self.p,
            dim: n,
            entries,
        }
    }

    pub fn determinant(&self) -> u64 {
        let f = PrimeField::new(self.p);
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return 0;
            };
            if r != c {
                for j in 0..n {
                    a.swap(r * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pivot = a[c * n + c];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for r in c + 1..n {
                let factor = f.mul(a[r * n + c], inv);
                if factor != 0 {
                    for j in c..n {
                        a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[c * n + j]));
                    }
                }
            }
        }
        det
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.dim)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .map(|(i, &x)| x * self.get(i, j))
                    .sum::<u64>()
                    % self.p
            })
            .collect()
    }
}

/// Vectors of `F_p^d` indexed by `Σ v_i p^i`.
fn encode(v: &[u64], p: u64) -> usize {
    v.iter().rev().fold(0u64, |acc, &x| acc * p + x) as usize
}

fn decode(mut index: usize, p: u64, d: usize) -> Vec<u64> {
    (0..d)
        .map(|_| {
            let x = index as u64 % p;
            index /= p as usize;
            x
        })
        .collect()
}

fn space_size(p: u64, d: usize) -> Result<u64> {
    let size = p.checked_pow(d as u32).filter(|&n| n <= MAX_AFFINE_POINTS);
    size.ok_or_else(|| {
        Error::InvalidArgument(format!("{p}^{d} points exceed the limit {MAX_AFFINE_POINTS}"))
    })
}

fn check_invertible(m: &Matrix) -> Result<()> {
    if m.determinant() == 0 {
        return Err(Error::InvalidArgument("singular matrix".into()));
    }
    Ok(())
}

/// Action on the `p^d - 1` nonzero vectors; point `i` is vector `i + 1`.
pub fn nonzero_vector_action(name: &str, p: u64, d: usize, mats: &[Matrix]) -> Result<PermGroup> {
    let size = space_size(p, d)? as usize;
    let gens = mats
        .iter()
        .map(|m| {
            check_same_shape(m, p, d)?;
            check_invertible(m)?;
            let images = (1..size)
                .map(|i| (encode(&m.apply(&decode(i, p, d)), p) - 1) as u32)
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(name, size - 1, gens)
}

fn check_same_shape(m: &Matrix, p: u64, d: usize) -> Result<()> {
    if m.p != p || m.dim != d {
        return Err(Error::InvalidArgument(format!(
            "expected a {d}x{d} matrix over F_{p}, got {}x{} over F_{}",
            m.dim, m.dim, m.p
        )));
    }
    Ok(())
}

/// The matrix of a permutation produced by [`nonzero_vector_action`].
pub fn matrix_of(perm: &Permutation, p: u64, d: usize) -> Matrix {
    let mut m = Matrix::identity(p, d);
    for i in 0..d {
        let basis = p.pow(i as u32) as usize;
        let row = decode(perm.image(basis - 1) + 1, p, d);
        for (j, x) in row.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// Elementary transvections `I + E_{i,i+1}` and `I + E_{i+1,i}`; they
/// generate `SL(d, p)`.
pub fn sl_generators(p: u64, d: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..d.saturating_sub(1) {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            let mut m = Matrix::identity(p, d);
            m.set(r, c, 1);
            out.push(m);
        }
    }
    out
}

/// `SL(d, p)` generators plus `diag(ω, 1, …, 1)` for a primitive root `ω`.
pub fn gl_generators(p: u64, d: usize) -> Vec<Matrix> {
    let mut out = sl_generators(p, d);
    if p > 2 {
        let mut m = Matrix::identity(p, d);
        m.set(0, 0, PrimeField::new(p).primitive_root());
        out.push(m);
    }
    out
}

/// `GL(d, p)` on its nonzero vectors.
pub fn construct_gl(p: u64, d: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    nonzero_vector_action(&format!("GL({d},{p})"), p, d, &gl_generators(p, d))
}

/// `SL(2, q)` on the `q² - 1` nonzero vectors, `q` an odd prime.
pub fn construct_sl2(q: u64) -> Result<PermGroup> {
    if !is_prime(q) || q == 2 || q > MAX_SL2_Q {
        return Err(Error::InvalidArgument(format!(
            "SL(2,q) needs an odd prime q ≤ {MAX_SL2_Q}, got {q}"
        )));
    }
    nonzero_vector_action(&format!("SL(2,{q})"), q, 2, &sl_generators(q, 2))
}

/// Fractional-linear action on the projective line; point `q` is `∞`.
fn projective_action(name: &str, q: u64, mats: &[Matrix]) -> Result<PermGroup> {
    let f = PrimeField::new(q);
    let point_of = |v: &[u64]| -> u32 {
        if v[1] == 0 {
            q as u32
        } else {
            f.mul(v[0], f.inv(v[1])) as u32
        }
    };
    let gens = mats
        .iter()
        .map(|m| {
            let images = (0..=q)
                .map(|x| {
                    let v = if x == q { vec![1, 0] } else { vec![x, 1] };
                    point_of(&m.apply(&v))
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(name, q as usize + 1, gens)
}

fn check_projective_q(q: u64) -> Result<()> {
    if !is_prime(q) || q > MAX_PROJECTIVE_Q {
        return Err(Error::InvalidArgument(format!(
            "q must be a prime ≤ {MAX_PROJECTIVE_Q}, got {q}"
        )));
    }
    Ok(())
}

/// `PSL(2, q)` on `q + 1` points, `q` prime.
pub fn construct_psl2(q: u64) -> Result<PermGroup> {
    check_projective_q(q)?;
    projective_action(&format!("L2({q})"), q, &sl_generators(q, 2))
}

/// `PGL(2, q)` on `q + 1` points, `q` prime.
pub fn construct_pgl2(q: u64) -> Result<PermGroup> {
    check_projective_q(q)?;
    projective_action(&format!("PGL(2,{q})"), q, &gl_generators(q, 2))
}

/// `V ⋊ H` on the `p^d` vectors of `V = F_p^d`, `H` generated by the given
/// invertible matrices, with translations by the standard basis.
pub fn construct_affine(name: &str, p: u64, d: usize, linear: &[Matrix]) -> Result<PermGroup> {
    if !is_prime(p) || d == 0 {
        return Err(Error::InvalidArgument(format!("need a prime p and d ≥ 1, got {p}, {d}")));
    }
    let size = space_size(p, d)? as usize;
    let mut gens = Vec::new();
    for i in 0..d {
        let images = (0..size)
            .map(|x| {
                let mut v = decode(x, p, d);
                v[i] = (v[i] + 1) % p;
                encode(&v, p) as u32
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    for m in linear {
        check_same_shape(m, p, d)?;
        check_invertible(m)?;
        let images = (0..size)
            .map(|x| encode(&m.apply(&decode(x, p, d)), p) as u32)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(name, size, gens)
}

/// Seeded search for two elements of `ambient` generating a subgroup of
/// order `target_order`, optionally with the given degree pattern.
///
/// Pairs are drawn uniformly from the enumerated ambient group; elements
/// whose order does not divide the target are rejected before any
/// subgroup is built.
pub fn find_linear_subgroup(
    ambient: &PermGroup,
    target_order: u64,
    pattern: Option<&DegreePattern>,
    seed: u64,
    budget: u64,
) -> Result<Vec<Permutation>> {
    let order = ambient.order();
    if order == BigUint::from(target_order) {
        return Ok(ambient.generators().to_vec());
    }
    if order.clone() % target_order != BigUint::ZERO {
        return Err(Error::InvalidArgument(format!(
            "target order {target_order} does not divide {order}"
        )));
    }
    let index = ambient.enumerate(DEFAULT_CAP)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let g = index.element(rng.gen_range(0..index.order()));
        if target_order.is_multiple_of(g.order()) {
            return g;
        }
    };
    for _ in 0..budget {
        let pair = vec![draw(), draw()];
        let sub = PermGroup::new("candidate", ambient.degree(), pair.clone())?.with_seed(seed);
        if sub.order() != BigUint::from(target_order) {
            continue;
        }
        if let Some(expected) = pattern {
            let table = CharacterTable::compute(&sub, &TableOptions { seed, ..TableOptions::default() })?;
            if table.degree_pattern() != *expected {
                continue;
            }
        }
        return Ok(pair);
    }
    Err(Error::SearchExhausted(format!(
        "no subgroup of order {target_order} in {} after {budget} pairs; \
         provide explicit generators in a fixture file instead",
        ambient.name()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_product() {
        let a = Matrix::new(5, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(a.determinant(), 3); // -2 mod 5
        let id = Matrix::identity(5, 2);
        assert_eq!(a.mul(&id), a);
        assert!(Matrix::new(6, &[&[1]]).is_err());
    }

    #[test]
    fn vector_encoding_round_trips() {
        for i in 0..125 {
            assert_eq!(encode(&decode(i, 5, 3), 5), i);
        }
    }

    #[test]
    fn matrix_recovered_from_action() {
        let m = Matrix::new(3, &[&[0, 1], &[2, 1]]).unwrap();
        let g = nonzero_vector_action("M", 3, 2, std::slice::from_ref(&m)).unwrap();
        assert_eq!(matrix_of(&g.generators()[0], 3, 2), m);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let a = Matrix::new(5, &[&[1, 1], &[0, 1]]).unwrap();
        let b = Matrix::new(5, &[&[0, 4], &[1, 0]]).unwrap();
        let g = nonzero_vector_action("M", 5, 2, &[a.clone(), b.clone(), a.mul(&b)]).unwrap();
        let gens = g.generators();
        assert_eq!(gens[0].then(&gens[1]), gens[2]);
    }
}
