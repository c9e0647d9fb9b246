//! Exact arithmetic in `Z[ζ_e] = Z[x]/Φ_e(x)`.
//!
//! Character values are kept as root-of-unity multiplicity profiles; this
//! module only decides whether an integer combination of `e`-th roots of
//! unity equals a given rational integer, which is what exact orthogonality
//! checks need.

use std::collections::HashMap;

/// Coefficients of the `n`-th cyclotomic polynomial, ascending degree.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut memo = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, Vec<i64>>) -> Vec<i64> {
    assert!(n >= 1);
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let den = cyclotomic_memo(d, memo);
        num = div_exact_monic(&num, &den);
    }
    memo.insert(n, num.clone());
    num
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                rem[i + k] -= c * dk;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

/// Reduction of exponents `0..e` modulo `Φ_e`.
#[derive(Clone, Debug)]
pub struct CyclotomicReducer {
    e: usize,
    phi: usize,
    /// Row `m - phi` holds `x^m mod Φ_e` for `phi <= m < e`.
    table: Vec<i64>,
}

impl CyclotomicReducer {
    pub fn new(e: u64) -> Self {
        let poly = cyclotomic_polynomial(e);
        let phi = poly.len() - 1;
        let e = e as usize;
        let mut table = Vec::with_capacity((e - phi) * phi);
        if e > phi {
            let mut row: Vec<i64> = poly[..phi].iter().map(|c| -c).collect();
            table.extend_from_slice(&row);
            for _ in phi + 1..e {
                let top = row[phi - 1];
                let mut next = vec![0i64; phi];
                for i in 0..phi {
                    let shifted = if i == 0 { 0 } else { row[i - 1] };
                    next[i] = shifted - top * poly[i];
                }
                row = next;
                table.extend_from_slice(&row);
            }
        }
        CyclotomicReducer { e, phi, table }
    }

    /// Entries needed by the reduction table for exponent `e`.
    pub fn table_size(e: u64) -> u64 {
        let phi = euler_phi(e);
        (e - phi) * phi
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    /// Degree of `Q(ζ_e)` over `Q`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Reduces `Σ coeffs[m] ζ^m` (with `coeffs.len() == e`) to the power
    /// basis `1, ζ, …, ζ^{φ(e)-1}`.
    pub fn reduce(&self, coeffs: &[i128]) -> Vec<i128> {
        assert_eq!(coeffs.len(), self.e);
        let mut out: Vec<i128> = coeffs[..self.phi].to_vec();
        for (m, &c) in coeffs.iter().enumerate().skip(self.phi) {
            if c == 0 {
                continue;
            }
            let row = &self.table[(m - self.phi) * self.phi..(m - self.phi + 1) * self.phi];
            for (o, &t) in out.iter_mut().zip(row) {
                *o += c * t as i128;
            }
        }
        out
    }

    /// The rational integer represented by `coeffs`, if it is one.
    pub fn as_integer(&self, coeffs: &[i128]) -> Option<i128> {
        let r = self.reduce(coeffs);
        r[1..].iter().all(|&c| c == 0).then_some(r[0])
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
