//! Arithmetic and linear algebra over a prime field `F_p` with `p < 2^32`.

/// Elements are `u64` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 32)).contains(&p), "prime out of range");
        PrimeField { p }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn reduce_signed(&self, x: i128) -> u64 {
        x.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, base: u64, mut e: u64) -> u64 {
        let mut result = 1 % self.p;
        let mut b = base % self.p;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1)
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients in ascending
    /// degree, via reduction to upper Hessenberg form.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let pivot_inv = self.inv(h[m][m - 1]);
            for j in m + 1..n {
                let u = self.mul(h[j][m - 1], pivot_inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[m][c]);
                    h[j][c] = self.sub(h[j][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[j]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut next = vec![0u64; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                let t = self.mul(c, h[m - 1][m - 1]);
                next[d] = self.sub(next[d], t);
            }
            let mut t = 1u64;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    let s = self.mul(coef, c);
                    next[d] = self.sub(next[d], s);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Distinct roots of `poly` in `F_p`, ascending.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Basis of the right null space of `a` (`rows × cols`).
    pub fn nullspace(&self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, r);
            let inv = self.inv(m[row][col]);
            for c in 0..cols {
                m[row][c] = self.mul(m[row][c], inv);
            }
            for r2 in 0..m.len() {
                if r2 != row && m[r2][col] != 0 {
                    let f = m[r2][col];
                    for c in 0..cols {
                        let t = self.mul(f, m[row][c]);
                        m[r2][c] = self.sub(m[r2][c], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(m[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// `a · b` for `a` of shape `n × k` and `b` of shape `k × m`.
    pub fn matmul(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let m = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                let mut out = vec![0u64; m];
                for (k, &x) in row.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (o, &y) in out.iter_mut().zip(&b[k]) {
                        *o = (*o + x * y) % self.p;
                    }
                }
                out
            })
            .collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
