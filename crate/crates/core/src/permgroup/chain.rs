use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;

pub(crate) const NONE: u32 = u32::MAX;

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// strong generators that fix all earlier base points.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// `pos[x]` is the index of `x` in `orbit`, or `NONE`.
    pub pos: Vec<u32>,
    /// `trans[i]` maps `base` to `orbit[i]`.
    pub trans: Vec<Permutation>,
    pub inv: Vec<Permutation>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: Vec::new(),
            trans: Vec::new(),
            inv: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.pos = vec![NONE; degree];
        self.orbit = vec![self.base];
        self.pos[self.base as usize] = 0;
        self.trans = vec![Permutation::identity(degree)];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head] as usize;
            for s in &self.gens {
                let y = s.image(x);
                if self.pos[y] == NONE {
                    self.pos[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    let t = self.trans[head].then(s);
                    self.trans.push(t);
                }
            }
            head += 1;
        }
        self.inv = self.trans.iter().map(Permutation::inverse).collect();
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Builds a verified chain for `⟨generators⟩`.
    ///
    /// A seeded random Schreier–Sims phase proposes strong generators; a
    /// deterministic Schreier-generator sweep then completes and certifies
    /// the chain, so the resulting order is exact for every seed.
    pub fn build(degree: usize, generators: &[Permutation], seed: u64) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            chain.absorb(g);
        }
        let mut pr = ProductReplacement::new(&gens, seed);
        let mut streak = 0;
        while streak < 20 {
            let g = pr.next();
            if chain.absorb(&g) {
                streak = 0;
            } else {
                streak += 1;
            }
        }
        chain.complete();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift_from(g, 0);
        h.is_identity()
    }

    /// Strips `g` through the levels starting at `start`; returns the residue
    /// and the level at which stripping stopped (`levels.len()` if it
    /// passed every level).
    pub(crate) fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.image(level.base as usize);
            let p = level.pos[x];
            if p == NONE {
                return (h, i);
            }
            h = h.then(&level.inv[p as usize]);
        }
        (h, self.levels.len())
    }

    /// Sifts `g` and records the residue as a new strong generator when it
    /// is not already represented. Returns whether the chain changed.
    fn absorb(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.sift_from(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        self.insert_residue(h, 0, j);
        true
    }

    /// Adds `h` (which fixes the first `j` base points) to levels `from..=j`,
    /// extending the base when `h` fixes every base point.
    fn insert_residue(&mut self, h: Permutation, from: usize, j: usize) {
        if j == self.levels.len() {
            let moved = (0..self.degree)
                .find(|&x| h.image(x) != x)
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(moved as u32, self.degree));
        }
        for l in from..=j {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild(self.degree);
        }
    }

    /// Deterministic Schreier–Sims sweep: every Schreier generator at every
    /// level must sift through the deeper levels.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut found: Option<(Permutation, usize)> = None;
            'scan: for idx in 0..self.levels[lvl].orbit.len() {
                for s in &self.levels[lvl].gens {
                    let level = &self.levels[lvl];
                    let image = s.image(level.orbit[idx] as usize);
                    let back = &level.inv[level.pos[image] as usize];
                    let schreier = level.trans[idx].then(s).then(back);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(&schreier, lvl + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        found = Some((h, j));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((h, j)) => {
                    self.insert_residue(h, lvl + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }
}

/// Product-replacement random element generator.
struct ProductReplacement {
    slots: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    fn new(gens: &[Permutation], seed: u64) -> Self {
        let n = gens[0].degree();
        let len = gens.len().max(10);
        let slots = (0..len).map(|i| gens[i % gens.len()].clone()).collect();
        let mut pr = ProductReplacement {
            slots,
            acc: Permutation::identity(n),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..50 {
            pr.next();
        }
        pr
    }

    fn next(&mut self) -> Permutation {
        let len = self.slots.len();
        let i = self.rng.gen_range(0..len);
        let mut j = self.rng.gen_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        self.slots[i] = if self.rng.gen_bool(0.5) {
            self.slots[i].then(&self.slots[j])
        } else {
            self.slots[j].then(&self.slots[i])
        };
        self.acc = self.acc.then(&self.slots[i]);
        self.acc.clone()
    }
}
