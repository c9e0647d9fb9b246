use super::chain::{StabChain, NONE};
use super::perm::Permutation;

/// Longest base the ranking routines support. Every level of a chain at
/// least doubles the order, so this covers all orders below 2^40.
pub const MAX_BASE: usize = 40;

/// Implicit enumeration of all elements of a group through its stabilizer
/// chain.
///
/// Element `r` is the product `t_{k-1}[d_{k-1}] ⋯ t_0[d_0]` of transversal
/// elements, where `d_i` are the mixed-radix digits of `r` (least significant
/// digit at level 0). Ranking an element only needs its images of the base
/// points, which makes element→index lookups `O(k²)` for a base of length
/// `k` and needs no hash table.
#[derive(Clone, Debug)]
pub struct ElementIndex {
    degree: usize,
    order: u64,
    base: Vec<u32>,
    radix: Vec<u32>,
    stride: Vec<u64>,
    pos: Vec<Vec<u32>>,
    trans: Vec<Vec<u32>>,
    inv: Vec<Vec<u32>>,
}

impl ElementIndex {
    pub(crate) fn from_chain(chain: &StabChain) -> Self {
        let degree = chain.degree();
        let mut base = Vec::new();
        let mut radix = Vec::new();
        let mut stride = Vec::new();
        let mut pos = Vec::new();
        let mut trans = Vec::new();
        let mut inv = Vec::new();
        let mut acc = 1u64;
        for level in &chain.levels {
            base.push(level.base);
            radix.push(level.orbit.len() as u32);
            stride.push(acc);
            acc *= level.orbit.len() as u64;
            pos.push(level.pos.clone());
            trans.push(
                level
                    .trans
                    .iter()
                    .flat_map(|t| t.images().iter().copied())
                    .collect(),
            );
            inv.push(
                level
                    .inv
                    .iter()
                    .flat_map(|t| t.images().iter().copied())
                    .collect(),
            );
        }
        assert!(base.len() <= MAX_BASE, "base too long for ranking");
        ElementIndex {
            degree,
            order: acc,
            base,
            radix,
            stride,
            pos,
            trans,
            inv,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    /// Mixed-radix digits of `rank`.
    #[inline]
    pub fn digits(&self, rank: u64, out: &mut [u32]) {
        for i in 0..self.base.len() {
            out[i] = ((rank / self.stride[i]) % self.radix[i] as u64) as u32;
        }
    }

    /// Image of `point` under the element with the given digits.
    #[inline]
    pub fn apply_digits(&self, digits: &[u32], point: u32) -> u32 {
        let n = self.degree;
        let mut y = point;
        for i in (0..self.base.len()).rev() {
            y = self.trans[i][digits[i] as usize * n + y as usize];
        }
        y
    }

    /// Rank of the group element whose base images are `images`. The slice
    /// is overwritten. The caller guarantees the images come from a member.
    #[inline]
    pub fn rank_from_base_images(&self, images: &mut [u32]) -> u64 {
        let n = self.degree;
        let k = self.base.len();
        let mut rank = 0u64;
        for i in 0..k {
            let d = self.pos[i][images[i] as usize];
            debug_assert_ne!(d, NONE);
            rank += d as u64 * self.stride[i];
            if i + 1 < k {
                let inv = &self.inv[i][d as usize * n..(d as usize + 1) * n];
                for c in &mut images[i + 1..k] {
                    *c = inv[*c as usize];
                }
            }
        }
        rank
    }

    /// Rank of `g`, or `None` if `g` is not in the group.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        if g.degree() != self.degree {
            return None;
        }
        let n = self.degree;
        let mut h: Vec<u32> = g.images().to_vec();
        let mut rank = 0u64;
        for i in 0..self.base.len() {
            let d = self.pos[i][h[self.base[i] as usize] as usize];
            if d == NONE {
                return None;
            }
            rank += d as u64 * self.stride[i];
            let inv = &self.inv[i][d as usize * n..(d as usize + 1) * n];
            for x in h.iter_mut() {
                *x = inv[*x as usize];
            }
        }
        h.iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
            .then_some(rank)
    }

    pub fn element(&self, rank: u64) -> Permutation {
        let mut digits = [0u32; MAX_BASE];
        self.digits(rank, &mut digits);
        let images = (0..self.degree as u32)
            .map(|x| self.apply_digits(&digits, x))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order).map(move |r| self.element(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::PermGroup;

    #[test]
    fn rank_and_unrank_agree() {
        let g = PermGroup::from_cycles("S4", 4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let index = g.enumerate(1000).unwrap();
        assert_eq!(index.order(), 24);
        let mut seen = std::collections::HashSet::new();
        for r in 0..index.order() {
            let e = index.element(r);
            assert_eq!(index.rank(&e), Some(r));
            let mut imgs: Vec<u32> = index.base().iter().map(|&b| e.images()[b as usize]).collect();
            assert_eq!(index.rank_from_base_images(&mut imgs), r);
            assert!(seen.insert(e));
        }
        assert!(index.element(0).is_identity());
    }

    #[test]
    fn non_member_has_no_rank() {
        let g = PermGroup::from_cycles("A4", 4, &["(1 2 3)", "(2 3 4)"]).unwrap();
        let index = g.enumerate(1000).unwrap();
        assert_eq!(index.order(), 12);
        assert_eq!(index.rank(&Permutation::parse("(1 2)", 4).unwrap()), None);
    }
}
