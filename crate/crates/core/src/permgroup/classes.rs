use num_integer::Integer;

use super::index::{ElementIndex, MAX_BASE};
use super::perm::Permutation;
use super::PermGroup;

const UNSET: u32 = u32::MAX;

/// Conjugacy classes of an enumerated group, with the element→class map and
/// the power maps.
#[derive(Clone, Debug)]
pub struct ClassSet {
    group_order: u64,
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    orders: Vec<u32>,
    exponent: u64,
    class_of: Vec<u32>,
    /// `power_classes[c][j]` is the class of `g^j` for the representative `g`
    /// of class `c`, `0 <= j < order(g)`.
    power_classes: Vec<Vec<u32>>,
}

impl ClassSet {
    /// Partitions the group into conjugacy classes.
    ///
    /// Classes are orbits of the conjugation action of the generators,
    /// traced through the implicit element index. They are numbered by
    /// (element order, class size, first element), so the identity class is
    /// class 0.
    pub fn compute(group: &PermGroup, index: &ElementIndex) -> Self {
        let order = index.order();
        let k = index.base_len();
        let base = index.base().to_vec();
        let gens: Vec<(Vec<u32>, Vec<u32>)> = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| (g.images().to_vec(), g.inverse().images().to_vec()))
            .collect();

        let mut class_of = vec![UNSET; order as usize];
        let mut first: Vec<u64> = Vec::new();
        let mut sizes: Vec<u64> = Vec::new();
        let mut queue: Vec<u32> = Vec::new();
        let mut digits = [0u32; MAX_BASE];
        let mut images = [0u32; MAX_BASE];
        for start in 0..order {
            if class_of[start as usize] != UNSET {
                continue;
            }
            let id = sizes.len() as u32;
            class_of[start as usize] = id;
            first.push(start);
            queue.clear();
            queue.push(start as u32);
            let mut head = 0;
            while head < queue.len() {
                let z = queue[head] as u64;
                head += 1;
                index.digits(z, &mut digits);
                for (s, s_inv) in &gens {
                    // base images of s⁻¹ z s
                    for j in 0..k {
                        let pre = s_inv[base[j] as usize];
                        images[j] = s[index.apply_digits(&digits, pre) as usize];
                    }
                    let y = index.rank_from_base_images(&mut images[..k]);
                    if class_of[y as usize] == UNSET {
                        class_of[y as usize] = id;
                        queue.push(y as u32);
                    }
                }
            }
            sizes.push(queue.len() as u64);
        }

        let reps_raw: Vec<Permutation> = first.iter().map(|&r| index.element(r)).collect();
        let orders_raw: Vec<u32> = reps_raw.iter().map(|g| g.order() as u32).collect();
        let mut perm: Vec<usize> = (0..sizes.len()).collect();
        perm.sort_by_key(|&c| (orders_raw[c], sizes[c], first[c]));
        let mut relabel = vec![0u32; sizes.len()];
        for (new, &old) in perm.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let reps: Vec<Permutation> = perm.iter().map(|&c| reps_raw[c].clone()).collect();
        let sizes: Vec<u64> = perm.iter().map(|&c| sizes[c]).collect();
        let orders: Vec<u32> = perm.iter().map(|&c| orders_raw[c]).collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)));

        let power_classes = reps
            .iter()
            .zip(&orders)
            .map(|(g, &o)| {
                let mut out = Vec::with_capacity(o as usize);
                let mut x = Permutation::identity(g.degree());
                for _ in 0..o {
                    let r = index.rank(&x).expect("power of a member is a member");
                    out.push(class_of[r as usize]);
                    x = x.then(g);
                }
                out
            })
            .collect();

        ClassSet {
            group_order: order,
            reps,
            sizes,
            orders,
            exponent,
            class_of,
            power_classes,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, class: usize) -> u64 {
        self.sizes[class]
    }

    /// Order of the elements in `class`.
    pub fn element_order(&self, class: usize) -> u32 {
        self.orders[class]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn class_of_rank(&self, rank: u64) -> usize {
        self.class_of[rank as usize] as usize
    }

    pub fn class_map(&self) -> &[u32] {
        &self.class_of
    }

    /// Class of `g^j` for the representative `g` of `class`.
    pub fn power_class(&self, class: usize, j: u64) -> usize {
        let row = &self.power_classes[class];
        row[(j % row.len() as u64) as usize] as usize
    }

    pub fn power_classes(&self, class: usize) -> &[u32] {
        &self.power_classes[class]
    }

    /// Class of the inverses of the elements in `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        let o = self.orders[class] as u64;
        self.power_class(class, o - 1)
    }

    /// The permutation of class ids induced by `g ↦ g^k`, for `k` coprime
    /// to the exponent.
    pub fn power_map(&self, k: u64) -> Vec<usize> {
        (0..self.len()).map(|c| self.power_class(c, k)).collect()
    }

    /// Units modulo the exponent, i.e. the exponents `k` whose power maps
    /// realise the Galois action.
    pub fn galois_exponents(&self) -> Vec<u64> {
        let e = self.exponent;
        (1..=e).filter(|k| k.gcd(&e) == 1).collect()
    }

    /// Ranks of the elements of every class.
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .sizes
            .iter()
            .map(|&s| Vec::with_capacity(s as usize))
            .collect();
        for (r, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(r as u32);
        }
        out
    }
}
