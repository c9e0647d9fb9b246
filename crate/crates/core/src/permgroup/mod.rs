//! Permutation groups given by generators: stabilizer chains, implicit
//! element enumeration, conjugacy classes and power maps.

mod chain;
mod classes;
mod index;
mod perm;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use chain::StabChain;
pub use classes::ClassSet;
pub use index::{ElementIndex, MAX_BASE};
pub use perm::Permutation;

use crate::error::{Error, Result};

/// Default maximum order for full element enumeration.
pub const DEFAULT_CAP: u64 = 4_000_000;

/// A permutation group given by generators. The stabilizer chain is built
/// lazily and cached.
#[derive(Debug)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    seed: u64,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            name: self.name.clone(),
            degree: self.degree,
            generators: self.generators.clone(),
            seed: self.seed,
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
            seed: 0,
            chain: OnceLock::new(),
        })
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycles(name: impl Into<String>, degree: usize, cycles: &[&str]) -> Result<Self> {
        let gens = cycles
            .iter()
            .map(|c| Permutation::parse(c, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(name, degree, gens)
    }

    /// Seed for the randomized phase of the stabilizer chain.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.chain = OnceLock::new();
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, self.seed))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Enumerates all elements, provided the order does not exceed `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<ElementIndex> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= cap && n <= u32::MAX as u64 => {
                Ok(ElementIndex::from_chain(self.chain()))
            }
            _ => Err(Error::CapExceeded {
                order: order.to_string(),
                cap,
            }),
        }
    }

    /// The subgroup generated by `gens` inside the same symmetric group.
    pub fn subgroup(&self, name: impl Into<String>, gens: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::new(name, self.degree, gens).map(|g| g.with_seed(self.seed))
    }

    /// Normal closure of `gens` under conjugation by this group.
    pub fn normal_closure(&self, name: impl Into<String>, gens: Vec<Permutation>) -> PermGroup {
        let mut closure: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut chain = StabChain::build(self.degree, &closure, self.seed);
        let mut head = 0;
        while head < closure.len() {
            let x = closure[head].clone();
            head += 1;
            for s in &self.generators {
                let c = x.conjugate_by(s);
                if !chain.contains(&c) {
                    closure.push(c);
                    chain = StabChain::build(self.degree, &closure, self.seed);
                }
            }
        }
        let group = PermGroup {
            name: name.into(),
            degree: self.degree,
            generators: if closure.is_empty() {
                vec![Permutation::identity(self.degree)]
            } else {
                closure
            },
            seed: self.seed,
            chain: OnceLock::new(),
        };
        let _ = group.chain.set(chain);
        group
    }

    /// The commutator subgroup, as the normal closure of the commutators of
    /// the generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(format!("{}'", self.name), comms)
    }

    /// Lengths of the derived series until it stabilises.
    pub fn derived_series_orders(&self) -> Vec<BigUint> {
        let mut out = vec![self.order()];
        let mut current = self.clone();
        loop {
            let next = current.derived_subgroup();
            let o = next.order();
            if &o == out.last().unwrap() {
                return out;
            }
            out.push(o);
            current = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_orders()
            .last()
            .is_some_and(|o| *o == BigUint::from(1u32))
    }
}

/// Order of the group generated by `generators`.
pub fn group_order(generators: &[Permutation]) -> Result<BigUint> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
    PermGroup::new("", first.degree(), generators.to_vec()).map(|g| g.order())
}

pub fn enumerate_elements(group: &PermGroup, cap: u64) -> Result<ElementIndex> {
    group.enumerate(cap)
}

pub fn conjugacy_classes(group: &PermGroup, index: &ElementIndex) -> ClassSet {
    ClassSet::compute(group, index)
}

pub fn derived_subgroup(group: &PermGroup) -> PermGroup {
    group.derived_subgroup()
}
