//! Group fixtures and constructions, and the registry of every group the
//! classification names together with the counter-examples.

mod linear;
mod natural;
mod spec;

use std::path::PathBuf;

use num_bigint::BigUint;

pub use linear::{
    construct_affine, construct_gl, construct_pgl2, construct_psl2, construct_sl2,
    find_linear_subgroup, gl_generators, matrix_of, nonzero_vector_action, sl_generators, Matrix,
    MAX_AFFINE_POINTS, SEARCH_BUDGET,
};
pub use natural::{alternating, cyclic, dihedral, symmetric};
pub use spec::{parse_group_file, FixtureSet, GroupSpec};

use crate::bounds::Family;
use crate::chartab::character_table;
use crate::classifier::lookup_listed;
use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, DEFAULT_CAP};
use crate::symchar::{alt_pattern, sym_pattern};

/// Fixture files shipped with the crate, as `(file name, contents)`.
pub const BUNDLED_FIXTURES: [(&str, &str); 7] = [
    ("2a6.grp", include_str!("../../fixtures/groups/2a6.grp")),
    ("j2.grp", include_str!("../../fixtures/groups/j2.grp")),
    ("j2_2.grp", include_str!("../../fixtures/groups/j2_2.grp")),
    ("l3_3_2.grp", include_str!("../../fixtures/groups/l3_3_2.grp")),
    ("m12_2.grp", include_str!("../../fixtures/groups/m12_2.grp")),
    ("m22.grp", include_str!("../../fixtures/groups/m22.grp")),
    ("u3_5_2.grp", include_str!("../../fixtures/groups/u3_5_2.grp")),
];

pub fn bundled_fixtures() -> Result<FixtureSet> {
    let mut set = FixtureSet::default();
    for (file, text) in BUNDLED_FIXTURES {
        set.push(GroupSpec::parse(file, text)?, PathBuf::from(file))?;
    }
    Ok(set)
}

fn bundled_fixture(name: &str) -> Result<GroupSpec> {
    bundled_fixtures()?
        .specs
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no bundled fixture named {name}")))
}

/// How a catalog group is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of the `m`-gon.
    Dihedral(usize),
    Psl2(u64),
    Sl2(u64),
    /// Name of a bundled fixture.
    Fixture(&'static str),
    /// `2^4:A7` with `A7 ≤ GL(4,2)` found by search.
    Affine2A7,
    /// `2^4:A6` with `A6` inside the `A7` above.
    Affine2A6,
    /// `11^2:SL(2,5)` with `SL(2,5) ≤ GL(2,11)` found by search.
    Affine11SL25,
    /// Degrees from the hook-length formula only.
    Hook(Family, usize),
    /// Too large for tables; covered by the bounds module.
    BoundsOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Table,
    HookFormula,
    BoundsOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// `m(G) = 2`: the group is on the list.
    Listed,
    /// `m(G) ≥ 3`: a counter-example.
    Excluded,
}

impl Expectation {
    pub fn holds(self, m: usize) -> bool {
        match self {
            Expectation::Listed => m == 2,
            Expectation::Excluded => m >= 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub order: BigUint,
    pub expected: Expectation,
    pub solvable: bool,
    pub source: Source,
}

impl CatalogEntry {
    pub fn status(&self) -> Status {
        match self.source {
            Source::Hook(..) => Status::HookFormula,
            Source::BoundsOnly => Status::BoundsOnly,
            _ => Status::Table,
        }
    }

    /// Builds the permutation group for table entries; the order is
    /// checked against the catalog.
    pub fn build(&self, seed: u64) -> Result<PermGroup> {
        let group = match self.source {
            Source::Symmetric(n) => symmetric(n)?,
            Source::Alternating(n) => alternating(n)?,
            Source::Cyclic(n) => cyclic(n)?,
            Source::Dihedral(m) => dihedral(m)?,
            Source::Psl2(q) => construct_psl2(q)?,
            Source::Sl2(q) => construct_sl2(q)?,
            Source::Fixture(name) => bundled_fixture(name)?.build()?,
            Source::Affine2A7 => affine_2_a7(seed)?,
            Source::Affine2A6 => affine_2_a6(seed)?,
            Source::Affine11SL25 => affine_11_sl25(seed)?,
            Source::Hook(..) | Source::BoundsOnly => {
                return Err(Error::InvalidArgument(format!(
                    "{} has no permutation representation in the catalog",
                    self.name
                )))
            }
        }
        .with_name(self.name)
        .with_seed(seed);
        let order = group.order();
        if order != self.order {
            return Err(Error::OrderMismatch {
                name: self.name.to_string(),
                declared: self.order.to_string(),
                computed: order.to_string(),
            });
        }
        Ok(group)
    }

    /// `m(G)` from the hook-length formula, for [`Status::HookFormula`].
    pub fn hook_m(&self) -> Option<usize> {
        match self.source {
            Source::Hook(Family::Symmetric, n) => sym_pattern(n).ok().map(|p| p.m()),
            Source::Hook(Family::Alternating, n) => alt_pattern(n).ok().map(|p| p.m()),
            _ => None,
        }
    }
}

/// `A7 ≤ GL(4, 2)` as matrices; `A7` has a single class there.
fn a7_in_gl42(seed: u64) -> Result<Vec<Matrix>> {
    let gl = construct_gl(2, 4)?;
    let pattern = alt_pattern(7)?;
    let pair = find_linear_subgroup(&gl, 2520, Some(&pattern), seed, SEARCH_BUDGET)?;
    Ok(pair.iter().map(|g| matrix_of(g, 2, 4)).collect())
}

fn affine_2_a7(seed: u64) -> Result<PermGroup> {
    construct_affine("2^4:A7", 2, 4, &a7_in_gl42(seed)?)
}

/// `A6` as a point stabiliser class inside the `A7` of [`affine_2_a7`].
fn affine_2_a6(seed: u64) -> Result<PermGroup> {
    let a7 = nonzero_vector_action("A7", 2, 4, &a7_in_gl42(seed)?)?;
    let pattern = alt_pattern(6)?;
    let pair = find_linear_subgroup(&a7, 360, Some(&pattern), seed, SEARCH_BUDGET)?;
    let mats: Vec<Matrix> = pair.iter().map(|g| matrix_of(g, 2, 4)).collect();
    construct_affine("2^4:A6", 2, 4, &mats)
}

fn affine_11_sl25(seed: u64) -> Result<PermGroup> {
    let gl = construct_gl(11, 2)?;
    let pattern = character_table(&construct_sl2(5)?)?.degree_pattern();
    let pair = find_linear_subgroup(&gl, 120, Some(&pattern), seed, SEARCH_BUDGET)?;
    let mats: Vec<Matrix> = pair.iter().map(|g| matrix_of(g, 11, 2)).collect();
    construct_affine("11^2:SL(2,5)", 11, 2, &mats)
}

fn listed_entry(name: &'static str, solvable: bool, source: Source) -> CatalogEntry {
    let listed = lookup_listed(name).expect("catalog names are listed");
    CatalogEntry {
        name: listed.name,
        order: listed.order.parse().expect("listed orders are integers"),
        expected: Expectation::Listed,
        solvable,
        source,
    }
}

/// Every listed group, in list order.
pub fn theorem_b_catalog() -> Vec<CatalogEntry> {
    use Source::*;
    vec![
        listed_entry("C2", true, Cyclic(2)),
        listed_entry("S3", true, Symmetric(3)),
        listed_entry("D10", true, Dihedral(5)),
        listed_entry("S4", true, Symmetric(4)),
        listed_entry("A5", false, Alternating(5)),
        listed_entry("S5", false, Symmetric(5)),
        listed_entry("A6", false, Alternating(6)),
        listed_entry("A7", false, Alternating(7)),
        listed_entry("S8", false, Symmetric(8)),
        listed_entry("A9", false, Alternating(9)),
        listed_entry("A10", false, Alternating(10)),
        listed_entry("S10", false, Symmetric(10)),
        listed_entry("A16", false, Hook(Family::Alternating, 16)),
        listed_entry("L2(11)", false, Psl2(11)),
        listed_entry("L2(7)", false, Psl2(7)),
        listed_entry("L3(3).2", false, Fixture("L3(3).2")),
        listed_entry("U3(5).2", false, Fixture("U3(5).2")),
        listed_entry("M12.2", false, Fixture("M12.2")),
        listed_entry("M22", false, Fixture("M22")),
        listed_entry("McL", false, BoundsOnly),
        listed_entry("Th", false, BoundsOnly),
        listed_entry("J2", false, Fixture("J2")),
        listed_entry("J2.2", false, Fixture("J2.2")),
        listed_entry("F3+", false, BoundsOnly),
        listed_entry("Co1", false, BoundsOnly),
        listed_entry("B", false, BoundsOnly),
        listed_entry("SL(2,5)", false, Sl2(5)),
        listed_entry("2^4:A6", false, Affine2A6),
        listed_entry("2^4:A7", false, Affine2A7),
        listed_entry("11^2:SL(2,5)", false, Affine11SL25),
    ]
}

/// Groups absent from the list, each with `m(G) ≥ 3`.
pub fn counter_examples() -> Vec<CatalogEntry> {
    use crate::symchar::factorial;
    let excluded = |name: &'static str, order: BigUint, source: Source| CatalogEntry {
        name,
        order,
        expected: Expectation::Excluded,
        solvable: false,
        source,
    };
    let half = |n: usize| factorial(n) / 2u32;
    vec![
        excluded("S6", factorial(6), Source::Symmetric(6)),
        excluded("S7", factorial(7), Source::Symmetric(7)),
        excluded("S9", factorial(9), Source::Hook(Family::Symmetric, 9)),
        excluded("A8", half(8), Source::Alternating(8)),
        excluded("A11", half(11), Source::Hook(Family::Alternating, 11)),
        excluded("A12", half(12), Source::Hook(Family::Alternating, 12)),
        excluded("2.A6", BigUint::from(720u32), Source::Fixture("2.A6")),
        excluded("SL(2,7)", BigUint::from(336u32), Source::Sl2(7)),
    ]
}

/// Looks up a name (or alias) in both lists.
pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    let key = crate::classifier::normalize_name(name);
    let canonical = lookup_listed(name).map(|g| g.name.to_string()).unwrap_or(key);
    theorem_b_catalog()
        .into_iter()
        .chain(counter_examples())
        .find(|e| e.name == canonical)
}

/// Table entries whose order is within `max_order` (and the enumeration cap).
pub fn table_entries(max_order: u64) -> Vec<CatalogEntry> {
    let limit = BigUint::from(max_order.min(DEFAULT_CAP));
    theorem_b_catalog()
        .into_iter()
        .chain(counter_examples())
        .filter(|e| e.status() == Status::Table && e.order <= limit)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_covers_the_list() {
        let names: Vec<&str> = theorem_b_catalog().iter().map(|e| e.name).collect();
        let listed: Vec<&str> = crate::classifier::THEOREM_B.iter().map(|g| g.name).collect();
        assert_eq!(names, listed);
    }

    #[test]
    fn bundled_fixtures_parse() {
        let set = bundled_fixtures().unwrap();
        assert_eq!(set.len(), BUNDLED_FIXTURES.len());
        assert!(set.names().contains("J2.2"));
    }

    #[test]
    fn lookup_by_alias() {
        assert_eq!(find_entry("PSL(2,7)").unwrap().name, "L2(7)");
        assert_eq!(find_entry("Σ6").unwrap().expected, Expectation::Excluded);
        assert!(find_entry("M24").is_none());
    }
}
