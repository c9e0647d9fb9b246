//! Exact character tables and the degree-multiplicity statistic `m(G)` for
//! finite permutation groups, together with the arithmetic used to bound the
//! groups in which every character degree occurs at most twice.
//!
//! Module map:
//!
//! * [`permgroup`]: permutations, stabilizer chains, element indexing,
//!   conjugacy classes and power maps.
//! * [`chartab`]: ordinary character tables by the modular
//!   (Dixon–Schneider) method, kernels, quotients, Galois orbits, fusion and
//!   extendibility.
//! * [`symchar`]: degrees of symmetric and alternating groups through
//!   partitions and hook lengths.
//! * [`classifier`]: degree patterns, `m(G)`, basic constraints and verdicts
//!   against the known list of groups with `m(G) = 2`.
//! * [`bounds`]: order bounds for minimal normal subgroups and the candidate
//!   order enumerations of the solvable case.
//! * [`catalog`]: group files, standard constructions and bundled fixtures.

pub mod bounds;
pub mod catalog;
pub mod chartab;
pub mod classifier;
pub mod cyclotomic;
pub mod error;
pub mod modp;
pub mod permgroup;
pub mod symchar;

pub use error::{Error, Result};
