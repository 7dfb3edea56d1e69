//! chardeg: exact character theory of finite groups at desk scale.
//!
//! The crate builds permutation groups from short textual specs, computes
//! their full complex character tables by the Dixon-Schneider method in
//! exact cyclotomic arithmetic, classifies each irreducible character's
//! field of values (Q, R, or C), enumerates normal subgroups from character
//! kernels, and evaluates average-character-degree invariants as exact
//! rationals. A theorem battery checks the solvability bounds these averages
//! are known to impose (29/8, 9/2, 18/5, 4, and 7/2) over a built-in corpus
//! of groups up to order 2520.
//!
//! ```
//! use chardeg::{acd, chartab, group, groupspec, normal};
//!
//! let spec = groupspec::parse_group_spec("alt:5").unwrap();
//! let g = group::construct_named_group(&spec, group::Caps::default()).unwrap();
//! let table = chartab::character_table(g).unwrap();
//! assert_eq!(table.degrees(), vec![1, 3, 3, 4, 5]);
//!
//! let normals = normal::enumerate_normal_subgroups(&table).unwrap();
//! let report = acd::acd_suite("alt:5", &table, &normals).unwrap();
//! assert_eq!(report.acd, chardeg::cyclotomic::rational(16, 5));
//! ```
//!
//! Runnable examples live under `examples/`; the `chardeg` binary exposes
//! the same functionality as subcommands (`table`, `acd`, `normals`,
//! `verify`, `selftest`).

pub mod acd;
pub mod chartab;
pub mod classes;
pub mod cli;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod modular;
pub mod normal;
pub mod report;
pub mod selfcheck;
pub mod theorems;

mod perm;

pub use crate::acd::{AcdReport, FieldLabel};
pub use crate::chartab::{character_table, CharacterTable};
pub use crate::cyclotomic::{Cyclotomic, Rational};
pub use crate::error::{Error, Result};
pub use crate::group::{Caps, PermutationGroup};
pub use crate::groupspec::{parse_group_spec, GroupSpec};
pub use crate::perm::Permutation;
