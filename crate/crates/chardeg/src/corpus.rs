//! The built-in verification corpus: every group of order at most 2520 the
//! theorem battery runs over, with solvability fixed by family.

use crate::groupspec::{parse_group_spec, GroupSpec};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: GroupSpec,
    pub expected_solvable: bool,
}

/// Corpus in canonical verification order.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    const ENTRIES: &[(&str, bool)] = &[
        ("cyclic:2", true),
        ("cyclic:3", true),
        ("cyclic:4", true),
        ("cyclic:5", true),
        ("cyclic:6", true),
        ("dihedral:8", true),
        ("dihedral:10", true),
        ("dihedral:12", true),
        ("quaternion:8", true),
        ("sym:3", true),
        ("sym:4", true),
        ("sym:5", false),
        ("sym:6", false),
        ("alt:4", true),
        ("alt:5", false),
        ("alt:6", false),
        ("alt:7", false),
        ("sl2:3", true),
        ("sl2:5", false),
        ("sl2:7", false),
        ("sl2:9", false),
        ("psl2:7", false),
        ("psl2:11", false),
        ("product:cyclic:2,alt:5", false),
        ("product:alt:5,cyclic:3", false),
    ];
    ENTRIES
        .iter()
        .map(|&(name, expected_solvable)| CorpusEntry {
            name,
            spec: parse_group_spec(name).expect("corpus specs parse"),
            expected_solvable,
        })
        .collect()
}
