//! Normal subgroups through character kernels.
//!
//! Every normal subgroup is an intersection of kernels of irreducible
//! characters, so the full lattice is the closure of the kernel set under
//! pairwise intersection. All subgroups here live as sets of conjugacy-class
//! indices; elements are materialized only when solvability is tested.

use std::collections::BTreeSet;

use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclotomic as Cy;
use crate::error::{Error, Result};

/// A normal subgroup as a union of conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalSubgroup {
    pub class_indices: BTreeSet<usize>,
    pub order: u64,
}

impl NormalSubgroup {
    fn from_classes(table: &CharacterTable, class_indices: BTreeSet<usize>) -> Self {
        let order = class_indices
            .iter()
            .map(|&c| table.classes().classes[c].size as u64)
            .sum();
        NormalSubgroup {
            class_indices,
            order,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole_group(&self, table: &CharacterTable) -> bool {
        self.order == table.order()
    }

    /// Element-index set: the union of the member classes.
    pub fn materialize(&self, table: &CharacterTable) -> BTreeSet<usize> {
        self.class_indices
            .iter()
            .flat_map(|&c| table.classes().classes[c].members.iter().copied())
            .collect()
    }
}

/// ker X = classes where the value equals the degree, by exact equality.
pub fn kernel_class_set(table: &CharacterTable, row: usize) -> NormalSubgroup {
    let degree = Cy::from_integer(table.degree(row) as i64);
    let classes = (0..table.classes().count())
        .filter(|&j| table.value(row, j) == &degree)
        .collect();
    NormalSubgroup::from_classes(table, classes)
}

/// Does ker(row) contain n?
pub fn kernel_contains(table: &CharacterTable, n: &NormalSubgroup, row: usize) -> bool {
    let kernel = kernel_class_set(table, row);
    n.class_indices.is_subset(&kernel.class_indices)
}

/// The complete normal subgroup lattice: close the character kernels (plus
/// the whole group) under pairwise intersection, verify product closure on
/// the materialized elements, sort by order then class set.
pub fn enumerate_normal_subgroups(table: &CharacterTable) -> Result<Vec<NormalSubgroup>> {
    let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    sets.insert((0..table.classes().count()).collect());
    for row in 0..table.row_count() {
        sets.insert(kernel_class_set(table, row).class_indices);
    }
    loop {
        let snapshot: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (a_idx, a) in snapshot.iter().enumerate() {
            for b in &snapshot[a_idx + 1..] {
                let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
                if sets.insert(meet) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let mut subgroups: Vec<NormalSubgroup> = sets
        .into_iter()
        .map(|classes| NormalSubgroup::from_classes(table, classes))
        .collect();
    subgroups.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.class_indices.cmp(&b.class_indices))
    });

    for n in &subgroups {
        if table.order() % n.order != 0 {
            return Err(Error::Internal(format!(
                "normal subgroup candidate of order {} does not divide {}",
                n.order,
                table.order()
            )));
        }
        verify_product_closed(table, n)?;
    }
    Ok(subgroups)
}

fn verify_product_closed(table: &CharacterTable, n: &NormalSubgroup) -> Result<()> {
    let members = n.materialize(table);
    let group = table.group();
    let generators = group.small_generating_set(&members);
    if group.subgroup_closure(&generators.iter().copied().collect()) != members {
        return Err(Error::Internal(
            "kernel-intersection class set is not product-closed".into(),
        ));
    }
    Ok(())
}

/// Intersection of the kernels of all linear rows: the derived subgroup.
pub fn derived_subgroup_classes(table: &CharacterTable) -> NormalSubgroup {
    let mut classes: BTreeSet<usize> = (0..table.classes().count()).collect();
    for row in 0..table.row_count() {
        if table.degree(row) == 1 {
            let kernel = kernel_class_set(table, row);
            classes = classes.intersection(&kernel.class_indices).copied().collect();
        }
    }
    NormalSubgroup::from_classes(table, classes)
}

/// Classes of size 1: the center.
pub fn center_classes(table: &CharacterTable) -> NormalSubgroup {
    let classes = (0..table.classes().count())
        .filter(|&j| table.classes().classes[j].size == 1)
        .collect();
    NormalSubgroup::from_classes(table, classes)
}

/// Materialize and run the derived series.
pub fn is_solvable_normal(table: &CharacterTable, n: &NormalSubgroup) -> Result<bool> {
    let members = n.materialize(table);
    let (_, solvable) = table
        .group()
        .derived_series(&members)
        .map_err(|_| Error::Internal("materialized normal subgroup is not closed".into()))?;
    Ok(solvable)
}

/// JSON rendering of the lattice: [{order, class_indices, solvable}].
pub fn normal_lattice_json(
    table: &CharacterTable,
    subgroups: &[NormalSubgroup],
) -> Result<serde_json::Value> {
    let mut entries = Vec::new();
    for n in subgroups {
        entries.push(serde_json::json!({
            "order": n.order,
            "class_indices": n.class_indices.iter().copied().collect::<Vec<usize>>(),
            "solvable": is_solvable_normal(table, n)?,
        }));
    }
    Ok(serde_json::Value::Array(entries))
}
