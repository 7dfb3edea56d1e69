//! Independent brute-force oracles. Everything here recomputes results from
//! first principles (full double loops, subset scans, all-pairs closures) so
//! the optimized library paths have something honest to be checked against.

// Shared by several test targets; not every target uses every oracle.
#![allow(dead_code)]

use std::collections::BTreeSet;

use chardeg::classes::ClassData;
use chardeg::group::PermutationGroup;

/// a[i][j][k] by the definition: scan all of C_i x C_j and bucket the
/// products by class, then divide each bucket by |C_k|.
pub fn naive_class_constants(group: &PermutationGroup, classes: &ClassData) -> Vec<Vec<Vec<u64>>> {
    let r = classes.count();
    let mut tensor = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut buckets = vec![0u64; r];
            for &x in &classes.classes[i].members {
                for &y in &classes.classes[j].members {
                    buckets[classes.class_of[group.multiply(x, y)]] += 1;
                }
            }
            for k in 0..r {
                let size = classes.classes[k].size as u64;
                assert_eq!(buckets[k] % size, 0, "product counts spread evenly over classes");
                tensor[i][j][k] = buckets[k] / size;
            }
        }
    }
    tensor
}

/// Is the union of the given classes closed under products? Checked the slow
/// way: every pair.
fn union_is_closed(group: &PermutationGroup, classes: &ClassData, subset: &BTreeSet<usize>) -> bool {
    let members: Vec<usize> = subset
        .iter()
        .flat_map(|&c| classes.classes[c].members.iter().copied())
        .collect();
    let member_set: BTreeSet<usize> = members.iter().copied().collect();
    members.iter().all(|&x| {
        members
            .iter()
            .all(|&y| member_set.contains(&group.multiply(x, y)))
    })
}

/// All normal subgroups by scanning every subset of classes that contains
/// the identity class. Exponential in the class count; fine below order 24.
pub fn brute_force_normal_subgroups(
    group: &PermutationGroup,
    classes: &ClassData,
) -> Vec<BTreeSet<usize>> {
    let r = classes.count();
    assert!(r <= 20, "subset scan only meant for tiny groups");
    let mut found = Vec::new();
    for mask in 0..(1u32 << (r - 1)) {
        let mut subset = BTreeSet::new();
        subset.insert(0);
        for c in 1..r {
            if mask & (1 << (c - 1)) != 0 {
                subset.insert(c);
            }
        }
        let order: usize = subset.iter().map(|&c| classes.classes[c].size).sum();
        if group.order() % order as u64 != 0 {
            continue;
        }
        if union_is_closed(group, classes, &subset) {
            found.push(subset);
        }
    }
    found.sort_by_key(|s| {
        (
            s.iter()
                .map(|&c| classes.classes[c].size)
                .sum::<usize>(),
            s.clone(),
        )
    });
    found
}

/// Derived subgroup from scratch: all commutators from raw permutation
/// arithmetic, then all-pairs product closure, never touching the library's
/// subgroup machinery.
pub fn brute_force_commutator_closure(group: &PermutationGroup) -> BTreeSet<usize> {
    let n = group.order() as usize;
    let mut set: BTreeSet<usize> = BTreeSet::new();
    set.insert(group.identity_index());
    for x in 0..n {
        for y in 0..n {
            let px = group.element(x);
            let py = group.element(y);
            let commutator = px
                .inverse()
                .compose(&py.inverse())
                .compose(px)
                .compose(py);
            set.insert(group.index_of(&commutator).expect("closed"));
        }
    }
    // All-pairs closure to a subgroup.
    loop {
        let snapshot: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &snapshot {
            for &y in &snapshot {
                set.insert(group.multiply(x, y));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Conjugacy partition by conjugating with every group element.
pub fn naive_conjugacy_partition(group: &PermutationGroup) -> Vec<BTreeSet<usize>> {
    let n = group.order() as usize;
    let mut assigned = vec![false; n];
    let mut orbits = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for g in 0..n {
            orbit.insert(group.conjugate(g, x));
        }
        for &m in &orbit {
            assigned[m] = true;
        }
        orbits.push(orbit);
    }
    orbits
}
