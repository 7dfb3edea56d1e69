//! Conjugacy classes, power maps, and the group exponent.
//!
//! Classes are listed in canonical order: ascending element order, then
//! ascending size, then least representative. Because element indices sort
//! by image tuple, "least representative index" and "lexicographically least
//! representative image tuple" coincide. Class 0 is always the identity class.

use crate::error::{Error, Result};
use crate::group::PermutationGroup;

#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// Least element index in the class.
    pub representative: usize,
    pub size: usize,
    pub element_order: u64,
    /// Sorted element indices.
    pub members: Vec<usize>,
}

/// The partition of a group into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub classes: Vec<ClassInfo>,
    /// Element index -> class index.
    pub class_of: Vec<usize>,
}

impl ClassData {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size as u64).collect()
    }
}

/// Partition all elements into conjugation orbits.
pub fn conjugacy_classes(group: &PermutationGroup) -> Result<ClassData> {
    let n = group.order() as usize;
    let gens = group.generator_indices();
    let mut assigned = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        // Conjugation by generators generates conjugation by the whole group.
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut at = 0;
        while at < orbit.len() {
            let x = orbit[at];
            at += 1;
            for &g in &gens {
                let y = group.conjugate(g, x);
                if !assigned[y] {
                    assigned[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
        if orbits.len() > group.caps().max_classes {
            return Err(Error::ClassCapExceeded {
                cap: group.caps().max_classes,
            });
        }
    }

    let mut classes: Vec<ClassInfo> = orbits
        .into_iter()
        .map(|members| {
            let representative = members[0];
            ClassInfo {
                representative,
                size: members.len(),
                element_order: group.element(representative).order(),
                members,
            }
        })
        .collect();
    classes.sort_by_key(|c| (c.element_order, c.size, c.representative));

    let mut class_of = vec![0usize; n];
    for (ci, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = ci;
        }
    }
    Ok(ClassData { classes, class_of })
}

/// `table[j][k]` is the class of `g_j^k` for `0 <= k < order(g_j)`.
#[derive(Clone, Debug)]
pub struct PowerMap {
    pub table: Vec<Vec<usize>>,
}

impl PowerMap {
    /// Class of the k-th power of the class-j representative; k is reduced
    /// modulo the element order.
    pub fn power_class(&self, j: usize, k: u64) -> usize {
        let row = &self.table[j];
        row[(k % row.len() as u64) as usize]
    }

    /// Class of inverses: g^(m-1) = g^-1.
    pub fn inverse_class(&self, j: usize) -> usize {
        let row = &self.table[j];
        row[row.len() - 1]
    }
}

pub fn power_map(group: &PermutationGroup, classes: &ClassData) -> PowerMap {
    let table = classes
        .classes
        .iter()
        .map(|class| {
            let m = class.element_order as usize;
            let mut row = Vec::with_capacity(m);
            let mut power = group.identity_index();
            for _ in 0..m {
                row.push(classes.class_of[power]);
                power = group.multiply(power, class.representative);
            }
            row
        })
        .collect();
    PowerMap { table }
}

/// lcm of element orders: the conductor of all character values.
pub fn group_exponent(classes: &ClassData) -> u64 {
    classes
        .classes
        .iter()
        .fold(1u64, |acc, c| num_integer::lcm(acc, c.element_order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_named_group, Caps};
    use crate::groupspec::parse_group_spec;

    fn build(text: &str) -> PermutationGroup {
        construct_named_group(&parse_group_spec(text).unwrap(), Caps::default()).unwrap()
    }

    #[test]
    fn sym3_has_sizes_1_3_2() {
        let g = build("sym:3");
        let cd = conjugacy_classes(&g).unwrap();
        assert_eq!(cd.sizes(), vec![1, 3, 2]);
        assert_eq!(cd.classes[0].element_order, 1);
    }

    #[test]
    fn alt5_has_sizes_1_15_20_12_12() {
        let g = build("alt:5");
        let cd = conjugacy_classes(&g).unwrap();
        assert_eq!(cd.sizes(), vec![1, 15, 20, 12, 12]);
        let orders: Vec<u64> = cd.classes.iter().map(|c| c.element_order).collect();
        assert_eq!(orders, vec![1, 2, 3, 5, 5]);
    }

    #[test]
    fn cyclic_groups_have_singleton_classes() {
        for n in [1u32, 4, 7] {
            let g = build(&format!("cyclic:{n}"));
            let cd = conjugacy_classes(&g).unwrap();
            assert_eq!(cd.count() as u32, n);
            assert!(cd.classes.iter().all(|c| c.size == 1));
        }
    }

    #[test]
    fn class_equation_holds() {
        for spec in ["sym:4", "alt:5", "quaternion:8", "dihedral:12"] {
            let g = build(spec);
            let cd = conjugacy_classes(&g).unwrap();
            let total: usize = cd.classes.iter().map(|c| c.size).sum();
            assert_eq!(total as u64, g.order());
            for c in &cd.classes {
                assert_eq!(g.order() % c.size as u64, 0, "{spec}: class size divides order");
            }
        }
    }

    #[test]
    fn classes_are_conjugation_closed() {
        let g = build("sym:4");
        let cd = conjugacy_classes(&g).unwrap();
        for class in &cd.classes {
            for &m in &class.members {
                for &gen in &g.generator_indices() {
                    let conj = g.conjugate(gen, m);
                    assert_eq!(cd.class_of[conj], cd.class_of[m]);
                }
            }
        }
    }

    #[test]
    fn sl2_5_class_count_differs_from_c2_x_alt5() {
        let sl = build("sl2:5");
        let prod = build("product:cyclic:2,alt:5");
        assert_eq!(conjugacy_classes(&sl).unwrap().count(), 9);
        assert_eq!(conjugacy_classes(&prod).unwrap().count(), 10);
    }

    #[test]
    fn power_map_identity_and_self() {
        let g = build("alt:5");
        let cd = conjugacy_classes(&g).unwrap();
        let pm = power_map(&g, &cd);
        for j in 0..cd.count() {
            assert_eq!(pm.table[j][0], 0);
            if cd.classes[j].element_order > 1 {
                assert_eq!(pm.table[j][1], j);
            }
        }
    }

    #[test]
    fn alt5_squaring_swaps_the_order5_classes() {
        let g = build("alt:5");
        let cd = conjugacy_classes(&g).unwrap();
        let pm = power_map(&g, &cd);
        assert_eq!(pm.power_class(3, 2), 4);
        assert_eq!(pm.power_class(4, 2), 3);
    }

    #[test]
    fn cyclic4_generator_squared_has_order_two() {
        let g = build("cyclic:4");
        let cd = conjugacy_classes(&g).unwrap();
        let pm = power_map(&g, &cd);
        // Canonical order sorts by element order: [1, 2, 4, 4].
        let gen_class = cd
            .classes
            .iter()
            .position(|c| c.element_order == 4)
            .unwrap();
        let sq = pm.power_class(gen_class, 2);
        assert_eq!(cd.classes[sq].element_order, 2);
    }

    #[test]
    fn power_order_identity() {
        let g = build("sl2:5");
        let cd = conjugacy_classes(&g).unwrap();
        let pm = power_map(&g, &cd);
        for (j, class) in cd.classes.iter().enumerate() {
            let m = class.element_order;
            for k in 0..m {
                let target = pm.power_class(j, k);
                let expected = m / num_integer::gcd(k, m);
                assert_eq!(cd.classes[target].element_order, expected);
            }
        }
    }

    #[test]
    fn exponents() {
        let a5 = build("alt:5");
        let cd = conjugacy_classes(&a5).unwrap();
        assert_eq!(group_exponent(&cd), 30);

        let sl25 = build("sl2:5");
        let cd = conjugacy_classes(&sl25).unwrap();
        assert_eq!(group_exponent(&cd), 60);

        let c12 = build("cyclic:12");
        let cd = conjugacy_classes(&c12).unwrap();
        assert_eq!(group_exponent(&cd), 12);
    }
}
