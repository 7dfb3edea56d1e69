//! The per-group invariant battery behind `selftest`: structural checks on
//! classes and tables that go beyond the orthogonality report. Everything is
//! deterministic; the "random" samples come from a fixed split-mix generator
//! seeded by the group order.

use std::collections::BTreeSet;

use crate::acd::{field_of_values, frobenius_schur_indicator, FieldLabel};
use crate::chartab::{
    central_character_value, character_table, check_orthogonality, class_constants,
};
use crate::cyclotomic::{rational_int, Cyclotomic};
use crate::error::Result;
use crate::group::{construct_named_group, Caps};
use crate::groupspec::GroupSpec;
use crate::normal::{derived_subgroup_classes, enumerate_normal_subgroups};

#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckLine {
    fn ok(name: &str) -> Self {
        CheckLine {
            name: name.to_string(),
            passed: true,
            detail: None,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckLine {
            name: name.to_string(),
            passed: false,
            detail: Some(detail),
        }
    }

    fn from(name: &str, passed: bool, detail: String) -> Self {
        if passed {
            CheckLine::ok(name)
        } else {
            CheckLine::fail(name, detail)
        }
    }
}

struct SplitMix {
    state: u64,
}

impl SplitMix {
    fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Run the whole battery on one group; `expected_solvable` comes from the
/// corpus when known.
pub fn run_group_invariants(
    name: &str,
    spec: &GroupSpec,
    caps: Caps,
    expected_solvable: Option<bool>,
) -> Result<Vec<CheckLine>> {
    let group = construct_named_group(spec, caps)?;
    let table = character_table(group)?;
    let mut lines = Vec::new();

    // Class equation and divisibility.
    let classes = table.classes();
    let size_total: u64 = classes.classes.iter().map(|c| c.size as u64).sum();
    lines.push(CheckLine::from(
        "class equation",
        size_total == table.order()
            && classes
                .classes
                .iter()
                .all(|c| table.order() % c.size as u64 == 0),
        format!("sizes sum to {size_total}, order {}", table.order()),
    ));

    // Conjugation invariance of every class under every generator.
    let conj_ok = classes.classes.iter().enumerate().all(|(ci, class)| {
        class.members.iter().all(|&m| {
            table
                .group()
                .generator_indices()
                .iter()
                .all(|&g| classes.class_of[table.group().conjugate(g, m)] == ci)
        })
    });
    lines.push(CheckLine::from(
        "conjugation invariance",
        conj_ok,
        "a class member left its class under conjugation".into(),
    ));

    // Power map order identity.
    let pm_ok = classes.classes.iter().enumerate().all(|(j, class)| {
        let m = class.element_order;
        (0..m).all(|k| {
            let target = table.power_map().power_class(j, k);
            classes.classes[target].element_order == m / num_integer::gcd(k, m)
        })
    });
    lines.push(CheckLine::from(
        "power map orders",
        pm_ok,
        "element_order(g^k) != order/gcd(k, order)".into(),
    ));

    // Orthogonality, degree sums, divisibility.
    let orth = check_orthogonality(&table);
    lines.push(CheckLine::from(
        "orthogonality and degrees",
        orth.all_passed(),
        orth.summary(),
    ));

    // Galois closure: every automorphism of Q(zeta_e) permutes the rows
    // preserving degree and field label.
    let e = table.conductor();
    let mut galois_ok = true;
    'galois: for k in 1..e.max(2) {
        if num_integer::gcd(k, e) != 1 {
            continue;
        }
        for row in 0..table.row_count() {
            let image: Vec<Cyclotomic> = (0..classes.count())
                .map(|j| table.value(row, j).galois(k as i64).expect("unit"))
                .collect();
            let target = (0..table.row_count()).find(|&s| {
                (0..classes.count()).all(|j| table.value(s, j) == &image[j])
            });
            match target {
                Some(s)
                    if table.degree(s) == table.degree(row)
                        && field_of_values(&table, s) == field_of_values(&table, row) => {}
                _ => {
                    galois_ok = false;
                    break 'galois;
                }
            }
        }
    }
    lines.push(CheckLine::from(
        "Galois closure of rows",
        galois_ok,
        "some Galois image is not a row of equal degree and field".into(),
    ));

    // Central character structure constants on 10 deterministic samples.
    let constants = class_constants(table.group(), classes);
    let r = classes.count();
    let mut rng = SplitMix::new(table.order());
    let mut central_ok = true;
    for _ in 0..10 {
        let s = rng.below(table.row_count());
        let i = rng.below(r);
        let j = rng.below(r);
        let left = &central_character_value(&table, s, i) * &central_character_value(&table, s, j);
        let mut right = Cyclotomic::zero();
        for k in 0..r {
            let a = constants.get(i, j, k);
            if a != 0 {
                right = &right + &central_character_value(&table, s, k).scale(&rational_int(a as i64));
            }
        }
        if left != right {
            central_ok = false;
            break;
        }
    }
    lines.push(CheckLine::from(
        "central character structure constants",
        central_ok,
        "w_s(i) w_s(j) != sum_k a_ijk w_s(k)".into(),
    ));

    // Frobenius-Schur indicators agree with the realness classifier.
    let mut fs_ok = true;
    for row in 0..table.row_count() {
        match frobenius_schur_indicator(&table, row) {
            Ok(nu) => {
                let real = field_of_values(&table, row) != FieldLabel::C;
                if (nu != 0) != real {
                    fs_ok = false;
                    break;
                }
            }
            Err(_) => {
                fs_ok = false;
                break;
            }
        }
    }
    lines.push(CheckLine::from(
        "Frobenius-Schur vs realness",
        fs_ok,
        "indicator disagrees with the field classifier".into(),
    ));

    // Non-linear rows = rows whose kernel misses G'.
    let derived = derived_subgroup_classes(&table);
    let star_rel_ok = if derived.is_trivial() {
        (0..table.row_count()).all(|row| table.degree(row) == 1)
    } else {
        (0..table.row_count()).all(|row| {
            (table.degree(row) > 1)
                == !crate::normal::kernel_contains(&table, &derived, row)
        })
    };
    lines.push(CheckLine::from(
        "nonlinear rows match Irr(G|G')",
        star_rel_ok,
        "ker >= G' does not coincide with linearity".into(),
    ));

    // Normal subgroup lattice sanity.
    let normals = enumerate_normal_subgroups(&table)?;
    let mut lattice_ok = normals.first().map(|n| n.order) == Some(1)
        && normals.last().map(|n| n.order) == Some(table.order());
    let mut kernel_meet: BTreeSet<usize> = (0..r).collect();
    for row in 0..table.row_count() {
        let kernel = crate::normal::kernel_class_set(&table, row);
        kernel_meet = kernel_meet
            .intersection(&kernel.class_indices)
            .copied()
            .collect();
    }
    lattice_ok &= kernel_meet.len() == 1;
    lines.push(CheckLine::from(
        "normal lattice and faithful kernel meet",
        lattice_ok,
        "lattice endpoints or kernel intersection wrong".into(),
    ));

    // Solvability agrees with the corpus flag.
    if let Some(expected) = expected_solvable {
        let whole: BTreeSet<usize> = (0..table.order() as usize).collect();
        let (_, solvable) = table.group().derived_series(&whole)?;
        lines.push(CheckLine::from(
            "solvability flag",
            solvable == expected,
            format!("derived series says {solvable}, corpus says {expected}"),
        ));
    }

    // Determinism: an independent rebuild renders identically.
    let rebuilt = character_table(construct_named_group(spec, caps)?)?;
    lines.push(CheckLine::from(
        "deterministic rebuild",
        crate::report::render_table_text(&rebuilt) == crate::report::render_table_text(&table),
        format!("{name}: two builds rendered differently"),
    ));

    Ok(lines)
}
