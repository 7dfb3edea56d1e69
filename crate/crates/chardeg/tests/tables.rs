//! Frozen table fixtures for the whole corpus: degree multisets and
//! field-of-values counts, pinned against the classical tables.
//!
//! Spot checks on the counts: symmetric groups are totally rational; SL2(q)
//! is totally real exactly when q = 1 (mod 4); PSL2(7) and Alt7 each carry
//! one complex-conjugate pair through (-1 +- sqrt(-7))/2; PSL2(11) splits as
//! four rational rows, a real pair (degree 12, golden-ratio values), and a
//! complex pair (degree 5, sqrt(-11) values); tensoring with a nontrivial
//! cube root of unity makes rows complex in alt:5 x cyclic:3.

use chardeg::acd::{field_of_values, FieldLabel};
use chardeg::chartab::character_table;
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;

struct Fixture {
    spec: &'static str,
    degrees: &'static [u64],
    q_rows: usize,
    r_rows: usize,
    c_rows: usize,
}

const FIXTURES: &[Fixture] = &[
    Fixture { spec: "cyclic:2", degrees: &[1, 1], q_rows: 2, r_rows: 0, c_rows: 0 },
    Fixture { spec: "cyclic:3", degrees: &[1, 1, 1], q_rows: 1, r_rows: 0, c_rows: 2 },
    Fixture { spec: "cyclic:4", degrees: &[1, 1, 1, 1], q_rows: 2, r_rows: 0, c_rows: 2 },
    Fixture { spec: "cyclic:5", degrees: &[1, 1, 1, 1, 1], q_rows: 1, r_rows: 0, c_rows: 4 },
    Fixture { spec: "cyclic:6", degrees: &[1, 1, 1, 1, 1, 1], q_rows: 2, r_rows: 0, c_rows: 4 },
    Fixture { spec: "dihedral:8", degrees: &[1, 1, 1, 1, 2], q_rows: 5, r_rows: 0, c_rows: 0 },
    Fixture { spec: "dihedral:10", degrees: &[1, 1, 2, 2], q_rows: 2, r_rows: 2, c_rows: 0 },
    Fixture { spec: "dihedral:12", degrees: &[1, 1, 1, 1, 2, 2], q_rows: 6, r_rows: 0, c_rows: 0 },
    Fixture { spec: "quaternion:8", degrees: &[1, 1, 1, 1, 2], q_rows: 5, r_rows: 0, c_rows: 0 },
    Fixture { spec: "sym:3", degrees: &[1, 1, 2], q_rows: 3, r_rows: 0, c_rows: 0 },
    Fixture { spec: "sym:4", degrees: &[1, 1, 2, 3, 3], q_rows: 5, r_rows: 0, c_rows: 0 },
    Fixture { spec: "sym:5", degrees: &[1, 1, 4, 4, 5, 5, 6], q_rows: 7, r_rows: 0, c_rows: 0 },
    Fixture {
        spec: "sym:6",
        degrees: &[1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
        q_rows: 11,
        r_rows: 0,
        c_rows: 0,
    },
    Fixture { spec: "alt:4", degrees: &[1, 1, 1, 3], q_rows: 2, r_rows: 0, c_rows: 2 },
    Fixture { spec: "alt:5", degrees: &[1, 3, 3, 4, 5], q_rows: 3, r_rows: 2, c_rows: 0 },
    Fixture { spec: "alt:6", degrees: &[1, 5, 5, 8, 8, 9, 10], q_rows: 5, r_rows: 2, c_rows: 0 },
    Fixture {
        spec: "alt:7",
        degrees: &[1, 6, 10, 10, 14, 14, 15, 21, 35],
        q_rows: 7,
        r_rows: 0,
        c_rows: 2,
    },
    Fixture { spec: "sl2:3", degrees: &[1, 1, 1, 2, 2, 2, 3], q_rows: 3, r_rows: 0, c_rows: 4 },
    Fixture { spec: "sl2:5", degrees: &[1, 2, 2, 3, 3, 4, 4, 5, 6], q_rows: 5, r_rows: 4, c_rows: 0 },
    Fixture {
        spec: "sl2:7",
        degrees: &[1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8],
        q_rows: 5,
        r_rows: 2,
        c_rows: 4,
    },
    Fixture {
        spec: "sl2:9",
        degrees: &[1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10],
        q_rows: 7,
        r_rows: 6,
        c_rows: 0,
    },
    Fixture { spec: "psl2:7", degrees: &[1, 3, 3, 6, 7, 8], q_rows: 4, r_rows: 0, c_rows: 2 },
    Fixture {
        spec: "psl2:11",
        degrees: &[1, 5, 5, 10, 10, 11, 12, 12],
        q_rows: 4,
        r_rows: 2,
        c_rows: 2,
    },
    Fixture {
        spec: "product:cyclic:2,alt:5",
        degrees: &[1, 1, 3, 3, 3, 3, 4, 4, 5, 5],
        q_rows: 6,
        r_rows: 4,
        c_rows: 0,
    },
    Fixture {
        spec: "product:alt:5,cyclic:3",
        degrees: &[1, 1, 1, 3, 3, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5],
        q_rows: 3,
        r_rows: 2,
        c_rows: 10,
    },
];

#[test]
fn corpus_degrees_and_field_counts_match_classical_tables() {
    for fixture in FIXTURES {
        let group = construct_named_group(
            &parse_group_spec(fixture.spec).unwrap(),
            Caps::default(),
        )
        .unwrap();
        let table = character_table(group).unwrap();
        assert_eq!(table.degrees(), fixture.degrees, "{}: degrees", fixture.spec);
        let mut counts = [0usize; 3];
        for row in 0..table.row_count() {
            match field_of_values(&table, row) {
                FieldLabel::Q => counts[0] += 1,
                FieldLabel::R => counts[1] += 1,
                FieldLabel::C => counts[2] += 1,
            }
        }
        assert_eq!(
            counts,
            [fixture.q_rows, fixture.r_rows, fixture.c_rows],
            "{}: field counts",
            fixture.spec
        );
    }
}

#[test]
fn complex_rows_come_in_conjugate_pairs() {
    for spec in ["psl2:7", "alt:7", "sl2:3", "psl2:11"] {
        let group = construct_named_group(&parse_group_spec(spec).unwrap(), Caps::default())
            .unwrap();
        let table = character_table(group).unwrap();
        let complex_rows: Vec<usize> = (0..table.row_count())
            .filter(|&row| field_of_values(&table, row) == FieldLabel::C)
            .collect();
        for &row in &complex_rows {
            let conjugate: Vec<_> = (0..table.classes().count())
                .map(|j| table.value(row, j).conjugate())
                .collect();
            let partner = complex_rows.iter().copied().find(|&s| {
                (0..table.classes().count()).all(|j| table.value(s, j) == &conjugate[j])
            });
            let partner = partner.expect("conjugate row present");
            assert_ne!(partner, row, "{spec}: complex row must differ from its conjugate");
            assert_eq!(table.degree(partner), table.degree(row));
        }
    }
}

#[test]
fn sl2_is_totally_real_exactly_when_q_is_1_mod_4() {
    for (spec, totally_real) in [("sl2:5", true), ("sl2:9", true), ("sl2:7", false), ("sl2:3", false)] {
        let group = construct_named_group(&parse_group_spec(spec).unwrap(), Caps::default())
            .unwrap();
        let table = character_table(group).unwrap();
        let has_complex = (0..table.row_count())
            .any(|row| field_of_values(&table, row) == FieldLabel::C);
        assert_eq!(!has_complex, totally_real, "{spec}");
    }
}
