//! Fields of character values and average-character-degree invariants.
//!
//! Every average is an exact rational; the average of an empty selection is
//! 0 by convention. "C-valued" holds vacuously for every character, so the
//! complex variants average over all characters meeting the other filters.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::chartab::CharacterTable;
use crate::cyclotomic::{rational_int, Cyclotomic, Rational, ValueClass};
use crate::error::{Error, Result};
use crate::normal::{derived_subgroup_classes, is_solvable_normal, kernel_contains, NormalSubgroup};

/// Field of values of a character: Q, R, or C, with Q < R < C in generality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldLabel {
    Q,
    R,
    C,
}

impl FieldLabel {
    pub const ALL: [FieldLabel; 3] = [FieldLabel::Q, FieldLabel::R, FieldLabel::C];

    /// Is a character with values in `self` also `other`-valued?
    pub fn contained_in(self, other: FieldLabel) -> bool {
        self <= other
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldLabel::Q => write!(f, "Q"),
            FieldLabel::R => write!(f, "R"),
            FieldLabel::C => write!(f, "C"),
        }
    }
}

/// Smallest of Q, R, C containing every value of the row.
pub fn field_of_values(table: &CharacterTable, row: usize) -> FieldLabel {
    let mut label = FieldLabel::Q;
    for class in 0..table.classes().count() {
        match table.value(row, class).classify() {
            ValueClass::Rational => {}
            ValueClass::RealNotRational => label = label.max(FieldLabel::R),
            ValueClass::Complex => return FieldLabel::C,
        }
    }
    label
}

/// Which characters to average over.
#[derive(Clone, Debug)]
pub enum Descriptor {
    /// Every irreducible character.
    All,
    /// Non-linear F-valued characters.
    Star(FieldLabel),
    /// Characters whose kernel does not contain N.
    Rel(NormalSubgroup),
    /// Even-degree F-valued characters whose kernel does not contain N.
    EvenRel(FieldLabel, NormalSubgroup),
    /// Even-degree F-valued characters.
    Even(FieldLabel),
}

/// A checked selection of rows of one table.
pub struct CharacterSelection<'t> {
    pub table: &'t CharacterTable,
    pub rows: Vec<usize>,
    pub descriptor: Descriptor,
}

impl CharacterSelection<'_> {
    /// Re-check every selected row against the descriptor's predicate.
    pub fn verify(&self) -> bool {
        match select_characters(self.table, self.descriptor.clone()) {
            Ok(fresh) => fresh.rows == self.rows,
            Err(_) => false,
        }
    }
}

/// Apply a descriptor; normal subgroups must be nontrivial.
pub fn select_characters<'t>(
    table: &'t CharacterTable,
    descriptor: Descriptor,
) -> Result<CharacterSelection<'t>> {
    if let Descriptor::Rel(n) | Descriptor::EvenRel(_, n) = &descriptor {
        if n.is_trivial() {
            return Err(Error::Precondition(
                "relative selections require a non-trivial normal subgroup".into(),
            ));
        }
    }
    let rows = (0..table.row_count())
        .filter(|&row| match &descriptor {
            Descriptor::All => true,
            Descriptor::Star(field) => {
                table.degree(row) > 1 && field_of_values(table, row).contained_in(*field)
            }
            Descriptor::Rel(n) => !kernel_contains(table, n, row),
            Descriptor::EvenRel(field, n) => {
                table.degree(row) % 2 == 0
                    && field_of_values(table, row).contained_in(*field)
                    && !kernel_contains(table, n, row)
            }
            Descriptor::Even(field) => {
                table.degree(row) % 2 == 0 && field_of_values(table, row).contained_in(*field)
            }
        })
        .collect();
    Ok(CharacterSelection {
        table,
        rows,
        descriptor,
    })
}

/// Exact mean of the selected degrees; 0 for the empty selection.
pub fn average_degree(selection: &CharacterSelection<'_>) -> Rational {
    if selection.rows.is_empty() {
        return Rational::zero();
    }
    let sum: u64 = selection.rows.iter().map(|&r| selection.table.degree(r)).sum();
    rational_int(sum as i64) / rational_int(selection.rows.len() as i64)
}

/// One value per field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTriple<T> {
    pub q: T,
    pub r: T,
    pub c: T,
}

impl<T> FieldTriple<T> {
    pub fn get(&self, field: FieldLabel) -> &T {
        match field {
            FieldLabel::Q => &self.q,
            FieldLabel::R => &self.r,
            FieldLabel::C => &self.c,
        }
    }

    fn build(mut make: impl FnMut(FieldLabel) -> T) -> Self {
        FieldTriple {
            q: make(FieldLabel::Q),
            r: make(FieldLabel::R),
            c: make(FieldLabel::C),
        }
    }
}

/// Average, count, and degree histogram for one (field, N) combination.
/// The histogram counts all F-valued rows in Irr(G|N) by degree (not just
/// the even ones), so both readings of a zero average stay recoverable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenStats {
    pub value: Rational,
    pub count: usize,
    pub histogram: BTreeMap<u64, usize>,
}

/// Per-normal-subgroup block of an [`AcdReport`].
#[derive(Clone, Debug)]
pub struct NormalAcd {
    pub subgroup: NormalSubgroup,
    pub solvable: bool,
    pub acd_rel: Rational,
    pub even: FieldTriple<EvenStats>,
}

/// Every average-degree invariant of one group, exactly.
#[derive(Clone, Debug)]
pub struct AcdReport {
    pub group: String,
    pub order: u64,
    pub solvable: bool,
    /// Average degree over all of Irr(G).
    pub acd: Rational,
    /// Average degree of the F-valued characters.
    pub acd_field: FieldTriple<Rational>,
    /// Average degree of the non-linear F-valued characters.
    pub acd_star: FieldTriple<Rational>,
    /// Average degree of the even-degree F-valued characters.
    pub acd_even: FieldTriple<EvenStats>,
    /// One block per nontrivial normal subgroup, ascending order.
    pub per_normal: Vec<NormalAcd>,
}

impl AcdReport {
    pub fn normal_block(&self, order: u64) -> Option<&NormalAcd> {
        self.per_normal.iter().find(|n| n.subgroup.order == order)
    }

    /// The block for N = G.
    pub fn whole_group_block(&self) -> Option<&NormalAcd> {
        self.normal_block(self.order)
    }

    /// The block for N = G', when G is non-abelian.
    pub fn derived_block<'a>(&'a self, table: &CharacterTable) -> Option<&'a NormalAcd> {
        let derived = derived_subgroup_classes(table);
        self.per_normal
            .iter()
            .find(|n| n.subgroup == derived)
    }
}

fn field_average(table: &CharacterTable, labels: &[FieldLabel], field: FieldLabel) -> Rational {
    let rows: Vec<usize> = (0..table.row_count())
        .filter(|&row| labels[row].contained_in(field))
        .collect();
    if rows.is_empty() {
        return Rational::zero();
    }
    let sum: u64 = rows.iter().map(|&r| table.degree(r)).sum();
    rational_int(sum as i64) / rational_int(rows.len() as i64)
}

fn even_stats(
    table: &CharacterTable,
    labels: &[FieldLabel],
    field: FieldLabel,
    normal: Option<&NormalSubgroup>,
) -> EvenStats {
    let in_rel = |row: usize| match normal {
        Some(n) => !kernel_contains(table, n, row),
        None => true,
    };
    let mut histogram = BTreeMap::new();
    for row in 0..table.row_count() {
        if labels[row].contained_in(field) && in_rel(row) {
            *histogram.entry(table.degree(row)).or_insert(0usize) += 1;
        }
    }
    let even_rows: Vec<usize> = (0..table.row_count())
        .filter(|&row| {
            table.degree(row) % 2 == 0 && labels[row].contained_in(field) && in_rel(row)
        })
        .collect();
    let value = if even_rows.is_empty() {
        Rational::zero()
    } else {
        let sum: u64 = even_rows.iter().map(|&r| table.degree(r)).sum();
        rational_int(sum as i64) / rational_int(even_rows.len() as i64)
    };
    EvenStats {
        value,
        count: even_rows.len(),
        histogram,
    }
}

/// Compute the full report: acd(G), acd_F(G), acd*_F(G), acd_{F,even}(G),
/// and per nontrivial normal subgroup acd(G|N) and acd_{F,even}(G|N).
pub fn acd_suite(
    name: &str,
    table: &CharacterTable,
    normals: &[NormalSubgroup],
) -> Result<AcdReport> {
    let labels: Vec<FieldLabel> = (0..table.row_count())
        .map(|row| field_of_values(table, row))
        .collect();

    let acd = average_degree(&select_characters(table, Descriptor::All)?);
    let acd_field = FieldTriple::build(|f| field_average(table, &labels, f));
    let acd_star = FieldTriple::build(|f| {
        let rows: Vec<usize> = (0..table.row_count())
            .filter(|&row| table.degree(row) > 1 && labels[row].contained_in(f))
            .collect();
        if rows.is_empty() {
            Rational::zero()
        } else {
            let sum: u64 = rows.iter().map(|&r| table.degree(r)).sum();
            rational_int(sum as i64) / rational_int(rows.len() as i64)
        }
    });
    let acd_even = FieldTriple::build(|f| even_stats(table, &labels, f, None));

    let mut per_normal = Vec::new();
    for n in normals {
        if n.is_trivial() {
            continue;
        }
        let rel = select_characters(table, Descriptor::Rel(n.clone()))?;
        per_normal.push(NormalAcd {
            subgroup: n.clone(),
            solvable: is_solvable_normal(table, n)?,
            acd_rel: average_degree(&rel),
            even: FieldTriple::build(|f| even_stats(table, &labels, f, Some(n))),
        });
    }

    let whole: std::collections::BTreeSet<usize> = (0..table.order() as usize).collect();
    let (_, solvable) = table.group().derived_series(&whole)?;

    Ok(AcdReport {
        group: name.to_string(),
        order: table.order(),
        solvable,
        acd,
        acd_field,
        acd_star,
        acd_even,
        per_normal,
    })
}

/// Frobenius-Schur indicator nu(X) = |G|^-1 sum_g X(g^2), computed classwise
/// through the power map. Always -1, 0, or +1; nonzero exactly for
/// real-valued characters.
pub fn frobenius_schur_indicator(table: &CharacterTable, row: usize) -> Result<i8> {
    let mut sum = Cyclotomic::zero();
    for (j, class) in table.classes().classes.iter().enumerate() {
        let square_class = table.power_map().power_class(j, 2);
        let term = table
            .value(row, square_class)
            .scale(&rational_int(class.size as i64));
        sum = &sum + &term;
    }
    let total = sum
        .to_rational()
        .ok_or_else(|| Error::Internal("indicator sum is not rational".into()))?;
    let nu = total / rational_int(table.order() as i64);
    if nu == rational_int(1) {
        Ok(1)
    } else if nu == rational_int(-1) {
        Ok(-1)
    } else if nu.is_zero() {
        Ok(0)
    } else {
        Err(Error::Internal(format!(
            "Frobenius-Schur indicator {nu} outside {{-1, 0, 1}}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::cyclotomic::rational;
    use crate::group::{construct_named_group, Caps};
    use crate::groupspec::parse_group_spec;
    use crate::normal::enumerate_normal_subgroups;

    fn table(text: &str) -> CharacterTable {
        let group =
            construct_named_group(&parse_group_spec(text).unwrap(), Caps::default()).unwrap();
        character_table(group).unwrap()
    }

    fn report(text: &str) -> AcdReport {
        let t = table(text);
        let normals = enumerate_normal_subgroups(&t).unwrap();
        acd_suite(text, &t, &normals).unwrap()
    }

    #[test]
    fn alt5_field_labels() {
        let t = table("alt:5");
        let labels: Vec<FieldLabel> = (0..5).map(|r| field_of_values(&t, r)).collect();
        assert_eq!(
            labels,
            vec![
                FieldLabel::Q,
                FieldLabel::R,
                FieldLabel::R,
                FieldLabel::Q,
                FieldLabel::Q
            ]
        );
    }

    #[test]
    fn sl2_5_small_degree_rows_are_real_not_rational() {
        let t = table("sl2:5");
        for row in 0..t.row_count() {
            let label = field_of_values(&t, row);
            match t.degree(row) {
                2 | 3 => assert_eq!(label, FieldLabel::R),
                _ => assert_eq!(label, FieldLabel::Q),
            }
        }
    }

    #[test]
    fn star_selection_on_sl2_5() {
        let t = table("sl2:5");
        let sel = select_characters(&t, Descriptor::Star(FieldLabel::C)).unwrap();
        assert_eq!(sel.rows.len(), 8);
        let mut degrees: Vec<u64> = sel.rows.iter().map(|&r| t.degree(r)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(average_degree(&sel), rational(29, 8));
    }

    #[test]
    fn even_rel_selections() {
        let t = table("sl2:5");
        let normals = enumerate_normal_subgroups(&t).unwrap();
        let whole = normals.last().unwrap().clone();
        let sel =
            select_characters(&t, Descriptor::EvenRel(FieldLabel::C, whole)).unwrap();
        let mut degrees: Vec<u64> = sel.rows.iter().map(|&r| t.degree(r)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 4, 4, 6]);
        assert_eq!(average_degree(&sel), rational(18, 5));

        let t = table("alt:5");
        let normals = enumerate_normal_subgroups(&t).unwrap();
        let whole = normals.last().unwrap().clone();
        let sel =
            select_characters(&t, Descriptor::EvenRel(FieldLabel::Q, whole)).unwrap();
        let degrees: Vec<u64> = sel.rows.iter().map(|&r| t.degree(r)).collect();
        assert_eq!(degrees, vec![4]);
        assert_eq!(average_degree(&sel), rational_int(4));
    }

    #[test]
    fn selections_reverify() {
        let t = table("sl2:5");
        let normals = enumerate_normal_subgroups(&t).unwrap();
        for descriptor in [
            Descriptor::All,
            Descriptor::Star(FieldLabel::R),
            Descriptor::Rel(normals[1].clone()),
            Descriptor::EvenRel(FieldLabel::Q, normals[2].clone()),
            Descriptor::Even(FieldLabel::C),
        ] {
            assert!(select_characters(&t, descriptor).unwrap().verify());
        }
    }

    #[test]
    fn trivial_normal_subgroup_rejected() {
        let t = table("sym:4");
        let normals = enumerate_normal_subgroups(&t).unwrap();
        let trivial = normals[0].clone();
        assert!(select_characters(&t, Descriptor::Rel(trivial)).is_err());
    }

    #[test]
    fn empty_average_is_zero() {
        let r = report("cyclic:2");
        assert!(r.acd_star.q.is_zero());
        assert!(r.acd_star.r.is_zero());
        assert!(r.acd_star.c.is_zero());
    }

    #[test]
    fn alt5_report_values() {
        let r = report("alt:5");
        assert_eq!(r.acd, rational(16, 5));
        assert_eq!(r.acd_field.q, rational(10, 3));
        assert_eq!(r.acd_star.q, rational(9, 2));
        let whole = r.whole_group_block().unwrap();
        assert_eq!(whole.even.q.value, rational_int(4));
        assert!(!r.solvable);
    }

    #[test]
    fn sl2_5_report_values() {
        let r = report("sl2:5");
        assert_eq!(r.acd, rational(10, 3));
        assert_eq!(r.acd_star.c, rational(29, 8));
        assert_eq!(r.acd_star.r, rational(29, 8));
        let center = r.normal_block(2).unwrap();
        assert_eq!(center.even.c.value, rational(7, 2));
        assert_eq!(center.even.r.value, rational(7, 2));
        let whole = r.whole_group_block().unwrap();
        assert_eq!(whole.even.c.value, rational(18, 5));
        assert!(!r.solvable);
        assert!(center.solvable);
    }

    #[test]
    fn alt6_rational_averages() {
        let r = report("alt:6");
        assert_eq!(r.acd_field.q, rational_int(6));
        assert_eq!(r.acd_star.q, rational(29, 4));
    }

    #[test]
    fn star_c_equals_rel_derived() {
        for spec in ["sym:4", "sl2:5", "alt:5", "quaternion:8", "dihedral:12"] {
            let t = table(spec);
            let derived = derived_subgroup_classes(&t);
            let star = select_characters(&t, Descriptor::Star(FieldLabel::C)).unwrap();
            let rel = select_characters(&t, Descriptor::Rel(derived)).unwrap();
            assert_eq!(star.rows, rel.rows, "{spec}");
        }
    }

    #[test]
    fn star_selections_nest_by_field() {
        for spec in ["sl2:5", "alt:5", "sym:5"] {
            let t = table(spec);
            let q = select_characters(&t, Descriptor::Star(FieldLabel::Q)).unwrap().rows;
            let r = select_characters(&t, Descriptor::Star(FieldLabel::R)).unwrap().rows;
            let c = select_characters(&t, Descriptor::Star(FieldLabel::C)).unwrap().rows;
            assert!(q.iter().all(|row| r.contains(row)), "{spec}: Q in R");
            assert!(r.iter().all(|row| c.contains(row)), "{spec}: R in C");
        }
    }

    #[test]
    fn frobenius_schur_agrees_with_realness() {
        for spec in ["sl2:5", "alt:5", "quaternion:8", "cyclic:5", "sym:4"] {
            let t = table(spec);
            for row in 0..t.row_count() {
                let nu = frobenius_schur_indicator(&t, row).unwrap();
                let real = field_of_values(&t, row) != FieldLabel::C;
                assert_eq!(nu != 0, real, "{spec} row {row}");
            }
        }
    }

    #[test]
    fn quaternion_has_indicator_minus_one() {
        let t = table("quaternion:8");
        let deg2 = (0..t.row_count()).find(|&r| t.degree(r) == 2).unwrap();
        assert_eq!(frobenius_schur_indicator(&t, deg2).unwrap(), -1);
    }

    #[test]
    fn histogram_counting_identity() {
        let t = table("sl2:5");
        let normals = enumerate_normal_subgroups(&t).unwrap();
        let r = acd_suite("sl2:5", &t, &normals).unwrap();
        for block in &r.per_normal {
            for field in FieldLabel::ALL {
                let hist = &block.even.get(field).histogram;
                let count: usize = hist.values().sum();
                if count == 0 {
                    continue;
                }
                let weighted: u64 = hist.iter().map(|(d, c)| d * *c as u64).sum();
                let mean = rational_int(weighted as i64) / rational_int(count as i64);
                // Mean over the histogram equals acd_F(G|N) recomputed directly.
                let labels: Vec<FieldLabel> =
                    (0..t.row_count()).map(|row| field_of_values(&t, row)).collect();
                let rows: Vec<usize> = (0..t.row_count())
                    .filter(|&row| {
                        labels[row].contained_in(field)
                            && !kernel_contains(&t, &block.subgroup, row)
                    })
                    .collect();
                let sum: u64 = rows.iter().map(|&row| t.degree(row)).sum();
                let direct = rational_int(sum as i64) / rational_int(rows.len() as i64);
                assert_eq!(mean, direct);
            }
        }
    }

    #[test]
    fn galois_preserves_field_and_degree() {
        let t = table("alt:5");
        let e = t.conductor();
        for k in 1..e {
            if num_integer::gcd(k, e) != 1 {
                continue;
            }
            for row in 0..t.row_count() {
                let image: Vec<Cyclotomic> = (0..t.classes().count())
                    .map(|j| t.value(row, j).galois(k as i64).unwrap())
                    .collect();
                let target = (0..t.row_count())
                    .find(|&s| (0..t.classes().count()).all(|j| t.value(s, j) == &image[j]))
                    .expect("Galois image is a table row");
                assert_eq!(t.degree(target), t.degree(row));
                assert_eq!(field_of_values(&t, target), field_of_values(&t, row));
            }
        }
    }
}
