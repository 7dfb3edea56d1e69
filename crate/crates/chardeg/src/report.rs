//! Rendering: character tables, acd reports, and theorem check results as
//! text, CSV, or JSON. All output is deterministic; rationals render as
//! exact "p/q" strings, never decimals.

use std::fmt::Write as _;

use crate::acd::{AcdReport, FieldLabel};
use crate::chartab::CharacterTable;
use crate::cyclotomic::Rational;
use crate::normal::{center_classes, derived_subgroup_classes, NormalSubgroup};
use crate::theorems::TheoremCheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// Character table rendering
// ---------------------------------------------------------------------------

/// Text table: class header (representative cycle notation, sizes, element
/// orders), then one line per character with degree, field label, values.
pub fn render_table_text(table: &CharacterTable) -> String {
    let classes = table.classes();
    let r = classes.count();
    let header: Vec<String> = (0..r)
        .map(|j| {
            table
                .group()
                .element(classes.classes[j].representative)
                .cycle_string()
        })
        .collect();
    let sizes: Vec<String> = classes.classes.iter().map(|c| c.size.to_string()).collect();
    let orders: Vec<String> = classes
        .classes
        .iter()
        .map(|c| c.element_order.to_string())
        .collect();

    let value_grid: Vec<Vec<String>> = (0..table.row_count())
        .map(|s| (0..r).map(|j| table.value(s, j).to_string()).collect())
        .collect();
    let fields: Vec<String> = (0..table.row_count())
        .map(|s| crate::acd::field_of_values(table, s).to_string())
        .collect();

    let mut widths: Vec<usize> = (0..r)
        .map(|j| {
            header[j]
                .len()
                .max(sizes[j].len())
                .max(orders[j].len())
                .max(value_grid.iter().map(|row| row[j].len()).max().unwrap_or(0))
        })
        .collect();
    for w in widths.iter_mut() {
        *w += 2;
    }

    let mut out = String::new();
    let _ = writeln!(out, "order {} | conductor {}", table.order(), table.conductor());
    let lead = "deg fld";
    let pad = |cell: &str, w: usize| format!("{cell:>w$}");
    let mut line = format!("{lead:>8}");
    for j in 0..r {
        line.push_str(&pad(&header[j], widths[j]));
    }
    out.push_str(&line);
    out.push('\n');
    let mut line = format!("{:>8}", "size");
    for j in 0..r {
        line.push_str(&pad(&sizes[j], widths[j]));
    }
    out.push_str(&line);
    out.push('\n');
    let mut line = format!("{:>8}", "ord");
    for j in 0..r {
        line.push_str(&pad(&orders[j], widths[j]));
    }
    out.push_str(&line);
    out.push('\n');
    for s in 0..table.row_count() {
        let mut line = format!("{:>5} {:>2}", table.degree(s), fields[s]);
        for j in 0..r {
            line.push_str(&pad(&value_grid[s][j], widths[j]));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// JSON table: {classes: [...], characters: [{degree, values, field}]}.
pub fn render_table_json(table: &CharacterTable) -> serde_json::Value {
    let classes: Vec<serde_json::Value> = table
        .classes()
        .classes
        .iter()
        .map(|c| {
            serde_json::json!({
                "representative": table.group().element(c.representative).cycle_string(),
                "size": c.size,
                "element_order": c.element_order,
            })
        })
        .collect();
    let characters: Vec<serde_json::Value> = (0..table.row_count())
        .map(|s| {
            serde_json::json!({
                "degree": table.degree(s),
                "values": (0..table.classes().count())
                    .map(|j| table.value(s, j).to_string())
                    .collect::<Vec<String>>(),
                "field": crate::acd::field_of_values(table, s).to_string(),
            })
        })
        .collect();
    serde_json::json!({ "classes": classes, "characters": characters })
}

// ---------------------------------------------------------------------------
// Acd report rendering
// ---------------------------------------------------------------------------

/// Display label for a normal subgroup: G for the whole group, Z for the
/// center, G' for the derived subgroup, N{i} otherwise.
pub fn normal_label(table: &CharacterTable, n: &NormalSubgroup, position: usize) -> String {
    if n.is_whole_group(table) {
        return "G".to_string();
    }
    if *n == center_classes(table) {
        return "Z".to_string();
    }
    if *n == derived_subgroup_classes(table) {
        return "G'".to_string();
    }
    format!("N{position}")
}

/// Text acd report. With a field filter the per-normal lines read
/// `N=Z (order 2): acd_even = 7/2`; without one, all three fields appear.
pub fn render_acd_text(
    table: &CharacterTable,
    report: &AcdReport,
    field: Option<FieldLabel>,
    show_normals: bool,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", report.group);
    let _ = writeln!(out, "order: {}", report.order);
    let _ = writeln!(out, "solvable: {}", report.solvable);
    let _ = writeln!(out, "acd = {}", rational_string(&report.acd));
    match field {
        Some(f) => {
            let _ = writeln!(out, "acd_{f} = {}", rational_string(report.acd_field.get(f)));
            let _ = writeln!(out, "acd*_{f} = {}", rational_string(report.acd_star.get(f)));
            let _ = writeln!(
                out,
                "acd_even_{f} = {}",
                rational_string(&report.acd_even.get(f).value)
            );
        }
        None => {
            for f in FieldLabel::ALL {
                let _ = writeln!(out, "acd_{f} = {}", rational_string(report.acd_field.get(f)));
            }
            for f in FieldLabel::ALL {
                let _ = writeln!(out, "acd*_{f} = {}", rational_string(report.acd_star.get(f)));
            }
            for f in FieldLabel::ALL {
                let _ = writeln!(
                    out,
                    "acd_even_{f} = {}",
                    rational_string(&report.acd_even.get(f).value)
                );
            }
        }
    }
    if show_normals {
        for (i, block) in report.per_normal.iter().enumerate() {
            let label = normal_label(table, &block.subgroup, i + 1);
            let order = block.subgroup.order;
            let _ = writeln!(
                out,
                "N={label} (order {order}): acd_rel = {}",
                rational_string(&block.acd_rel)
            );
            match field {
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "N={label} (order {order}): acd_even = {}",
                        rational_string(&block.even.get(f).value)
                    );
                }
                None => {
                    let _ = writeln!(
                        out,
                        "N={label} (order {order}): acd_even Q = {}, R = {}, C = {}",
                        rational_string(&block.even.q.value),
                        rational_string(&block.even.r.value),
                        rational_string(&block.even.c.value),
                    );
                }
            }
        }
    }
    out
}

fn even_stats_json(stats: &crate::acd::EvenStats) -> (String, usize, serde_json::Value) {
    let histogram: serde_json::Map<String, serde_json::Value> = stats
        .histogram
        .iter()
        .map(|(d, c)| (d.to_string(), serde_json::json!(c)))
        .collect();
    (
        rational_string(&stats.value),
        stats.count,
        serde_json::Value::Object(histogram),
    )
}

/// JSON acd report:
/// {group, order, solvable, acd, acd_star: {Q,R,C}, per_normal: [...]},
/// plus acd_fields and acd_even blocks and per-normal even counts.
pub fn render_acd_json(report: &AcdReport) -> serde_json::Value {
    let triple = |t: &crate::acd::FieldTriple<Rational>| {
        serde_json::json!({
            "Q": rational_string(&t.q),
            "R": rational_string(&t.r),
            "C": rational_string(&t.c),
        })
    };
    let even_triple = |t: &crate::acd::FieldTriple<crate::acd::EvenStats>| {
        let (qv, qc, qh) = even_stats_json(&t.q);
        let (rv, rc, rh) = even_stats_json(&t.r);
        let (cv, cc, ch) = even_stats_json(&t.c);
        (
            serde_json::json!({"Q": qv, "R": rv, "C": cv}),
            serde_json::json!({"Q": qc, "R": rc, "C": cc}),
            serde_json::json!({"Q": qh, "R": rh, "C": ch}),
        )
    };
    let per_normal: Vec<serde_json::Value> = report
        .per_normal
        .iter()
        .map(|block| {
            let (acd_even, even_counts, histograms) = even_triple(&block.even);
            serde_json::json!({
                "order": block.subgroup.order,
                "classes": block.subgroup.class_indices.iter().copied().collect::<Vec<usize>>(),
                "solvable": block.solvable,
                "acd_rel": rational_string(&block.acd_rel),
                "acd_even": acd_even,
                "even_counts": even_counts,
                "histograms": histograms,
            })
        })
        .collect();
    let (acd_even, even_counts, histograms) = even_triple(&report.acd_even);
    serde_json::json!({
        "group": report.group,
        "order": report.order,
        "solvable": report.solvable,
        "acd": rational_string(&report.acd),
        "acd_fields": triple(&report.acd_field),
        "acd_star": triple(&report.acd_star),
        "acd_even": acd_even,
        "even_counts": even_counts,
        "histograms": histograms,
        "per_normal": per_normal,
    })
}

// ---------------------------------------------------------------------------
// Theorem result rendering
// ---------------------------------------------------------------------------

/// Render theorem results; deterministic input order is preserved.
pub fn render_report(results: &[TheoremCheckResult], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_results_text(results),
        ReportFormat::Csv => render_results_csv(results),
        ReportFormat::Json => {
            let value = render_results_json(results);
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn normal_descriptor(result: &TheoremCheckResult) -> String {
    match &result.normal {
        Some(n) => format!("order {}", n.order),
        None => "-".to_string(),
    }
}

fn render_results_text(results: &[TheoremCheckResult]) -> String {
    let header = [
        "group", "theorem", "N", "value", "bound", "hyp", "concl", "ok", "sharp",
    ];
    let rows: Vec<[String; 9]> = results
        .iter()
        .map(|r| {
            [
                r.group.clone(),
                r.theorem.to_string(),
                normal_descriptor(r),
                rational_string(&r.value),
                rational_string(&r.bound),
                r.hypothesis_held.to_string(),
                r.conclusion_held.to_string(),
                r.implication_ok.to_string(),
                r.sharp.to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    emit(&mut out, &header.map(str::to_string));
    for row in &rows {
        emit(&mut out, row);
    }
    out
}

fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn render_results_csv(results: &[TheoremCheckResult]) -> String {
    let mut out = String::from("group,theorem,value,bound,hypothesis,conclusion,ok,sharp\n");
    for r in results {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            csv_escape(&r.group),
            r.theorem,
            rational_string(&r.value),
            rational_string(&r.bound),
            r.hypothesis_held,
            r.conclusion_held,
            r.implication_ok,
            r.sharp,
        );
    }
    out
}

fn render_results_json(results: &[TheoremCheckResult]) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = results
        .iter()
        .map(|r| {
            let normal = match &r.normal {
                Some(n) => serde_json::json!({
                    "order": n.order,
                    "classes": n.class_indices,
                }),
                None => serde_json::Value::Null,
            };
            serde_json::json!({
                "group": r.group,
                "theorem": r.theorem.to_string(),
                "normal": normal,
                "value": rational_string(&r.value),
                "bound": rational_string(&r.bound),
                "hypothesis": r.hypothesis_held,
                "conclusion": r.conclusion_held,
                "ok": r.implication_ok,
                "sharp": r.sharp,
            })
        })
        .collect();
    serde_json::Value::Array(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acd::acd_suite;
    use crate::chartab::character_table;
    use crate::group::{construct_named_group, Caps};
    use crate::groupspec::parse_group_spec;
    use crate::normal::enumerate_normal_subgroups;
    use crate::theorems::check_theorems;

    fn results_for(text: &str) -> Vec<TheoremCheckResult> {
        let group =
            construct_named_group(&parse_group_spec(text).unwrap(), Caps::default()).unwrap();
        let table = character_table(group).unwrap();
        let normals = enumerate_normal_subgroups(&table).unwrap();
        let report = acd_suite(text, &table, &normals).unwrap();
        check_theorems(&report)
    }

    #[test]
    fn empty_results_render_headers_only() {
        let text = render_report(&[], ReportFormat::Text);
        assert!(text.starts_with("group"));
        assert_eq!(text.lines().count(), 1);
        let csv = render_report(&[], ReportFormat::Csv);
        assert_eq!(csv, "group,theorem,value,bound,hypothesis,conclusion,ok,sharp\n");
        let json = render_report(&[], ReportFormat::Json);
        assert_eq!(json.trim(), "[]");
    }

    #[test]
    fn csv_keeps_exact_rationals() {
        let results = results_for("sl2:5");
        let csv = render_report(&results, ReportFormat::Csv);
        assert!(csv.contains("29/8"));
        assert!(!csv.contains("3.625"));
    }

    #[test]
    fn acd_text_contains_theorem_d_line() {
        let group = construct_named_group(&parse_group_spec("sl2:5").unwrap(), Caps::default())
            .unwrap();
        let table = character_table(group).unwrap();
        let normals = enumerate_normal_subgroups(&table).unwrap();
        let report = acd_suite("sl2:5", &table, &normals).unwrap();
        let text = render_acd_text(&table, &report, Some(FieldLabel::C), true);
        assert!(
            text.contains("N=Z (order 2): acd_even = 7/2"),
            "got:\n{text}"
        );
    }

    #[test]
    fn table_text_has_class_header_and_fields() {
        let group = construct_named_group(&parse_group_spec("alt:5").unwrap(), Caps::default())
            .unwrap();
        let table = character_table(group).unwrap();
        let text = render_table_text(&table);
        // Canonical representatives are the index-least class members.
        assert!(text.contains("(3 4 5)"));
        assert!(text.contains("(2 3)(4 5)"));
        assert!(text.contains(" Q"));
        assert!(text.contains(" R"));
    }

    #[test]
    fn json_report_is_deterministic() {
        let results = results_for("sym:4");
        let a = render_report(&results, ReportFormat::Json);
        let b = render_report(&results, ReportFormat::Json);
        assert_eq!(a, b);
    }
}
