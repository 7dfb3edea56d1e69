//! Average character degrees in exact rational arithmetic: acd(G), the
//! per-field and non-linear variants, and the relative even-degree averages
//! that the solvability bounds are about. The printed values for sl2:5 and
//! alt:5 are the sharp constants 29/8, 18/5, 7/2, 9/2, and 4.
//!
//! ```sh
//! cargo run -p chardeg --example acd_invariants
//! ```

use chardeg::acd::{acd_suite, FieldLabel};
use chardeg::chartab::character_table;
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;
use chardeg::normal::enumerate_normal_subgroups;
use chardeg::report::{normal_label, render_acd_text};

fn main() -> chardeg::Result<()> {
    for text in ["alt:5", "sl2:5", "sym:4"] {
        let spec = parse_group_spec(text)?;
        let group = construct_named_group(&spec, Caps::default())?;
        let table = character_table(group)?;
        let normals = enumerate_normal_subgroups(&table)?;
        let report = acd_suite(text, &table, &normals)?;

        println!("=== {text} ===");
        print!("{}", render_acd_text(&table, &report, None, true));

        // The same numbers, read directly off the selections.
        for field in FieldLabel::ALL {
            let star = chardeg::acd::select_characters(
                &table,
                chardeg::acd::Descriptor::Star(field),
            )?;
            println!(
                "acd*_{field} = {} over {} non-linear {field}-valued characters",
                report.acd_star.get(field),
                star.rows.len()
            );
        }
        for (i, block) in report.per_normal.iter().enumerate() {
            let label = normal_label(&table, &block.subgroup, i + 1);
            println!(
                "acd_even(G|{label}) over C: {}; degree histogram n_d = {:?}",
                block.even.c.value,
                block.even.c.histogram
            );
        }
        println!();
    }
    Ok(())
}
