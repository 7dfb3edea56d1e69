//! Enumerate normal subgroups from character kernels: the lattice, the
//! derived subgroup, the center, and per-subgroup solvability.
//!
//! ```sh
//! cargo run -p chardeg --example normal_subgroups
//! ```

use chardeg::chartab::character_table;
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;
use chardeg::normal::{
    center_classes, derived_subgroup_classes, enumerate_normal_subgroups, is_solvable_normal,
    kernel_class_set,
};

fn main() -> chardeg::Result<()> {
    for text in ["sym:4", "sl2:5", "alt:5", "product:cyclic:2,alt:5"] {
        let spec = parse_group_spec(text)?;
        let group = construct_named_group(&spec, Caps::default())?;
        let table = character_table(group)?;

        println!("=== {text} (order {}) ===", table.order());
        for row in 0..table.row_count() {
            let kernel = kernel_class_set(&table, row);
            println!(
                "ker(degree-{} character) has order {}",
                table.degree(row),
                kernel.order
            );
        }

        let normals = enumerate_normal_subgroups(&table)?;
        println!("normal subgroups ({}):", normals.len());
        for n in &normals {
            println!(
                "  order {:>4}, classes {:?}, solvable {}",
                n.order,
                n.class_indices,
                is_solvable_normal(&table, n)?
            );
        }
        println!("derived subgroup order: {}", derived_subgroup_classes(&table).order);
        println!("center order: {}", center_classes(&table).order);
        println!();
    }
    Ok(())
}
