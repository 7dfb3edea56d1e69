//! Build groups from textual specs and inspect their structure.
//!
//! ```sh
//! cargo run -p chardeg --example group_construction
//! ```

use std::collections::BTreeSet;

use chardeg::classes::{conjugacy_classes, group_exponent};
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;

fn main() -> chardeg::Result<()> {
    for text in [
        "cyclic:6",
        "dihedral:12",
        "quaternion:8",
        "sym:4",
        "alt:5",
        "sl2:5",
        "psl2:7",
        "product:cyclic:2,alt:5",
        "perm:(1 2 3 4 5) (1 2 3)",
    ] {
        let spec = parse_group_spec(text)?;
        let group = construct_named_group(&spec, Caps::default())?;
        let classes = conjugacy_classes(&group)?;
        let whole: BTreeSet<usize> = (0..group.order() as usize).collect();
        let (series, solvable) = group.derived_series(&whole)?;
        let series_orders: Vec<usize> = series.iter().map(|term| term.len()).collect();
        println!(
            "{text}: order {}, degree {}, {} classes of sizes {:?}, exponent {}, derived series {:?}, solvable {}",
            group.order(),
            group.degree(),
            classes.count(),
            classes.sizes(),
            group_exponent(&classes),
            series_orders,
            solvable,
        );
    }

    // Caps turn oversized requests into structured errors instead of work.
    let too_big = construct_named_group(&parse_group_spec("sym:8")?, Caps::with_max_order(1000));
    println!("sym:8 with cap 1000 -> {}", too_big.unwrap_err());
    Ok(())
}
