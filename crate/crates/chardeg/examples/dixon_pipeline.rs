//! The Dixon-Schneider pipeline, stage by stage, for one group: conjugacy
//! classes, class multiplication coefficients, the working prime, the
//! modular character table over F_p, and the exact lifted values.
//!
//! ```sh
//! cargo run -p chardeg --example dixon_pipeline
//! ```

use chardeg::chartab::{
    class_constants, lift_table, modular_character_table, select_dixon_prime,
};
use chardeg::classes::{conjugacy_classes, group_exponent, power_map};
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;

fn main() -> chardeg::Result<()> {
    let spec = parse_group_spec("sym:4")?;
    let group = construct_named_group(&spec, Caps::default())?;
    println!("group sym:4, order {}", group.order());

    // Stage 1: conjugacy classes in canonical order.
    let classes = conjugacy_classes(&group)?;
    for (j, class) in classes.classes.iter().enumerate() {
        println!(
            "class {j}: rep {}, size {}, element order {}",
            group.element(class.representative).cycle_string(),
            class.size,
            class.element_order
        );
    }

    // Stage 2: class multiplication coefficients a[i][j][k].
    let constants = class_constants(&group, &classes);
    println!(
        "a[transpositions][transpositions][identity] = {} (each transposition times itself)",
        constants.get(2, 2, 0)
    );

    // Stage 3: the working prime p = 1 mod exp(G), p > 2 sqrt(|G|).
    let exponent = group_exponent(&classes);
    let p = select_dixon_prime(group.order(), exponent);
    println!("exponent {exponent}, Dixon prime p = {p}");

    // Stage 4: degrees and character values mod p from common eigenvectors
    // of the class matrices.
    let modular = modular_character_table(&constants, p)?;
    println!("modular degrees: {:?}", modular.degrees);
    for row in &modular.rows {
        println!("  mod-{p} row: {row:?}");
    }

    // Stage 5: lift eigenvalue multiplicities to exact cyclotomic values.
    let pm = power_map(&group, &classes);
    let rows = lift_table(&modular, &pm, &classes)?;
    for row in &rows {
        let values: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
        println!("degree {}: [{}]", row.degree, values.join(", "));
    }
    Ok(())
}
