//! Run the solvability-bound battery over the built-in corpus and print the
//! text report plus a sharpness summary. Takes about half a minute in a
//! debug build; pass group specs to check just those.
//!
//! ```sh
//! cargo run -p chardeg --example verify_theorems [spec...]
//! ```

use chardeg::acd::acd_suite;
use chardeg::chartab::character_table;
use chardeg::corpus::builtin_corpus;
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;
use chardeg::normal::enumerate_normal_subgroups;
use chardeg::report::{render_report, ReportFormat};
use chardeg::theorems::check_theorems;

fn main() -> chardeg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<String> = if args.is_empty() {
        builtin_corpus().iter().map(|e| e.name.to_string()).collect()
    } else {
        args
    };

    let mut results = Vec::new();
    for name in &names {
        let spec = parse_group_spec(name)?;
        let group = construct_named_group(&spec, Caps::default())?;
        let table = character_table(group)?;
        let normals = enumerate_normal_subgroups(&table)?;
        let report = acd_suite(name, &table, &normals)?;
        results.extend(check_theorems(&report));
    }

    print!("{}", render_report(&results, ReportFormat::Text));

    let failures = results.iter().filter(|r| !r.implication_ok).count();
    let sharp: Vec<String> = results
        .iter()
        .filter(|r| r.sharp)
        .map(|r| format!("({}, {})", r.group, r.theorem))
        .collect();
    println!();
    println!(
        "{} checks, {} implication failures; sharp: {}",
        results.len(),
        failures,
        sharp.join(" ")
    );
    Ok(())
}
