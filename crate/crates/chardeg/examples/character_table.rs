//! Compute and print full character tables, with per-row field labels.
//!
//! ```sh
//! cargo run -p chardeg --example character_table [spec...]
//! ```

use chardeg::chartab::{character_table, check_orthogonality};
use chardeg::group::{construct_named_group, Caps};
use chardeg::groupspec::parse_group_spec;
use chardeg::report::render_table_text;

fn main() -> chardeg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs: Vec<&str> = if args.is_empty() {
        vec!["sym:3", "quaternion:8", "alt:5", "sl2:5"]
    } else {
        args.iter().map(String::as_str).collect()
    };

    for text in specs {
        let spec = parse_group_spec(text)?;
        let group = construct_named_group(&spec, Caps::default())?;
        let table = character_table(group)?;
        println!("=== {text} ===");
        print!("{}", render_table_text(&table));
        let report = check_orthogonality(&table);
        println!("checks: {}", report.summary());
        println!();
    }
    Ok(())
}
