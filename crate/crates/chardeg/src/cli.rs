//! Command-line front end. Thin by design: every subcommand parses
//! arguments, calls library functions, and renders.
//!
//! Exit codes: 0 success, 1 implication or invariant failure, 2 usage error
//! (bad arguments, unparsable specs, unsupported parameters, caps exceeded).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::acd::{acd_suite, FieldLabel};
use crate::chartab::{character_table, check_orthogonality, CharacterTable};
use crate::corpus::builtin_corpus;
use crate::cyclotomic::Cyclotomic;
use crate::error::Error;
use crate::group::{construct_named_group, Caps};
use crate::groupspec::parse_group_spec;
use crate::normal::{enumerate_normal_subgroups, normal_lattice_json};
use crate::report::{
    normal_label, render_acd_json, render_acd_text, render_report, render_table_json,
    render_table_text, ReportFormat,
};
use crate::selfcheck::run_group_invariants;
use crate::theorems::{check_theorems, TheoremCheckResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "chardeg",
    version,
    about = "Exact character tables and average-character-degree solvability bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on the number of enumerated elements (also: CHARDEG_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Q,
    R,
    C,
}

impl From<FieldArg> for FieldLabel {
    fn from(f: FieldArg) -> FieldLabel {
        match f {
            FieldArg::Q => FieldLabel::Q,
            FieldArg::R => FieldLabel::R,
            FieldArg::C => FieldLabel::C,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group.
    Table {
        /// Group spec, e.g. alt:5, sl2:9, "perm:(1 2 3) (1 2)", product:cyclic:2,alt:5
        spec: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print average-character-degree invariants.
    Acd {
        spec: String,
        /// Restrict printed values to one field of values: Q, R, or C.
        #[arg(long, value_enum, ignore_case = true)]
        field: Option<FieldArg>,
        /// Show per-normal-subgroup values: an index (1-based) or "all".
        #[arg(long)]
        normal: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the normal subgroup lattice.
    Normals {
        spec: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check the solvability-bound theorems over a corpus or a single group.
    Verify {
        /// Corpus name; only "builtin" is defined.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Verify a single group instead of the corpus.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
        /// Diagnostics: perturb one character value first, proving that the
        /// invariant checks catch it (the run then fails with exit code 1).
        #[arg(long)]
        inject_fault: bool,
    },
    /// Run the module invariant battery over the builtin corpus.
    Selftest,
}

fn caps_from(cli_max_order: Option<usize>) -> Result<Caps, String> {
    if let Some(n) = cli_max_order {
        return Ok(Caps::with_max_order(n));
    }
    match std::env::var("CHARDEG_MAX_ORDER") {
        Ok(text) => text
            .parse::<usize>()
            .map(Caps::with_max_order)
            .map_err(|_| format!("CHARDEG_MAX_ORDER is not an integer: {text}")),
        Err(_) => Ok(Caps::default()),
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Internal(_) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

fn build_table(spec_text: &str, caps: Caps) -> Result<CharacterTable, Error> {
    let spec = parse_group_spec(spec_text)?;
    let group = construct_named_group(&spec, caps)?;
    character_table(group)
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 2 on usage errors, 0 on --help/--version.
            e.exit();
        }
    };
    let caps = match caps_from(cli.max_order) {
        Ok(caps) => caps,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let outcome = match &cli.command {
        Command::Table { spec, format } => cmd_table(spec, *format, caps),
        Command::Acd {
            spec,
            field,
            normal,
            format,
        } => cmd_acd(spec, *field, normal.as_deref(), *format, caps),
        Command::Normals { spec, format } => cmd_normals(spec, *format, caps),
        Command::Verify {
            corpus,
            spec,
            format,
            inject_fault,
        } => cmd_verify(corpus, spec.as_deref(), *format, *inject_fault, caps),
        Command::Selftest => cmd_selftest(caps),
    };
    match outcome {
        Ok((content, code)) => {
            if let Err(e) = emit(&cli.out, &content) {
                eprintln!("error: cannot write output: {e}");
                return EXIT_CHECK_FAILED;
            }
            code
        }
        Err(error) => {
            eprintln!("error: {error}");
            exit_code_for(&error)
        }
    }
}

fn cmd_table(spec: &str, format: OutputFormat, caps: Caps) -> Result<(String, i32), Error> {
    let table = build_table(spec, caps)?;
    let content = match format {
        OutputFormat::Text => render_table_text(&table),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&render_table_json(&table)).unwrap();
            s.push('\n');
            s
        }
    };
    Ok((content, EXIT_OK))
}

fn cmd_acd(
    spec: &str,
    field: Option<FieldArg>,
    normal: Option<&str>,
    format: OutputFormat,
    caps: Caps,
) -> Result<(String, i32), Error> {
    let table = build_table(spec, caps)?;
    let normals = enumerate_normal_subgroups(&table)?;
    let report = acd_suite(spec, &table, &normals)?;
    let show_normals = match normal {
        None => false,
        Some("all") => true,
        Some(index_text) => {
            let index: usize = index_text.parse().map_err(|_| Error::Parse {
                position: 0,
                expected: "--normal takes an index or \"all\"".into(),
            })?;
            if index == 0 || index > report.per_normal.len() {
                return Err(Error::Precondition(format!(
                    "--normal index out of range 1..={}",
                    report.per_normal.len()
                )));
            }
            true
        }
    };
    let content = match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&render_acd_json(&report)).unwrap();
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let field_label = field.map(FieldLabel::from);
            match normal {
                Some(index_text) if index_text != "all" => {
                    // Single-subgroup view.
                    let index: usize = index_text.parse().unwrap();
                    let block = &report.per_normal[index - 1];
                    let label = normal_label(&table, &block.subgroup, index);
                    let mut text =
                        render_acd_text(&table, &report, field_label, false);
                    match field_label {
                        Some(f) => text.push_str(&format!(
                            "N={label} (order {}): acd_even = {}\n",
                            block.subgroup.order,
                            block.even.get(f).value
                        )),
                        None => text.push_str(&format!(
                            "N={label} (order {}): acd_even Q = {}, R = {}, C = {}\n",
                            block.subgroup.order,
                            block.even.q.value,
                            block.even.r.value,
                            block.even.c.value
                        )),
                    }
                    text
                }
                _ => render_acd_text(&table, &report, field_label, show_normals),
            }
        }
    };
    Ok((content, EXIT_OK))
}

fn cmd_normals(spec: &str, format: OutputFormat, caps: Caps) -> Result<(String, i32), Error> {
    let table = build_table(spec, caps)?;
    let normals = enumerate_normal_subgroups(&table)?;
    let content = match format {
        OutputFormat::Json => {
            let mut s =
                serde_json::to_string_pretty(&normal_lattice_json(&table, &normals)?).unwrap();
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut text = format!("group: {spec}\nnormal subgroups: {}\n", normals.len());
            for (i, n) in normals.iter().enumerate() {
                let label = if n.is_trivial() {
                    "1".to_string()
                } else {
                    normal_label(&table, n, i)
                };
                let solvable = crate::normal::is_solvable_normal(&table, n)?;
                let classes: Vec<String> =
                    n.class_indices.iter().map(|c| c.to_string()).collect();
                text.push_str(&format!(
                    "{label}: order {}, classes [{}], solvable {}\n",
                    n.order,
                    classes.join(" "),
                    solvable
                ));
            }
            text
        }
    };
    Ok((content, EXIT_OK))
}

fn verify_one(name: &str, spec_text: &str, caps: Caps) -> Result<Vec<TheoremCheckResult>, Error> {
    let table = build_table(spec_text, caps)?;
    let normals = enumerate_normal_subgroups(&table)?;
    let report = acd_suite(name, &table, &normals)?;
    Ok(check_theorems(&report))
}

fn cmd_verify(
    corpus: &str,
    single_spec: Option<&str>,
    format: VerifyFormat,
    inject_fault: bool,
    caps: Caps,
) -> Result<(String, i32), Error> {
    if inject_fault {
        let spec = single_spec.unwrap_or("sym:3");
        let table = build_table(spec, caps)?;
        let perturbed =
            table.with_value_replaced(0, 0, &table.value(0, 0).clone() + &Cyclotomic::one());
        let report = check_orthogonality(&perturbed);
        let content = format!("fault injection on {spec}: {}\n", report.summary());
        // Exit reflects the check outcome; a healthy checker fails here.
        let code = if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
        return Ok((content, code));
    }

    let mut results = Vec::new();
    match single_spec {
        Some(spec) => {
            results.extend(verify_one(spec, spec, caps)?);
        }
        None => {
            if corpus != "builtin" {
                return Err(Error::InvalidParameter(format!(
                    "unknown corpus {corpus:?}; only \"builtin\" is defined"
                )));
            }
            for entry in builtin_corpus() {
                results.extend(verify_one(entry.name, entry.name, caps)?);
            }
        }
    }
    let all_ok = results.iter().all(|r| r.implication_ok);
    let report_format = match format {
        VerifyFormat::Text => ReportFormat::Text,
        VerifyFormat::Csv => ReportFormat::Csv,
        VerifyFormat::Json => ReportFormat::Json,
    };
    let content = render_report(&results, report_format);
    Ok((content, if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
}

fn cmd_selftest(caps: Caps) -> Result<(String, i32), Error> {
    let mut out = String::new();
    let mut all_ok = true;
    for entry in builtin_corpus() {
        let round_trip = parse_group_spec(&entry.spec.to_string()).ok() == Some(entry.spec.clone());
        if round_trip {
            out.push_str(&format!("{}: spec round-trip: ok\n", entry.name));
        } else {
            all_ok = false;
            out.push_str(&format!("{}: spec round-trip: FAIL\n", entry.name));
        }
    }
    for entry in builtin_corpus() {
        let lines =
            run_group_invariants(entry.name, &entry.spec, caps, Some(entry.expected_solvable))?;
        for line in lines {
            if line.passed {
                out.push_str(&format!("{}: {}: ok\n", entry.name, line.name));
            } else {
                all_ok = false;
                out.push_str(&format!(
                    "{}: {}: FAIL ({})\n",
                    entry.name,
                    line.name,
                    line.detail.unwrap_or_default()
                ));
            }
        }
    }
    Ok((out, if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
}
