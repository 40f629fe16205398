//! `qaut`: build groups and quandles, enumerate their automorphisms and
//! antiautomorphisms, and run the verification checks.
//!
//! Exit codes: 0 on success or when every verdict holds, 1 when a
//! verification fails, 2 on usage or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quandle_aut::catalog::parse_group_name;
use quandle_aut::construct::{build, ConstructionSpec};
use quandle_aut::harness::{render_verdict, run_census, run_check, Catalog, CensusConfig, CheckParams, GroupData, CHECK_IDS};
use quandle_aut::io::{export_group, export_quandle, parse_group, parse_quandle, GroupInfo, QuandleInfo};
use quandle_aut::maps::enumerate_aut;
use quandle_aut::morphisms::{
    enumerate_quandle_antis, enumerate_quandle_antis_oracle, enumerate_quandle_auts, enumerate_quandle_auts_oracle,
};
use quandle_aut::{Caps, FiniteGroup, Quandle};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "qaut", version, about = "Quandles from finite groups and their (anti)automorphisms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest group order accepted from files.
    #[arg(long, global = true, default_value_t = Caps::default().order, value_parser = positive)]
    max_order: usize,
    /// Largest group whose automorphisms are enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().group_enum, value_parser = positive)]
    group_cap: usize,
    /// Largest quandle enumerated by backtracking.
    #[arg(long, global = true, default_value_t = Caps::default().quandle_enum, value_parser = positive)]
    quandle_cap: usize,
    /// Largest quandle scanned over all bijections.
    #[arg(long, global = true, default_value_t = Caps::default().oracle, value_parser = positive)]
    oracle_cap: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            order: self.max_order,
            group_enum: self.group_cap,
            quandle_enum: self.quandle_cap,
            oracle: self.oracle_cap,
            ..Caps::default()
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect or export a group.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Build, inspect or validate a quandle.
    Quandle {
        #[command(subcommand)]
        action: QuandleAction,
    },
    /// Enumerate automorphisms (or antiautomorphisms) of a quandle.
    Aut {
        #[command(flatten)]
        source: QuandleSource,
        /// Enumerate antiautomorphisms instead.
        #[arg(long)]
        anti: bool,
        /// Scan all bijections and cross-check against backtracking.
        #[arg(long)]
        oracle: bool,
        /// Number of maps to print.
        #[arg(long, default_value_t = 10)]
        show: usize,
    },
    /// Run one verification check.
    Verify {
        /// Check identifier.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_IDS))]
        id: String,
        /// Group name or table file.
        #[arg(long)]
        group: Option<String>,
        /// Conjugation exponent; all of -2..=3 when omitted.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Index of the base map in the sorted automorphism list.
        #[arg(long)]
        map: Option<usize>,
        /// Which of the verbal constructions Q1..Q4.
        #[arg(long)]
        i: Option<usize>,
        /// Element index used by the P constructions.
        #[arg(long)]
        c: Option<usize>,
        /// Dihedral quandle order.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run every check over the catalog.
    Census {
        /// Comma-separated group names replacing the default catalog groups.
        #[arg(long, value_delimiter = ',')]
        groups: Option<Vec<String>>,
        /// Comma-separated orders of dihedral quandles to check.
        #[arg(long, value_delimiter = ',')]
        dihedral: Option<Vec<usize>>,
    },
}

#[derive(Debug, Subcommand)]
enum GroupAction {
    /// Order, center, exponent and automorphism counts.
    Info {
        #[arg(long)]
        group: String,
    },
    /// The multiplication table in the file format.
    Export {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
enum QuandleAction {
    /// Build a quandle and print its table.
    Build(QuandleSource),
    /// Validate a quandle table file.
    Check {
        file: PathBuf,
    },
    /// Flags and inner automorphism group size.
    Info(QuandleSource),
}

#[derive(Debug, Args)]
struct QuandleSource {
    /// Construction such as `core`, `conj:m=2`, `dihedral:n=5`, `p1:c=3`.
    #[arg(long, required_unless_present = "quandle_file", conflicts_with = "quandle_file")]
    quandle: Option<String>,
    /// Group for constructions that need one (name or table file).
    #[arg(long)]
    group: Option<String>,
    /// Read the quandle from a table file.
    #[arg(long)]
    quandle_file: Option<PathBuf>,
}

/// Errors that end the command; `Failure` means a check ran and failed.
enum CliError {
    Usage(String),
    Failure(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn load_group(spec: &str, caps: &Caps) -> Result<FiniteGroup, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_group(&text, caps).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
    }
    Ok(parse_group_name(spec)?)
}

fn load_quandle(source: &QuandleSource, caps: &Caps) -> Result<Quandle, CliError> {
    if let Some(path) = &source.quandle_file {
        let text = std::fs::read_to_string(path)?;
        return parse_quandle(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
    }
    let spec: ConstructionSpec = source.quandle.as_deref().expect("clap requires a source").parse()?;
    let group = source.group.as_deref().map(|g| load_group(g, caps)).transpose()?;
    Ok(build(&spec, group.as_ref(), caps)?)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn table_text(rows: &[Vec<usize>]) -> String {
    let width = rows.len().saturating_sub(1).to_string().len();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

fn group_cmd(action: &GroupAction, format: Format, caps: &Caps) -> Result<Output, CliError> {
    match action {
        GroupAction::Info { group } => {
            let g = load_group(group, caps)?;
            let auts = if g.order() <= caps.group_enum { Some(enumerate_aut(&g, caps)?.len()) } else { None };
            let info = GroupInfo::new(&g, auts);
            let text = match format {
                Format::Json => pretty(&serde_json::to_value(&info)?),
                Format::Text => {
                    let count = |c: Option<usize>| c.map_or_else(|| "not enumerated (above cap)".to_string(), |c| c.to_string());
                    format!(
                        "group {}\norder {}\nabelian {}\ncenter {}\ncommutator subgroup {}\nexponent {}\n|Aut| {}\n|AAut| {}\n",
                        info.name,
                        info.order,
                        info.abelian,
                        info.center_size,
                        info.commutator_subgroup_size,
                        info.exponent,
                        count(info.aut_count),
                        count(info.aaut_count)
                    )
                }
            };
            Ok(Output { text, ok: true })
        }
        GroupAction::Export { group } => {
            let g = load_group(group, caps)?;
            let text = match format {
                Format::Json => pretty(&json!({ "name": g.label(), "order": g.order(), "table": g.rows() })),
                Format::Text => export_group(&g),
            };
            Ok(Output { text, ok: true })
        }
    }
}

fn quandle_text(info: &QuandleInfo, with_table: bool) -> String {
    let mut out = format!("quandle {}\norder {}\naxioms hold\n", info.name, info.order);
    let _ = writeln!(
        out,
        "commutative {}\ncocommutative {}\ninvolutory {}\ntrivial {}",
        info.commutative, info.cocommutative, info.involutory, info.trivial
    );
    match info.inn_size {
        Some(k) => {
            let _ = writeln!(out, "|Inn| {k}");
        }
        None => out.push_str("|Inn| above cap\n"),
    }
    if with_table {
        out.push_str(&table_text(&info.op));
    }
    out
}

fn quandle_cmd(action: &QuandleAction, format: Format, caps: &Caps) -> Result<Output, CliError> {
    let (q, with_table, export) = match action {
        QuandleAction::Build(source) => (load_quandle(source, caps)?, true, true),
        QuandleAction::Info(source) => (load_quandle(source, caps)?, false, false),
        QuandleAction::Check { file } => {
            let text = std::fs::read_to_string(file)?;
            match parse_quandle(&text) {
                Ok(q) => (q, false, false),
                Err(quandle_aut::io::IoError::Quandle(e)) => {
                    return Err(CliError::Failure(format!("{}: not a quandle: {e}", file.display())));
                }
                Err(e) => return Err(CliError::Usage(format!("{}: {e}", file.display()))),
            }
        }
    };
    let info = QuandleInfo::new(&q, caps);
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&info)?),
        Format::Text if export => format!("{}\n{}", quandle_text(&info, false), export_quandle(&q)),
        Format::Text => quandle_text(&info, with_table),
    };
    Ok(Output { text, ok: true })
}

fn aut_cmd(source: &QuandleSource, anti: bool, oracle: bool, show: usize, format: Format, caps: &Caps) -> Result<Output, CliError> {
    let q = load_quandle(source, caps)?;
    let start = Instant::now();
    let maps = if anti { enumerate_quandle_antis(&q, caps)? } else { enumerate_quandle_auts(&q, caps)? };
    let oracle_maps = if oracle {
        Some(if anti { enumerate_quandle_antis_oracle(&q, caps)? } else { enumerate_quandle_auts_oracle(&q, caps)? })
    } else {
        None
    };
    let elapsed = start.elapsed().as_secs_f64();
    let agrees = oracle_maps.as_ref().map(|o| *o == maps);
    let kind = if anti { "antiautomorphisms" } else { "automorphisms" };
    let first: Vec<&[usize]> = maps.iter().take(show).map(|m| m.images()).collect();
    let text = match format {
        Format::Json => pretty(&json!({
            "quandle": q.label(),
            "order": q.order(),
            "kind": if anti { "anti" } else { "auto" },
            "count": maps.len(),
            "oracle_count": oracle_maps.as_ref().map(Vec::len),
            "oracle_agrees": agrees,
            "maps": first,
            "elapsed_seconds": elapsed,
        })),
        Format::Text => {
            let mut out = format!("{} of {}: {}\n", kind, q.label(), maps.len());
            if let (Some(o), Some(a)) = (&oracle_maps, agrees) {
                let _ = writeln!(out, "oracle: {} ({})", o.len(), if a { "agrees" } else { "DISAGREES" });
            }
            for m in &first {
                let _ = writeln!(out, "{m:?}");
            }
            out
        }
    };
    Ok(Output { text, ok: agrees != Some(false) })
}

fn verify_cmd(id: &str, group: Option<&str>, params: CheckParams, format: Format, caps: &Caps) -> Result<Output, CliError> {
    let data = match group {
        Some(g) => Some(GroupData::new(load_group(g, caps)?, caps)?),
        None => None,
    };
    let v = run_check(id, data.as_ref(), &params, caps)?;
    let ok = !v.failed();
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&v)?),
        Format::Text => {
            let mut out = String::new();
            render_verdict(&mut out, &v, 0);
            out
        }
    };
    Ok(Output { text, ok })
}

fn census_cmd(groups: Option<&[String]>, dihedral: Option<&[usize]>, format: Format, caps: &Caps) -> Result<Output, CliError> {
    let mut catalog = Catalog::standard(caps)?;
    if let Some(names) = groups {
        catalog.groups = names.iter().map(|n| load_group(n, caps)).collect::<Result<_, _>>()?;
    }
    if let Some(orders) = dihedral {
        catalog.dihedral_quandles = orders.to_vec();
    }
    let config = CensusConfig { caps: *caps, ..CensusConfig::default() };
    let report = run_census(&catalog, &config);
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report)?),
        Format::Text => report.render_text(),
    };
    Ok(Output { text, ok: report.all_hold() })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Group { action } => group_cmd(action, cli.format, &caps),
        Command::Quandle { action } => quandle_cmd(action, cli.format, &caps),
        Command::Aut { source, anti, oracle, show } => aut_cmd(source, *anti, *oracle, *show, cli.format, &caps),
        Command::Verify { id, group, m, map, i, c, n } => {
            let params = CheckParams { m: *m, map: *map, i: *i, c: *c, n: *n };
            verify_cmd(id, group.as_deref(), params, cli.format, &caps)
        }
        Command::Census { groups, dihedral } => census_cmd(groups.as_deref(), dihedral.as_deref(), cli.format, &caps),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), std::io::Error> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
