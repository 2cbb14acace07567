//! Command-line front end.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use crate::counting;
use crate::error::{Error, Result};
use crate::garside;
use crate::graph::{self, GraphFormat, Planarity};
use crate::simple;
use crate::verify::{self, Scope, VerifyOptions};
use crate::word::{self, BraidWord, Canonicalizer, DEFAULT_CLASS_CAP};

#[derive(Debug, Parser)]
#[command(name = "braidforge", version, about = "Positive braid monoid toolkit")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Number of strands.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Length or column index.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Output format: csv, json, dot or text depending on the command.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Write the main output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cap on the size of an equivalence class explored by closure.
    #[arg(long, global = true, default_value_t = DEFAULT_CLASS_CAP)]
    pub max_class_size: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Counting tables.
    Count {
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Deterministic listings of words, divisors, simple braids or classes.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
    },
    /// Export the simple graph and optionally check a property.
    Graph {
        #[arg(long, value_enum)]
        check: Option<GraphCheck>,
    },
    /// Re-derive every published claim and print a report.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// Canonical form of a word such as "1,2,1".
    Canon { word: String },
    /// Divisors of the Garside element.
    Divisors,
    /// Simple braids, or their conjugacy classes.
    Simple {
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    B,
    Bplus,
    D,
    S,
    C,
    Fib,
    Partitions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Simple,
    Divisors,
    Classes,
    Words,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphCheck {
    Planarity,
    Partite,
    Connected,
    K33,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    All,
    Counting,
    Garside,
    Graph,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => Scope::All,
            ScopeArg::Counting => Scope::Counting,
            ScopeArg::Garside => Scope::Garside,
            ScopeArg::Graph => Scope::Graph,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Json,
}

fn table_format(requested: &Option<String>, default: TableFormat) -> Result<TableFormat> {
    match requested.as_deref() {
        None => Ok(default),
        Some("csv") => Ok(TableFormat::Csv),
        Some("json") => Ok(TableFormat::Json),
        Some(other) => Err(Error::UnsupportedFormat(other.to_string())),
    }
}

fn require_n(g: &GlobalArgs) -> Result<usize> {
    g.n.ok_or_else(|| Error::Invalid("--n is required".into()))
}

/// What a command produced: its main text and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }
}

#[derive(Serialize)]
struct Row {
    n: Option<usize>,
    i: usize,
    value: serde_json::Value,
}

fn render_rows(rows: &[Row], header: &[&str], format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Json => Ok(serde_json::to_string_pretty(rows).expect("serialisable") + "\n"),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).map_err(csv_err)?;
            for r in rows {
                let value = match &r.value {
                    serde_json::Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                let mut rec = Vec::new();
                if let Some(n) = r.n {
                    rec.push(n.to_string());
                }
                rec.push(r.i.to_string());
                rec.push(value);
                w.write_record(&rec).map_err(csv_err)?;
            }
            csv_finish(w)
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Invalid(format!("csv: {e}"))
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn num(v: u128) -> serde_json::Value {
    json!(v)
}

fn pick(row: Vec<Row>, k: Option<usize>) -> Result<Vec<Row>> {
    match k {
        None => Ok(row),
        Some(k) => {
            let hit: Vec<Row> = row.into_iter().filter(|r| r.i == k).collect();
            if hit.is_empty() {
                Err(Error::OutOfRange {
                    what: "column index",
                    detail: format!("k = {k} is outside the row"),
                })
            } else {
                Ok(hit)
            }
        }
    }
}

/// Default number of series terms when `--k` is absent.
const DEFAULT_SERIES_LEN: usize = 8;
/// Largest `n` for which the `d` row fits in `u128`.
const MAX_D_STRANDS: usize = 30;
/// Largest `n` accepted by the `s` and `c` families.
const MAX_TABLE_STRANDS: usize = 100;

pub fn cmd_count(family: Family, g: &GlobalArgs) -> Result<String> {
    let format = table_format(&g.format, TableFormat::Csv)?;
    let header: &[&str] = match family {
        Family::Fib => &["k", "value"],
        Family::Partitions => &["m", "k", "value"],
        _ => &["n", "i", "value"],
    };
    let rows = match family {
        Family::B | Family::Bplus => {
            let n = g.n.unwrap_or(3);
            if n != 3 {
                return Err(Error::OutOfRange {
                    what: "family b/bplus",
                    detail: format!("only n = 3 is covered, got {n}"),
                });
            }
            let ks: Vec<usize> = match g.k {
                Some(k) => vec![k],
                None => (0..=DEFAULT_SERIES_LEN).collect(),
            };
            if ks.iter().any(|&k| k + 3 > counting::MAX_FIB_INDEX) {
                return Err(Error::OutOfRange {
                    what: "series index",
                    detail: "k too large".into(),
                });
            }
            ks.into_iter()
                .map(|k| Row {
                    n: Some(3),
                    i: k,
                    value: num(if family == Family::B {
                        counting::count_positive_3(k)
                    } else {
                        counting::count_delta_free_3(k)
                    }),
                })
                .collect()
        }
        Family::D => {
            let n = require_n(g)?;
            if !(1..=MAX_D_STRANDS).contains(&n) {
                return Err(Error::OutOfRange {
                    what: "family d",
                    detail: format!("n = {n} not in 1..={MAX_D_STRANDS}"),
                });
            }
            let table = counting::d_table(n);
            let row = table[n]
                .iter()
                .enumerate()
                .map(|(i, v)| Row {
                    n: Some(n),
                    i,
                    value: num(v.to_u128().expect("fits")),
                })
                .collect();
            pick(row, g.k)?
        }
        Family::S | Family::C => {
            let n = require_n(g)?;
            if !(1..=MAX_TABLE_STRANDS).contains(&n) {
                return Err(Error::OutOfRange {
                    what: "family s/c",
                    detail: format!("n = {n} not in 1..={MAX_TABLE_STRANDS}"),
                });
            }
            let values = if family == Family::S {
                counting::s_table(n).swap_remove(n)
            } else {
                counting::c_table(n)
            };
            let row = values
                .into_iter()
                .enumerate()
                .map(|(i, v)| Row {
                    n: Some(n),
                    i,
                    value: num(v),
                })
                .collect();
            pick(row, g.k)?
        }
        Family::Fib => {
            let ks: Vec<usize> = match g.k {
                Some(k) => vec![k],
                None => (0..=g.n.unwrap_or(20)).collect(),
            };
            if ks.iter().any(|&k| k > counting::MAX_FIB_INDEX) {
                return Err(Error::OutOfRange {
                    what: "fib",
                    detail: format!("index above {}", counting::MAX_FIB_INDEX),
                });
            }
            ks.into_iter()
                .map(|k| Row {
                    n: None,
                    i: k,
                    value: num(counting::fib(k)),
                })
                .collect()
        }
        Family::Partitions => {
            let m = require_n(g)?;
            if m > 400 {
                return Err(Error::OutOfRange {
                    what: "partitions",
                    detail: format!("m = {m} > 400"),
                });
            }
            let table = counting::PartitionTable::new(m);
            let ks: Vec<usize> = match g.k {
                Some(k) => vec![k],
                None => (0..=m).collect(),
            };
            ks.into_iter()
                .map(|k| Row {
                    n: Some(m),
                    i: k,
                    value: num(table.get(m, k)),
                })
                .collect()
        }
    };
    render_rows(&rows, header, format)
}

#[derive(Serialize)]
struct WordRow {
    word: String,
    length: usize,
}

fn render_words(rows: &[WordRow], format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Json => Ok(serde_json::to_string_pretty(rows).expect("serialisable") + "\n"),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["word", "length"]).map_err(csv_err)?;
            for r in rows {
                w.write_record([r.word.clone(), r.length.to_string()])
                    .map_err(csv_err)?;
            }
            csv_finish(w)
        }
    }
}

#[derive(Serialize)]
struct ClassRow {
    partition: String,
    length: usize,
    size: usize,
    representative: String,
}

fn class_rows(n: usize) -> Result<Vec<ClassRow>> {
    type Key = (usize, std::cmp::Reverse<Vec<usize>>);
    let mut classes: BTreeMap<Key, (simple::ClassPartition, usize)> = BTreeMap::new();
    for b in simple::enumerate_simple(n)? {
        let a = simple::conjugacy_representative(&b);
        let key = (a.braid_length(), std::cmp::Reverse(a.parts().to_vec()));
        classes.entry(key).or_insert((a, 0)).1 += 1;
    }
    Ok(classes
        .into_values()
        .map(|(a, size)| ClassRow {
            partition: a.to_string(),
            length: a.braid_length(),
            size,
            representative: simple::beta_a(&a).to_string(),
        })
        .collect())
}

fn render_classes(rows: &[ClassRow], format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Json => Ok(serde_json::to_string_pretty(rows).expect("serialisable") + "\n"),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["partition", "length", "size", "representative"])
                .map_err(csv_err)?;
            for r in rows {
                w.write_record([
                    r.partition.clone(),
                    r.length.to_string(),
                    r.size.to_string(),
                    r.representative.clone(),
                ])
                .map_err(csv_err)?;
            }
            csv_finish(w)
        }
    }
}

pub fn cmd_enumerate(kind: EnumKind, g: &GlobalArgs) -> Result<String> {
    let format = table_format(&g.format, TableFormat::Csv)?;
    let n = require_n(g)?;
    match kind {
        EnumKind::Simple => render_words(&simple_rows(n)?, format),
        EnumKind::Divisors => render_words(&divisor_rows(n)?, format),
        EnumKind::Classes => render_classes(&class_rows(n)?, format),
        EnumKind::Words => {
            let k =
                g.k.ok_or_else(|| Error::Invalid("--k is required for words".into()))?;
            let rows: Vec<WordRow> = word::enumerate_words(n, k)?
                .into_iter()
                .map(|w| WordRow {
                    word: w.to_string(),
                    length: w.len(),
                })
                .collect();
            render_words(&rows, format)
        }
    }
}

fn simple_rows(n: usize) -> Result<Vec<WordRow>> {
    Ok(simple::enumerate_simple(n)?
        .iter()
        .map(|b| WordRow {
            word: b.to_string(),
            length: b.len(),
        })
        .collect())
}

fn divisor_rows(n: usize) -> Result<Vec<WordRow>> {
    Ok(garside::enumerate_divisors(n)?
        .iter()
        .map(|d| WordRow {
            word: d.expand().to_string(),
            length: d.len(),
        })
        .collect())
}

pub fn cmd_divisors(g: &GlobalArgs) -> Result<String> {
    let format = table_format(&g.format, TableFormat::Json)?;
    render_words(&divisor_rows(require_n(g)?)?, format)
}

pub fn cmd_simple(classes: bool, g: &GlobalArgs) -> Result<String> {
    let format = table_format(&g.format, TableFormat::Json)?;
    let n = require_n(g)?;
    if classes {
        render_classes(&class_rows(n)?, format)
    } else {
        render_words(&simple_rows(n)?, format)
    }
}

pub fn cmd_canon(text: &str, g: &GlobalArgs) -> Result<String> {
    let strands = match g.n {
        Some(n) => n,
        None => {
            let max = text
                .split(',')
                .filter_map(|t| t.trim().parse::<usize>().ok())
                .max()
                .unwrap_or(1);
            max + 1
        }
    };
    let w = BraidWord::parse(strands, text)?;
    let mut canon = Canonicalizer::new(g.max_class_size);
    let c = canon.canonical_form(&w)?;
    match g.format.as_deref() {
        None | Some("text") => Ok(format!("{c}\n")),
        Some("json") => {
            let size = canon.equivalence_class(&w)?.len();
            let v = json!({
                "input": w.to_string(),
                "strands": strands,
                "canonical": c.to_string(),
                "length": c.len(),
                "class_size": size,
            });
            Ok(serde_json::to_string_pretty(&v).expect("serialisable") + "\n")
        }
        Some(other) => Err(Error::UnsupportedFormat(other.to_string())),
    }
}

fn witness_json(g: &graph::LevelGraph, w: &graph::KuratowskiWitness) -> serde_json::Value {
    let label = |v: &usize| g.vertices()[*v].to_string();
    json!({
        "kind": w.kind,
        "branch": w.branch.iter().map(label).collect::<Vec<_>>(),
        "paths": w.paths.iter().map(|p| p.iter().map(label).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// Builds the JSON report `{property, claimed, computed, witness?}`.
pub fn graph_check_report(g: &graph::LevelGraph, check: GraphCheck) -> Result<serde_json::Value> {
    let n = g.strands();
    let report = match check {
        GraphCheck::Planarity => {
            let result = graph::is_planar(g);
            let certified = result.certificate_holds(g.undirected());
            let witness = match &result {
                Planarity::Planar(emb) => json!({
                    "embedding": "rotation system",
                    "euler": emb.euler_by_component(g.undirected()),
                    "valid": certified,
                }),
                Planarity::NonPlanar(w) => {
                    let mut v = witness_json(g, w);
                    v["valid"] = json!(certified);
                    v
                }
            };
            json!({
                "property": "planarity",
                "n": n,
                "claimed": n <= 6,
                "computed": result.is_planar(),
                "certificate_valid": certified,
                "witness": witness,
            })
        }
        GraphCheck::Partite => json!({
            "property": "partite",
            "n": n,
            "claimed": true,
            "computed": graph::is_n_partite_by_levels(g),
            "levels": g.level_sizes(),
        }),
        GraphCheck::Connected => json!({
            "property": "connected",
            "n": n,
            "claimed": true,
            "computed": graph::is_connected(g),
        }),
        GraphCheck::K33 => {
            let check = graph::verify_drawn_k33(g)?;
            let mut v = json!({
                "property": "k33",
                "n": n,
                "claimed": true,
                "computed": check.holds,
            });
            if let Some(w) = &check.witness {
                v["witness"] = witness_json(g, w);
            }
            if !check.missing_edges.is_empty() {
                v["missing_edges"] = json!(check.missing_edges);
            }
            if let Some(d) = &check.detail {
                v["detail"] = json!(d);
            }
            v
        }
    };
    Ok(report)
}

/// Runs one parsed invocation. Graph exports go to `--out` when a check is
/// also requested; the report then takes stdout.
pub fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Count { family } => cmd_count(*family, g).map(Output::ok),
        Command::Enumerate { kind } => cmd_enumerate(*kind, g).map(Output::ok),
        Command::Divisors => cmd_divisors(g).map(Output::ok),
        Command::Simple { classes } => cmd_simple(*classes, g).map(Output::ok),
        Command::Canon { word } => cmd_canon(word, g).map(Output::ok),
        Command::Verify { scope, nmax, kmax } => {
            let report = verify::run_verification(&VerifyOptions {
                scope: (*scope).into(),
                n_max: *nmax,
                k_max: *kmax,
                max_class_size: g.max_class_size,
            });
            Ok(Output {
                text: report.to_json(),
                exit_code: i32::from(report.has_failures()),
            })
        }
        Command::Graph { check } => {
            let n = require_n(g)?;
            let format: GraphFormat = g.format.as_deref().unwrap_or("dot").parse()?;
            let mut canon = Canonicalizer::new(g.max_class_size);
            let lg = graph::build_graph_with(n, &mut canon)?;
            let export = graph::export_graph(&lg, format);
            match check {
                None => Ok(Output::ok(export)),
                Some(c) => {
                    if let Some(path) = &g.out {
                        write_file(path, &export)?;
                    }
                    let report = graph_check_report(&lg, *c)?;
                    let holds = report["claimed"] == report["computed"]
                        && report.get("certificate_valid") != Some(&json!(false));
                    Ok(Output {
                        text: serde_json::to_string_pretty(&report).expect("serialisable") + "\n",
                        exit_code: i32::from(!holds),
                    })
                }
            }
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code: 0 on success, 1 on failing claims, 2 on invalid arguments.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return code;
        }
    };
    let result = execute(&cli).and_then(|out| {
        let to_file = cli
            .global
            .out
            .as_ref()
            .filter(|_| !matches!(cli.command, Command::Graph { check: Some(_) }));
        match to_file {
            Some(path) => write_file(path, &out.text)?,
            None => {
                let _ = stdout.write_all(out.text.as_bytes());
            }
        }
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
