use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pcube::graph::{direction_edge_count_closed, order_closed, total_edges_closed};
use pcube::invariants::{
    irregularity_closed, irregularity_oracle, mostar_closed, mostar_oracle, wiener_closed,
    wiener_oracle,
};
use pcube::poly::{cube_poly_closed, dist_cube_poly_closed, weight_poly};
use pcube::strings::{count_by_weight, max_weight};
use pcube::verify::{self, Grid, IntRange, Status, Suite};
use pcube::{export, Caps, Error, PCubeGraph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "pcube", version, about = "Exact invariants of Fibonacci p-cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print data only.
    #[arg(long, global = true)]
    quiet: bool,

    /// Graph materialization cap: lengths n >= cap are refused.
    #[arg(long, global = true, default_value_t = Caps::default().graph)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, maximum weight and weight census from closed forms.
    Count {
        #[arg(long)]
        p: usize,
        /// A single length or a range `a..b`.
        #[arg(long)]
        n: IntRange,
    },
    /// Cube, weight or distance cube polynomial.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: IntRange,
    },
    /// Closed forms against brute-force oracles over a grid.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// A single p or a range `a..b`.
        #[arg(long, default_value = "1..3")]
        p: IntRange,
        #[arg(long, alias = "n-range", default_value = "0..10")]
        n: IntRange,
        /// Truncation order of generating functions.
        #[arg(long = "N", default_value_t = 20)]
        order: usize,
    },
    /// Write the materialized graph as DOT or JSON.
    Export {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Wiener index, Mostar index and irregularity, closed form and oracle.
    Indices {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: IntRange,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Cube,
    Weight,
    Distance,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Cubes,
    Gf,
    Indices,
    Irregularity,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Cubes => Suite::Cubes,
            SuiteArg::Gf => Suite::Gf,
            SuiteArg::Indices => Suite::Indices,
            SuiteArg::Irregularity => Suite::Irregularity,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Cap(String),
    Mismatch,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAP)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let caps = Caps { graph: cli.cap, ..Caps::default() };
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Count { p, n } => {
            let records: Vec<Value> = n.iter().map(|n| count_record(*p, n)).collect();
            emit_records(&mut out, cli, &records, &["p", "n", "vertices", "edges", "max_weight"])
        }
        Command::Poly { kind, p, n } => {
            let records: Vec<Value> = n.iter().map(|n| poly_record(*kind, *p, n)).collect();
            match cli.format {
                Format::Csv => poly_csv(&mut out, &records),
                _ => emit_records(&mut out, cli, &records, &[]),
            }
        }
        Command::Indices { p, n } => {
            let records: Vec<Value> = n.iter().map(|n| indices_record(*p, n, &caps)).collect();
            emit_records(&mut out, cli, &records, &[])
        }
        Command::Verify { suite, p, n, order } => {
            let grid = Grid { p: *p, n: *n, order: *order, caps };
            run_verify(&mut out, cli, (*suite).into(), &grid)
        }
        Command::Export { p, n, out: path } => {
            let g = PCubeGraph::build_capped(*p, *n, &caps)?;
            let text = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&export::to_json(&g)).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Dot | Format::Text => export::to_dot(&g),
                Format::Csv => return Err(Failure::Usage("export supports --format dot or json".into())),
            };
            match path {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
    }
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn count_record(p: usize, n: usize) -> Value {
    let census: Vec<Value> = (0..=max_weight(p, n)).map(|w| s(count_by_weight(p, n, w))).collect();
    json!({
        "p": s(p),
        "n": s(n),
        "vertices": s(order_closed(p, n)),
        "edges": s(total_edges_closed(p, n)),
        "max_weight": s(max_weight(p, n)),
        "weight_census": census,
    })
}

fn poly_record(kind: PolyKind, p: usize, n: usize) -> Value {
    let (name, text, body) = match kind {
        PolyKind::Cube => {
            let c = cube_poly_closed(p, n);
            ("cube", c.to_string(), serde_json::to_value(c.to_json()).expect("serializable"))
        }
        PolyKind::Weight => {
            let w = weight_poly(p, n);
            ("weight", w.to_string(), serde_json::to_value(w.to_json()).expect("serializable"))
        }
        PolyKind::Distance => {
            let d = dist_cube_poly_closed(p, n);
            ("distance", d.to_string(), json!({ "terms": d.to_json() }))
        }
    };
    let mut record = json!({ "p": s(p), "n": s(n), "kind": name, "text": text });
    let obj = record.as_object_mut().expect("object");
    for (k, v) in body.as_object().expect("object") {
        obj.insert(k.clone(), v.clone());
    }
    record
}

fn indices_record(p: usize, n: usize, caps: &Caps) -> Value {
    let graph = PCubeGraph::build_capped(p, n, caps).ok();
    let pair = |closed: Option<String>, oracle: Option<String>| json!({ "closed": closed, "oracle": oracle });
    let directions: Vec<Value> = (1..=n)
        .map(|i| {
            let closed = direction_edge_count_closed(p, n, i).expect("i in range").to_string();
            let oracle = graph.as_ref().map(|g| g.direction_edge_count(i).expect("i in range").to_string());
            pair(Some(closed), oracle)
        })
        .collect();
    json!({
        "p": s(p),
        "n": s(n),
        "vertices": s(order_closed(p, n)),
        "edges": s(total_edges_closed(p, n)),
        "wiener": pair(Some(wiener_closed(p, n).to_string()), graph.as_ref().map(|g| wiener_oracle(g).to_string())),
        "mostar": pair(Some(mostar_closed(p, n).to_string()), graph.as_ref().map(|g| mostar_oracle(g).to_string())),
        "irregularity": pair(
            irregularity_closed(p, n).ok().map(|v| v.to_string()),
            graph.as_ref().map(|g| irregularity_oracle(g).to_string()),
        ),
        "edge_counts_by_direction": directions,
    })
}

/// Writes records as JSON (one value, or an array for ranges), CSV over the
/// given scalar columns, or `key: value` text blocks.
fn emit_records(out: &mut impl Write, cli: &Cli, records: &[Value], csv_columns: &[&str]) -> Result<(), Failure> {
    match cli.format {
        Format::Json => {
            let doc = if records.len() == 1 { records[0].clone() } else { Value::Array(records.to_vec()) };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Csv => {
            let columns: Vec<String> = if csv_columns.is_empty() {
                flat_columns(&records[0])
            } else {
                csv_columns.iter().map(|c| c.to_string()).collect()
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&columns).map_err(csv_err)?;
            for r in records {
                let flat = flatten(r);
                let row: Vec<String> = columns
                    .iter()
                    .map(|c| flat.iter().find(|(k, _)| k == c).map(|(_, v)| v.clone()).unwrap_or_default())
                    .collect();
                w.write_record(&row).map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| Failure::Io(e.into_error()))?)?;
        }
        Format::Text | Format::Dot => {
            for (idx, r) in records.iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                for (k, v) in flatten(r) {
                    if cli.quiet {
                        writeln!(out, "{v}")?;
                    } else {
                        writeln!(out, "{k}: {v}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Io(std::io::Error::other(e))
}

fn flat_columns(v: &Value) -> Vec<String> {
    flatten(v).into_iter().map(|(k, _)| k).collect()
}

/// Flattens nested objects to dotted keys; arrays of scalars become space
/// separated lists, arrays of objects get an index in the key.
fn flatten(v: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(map) => {
                for (k, inner) in map {
                    go(&key(k), inner, out);
                }
            }
            Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), joined.join(" ")));
            }
            Value::Array(items) => {
                for (i, inner) in items.iter().enumerate() {
                    go(&format!("{prefix}.{}", i + 1), inner, out);
                }
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    go("", v, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn poly_csv(out: &mut impl Write, records: &[Value]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let bivariate = records[0]["kind"] == "distance";
    if bivariate {
        w.write_record(["p", "n", "k", "d", "value"]).map_err(csv_err)?;
    } else {
        w.write_record(["p", "n", "k", "value"]).map_err(csv_err)?;
    }
    for r in records {
        let (p, n) = (scalar(&r["p"]), scalar(&r["n"]));
        if bivariate {
            for t in r["terms"].as_array().expect("terms") {
                w.write_record([&p, &n, &scalar(&t["k"]), &scalar(&t["d"]), &scalar(&t["value"])])
                    .map_err(csv_err)?;
            }
        } else {
            for (k, c) in r["coeffs"].as_array().expect("coeffs").iter().enumerate() {
                w.write_record([&p, &n, &k.to_string(), &scalar(c)]).map_err(csv_err)?;
            }
        }
    }
    out.write_all(&w.into_inner().map_err(|e| Failure::Io(e.into_error()))?)?;
    Ok(())
}

fn run_verify(out: &mut impl Write, cli: &Cli, suite: Suite, grid: &Grid) -> Result<(), Failure> {
    let checks = verify::run(suite, grid);
    let failed = checks.iter().filter(|c| !c.passed()).count();
    match cli.format {
        Format::Json => {
            let items: Vec<Value> = checks
                .iter()
                .map(|c| {
                    let (status, detail) = match &c.status {
                        Status::Pass => ("pass", None),
                        Status::Fail(d) => ("fail", Some(d.clone())),
                        Status::NotApplicable(d) => ("not-applicable", Some(d.clone())),
                    };
                    json!({
                        "suite": c.suite,
                        "identity": c.name,
                        "status": status,
                        "cases": s(c.cases),
                        "detail": detail,
                        "notes": c.notes,
                    })
                })
                .collect();
            let doc = json!({
                "p": grid.p.to_string(),
                "n": grid.n.to_string(),
                "N": s(grid.order),
                "checks": items,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "identity", "status", "cases", "detail"]).map_err(csv_err)?;
            for c in &checks {
                let (status, detail) = match &c.status {
                    Status::Pass => ("pass", String::new()),
                    Status::Fail(d) => ("fail", d.clone()),
                    Status::NotApplicable(d) => ("not-applicable", d.clone()),
                };
                w.write_record([c.suite, &c.name, status, &c.cases.to_string(), &detail]).map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| Failure::Io(e.into_error()))?)?;
        }
        Format::Text | Format::Dot => {
            if !cli.quiet {
                writeln!(out, "verifying p = {}, n = {}, N = {}", grid.p, grid.n, grid.order)?;
            }
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            if !cli.quiet {
                writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
            }
        }
    }
    if failed > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}
