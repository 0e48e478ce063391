//! Command-line front end. Every subcommand prints one JSON report
//!
//! ```json
//! {"command": "...", "inputs": {...}, "result": ..., "version": "0.1.0"}
//! ```
//!
//! or, with `--pretty`, the same data as aligned text. Exit codes: 0 on
//! success, 1 when a domain precondition fails, 2 on usage errors, 3 when
//! `--max-candidates` is exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::extensions::{tilde_ext_contains, ExtEngine};
use crate::interpolate::{interpolate_constant, interpolate_general, interpolate_shifted};
use crate::kottwitz::{basic_element, KottwitzQuery};
use crate::minute::{fully_hn_gl, fully_hn_type_a, weakly_fully_hn_gl, weakly_fully_hn_type_a, MinuteQueryGL, MinuteQueryTypeA};
use crate::polygon::{parse, HNPolygon};
use crate::rational::is_integer;
use crate::strata::{stratification_report, stratum_status, StrataConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hn-strata", version, about = "Exact HN-polygon combinatorics for GL(n)")]
struct Cli {
    /// Render aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form, rank, degree and dual of a polygon; with --q also
    /// the direct sum and the dominance relations between the two.
    Polygon {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: Option<String>,
    },
    /// Enumerate B(GL_n, k, delta).
    Kottwitz {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Decide the partition condition for a in ~Ext(c, d) and print a witness.
    TildeExt {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
    },
    /// Enumerate Ext(c, d).
    ExtEnum {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Decide whether a is the polygon of an extension of O(c) by O(d).
    ExtTest {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Find b with integral breakpoints, c <= b <= a and |b| = m.
    Interpolate {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "general")]
        mode: InterpolateMode,
        /// Shift for --mode shifted.
        #[arg(long)]
        shift: Option<usize>,
    },
    /// Newton strata for (GL_n, (1^r, 0^(n-r)), b basic).
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Classify a single stratum.
        #[arg(long)]
        nu: Option<String>,
        /// Print only the summary counts.
        #[arg(long)]
        summary: bool,
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Minute criteria for (weakly) fully HN-decomposable pairs.
    Minute {
        #[arg(long, value_enum)]
        mode: MinuteMode,
        #[arg(long)]
        n: usize,
        /// Dominant integral cocharacter for --mode gl, e.g. "(1^(3),0^(3))".
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        iprime: Option<usize>,
        #[arg(long, value_enum)]
        which: Which,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum InterpolateMode {
    General,
    Constant,
    Shifted,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
enum MinuteMode {
    #[value(name = "gl")]
    #[serde(rename = "gl")]
    Gl,
    #[value(name = "typeA")]
    #[serde(rename = "typeA")]
    TypeA,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Which {
    Full,
    Weak,
}

/// The serialized output of one invocation.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
}

/// Runs the CLI on `argv` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok(report) => {
            let text = if cli.pretty { render_pretty(&report) } else { serde_json::to_string(&report).expect("report serializes") };
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CandidateLimit { .. } => EXIT_LIMIT,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn report(command: &str, inputs: Value, result: Value) -> Report {
    Report { command: command.into(), inputs, result, version: env!("CARGO_PKG_VERSION").into() }
}

fn polygon_info(p: &HNPolygon) -> Value {
    json!({
        "polygon": p,
        "rank": p.rank(),
        "degree": p.degree().to_string(),
        "dual": p.dual(),
        "integral_breakpoints": p.has_integral_breakpoints(),
        "breakpoints": p.breakpoints(),
    })
}

fn polygon_list(list: &[HNPolygon]) -> Value {
    json!({ "count": list.len(), "polygons": list })
}

fn execute(command: Command) -> Result<Report, Error> {
    match command {
        Command::Polygon { p, q } => {
            let p = parse(&p)?;
            let mut result = json!({ "p": polygon_info(&p) });
            let mut inputs = json!({ "p": p });
            if let Some(q) = q {
                let q = parse(&q)?;
                result["q"] = polygon_info(&q);
                result["direct_sum"] = to_value(p.direct_sum(&q));
                if p.rank() == q.rank() {
                    result["p_leq_q"] = json!(p.leq_dominance(&q)?);
                    result["q_leq_p"] = json!(q.leq_dominance(&p)?);
                }
                result["p_strongly_dominates_q"] = json!(p.strongly_slopewise_dominates(&q));
                inputs["q"] = to_value(&q);
            }
            Ok(report("polygon", inputs, result))
        }
        Command::Kottwitz { n, k, delta, max_candidates } => {
            let q = KottwitzQuery::new(n, k, parse(&delta)?)?;
            let mut engine = ExtEngine::with_limit(max_candidates);
            let set = engine.kottwitz_set(&q)?;
            let mut result = polygon_list(&set);
            result["basic"] = match basic_element(&q) {
                Ok(b) if !set.is_empty() => to_value(b),
                _ => Value::Null,
            };
            Ok(report("kottwitz", to_value(&q), result))
        }
        Command::TildeExt { a, c, d } => {
            let (a, c, d) = (parse(&a)?, parse(&c)?, parse(&d)?);
            let witness = tilde_ext_contains(&a, &c, &d)?;
            let result = json!({ "contains": witness.is_some(), "witness": witness });
            Ok(report("tilde-ext", json!({ "a": a, "c": c, "d": d }), result))
        }
        Command::ExtEnum { c, d, max_candidates } => {
            let (c, d) = (parse(&c)?, parse(&d)?);
            let set = ExtEngine::with_limit(max_candidates).ext_enumerate(&c, &d)?;
            Ok(report("ext-enum", json!({ "c": c, "d": d }), polygon_list(&set)))
        }
        Command::ExtTest { a, c, d, max_candidates } => {
            let (a, c, d) = (parse(&a)?, parse(&c)?, parse(&d)?);
            let contains = ExtEngine::with_limit(max_candidates).ext_contains(&a, &c, &d)?;
            let tilde = tilde_ext_contains(&a, &c, &d)?.is_some();
            let result = json!({ "contains": contains, "tilde_contains": tilde });
            Ok(report("ext-test", json!({ "a": a, "c": c, "d": d }), result))
        }
        Command::Interpolate { a, c, m, mode, shift } => {
            let (a, c) = (parse(&a)?, parse(&c)?);
            let mb = BigInt::from(m);
            let b = match mode {
                InterpolateMode::General => interpolate_general(&a, &c, &mb)?,
                InterpolateMode::Constant => interpolate_constant(&a, &c, &mb)?,
                InterpolateMode::Shifted => {
                    let shift = shift.ok_or_else(|| Error::Precondition("--mode shifted needs --shift".into()))?;
                    interpolate_shifted(&a, &c, shift, &mb)?
                }
            };
            let inputs = json!({ "a": a, "c": c, "m": m, "mode": mode, "shift": shift });
            Ok(report("interpolate", inputs, json!({ "b": b })))
        }
        Command::Strata { n, r, nu, summary, max_candidates } => {
            let cfg = StrataConfig::new(n, r)?;
            let mut engine = ExtEngine::with_limit(max_candidates);
            let mut inputs = json!({ "n": n, "r": r, "summary": summary });
            let result = match nu {
                Some(nu) => {
                    let nu = parse(&nu)?;
                    inputs["nu"] = to_value(&nu);
                    to_value(stratum_status(&cfg, &nu, &mut engine)?)
                }
                None => {
                    let rep = stratification_report(&cfg, &mut engine)?;
                    if summary {
                        to_value(rep.summary)
                    } else {
                        to_value(rep)
                    }
                }
            };
            Ok(report("strata", inputs, result))
        }
        Command::Minute { mode, n, mu, i, iprime, which } => {
            let (inputs, outcome) = match mode {
                MinuteMode::Gl => {
                    let text = mu.ok_or_else(|| Error::Precondition("--mode gl needs --mu".into()))?;
                    let q = MinuteQueryGL::new(integer_coords(&text, n)?)?;
                    let outcome = match which {
                        Which::Full => fully_hn_gl(&q),
                        Which::Weak => weakly_fully_hn_gl(&q),
                    };
                    (json!({ "mode": mode, "n": n, "mu": q.mu, "which": which }), outcome)
                }
                MinuteMode::TypeA => {
                    let i = i.ok_or_else(|| Error::Precondition("--mode typeA needs --i".into()))?;
                    let q = MinuteQueryTypeA::new(n, i, iprime.unwrap_or(0))?;
                    let outcome = match which {
                        Which::Full => fully_hn_type_a(&q),
                        Which::Weak => weakly_fully_hn_type_a(&q),
                    };
                    (json!({ "mode": mode, "n": n, "i": q.i, "iprime": q.i_prime, "which": which }), outcome)
                }
            };
            Ok(report("minute", inputs, to_value(outcome)))
        }
    }
}

fn integer_coords(text: &str, n: usize) -> Result<Vec<i64>, Error> {
    let p = parse(text)?;
    if p.rank() != n {
        return Err(Error::RankMismatch { expected: n, found: p.rank() });
    }
    p.coords()
        .iter()
        .map(|x| {
            if !is_integer(x) {
                return Err(Error::Precondition(format!("mu must have integer coordinates, found {x}")));
            }
            i64::try_from(x.to_integer()).map_err(|_| Error::Precondition("coordinate too large".into()))
        })
        .collect()
}

/// Aligned text rendering of a report.
pub fn render_pretty(report: &Report) -> String {
    let mut out = format!("{} (hn-strata {})\n", report.command, report.version);
    render_value(&mut out, "inputs", &report.inputs, 0);
    render_value(&mut out, "result", &report.result, 0);
    out.trim_end().to_string()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()) && items.len() <= 8,
        _ => true,
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            let width = map.keys().filter(|k| is_scalar(&map[*k])).map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in map {
                if is_scalar(x) {
                    out.push_str(&format!("{pad}  {k:<width$}  {}\n", scalar(x)));
                }
            }
            for (k, x) in map {
                if !is_scalar(x) {
                    render_value(out, k, x, indent + 2);
                }
            }
        }
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            out.push_str(&format!("{pad}{key}:\n"));
            render_table(out, items, indent + 2);
        }
        Value::Array(items) if !is_scalar(v) => {
            out.push_str(&format!("{pad}{key}: ({} items)\n", items.len()));
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{pad}  {:>4}  {}\n", i + 1, scalar(x)));
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
    }
}

fn render_table(out: &mut String, rows: &[Value], indent: usize) {
    let pad = " ".repeat(indent);
    let mut columns: Vec<String> = Vec::new();
    for row in rows {
        for k in row.as_object().expect("object rows").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cell = |row: &Value, col: &str| match row.get(col) {
        Some(Value::Object(m)) => m.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect::<Vec<_>>().join(" "),
        Some(v) => scalar(v),
        None => String::new(),
    };
    let widths: Vec<usize> = columns.iter().map(|c| rows.iter().map(|r| cell(r, c).len()).max().unwrap_or(0).max(c.len())).collect();
    let line = |cells: Vec<String>| {
        let joined: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{pad}{}\n", joined.join("  ").trim_end())
    };
    out.push_str(&line(columns.clone()));
    for row in rows {
        out.push_str(&line(columns.iter().map(|c| cell(row, c)).collect()));
    }
}
