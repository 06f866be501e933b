//! Command-line front end.
//!
//! `falkkit <subcommand> <file> [--json] [--method=comb|rank|both]`
//!
//! Exit codes: 0 success, 1 computation refused (hypotheses not met), 2 input
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::falk::{self, FalkReport};
use crate::gain_graph::GainGraph;
use crate::hypotheses::{Hypothesis, ValidationReport};
use crate::patterns::{self, Census, PatternCounts, Triangle};
use crate::realization;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "falkkit",
    version,
    about = "Falk invariant of gain-graphic arrangements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the hypotheses H1-H5
    Check(Common),
    /// List the dependent 3-sets with their kinds
    Triangles(Common),
    /// Census of distinguished subgraphs
    Counts(Common),
    /// Compute phi_3
    Phi3(Phi3Args),
    /// Print the hyperplane arrangement
    Realize(Common),
    /// Size and rank of the F3 spanning set
    #[command(name = "rank-f3")]
    RankF3(Common),
    /// Full report from both routes
    Report(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Graph file
    pub file: PathBuf,
    /// Emit JSON on stdout
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Phi3Args {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Comb,
    Rank,
    Both,
}

/// Parses `argv` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "falkkit: {e}");
            EXIT_INPUT
        }
    }
}

fn load(path: &PathBuf) -> Result<GainGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    GainGraph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json value")
    );
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let common = match cmd {
        Command::Check(c)
        | Command::Triangles(c)
        | Command::Counts(c)
        | Command::Realize(c)
        | Command::RankF3(c)
        | Command::Report(c) => c,
        Command::Phi3(p) => &p.common,
    };
    let g = load(&common.file)?;
    let json = common.json;
    let needs_atlas = match cmd {
        Command::Counts(_) | Command::Report(_) => true,
        Command::Phi3(p) => p.method != Method::Rank,
        _ => false,
    };
    if needs_atlas {
        if let Err(e) = patterns::atlas_self_test() {
            let _ = writeln!(err, "falkkit: pattern atlas self-test failed: {e}");
            return Ok(EXIT_REFUSED);
        }
    }
    let w = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };

    match cmd {
        Command::Check(_) => {
            let r = g.validate();
            if json {
                emit(
                    out,
                    &json!({ "n": g.num_edges(), "hypotheses": hypotheses_json(&r) }),
                );
            } else {
                for h in Hypothesis::ALL {
                    let v = r.verdict(h);
                    let status = if v.passed { "pass" } else { "FAIL" };
                    let mut line = format!("{h} {status}  {}", h.description());
                    if !v.passed {
                        let ws: Vec<String> = v.witnesses.iter().map(|s| set_string(s)).collect();
                        line.push_str(&format!("  witnesses: {}", ws.join(" ")));
                    }
                    w(out, line);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Triangles(_) => {
            let ts = patterns::triangles(&g);
            if json {
                emit(
                    out,
                    &json!({ "n": g.num_edges(), "triangles": triangles_json(&ts) }),
                );
            } else {
                for t in &ts {
                    w(out, format!("{} {}", set_string(&t.edge_ids), t.kind));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Counts(_) => match patterns::census(&g) {
            Ok(c) => {
                if json {
                    emit(
                        out,
                        &json!({
                            "n": g.num_edges(),
                            "counts": counts_json(&c.counts),
                            "occurrences": occurrences_json(&c),
                        }),
                    );
                } else {
                    for (k, v) in counts_pairs(&c.counts) {
                        w(out, format!("{k} = {v}"));
                    }
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                let _ = writeln!(err, "falkkit: {e}");
                Ok(EXIT_REFUSED)
            }
        },
        Command::Phi3(p) => {
            let mut code = EXIT_OK;
            let comb = if p.method != Method::Rank {
                match patterns::count_patterns(&g) {
                    Ok(c) => Some(falk::phi3_combinatorial(&c)),
                    Err(e) => {
                        let _ = writeln!(err, "falkkit: combinatorial: {e}");
                        code = EXIT_REFUSED;
                        None
                    }
                }
            } else {
                None
            };
            let rank = if p.method != Method::Comb {
                match falk::phi3_rank(&g) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        let _ = writeln!(err, "falkkit: rank: {e}");
                        code = EXIT_REFUSED;
                        None
                    }
                }
            } else {
                None
            };
            let agree = match (comb, rank) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            if json {
                emit(
                    out,
                    &json!({
                        "n": g.num_edges(),
                        "phi3": { "comb": comb, "rank": rank, "agree": agree },
                    }),
                );
            } else {
                if let Some(v) = comb {
                    w(out, format!("combinatorial: {v}"));
                }
                if let Some(v) = rank {
                    w(out, format!("rank: {v}"));
                }
                if let Some(a) = agree {
                    w(out, format!("agree: {a}"));
                }
            }
            Ok(code)
        }
        Command::Realize(_) => match realization::arrangement(&g) {
            Ok(hs) => {
                if json {
                    emit(out, &json!({ "n": g.num_edges(), "hyperplanes": hs }));
                } else {
                    for h in &hs {
                        w(out, h.to_line());
                    }
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                let _ = writeln!(err, "falkkit: {e}");
                Ok(EXIT_REFUSED)
            }
        },
        Command::RankF3(_) => match falk::rank_data(&g) {
            Ok(r) => {
                if json {
                    emit(
                        out,
                        &json!({
                            "n": g.num_edges(),
                            "f3": { "size": r.span_f3_size, "rank": r.span_f3_rank },
                        }),
                    );
                } else {
                    w(
                        out,
                        format!("|F3| = {}, rank = {}", r.span_f3_size, r.span_f3_rank),
                    );
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                let _ = writeln!(err, "falkkit: {e}");
                Ok(EXIT_REFUSED)
            }
        },
        Command::Report(_) => {
            let r = falk::verify(&g);
            if json {
                emit(out, &report_json(&g, &r));
            } else {
                print_report(out, &r);
            }
            Ok(EXIT_OK)
        }
    }
}

fn set_string(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn counts_pairs(c: &PatternCounts) -> [(&'static str, u64); 11] {
    [
        ("k3", c.k3),
        ("k4", c.k4),
        ("d3", c.d3),
        ("d21", c.d21),
        ("k22", c.k22),
        ("k33", c.k33),
        ("gcirc", c.gcirc),
        ("d31", c.d31),
        ("g1", c.g1),
        ("g2", c.g2),
        ("theta", c.theta),
    ]
}

pub fn counts_json(c: &PatternCounts) -> Value {
    let map: serde_json::Map<String, Value> = counts_pairs(c)
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    Value::Object(map)
}

fn occurrences_json(c: &Census) -> Value {
    let map: serde_json::Map<String, Value> = c
        .occurrences
        .iter()
        .map(|(p, occ)| {
            let sets: Vec<&Vec<usize>> = occ.iter().map(|o| &o.edge_ids).collect();
            (p.name().to_string(), json!(sets))
        })
        .collect();
    Value::Object(map)
}

pub fn triangles_json(ts: &[Triangle]) -> Value {
    json!(ts
        .iter()
        .map(|t| json!({ "edges": t.edge_ids, "kind": t.kind.to_string() }))
        .collect::<Vec<_>>())
}

pub fn hypotheses_json(r: &ValidationReport) -> Value {
    let map: serde_json::Map<String, Value> = Hypothesis::ALL
        .into_iter()
        .map(|h| {
            let v = r.verdict(h);
            (
                h.to_string(),
                json!({ "passed": v.passed, "witnesses": v.witnesses }),
            )
        })
        .collect();
    Value::Object(map)
}

pub fn report_json(g: &GainGraph, r: &FalkReport) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!({ "id": e.id, "tail": e.tail, "head": e.head, "gain": e.gain.to_string() }))
        .collect();
    json!({
        "n": r.n,
        "vertices": r.num_vertices,
        "edges": edges,
        "triangles": triangles_json(&r.triangles),
        "counts": r.counts.as_ref().map(counts_json),
        "phi3": {
            "comb": r.phi3_combinatorial,
            "rank": r.phi3_rank,
            "agree": r.agree,
        },
        "dims": {
            "I2": r.dim_i2,
            "A2": r.dim_a2,
            "F3_size": r.span_f3_size,
            "F3_rank": r.span_f3_rank,
            "I3_2": r.dim_i3_2,
        },
        "hypotheses": hypotheses_json(&r.hypotheses),
        "withheld": r.withheld,
    })
}

fn print_report(out: &mut dyn Write, r: &FalkReport) {
    let mut lines = vec![
        format!("edges: {}  vertices: {}", r.n, r.num_vertices),
        format!("triangles: {}", r.num_triangles),
    ];
    let failing = r.hypotheses.failing();
    lines.push(if failing.is_empty() {
        "hypotheses: H1-H5 pass".to_string()
    } else {
        let f: Vec<String> = failing.iter().map(Hypothesis::to_string).collect();
        format!("hypotheses: failing {}", f.join(", "))
    });
    lines.push(format!(
        "dim I2 = {}  dim A2 = {}  |F3| = {}  rank F3 = {}  dim I3_2 = {}",
        opt(r.dim_i2),
        opt(r.dim_a2),
        opt(r.span_f3_size),
        opt(r.span_f3_rank),
        opt(r.dim_i3_2)
    ));
    if let Some(c) = &r.counts {
        let parts: Vec<String> = counts_pairs(c)
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        lines.push(format!("counts: {}", parts.join(" ")));
    }
    lines.push(format!("combinatorial: {}", opt(r.phi3_combinatorial)));
    lines.push(format!("rank: {}", opt(r.phi3_rank)));
    lines.push(format!("agree: {}", opt(r.agree)));
    for w in &r.withheld {
        lines.push(format!("withheld: {w}"));
    }
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
}
