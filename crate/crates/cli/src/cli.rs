use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use odlab_core::chromatic::{chromatic_number, ChromaticOptions};
use odlab_core::clique::clique_number;
use odlab_core::gf::{Field, SubspaceGuard};
use odlab_core::graph::generators::by_name;
use odlab_core::graph::{line_digraph, parse_graph, serialize_graph, Graph};
use odlab_core::index_code::{
    coloring_from_index_code, line_coloring_from_index_code, linear_code_from_matrix, optimal_index_code_bruteforce,
    verify_index_code,
};
use odlab_core::params::{build_o, build_oprime, minrank, orthogonality_dimension, ParamOptions, TargetGuard};
use odlab_core::subspace_graphs::{build_s, build_sprime};
use odlab_core::{Error, SearchLimits};

use crate::certificate::{Certificate, CodeSpec, Verdict};
use crate::report::{audit, build_report, Report, ReportOptions, Status};

#[derive(Parser)]
#[command(name = "odlab", version, about = "Orthogonality dimension, minrank, line digraphs and index codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Stop each exhaustive search after this many nodes
    #[arg(long)]
    node_limit: Option<u64>,
    /// Stop each exhaustive search after this many seconds
    #[arg(long)]
    time_limit: Option<f64>,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            max_nodes: self.node_limit,
            time_limit: self.time_limit.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// The underlying graph H of the line digraph
    Od,
    /// The complement of H
    Minrank,
    /// The complement of H
    Ic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "S")]
    S,
    #[value(name = "Sprime")]
    Sprime,
    #[value(name = "O")]
    O,
    #[value(name = "Oprime")]
    Oprime,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact chromatic number with an optimal colouring
    Chi {
        /// DIMACS file, or @NAME for a built-in graph
        graph: String,
        /// Write a certificate to this file
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Exact orthogonality dimension over GF(q)
    Od {
        graph: String,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Exact minrank over GF(q)
    Minrank {
        graph: String,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Line-digraph reduction; prints the produced graph in DIMACS
    Reduce {
        graph: String,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Prints O(F,k), O'(F,k), S(F,n) or S'(F,n) in DIMACS
    SubspaceGraph {
        #[arg(long)]
        field: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Index codes
    IndexCode {
        #[command(subcommand)]
        cmd: IcCmd,
    },
    /// Prints a built-in graph in DIMACS (C5, K4, E3, P4, petersen,
    /// kneser:5:2, double-shift:7, random:8:0.5:42)
    Gen { name: String },
    /// Verification reports
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Re-verifies a certificate, a list of certificates, or a report
    CheckWitness {
        file: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum IcCmd {
    /// Checks that a code is decodable for the graph
    Verify {
        graph: String,
        /// Code as JSON (a code or an index_code certificate)
        #[arg(long)]
        code: PathBuf,
    },
    /// Linear code of minimum length from an optimal representing matrix
    FromMinrank {
        graph: String,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Shortest code of any kind, by exhaustive search (at most 4 receivers)
    Brute {
        graph: String,
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Colouring of G from a code for its complement, or with --line from a
    /// code for the complement of H
    ExtractColoring {
        graph: String,
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        line: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Computes the parameters of G and H and checks the inequalities
    /// relating them, with certificates
    #[command(alias = "paper")]
    All {
        graph: String,
        /// Field size; repeat for several fields
        #[arg(long = "field")]
        fields: Vec<u32>,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        /// Write the JSON report to this file
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

/// How a command ended.
enum Failure {
    /// Bad input or arguments: exit 2.
    Usage(String),
    /// A check did not hold: exit 1.
    Check(String),
    /// Only guard or limit outcomes: exit 3.
    Unknown(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_unknown() {
            Failure::Unknown(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the command line; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(cli.cmd, &mut text, err);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "check failed: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Unknown(m)) => {
            let _ = writeln!(err, "unknown: {m}");
            3
        }
    }
}

fn load_graph(spec: &str, err: &mut dyn Write) -> Result<Graph, Failure> {
    if let Some(name) = spec.strip_prefix('@') {
        return by_name(name).map_err(|e| Failure::Usage(e.to_string()));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
    let parsed = parse_graph(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {spec}: {w}");
    }
    Ok(parsed.graph)
}

fn field(q: u32) -> Result<Field, Failure> {
    Field::new(q).map_err(|e| Failure::Usage(e.to_string()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CmdResult {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: Cmd, out: &mut String, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Cmd::Chi { graph, json, limits } => {
            let g = load_graph(&graph, err)?;
            let r = chromatic_number(&g, &ChromaticOptions { limits: limits.limits(), ..Default::default() })?;
            let (_, clique) = clique_number(&g, &limits.limits())?;
            let _ = writeln!(out, "chromatic number: {}", r.chi);
            let _ = writeln!(out, "clique: {}", labels(&g, &clique));
            let _ = writeln!(out, "coloring:");
            for v in 0..g.n() {
                let _ = writeln!(out, "{} {}", g.label(v), r.coloring.color(v));
            }
            if let Some(p) = json {
                write_json(&p, &Certificate::chromatic(&g, r.chi, &r.coloring, &clique))?;
            }
            Ok(())
        }
        Cmd::Od { graph, field: q, max_k, json, limits } => {
            let g = load_graph(&graph, err)?;
            let opts = ParamOptions { limits: limits.limits(), ..Default::default() };
            match orthogonality_dimension(&g, field(q)?, max_k, &opts)? {
                None => {
                    let _ = writeln!(out, "orthogonality dimension over GF({q}): exceeds {max_k}");
                }
                Some(r) => {
                    let _ = writeln!(out, "orthogonality dimension over GF({q}): {}", r.value);
                    let _ = writeln!(out, "vectors:");
                    for (v, x) in r.witness.vectors.iter().enumerate() {
                        let _ = writeln!(out, "{} {x}", g.label(v));
                    }
                    if let Some(p) = json {
                        write_json(&p, &Certificate::orthogonality_dimension(&g, &r))?;
                    }
                }
            }
            Ok(())
        }
        Cmd::Minrank { graph, field: q, max_k, json, limits } => {
            let g = load_graph(&graph, err)?;
            let opts = ParamOptions { limits: limits.limits(), ..Default::default() };
            match minrank(&g, field(q)?, max_k, &opts)? {
                None => {
                    let _ = writeln!(out, "minrank over GF({q}): exceeds {max_k}");
                }
                Some(r) => {
                    let _ = writeln!(out, "minrank over GF({q}): {}", r.value);
                    let _ = writeln!(out, "matrix:");
                    for row in r.witness.matrix.matrix.row_vecs() {
                        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(out, "{}", cells.join(" "));
                    }
                    if let Some(p) = json {
                        write_json(&p, &Certificate::minrank(&g, &r))?;
                    }
                }
            }
            Ok(())
        }
        Cmd::Reduce { graph, target } => {
            let g = load_graph(&graph, err)?;
            let h = line_digraph(&g).underlying();
            let produced = match target {
                Target::Od => h,
                Target::Minrank | Target::Ic => h.complement(),
            };
            out.push_str(&serialize_graph(&produced));
            Ok(())
        }
        Cmd::SubspaceGraph { field: q, n, kind } => {
            let f = field(q)?;
            let g = match kind {
                Kind::S => build_s(f, n, &SubspaceGuard::default())?.graph,
                Kind::Sprime => build_sprime(f, n, &SubspaceGuard::default())?.graph,
                Kind::O => build_o(f, n, &TargetGuard::default())?.graph,
                Kind::Oprime => build_oprime(f, n, &TargetGuard::default())?.graph,
            };
            out.push_str(&serialize_graph(&g));
            Ok(())
        }
        Cmd::Gen { name } => {
            let g = by_name(&name).map_err(|e| Failure::Usage(e.to_string()))?;
            out.push_str(&serialize_graph(&g));
            Ok(())
        }
        Cmd::IndexCode { cmd } => index_code(cmd, out, err),
        Cmd::Verify { what: VerifyCmd::All { graph, fields, max_k, json, limits } } => {
            let g = load_graph(&graph, err)?;
            let fields = if fields.is_empty() { vec![2] } else { fields };
            for &q in &fields {
                field(q)?;
            }
            let opts = ReportOptions { fields, max_k, limits: limits.limits(), ..Default::default() };
            let report = build_report(&g, &opts)?;
            print_report(&report, out);
            if let Some(p) = json {
                write_json(&p, &report)?;
            }
            if report.summary.fail > 0 {
                Err(Failure::Check(format!("{} check(s) failed", report.summary.fail)))
            } else if report.summary.unknown > 0 {
                Err(Failure::Unknown(format!("{} check(s) unknown", report.summary.unknown)))
            } else {
                Ok(())
            }
        }
        Cmd::CheckWitness { file, limits } => check_witness(&file, &limits.limits(), out),
    }
}

fn labels(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

/// A code file holds either a bare code or an `index_code` certificate.
#[derive(Deserialize)]
#[serde(untagged)]
enum CodeFile {
    Certificate(Certificate),
    Code(CodeSpec),
}

fn load_code(path: &Path) -> Result<odlab_core::index_code::IndexCode, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let parsed: CodeFile =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let spec = match parsed {
        CodeFile::Code(c) => c,
        CodeFile::Certificate(Certificate::IndexCode { code, .. }) => code,
        CodeFile::Certificate(c) => return Err(Failure::Usage(format!("expected a code, found a {} certificate", c.kind()))),
    };
    spec.to_code().map_err(Failure::Usage)
}

fn index_code(cmd: IcCmd, out: &mut String, err: &mut dyn Write) -> CmdResult {
    match cmd {
        IcCmd::Verify { graph, code } => {
            let g = load_graph(&graph, err)?;
            let code = load_code(&code)?;
            if code.receivers() != g.n() {
                return Err(Failure::Usage(format!("code has {} receivers, graph has {} vertices", code.receivers(), g.n())));
            }
            if verify_index_code(&g, &code)? {
                let _ = writeln!(out, "decodable: yes (length {})", code.length());
                Ok(())
            } else {
                let _ = writeln!(out, "decodable: no");
                Err(Failure::Check("some receiver cannot decode".into()))
            }
        }
        IcCmd::FromMinrank { graph, field: q, max_k, json, limits } => {
            let g = load_graph(&graph, err)?;
            let opts = ParamOptions { limits: limits.limits(), ..Default::default() };
            let r = minrank(&g, field(q)?, max_k, &opts)?
                .ok_or_else(|| Failure::Unknown(format!("minrank exceeds {max_k}")))?;
            let code = linear_code_from_matrix(&g, &r.witness.matrix)?;
            let cert = Certificate::index_code(&g, &code);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&cert).expect("serializable"));
            if let Some(p) = json {
                write_json(&p, &cert)?;
            }
            Ok(())
        }
        IcCmd::Brute { graph, alphabet, max_k, limits } => {
            let g = load_graph(&graph, err)?;
            match optimal_index_code_bruteforce(&g, alphabet, max_k, &limits.limits())? {
                Some((k, code)) => {
                    let _ = writeln!(out, "optimal length over {alphabet} symbols: {k}");
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&CodeSpec::from_code(&code)).expect("serializable"));
                }
                None => {
                    let _ = writeln!(out, "optimal length over {alphabet} symbols: exceeds {max_k}");
                }
            }
            Ok(())
        }
        IcCmd::ExtractColoring { graph, code, line, json } => {
            let g = load_graph(&graph, err)?;
            let code = load_code(&code)?;
            let c = if line {
                line_coloring_from_index_code(&g, &code)?
            } else {
                coloring_from_index_code(&g, &code)?
            };
            let _ = writeln!(out, "palette: {}", c.palette());
            let _ = writeln!(out, "colors used: {}", c.used());
            let _ = writeln!(out, "coloring:");
            for v in 0..g.n() {
                let _ = writeln!(out, "{} {}", g.label(v), c.color(v));
            }
            if let Some(p) = json {
                write_json(&p, &Certificate::coloring(&g, &c))?;
            }
            Ok(())
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Unknown => "UNKNOWN",
        Status::Info => "INFO",
    }
}

fn print_report(r: &Report, out: &mut String) {
    let _ = writeln!(out, "G: {} vertices, {} edges", r.graph.vertices, r.graph.edges);
    let _ = writeln!(out, "H: {} vertices, {} edges", r.line_graph.vertices, r.line_graph.edges);
    for c in &r.checks {
        let terms: Vec<String> = c
            .terms
            .iter()
            .map(|t| match t.value {
                Some(v) => format!("{}={v}", t.name),
                None => format!("{}=?", t.name),
            })
            .collect();
        let _ = write!(out, "{} {}: {} [{}]", status_word(c.status), c.id, c.statement, terms.join(", "));
        if let Some(b) = c.bound {
            let _ = write!(out, " bound={b:.6}");
        }
        if let Some(n) = &c.note {
            let _ = write!(out, " ({n})");
        }
        out.push('\n');
    }
    let s = &r.summary;
    let _ = writeln!(out, "summary: {} pass, {} fail, {} unknown, {} info", s.pass, s.fail, s.unknown, s.info);
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WitnessFile {
    Report(Report),
    Many(Vec<Certificate>),
    One(Certificate),
}

fn verdict_line(out: &mut String, i: usize, kind: &str, v: &Verdict) {
    let _ = match v {
        Verdict::Verified => writeln!(out, "certificate {i} ({kind}): verified"),
        Verdict::Rejected(m) => writeln!(out, "certificate {i} ({kind}): REJECTED: {m}"),
        Verdict::Unknown(m) => writeln!(out, "certificate {i} ({kind}): unknown: {m}"),
    };
}

fn check_witness(path: &Path, limits: &SearchLimits, out: &mut String) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let parsed: WitnessFile =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: not a certificate or report: {e}", path.display())))?;
    let (verdicts, problems, kinds) = match parsed {
        WitnessFile::Report(r) => {
            let a = audit(&r, limits);
            let kinds = r.certificates.iter().map(|c| c.kind()).collect::<Vec<_>>();
            (a.certificates, a.problems, kinds)
        }
        WitnessFile::Many(cs) => (cs.iter().map(|c| c.verify(limits)).collect(), Vec::new(), cs.iter().map(|c| c.kind()).collect()),
        WitnessFile::One(c) => (vec![c.verify(limits)], Vec::new(), vec![c.kind()]),
    };
    for (i, (v, k)) in verdicts.iter().zip(&kinds).enumerate() {
        verdict_line(out, i, k, v);
    }
    for p in &problems {
        let _ = writeln!(out, "problem: {p}");
    }
    let rejected = verdicts.iter().filter(|v| matches!(v, Verdict::Rejected(_))).count();
    let unknown = verdicts.iter().filter(|v| matches!(v, Verdict::Unknown(_))).count();
    let _ = writeln!(
        out,
        "{} of {} certificates verified",
        verdicts.iter().filter(|v| **v == Verdict::Verified).count(),
        verdicts.len()
    );
    if rejected > 0 || !problems.is_empty() {
        Err(Failure::Check(format!("{rejected} rejected, {} problem(s)", problems.len())))
    } else if unknown > 0 {
        Err(Failure::Unknown(format!("{unknown} certificate(s) could not be decided")))
    } else {
        Ok(())
    }
}
