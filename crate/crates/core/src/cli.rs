//! Command-line surface: generate Cayley tables, analyze and verify magmas,
//! compute chromatic numbers, color symbolic-family windows, export DOT.
//!
//! Exit codes: 0 on success, 1 when an analysis or verification fails, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::coloring::verify_proper_coloring;
use crate::families::{color_window, window_graph, Family, Window, WindowPart};
use crate::gen::{default_corpus, generate, parse_family_spec, FamilySpec};
use crate::graph::build_power_graph;
use crate::io::{export_dot, serialize_magma, serialize_magma_json, DotOptions};
use crate::magma::{check_power_associativity, Magma};
use crate::oracle::{chromatic_number, greedy_color, max_clique};
use crate::report::{analyze, Verdict};
use crate::{coloring, limits};

#[derive(Parser)]
#[command(
    name = "powergraph",
    version,
    about = "Build, color, and verify power graphs of finite magmas and \
             windows of symbolic infinite families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where a Cayley table comes from: a file or a generated family.
#[derive(Args)]
struct InputArgs {
    /// Cayley table file (text format, or JSON if the extension is .json)
    file: Option<PathBuf>,
    /// Generate the input instead, e.g. 'cyclic(6)' or 'monogenic(3,2)'
    #[arg(long, conflicts_with = "file")]
    spec: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<Magma, String> {
        let spec = match (&self.file, &self.spec) {
            (Some(path), None) => FamilySpec::FromFile(path.clone()),
            (None, Some(text)) => parse_family_spec(text).map_err(|e| e.to_string())?,
            _ => return Err("provide a Cayley table file or --spec".into()),
        };
        generate(&spec).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the Cayley table of a built-in family
    Gen {
        /// Family spec, e.g. 'cyclic(6)', 'product(dihedral(4),cyclic(3))'
        spec: String,
        /// Output file (stdout when omitted)
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Emit JSON instead of the plain-text format
        #[arg(long)]
        json: bool,
    },
    /// Full analysis as JSON: profiles, coloring, invariants, claim verdicts
    Analyze {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the tag coloring of the power graph
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON instead of one line per element
        #[arg(long)]
        json: bool,
    },
    /// Run the claim suite; exit 1 if any claim fails
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Verify every magma of the built-in corpus instead of one input
        #[arg(long, conflicts_with_all = ["file", "spec"])]
        corpus: bool,
    },
    /// Print the chromatic number (exact, or lower..upper beyond the limit)
    Chi {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Color a finite window of a symbolic infinite family (JSON report)
    Window {
        /// Family: z, zxz(k), or free
        #[arg(long)]
        family: String,
        /// Coordinate bound W (|a| <= W, exponents of the free family <= W)
        #[arg(long = "W")]
        coord_bound: u64,
        /// Exponent bound E for power-relation searches
        #[arg(long = "E")]
        exponent_bound: u64,
    },
    /// Export the power graph in DOT format
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the directed graph (arcs x -> x^j) instead of the undirected one
        #[arg(long)]
        directed: bool,
        /// Attach each vertex's tag as a color_tag attribute
        #[arg(long)]
        color: bool,
        /// Output file (stdout when omitted)
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// Entry point for the installed binary.
pub fn run() -> i32 {
    let mut stdout = std::io::stdout().lock();
    run_from(std::env::args_os(), &mut stdout)
}

/// Testable entry point: parses `args` and writes normal output to `out`
/// (diagnostics go to stderr). Returns the process exit code.
pub fn run_from<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, out: &mut impl Write) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

/// Loads an input and insists on power associativity (exit 1 otherwise,
/// since powers — and hence the graph — would be ill-defined).
fn load_power_associative(input: &InputArgs) -> Result<Result<Magma, i32>, String> {
    let m = input.load()?;
    if let Some(w) = check_power_associativity(&m).witness() {
        eprintln!(
            "input is not power-associative: element {} with exponents ({}, {})",
            w.element, w.a, w.b
        );
        return Ok(Err(1));
    }
    Ok(Ok(m))
}

fn execute(command: Command, out: &mut impl Write) -> Result<i32, String> {
    match command {
        Command::Gen { spec, out: path, json } => {
            let parsed = parse_family_spec(&spec).map_err(|e| e.to_string())?;
            let m = generate(&parsed).map_err(|e| e.to_string())?;
            let text = if json { serialize_magma_json(&m) } else { serialize_magma(&m) };
            write_output(&path, &text, out)?;
            Ok(0)
        }
        Command::Analyze { input } => {
            let m = input.load()?;
            let report = analyze(&m);
            let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            writeln!(out, "{json}").map_err(|e| e.to_string())?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Color { input, json } => {
            let m = match load_power_associative(&input)? {
                Ok(m) => m,
                Err(code) => return Ok(code),
            };
            let coloring = coloring::paper_color_finite(&m);
            if json {
                #[derive(Serialize)]
                struct Assignment {
                    element: usize,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    name: Option<String>,
                    tag: crate::coloring::ColorTag,
                }
                #[derive(Serialize)]
                struct ColorReport {
                    size: usize,
                    palette_size: usize,
                    assignments: Vec<Assignment>,
                }
                let assignments = (0..m.size())
                    .map(|g| Assignment {
                        element: g,
                        name: m.names().map(|ns| ns[g].clone()),
                        tag: coloring.get(g).expect("complete coloring"),
                    })
                    .collect();
                let report = ColorReport {
                    size: m.size(),
                    palette_size: coloring.palette_size(),
                    assignments,
                };
                let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
                writeln!(out, "{text}").map_err(|e| e.to_string())?;
            } else {
                for g in 0..m.size() {
                    let tag = coloring.get(g).expect("complete coloring");
                    match m.names() {
                        Some(names) => writeln!(out, "{g}\t{}\t{tag}", names[g]),
                        None => writeln!(out, "{g}\t{tag}"),
                    }
                    .map_err(|e| e.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Verify { input, corpus } => {
            if corpus {
                return verify_corpus(out);
            }
            let m = input.load()?;
            let report = analyze(&m);
            for cv in &report.claims {
                let line = match &cv.verdict {
                    Verdict::Pass => format!("{}: pass", cv.claim),
                    Verdict::Fail { detail } => format!("{}: FAIL — {detail}", cv.claim),
                    Verdict::Skipped { reason } => format!("{}: skipped — {reason}", cv.claim),
                };
                writeln!(out, "{line}").map_err(|e| e.to_string())?;
            }
            let failed = report.failures().len();
            writeln!(
                out,
                "result: {} ({} claims, {failed} failed)",
                if failed == 0 { "pass" } else { "FAIL" },
                report.claims.len()
            )
            .map_err(|e| e.to_string())?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Chi { input } => {
            let m = match load_power_associative(&input)? {
                Ok(m) => m,
                Err(code) => return Ok(code),
            };
            let pg = build_power_graph(&m);
            match chromatic_number(&pg, limits::chi_limit()) {
                Ok(chi) => writeln!(out, "{chi}").map_err(|e| e.to_string())?,
                Err(_) => {
                    let lower = max_clique(&pg, limits::clique_limit())
                        .map(|c| c.len())
                        .unwrap_or(1);
                    let upper = greedy_color(&pg).palette_size;
                    writeln!(out, "{lower}..{upper}").map_err(|e| e.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Window { family, coord_bound, exponent_bound } => {
            let family: Family = family.parse().map_err(|e: crate::families::FamilyError| e.to_string())?;
            let window = Window::new(coord_bound, exponent_bound).map_err(|e| e.to_string())?;
            let data = window_graph(&family, &window).map_err(|e| e.to_string())?;
            let wc = color_window(&family, &window).map_err(|e| e.to_string())?;
            let violations = verify_proper_coloring(&data.graph, &wc.as_coloring())
                .map_err(|e| e.to_string())?;

            #[derive(Serialize)]
            struct WindowAssignment {
                element: crate::families::WindowElement,
                tag: crate::coloring::ColorTag,
            }
            #[derive(Serialize)]
            struct WindowReport<'a> {
                family: Family,
                window: Window,
                element_count: usize,
                edge_count: usize,
                palette_size: usize,
                proper: bool,
                parts: &'a [WindowPart],
                assignments: Vec<WindowAssignment>,
            }
            let report = WindowReport {
                family,
                window,
                element_count: wc.elements.len(),
                edge_count: data.graph.edge_count(),
                palette_size: wc.palette().len(),
                proper: violations.is_empty(),
                parts: &wc.parts,
                assignments: wc
                    .elements
                    .iter()
                    .zip(&wc.tags)
                    .map(|(e, t)| WindowAssignment { element: *e, tag: *t })
                    .collect(),
            };
            let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            writeln!(out, "{text}").map_err(|e| e.to_string())?;
            Ok(if violations.is_empty() { 0 } else { 1 })
        }
        Command::ExportDot { input, directed, color, out: path } => {
            let m = match load_power_associative(&input)? {
                Ok(m) => m,
                Err(code) => return Ok(code),
            };
            let pg = build_power_graph(&m);
            let coloring = color.then(|| coloring::paper_color_finite(&m));
            let labels = m.names().map(<[String]>::to_vec);
            let options = DotOptions {
                directed,
                labels: labels.as_deref(),
                tags: coloring.as_ref(),
            };
            let text = export_dot(&pg, &options);
            write_output(&path, &text, out)?;
            Ok(0)
        }
    }
}

fn verify_corpus(out: &mut impl Write) -> Result<i32, String> {
    let mut failed = 0usize;
    let corpus = default_corpus();
    let total = corpus.len();
    for spec in corpus {
        let m = generate(&spec).map_err(|e| e.to_string())?;
        let report = analyze(&m);
        if report.passed() {
            writeln!(out, "{spec}: pass").map_err(|e| e.to_string())?;
        } else {
            failed += 1;
            let first = report.failures()[0];
            let detail = match &first.verdict {
                Verdict::Fail { detail } => detail.clone(),
                _ => String::new(),
            };
            writeln!(out, "{spec}: FAIL — {}: {detail}", first.claim)
                .map_err(|e| e.to_string())?;
        }
    }
    writeln!(out, "result: {total} magmas, {failed} failed").map_err(|e| e.to_string())?;
    Ok(if failed == 0 { 0 } else { 1 })
}
