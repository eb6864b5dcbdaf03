//! Command-line front door for the chordal toolkit.
//!
//! Reports are JSON lines on standard output; when a graph is the primary
//! output it is printed as a plain graph6 line so commands compose in
//! shell pipelines. Exit codes: 0 success (and, for `oracle`, all rows
//! match), 1 a check or comparison found a violation, 2 usage or
//! parameter error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chordal::{
    augment_edge, construct_b, construct_q, g_formula, is_chordal, parse_graph6, phi,
    random_chordal, reduce_min_degree, simplicial_vertices, to_graph6, verify_tables_jobs,
    ChordalityVerdict, Edge, EditStep, EditTrace, Graph,
};

#[derive(Parser)]
#[command(name = "chordal", version, about = "Chordal graph toolkit", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimum sizes of chordal graphs with order N and minimum
    /// degree K (unrestricted and connected) as one JSON object
    Phi { n: usize, k: usize },
    /// Build a minimum-size graph and print its graph6 line plus metadata
    Construct {
        /// q: minimum size overall; b: minimum size among connected graphs
        family: Family,
        n: usize,
        k: usize,
    },
    /// Read graph6 lines from FILE (or standard input) and print one JSON
    /// report per line
    Check { file: Option<PathBuf> },
    /// Compare the closed formulas against brute-force search for all
    /// orders up to N_MAX
    Oracle {
        n_max: usize,
        /// Which table rows to compute and print
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Worker threads for the search
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Thin a chordal graph to minimum degree exactly P, printing the
    /// result and the deletion trace
    Reduce { graph6: String, p: usize },
    /// Find a vertex whose new edge to X keeps the graph chordal, add it,
    /// and print the result
    Augment { graph6: String, x: usize },
    /// Generate a seeded random chordal graph
    Random {
        n: usize,
        /// Probability of keeping each optional neighbor, in [0, 1]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Q,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Both,
    Unrestricted,
    Connected,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Phi { n, k } => cmd_phi(n, k),
        Command::Construct { family, n, k } => cmd_construct(family, n, k),
        Command::Check { file } => cmd_check(file),
        Command::Oracle { n_max, mode, jobs } => cmd_oracle(n_max, mode, jobs),
        Command::Reduce { graph6, p } => cmd_reduce(&graph6, p),
        Command::Augment { graph6, x } => cmd_augment(&graph6, x),
        Command::Random { n, density, seed } => cmd_random(n, density, seed),
    };
    ExitCode::from(code)
}

/// Prints one output line; exits quietly if the consumer closed the pipe.
fn print_line(line: &str) {
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn emit<T: Serialize>(value: &T) {
    print_line(&serde_json::to_string(value).expect("report serializes"));
}

#[derive(Serialize)]
struct PhiReport {
    phi: usize,
    g: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn cmd_phi(n: usize, k: usize) -> u8 {
    let phi_value = match phi(n, k) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let (g, note) = match g_formula(n, k) {
        Ok(v) => (Some(v), None),
        Err(_) => (None, Some("g requires n ≥ k+2")),
    };
    emit(&PhiReport {
        phi: phi_value,
        g,
        note,
    });
    0
}

#[derive(Serialize)]
struct ConstructReport {
    size: usize,
    family_tag: chordal::FamilyTag,
    designated_cut_edge: Option<(usize, usize)>,
}

fn cmd_construct(family: Family, n: usize, k: usize) -> u8 {
    let built = match family {
        Family::Q => construct_q(n, k),
        Family::B => construct_b(n, k),
    };
    match built {
        Ok(c) => {
            print_line(&to_graph6(&c.graph));
            emit(&ConstructReport {
                size: c.graph.size(),
                family_tag: c.family_tag,
                designated_cut_edge: c.designated_cut_edge.map(endpoints),
            });
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn endpoints(e: Edge) -> (usize, usize) {
    (e.u(), e.v())
}

#[derive(Serialize)]
struct CheckReport {
    order: usize,
    size: usize,
    min_degree: usize,
    is_chordal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    chordal_certificate: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_cycle: Option<Vec<usize>>,
    is_connected: bool,
    cut_edges: Vec<(usize, usize)>,
    simplicial_vertices: Vec<usize>,
    phi_lower_bound: Option<usize>,
    meets_lower_bound: bool,
}

#[derive(Serialize)]
struct LineError {
    line: usize,
    error: String,
}

fn check_graph(g: &Graph) -> CheckReport {
    let (chordal, certificate, witness) = match is_chordal(g) {
        ChordalityVerdict::Chordal(order) => (true, Some(order.into_vec()), None),
        ChordalityVerdict::NotChordal(cycle) => (false, None, Some(cycle)),
    };
    let min_degree = g.min_degree();
    // The bound only applies to chordal graphs with minimum degree >= 1.
    let phi_lower_bound = phi(g.order(), min_degree).ok();
    let meets_lower_bound =
        !chordal || phi_lower_bound.map_or(true, |bound| g.size() >= bound);
    CheckReport {
        order: g.order(),
        size: g.size(),
        min_degree,
        is_chordal: chordal,
        chordal_certificate: certificate,
        witness_cycle: witness,
        is_connected: g.is_connected(),
        cut_edges: g.cut_edges().into_iter().map(endpoints).collect(),
        simplicial_vertices: simplicial_vertices(g),
        phi_lower_bound,
        meets_lower_bound,
    }
}

fn cmd_check(file: Option<PathBuf>) -> u8 {
    let input = match read_input(file) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut code = 0;
    for (i, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => {
                let report = check_graph(&g);
                if !report.meets_lower_bound {
                    code = 1;
                }
                emit(&report);
            }
            Err(e) => {
                emit(&LineError {
                    line: i + 1,
                    error: e.to_string(),
                });
                code = 1;
            }
        }
    }
    code
}

fn read_input(file: Option<PathBuf>) -> std::io::Result<String> {
    match file {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut text = String::new();
            std::io::stdin().lock().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn cmd_oracle(n_max: usize, mode: Mode, jobs: usize) -> u8 {
    let report = match verify_tables_jobs(n_max, jobs.max(1)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut all_match = true;
    for row in &report.rows {
        let wanted = match mode {
            Mode::Both => true,
            Mode::Unrestricted => !row.connected,
            Mode::Connected => row.connected,
        };
        if wanted {
            all_match &= row.matches;
            emit(row);
        }
    }
    u8::from(!all_match)
}

#[derive(Serialize)]
struct StepReport {
    op: &'static str,
    edge: (usize, usize),
}

#[derive(Serialize)]
struct TraceReport {
    initial_size: usize,
    final_size: usize,
    steps: Vec<StepReport>,
}

fn trace_report(trace: &EditTrace) -> TraceReport {
    TraceReport {
        initial_size: trace.initial_size,
        final_size: trace.final_size,
        steps: trace
            .steps
            .iter()
            .map(|s| StepReport {
                op: match s {
                    EditStep::Added(_) => "added",
                    EditStep::Deleted(_) => "deleted",
                },
                edge: endpoints(s.edge()),
            })
            .collect(),
    }
}

fn cmd_reduce(graph6: &str, p: usize) -> u8 {
    let g = match parse_graph6(graph6) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match reduce_min_degree(&g, p) {
        Ok((out, trace)) => {
            print_line(&to_graph6(&out));
            emit(&trace_report(&trace));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct AugmentReport {
    x: usize,
    y: usize,
    added_edge: (usize, usize),
}

fn cmd_augment(graph6: &str, x: usize) -> u8 {
    let g = match parse_graph6(graph6) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match augment_edge(&g, x) {
        Ok(y) => {
            let edge = Edge::new(x, y).expect("augmentation returns a distinct vertex");
            let out = g.add_edge(edge).expect("augmentation returns a nonneighbor");
            print_line(&to_graph6(&out));
            emit(&AugmentReport {
                x,
                y,
                added_edge: endpoints(edge),
            });
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct RandomReport {
    order: usize,
    size: usize,
    seed: u64,
}

fn cmd_random(n: usize, density: f64, seed: u64) -> u8 {
    if n == 0 {
        eprintln!("error: the graph needs at least one vertex");
        return 2;
    }
    let g = random_chordal(n, density, seed);
    print_line(&to_graph6(&g));
    emit(&RandomReport {
        order: n,
        size: g.size(),
        seed,
    });
    0
}
