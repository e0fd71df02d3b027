//! The `jaco` command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 on success,
//! 2 on invalid input, 3 when the orientation cap is exceeded, 1 on an
//! internal consistency failure.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::brush::{brush_number, minimal_allocation};
use crate::cleaning::{simulate, BrushAllocation};
use crate::digraph::UndirectedGraph;
use crate::error::{JacoError, Result};
use crate::experiments::{hope_bound_experiment, linking_experiment, table1};
use crate::io::{parse_allocation, parse_graph, LoadedGraph};
use crate::jaco::build_jaco;
use crate::oracle::{brute_force_brush_number, census, DEFAULT_CAP_EPS};
use crate::report::{self, Format, OracleSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Md => Format::Md,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "jaco",
    version,
    about = "Brush numbers of finite Jaco graphs J_n(1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: FormatArg,

    /// Largest edge count the exhaustive orientation search will accept
    #[arg(long, global = true, env = "JACO_CAP_EPS", default_value_t = DEFAULT_CAP_EPS)]
    cap_eps: usize,
}

/// Either a Jaco graph size or a graph file (`-` reads stdin).
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "graph"])))]
struct Source {
    /// Use J_n(1)
    #[arg(long)]
    n: Option<usize>,
    /// Digraph JSON file, `-` for stdin
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print J_n(1): degree table, arc list, or JSON export
    Graph {
        /// Vertex count
        #[arg(long)]
        n: usize,
    },
    /// Closed-form brush number of J_n(1)
    Br {
        /// Vertex count
        #[arg(long)]
        n: usize,
    },
    /// Minimal brush allocation of J_n(1) or of an acyclic digraph file
    Allocation(Source),
    /// Run the cleaning process; without --allocation the minimal allocation is used
    Simulate {
        #[command(flatten)]
        source: Source,
        /// JSON array of brushes per vertex, `-` for stdin
        #[arg(long)]
        allocation: Option<PathBuf>,
    },
    /// Cost of every orientation of the underlying graph
    Census(Source),
    /// Brush number by exhaustive orientation search
    Oracle(Source),
    /// Degree and brush table for J_1(1) .. J_max(1)
    Table {
        /// Largest vertex count
        #[arg(long)]
        max_n: usize,
    },
    /// Open-problem data tables
    Experiment {
        #[command(subcommand)]
        kind: Experiment,
    },
}

#[derive(Debug, Subcommand)]
enum Experiment {
    /// b_r(J_n(1)) against b_r of its Hope subgraph
    Hope {
        /// Largest vertex count
        #[arg(long)]
        max_n: usize,
    },
    /// Arcs crossing the cut at the prime Jaconian vertex
    Linking {
        /// Largest vertex count
        #[arg(long)]
        max_n: usize,
    },
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load(source: &Source, stdin: &mut dyn Read) -> Result<LoadedGraph> {
    match (source.n, &source.graph) {
        (Some(n), _) => {
            let g = build_jaco(n)?;
            Ok(LoadedGraph {
                digraph: g.to_digraph(),
                jaco: Some(g),
            })
        }
        (None, Some(path)) => parse_graph(&read_input(path, stdin)?),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn underlying(g: &LoadedGraph) -> Result<UndirectedGraph> {
    match &g.jaco {
        Some(j) => Ok(j.underlying()),
        None => g.digraph.underlying(),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let fmt = Format::from(cli.format);
    match &cli.command {
        Command::Graph { n } => report::render_graph(&build_jaco(*n)?, fmt),
        Command::Br { n } => report::render_brush_report(&brush_number(&build_jaco(*n)?)?, fmt),
        Command::Allocation(source) => {
            let g = load(source, stdin)?;
            report::render_allocation(&minimal_allocation(&g.digraph)?, fmt)
        }
        Command::Simulate { source, allocation } => {
            let g = load(source, stdin)?;
            let alloc = match allocation {
                Some(path) => parse_allocation(&read_input(path, stdin)?)?,
                None => match minimal_allocation(&g.digraph) {
                    Ok(a) => a,
                    // a cyclic graph has no minimal allocation; show where it stalls
                    Err(JacoError::Undoable) => BrushAllocation::saturating(&g.digraph),
                    Err(e) => return Err(e),
                },
            };
            report::render_trace(&simulate(&g.digraph, &alloc)?, fmt)
        }
        Command::Census(source) => {
            let g = underlying(&load(source, stdin)?)?;
            report::render_census(&census(&g, cli.cap_eps)?, fmt)
        }
        Command::Oracle(source) => {
            let g = underlying(&load(source, stdin)?)?;
            let br = brute_force_brush_number(&g, cli.cap_eps)?;
            let summary = OracleSummary {
                nu: g.nu(),
                eps: g.eps(),
                orientations: 1 << g.eps(),
                br,
            };
            report::render_oracle(&summary, fmt)
        }
        Command::Table { max_n } => report::render_table1(&table1(*max_n)?, fmt),
        Command::Experiment {
            kind: Experiment::Hope { max_n },
        } => report::render_hope(&hope_bound_experiment(*max_n)?, fmt),
        Command::Experiment {
            kind: Experiment::Linking { max_n },
        } => report::render_linking(&linking_experiment(*max_n)?, fmt),
    }
}

fn exit_code(e: &JacoError) -> i32 {
    match e {
        JacoError::CapExceeded { .. } => EXIT_CAP,
        JacoError::Consistency(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_INVALID
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INVALID
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
