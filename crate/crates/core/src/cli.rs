//! The `iassl` command line.
//!
//! Exit codes: 0 success or predicate holds, 1 predicate fails or search
//! finds nothing, 2 input error, 3 capacity exceeded.
//!
//! Capacity guards can be raised through the environment:
//!
//! | variable                     | default | flag             |
//! |------------------------------|---------|------------------|
//! | `IASSL_CLASSIFY_LIMIT`       | 16      | `--limit`        |
//! | `IASSL_SEARCH_MAX_GROUND`    | 5       | `--max-ground`   |
//! | `IASSL_SEARCH_MAX_VERTICES`  | 12      | `--max-vertices` |
//!
//! Flags win over the environment.

use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::audit::{run_full_audit, AuditBounds};
use crate::classify::{classify_powerset_with_limit, DEFAULT_CLASSIFY_LIMIT};
use crate::construct::{construct, Mode};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::io::{export_dot, graph_from_json, labeled_graph_from_json};
use crate::search::{
    find_labelings, min_ground_set, sweep_graphs, GroundBounds, SearchOptions, DEFAULT_MAX_GROUND,
    DEFAULT_MAX_VERTICES,
};
use crate::sets::GroundSet;
use crate::verify::{verify, Predicate};

pub const ENV_CLASSIFY_LIMIT: &str = "IASSL_CLASSIFY_LIMIT";
pub const ENV_MAX_GROUND: &str = "IASSL_SEARCH_MAX_GROUND";
pub const ENV_MAX_VERTICES: &str = "IASSL_SEARCH_MAX_VERTICES";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "iassl", version, about = "Integer additive set-sequential labelings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Iassl,
    Iassi,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Iassl => Mode::Iassl,
            ModeArg::Iassi => Mode::Iassi,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split the non-empty subsets of X into sum sets and non-sum-sets.
    Classify {
        #[arg(long)]
        ground_set: String,
        /// Largest |X| accepted.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeled graph against a predicate.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Overrides the ground set stored in the graph file.
        #[arg(long)]
        ground_set: Option<String>,
        #[arg(long, default_value = "iassl")]
        predicate: Predicate,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a graph with an IASSL or IASSI over X.
    Construct {
        #[arg(long)]
        ground_set: String,
        #[arg(long, value_enum, default_value = "iassl")]
        mode: ModeArg,
        /// Graph file; the trace goes next to it as `<stem>.trace.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exhaustively search for labelings of an unlabeled graph.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// Without it, the smallest ground set within --xsize/--xmax is searched for.
        #[arg(long)]
        ground_set: Option<String>,
        #[arg(long, default_value = "iassl")]
        predicate: Predicate,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        cap: Option<NonZeroUsize>,
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        parallel: bool,
        /// Turn the pruning rules off (for comparison only).
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        max_ground: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long, default_value_t = 3)]
        xsize: usize,
        #[arg(long, default_value_t = 4)]
        xmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide a predicate for a graph family against every ground set in range.
    Sweep {
        #[arg(long)]
        family: Family,
        /// Vertex counts, as `3..6` or `4`.
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 4)]
        xmax: u32,
        #[arg(long, default_value_t = 3)]
        xsize: usize,
        #[arg(long, default_value = "iassl")]
        predicate: Predicate,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        max_ground: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit the structural claims at desk scale.
    Audit {
        #[arg(long, default_value_t = 4)]
        xmax: u32,
        #[arg(long, default_value_t = 3)]
        xsize: usize,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a labeled graph as Graphviz DOT.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ground_set: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Results go to `out` unless a path was given, diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Capacity { .. } => EXIT_CAPACITY,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn env_usize(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Domain(format!("{name} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn guard(flag: Option<usize>, env: &str, default: usize) -> Result<usize> {
    Ok(match flag {
        Some(v) => v,
        None => env_usize(env)?.unwrap_or(default),
    })
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

/// JSON with object keys sorted, so output does not depend on field order.
fn stable_json<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(if pretty { serde_json::to_string_pretty(&v)? } else { serde_json::to_string(&v)? })
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Domain(format!("expected a vertex count or range like 3..6, got {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn trace_path(graph_path: &Path) -> PathBuf {
    let stem = graph_path.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned());
    graph_path.with_file_name(format!("{stem}.trace.json"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Classify { ground_set, limit, out: path } => {
            let x = GroundSet::parse(&ground_set)?;
            let limit = guard(limit, ENV_CLASSIFY_LIMIT, DEFAULT_CLASSIFY_LIMIT)?;
            let class = classify_powerset_with_limit(&x, limit)?;
            emit(&(stable_json(&class, true)? + "\n"), path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            ground_set,
            predicate,
            out: path,
        } => {
            let x = ground_set.as_deref().map(GroundSet::parse).transpose()?;
            let g = labeled_graph_from_json(&read(&graph)?, x)?;
            let report = verify(&g)?;
            emit(&(stable_json(&report, true)? + "\n"), path.as_deref(), out)?;
            Ok(if report.holds(predicate) { EXIT_OK } else { EXIT_NO })
        }
        Command::Construct {
            ground_set,
            mode,
            out: path,
            dot,
        } => {
            let x = GroundSet::parse(&ground_set)?;
            let trace = construct(&x, mode.into())?;
            let trace_json = stable_json(&trace, true)? + "\n";
            match path {
                Some(p) => {
                    fs::write(&p, stable_json(&trace.graph, true)? + "\n")?;
                    fs::write(trace_path(&p), &trace_json)?;
                }
                None => out.write_all(trace_json.as_bytes())?,
            }
            if let Some(d) = dot {
                fs::write(d, export_dot(&trace.graph)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            graph,
            ground_set,
            predicate,
            all,
            cap,
            symmetry,
            parallel,
            no_prune,
            max_ground,
            max_vertices,
            xsize,
            xmax,
            out: path,
        } => {
            let g = graph_from_json(&read(&graph)?)?;
            let opts = SearchOptions {
                predicate,
                enumerate_all: all,
                cap,
                pruning: !no_prune,
                symmetry,
                parallel,
                max_ground: guard(max_ground, ENV_MAX_GROUND, DEFAULT_MAX_GROUND)?,
                max_vertices: guard(max_vertices, ENV_MAX_VERTICES, DEFAULT_MAX_VERTICES)?,
            };
            let x = match ground_set {
                Some(s) => GroundSet::parse(&s)?,
                None => {
                    let bounds = GroundBounds {
                        max_size: xsize,
                        max_value: xmax,
                    };
                    match min_ground_set(&g, bounds, &opts)? {
                        Some(x) => x,
                        None => {
                            let none = serde_json::json!({ "ground": null, "predicate": predicate, "bounds": bounds });
                            emit(&(stable_json(&none, true)? + "\n"), path.as_deref(), out)?;
                            return Ok(EXIT_NO);
                        }
                    }
                }
            };
            let result = find_labelings(&g, &x, &opts)?;
            #[derive(Serialize)]
            struct Output<'a> {
                ground: &'a GroundSet,
                predicate: Predicate,
                #[serde(flatten)]
                result: &'a crate::search::SearchResult,
            }
            let record = Output {
                ground: &x,
                predicate,
                result: &result,
            };
            emit(&(stable_json(&record, true)? + "\n"), path.as_deref(), out)?;
            Ok(if result.found() { EXIT_OK } else { EXIT_NO })
        }
        Command::Sweep {
            family,
            n,
            xmax,
            xsize,
            predicate,
            parallel,
            max_ground,
            max_vertices,
            out: path,
        } => {
            let orders = parse_range(&n)?;
            let opts = SearchOptions {
                predicate,
                parallel,
                max_ground: guard(max_ground, ENV_MAX_GROUND, DEFAULT_MAX_GROUND)?,
                max_vertices: guard(max_vertices, ENV_MAX_VERTICES, DEFAULT_MAX_VERTICES)?,
                ..SearchOptions::default()
            };
            let bounds = GroundBounds {
                max_size: xsize,
                max_value: xmax,
            };
            let rows = sweep_graphs(family, orders, bounds, &opts)?;
            let mut text = String::new();
            for r in &rows {
                text.push_str(&stable_json(r, false)?);
                text.push('\n');
            }
            emit(&text, path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Audit { xmax, xsize, nmax, out: path } => {
            let report = run_full_audit(AuditBounds { xmax, xsize, nmax })?;
            emit(&(stable_json(&report, true)? + "\n"), path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::ExportDot {
            graph,
            ground_set,
            out: path,
        } => {
            let x = ground_set.as_deref().map(GroundSet::parse).transpose()?;
            let g = labeled_graph_from_json(&read(&graph)?, x)?;
            emit(&export_dot(&g)?, path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), 3..=6);
        assert_eq!(parse_range("3..=6").unwrap(), 3..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn trace_sits_beside_graph() {
        assert_eq!(trace_path(Path::new("out/g.json")), Path::new("out/g.trace.json"));
    }

    #[test]
    fn classify_to_stdout() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["iassl", "classify", "--ground-set", "0,1,2"], &mut out, &mut err);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["rho"], 4);
        assert_eq!(v["rho_prime"], 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["iassl", "classify", "--bogus"], &mut out, &mut err), EXIT_INPUT);
        assert_eq!(run(["iassl", "classify", "--ground-set", "0,1,1"], &mut out, &mut err), EXIT_INPUT);
        assert_eq!(run(["iassl", "--version"], &mut out, &mut err), EXIT_OK);
    }
}
