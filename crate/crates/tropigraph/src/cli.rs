//! The `tropigraph` command line. Graphs travel on stdin/stdout (graph6 or
//! edge list); representations are JSON files.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use tropigraph_core::cover::{fallback_cover, theta, CoverSolution};
use tropigraph_core::generators::{self, CaterpillarSpec, Family};
use tropigraph_core::representations::{
    caterpillar_rep_for, cycle_rep_for, maxplus_from_cover, maxplus_generic_with,
    minplus_from_induced_threshold, minplus_from_intersection, minplus_generic_with,
    multipartite_rep_for, rescale, threshold_1dim, MaxPlusVariant, MinPlusVariant,
};
use tropigraph_core::tropical::parse_rational;
use tropigraph_core::{
    check_conjecture, project_slices, realize_graph, rho, verify, Algebra, ExactLimits, Graph,
    Representation,
};

use crate::demo::{render, Demo};
use crate::formats::{read_graph, to_edge_list, to_graph6};
use crate::json::{
    representation_from_json, representation_to_json, ConjectureDoc, DimensionDoc, SlicesDoc,
    VerificationDoc, SCHEMA,
};

pub const LIMIT_ENV: &str = "TROPIGRAPH_EXACT_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "tropigraph", version, about = "Tropical dot-product representations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Generic,
    Caterpillar,
    Multipartite,
    Cover,
    Intersection,
    Cycle3,
    Threshold,
    Extension,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        /// path, cycle, complete, empty, star, matching, multipartite or caterpillar.
        #[arg(long)]
        family: String,
        /// A count, comma-separated part sizes, or a caterpillar spec such as
        /// `4:1=2,3=1` (spine 4, two leaves on vertex 1, one on vertex 3);
        /// join several caterpillars with `+` for a forest.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Build a representation of the graph on stdin.
    Repr {
        #[arg(long, value_enum, default_value = "min")]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "generic")]
        method: Method,
        /// Threshold as p/q.
        #[arg(long, default_value = "1")]
        t: String,
        /// Spine offset for the caterpillar method (at least 2).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Use the simpler entry sets for the generic method; the max-plus one
        /// fails on non-adjacent pairs.
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        exact_limit: Option<String>,
    },
    /// Both tropical dimensions of the graph on stdin.
    Dim {
        /// `N` (vertices) or `N,M` (vertices, edges) for the exact search.
        #[arg(long)]
        exact_limit: Option<String>,
    },
    /// Check a representation against a graph; exit 1 on violations.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        rep: String,
    },
    /// Per-coordinate threshold slices of a representation.
    Slices {
        #[arg(long)]
        rep: String,
    },
    /// Compare both dimensions on every graph up to isomorphism.
    Conjecture {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long)]
        exact_limit: Option<String>,
    },
    /// Replay an application example: `students` or `funds`.
    Demo { name: String },
}

type CmdResult = Result<i32, String>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    env_limit: Option<String>,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<(), String> {
        match writeln!(self.stdout, "{}", text.trim_end()) {
            // A closed pipe (`| head`) is not an error.
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
            _ => Ok(()),
        }
    }

    fn read_stdin_graph(&mut self) -> Result<Graph, String> {
        let mut text = String::new();
        self.stdin.read_to_string(&mut text).map_err(|e| e.to_string())?;
        read_graph(&text).map_err(|e| format!("reading graph from stdin: {e}"))
    }

    fn limits(&self, flag: &Option<String>) -> Result<ExactLimits, String> {
        match flag.as_ref().or(self.env_limit.as_ref()) {
            Some(text) => parse_limits(text),
            None => Ok(ExactLimits::default()),
        }
    }
}

/// `N` sets the vertex limit of the exact cover search, `N,M` also the edge
/// limit.
pub fn parse_limits(text: &str) -> Result<ExactLimits, String> {
    let bad = || format!("bad exact limit {text:?}: expected N or N,M");
    let mut parts = text.trim().split(',');
    let n: usize = parts.next().and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
    let mut limits = ExactLimits::default().with_cover_vertices(n);
    if let Some(m) = parts.next() {
        limits = limits.with_cover_edges(m.trim().parse().map_err(|_| bad())?);
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(limits)
}

fn count(params: &str) -> Result<usize, String> {
    params
        .trim()
        .parse()
        .map_err(|_| format!("expected a vertex count, found {params:?}"))
}

fn parse_caterpillar(text: &str) -> Result<CaterpillarSpec, String> {
    let (spine, leaves) = text.split_once(':').unwrap_or((text, ""));
    let spine = count(spine)?;
    let leaves = leaves
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (i, c) = item
                .split_once('=')
                .ok_or_else(|| format!("expected spine=count, found {item:?}"))?;
            Ok((count(i)?, count(c)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    CaterpillarSpec::new(spine, leaves).map_err(|e| e.to_string())
}

fn generate(family: &str, params: &str) -> Result<Graph, String> {
    let fam = match family {
        "path" => Family::Path(count(params)?),
        "cycle" => Family::Cycle(count(params)?),
        "complete" => Family::Complete(count(params)?),
        "empty" => Family::Empty(count(params)?),
        "star" => Family::Star(count(params)?),
        "matching" => Family::Matching(count(params)?),
        "multipartite" | "complete_multipartite" => Family::CompleteMultipartite(
            params.split(',').map(count).collect::<Result<_, _>>()?,
        ),
        "caterpillar" => {
            let specs = params
                .split('+')
                .map(parse_caterpillar)
                .collect::<Result<Vec<_>, _>>()?;
            return generators::caterpillar_forest(&specs).map_err(|e| e.to_string());
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    generators::generate(&fam).map_err(|e| e.to_string())
}

fn union_cover(g: &Graph, limits: &ExactLimits, io: &mut Io<'_>) -> Result<CoverSolution, String> {
    match theta(g, limits) {
        Ok(c) => Ok(c),
        Err(tropigraph_core::Error::TooLarge { .. }) => {
            writeln!(io.stderr, "warning: exact cover search over limits; cover may not be minimum")
                .ok();
            Ok(fallback_cover(g, limits))
        }
        Err(e) => Err(e.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn build_repr(
    g: &Graph,
    algebra: Algebra,
    method: Method,
    t: &tropigraph_core::Rational,
    k: usize,
    simple: bool,
    limits: &ExactLimits,
    io: &mut Io<'_>,
) -> Result<Representation, String> {
    let e = |e: tropigraph_core::Error| e.to_string();
    let needs = |wanted: Algebra| {
        if algebra == wanted {
            Ok(())
        } else {
            Err(format!("method {method:?} builds {wanted} representations only").to_lowercase())
        }
    };
    if simple && method != Method::Generic {
        return Err("--simple only applies to the generic method".into());
    }
    let rep = match method {
        Method::Generic => match algebra {
            Algebra::MinPlus => {
                let v = if simple { MinPlusVariant::Simple } else { MinPlusVariant::Balanced };
                return minplus_generic_with(g, t, v).map_err(e);
            }
            Algebra::MaxPlus => {
                let v = if simple { MaxPlusVariant::Simple } else { MaxPlusVariant::Repaired };
                return maxplus_generic_with(g, t, v).map_err(e);
            }
        },
        Method::Threshold => return threshold_1dim(g, t, algebra).map_err(e),
        Method::Extension => {
            needs(Algebra::MinPlus)?;
            return minplus_from_induced_threshold(g, t, limits).map_err(e);
        }
        Method::Caterpillar => {
            needs(Algebra::MinPlus)?;
            caterpillar_rep_for(g, k).map_err(e)?
        }
        Method::Multipartite => {
            needs(Algebra::MinPlus)?;
            multipartite_rep_for(g).map_err(e)?
        }
        Method::Cycle3 => {
            needs(Algebra::MinPlus)?;
            cycle_rep_for(g).map_err(e)?
        }
        Method::Cover => {
            needs(Algebra::MaxPlus)?;
            let cover = union_cover(g, limits, io)?;
            if cover.size() == 0 {
                return threshold_1dim(g, t, algebra).map_err(e);
            }
            maxplus_from_cover(g, &cover).map_err(e)?
        }
        Method::Intersection => {
            needs(Algebra::MinPlus)?;
            let cover = union_cover(&g.complement(), limits, io)?
                .complemented(g.n())
                .map_err(e)?;
            if cover.size() == 0 {
                return threshold_1dim(g, t, algebra).map_err(e);
            }
            minplus_from_intersection(g, &cover).map_err(e)?
        }
    };
    rescale(&rep, t).map_err(e)
}

fn read_file(path: &str, io: &mut Io<'_>) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        io.stdin.read_to_string(&mut text).map_err(|e| e.to_string())?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn read_rep(path: &str, io: &mut Io<'_>) -> Result<Representation, String> {
    representation_from_json(&read_file(path, io)?).map_err(|e| format!("{path}: {e}"))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn execute(cmd: Command, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        Command::Gen { family, params, format } => {
            let g = generate(&family, &params)?;
            let text = match format {
                GraphFormat::Graph6 => to_graph6(&g),
                GraphFormat::Edges => to_edge_list(&g),
            };
            io.print(&text)?;
            Ok(0)
        }
        Command::Repr { algebra, method, t, k, simple, exact_limit } => {
            let limits = io.limits(&exact_limit)?;
            let t = parse_rational(&t).map_err(|e| e.to_string())?;
            let algebra = match algebra {
                AlgebraArg::Min => Algebra::MinPlus,
                AlgebraArg::Max => Algebra::MaxPlus,
            };
            let g = io.read_stdin_graph()?;
            let rep = build_repr(&g, algebra, method, &t, k, simple, &limits, io)?;
            io.print(&representation_to_json(&rep))?;
            Ok(0)
        }
        Command::Dim { exact_limit } => {
            let limits = io.limits(&exact_limit)?;
            let g = io.read_stdin_graph()?;
            let r = rho(&g, &limits).map_err(|e| e.to_string())?;
            io.print(&json(&DimensionDoc::from(&r)))?;
            Ok(0)
        }
        Command::Verify { graph, rep } => {
            let g = read_graph(&read_file(&graph, io)?).map_err(|e| format!("{graph}: {e}"))?;
            let rep = read_rep(&rep, io)?;
            let report = verify(&g, &rep).map_err(|e| e.to_string())?;
            io.print(&json(&VerificationDoc::from(&report)))?;
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Slices { rep } => {
            let rep = read_rep(&rep, io)?;
            let slices = project_slices(&rep);
            let realized = realize_graph(rep.vectors(), rep.threshold(), rep.algebra())
                .map_err(|e| e.to_string())?;
            let (combine, start) = match rep.algebra() {
                Algebra::MaxPlus => ("union", Graph::empty(rep.len())),
                Algebra::MinPlus => ("intersection", Graph::empty(rep.len()).complement()),
            };
            let combined = slices.iter().try_fold(start, |acc, s| match rep.algebra() {
                Algebra::MaxPlus => acc.union(s),
                Algebra::MinPlus => acc.intersection(s),
            });
            let combined = combined.map_err(|e| e.to_string())?;
            let doc = SlicesDoc {
                schema: SCHEMA.into(),
                algebra: rep.algebra().name().into(),
                combine,
                slices: slices.iter().map(to_graph6).collect(),
                realized: to_graph6(&realized),
                combined_matches: combined == realized,
            };
            io.print(&json(&doc))?;
            Ok(if doc.combined_matches { 0 } else { 1 })
        }
        Command::Conjecture { n_max, exact_limit } => {
            let limits = io.limits(&exact_limit)?;
            let report = check_conjecture(n_max, &limits).map_err(|e| e.to_string())?;
            io.print(&json(&ConjectureDoc::from(&report)))?;
            Ok(0)
        }
        Command::Demo { name } => {
            let demo = Demo::by_name(&name)
                .ok_or_else(|| format!("unknown demo {name:?}; try students or funds"))?;
            io.print(&render(demo))?;
            Ok(0)
        }
    }
}

/// Runs the CLI and returns the exit code: 0 success, 1 verification
/// failure, 2 usage or input error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    env_limit: Option<String>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                write!(stdout, "{err}").ok();
                return 0;
            }
            let text = err.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            writeln!(stderr, "{line}").ok();
            return 2;
        }
    };
    let mut io = Io { stdin, stdout, stderr, env_limit };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(msg) => {
            writeln!(io.stderr, "error: {msg}").ok();
            2
        }
    }
}
