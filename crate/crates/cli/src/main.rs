//! `myc-sym`: generalized Mycielskians and their symmetry invariants from the
//! command line. Reports go to stdout as JSON; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error,
//! 3 a search cap was hit.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use myc_sym::harness::{self, CheckId, Verdict};
use myc_sym::invariants::{
    cost_of_2_distinguishing_with, determining_number_with, distinguishing_number_with, Limits,
};
use myc_sym::{
    automorphism_group, minimum_twin_cover, mycielskian_t, quotient_graph, twin_partition, Error,
    FamilySpec, Graph, InvariantResult, LayeredGraph, Witness, DEFAULT_GROUP_CAP,
    DEFAULT_SUBSET_BUDGET, SCHEMA,
};

#[derive(Parser, Debug)]
#[command(
    name = "myc-sym",
    version,
    about = "Symmetry invariants of generalized Mycielskian graphs"
)]
struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Emit indented, human-oriented output instead of compact JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,

    /// Emit compact JSON (the default).
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basic facts about the graph.
    Info(Input),
    /// Build μ^(t)(G) and print it.
    Myc {
        #[command(flatten)]
        input: Input,
        /// Print the graph in edge-list format instead of JSON.
        #[arg(long)]
        edge_list: bool,
    },
    /// Automorphism group: order, generators, orbits.
    Aut {
        #[command(flatten)]
        input: Input,
        /// List every element of the group.
        #[arg(long)]
        all: bool,
    },
    /// Determining number with a minimum determining set.
    Det {
        #[command(flatten)]
        input: Input,
        /// Scan all subsets instead of supersets of the minimum twin cover.
        #[arg(long)]
        unrestricted: bool,
    },
    /// Distinguishing number with a distinguishing colouring.
    Dist {
        #[command(flatten)]
        input: Input,
        /// Largest number of colours to try (default: the number of vertices).
        #[arg(long, value_name = "D")]
        max_colors: Option<usize>,
    },
    /// Cost of 2-distinguishing with a smallest colour class.
    Rho(Input),
    /// Twin classes and the canonical minimum twin cover.
    Twins(Input),
    /// Quotient graph by the twin relation.
    Quotient(Input),
    /// Check structural results, either a whole suite or one result on one instance.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Suite to run: "default" or a path to a suite TOML file.
        #[arg(long, conflicts_with_all = ["id", "path", "family"])]
        suite: Option<String>,
        /// Result to check (e.g. T18, L5ii, T19-sharp).
        #[arg(long, value_parser = parse_check_id)]
        id: Option<CheckId>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Edge-list file ("n m" header, one "i j" edge per line, '#' comments).
    #[arg(value_name = "PATH", conflicts_with = "family")]
    path: Option<PathBuf>,

    /// Named graph family, e.g. c5, k4, k23, petersen, fig3, fig4:3, m4.
    #[arg(long, value_parser = parse_family)]
    family: Option<FamilySpec>,

    /// Number of shadow levels; when given, the command works on μ^(t)(G).
    #[arg(short = 't', value_name = "T")]
    t: Option<usize>,

    /// Cap on the number of automorphisms enumerated.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    aut_cap: usize,

    /// Cap on the number of subsets examined by exhaustive scans.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
    subset_budget: u64,
}

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_check_id(s: &str) -> Result<CheckId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

/// The graph a command operates on, with Mycielskian bookkeeping when `-t` was given.
struct Loaded {
    source: String,
    base: Graph,
    layered: Option<LayeredGraph>,
}

impl Loaded {
    fn graph(&self) -> &Graph {
        self.layered.as_ref().map_or(&self.base, |lg| lg.graph())
    }

    fn name(&self, v: usize) -> String {
        match &self.layered {
            Some(lg) => lg.vertex_name(v),
            None => format!("v{v}"),
        }
    }

    fn names(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&v| self.name(v)).collect()
    }

    fn header(&self, command: &str) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(command));
        m.insert("source".into(), json!(self.source));
        m.insert(
            "t".into(),
            json!(self.layered.as_ref().map(|lg| lg.levels())),
        );
        m.insert("n".into(), json!(self.graph().vertex_count()));
        m.insert("m".into(), json!(self.graph().edge_count()));
        m
    }
}

impl Input {
    fn limits(&self) -> Limits {
        Limits {
            group_cap: self.aut_cap,
            subset_budget: self.subset_budget,
        }
    }

    fn base(&self) -> Result<(String, Graph), Failure> {
        match (&self.path, &self.family) {
            (Some(path), None) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    Failure::Run(Error::Input(format!("cannot read {}: {e}", path.display())))
                })?;
                Ok((path.display().to_string(), Graph::parse_edge_list(&text)?))
            }
            (None, Some(f)) => Ok((f.to_string(), f.build()?)),
            (None, None) => Err(Failure::Usage(
                "missing input: give an edge-list PATH or --family".into(),
            )),
            (Some(_), Some(_)) => Err(Failure::Usage(
                "give either an edge-list PATH or --family, not both".into(),
            )),
        }
    }

    fn load(&self) -> Result<Loaded, Failure> {
        let (source, base) = self.base()?;
        let layered = match self.t {
            Some(t) => Some(mycielskian_t(&base, t)?),
            None => None,
        };
        Ok(Loaded {
            source,
            base,
            layered,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => 3,
                Error::Input(_) | Error::Scope(_) => 2,
            })
        }
    }
}

fn emit(cli: &Cli, mut report: Map<String, Value>, started: Instant) {
    if cli.timings {
        report.insert(
            "elapsed_ms".into(),
            json!(started.elapsed().as_secs_f64() * 1e3),
        );
    }
    let value = Value::Object(report);
    let text = if cli.text {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(
        io::stdout().lock(),
        "{}",
        text.expect("reports are plain JSON values")
    );
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let started = Instant::now();
    match &cli.command {
        Command::Info(input) => {
            let g = input.load()?;
            let graph = g.graph();
            let mut r = g.header("info");
            let degrees: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
            r.insert("degrees".into(), json!(degrees));
            r.insert("connected".into(), json!(graph.is_connected()));
            r.insert(
                "isolated_vertices".into(),
                json!(graph.has_isolated_vertex()),
            );
            r.insert(
                "twin_free".into(),
                json!(twin_partition(graph).is_twin_free()),
            );
            emit(cli, r, started);
        }
        Command::Myc { input, edge_list } => {
            if input.t.is_none() {
                return Err(Failure::Usage("myc requires -t".into()));
            }
            let g = input.load()?;
            let graph = g.graph();
            if *edge_list {
                let _ = write!(io::stdout().lock(), "{}", graph.to_edge_list());
                return Ok(0);
            }
            let mut r = g.header("myc");
            let edges: Vec<[usize; 2]> = graph.edges().map(|(i, j)| [i, j]).collect();
            r.insert("edges".into(), json!(edges));
            r.insert(
                "names".into(),
                json!(g.names(&graph.vertices().collect::<Vec<_>>())),
            );
            emit(cli, r, started);
        }
        Command::Aut { input, all } => {
            let g = input.load()?;
            let group = automorphism_group(g.graph(), input.aut_cap)?;
            let mut r = g.header("aut");
            r.insert("order".into(), json!(group.order()));
            let gens: Vec<Vec<usize>> = group
                .generators()
                .iter()
                .map(|p| p.images().to_vec())
                .collect();
            r.insert("generators".into(), json!(gens));
            let orbits = group.orbits();
            let orbit_names: Vec<Vec<String>> = orbits.iter().map(|o| g.names(o)).collect();
            r.insert("orbits".into(), json!(orbits));
            r.insert("orbit_names".into(), json!(orbit_names));
            if *all {
                let elements: Vec<&[usize]> = group.iter().map(|p| p.images()).collect();
                r.insert("elements".into(), json!(elements));
            }
            emit(cli, r, started);
        }
        Command::Det {
            input,
            unrestricted,
        } => {
            let g = input.load()?;
            let limits = input.limits();
            let group = automorphism_group(g.graph(), limits.group_cap)?;
            let res =
                determining_number_with(g.graph(), &group, !unrestricted, limits.subset_budget)?;
            emit(cli, invariant_report(&g, "det", &res), started);
        }
        Command::Dist { input, max_colors } => {
            let g = input.load()?;
            let limits = input.limits();
            let group = automorphism_group(g.graph(), limits.group_cap)?;
            let max_d = max_colors.unwrap_or(g.graph().vertex_count());
            let res = distinguishing_number_with(g.graph(), &group, max_d, limits.subset_budget)?;
            emit(cli, invariant_report(&g, "dist", &res), started);
        }
        Command::Rho(input) => {
            let g = input.load()?;
            let limits = input.limits();
            let group = automorphism_group(g.graph(), limits.group_cap)?;
            let res = cost_of_2_distinguishing_with(g.graph(), &group, limits.subset_budget)?;
            emit(cli, invariant_report(&g, "rho", &res), started);
        }
        Command::Twins(input) => {
            let g = input.load()?;
            let p = twin_partition(g.graph());
            let cover = minimum_twin_cover(g.graph());
            let mut r = g.header("twins");
            let class_names: Vec<Vec<String>> = p.classes.iter().map(|c| g.names(c)).collect();
            r.insert("twin_free".into(), json!(p.is_twin_free()));
            r.insert("classes".into(), json!(p.classes));
            r.insert("class_names".into(), json!(class_names));
            r.insert("twin_cover".into(), json!(cover.vertices));
            r.insert("twin_cover_names".into(), json!(g.names(&cover.vertices)));
            emit(cli, r, started);
        }
        Command::Quotient(input) => {
            let g = input.load()?;
            let q = quotient_graph(g.graph());
            let mut r = g.header("quotient");
            r.insert("quotient_n".into(), json!(q.graph.vertex_count()));
            r.insert("quotient_m".into(), json!(q.graph.edge_count()));
            r.insert("edge_list".into(), json!(q.graph.to_edge_list()));
            r.insert("projection".into(), json!(q.projection));
            r.insert("representative".into(), json!(q.representative));
            r.insert(
                "representative_names".into(),
                json!(g.names(&q.representative)),
            );
            emit(cli, r, started);
        }
        Command::Verify { input, suite, id } => return verify(cli, input, suite.as_deref(), *id),
    }
    Ok(0)
}

fn invariant_report(g: &Loaded, command: &str, res: &InvariantResult) -> Map<String, Value> {
    let mut r = g.header(command);
    r.insert("value".into(), json!(res.value));
    match &res.witness {
        Witness::Set(set) => {
            r.insert("witness".into(), json!(set));
            r.insert("witness_names".into(), json!(g.names(set)));
        }
        Witness::Coloring(c) => {
            r.insert("witness".into(), json!(c.colors()));
            let classes: Vec<Vec<String>> =
                (0..c.num_colors()).map(|k| g.names(&c.class(k))).collect();
            r.insert("witness_names".into(), json!(classes));
        }
        Witness::None => {
            r.insert("witness".into(), Value::Null);
        }
    }
    r.insert("stats".into(), json!(res.stats));
    r
}

fn verify(
    cli: &Cli,
    input: &Input,
    suite: Option<&str>,
    id: Option<CheckId>,
) -> Result<u8, Failure> {
    let checks = match (suite, id) {
        (Some(name), _) => {
            let matrix = if name == "default" {
                harness::default_suite()
            } else {
                let text = fs::read_to_string(name).map_err(|e| {
                    Failure::Run(Error::Input(format!("cannot read suite {name}: {e}")))
                })?;
                harness::parse_suite(&text)?
            };
            harness::run_suite(&matrix, input.limits()).checks
        }
        (None, Some(id)) => {
            let Some(t) = input.t else {
                return Err(Failure::Usage("verify --id requires -t".into()));
            };
            let (source, g) = input.base()?;
            vec![harness::verify_with(id, &g, t, &source, input.limits())]
        }
        (None, None) => {
            return Err(Failure::Usage("verify needs --suite or --id".into()));
        }
    };
    let started = Instant::now();
    let mut failed = 0;
    for c in &checks {
        let Value::Object(mut line) = json!(c) else {
            unreachable!("a check serializes to an object")
        };
        line.insert("schema".into(), json!(SCHEMA));
        failed += usize::from(c.verdict == Verdict::Fail);
        emit(cli, line, started);
    }
    let count = |v| checks.iter().filter(|c| c.verdict == v).count();
    eprintln!(
        "{} checks: {} pass, {} fail, {} skipped",
        checks.len(),
        count(Verdict::Pass),
        failed,
        count(Verdict::Skipped)
    );
    Ok(if failed > 0 { 1 } else { 0 })
}
