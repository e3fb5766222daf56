//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success, 1 verdict failure, 2 usage or input error,
//! 3 budget exhausted.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctl_core::classify::classify;
use ctl_core::clique::{clique_number, independence_number, max_clique, max_independent_set};
use ctl_core::coloring::{chromatic_number, ChromaticOutcome};
use ctl_core::constructions::{Builder, HajnalParams, ZykovSpec, DEFAULT_VERTEX_CAP};
use ctl_core::fractional::{fractional_chromatic, project_and_verify, project_homomorphism};
use ctl_core::rational::parse as parse_rational;
use ctl_core::stability::{
    beta_from_min_degree, extract_partition, refine_partition, verify_clique_stability, verify_lambda_stability,
    verify_theta_stability, PartitionKind,
};
use ctl_core::vcdim::{vc_dimension, SetSystem};
use ctl_core::{Budget, Error as CoreError, Graph, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::formats::{from_graph6, parse_graph, serialize_graph, to_graph6, Format};
use crate::json::{
    emit, CertificateJson, FractionalJson, GraphSidecar, InvariantJson, LabelingJson, PartitionJson, ThresholdJson,
    VcJson, SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ctl", version, about = "Chromatic-threshold toolkit")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, env = "CTL_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest graph a constructor may build.
    #[arg(long, env = "CTL_VERTEX_CAP", default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    pub vertex_cap: usize,
    /// Search-node cap shared by the exact searches of one command.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Cancel searches after this many seconds (exit 3).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout_secs: Option<u64>,
    /// Report format; `invariant` defaults to human, everything else to json.
    #[arg(long, value_enum, global = true)]
    pub output: Option<Output>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::Graph6 => Format::Graph6,
            GraphFormat::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph family and print it.
    Construct(ConstructArgs),
    /// Chromatic thresholds of a graph with chromatic number at least 3.
    Classify {
        /// Graph file (graph6 or edge list), `-` for stdin.
        graph: String,
    },
    /// One graph invariant.
    Invariant {
        #[arg(value_enum)]
        which: InvariantKind,
        graph: String,
    },
    /// Extract or refine a stability partition.
    Partition {
        #[command(subcommand)]
        action: PartitionAction,
    },
    /// Check a stability certificate for a partition.
    Verify(VerifyArgs),
    /// Project a Kneser labeling to a Kneser graph on `m` elements.
    Project(ProjectArgs),
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    pub format: GraphFormat,
    /// Write labels and parameters as JSON here.
    #[arg(long, global = true)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Kneser graph KN(n, m).
    Kneser { n: usize, m: usize },
    /// Shift graph on increasing k-tuples of [m].
    Shift { m: usize, k: usize },
    /// Hajnal graph H(k, l, m).
    Hajnal { k: usize, l: usize, m: usize },
    /// r-Hajnal graph.
    RHajnal { r: usize, k: usize, l: usize, m: usize },
    /// Shift graph plus isolated vertices joined to a blown-up clique.
    VcLower { r: usize, m: usize, n: usize },
    /// Modified Zykov graph on the given trees (graph6).
    Zykov {
        r: usize,
        t: usize,
        trees: Vec<String>,
    },
    /// Complete multipartite graph.
    Multipartite {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvariantKind {
    Chi,
    Chif,
    Omega,
    Alpha,
    Girth,
    Vc,
}

#[derive(Subcommand, Debug)]
pub enum PartitionAction {
    /// Seeded local-search extraction followed by refinement.
    Extract {
        #[arg(long)]
        r: usize,
        /// Defaults to the minimum-degree slack of the graph.
        #[arg(long)]
        beta: Option<String>,
        graph: String,
    },
    /// Move special vertices with exactly one sparse side.
    Refine {
        #[arg(long)]
        partition_file: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        beta: Option<String>,
        graph: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Lambda,
    Clique,
    Theta,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub kind: VerifyKind,
    #[arg(long)]
    pub partition_file: String,
    /// Overrides the partition file.
    #[arg(long)]
    pub r: Option<usize>,
    /// Overrides the partition file.
    #[arg(long)]
    pub beta: Option<String>,
    /// Forbidden graph, required for `lambda`.
    #[arg(long)]
    pub forbidden: Option<String>,
    pub graph: String,
}

#[derive(Args, Debug)]
pub struct ProjectArgs {
    /// Expected ground-set size of the input labeling.
    #[arg(long)]
    pub a: Option<usize>,
    /// Expected set size of the input labeling.
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub delta: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 10)]
    pub max_retries: usize,
    /// Check the projected labeling against this graph.
    #[arg(long)]
    pub graph: Option<String>,
    pub labeling: String,
}

/// A failed command: exit code plus message for the error stream.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::BudgetExceeded => EXIT_BUDGET,
            CoreError::RetriesExhausted { .. } | CoreError::InvalidLabeling(_) => EXIT_VERDICT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a successful command writes, and its exit code (0 or 1).
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    budget: Budget,
}

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}")))
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        parse_graph(&text, None).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &str) -> Result<T, Failure> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }

    fn output(&self, default: Output) -> Output {
        self.cli.output.unwrap_or(default)
    }

    fn report<T: Serialize>(&self, value: &T, code: i32) -> Result<Outcome, Failure> {
        let stdout = match self.output(Output::Json) {
            Output::Json => emit(value),
            Output::Human => human(&serde_json::to_value(value).expect("schemas serialize infallibly")),
        };
        Ok(Outcome {
            code,
            stdout,
            stderr: String::new(),
        })
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// One `key: value` line per top-level field.
fn human(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .filter(|(k, _)| k.as_str() != "schema")
            .map(|(k, v)| format!("{k}: {}\n", scalar(v)))
            .collect(),
        other => format!("{}\n", scalar(other)),
    }
}

fn rational_arg(s: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| Failure::usage(format!("--{what}: {e}")))
}

fn construct(ctx: &mut Ctx, args: &ConstructArgs) -> Result<Outcome, Failure> {
    let builder = Builder::new(ctx.cli.vertex_cap);
    let (family, params, g) = match &args.family {
        Family::Kneser { n, m } => ("kneser", json!({"n": n, "m": m}), builder.kneser(*n, *m)?),
        Family::Shift { m, k } => ("shift", json!({"m": m, "k": k}), builder.shift_graph(*m, *k)?),
        Family::Hajnal { k, l, m } => (
            "hajnal",
            json!({"k": k, "l": l, "m": m}),
            builder.hajnal(&HajnalParams::new(*k, *l, *m)?)?,
        ),
        Family::RHajnal { r, k, l, m } => (
            "r-hajnal",
            json!({"r": r, "k": k, "l": l, "m": m}),
            builder.r_hajnal(*r, &HajnalParams::new(*k, *l, *m)?)?,
        ),
        Family::VcLower { r, m, n } => (
            "vc-lower",
            json!({"r": r, "m": m, "n": n}),
            builder.vc_lower_bound_graph(*r, *m, *n)?,
        ),
        Family::Zykov { r, t, trees } => {
            let parsed = trees
                .iter()
                .map(|s| from_graph6(s).map_err(|e| Failure::usage(format!("tree {s:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = ZykovSpec {
                r: *r,
                t: *t,
                trees: parsed,
            };
            ("zykov", json!({"r": r, "t": t, "trees": trees}), builder.zykov(&spec)?)
        }
        Family::Multipartite { sizes } => {
            let n = sizes.iter().try_fold(0usize, |a, &s| a.checked_add(s)).unwrap_or(usize::MAX);
            if n > ctx.cli.vertex_cap {
                return Err(CoreError::VertexCap {
                    needed: n,
                    cap: ctx.cli.vertex_cap,
                }
                .into());
            }
            (
                "multipartite",
                json!({"sizes": sizes}),
                ctl_core::constructions::complete_multipartite(sizes),
            )
        }
    };
    if let Some(path) = &args.sidecar {
        let Value::Object(obj) = params else { unreachable!() };
        let sidecar = GraphSidecar {
            schema: SCHEMA.into(),
            family: family.into(),
            params: obj.into_iter().collect::<BTreeMap<_, _>>(),
            n: g.n(),
            edges: g.edge_count(),
            graph6: to_graph6(&g),
            labels: g.labels().map(<[String]>::to_vec),
        };
        std::fs::write(path, emit(&sidecar)).map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))?;
    }
    Ok(Outcome {
        code: EXIT_OK,
        stdout: serialize_graph(&g, args.format.into()),
        stderr: String::new(),
    })
}

fn invariant(ctx: &mut Ctx, which: InvariantKind, path: &str) -> Result<Outcome, Failure> {
    let g = ctx.graph(path)?;
    let (name, value, detail) = match which {
        InvariantKind::Chi => match chromatic_number(&g, &ctx.budget) {
            ChromaticOutcome::Exact { chi, coloring } => ("chi", json!(chi), Some(json!({ "coloring": coloring }))),
            ChromaticOutcome::Unknown { lower, upper, .. } => {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: format!("search budget exceeded; {lower} <= chi <= {upper}"),
                })
            }
        },
        InvariantKind::Chif => {
            let f = fractional_chromatic(&g, &ctx.budget)?;
            let fj = FractionalJson::from(&f);
            ("chif", json!(fj.value), Some(serde_json::to_value(&fj).unwrap()))
        }
        InvariantKind::Omega => ("omega", json!(clique_number(&g, None)), Some(json!({ "clique": max_clique(&g, None) }))),
        InvariantKind::Alpha => (
            "alpha",
            json!(independence_number(&g)),
            Some(json!({ "set": max_independent_set(&g) })),
        ),
        InvariantKind::Girth => ("girth", json!(g.girth()), None),
        InvariantKind::Vc => {
            let vc = vc_dimension(&SetSystem::neighborhoods(&g), &ctx.budget);
            if !vc.complete {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: format!("search budget exceeded; VC dimension >= {}", vc.dimension),
                });
            }
            ("vc", json!(vc.dimension), Some(serde_json::to_value(VcJson::from(&vc)).unwrap()))
        }
    };
    let report = InvariantJson {
        schema: SCHEMA.into(),
        invariant: name.into(),
        value,
        detail,
    };
    let stdout = match ctx.output(Output::Human) {
        Output::Json => emit(&report),
        Output::Human => format!("{}\n", scalar(&report.value)),
    };
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    })
}

fn beta_or_slack(beta: Option<&str>, g: &Graph, r: usize) -> Result<Rational, Failure> {
    match beta {
        Some(b) => rational_arg(b, "beta"),
        None => beta_from_min_degree(g, r)
            .ok_or_else(|| Failure::usage("minimum degree leaves no positive slack; pass --beta")),
    }
}

fn partition(ctx: &mut Ctx, action: &PartitionAction) -> Result<Outcome, Failure> {
    let p = match action {
        PartitionAction::Extract { r, beta, graph } => {
            let g = ctx.graph(graph)?;
            let beta = beta_or_slack(beta.as_deref(), &g, *r)?;
            extract_partition(&g, *r, &beta, ctx.cli.seed, &ctx.budget)?
        }
        PartitionAction::Refine {
            partition_file,
            r,
            beta,
            graph,
        } => {
            let pj: PartitionJson = ctx.json(partition_file)?;
            let mut p = pj.to_core().map_err(Failure::usage)?;
            if let Some(r) = r {
                p.r = *r;
            }
            if let Some(b) = beta {
                p.beta = rational_arg(b, "beta")?;
            }
            let g = ctx.graph(graph)?;
            refine_partition(&g, &p)?
        }
    };
    ctx.report(&PartitionJson::from(&p), EXIT_OK)
}

fn verify(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Outcome, Failure> {
    let pj: PartitionJson = ctx.json(&args.partition_file)?;
    let mut p = pj.to_core().map_err(Failure::usage)?;
    if let Some(r) = args.r {
        p.r = r;
    }
    if let Some(b) = &args.beta {
        p.beta = rational_arg(b, "beta")?;
    }
    let g = ctx.graph(&args.graph)?;
    let cert = match args.kind {
        VerifyKind::Lambda => {
            let path = args
                .forbidden
                .as_deref()
                .ok_or_else(|| Failure::usage("verify lambda needs --forbidden <graph-file>"))?;
            let h = ctx.graph(path)?;
            p.kind = PartitionKind::LambdaStability;
            verify_lambda_stability(&g, &h, &p, &ctx.budget)?
        }
        VerifyKind::Clique => {
            p.kind = PartitionKind::CliqueStability;
            verify_clique_stability(&g, &p, ctx.cli.seed, &ctx.budget)?
        }
        VerifyKind::Theta => {
            if p.kind != PartitionKind::ThetaStability {
                return Err(Failure::usage("verify theta needs a partition file with \"S\""));
            }
            verify_theta_stability(&g, p.r, &p.beta, &p.special, ctx.cli.seed, &ctx.budget)?
        }
    };
    let code = if cert.overall { EXIT_OK } else { EXIT_VERDICT };
    let mut out = ctx.report(&CertificateJson::from(&cert), code)?;
    for c in cert.clauses.iter().filter(|c| !c.passed()) {
        let detail = c.detail.as_ref().map_or(String::new(), |d| format!(" ({d})"));
        out.stderr.push_str(&format!("ctl: clause {:?} is {:?}{detail}\n", c.name, c.status));
    }
    Ok(out)
}

fn project(ctx: &mut Ctx, args: &ProjectArgs) -> Result<Outcome, Failure> {
    let lj: LabelingJson = ctx.json(&args.labeling)?;
    let l = lj.to_core().map_err(Failure::usage)?;
    if args.a.is_some_and(|a| a != l.a) || args.b.is_some_and(|b| b != l.b) {
        return Err(Failure::usage(format!("labeling is {}:{}, not the requested --a/--b", l.a, l.b)));
    }
    let delta = rational_arg(&args.delta, "delta")?;
    let proj = match &args.graph {
        Some(path) => {
            let g = ctx.graph(path)?;
            l.verify(&g)?;
            project_and_verify(&g, &l, &delta, args.m, ctx.cli.seed, args.max_retries)?
        }
        None => project_homomorphism(&l, &delta, args.m, ctx.cli.seed, args.max_retries)?,
    };
    ctx.report(&LabelingJson::from(&proj), EXIT_OK)
}

fn dispatch(ctx: &mut Ctx) -> Result<Outcome, Failure> {
    match &ctx.cli.command {
        Command::Construct(args) => construct(ctx, args),
        Command::Classify { graph } => {
            let g = ctx.graph(graph)?;
            let report = classify(&g, &ctx.budget)?;
            ctx.report(&ThresholdJson::from(&report), EXIT_OK)
        }
        Command::Invariant { which, graph } => invariant(ctx, *which, graph),
        Command::Partition { action } => partition(ctx, action),
        Command::Verify(args) => verify(ctx, args),
        Command::Project(args) => project(ctx, args),
    }
}

/// Run one command line; returns the exit code after writing both streams.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut budget = match cli.budget {
        Some(n) => Budget::nodes(n),
        None => Budget::unlimited(),
    };
    if let Some(secs) = cli.timeout_secs {
        let flag = Arc::new(AtomicBool::new(false));
        let setter = Arc::clone(&flag);
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            setter.store(true, Ordering::Relaxed);
        });
        budget = budget.with_cancel(flag);
    }
    let mut ctx = Ctx {
        cli: &cli,
        stdin,
        budget,
    };
    match dispatch(&mut ctx) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stderr.write_all(out.stderr.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "ctl: {}", f.message);
            f.code
        }
    }
}
