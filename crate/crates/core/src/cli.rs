//! Command-line driver: `verify`, `sweep` and `demo`.
//!
//! Exit codes: 0 when every hard check passes (anticlique verdict and oracle
//! agreement), 1 when a mathematical check fails, 2 on usage or parameter
//! errors. Closed-form dimension mismatches are reported in
//! `formula_match` and never change the exit code.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{
    baseline_bounds, build_remark2, build_section2, build_section3, build_section4, theorem2_dim, theorem4_dim,
    Bounds, Section4Params,
};
use crate::error::{Error, Result};
use crate::graph::{
    graph_dim, is_anticlique, sampled_oracle_check, CodeSpace, DimMethod, Generators, OperatorGraph,
    SampleCheck,
};
use crate::linalg::Tolerance;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Multiply-accumulate budget above which the full Gram oracle is replaced
/// by a seeded subsample unless `--full-gram` is given.
pub const FULL_GRAM_BUDGET: f64 = 4.0e9;

const CSV_COLUMNS_HELP: &str = "CSV columns: construction,n,p,y,h,d,space_dim,code_dim,graph_dim_labels,\
graph_dim_gram,gram_sample_size,gram_sample_labels,gram_sample_gram,oracles_agree,paper_claimed_dim,\
formula_match,anticlique,compressed_dim,max_residual,knill_max,commutative_max,runtime_ms";

#[derive(Debug, Parser)]
#[command(name = "anticlique", version, about = "Build operator graphs from generalized Pauli operators and certify their quantum anticliques")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one construction and run every check on it.
    Verify(VerifyArgs),
    /// Verify a range of parameter points, one report row per point.
    #[command(after_help = CSV_COLUMNS_HELP)]
    Sweep(SweepArgs),
    /// Apply random errors to random code words and show they stay distinguishable.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    Section2,
    Section3,
    Section4,
    Remark2,
}

impl ConstructionKind {
    fn name(self) -> &'static str {
        match self {
            Self::Section2 => "section2",
            Self::Section3 => "section3",
            Self::Section4 => "section4",
            Self::Remark2 => "remark2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Labels,
    Gram,
    Both,
}

impl From<OracleArg> for DimMethod {
    fn from(o: OracleArg) -> Self {
        match o {
            OracleArg::Labels => DimMethod::Labels,
            OracleArg::Gram => DimMethod::Gram,
            OracleArg::Both => DimMethod::Both,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Local dimension for section3.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub y: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Admit n = 2 for section3 and d = 1 for section4.
    #[arg(long)]
    pub allow_degenerate: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Dimension oracle(s); "both" falls back to a seeded subsample for the
    /// Gram oracle when the full run exceeds the default budget.
    #[arg(long, value_enum, default_value = "both")]
    pub oracle: OracleArg,
    #[arg(long, default_value_t = Tolerance::DEFAULT_ABSOLUTE)]
    pub tol_abs: f64,
    #[arg(long, default_value_t = Tolerance::DEFAULT_RELATIVE)]
    pub tol_rel: f64,
    /// Always run the Gram oracle on every generator.
    #[arg(long)]
    pub full_gram: bool,
    /// Generators drawn for the subsampled Gram oracle.
    #[arg(long, default_value_t = 200)]
    pub sample_size: usize,
    /// Seed for the subsampled Gram oracle.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Report runtime_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub construction: ConstructionKind,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub checks: CheckArgs,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Section3,
    Section4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub construction: SweepKind,
    /// Inclusive range `a..b` of n (section3).
    #[arg(long)]
    pub n: Option<String>,
    /// Largest n = p·y to enumerate (section4).
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: SweepFormat,
    #[arg(long)]
    pub allow_degenerate: bool,
    #[command(flatten)]
    pub checks: CheckArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    #[arg(long, value_enum)]
    pub construction: ConstructionKind,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = Tolerance::DEFAULT_ABSOLUTE)]
    pub tol_abs: f64,
}

/// A fully specified construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Section2,
    Section3 { n: usize, allow_degenerate: bool },
    Section4(Section4Params),
    Remark2(Section4Params),
}

impl Construction {
    pub fn from_args(kind: ConstructionKind, a: &ParamArgs) -> Result<Self> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("{} requires --{flag}", kind.name())))
        };
        Ok(match kind {
            ConstructionKind::Section2 => Self::Section2,
            ConstructionKind::Section3 => Self::Section3 {
                n: need(a.n, "n")?,
                allow_degenerate: a.allow_degenerate,
            },
            ConstructionKind::Section4 | ConstructionKind::Remark2 => {
                let params = Section4Params::with_override(
                    need(a.p, "p")?,
                    need(a.y, "y")?,
                    need(a.h, "h")?,
                    need(a.d, "d")?,
                    a.allow_degenerate,
                )?;
                if let Some(n) = a.n {
                    if n != params.n() {
                        return Err(Error::InvalidParameter(format!("n = {n} but p·y = {}", params.n())));
                    }
                }
                if kind == ConstructionKind::Section4 {
                    Self::Section4(params)
                } else {
                    Self::Remark2(params)
                }
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Section2 => "section2",
            Self::Section3 { .. } => "section3",
            Self::Section4(_) => "section4",
            Self::Remark2(_) => "remark2",
        }
    }

    pub fn build(&self) -> Result<(OperatorGraph, CodeSpace)> {
        match self {
            Self::Section2 => build_section2(),
            Self::Section3 { n, allow_degenerate } => build_section3(*n, *allow_degenerate),
            Self::Section4(p) => build_section4(p),
            Self::Remark2(p) => build_remark2(p),
        }
    }

    pub fn params(&self) -> ReportParams {
        match self {
            Self::Section2 => ReportParams::default(),
            Self::Section3 { n, .. } => ReportParams {
                n: Some(*n),
                ..Default::default()
            },
            Self::Section4(p) | Self::Remark2(p) => ReportParams {
                n: Some(p.n()),
                p: Some(p.p),
                y: Some(p.y),
                h: Some(p.h),
                d: Some(p.d),
            },
        }
    }

    /// The closed-form dimension claimed for this construction.
    pub fn paper_claimed_dim(&self) -> u64 {
        match self {
            Self::Section2 => 5,
            Self::Section3 { n, .. } => theorem2_dim(*n),
            Self::Section4(p) => theorem4_dim(p).value,
            // dim 𝒜 = n³(n−1), plus the identity.
            Self::Remark2(p) => {
                let n = p.n() as u64;
                n * n * n * (n - 1) + 1
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub construction: String,
    pub params: ReportParams,
    pub space_dim: usize,
    pub code_dim: usize,
    pub graph_dim_labels: Option<usize>,
    pub graph_dim_gram: Option<usize>,
    pub gram_sample: Option<SampleCheck>,
    pub oracles_agree: Option<bool>,
    pub paper_claimed_dim: Option<u64>,
    pub formula_match: Option<bool>,
    pub anticlique: bool,
    pub compressed_dim: usize,
    pub max_residual: f64,
    pub bounds: Option<Bounds>,
    pub tolerance: Tolerance,
    pub runtime_ms: u64,
    pub tool_version: String,
}

impl VerificationReport {
    /// Anticlique verdict plus agreement of every oracle pair that ran.
    pub fn hard_checks_pass(&self) -> bool {
        self.anticlique && self.oracles_agree != Some(false)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub oracle: DimMethod,
    pub tol: Tolerance,
    pub full_gram: bool,
    pub sample_size: usize,
    pub seed: u64,
    pub deterministic: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle: DimMethod::Both,
            tol: Tolerance::default(),
            full_gram: false,
            sample_size: 200,
            seed: 1,
            deterministic: false,
        }
    }
}

impl VerifyOptions {
    fn from_args(a: &CheckArgs) -> Result<Self> {
        Ok(Self {
            oracle: a.oracle.into(),
            tol: Tolerance::new(a.tol_abs, a.tol_rel)?,
            full_gram: a.full_gram,
            sample_size: a.sample_size,
            seed: a.seed,
            deterministic: a.deterministic,
        })
    }
}

/// Approximate multiply-accumulate count of the Gram oracle.
pub fn gram_cost(generators: usize, space_dim: usize) -> f64 {
    let entries = (space_dim * space_dim) as f64;
    let count = generators as f64;
    count * entries * count.min(entries)
}

/// Runs the construction, the configured dimension oracles, the anticlique
/// check and the closed-form comparison.
pub fn verify(construction: &Construction, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let (graph, code) = construction.build()?;
    let tol = opts.tol;

    let has_labels = graph.labels().is_some();
    if opts.oracle == DimMethod::Labels && !has_labels {
        return Err(Error::LabelsUnavailable);
    }
    let feasible = opts.full_gram || gram_cost(graph.len(), graph.space_dim()) <= FULL_GRAM_BUDGET;
    let (labels_dim, gram_dim, gram_sample) = match opts.oracle {
        DimMethod::Labels => (graph_dim(&graph, DimMethod::Labels, tol)?.labels, None, None),
        DimMethod::Gram => {
            if !feasible {
                return Err(Error::InvalidParameter(format!(
                    "full Gram oracle over {} generators exceeds the default budget; pass --full-gram or use --oracle both",
                    graph.len()
                )));
            }
            (None, graph_dim(&graph, DimMethod::Gram, tol)?.gram, None)
        }
        DimMethod::Both => {
            let labels = if has_labels {
                graph_dim(&graph, DimMethod::Labels, tol)?.labels
            } else {
                None
            };
            if feasible || !has_labels {
                (labels, graph_dim(&graph, DimMethod::Gram, tol)?.gram, None)
            } else {
                let sample = sampled_oracle_check(&graph, opts.sample_size, opts.seed, tol)?;
                (labels, None, Some(sample))
            }
        }
    };
    let oracles_agree = match (labels_dim, gram_dim, gram_sample) {
        (Some(l), Some(g), _) => Some(l == g),
        (_, _, Some(s)) => Some(s.agree()),
        _ => None,
    };

    let compression = is_anticlique(&graph, &code, tol)?;
    let claimed = construction.paper_claimed_dim();
    let computed = labels_dim.or(gram_dim);
    let bounds = baseline_bounds(code.space_dim(), code.code_dim()).ok();

    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        construction: construction.name().to_string(),
        params: construction.params(),
        space_dim: code.space_dim(),
        code_dim: code.code_dim(),
        graph_dim_labels: labels_dim,
        graph_dim_gram: gram_dim,
        gram_sample,
        oracles_agree,
        paper_claimed_dim: Some(claimed),
        formula_match: computed.map(|c| c as u64 == claimed),
        anticlique: compression.verdict,
        compressed_dim: compression.compressed_dim,
        max_residual: compression.residual,
        bounds,
        tolerance: tol,
        runtime_ms: if opts.deterministic {
            0
        } else {
            start.elapsed().as_millis() as u64
        },
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

fn write_text_report(out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<()> {
    let params = serde_json::to_string(&r.params).unwrap_or_default();
    writeln!(out, "construction: {} {}", r.construction, params)?;
    writeln!(out, "space_dim: {}  code_dim: {}", r.space_dim, r.code_dim)?;
    let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    writeln!(
        out,
        "graph dimension: labels {}  gram {}",
        show(r.graph_dim_labels),
        show(r.graph_dim_gram)
    )?;
    if let Some(s) = &r.gram_sample {
        writeln!(
            out,
            "gram subsample: {} generators (seed {}): labels {}  gram {}",
            s.size, s.seed, s.labels, s.gram
        )?;
    }
    if let Some(agree) = r.oracles_agree {
        writeln!(out, "oracles agree: {agree}")?;
    }
    if let (Some(claimed), Some(m)) = (r.paper_claimed_dim, r.formula_match) {
        writeln!(out, "closed-form claim: {claimed} ({})", if m { "match" } else { "MISMATCH" })?;
    }
    writeln!(
        out,
        "anticlique: {}  (compressed_dim {}, max residual {:.3e})",
        r.anticlique, r.compressed_dim, r.max_residual
    )?;
    if let Some(b) = &r.bounds {
        writeln!(
            out,
            "baseline bounds: knill_max {}  commutative_max {}",
            b.knill_max, b.commutative_max
        )?;
    }
    writeln!(out, "runtime_ms: {}", r.runtime_ms)
}

fn exit_for_error(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Numerical(_) | Error::NotIsometry { .. } => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = Construction::from_args(args.construction, &args.params)
        .and_then(|c| Ok((c, VerifyOptions::from_args(&args.checks)?)))
        .and_then(|(c, opts)| verify(&c, &opts));
    let report = match result {
        Ok(r) => r,
        Err(e) => return exit_for_error(err, &e),
    };
    let written = if args.json {
        serde_json::to_string_pretty(&report)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}"))
    } else {
        write_text_report(out, &report)
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if report.hard_checks_pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Parses an inclusive range `a..b` (also `a..=b` or a single value).
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("cannot parse range {s:?}; expected a..b"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v: usize = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty range {s:?}")));
    }
    Ok((lo..=hi).collect())
}

#[derive(Debug, Serialize)]
struct SweepRow {
    construction: String,
    n: Option<usize>,
    p: Option<usize>,
    y: Option<usize>,
    h: Option<usize>,
    d: Option<usize>,
    space_dim: usize,
    code_dim: usize,
    graph_dim_labels: Option<usize>,
    graph_dim_gram: Option<usize>,
    gram_sample_size: Option<usize>,
    gram_sample_labels: Option<usize>,
    gram_sample_gram: Option<usize>,
    oracles_agree: Option<bool>,
    paper_claimed_dim: Option<u64>,
    formula_match: Option<bool>,
    anticlique: bool,
    compressed_dim: usize,
    max_residual: f64,
    knill_max: Option<u64>,
    commutative_max: Option<u64>,
    runtime_ms: u64,
}

impl From<&VerificationReport> for SweepRow {
    fn from(r: &VerificationReport) -> Self {
        Self {
            construction: r.construction.clone(),
            n: r.params.n,
            p: r.params.p,
            y: r.params.y,
            h: r.params.h,
            d: r.params.d,
            space_dim: r.space_dim,
            code_dim: r.code_dim,
            graph_dim_labels: r.graph_dim_labels,
            graph_dim_gram: r.graph_dim_gram,
            gram_sample_size: r.gram_sample.map(|s| s.size),
            gram_sample_labels: r.gram_sample.map(|s| s.labels),
            gram_sample_gram: r.gram_sample.map(|s| s.gram),
            oracles_agree: r.oracles_agree,
            paper_claimed_dim: r.paper_claimed_dim,
            formula_match: r.formula_match,
            anticlique: r.anticlique,
            compressed_dim: r.compressed_dim,
            max_residual: r.max_residual,
            knill_max: r.bounds.map(|b| b.knill_max),
            commutative_max: r.bounds.map(|b| b.commutative_max),
            runtime_ms: r.runtime_ms,
        }
    }
}

/// Parameter points of a sweep, sorted and validated up front.
pub fn sweep_points(args: &SweepArgs) -> Result<Vec<Construction>> {
    let points: Vec<Construction> = match args.construction {
        SweepKind::Section3 => {
            let range = args
                .n
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("sweep section3 requires --n a..b".into()))?;
            let points: Vec<Construction> = parse_range(range)?
                .into_iter()
                .map(|n| Construction::Section3 {
                    n,
                    allow_degenerate: args.allow_degenerate,
                })
                .collect();
            for p in &points {
                if let Construction::Section3 { n, allow_degenerate } = p {
                    let min = if *allow_degenerate { 2 } else { 3 };
                    if *n < min {
                        return Err(Error::InvalidParameter(format!("section3 requires n >= {min} (got n = {n})")));
                    }
                }
            }
            points
        }
        SweepKind::Section4 => {
            let n_max = args
                .n_max
                .ok_or_else(|| Error::InvalidParameter("sweep section4 requires --n-max".into()))?;
            Section4Params::enumerate(n_max)
                .into_iter()
                .map(Construction::Section4)
                .collect()
        }
    };
    if points.is_empty() {
        return Err(Error::InvalidParameter("sweep has no valid parameter points".into()));
    }
    Ok(points)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (points, opts) = match sweep_points(args).and_then(|p| Ok((p, VerifyOptions::from_args(&args.checks)?))) {
        Ok(v) => v,
        Err(e) => return exit_for_error(err, &e),
    };
    let result = match args.format {
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            run_points(&points, &opts, &mut |r| {
                w.serialize(SweepRow::from(r)).map_err(std::io::Error::other)?;
                w.flush()
            })
        }
        SweepFormat::Jsonl => run_points(&points, &opts, &mut |r| {
            let line = serde_json::to_string(r).map_err(std::io::Error::other)?;
            writeln!(out, "{line}")?;
            out.flush()
        }),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(SweepError::Verify(e)) => exit_for_error(err, &e),
        Err(SweepError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum SweepError {
    Verify(Error),
    Io(std::io::Error),
}

/// Verifies each point in order, handing every report to `sink` as soon as
/// it is ready. Returns whether all hard checks passed.
fn run_points(
    points: &[Construction],
    opts: &VerifyOptions,
    sink: &mut dyn FnMut(&VerificationReport) -> std::io::Result<()>,
) -> std::result::Result<bool, SweepError> {
    let mut all_pass = true;
    for point in points {
        let report = verify(point, opts).map_err(SweepError::Verify)?;
        all_pass &= report.hard_checks_pass();
        sink(&report).map_err(SweepError::Io)?;
    }
    Ok(all_pass)
}

/// One sampled error event of the demo.
#[derive(Debug, Clone, PartialEq)]
pub struct DemoTrial {
    pub generator: usize,
    pub generator_name: String,
    pub word: usize,
    pub word_name: String,
    pub c_v: crate::linalg::C64,
    /// `max_k |⟨f_k, V f_j⟩ − δ_kj c_V|`.
    pub cross_talk: f64,
}

/// Picks `trials` random (generator, code word) pairs and measures how far
/// `V f_j` is from `c_V f_j` inside the code.
pub fn run_demo(graph: &OperatorGraph, code: &CodeSpace, trials: usize, seed: u64) -> Result<Vec<DemoTrial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = code.isometry();
    let s_adj = s.adjoint();
    let d = code.code_dim();
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let generator = rng.random_range(0..graph.len());
        let word = rng.random_range(0..d);
        let vs = match graph.generators() {
            Generators::Dense(ops) => ops[generator].matmul(s)?,
            Generators::Labels(pairs) => pairs[generator].apply_columns(s)?,
        };
        let compressed = s_adj.matmul(&vs)?;
        let c_v = compressed.trace() / d as f64;
        let mut cross_talk: f64 = 0.0;
        for k in 0..d {
            let expected = if k == word { c_v } else { crate::linalg::ZERO };
            cross_talk = cross_talk.max((compressed[(k, word)] - expected).norm());
        }
        out.push(DemoTrial {
            generator,
            generator_name: graph.generator_name(generator),
            word,
            word_name: code.basis_names()[word].clone(),
            c_v,
            cross_talk,
        });
    }
    Ok(out)
}

pub fn cmd_demo(args: &DemoArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let setup = Construction::from_args(args.construction, &args.params)
        .and_then(|c| Ok((c, Tolerance::new(args.tol_abs, Tolerance::DEFAULT_RELATIVE)?)))
        .and_then(|(c, tol)| Ok((c, tol, c.build()?)));
    let (construction, tol, (graph, code)) = match setup {
        Ok(v) => v,
        Err(e) => return exit_for_error(err, &e),
    };
    if args.trials == 0 {
        return EXIT_OK;
    }
    let trials = match run_demo(&graph, &code, args.trials, args.seed) {
        Ok(t) => t,
        Err(e) => return exit_for_error(err, &e),
    };
    let params = serde_json::to_string(&construction.params()).unwrap_or_default();
    let mut lines = vec![format!(
        "demo {} {}: {} generators, {} code words, {} trials, seed {}",
        construction.name(),
        params,
        graph.len(),
        code.code_dim(),
        args.trials,
        args.seed
    )];
    let mut worst: f64 = 0.0;
    for (i, t) in trials.iter().enumerate() {
        worst = worst.max(t.cross_talk);
        lines.push(format!(
            "trial {:>4}: V = {} (#{}), word {}, c_V = {:+.6}{:+.6}i, cross-talk {:.3e}",
            i + 1,
            t.generator_name,
            t.generator,
            t.word_name,
            t.c_v.re,
            t.c_v.im,
            t.cross_talk
        ));
    }
    let pass = worst < tol.absolute;
    lines.push(format!(
        "max cross-talk {:.3e} (tolerance {:e}): {}",
        worst,
        tol.absolute,
        if pass { "all corrupted words remain distinguishable" } else { "FAILED" }
    ));
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return EXIT_USAGE;
        }
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Demo(a) => cmd_demo(a, out, err),
    }
}
