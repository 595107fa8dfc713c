//! Command-line front end: verify family constructions, compute distance
//! certificates for user-supplied codes, run the verification matrix, and
//! run the pair-channel correctability experiment.
//!
//! JSON is the machine format of record (every report carries
//! `"schema": "pairforge/1"`); CSV and text are projections of it. With
//! fixed flags the JSON output is byte-identical across runs and worker
//! counts, except for `runtime_ms` fields.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::codec::CodeSpec;
use crate::distance::{
    min_hamming_analytic, min_weight_certified, min_weight_exhaustive_with,
    DistanceCertificate, Metric,
};
use crate::error::{Error, Result};
use crate::families::{
    test_matrix, verify_theorem_with, EnginePolicy, Family, FamilySpec, FamilyVerification,
    Verdict,
};
use crate::pairchannel::{correctability_experiment, ChannelSummary};

pub const SCHEMA: &str = "pairforge/1";

#[derive(Parser)]
#[command(
    name = "pairforge",
    version,
    about = "Repeated-root cyclic codes: exact Hamming/symbol-pair distances and MDS/AMDS certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one family instance and verify its claimed classification.
    Verify(VerifyArgs),
    /// Distance certificates for a code given as a JSON spec file.
    Distance(DistanceArgs),
    /// Run the full family-by-prime verification matrix.
    Matrix(MatrixArgs),
    /// Pair-error injection and decoding experiment for one family.
    Channel(ChannelArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Output format; CSV and text are projections of the JSON.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for the partitioned engines (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Seed for all randomness (channel trials).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Auto,
    Exhaustive,
    Certified,
    Analytic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Hamming,
    Pair,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family tag: T31, T32, T33, T34, T35, T36 or L4_MDS.
    #[arg(long)]
    family: String,
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// T31 only: exponent s of p in the length l*p^s.
    #[arg(long)]
    s: Option<u32>,
    /// T31 only: coprime length part l.
    #[arg(long)]
    l: Option<u64>,
    /// Engine policy override.
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct DistanceArgs {
    /// Path to a code spec JSON file: {"p":7,"m":1,"n":21,"eta":"1","g":"..."}.
    #[arg(long = "code-spec")]
    code_spec: PathBuf,
    /// Which metric(s) to certify.
    #[arg(long, value_enum, default_value_t = MetricArg::Both)]
    metric: MetricArg,
    /// Engine selection; auto uses the certified support-rank engine.
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Override the q^k enumeration guard.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MatrixArgs {
    /// Engine policy override; any single engine may be disabled and the
    /// rows still complete via the remaining ones.
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ChannelArgs {
    /// Family tag (see verify).
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    l: Option<u64>,
    /// Seeded random trials per error count t.
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[command(flatten)]
    common: CommonArgs,
}

/// Entry point: returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let (common, outcome) = match cli.command {
        Command::Verify(args) => {
            let common = clone_common(&args.common);
            (common, run_in_pool(args.common.workers, || cmd_verify(args)))
        }
        Command::Distance(args) => {
            let common = clone_common(&args.common);
            (common, run_in_pool(args.common.workers, || cmd_distance(args)))
        }
        Command::Matrix(args) => {
            let common = clone_common(&args.common);
            (common, run_in_pool(args.common.workers, || cmd_matrix(args)))
        }
        Command::Channel(args) => {
            let common = clone_common(&args.common);
            (common, run_in_pool(args.common.workers, || cmd_channel(args)))
        }
    };
    match outcome {
        Ok((rendered, exit)) => {
            if let Err(e) = emit(&common, &rendered) {
                eprintln!("pairforge: {e}");
                return 1;
            }
            exit
        }
        Err(e) => {
            eprintln!("pairforge: {e}");
            error_exit_code(&e)
        }
    }
}

fn clone_common(c: &CommonArgs) -> CommonArgs {
    CommonArgs {
        format: c.format,
        out: c.out.clone(),
        workers: c.workers,
        seed: c.seed,
    }
}

fn run_in_pool<T>(workers: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T>
where
    T: Send,
{
    match workers {
        None => f(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Parse(format!("worker pool: {e}")))?;
            pool.install(f)
        }
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisViolated(_) => 2,
        Error::EngineDisagreement(_) => 3,
        Error::SearchSpaceTooLarge { .. } => 4,
        _ => 1,
    }
}

fn emit(common: &CommonArgs, rendered: &Rendered) -> Result<()> {
    let body = match common.format {
        FormatArg::Json => rendered.json.clone(),
        FormatArg::Csv => rendered.csv.clone(),
        FormatArg::Text => rendered.text.clone(),
    };
    match &common.out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

/// One report, pre-rendered in all three formats so `emit` stays trivial.
struct Rendered {
    json: String,
    csv: String,
    text: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// report shapes

#[derive(Serialize)]
struct FamilyRow {
    family: String,
    p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(rename = "d_H", skip_serializing_if = "Option::is_none")]
    d_h: Option<usize>,
    #[serde(rename = "d_p", skip_serializing_if = "Option::is_none")]
    d_p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(rename = "match")]
    matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    runtime_ms: u64,
}

impl FamilyRow {
    fn from_verification(v: &FamilyVerification) -> FamilyRow {
        FamilyRow {
            family: v.spec.family.to_string(),
            p: v.spec.p,
            s: v.spec.s,
            l: v.spec.l,
            n: Some(v.report.n),
            k: Some(v.report.k),
            d_h: Some(v.report.d_h),
            d_p: Some(v.report.d_p),
            verdict: Some(v.report.verdict),
            matches: v.report.matches.unwrap_or(false),
            error: None,
            runtime_ms: v.runtime_ms,
        }
    }

    fn from_error(spec: &FamilySpec, e: &Error, runtime_ms: u64) -> FamilyRow {
        FamilyRow {
            family: spec.family.to_string(),
            p: spec.p,
            s: spec.s,
            l: spec.l,
            n: None,
            k: None,
            d_h: None,
            d_p: None,
            verdict: None,
            matches: false,
            error: Some(e.to_string()),
            runtime_ms,
        }
    }

    fn csv_line(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            self.family,
            self.p,
            opt(&self.s),
            opt(&self.l),
            opt(&self.n),
            opt(&self.k),
            opt(&self.d_h),
            opt(&self.d_p),
            opt(&self.verdict),
            self.matches,
            self.runtime_ms,
            self.error.clone().unwrap_or_default(),
        )
    }

    fn text_line(&self) -> String {
        match &self.error {
            Some(e) => format!("{:<18} p={:<3} ERROR: {e}\n", self.family, self.p),
            None => format!(
                "{:<18} p={:<3} [{},{}] d_H={} d_p={} {:<7} match={} ({} ms)\n",
                self.family,
                self.p,
                self.n.unwrap(),
                self.k.unwrap(),
                self.d_h.unwrap(),
                self.d_p.unwrap(),
                self.verdict.map(|v| v.to_string()).unwrap_or_default(),
                self.matches,
                self.runtime_ms
            ),
        }
    }
}

const FAMILY_CSV_HEADER: &str = "family,p,s,l,n,k,d_H,d_p,verdict,match,runtime_ms,error\n";

#[derive(Serialize)]
struct VerifyReport {
    schema: &'static str,
    #[serde(flatten)]
    row: FamilyRow,
}

#[derive(Serialize)]
struct MatrixReport {
    schema: &'static str,
    rows: Vec<FamilyRow>,
    all_match: bool,
    runtime_ms: u64,
}

#[derive(Serialize)]
struct CertificateReport {
    metric: Metric,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    engine: crate::distance::EngineKind,
    exact: bool,
    audit: crate::distance::SearchAudit,
}

impl CertificateReport {
    fn new(cert: &DistanceCertificate) -> CertificateReport {
        CertificateReport {
            metric: cert.metric,
            value: cert.value,
            witness: cert
                .witness
                .as_ref()
                .map(|w| w.symbols().iter().map(|e| e.to_string()).collect()),
            engine: cert.engine,
            exact: cert.exact,
            audit: cert.audit.clone(),
        }
    }
}

#[derive(Serialize)]
struct DistanceReport {
    schema: &'static str,
    code: CodeSpec,
    certificates: Vec<CertificateReport>,
}

#[derive(Serialize)]
struct ChannelReport {
    schema: &'static str,
    #[serde(flatten)]
    summary: ChannelSummary,
}

// ---------------------------------------------------------------------------
// commands

fn family_spec_from(family: &str, p: u64, s: Option<u32>, l: Option<u64>) -> Result<FamilySpec> {
    let family: Family = family.parse()?;
    if family == Family::T31 && (s.is_none() || l.is_none()) {
        return Err(Error::HypothesisViolated("T31 needs --s and --l".into()));
    }
    Ok(FamilySpec { family, p, s, l })
}

fn policy_from(engine: EngineArg) -> EnginePolicy {
    match engine {
        EngineArg::Auto => EnginePolicy::Full,
        EngineArg::Certified => EnginePolicy::CertifiedOnly,
        EngineArg::Analytic => EnginePolicy::NoExhaustive,
        EngineArg::Exhaustive => EnginePolicy::NoAnalytic,
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(Rendered, i32)> {
    let spec = family_spec_from(&args.family, args.p, args.s, args.l)?;
    let verification = verify_theorem_with(&spec, policy_from(args.engine))?;
    let row = FamilyRow::from_verification(&verification);
    let matched = row.matches;
    let report = VerifyReport { schema: SCHEMA, row };
    let rendered = Rendered {
        json: to_json(&report),
        csv: format!("{FAMILY_CSV_HEADER}{}", report.row.csv_line()),
        text: report.row.text_line(),
    };
    Ok((rendered, if matched { 0 } else { 1 }))
}

fn cmd_matrix(args: MatrixArgs) -> Result<(Rendered, i32)> {
    let start = Instant::now();
    let policy = policy_from(args.engine);
    let mut rows = Vec::new();
    let mut exit = 0i32;
    for spec in test_matrix() {
        let row_start = Instant::now();
        match verify_theorem_with(&spec, policy) {
            Ok(v) => {
                let row = FamilyRow::from_verification(&v);
                if !row.matches {
                    exit = exit.max(1);
                }
                rows.push(row);
            }
            Err(e) => {
                exit = exit.max(error_exit_code(&e));
                rows.push(FamilyRow::from_error(
                    &spec,
                    &e,
                    row_start.elapsed().as_millis() as u64,
                ));
            }
        }
    }
    let all_match = rows.iter().all(|r| r.matches);
    let report = MatrixReport {
        schema: SCHEMA,
        rows,
        all_match,
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    let mut csv = String::from(FAMILY_CSV_HEADER);
    let mut text = String::new();
    for row in &report.rows {
        csv.push_str(&row.csv_line());
        text.push_str(&row.text_line());
    }
    text.push_str(&format!(
        "all_match={} ({} ms)\n",
        report.all_match, report.runtime_ms
    ));
    let rendered = Rendered { json: to_json(&report), csv, text };
    Ok((rendered, exit))
}

fn cmd_distance(args: DistanceArgs) -> Result<(Rendered, i32)> {
    let raw = fs::read_to_string(&args.code_spec)?;
    let spec = CodeSpec::from_json(&raw)?;
    let code = spec.to_code()?;
    let metrics: &[Metric] = match args.metric {
        MetricArg::Hamming => &[Metric::Hamming],
        MetricArg::Pair => &[Metric::Pair],
        MetricArg::Both => &[Metric::Hamming, Metric::Pair],
    };
    let mut certificates = Vec::new();
    for &metric in metrics {
        let cert = match args.engine {
            EngineArg::Auto | EngineArg::Certified => {
                min_weight_certified(&code, metric, u64::MAX)?
            }
            EngineArg::Exhaustive => min_weight_exhaustive_with(&code, metric, args.force)?,
            EngineArg::Analytic => {
                if metric != Metric::Hamming {
                    return Err(Error::Parse(
                        "the analytic engine computes the Hamming metric only".into(),
                    ));
                }
                let profile = crate::codec::RepeatedRootProfile::from_code(&code)?;
                min_hamming_analytic(&profile)?
            }
        };
        certificates.push(CertificateReport::new(&cert));
    }
    let report = DistanceReport { schema: SCHEMA, code: spec, certificates };
    let mut csv = String::from("metric,value,engine,exact,witness\n");
    let mut text = String::new();
    for c in &report.certificates {
        let witness = c.witness.as_ref().map(|w| w.join(" ")).unwrap_or_default();
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            serde_plain(&c.metric),
            c.value,
            serde_plain(&c.engine),
            c.exact,
            witness
        ));
        text.push_str(&format!(
            "{}: {}{} by {} engine; witness: {}\n",
            serde_plain(&c.metric),
            c.value,
            if c.exact { "" } else { " (lower bound)" },
            serde_plain(&c.engine),
            if witness.is_empty() { "-".into() } else { witness }
        ));
    }
    let rendered = Rendered { json: to_json(&report), csv, text };
    Ok((rendered, 0))
}

fn cmd_channel(args: ChannelArgs) -> Result<(Rendered, i32)> {
    let spec = family_spec_from(&args.family, args.p, args.s, args.l)?;
    let summary = correctability_experiment(&spec, args.trials, args.common.seed)?;
    let all_pass = summary.all_pass;
    let report = ChannelReport { schema: SCHEMA, summary };
    let mut csv = String::from("family,p,t,ok,trials\n");
    let mut text = format!(
        "{} p={} d_p={} t_max={}\n",
        report.summary.family, report.summary.p, report.summary.d_p, report.summary.t_max
    );
    for c in &report.summary.per_t {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            report.summary.family, report.summary.p, c.t, c.ok, report.summary.trials
        ));
        text.push_str(&format!("  t={}: {}/{} recovered\n", c.t, c.ok, report.summary.trials));
    }
    text.push_str(&format!(
        "all_pass={} ({} ms)\n",
        report.summary.all_pass, report.summary.runtime_ms
    ));
    let rendered = Rendered { json: to_json(&report), csv, text };
    Ok((rendered, if all_pass { 0 } else { 1 }))
}

/// Render a serde unit-variant enum as its plain string.
fn serde_plain<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v)
        .expect("enum serialization")
        .trim_matches('"')
        .to_string()
}
