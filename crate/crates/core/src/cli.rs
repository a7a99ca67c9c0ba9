//! Command-line front end behind the `tjq` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code: 0 when every check passes, 1 on a verification failure, 2 on a
//! usage error. All numbers are printed as exact rational strings.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::quaternions::{LambdaSig, Quaternion, QuaternionRecord};
use crate::scalars::{Poly3, Rational, Ring, Scalar};
use crate::sequences::{j3_binet, k3_binet, x_cyclic, CompanionMatrix, Family};
use crate::tjq::{genfun_coeffs, run_suite, IdentityId, LambdaMode, QuatSeqKind, QuatSequences, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Above this index `bench` skips the recurrence cross-check.
const RECURRENCE_CHECK_MAX: u64 = 10_000;

/// Results are listed in full up to this many when `--show auto`.
const AUTO_SHOW_MAX: usize = 100;

#[derive(Debug, Parser)]
#[command(name = "tjq", version, about = "Third-order Jacobsthal quaternions: tables, identity checks, benchmarks")]
struct Cli {
    /// Use the seeds (0, 1, 3) for K, i.e. K_0 = 0, instead of (3, 1, 3).
    #[arg(long, global = true)]
    k0_paper: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print j3, k3 or x3 over an index range.
    Seq(SeqArgs),
    /// Print JG_n or KG_n over an index range.
    Quat(QuatArgs),
    /// Check identities over parameter grids.
    Verify(VerifyArgs),
    /// Compare generating-function coefficients with the sequence.
    Genfun(GenfunArgs),
    /// Time one evaluation engine at a single index.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqName {
    J3,
    K3,
    X3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineName {
    Recurrence,
    Binet,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuatName {
    Jg,
    Kg,
}

impl QuatName {
    fn kind(self) -> QuatSeqKind {
        match self {
            QuatName::Jg => QuatSeqKind::JG,
            QuatName::Kg => QuatSeqKind::KG,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeName {
    Symbolic,
    Point,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Auto,
    All,
    Failures,
}

/// `symbolic` or a rational triple such as `1,-1/2,0`.
#[derive(Debug, Clone, PartialEq)]
enum LambdaArg {
    Symbolic,
    Point([Rational; 3]),
}

fn parse_lambda(s: &str) -> Result<LambdaArg, String> {
    if s.trim() == "symbolic" {
        return Ok(LambdaArg::Symbolic);
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected `symbolic` or three comma-separated rationals, got `{s}`"));
    }
    let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|e| format!("{e}"))?;
    }
    Ok(LambdaArg::Point(out))
}

/// `FROM..TO`, `FROM..=TO` (both inclusive) or a single index.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let s = s.trim().replace('\u{2212}', "-");
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("invalid index `{t}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = int(&s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}: FROM must not exceed TO"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Clone)]
struct IdList(Vec<IdentityId>);

fn parse_identity(s: &str) -> Result<IdList, String> {
    if s.trim() == "all" {
        return Ok(IdList(IdentityId::ALL.to_vec()));
    }
    s.split(',').map(|t| t.trim().parse::<IdentityId>().map_err(|e| e.to_string())).collect::<Result<_, _>>().map(IdList)
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(value_enum)]
    kind: SeqName,
    /// Inclusive index range, e.g. `-3..3`.
    #[arg(value_parser = parse_range, allow_hyphen_values = true)]
    range: RangeInclusive<i64>,
    /// Evaluation engine (also accepted as `--engine`).
    #[arg(value_enum, conflicts_with = "engine_flag")]
    engine: Option<EngineName>,
    #[arg(long = "engine", value_enum, id = "engine_flag")]
    engine_flag: Option<EngineName>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct QuatArgs {
    #[arg(value_enum)]
    kind: QuatName,
    /// `symbolic` or `l1,l2,l3`.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true, default_value = "symbolic")]
    lambda: LambdaArg,
    #[arg(value_parser = parse_range, allow_hyphen_values = true)]
    range: RangeInclusive<i64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list of identity names.
    #[arg(long, value_parser = parse_identity, default_value = "all")]
    identity: IdList,
    /// Defaults to `point` when `--lambda` is given, `symbolic` otherwise.
    #[arg(long, value_enum)]
    lambda_mode: Option<ModeName>,
    /// A λ point; repeat for several.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Vec<LambdaArg>,
    /// Random λ triples added to the table rows in `sampled` mode.
    #[arg(long, default_value_t = 32)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-12..60")]
    n_range: RangeInclusive<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-6..6")]
    a_range: RangeInclusive<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-6..6")]
    b_range: RangeInclusive<i64>,
    /// Which results to list; `auto` lists all of a small run, else failures.
    #[arg(long, value_enum, default_value = "auto")]
    show: Show,
    /// Shorthand for `--show all`.
    #[arg(long, conflicts_with = "show")]
    all: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct GenfunArgs {
    #[arg(value_enum)]
    kind: QuatName,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true, default_value = "symbolic")]
    lambda: LambdaArg,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    terms: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(value_enum)]
    engine: EngineName,
    #[arg(long)]
    n: u64,
    #[arg(long, alias = "reps", default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    repetitions: u64,
    #[arg(long, value_enum, default_value = "j3")]
    kind: SeqName,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// A failure the caller maps to an exit code.
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type CmdResult = Result<bool, Failure>;

type ClosedForm = fn(i64) -> Rational;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let k_family = if cli.k0_paper { Family::k3_paper() } else { Family::k3() };
    let result = match cli.command {
        Command::Seq(a) => cmd_seq(a, &k_family, out),
        Command::Quat(a) => cmd_quat(a, &k_family, out),
        Command::Verify(a) => cmd_verify(a, k_family, out),
        Command::Genfun(a) => cmd_genfun(a, &k_family, out),
        Command::Bench(a) => cmd_bench(a, &k_family, out),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct SeqRow {
    n: i64,
    value: Rational,
}

fn cmd_seq(args: SeqArgs, k_family: &Family, out: &mut dyn Write) -> CmdResult {
    let engine = args.engine.or(args.engine_flag).unwrap_or(EngineName::Recurrence);
    let (lo, hi) = (*args.range.start(), *args.range.end());
    if engine == EngineName::Matrix && lo < 0 {
        return Err(Failure::Usage("the matrix engine requires FROM ≥ 0".into()));
    }
    let family = match args.kind {
        SeqName::J3 => Some(Family::j3()),
        SeqName::K3 => Some(k_family.clone()),
        SeqName::X3 => None,
    };
    let rows: Vec<SeqRow> = match (&family, engine) {
        (None, EngineName::Recurrence) => args.range.map(|n| SeqRow { n, value: x_cyclic(n).into() }).collect(),
        (None, _) => return Err(Failure::Usage("x3 is tabulated directly; only the recurrence engine applies".into())),
        (Some(f), EngineName::Recurrence) => {
            f.range(lo, hi).into_iter().zip(lo..=hi).map(|(value, n)| SeqRow { n, value }).collect()
        }
        (Some(f), EngineName::Matrix) => args
            .range
            .map(|n| Ok(SeqRow { n, value: f.term_fast(n).map_err(|e| Failure::Usage(e.to_string()))?.into() }))
            .collect::<Result<_, Failure>>()?,
        (Some(f), EngineName::Binet) => {
            let closed: ClosedForm = match args.kind {
                SeqName::J3 => j3_binet,
                _ if f == &Family::k3() => k3_binet,
                _ => return Err(Failure::Usage("the Binet form describes K_0 = 3; drop --k0-paper".into())),
            };
            args.range.map(|n| SeqRow { n, value: closed(n) }).collect()
        }
    };
    match args.format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(|r| vec![r.n.to_string(), r.value.to_string()]).collect();
            write_csv(out, &["n", "value"], &body)?;
        }
    }
    Ok(true)
}

/// One quaternion per index, optionally tagged with a comparison result.
#[derive(Serialize)]
struct QuatRow {
    n: i64,
    #[serde(flatten)]
    q: QuaternionRecord,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

impl QuatRow {
    fn csv(&self) -> Vec<String> {
        let mut row = vec![self.n.to_string()];
        row.extend([&self.q.s, &self.q.e1, &self.q.e2, &self.q.e3].map(Scalar::to_string));
        if let Some(m) = self.matches {
            row.push(m.to_string());
        }
        row
    }
}

fn write_quat_rows(out: &mut dyn Write, rows: &[QuatRow], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => write_json(out, rows),
        Format::Csv => {
            let mut header = vec!["n", "s", "e1", "e2", "e3"];
            if rows.first().is_some_and(|r| r.matches.is_some()) {
                header.push("match");
            }
            let body: Vec<Vec<String>> = rows.iter().map(QuatRow::csv).collect();
            write_csv(out, &header, &body)
        }
    }
}

fn quat_rows<S: Ring>(sig: &LambdaSig<S>, kind: QuatSeqKind, range: RangeInclusive<i64>, k_family: &Family) -> Vec<QuatRow> {
    let seqs = QuatSequences::with_families(sig, Family::j3(), k_family.clone());
    range.map(|n| QuatRow { n, q: seqs.term(kind, n).to_record(), matches: None }).collect()
}

fn cmd_quat(args: QuatArgs, k_family: &Family, out: &mut dyn Write) -> CmdResult {
    let kind = args.kind.kind();
    let rows = match args.lambda {
        LambdaArg::Symbolic => quat_rows(&LambdaSig::<Poly3>::symbolic(), kind, args.range, k_family),
        LambdaArg::Point(p) => quat_rows(&LambdaSig::point(p), kind, args.range, k_family),
    };
    write_quat_rows(out, &rows, args.format)?;
    Ok(true)
}

#[derive(Serialize)]
struct Summary {
    passed: bool,
    checks: usize,
    failed: usize,
    informative_failed: usize,
}

fn cmd_verify(args: VerifyArgs, k_family: Family, out: &mut dyn Write) -> CmdResult {
    let mode = match (args.lambda_mode, args.lambda.is_empty()) {
        (None, true) | (Some(ModeName::Symbolic), true) => LambdaMode::Symbolic,
        (Some(ModeName::Symbolic), false) => {
            return Err(Failure::Usage("--lambda has no effect in symbolic mode".into()));
        }
        (Some(ModeName::Point), true) => return Err(Failure::Usage("point mode needs at least one --lambda".into())),
        (None, false) | (Some(ModeName::Point), false) => {
            let mut points = Vec::new();
            for l in &args.lambda {
                match l {
                    LambdaArg::Point(p) => points.push(p.clone()),
                    LambdaArg::Symbolic => return Err(Failure::Usage("point mode needs rational --lambda triples".into())),
                }
            }
            LambdaMode::Points(points)
        }
        (Some(ModeName::Sampled), true) => LambdaMode::Sampled { random: args.samples },
        (Some(ModeName::Sampled), false) => {
            return Err(Failure::Usage("sampled mode draws its own λ points; drop --lambda".into()));
        }
    };
    let cfg = SuiteConfig {
        ids: args.identity.0,
        n_range: args.n_range,
        a_range: args.a_range,
        b_range: args.b_range,
        mode,
        seed: args.seed,
        k_family,
    };
    let report = run_suite(&cfg).map_err(|e| Failure::Usage(e.to_string()))?;
    let show = if args.all { Show::All } else { args.show };
    let listed: Vec<_> = match show {
        Show::All => report.results.iter().collect(),
        Show::Auto if report.results.len() <= AUTO_SHOW_MAX => report.results.iter().collect(),
        Show::Auto | Show::Failures => report.failures().collect(),
    };
    let passed = report.all_passed();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                summary: Summary,
                totals: &'a std::collections::BTreeMap<String, crate::tjq::suite::Totals>,
                results: Vec<&'a crate::tjq::VerificationResult>,
            }
            let summary = Summary {
                passed,
                checks: report.results.len(),
                failed: report.totals.values().map(|t| t.failed).sum(),
                informative_failed: report.totals.values().map(|t| t.informative_failed).sum(),
            };
            write_json(out, &Report { summary, totals: &report.totals, results: listed })?;
        }
        Format::Csv => {
            let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
            let body: Vec<Vec<String>> = listed
                .iter()
                .map(|r| {
                    let mut row = vec![
                        r.id.name().to_string(),
                        opt(r.params.n),
                        opt(r.params.a),
                        opt(r.params.b),
                        r.params.part.map(|p| p.to_string()).unwrap_or_default(),
                        r.lambda_mode.to_string(),
                        r.pass.to_string(),
                        r.informative.to_string(),
                    ];
                    for q in [&r.lhs, &r.rhs] {
                        row.extend([&q.s, &q.e1, &q.e2, &q.e3].map(Scalar::to_string));
                    }
                    row
                })
                .collect();
            let header = [
                "id", "n", "a", "b", "part", "lambda", "pass", "informative", "lhs_s", "lhs_e1", "lhs_e2", "lhs_e3",
                "rhs_s", "rhs_e1", "rhs_e2", "rhs_e3",
            ];
            write_csv(out, &header, &body)?;
        }
    }
    Ok(passed)
}

fn genfun_rows<S: Ring>(sig: &LambdaSig<S>, kind: QuatSeqKind, terms: usize, k_family: &Family) -> Vec<QuatRow> {
    let seqs = QuatSequences::with_families(sig, Family::j3(), k_family.clone());
    genfun_coeffs(kind, sig, terms)
        .into_iter()
        .enumerate()
        .map(|(i, c): (usize, Quaternion<S>)| {
            let n = i as i64;
            QuatRow { n, matches: Some(c == seqs.term(kind, n)), q: c.to_record() }
        })
        .collect()
}

fn cmd_genfun(args: GenfunArgs, k_family: &Family, out: &mut dyn Write) -> CmdResult {
    let kind = args.kind.kind();
    let terms = args.terms as usize;
    let rows = match args.lambda {
        LambdaArg::Symbolic => genfun_rows(&LambdaSig::<Poly3>::symbolic(), kind, terms, k_family),
        LambdaArg::Point(p) => genfun_rows(&LambdaSig::point(p), kind, terms, k_family),
    };
    write_quat_rows(out, &rows, args.format)?;
    Ok(rows.iter().all(|r| r.matches == Some(true)))
}

#[derive(Serialize)]
struct BenchReport {
    engine: &'static str,
    kind: &'static str,
    n: u64,
    repetitions: u64,
    min_seconds: f64,
    median_seconds: f64,
    bit_length: u64,
    /// The value itself when it fits in 128 bits.
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Rational>,
    /// `pass`, `fail` or `skipped`.
    recurrence_check: &'static str,
    closed_form_check: &'static str,
    composition_check: &'static str,
}

fn verdict(ok: Option<bool>) -> &'static str {
    match ok {
        None => "skipped",
        Some(true) => "pass",
        Some(false) => "fail",
    }
}

fn cmd_bench(args: BenchArgs, k_family: &Family, out: &mut dyn Write) -> CmdResult {
    let n = i64::try_from(args.n).map_err(|_| Failure::Usage("n is too large".into()))?;
    let (kind, family, closed): (&str, Family, Option<ClosedForm>) = match args.kind {
        SeqName::J3 => ("j3", Family::j3(), Some(j3_binet)),
        SeqName::K3 if k_family == &Family::k3() => ("k3", Family::k3(), Some(k3_binet)),
        SeqName::K3 => ("k3", k_family.clone(), None),
        SeqName::X3 => return Err(Failure::Usage("bench supports j3 and k3".into())),
    };
    let eval = |engine: EngineName| -> Result<Rational, Failure> {
        match engine {
            EngineName::Recurrence => Ok(family.range(n, n).remove(0)),
            EngineName::Matrix => Ok(family.term_fast(n).map_err(|e| Failure::Usage(e.to_string()))?.into()),
            EngineName::Binet => closed
                .map(|f| f(n))
                .ok_or_else(|| Failure::Usage("the Binet form describes K_0 = 3; drop --k0-paper".into())),
        }
    };

    let mut seconds = Vec::new();
    let mut value = Rational::zero();
    for _ in 0..args.repetitions {
        let start = Instant::now();
        value = eval(args.engine)?;
        seconds.push(start.elapsed().as_secs_f64());
    }
    seconds.sort_by(f64::total_cmp);

    let recurrence = (args.engine != EngineName::Recurrence && args.n <= RECURRENCE_CHECK_MAX)
        .then(|| eval(EngineName::Recurrence).map(|v| v == value))
        .transpose()?;
    let closed_form = (args.engine != EngineName::Binet)
        .then(|| closed.map(|f| f(n) == value))
        .flatten();
    // M^a M^b = M^(a+b) at the split a = n/2, read off through the seeds.
    let composition = (args.engine == EngineName::Matrix).then(|| {
        let a = args.n / 2;
        let m = CompanionMatrix::power(a).mul(&CompanionMatrix::power(args.n - a));
        let [s0, s1, s2] = family.seeds();
        let row = &m.0[2];
        Rational::from(&row[0] * s2 + &row[1] * s1 + &row[2] * s0) == value
    });

    let bits = value.numer().bits();
    let report = BenchReport {
        engine: match args.engine {
            EngineName::Recurrence => "recurrence",
            EngineName::Binet => "binet",
            EngineName::Matrix => "matrix",
        },
        kind,
        n: args.n,
        repetitions: args.repetitions,
        min_seconds: seconds[0],
        median_seconds: seconds[seconds.len() / 2],
        bit_length: bits,
        value: (bits <= 128).then(|| value.clone()),
        recurrence_check: verdict(recurrence),
        closed_form_check: verdict(closed_form),
        composition_check: verdict(composition),
    };
    match args.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(&report)?;
            w.flush()?;
        }
    }
    Ok(![recurrence, closed_form, composition].contains(&Some(false)))
}
