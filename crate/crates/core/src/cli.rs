//! Command-line front end: `generate`, `analyze`, `sweep` and `verify`.
//!
//! Exit status: 0 success, 1 a verification check failed, 2 usage error,
//! 3 budget exceeded. Output never depends on anything but the arguments,
//! so identical invocations produce identical bytes (except when a time
//! budget cuts a run short).

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bitseq::BitSeq;
use crate::complexity::{
    block_frequencies, correlation_measure, default_dmax, expansion_complexity,
    linear_complexity, linear_complexity_profile, moc_fast, subword_complexity, MocTracker,
};
use crate::error::Error;
use crate::sequences::{prefix, Family, IndexPoly, SequenceSpec};
use crate::verification::{run_suite, SuiteConfig};

/// Largest prefix for maximum order and linear complexity sweeps.
pub const MAX_PROFILE_N: usize = 100_000;
/// Largest prefix for expansion complexity searches.
pub const MAX_EC_N: usize = 512;
/// Largest prefix for annihilator evaluation.
pub const MAX_ANNIHILATOR_N: usize = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    CheckFailed = 1,
    Usage = 2,
    BudgetExceeded = 3,
}

impl Outcome {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Parser, Debug)]
#[command(name = "autoseq", version, about = "Automatic sequences along polynomials and their complexity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a sequence prefix.
    Generate(GenerateArgs),
    /// Compute one complexity measure of a prefix.
    Analyze(AnalyzeArgs),
    /// Complexity profile as CSV: N,value,bound,ratio.
    Sweep(SweepArgs),
    /// Run the identity and bound suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    ThueMorse,
    Pattern,
    RudinShapiro,
    Explicit,
}

#[derive(Args, Debug, Clone)]
pub struct SeqArgs {
    #[arg(long, value_enum, default_value = "thue-morse")]
    pub family: FamilyArg,
    /// Block length for `--family pattern`.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Index polynomial: `i`, `i^d`, or constant-first coefficients `c0,c1,...`.
    #[arg(long, default_value = "i")]
    pub poly: String,
    /// Bit-string file for `--family explicit`.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bits,
    Csv,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Moc,
    Lc,
    Ec,
    Subword,
    Freq,
    Corr,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "bits")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long, value_enum)]
    pub measure: MeasureArg,
    #[arg(long)]
    pub n: usize,
    /// Block length for `subword` and `freq`.
    #[arg(long, default_value_t = 1)]
    pub block: usize,
    /// Order of the correlation measure.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    /// Largest lag searched by the correlation measure.
    #[arg(long, default_value_t = 64)]
    pub max_lag: usize,
    /// Degree bound for `ec` (default ceil(sqrt(2N)) + 1).
    #[arg(long)]
    pub dmax: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "records")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long, value_enum, default_value = "moc")]
    pub measure: MeasureArg,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1)]
    pub nmin: usize,
    /// Row spacing (useful for `ec`, which is recomputed per row).
    #[arg(long, default_value_t = 1)]
    pub step: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 60)]
    pub budget_secs: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest l for the Thue-Morse identities.
    #[arg(long, default_value_t = 20)]
    pub lmax: u32,
    /// Largest k for the pattern-sequence identities.
    #[arg(long, default_value_t = 8)]
    pub kmax: u32,
    /// Largest l for the pattern-sequence identities.
    #[arg(long, default_value_t = 12)]
    pub sk_lmax: u32,
    /// Largest N for the maximum order complexity bounds.
    #[arg(long, default_value_t = MAX_PROFILE_N)]
    pub nmax: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Random strings compared between the naive and fast algorithms.
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 60)]
    pub budget_secs: u64,
    /// Replace every identity by its negative control (all must fail).
    #[arg(long, hide = true)]
    pub inject_mutation: bool,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(io::Error),
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs a parsed command. Results go to `--out` when given and to `stdout`
/// otherwise; diagnostics go to `stderr`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let result = match &cli.command {
        Command::Generate(a) => with_output(a.out.as_deref(), stdout, |w| run_generate(a, w)),
        Command::Analyze(a) => with_output(a.out.as_deref(), stdout, |w| run_analyze(a, w)),
        Command::Sweep(a) => with_output(a.out.as_deref(), stdout, |w| run_sweep(a, w, stderr)),
        Command::Verify(a) => with_output(a.out.as_deref(), stdout, |w| run_verify(a, w, stderr)),
    };
    match result {
        Ok(outcome) => outcome,
        Err(CliError::Lib(Error::BudgetExceeded { work, partial })) => {
            let _ = writeln!(
                stderr,
                "id=BUDGET status=exceeded work={work} partial={partial}"
            );
            Outcome::BudgetExceeded
        }
        Err(CliError::Budget(msg)) => {
            let _ = writeln!(stderr, "id=BUDGET status=exceeded {msg}");
            Outcome::BudgetExceeded
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome::Usage
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome::Usage
        }
    }
}

fn with_output(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    run: impl FnOnce(&mut dyn Write) -> CliResult<Outcome>,
) -> CliResult<Outcome> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            let outcome = run(&mut w);
            w.flush()?;
            outcome
        }
        None => run(stdout),
    }
}

/// Builds the sequence description from the command-line flags.
pub fn sequence_spec(args: &SeqArgs) -> crate::Result<SequenceSpec> {
    let poly: IndexPoly = args.poly.parse()?;
    let family = match args.family {
        FamilyArg::ThueMorse => Family::ThueMorse,
        FamilyArg::Pattern => Family::Pattern(args.k),
        FamilyArg::RudinShapiro => Family::Pattern(2),
        FamilyArg::Explicit => {
            let path = args.input.as_ref().ok_or_else(|| {
                Error::InvalidParameter("--family explicit needs --input".into())
            })?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            Family::ExplicitBits(BitSeq::from_text(&text)?)
        }
    };
    SequenceSpec::new(family, poly)
}

fn describe(spec: &SequenceSpec) -> String {
    let family = match &spec.family {
        Family::ThueMorse => "thue-morse".to_string(),
        Family::Pattern(k) => format!("pattern{k}"),
        Family::ExplicitBits(_) => "explicit".to_string(),
    };
    format!("{family}:{}", spec.index_poly)
}

fn run_generate(a: &GenerateArgs, w: &mut dyn Write) -> CliResult<Outcome> {
    let spec = sequence_spec(&a.seq)?;
    let s = prefix(&spec, a.n)?;
    match a.format {
        Format::Bits => w.write_all(s.to_text().as_bytes())?,
        Format::Csv => {
            writeln!(w, "i,value")?;
            for (i, b) in s.iter().enumerate() {
                writeln!(w, "{i},{}", b as u8)?;
            }
        }
        Format::Records => {
            for (i, b) in s.iter().enumerate() {
                writeln!(w, "i={i} value={}", b as u8)?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn run_analyze(a: &AnalyzeArgs, w: &mut dyn Write) -> CliResult<Outcome> {
    let spec = sequence_spec(&a.seq)?;
    let s = prefix(&spec, a.n)?;
    let n = a.n;
    let (value, extra): (String, String) = match a.measure {
        MeasureArg::Moc => {
            let r = moc_fast(&s, n)?;
            let witness = r.witness.map_or_else(
                || "-".to_string(),
                |w| format!("{},{},{}", w.first, w.second, w.window),
            );
            (r.value.to_string(), format!("witness={witness}"))
        }
        MeasureArg::Lc => (linear_complexity(&s, n)?.to_string(), String::new()),
        MeasureArg::Ec => {
            if n > MAX_EC_N {
                return Err(CliError::Budget(format!("N={n} exceeds the EC search cap {MAX_EC_N}")));
            }
            let dmax = a.dmax.unwrap_or_else(|| default_dmax(n));
            match expansion_complexity(&s, n, dmax)? {
                Some(r) => {
                    let h = r.annihilator.map_or_else(|| "-".to_string(), |h| h.to_string().replace(' ', ""));
                    (r.value.to_string(), format!("annihilator={h}"))
                }
                None => ("none".to_string(), format!("exceeds_dmax={dmax}")),
            }
        }
        MeasureArg::Subword => (
            subword_complexity(&s, a.block)?.to_string(),
            format!("block={}", a.block),
        ),
        MeasureArg::Freq => {
            let f = block_frequencies(&s, a.block)?;
            let counts: Vec<String> = f
                .counts
                .iter()
                .enumerate()
                .map(|(b, c)| format!("{b:0width$b}:{c}", width = a.block))
                .collect();
            (f.total().to_string(), format!("block={} counts={}", a.block, counts.join(",")))
        }
        MeasureArg::Corr => {
            let c = correlation_measure(&s, n, a.order, a.max_lag)?;
            let lags: Vec<String> = c.lags.iter().map(usize::to_string).collect();
            (
                c.value.to_string(),
                format!(
                    "order={} max_lag={} lags={} window={}",
                    a.order,
                    c.max_lag,
                    lags.join(","),
                    c.window
                ),
            )
        }
    };
    let measure = format!("{:?}", a.measure).to_lowercase();
    match a.format {
        Format::Csv => {
            writeln!(w, "measure,N,value")?;
            writeln!(w, "{measure},{n},{value}")?;
        }
        _ => {
            let mut line = format!("measure={measure} seq={} N={n} value={value}", describe(&spec));
            if !extra.is_empty() {
                let _ = write!(line, " {extra}");
            }
            writeln!(w, "{line}")?;
        }
    }
    Ok(Outcome::Success)
}

/// Bound column of the sweep CSV, when a known bound applies at `n`.
pub fn sweep_bound(spec: &SequenceSpec, measure: MeasureArg, n: usize) -> Option<f64> {
    let nf = n as f64;
    let squares = spec.index_poly == IndexPoly::squares();
    match (measure, &spec.family) {
        (MeasureArg::Ec, _) => Some((2.0 * nf).sqrt()),
        (MeasureArg::Moc, Family::ThueMorse | Family::Pattern(1)) if squares && n >= 21 => {
            Some((2.0 * nf / 5.0).sqrt())
        }
        (MeasureArg::Moc, Family::ThueMorse | Family::Pattern(1))
            if spec.index_poly.is_identity() && n >= 4 =>
        {
            Some(nf / 5.0 + 1.0)
        }
        (MeasureArg::Moc, Family::Pattern(k)) if squares && *k >= 2 && n >= (1usize << (2 * k + 2).min(62)) => {
            Some((nf / 8.0).sqrt())
        }
        _ => None,
    }
}

fn csv_row(n: usize, value: u64, bound: Option<f64>) -> String {
    let bound = bound.map_or_else(String::new, |b| format!("{b:.6}"));
    let ratio = value as f64 / (n as f64).sqrt();
    format!("{n},{value},{bound},{ratio:.6}\n")
}

fn run_sweep(a: &SweepArgs, w: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<Outcome> {
    let spec = sequence_spec(&a.seq)?;
    let cap = match a.measure {
        MeasureArg::Moc | MeasureArg::Lc => MAX_PROFILE_N,
        MeasureArg::Ec => MAX_EC_N,
        other => {
            return Err(Error::InvalidParameter(format!(
                "sweep supports moc, lc and ec, not {other:?}"
            ))
            .into())
        }
    };
    if a.nmin == 0 || a.step == 0 || a.nmin > a.nmax {
        return Err(Error::InvalidParameter("need 1 <= nmin <= nmax and step >= 1".into()).into());
    }
    if a.nmax > cap {
        return Err(CliError::Budget(format!("nmax={} exceeds the sweep cap {cap}", a.nmax)));
    }
    let s = prefix(&spec, a.nmax)?;
    let deadline = Instant::now() + Duration::from_secs(a.budget_secs);
    writeln!(w, "N,value,bound,ratio")?;

    let rows = (a.nmin..=a.nmax).step_by(a.step);
    let mut written = 0usize;
    let out_of_time = |written: usize, stderr: &mut dyn Write| -> io::Result<bool> {
        if Instant::now() > deadline {
            writeln!(
                stderr,
                "id=BUDGET status=exceeded rows_written={written} budget_secs={}",
                a.budget_secs
            )?;
            return Ok(true);
        }
        Ok(false)
    };
    match a.measure {
        MeasureArg::Moc => {
            let mut tracker = MocTracker::with_capacity(a.nmax);
            let mut next_row = rows.clone().peekable();
            for i in 0..a.nmax {
                tracker.push(s.get(i));
                let n = i + 1;
                if next_row.peek() == Some(&n) {
                    next_row.next();
                    let v = tracker.result().value as u64;
                    w.write_all(csv_row(n, v, sweep_bound(&spec, a.measure, n)).as_bytes())?;
                    written += 1;
                    if written.is_multiple_of(1024) && out_of_time(written, stderr)? {
                        return Ok(Outcome::BudgetExceeded);
                    }
                }
            }
        }
        MeasureArg::Lc => {
            let profile = linear_complexity_profile(&s, a.nmax)?;
            if out_of_time(0, stderr)? {
                return Ok(Outcome::BudgetExceeded);
            }
            for n in rows {
                let v = profile.points[n - 1].1;
                w.write_all(csv_row(n, v, sweep_bound(&spec, a.measure, n)).as_bytes())?;
            }
        }
        MeasureArg::Ec => {
            for n in rows {
                let v = expansion_complexity(&s, n, default_dmax(n))?
                    .expect("default bound always admits an annihilator")
                    .value as u64;
                w.write_all(csv_row(n, v, sweep_bound(&spec, a.measure, n)).as_bytes())?;
                written += 1;
                if out_of_time(written, stderr)? {
                    return Ok(Outcome::BudgetExceeded);
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(Outcome::Success)
}

fn run_verify(a: &VerifyArgs, w: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<Outcome> {
    if a.nmax > MAX_PROFILE_N {
        return Err(CliError::Budget(format!("nmax={} exceeds {MAX_PROFILE_N}", a.nmax)));
    }
    let cfg = SuiteConfig {
        lmax: a.lmax,
        sk_lmax: a.sk_lmax,
        kmax: a.kmax,
        theorem1_nmax: a.nmax,
        theorem2_nmax: a.nmax,
        suwi_nmax: a.nmax.min(5000),
        annihilator_n: MAX_ANNIHILATOR_N,
        oracle_samples: a.samples,
        seed: a.seed,
        mutate: a.inject_mutation,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let budget = Duration::from_secs(a.budget_secs);
    let mut io_error = None;
    let records = run_suite(&cfg, |r| {
        if io_error.is_none() {
            if let Err(e) = writeln!(w, "{r}") {
                io_error = Some(e);
            }
        }
    })?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    let failed: Vec<String> = records
        .iter()
        .filter(|r| !r.holds())
        .map(|r| r.to_string())
        .collect();
    writeln!(
        w,
        "id=SUMMARY checks={} failed={} status={}",
        records.len(),
        failed.len(),
        if failed.is_empty() { "pass" } else { "fail" }
    )?;
    if start.elapsed() > budget {
        writeln!(
            stderr,
            "id=BUDGET status=exceeded elapsed_secs={} budget_secs={}",
            start.elapsed().as_secs(),
            a.budget_secs
        )?;
        return Ok(Outcome::BudgetExceeded);
    }
    if failed.is_empty() {
        Ok(Outcome::Success)
    } else {
        for f in &failed {
            writeln!(stderr, "FAILED {f}")?;
        }
        Ok(Outcome::CheckFailed)
    }
}
