use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qjpm::experiments::{
    gate_report, run_classic, run_search_batch, run_sweep, run_verification, MatchCount, SweepConfig, VerifyOptions,
};
use qjpm::grover::{BbhtConfig, Mode, Schedule, SearchOptions};
use qjpm::state::DEFAULT_QUBIT_CAP;
use qjpm::text::{ingest_text, Alphabet, SymbolString};
use qjpm::Error;

const QUBIT_CAP_VAR: &str = "QJPM_QUBIT_CAP";
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_VERIFICATION_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "qjpm", version, about = "Quantum jumbled pattern matching experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sliding-window and jumbled-index baselines.
    Classic(ClassicArgs),
    /// Run seeded Grover search trials.
    Search(SearchArgs),
    /// Fit the growth of oracle calls over planted instances.
    Sweep(SweepArgs),
    /// Count preparation circuit gates.
    Gates(GatesArgs),
    /// Run every cross-module consistency check.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Fixed,
    Mateus,
    Bbht,
}

impl From<ScheduleArg> for Schedule {
    fn from(s: ScheduleArg) -> Self {
        match s {
            ScheduleArg::Fixed => Schedule::FixedOptimal,
            ScheduleArg::Mateus => Schedule::MateusRandom,
            ScheduleArg::Bbht => Schedule::Bbht(BbhtConfig::default()),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Compressed,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Compressed => Mode::Compressed,
            ModeArg::Full => Mode::Full,
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Text file.
    #[arg(long)]
    text: PathBuf,
    /// Pattern, inline or `@path`.
    #[arg(long)]
    pattern: String,
    /// Alphabet, inline or `@path`; inferred from text and pattern when absent.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args)]
struct ClassicArgs {
    #[command(flatten)]
    input: Input,
    /// Also build the index for every window size.
    #[arg(long)]
    full_index: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "compressed")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "fixed")]
    schedule: ScheduleArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Root seed; a random one is drawn and recorded when absent.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    /// Text lengths, strictly increasing.
    #[arg(long, value_delimiter = ',', default_values_t = [64, 128, 256, 512, 1024, 2048, 4096])]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 8)]
    pattern_len: usize,
    #[arg(long, default_value_t = 4)]
    alphabet_size: usize,
    /// Matches per window; a unique match when absent.
    #[arg(long)]
    density: Option<f64>,
    #[arg(long, value_enum, default_value = "fixed")]
    schedule: ScheduleArg,
    #[arg(long, default_value_t = 25)]
    trials: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GatesArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3, 4])]
    s_list: Vec<usize>,
    #[arg(long = "m", value_delimiter = ',', default_values_t = [1, 2, 3])]
    m_list: Vec<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Use a composite symbol codec so the fingerprint check fails.
    #[arg(long)]
    sabotage: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Serialize)]
struct SearchConfig<'a> {
    text: &'a [u8],
    pattern: &'a [u8],
    alphabet: &'a [u8],
    mode: Mode,
    schedule: Schedule,
    trials: usize,
    seed: u64,
    qubit_cap: usize,
}

enum Failure {
    Invalid(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            report_error("usage", &e.to_string());
            return ExitCode::from(EXIT_INVALID_INPUT);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            report_error("invalid-input", &e.to_string());
            ExitCode::from(EXIT_INVALID_INPUT)
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFICATION_FAILURE),
    }
}

fn report_error(kind: &str, message: &str) {
    let line = serde_json::json!({ "error": kind, "message": message.trim() });
    eprintln!("{line}");
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classic(args) => classic(args),
        Command::Search(args) => search(args),
        Command::Sweep(args) => sweep(args),
        Command::Gates(args) => gates(args),
        Command::Verify(args) => verify(args),
    }
}

fn qubit_cap() -> Result<usize, Error> {
    match std::env::var(QUBIT_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{QUBIT_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_QUBIT_CAP),
    }
}

fn strip_newline(mut bytes: Vec<u8>) -> Vec<u8> {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    bytes
}

fn read_file(path: &Path) -> Result<Vec<u8>, Error> {
    Ok(strip_newline(fs::read(path)?))
}

fn inline_or_file(arg: &str) -> Result<Vec<u8>, Error> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(Path::new(path)),
        None => Ok(arg.as_bytes().to_vec()),
    }
}

struct Loaded {
    text_bytes: Vec<u8>,
    pattern_bytes: Vec<u8>,
    alphabet: Alphabet,
    text: SymbolString,
    pattern: SymbolString,
}

fn load(input: &Input) -> Result<Loaded, Error> {
    let text_bytes = read_file(&input.text)?;
    let pattern_bytes = inline_or_file(&input.pattern)?;
    if text_bytes.is_empty() || pattern_bytes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let alphabet = match &input.alphabet {
        Some(a) => Alphabet::new(inline_or_file(a)?)?,
        None => Alphabet::from_distinct_bytes(&[text_bytes.as_slice(), pattern_bytes.as_slice()].concat())?,
    };
    let (text, alphabet) = ingest_text(&text_bytes, Some(&alphabet))?;
    let pattern = alphabet.encode(&pattern_bytes)?;
    if pattern.len() > text.len() {
        return Err(Error::PatternTooLong {
            pattern: pattern.len(),
            text: text.len(),
        });
    }
    Ok(Loaded {
        text_bytes,
        pattern_bytes,
        alphabet,
        text,
        pattern,
    })
}

fn emit(output: &Output, write: impl FnOnce(&mut dyn Write) -> Result<(), Error>) -> Result<(), Failure> {
    match &output.out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Writes a JSON side document next to a CSV output, or to stderr when the
/// CSV goes to stdout.
fn emit_summary(output: &Output, json: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => {
            let mut name = path.as_os_str().to_owned();
            name.push(".summary.json");
            fs::write(PathBuf::from(name), format!("{json}\n"))?;
        }
        None => eprintln!("{json}"),
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn classic(args: ClassicArgs) -> Result<(), Failure> {
    let input = load(&args.input)?;
    let report = run_classic(&input.text, &input.pattern, args.full_index)?;
    eprintln!(
        "sliding window: {:?}, index: {:?}",
        report.sliding_time, report.index_time
    );
    emit(&args.output, |out| match args.output.format {
        Format::Json => write_json(out, &report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["baseline", "position"])?;
            for (name, positions) in [("sliding_window", &report.sliding_window), ("index", &report.index)] {
                for p in positions {
                    w.write_record([name, &p.to_string()])?;
                }
            }
            w.flush()?;
            Ok(())
        }
    })?;
    if report.agree {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn search(args: SearchArgs) -> Result<(), Failure> {
    let input = load(&args.input)?;
    let cap = qubit_cap()?;
    let seed = args.seed.unwrap_or_else(rand::random);
    let mode = Mode::from(args.mode);
    let schedule = Schedule::from(args.schedule);
    let config = SearchConfig {
        text: &input.text_bytes,
        pattern: &input.pattern_bytes,
        alphabet: input.alphabet.symbols(),
        mode,
        schedule,
        trials: args.trials,
        seed,
        qubit_cap: cap,
    };
    let batch = run_search_batch(
        &input.text,
        &input.pattern,
        schedule,
        mode,
        args.trials,
        seed,
        SearchOptions { qubit_cap: cap },
        &config,
    )?;
    match args.output.format {
        Format::Csv => {
            emit(&args.output, |out| batch.write_csv(out))?;
            emit_summary(&args.output, &batch.summary_json()?)
        }
        Format::Json => emit(&args.output, |out| {
            write_json(
                out,
                &serde_json::json!({ "summary": batch.summary, "trials": batch.records }),
            )
        }),
    }
}

fn sweep(args: SweepArgs) -> Result<(), Failure> {
    let config = SweepConfig {
        n_list: args.n_list,
        pattern_len: args.pattern_len,
        alphabet_size: args.alphabet_size,
        matches: args.density.map_or(MatchCount::Unique, MatchCount::Density),
        trials: args.trials,
        seed: args.seed.unwrap_or_else(rand::random),
        schedule: args.schedule.into(),
    };
    let report = run_sweep(&config)?;
    match args.output.format {
        Format::Csv => {
            emit(&args.output, |out| report.write_csv(out))?;
            emit_summary(&args.output, &report.summary_json()?)
        }
        Format::Json => emit(&args.output, |out| write_json(out, &report)),
    }
}

fn gates(args: GatesArgs) -> Result<(), Failure> {
    let report = gate_report(&args.s_list, &args.m_list)?;
    emit(&args.output, |out| match args.output.format {
        Format::Csv => report.write_csv(out),
        Format::Json => write_json(out, &report),
    })
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let report = run_verification(VerifyOptions {
        sabotage: args.sabotage,
    })?;
    emit(&args.output, |out| match args.output.format {
        Format::Json => write_json(out, &report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for c in &report.checks {
                w.serialize(c)?;
            }
            w.flush()?;
            Ok(())
        }
    })?;
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        eprintln!(
            "{status} {}: {:.3e} (bound {:.0e}) {}",
            c.name, c.measured, c.bound, c.detail
        );
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
