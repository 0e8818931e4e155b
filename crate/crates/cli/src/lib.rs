//! Command-line front end: generator listing, Hilbert series, Gröbner bases,
//! verification suites and tableau counts.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use specht_core::algebra::{parse_polynomial, Field, FieldDescriptor, MonomialOrder, Polynomial, PrimeField, Rationals};
use specht_core::combinatorics::{count_syt_hook, Partition};
use specht_core::groebner::{GroebnerConfig, Ideal, DEFAULT_DEGREE_CAP};
use specht_core::hilbert::{closed_form, series_of_quotient, HilbertSeries};
use specht_core::specht::{specht_generators, specht_ideal, SpechtIdealSpec};
use specht_core::Error;

mod suites;

pub use suites::{run_suite, CaseResult, Suite, SuiteOptions, VerificationReport};

/// Largest ring handled by Gröbner computations from the command line.
pub const MAX_N: usize = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Specht ideals, Gröbner bases and Hilbert series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    ClosedForm,
    Groebner,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the Specht polynomials of the standard tableaux of a shape.
    Gen {
        #[arg(long)]
        lambda: Partition,
        /// Number of variables; defaults to the size of the shape.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "q")]
        field: FieldDescriptor,
    },
    /// Hilbert series of R/I for a Specht ideal.
    Hilbert {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, default_value = "q")]
        field: FieldDescriptor,
    },
    /// Reduced Gröbner basis of a Specht ideal or of an ideal read from a
    /// file or standard input.
    Gb {
        #[arg(long, conflicts_with = "input")]
        lambda: Option<Partition>,
        /// JSON `{"generators": [...], "order": "lex"}`, a JSON list of
        /// polynomials, or one polynomial per line. `-` reads standard input.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "q")]
        field: FieldDescriptor,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Number of standard tableaux of a shape.
    SytCount {
        #[arg(long)]
        lambda: Partition,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedFamily(_) => EXIT_UNSUPPORTED,
        Error::DegreeCap { .. } | Error::TooManyVariables(_) | Error::ExponentOverflow => EXIT_RESOURCE,
        Error::NotGroebner { .. } | Error::Internal(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_input(args, &mut std::io::stdin().lock(), out, err)
}

/// [`run`] with an explicit standard input.
pub fn run_with_input<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, stdin) {
        Ok(code) => code,
        Err(CliError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Resource(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs a parsed command. `stdin` is read by `gb --input -`.
pub fn execute(cli: &Cli, out: &mut dyn Write, stdin: &mut dyn Read) -> CliResult<i32> {
    let fmt = cli.format;
    match &cli.command {
        Command::Gen { lambda, n, field } => {
            let spec = spec_for(lambda, *n)?;
            match field {
                FieldDescriptor::Rational => cmd_gen(Rationals, &spec, fmt, out),
                FieldDescriptor::Prime(p) => cmd_gen(PrimeField::new(*p)?, &spec, fmt, out),
            }
        }
        Command::Hilbert { lambda, n, method, field } => {
            let spec = spec_for(lambda, *n)?;
            cmd_hilbert(&spec, *method, *field, fmt, out)
        }
        Command::Gb { lambda, input, n, field, degree_cap } => {
            let config = GroebnerConfig { degree_cap: *degree_cap, ..GroebnerConfig::default() };
            let source = match (lambda, input) {
                (Some(l), _) => GbSource::Lambda(spec_for(l, *n)?),
                (None, Some(path)) if path.as_os_str() == "-" => GbSource::Text(read_all(stdin)?),
                (None, Some(path)) => GbSource::Text(std::fs::read_to_string(path)?),
                (None, None) => GbSource::Text(read_all(stdin)?),
            };
            match field {
                FieldDescriptor::Rational => cmd_gb(Rationals, source, *n, config, fmt, out),
                FieldDescriptor::Prime(p) => cmd_gb(PrimeField::new(*p)?, source, *n, config, fmt, out),
            }
        }
        Command::Verify { suite, max_n, d, seed, trials } => {
            if max_n.is_some_and(|m| m > MAX_N) {
                return Err(CliError::Usage(format!("--max-n is limited to {MAX_N}")));
            }
            let opts = SuiteOptions { max_n: *max_n, d: *d, seed: *seed, trials: *trials };
            let report = suites::run_suite(*suite, &opts)?;
            match fmt {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?,
                Format::Text => write!(out, "{}", report.to_text())?,
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::SytCount { lambda } => {
            let count = count_syt_hook(lambda);
            match fmt {
                Format::Json => {
                    writeln!(out, "{}", json!({ "lambda": lambda.to_string(), "count": count.to_string() }))?
                }
                Format::Text => writeln!(out, "{count}")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn read_all(stdin: &mut dyn Read) -> CliResult<String> {
    let mut s = String::new();
    stdin.read_to_string(&mut s)?;
    Ok(s)
}

fn spec_for(lambda: &Partition, n: Option<usize>) -> CliResult<SpechtIdealSpec> {
    match n {
        Some(n) => Ok(SpechtIdealSpec::with_n(lambda.clone(), n)?),
        None => Ok(SpechtIdealSpec::new(lambda.clone())),
    }
}

fn check_size(n: usize) -> CliResult<()> {
    if n > MAX_N {
        return Err(CliError::Resource(format!("Gröbner computations are limited to n <= {MAX_N}, got {n}")));
    }
    Ok(())
}

fn cmd_gen<F: Field>(field: F, spec: &SpechtIdealSpec, fmt: Format, out: &mut dyn Write) -> CliResult<i32> {
    let gens = specht_generators(field, spec)?;
    match fmt {
        Format::Json => {
            let items: Vec<_> = gens
                .iter()
                .map(|(t, f)| json!({ "tableau": t, "polynomial": f.to_string() }))
                .collect();
            let doc = json!({ "lambda": spec.lambda.to_string(), "n": spec.n, "generators": items });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Text => {
            for (t, f) in &gens {
                writeln!(out, "{f}    # T = {t}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn groebner_series(spec: &SpechtIdealSpec, field: FieldDescriptor) -> CliResult<HilbertSeries> {
    check_size(spec.n)?;
    Ok(match field {
        FieldDescriptor::Rational => series_of_quotient(&specht_ideal(Rationals, spec)?)?,
        FieldDescriptor::Prime(p) => series_of_quotient(&specht_ideal(PrimeField::new(p)?, spec)?)?,
    })
}

fn cmd_hilbert(
    spec: &SpechtIdealSpec,
    method: Method,
    field: FieldDescriptor,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let closed = match method {
        Method::ClosedForm | Method::Both => Some(closed_form(spec)?),
        Method::Groebner => None,
    };
    let computed = match method {
        Method::Groebner | Method::Both => Some(groebner_series(spec, field)?),
        Method::ClosedForm => None,
    };
    let matched = match (&closed, &computed) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    match fmt {
        Format::Json => {
            let doc = json!({
                "lambda": spec.lambda.to_string(),
                "n": spec.n,
                "field": field,
                "closed_form": closed,
                "groebner": computed,
                "match": matched,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Text => {
            if let Some(s) = &closed {
                writeln!(out, "closed form: {s}")?;
            }
            if let Some(s) = &computed {
                writeln!(out, "groebner:    {s}")?;
            }
            if let Some(m) = matched {
                writeln!(out, "{}", if m { "match" } else { "MISMATCH" })?;
            }
        }
    }
    Ok(if matched == Some(false) { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

enum GbSource {
    Lambda(SpechtIdealSpec),
    Text(String),
}

#[derive(serde::Deserialize)]
struct IdealFile {
    generators: Vec<String>,
    #[serde(default)]
    order: Option<String>,
    #[serde(default)]
    nvars: Option<usize>,
}

/// Largest `k` with `x<k>` in the text.
fn max_variable(texts: &[String]) -> usize {
    let mut max = 0;
    for t in texts {
        let bytes = t.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'x' {
                let digits: String = t[i + 1..].chars().take_while(|c| c.is_ascii_digit()).collect();
                if let Ok(k) = digits.parse::<usize>() {
                    max = max.max(k);
                }
            }
        }
    }
    max
}

fn parse_order(name: Option<&str>) -> CliResult<MonomialOrder> {
    match name.map(|s| s.to_ascii_lowercase()) {
        None => Ok(MonomialOrder::Lex),
        Some(s) if s == "lex" => Ok(MonomialOrder::Lex),
        Some(s) if s == "degrevlex" || s == "grevlex" => Ok(MonomialOrder::DegRevLex),
        Some(s) => Err(CliError::Usage(format!("unknown monomial order {s:?}"))),
    }
}

fn parse_ideal_text<F: Field>(field: F, text: &str, n: Option<usize>) -> CliResult<Ideal<F>> {
    let (gens, order, file_n) = match serde_json::from_str::<serde_json::Value>(text) {
        Ok(v @ serde_json::Value::Object(_)) => {
            let f: IdealFile = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("bad ideal file: {e}")))?;
            (f.generators, parse_order(f.order.as_deref())?, f.nvars)
        }
        Ok(v @ serde_json::Value::Array(_)) => {
            let g: Vec<String> =
                serde_json::from_value(v).map_err(|e| CliError::Usage(format!("bad ideal file: {e}")))?;
            (g, MonomialOrder::Lex, None)
        }
        _ => {
            let g: Vec<String> = text
                .split(['\n', ';'])
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect();
            (g, MonomialOrder::Lex, None)
        }
    };
    if gens.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    let nvars = n.or(file_n).unwrap_or_else(|| max_variable(&gens).max(1));
    let polys = gens
        .iter()
        .map(|g| parse_polynomial(field.clone(), g, nvars))
        .collect::<Result<Vec<Polynomial<F>>, Error>>()?;
    Ok(Ideal::with_order(field, nvars, order, polys)?)
}

fn cmd_gb<F: Field>(
    field: F,
    source: GbSource,
    n: Option<usize>,
    config: GroebnerConfig,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let ideal = match source {
        GbSource::Lambda(spec) => {
            check_size(spec.n)?;
            specht_ideal(field.clone(), &spec)?
        }
        GbSource::Text(text) => parse_ideal_text(field.clone(), &text, n)?,
    };
    let gb = ideal.compute_groebner_basis(config)?;
    let lms = gb.leading_monomials();
    match fmt {
        Format::Json => {
            let elements: Vec<_> = gb
                .elements()
                .iter()
                .zip(&lms)
                .map(|(p, m)| json!({ "polynomial": p.to_string(), "leading_monomial": m.display().to_string() }))
                .collect();
            let doc = json!({
                "field": field.descriptor(),
                "nvars": gb.nvars(),
                "order": gb.order().name(),
                "reduced": gb.is_reduced(),
                "elements": elements,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Text => {
            writeln!(
                out,
                "# reduced Groebner basis, order {}, field {}, size {}",
                gb.order().name(),
                field.descriptor(),
                gb.len()
            )?;
            for (p, m) in gb.elements().iter().zip(&lms) {
                writeln!(out, "{p}    # lm = {}", m.display())?;
            }
        }
    }
    Ok(EXIT_OK)
}
