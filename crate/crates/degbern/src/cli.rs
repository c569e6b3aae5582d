use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degbern_core::bernoulli::bernoulli_series;
use degbern_core::bernstein::{bernstein, bernstein_genfun_coeff, triangular_eval};
use degbern_core::combinatorics::{
    degen_binom, degen_falling_factorial, degen_stirling2, stirling2_column_series, StirlingTable,
};
use degbern_core::rational::{parse_rational, Rational};
use degbern_core::series::{binomial_series, TruncSeries, DEFAULT_ORDER};
use degbern_core::verify::{verify_each, Status, VerifyReport};
use degbern_core::{BiPoly, Scalar};
use num_traits::{One, Signed};
use serde_json::json;

use crate::format::{reports_to_json, to_decimal, write_basis_csv, BasisSample};
use crate::verify_all_parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IDENTITY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "degbern",
    version,
    about = "Exact degenerate Bernstein, Stirling and Bernoulli polynomials"
)]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one quantity, at a point or symbolically.
    Eval(EvalArgs),
    /// Tabulate a basis row or the Stirling triangle.
    Table(TableArgs),
    /// Print truncated generating-function coefficients.
    Series(SeriesArgs),
    /// Check registered identities; exits 2 if any fails.
    Verify(VerifyArgs),
    /// Sample the degree-n basis on a uniform grid over [0, 1].
    PlotData(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    /// B_{k,n}(x|λ)
    Bernstein,
    /// (x)_{n,λ}
    Falling,
    /// {x choose n}_λ
    Binom,
    /// S_{2,λ}(n,k)
    Stirling2,
    /// β^{(k)}_{n,λ}(x)
    Bernoulli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Bernstein,
    Stirling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// (1+λt)^{x/λ}
    Binomial,
    /// ((1+λt)^{1/λ} − 1)^k / k!
    Stirling,
    /// (t/((1+λt)^{1/λ} − 1))^k (1+λt)^{x/λ}
    Bernoulli,
    /// (x)_{k,λ}/k! t^k (1+λt)^{(1−x)/λ}
    Bernstein,
}

/// Rational point arguments; a missing value keeps the symbol formal.
#[derive(Args, Debug, Clone)]
struct Point {
    /// x as `p/q`; omit for a symbolic result.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    x: Option<Rational>,
    /// λ as `p/q`; omit for a symbolic result.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    lambda: Option<Rational>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Function::Bernstein)]
    function: Function,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Add a half-even decimal rendering (JSON only).
    #[arg(long)]
    decimals: Option<u32>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableKind::Bernstein)]
    kind: TableKind,
    #[command(flatten)]
    point: Point,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    decimals: Option<u32>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    kind: SeriesKind,
    /// Truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[command(flatten)]
    point: Point,
    /// Print n!·[t^n] instead of [t^n].
    #[arg(long)]
    egf: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id; all identities when omitted.
    #[arg(long)]
    id: Option<String>,
    /// Interpretation for an ambiguous identity; all when omitted.
    #[arg(long)]
    interpretation: Option<String>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    lambda: Rational,
    /// Number of sample points, at least 2.
    #[arg(long, value_parser = parse_grid)]
    grid: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    decimals: Option<u32>,
}

fn parse_grid(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(g) if g >= 2 => Ok(g),
        Ok(_) => Err("grid needs at least 2 points".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };

    let mut buffer = Vec::new();
    let result = dispatch(&cli.command, &mut buffer, stderr);
    let code = match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buffer)),
        None => stdout.write_all(&buffer),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn dispatch(cmd: &Command, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Eval(a) => eval(a, out, err).map(|_| EXIT_OK),
        Command::Table(a) => table(a, out, err).map(|_| EXIT_OK),
        Command::Series(a) => series(a, out).map(|_| EXIT_OK),
        Command::Verify(a) => verify(a, out),
        Command::PlotData(a) => plot_data(a, out, err).map(|_| EXIT_OK),
    }
}

/// Range warnings only make sense for the Bernstein basis.
fn warn_point(point: &Point, n: usize, bernstein: bool, err: &mut dyn Write) -> io::Result<()> {
    if !bernstein {
        return Ok(());
    }
    if let Some(x) = &point.x {
        warn_x(x, err)?;
    }
    if let Some(l) = &point.lambda {
        warn_lambda(l, n, err)?;
    }
    Ok(())
}

fn warn_x(x: &Rational, err: &mut dyn Write) -> io::Result<()> {
    if x.is_negative() || *x > Rational::one() {
        writeln!(
            err,
            "warning: x = {x} lies outside [0, 1]; the formulas are still evaluated"
        )?;
    }
    Ok(())
}

/// Past `|λ|(n−1) ≥ 1` the factors of `(1)_{n,λ}` change sign.
fn warn_lambda(lambda: &Rational, n: usize, err: &mut dyn Write) -> io::Result<()> {
    if n >= 2 && lambda.abs() * Rational::from_integer((n - 1).into()) >= Rational::one() {
        writeln!(
            err,
            "warning: |lambda|*(n-1) >= 1 for lambda = {lambda}, n = {n}; (1)_{{n,lambda}} changes sign"
        )?;
    }
    Ok(())
}

enum Value {
    Exact(Rational),
    Symbolic(BiPoly),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Exact(r) => r.to_string(),
            Value::Symbolic(p) => p.to_string(),
        }
    }

    fn decimal(&self, places: Option<u32>) -> Option<String> {
        match (self, places) {
            (Value::Exact(r), Some(d)) => Some(to_decimal(r, d)),
            _ => None,
        }
    }
}

fn symbolic_args(point: &Point) -> (BiPoly, BiPoly) {
    let x = point
        .x
        .clone()
        .map(BiPoly::constant)
        .unwrap_or_else(BiPoly::x);
    let l = point
        .lambda
        .clone()
        .map(BiPoly::constant)
        .unwrap_or_else(BiPoly::lambda);
    (x, l)
}

fn compute<T: Scalar>(f: Function, n: usize, k: usize, x: &T, l: &T) -> Result<T, CliError> {
    Ok(match f {
        Function::Bernstein => bernstein(k, n, x, l).map_err(usage)?,
        Function::Falling => degen_falling_factorial(x, n, l),
        Function::Binom => degen_binom(x, n, l),
        Function::Stirling2 => degen_stirling2(n, k, l),
        Function::Bernoulli => degbern_core::bernoulli::degen_bernoulli(n, k, x, l),
    })
}

fn eval(a: &EvalArgs, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), CliError> {
    if a.decimals.is_some() && a.format != Format::Json {
        return Err(usage("--decimals requires --format json"));
    }
    warn_point(&a.point, a.n, a.function == Function::Bernstein, err)?;
    let value = match (&a.point.x, &a.point.lambda) {
        (Some(x), Some(l)) => Value::Exact(compute(a.function, a.n, a.k, x, l)?),
        _ => {
            let (x, l) = symbolic_args(&a.point);
            Value::Symbolic(compute(a.function, a.n, a.k, &x, &l)?)
        }
    };
    match a.format {
        Format::Text => writeln!(out, "{}", value.render())?,
        Format::Csv => {
            writeln!(out, "n,k,value")?;
            writeln!(out, "{},{},{}", a.n, a.k, value.render())?;
        }
        Format::Json => {
            let mut obj = json!({
                "function": format!("{:?}", a.function).to_lowercase(),
                "n": a.n,
                "k": a.k,
                "x": a.point.x.as_ref().map(|r| r.to_string()),
                "lambda": a.point.lambda.as_ref().map(|r| r.to_string()),
                "value": value.render(),
            });
            if let Some(d) = value.decimal(a.decimals) {
                obj["decimal"] = json!(d);
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&obj).expect("json"))?;
        }
    }
    Ok(())
}

fn table(a: &TableArgs, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), CliError> {
    if a.decimals.is_some() && a.format != Format::Json {
        return Err(usage("--decimals requires --format json"));
    }
    warn_point(&a.point, a.n, a.kind == TableKind::Bernstein, err)?;
    match a.kind {
        TableKind::Bernstein => match (&a.point.x, &a.point.lambda) {
            (Some(x), Some(l)) => {
                let row = triangular_eval(a.n, x, l);
                let samples = BasisSample::from_row(&row, x, l);
                emit_samples(&samples, a.format, a.decimals, out)?;
            }
            _ => {
                let (x, l) = symbolic_args(&a.point);
                let row = triangular_eval(a.n, &x, &l);
                let rows = row
                    .values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| (vec![k], v.to_string()));
                emit_keyed(&["k"], rows, a.format, out)?;
            }
        },
        TableKind::Stirling => {
            if a.point.x.is_some() {
                return Err(usage("the Stirling table does not depend on x"));
            }
            let lambda = a
                .point
                .lambda
                .clone()
                .map(BiPoly::constant)
                .unwrap_or_else(BiPoly::lambda);
            let t = StirlingTable::build(a.n, &lambda);
            let rows = (0..=a.n).flat_map(|n| {
                let t = &t;
                (0..=n).map(move |k| (vec![n, k], t.get(n, k)))
            });
            let rows = rows.map(|(key, v)| {
                let text = match (&a.point.lambda, v.as_constant()) {
                    (Some(_), Some(c)) => c.to_string(),
                    _ => v.to_string(),
                };
                (key, text)
            });
            emit_keyed(&["n", "k"], rows, a.format, out)?;
        }
    }
    Ok(())
}

fn emit_keyed(
    keys: &[&str],
    rows: impl Iterator<Item = (Vec<usize>, String)>,
    format: Format,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let arr: Vec<_> = rows
                .map(|(key, v)| {
                    let mut obj = serde_json::Map::new();
                    for (name, val) in keys.iter().zip(key) {
                        obj.insert((*name).into(), json!(val));
                    }
                    obj.insert("value".into(), json!(v));
                    serde_json::Value::Object(obj)
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("json"))?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header: Vec<&str> = keys.to_vec();
            header.push("value");
            w.write_record(&header)?;
            for (key, v) in rows {
                let mut rec: Vec<String> = key.iter().map(|k| k.to_string()).collect();
                rec.push(v);
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn emit_samples(
    samples: &[BasisSample],
    format: Format,
    decimals: Option<u32>,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let arr: Vec<_> = samples
                .iter()
                .map(|s| {
                    let mut obj = json!({
                        "k": s.k,
                        "x": s.x.to_string(),
                        "lambda": s.lambda.to_string(),
                        "value_num": s.value.numer().to_string(),
                        "value_den": s.value.denom().to_string(),
                    });
                    if let Some(d) = decimals {
                        obj["decimal"] = json!(to_decimal(&s.value, d));
                    }
                    obj
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("json"))?;
        }
        _ => write_basis_csv(&mut *out, samples)?,
    }
    Ok(())
}

fn series(a: &SeriesArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let (x, l) = symbolic_args(&a.point);
    let s: TruncSeries<BiPoly> = match a.kind {
        SeriesKind::Binomial => binomial_series(&x, &l, a.order),
        SeriesKind::Stirling => stirling2_column_series(a.k, &l, a.order),
        SeriesKind::Bernoulli => bernoulli_series(a.k, &x, &l, a.order),
        SeriesKind::Bernstein => {
            // n!·[t^n] is B_{k,n}; rebuild the plain coefficients from it.
            let coeffs = (0..=a.order)
                .map(|n| {
                    let c = bernstein_genfun_coeff(a.k, n, &x, &l).value;
                    c.scale(&Rational::from_integer(degbern_core::rational::factorial(n)).recip())
                })
                .collect();
            TruncSeries::new(a.order, coeffs).expect("length")
        }
    };
    let rows = (0..=a.order).map(|m| {
        let c = if a.egf {
            s.egf_coeff(m).expect("in order")
        } else {
            s.coeffs()[m].clone()
        };
        (vec![m], c.to_string())
    });
    let format = if a.format == Format::Text {
        Format::Csv
    } else {
        a.format
    };
    emit_keyed(&["m"], rows, format, out)
}

fn verify(a: &VerifyArgs, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let reports: Vec<VerifyReport> = match &a.id {
        Some(id) => verify_each(id, a.n_max, a.interpretation.as_deref()).map_err(usage)?,
        None => {
            if a.interpretation.is_some() {
                return Err(usage("--interpretation needs --id"));
            }
            verify_all_parallel(a.n_max)
        }
    };
    match a.format {
        Format::Json => writeln!(out, "{}", reports_to_json(&reports))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "id",
                "interpretation",
                "checked",
                "status",
                "params",
                "difference",
            ])?;
            for r in &reports {
                let (params, diff) = match &r.first_failure {
                    Some(f) => (f.params.to_string(), f.difference.to_string()),
                    None => (String::new(), String::new()),
                };
                w.write_record([
                    r.id.clone(),
                    r.interpretation.clone().unwrap_or_default(),
                    r.checked.to_string(),
                    r.status.as_str().to_string(),
                    params,
                    diff,
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
        }
    }
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    Ok(if failed {
        EXIT_IDENTITY_FAILED
    } else {
        EXIT_OK
    })
}

/// Basis samples on `x = j/(grid−1)`, `k` outer and `x` inner.
pub fn plot_samples(n: usize, lambda: &Rational, grid: u64) -> Vec<BasisSample> {
    let step = grid - 1;
    let rows: Vec<_> = (0..grid)
        .map(|j| {
            let x = Rational::new(j.into(), step.into());
            let row = triangular_eval(n, &x, lambda);
            (x, row)
        })
        .collect();
    let mut samples = Vec::with_capacity((n + 1) * grid as usize);
    for k in 0..=n {
        for (x, row) in &rows {
            samples.push(BasisSample {
                k,
                x: x.clone(),
                lambda: lambda.clone(),
                value: row.values[k].clone(),
            });
        }
    }
    samples
}

fn plot_data(a: &PlotArgs, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), CliError> {
    if a.decimals.is_some() && a.format != Format::Json {
        return Err(usage("--decimals requires --format json"));
    }
    warn_lambda(&a.lambda, a.n, err)?;
    let samples = plot_samples(a.n, &a.lambda, a.grid);
    emit_samples(&samples, a.format, a.decimals, out)
}
