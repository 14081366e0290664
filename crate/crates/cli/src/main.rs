//! `volkenborn` command-line tool.
//!
//! Exit codes: 0 when everything computed (and every report passed), 1 when
//! a report failed or a computation gave up, 2 on usage errors.

mod sweep;

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use volkenborn::padic::{
    carlitz_beta, convergence_report, q_integral_approx, ConvergenceKind, QParameter,
};
use volkenborn::series::series_div_exact;
use volkenborn::{
    alt_power_sum_closed, alt_power_sum_direct, bernoulli_number, bernoulli_polynomial,
    euler_number, euler_polynomial, power_sum_closed, power_sum_direct, Prime, Rational,
    TruncatedSeries,
};

use sweep::{csv_row, Identity, OutputFormat, SweepSpec, CSV_HEADER};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<volkenborn::Error> for CliError {
    fn from(e: volkenborn::Error) -> Self {
        use volkenborn::Error::*;
        match e {
            Precondition(_) | NotPrime(_) | Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "volkenborn", version, about = "Exact Bernoulli/Euler arithmetic, p-adic integral approximants and identity sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NumberKind {
    Bernoulli,
    Euler,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesKind {
    /// t / (e^t - 1)
    Bernoulli,
    /// 2 / (e^t + 1)
    Euler,
    /// e^t
    Exp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PadicKind {
    Volkenborn,
    Fermionic,
    Carlitz,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_n or E_n = E_n(0), or a table up to --n-max.
    Number {
        kind: NumberKind,
        #[arg(required_unless_present = "n_max")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "json-lines")]
        format: OutputFormat,
    },
    /// Print B_n(x) or E_n(x), or its value at --at.
    Polynomial {
        kind: NumberKind,
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<Rational>,
    },
    /// Print S_k(n) = sum_{l<=n} l^k (or the alternating sum) by direct
    /// summation, and the closed form where it is defined.
    Powersum {
        k: u32,
        n: u64,
        #[arg(long)]
        alternating: bool,
    },
    /// Sweep an identity over a parameter grid.
    Verify(VerifyArgs),
    /// p-adic convergence reports and Carlitz q-Bernoulli numbers.
    Padic(PadicArgs),
    /// Print a truncated generating function.
    Series {
        kind: SeriesKind,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name or alias; run `verify list` to see them all.
    identity: String,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    w_max: u64,
    /// Polynomial argument, "num/den"; repeatable.
    #[arg(long = "x", allow_hyphen_values = true)]
    x: Vec<Rational>,
    /// Series order for generating-function identities.
    #[arg(long, default_value_t = 10)]
    order: usize,
    /// Restrict weights to odd values.
    #[arg(long)]
    odd_only: bool,
    #[arg(long, value_enum, default_value = "json-lines")]
    format: OutputFormat,
}

#[derive(Args)]
struct PadicArgs {
    kind: PadicKind,
    #[arg(long)]
    p: u64,
    /// Degree of x^n for the convergence reports.
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long = "N-max", default_value_t = 5)]
    big_n_max: u32,
    /// q as "1+p^j" (or "1+p"); defaults to 1+p.
    #[arg(long)]
    q: Option<String>,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long)]
    m_max: Option<usize>,
    /// Significant p-adic digits carried for q.
    #[arg(long, default_value_t = 32)]
    prec: u32,
    /// Also print the q-Riemann sums over p^N points, N = 1..N-max.
    #[arg(long)]
    with_sums: bool,
    #[arg(long, value_enum, default_value = "json-lines")]
    format: OutputFormat,
}

fn number_value(kind: NumberKind, n: usize) -> Rational {
    match kind {
        NumberKind::Bernoulli => bernoulli_number(n),
        NumberKind::Euler => euler_number(n),
    }
}

/// Parses "1+p^j" or "1+p" and checks the base is `p`.
fn parse_q(s: &str, p: Prime, prec: u32) -> Result<QParameter, CliError> {
    let bad = |why: &str| CliError::Usage(format!("bad --q {s:?}: {why}; expected 1+p^j"));
    let rest = s.trim().strip_prefix("1+").ok_or_else(|| bad("must start with 1+"))?;
    let (base, j) = match rest.split_once('^') {
        Some((b, j)) => (b, j.parse::<u32>().map_err(|_| bad("exponent is not an integer"))?),
        None => (rest, 1),
    };
    let base: u64 = base.parse().map_err(|_| bad("base is not an integer"))?;
    if base != p.get() {
        return Err(bad(&format!("base {base} differs from --p {p}")));
    }
    if j == 0 {
        return Err(bad("exponent must be at least 1"));
    }
    Ok(QParameter::one_plus_prime_power(p, j, prec)?)
}

fn cmd_number(
    out: &mut impl Write,
    kind: NumberKind,
    n: Option<usize>,
    n_max: Option<usize>,
    format: OutputFormat,
) -> Result<(), CliError> {
    match (n, n_max) {
        (Some(n), _) => writeln!(out, "{}", number_value(kind, n))?,
        (None, Some(m)) => {
            if format == OutputFormat::Csv {
                writeln!(out, "n,value")?;
            }
            for n in 0..=m {
                let v = number_value(kind, n);
                match format {
                    OutputFormat::Csv => writeln!(out, "{n},{v}")?,
                    OutputFormat::JsonLines => writeln!(out, "{}", json!({"n": n, "value": v}))?,
                }
            }
        }
        (None, None) => unreachable!("clap requires one of them"),
    }
    Ok(())
}

fn cmd_polynomial(out: &mut impl Write, kind: NumberKind, n: usize, at: Option<Rational>) -> Result<(), CliError> {
    let poly = match kind {
        NumberKind::Bernoulli => bernoulli_polynomial(n),
        NumberKind::Euler => euler_polynomial(n),
    };
    match at {
        Some(x) => writeln!(out, "{}", poly.eval(&x))?,
        None => writeln!(out, "{poly}")?,
    }
    Ok(())
}

fn cmd_powersum(out: &mut impl Write, k: u32, n: u64, alternating: bool) -> Result<(), CliError> {
    let (direct, closed) = if alternating {
        (alt_power_sum_direct(k, n), alt_power_sum_closed(k, n + 1).ok())
    } else {
        (power_sum_direct(k, n), power_sum_closed(k + 1, n + 1).ok())
    };
    let mut doc = json!({"k": k, "n": n, "alternating": alternating, "direct": direct});
    if let Some(c) = closed {
        doc["closed"] = json!(c);
        doc["agree"] = json!(c == direct);
    }
    writeln!(out, "{doc}")?;
    Ok(())
}

fn cmd_verify(out: &mut impl Write, args: VerifyArgs) -> Result<bool, CliError> {
    if args.identity == "list" {
        for name in Identity::names() {
            writeln!(out, "{name}")?;
        }
        return Ok(true);
    }
    let spec = SweepSpec {
        identity: Identity::parse(&args.identity)?,
        n_max: args.n_max,
        w_max: args.w_max,
        x_list: if args.x.is_empty() { vec![Rational::zero()] } else { args.x },
        odd_only: args.odd_only,
        order: args.order,
        format: args.format,
    };
    spec.validate()?;
    let reports = spec.run()?;
    let passed = reports.iter().filter(|r| r.pass()).count();
    let failed = reports.len() - passed;
    match spec.format {
        OutputFormat::JsonLines => {
            for r in &reports {
                writeln!(out, "{}", r.to_json())?;
            }
            writeln!(
                out,
                "{}",
                json!({"summary": {"identity": spec.identity.name(), "total": reports.len(), "passed": passed, "failed": failed}})
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &reports {
                writeln!(out, "{}", csv_row(r))?;
            }
            writeln!(out, "# {}: {} total, {passed} passed, {failed} failed", spec.identity.name(), reports.len())?;
        }
    }
    Ok(failed == 0)
}

fn cmd_padic(out: &mut impl Write, args: PadicArgs) -> Result<(), CliError> {
    let p = Prime::new(args.p)?;
    match args.kind {
        PadicKind::Volkenborn | PadicKind::Fermionic => {
            let kind = match args.kind {
                PadicKind::Volkenborn => ConvergenceKind::Volkenborn,
                _ => ConvergenceKind::Fermionic,
            };
            if args.big_n_max == 0 {
                return Err(CliError::Usage("--N-max must be at least 1".into()));
            }
            let report = convergence_report(kind, args.n, p, args.big_n_max)?;
            match args.format {
                OutputFormat::JsonLines => {
                    let vals: Vec<_> = report.iter().map(|(_, v)| v).collect();
                    writeln!(out, "{}", json!({"kind": kind, "p": p, "n": args.n, "valuations": vals}))?;
                }
                OutputFormat::Csv => {
                    writeln!(out, "N,valuation")?;
                    for (big_n, v) in report {
                        writeln!(out, "{big_n},{v}")?;
                    }
                }
            }
        }
        PadicKind::Carlitz => {
            if args.prec == 0 {
                return Err(CliError::Usage("--prec must be at least 1".into()));
            }
            let q_text = args.q.clone().unwrap_or_else(|| format!("1+{p}"));
            let q = parse_q(&q_text, p, args.prec)?;
            let m_max = args.m_max.unwrap_or(args.m);
            for m in args.m..=m_max {
                let beta = carlitz_beta(m, &q)?;
                let mut doc = json!({
                    "m": m,
                    "q": q_text,
                    "beta": beta,
                    "value": beta.representative(),
                });
                if args.with_sums {
                    let sums = (1..=args.big_n_max)
                        .map(|big_n| {
                            let s = q_integral_approx(m as u32, &q, big_n, args.prec)?;
                            let agreement = s.agreement(&beta)?;
                            Ok(json!({"N": big_n, "sum": s, "agreement": agreement.lower_bound(), "exact": agreement.is_exact()}))
                        })
                        .collect::<Result<Vec<_>, volkenborn::Error>>()?;
                    doc["sums"] = json!(sums);
                }
                writeln!(out, "{doc}")?;
            }
        }
    }
    Ok(())
}

fn cmd_series(out: &mut impl Write, kind: SeriesKind, order: usize) -> Result<(), CliError> {
    let one = Rational::one();
    let s = match kind {
        SeriesKind::Exp => TruncatedSeries::exp(&one, order),
        SeriesKind::Bernoulli => {
            let k = order + 1;
            let expm1 = TruncatedSeries::exp(&one, k).sub(&TruncatedSeries::one(k))?;
            let t = TruncatedSeries::monomial(one, 1, k);
            series_div_exact(&t, &expm1, 1)?
        }
        SeriesKind::Euler => {
            let two = TruncatedSeries::constant(Rational::from(2u64), order);
            let exp1p = TruncatedSeries::exp(&one, order).add(&TruncatedSeries::one(order))?;
            series_div_exact(&two, &exp1p, 0)?
        }
    };
    writeln!(
        out,
        "{}",
        json!({"order": s.order(), "coefficients": s.coefficients(), "egf_coefficients": s.egf_coefficients()})
    )?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Number { kind, n, n_max, format } => cmd_number(&mut out, kind, n, n_max, format)?,
        Command::Polynomial { kind, n, at } => cmd_polynomial(&mut out, kind, n, at)?,
        Command::Powersum { k, n, alternating } => cmd_powersum(&mut out, k, n, alternating)?,
        Command::Verify(args) => return cmd_verify(&mut out, args),
        Command::Padic(args) => cmd_padic(&mut out, args)?,
        Command::Series { kind, order } => cmd_series(&mut out, kind, order)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
