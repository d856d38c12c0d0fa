//! `polyfam`: family values, coefficient tables, polynomials and identity sweeps.

mod output;

use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyfam_core::bernoulli::{
    classic_poly_bernoulli, mp_bernoulli, mp_bernoulli_poly, Convention,
};
use polyfam_core::cauchy::{
    mp_first_def, mp_poly_first, mp_poly_second, mp_poly_second_abs, mp_second_closed_abs,
    mp_second_def, specialize, Family, FamilyPoint, Kind,
};
use polyfam_core::harness::{errata_ledger, parse_ids, sweep, GridSpec, IdentityId, Verdict};
use polyfam_core::scalar::{format_rational, int, parse_rational, parse_rational_list, Rational};
use polyfam_core::stirling::{
    comtet_first, comtet_second, lah_signed, noncentral_first, noncentral_second,
    signless_comtet_first, stirling_first, stirling_second, AlphaSeq, Lengths,
};
use polyfam_core::{Alpha, Error, Table};

use output::{write_json_lines, write_records_csv, OutputRecord};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "polyfam",
    version,
    about = "Exact multiparameter poly-Cauchy and poly-Bernoulli families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one number.
    Number(NumberArgs),
    /// Print rows of a coefficient table.
    Table(TableArgs),
    /// Print the coefficients of a polynomial in z, lowest degree first.
    Poly(PolyArgs),
    /// Check identities over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Clone, Debug)]
struct RationalList(Vec<Rational>);

fn rational_list(text: &str) -> Result<RationalList, String> {
    parse_rational_list(text)
        .map(RationalList)
        .map_err(|e| e.to_string())
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Clone, Debug)]
struct IdList(Vec<IdentityId>);

fn id_list(text: &str) -> Result<IdList, String> {
    parse_ids(text).map(IdList).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Mode {
    Verbatim,
    #[default]
    Corrected,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Verbatim => "verbatim",
            Mode::Corrected => "corrected",
        }
    }

    fn convention(self) -> Convention {
        match self {
            Mode::Verbatim => Convention::Verbatim,
            Mode::Corrected => Convention::Corrected,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Clone, Debug)]
struct PointArgs {
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Box dimension; defaults to the number of lengths, else 1.
    #[arg(long)]
    k: Option<usize>,
    /// Comma list of α_i; defaults to 0, 1, …, n-1.
    #[arg(long, value_parser = rational_list, allow_hyphen_values = true, conflicts_with = "q")]
    alpha: Option<RationalList>,
    /// Comma list of ℓ_i; defaults to all ones.
    #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
    lengths: Option<RationalList>,
    /// Sets α_i = i·q.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    q: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Mode::Corrected)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also print a rounded decimal (approximate) rendering.
    #[arg(long)]
    decimals: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NumberFamily {
    #[value(name = "mp-cauchy-1")]
    MpCauchy1,
    #[value(name = "mp-cauchy-2")]
    MpCauchy2,
    #[value(name = "poly-cauchy-1")]
    PolyCauchy1,
    #[value(name = "poly-cauchy-2")]
    PolyCauchy2,
    #[value(name = "cauchy-1")]
    Cauchy1,
    #[value(name = "cauchy-2")]
    Cauchy2,
    #[value(name = "q-poly-cauchy-1")]
    QPolyCauchy1,
    #[value(name = "q-poly-cauchy-2")]
    QPolyCauchy2,
    #[value(name = "poly-bernoulli")]
    PolyBernoulli,
    #[value(name = "mp-bernoulli")]
    MpBernoulli,
}

#[derive(Args, Clone, Debug)]
struct NumberArgs {
    #[arg(value_enum)]
    family: NumberFamily,
    #[command(flatten)]
    point: PointArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    #[value(name = "comtet-1")]
    Comtet1,
    #[value(name = "comtet-2")]
    Comtet2,
    #[value(name = "signless-comtet-1")]
    SignlessComtet1,
    #[value(name = "stirling-1")]
    Stirling1,
    #[value(name = "stirling-2")]
    Stirling2,
    #[value(name = "lah")]
    Lah,
    #[value(name = "noncentral-1")]
    Noncentral1,
    #[value(name = "noncentral-2")]
    Noncentral2,
}

#[derive(Args, Clone, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    family: TableFamily,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Comma list of α_i; defaults to 0, 1, …, n_max-1.
    #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
    alpha: Option<RationalList>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    decimals: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    #[value(name = "mp-cauchy-1")]
    MpCauchy1,
    #[value(name = "mp-cauchy-2")]
    MpCauchy2,
    /// The k = 1 first-kind polynomial on [0, ℓ].
    #[value(name = "gen-cauchy-1")]
    GenCauchy1,
    #[value(name = "gen-cauchy-2")]
    GenCauchy2,
    #[value(name = "mp-bernoulli")]
    MpBernoulli,
}

#[derive(Args, Clone, Debug)]
struct PolyArgs {
    #[arg(value_enum)]
    family: PolyFamily,
    #[command(flatten)]
    point: PointArgs,
}

#[derive(Args, Clone, Debug)]
struct VerifyArgs {
    /// `all` or a comma list of identity tags.
    #[arg(long, value_parser = id_list, default_value = "all")]
    ids: IdList,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    k_max: usize,
    /// Random points per grid cell, on top of the classical point.
    #[arg(long, default_value_t = 0)]
    points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Truncation order of series identities.
    #[arg(long, default_value_t = 6)]
    order: usize,
    /// Bound on numerators and denominators of sampled rationals.
    #[arg(long, default_value_t = 20)]
    height: u32,
    /// `verbatim` lists only the reports whose printed form fails.
    #[arg(long, value_enum, default_value_t = Mode::Corrected)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print the errata ledger instead of the reports.
    #[arg(long)]
    errata: bool,
}

/// Resolved `(n, k, α, L)` with the parameters to echo back.
struct Resolved {
    point: FamilyPoint<Rational>,
    params: BTreeMap<String, String>,
}

fn join(xs: &[Rational]) -> String {
    xs.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn resolve(args: &PointArgs) -> Result<Resolved, Error> {
    let n = args.n;
    let k = args
        .k
        .or(args.lengths.as_ref().map(|l| l.0.len()))
        .unwrap_or(1);
    let lengths = match &args.lengths {
        Some(l) => Lengths::new(l.0.clone())?,
        None => Lengths::unit(k)?,
    };
    let alpha: Alpha = match (&args.alpha, &args.q) {
        (Some(a), _) => AlphaSeq::new(a.0.clone()),
        (None, Some(q)) => AlphaSeq::arithmetic(n, q),
        (None, None) => AlphaSeq::classical(n),
    };
    let point = FamilyPoint::new(n, k, alpha, lengths)?;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("k".to_string(), k.to_string());
    params.insert("alpha".to_string(), join(point.active_alpha()));
    params.insert("lengths".to_string(), join(point.lengths.as_slice()));
    if let Some(q) = &args.q {
        params.insert("q".to_string(), format_rational(q));
    }
    Ok(Resolved { point, params })
}

/// Parameters of the classical specializations: `n`, `k` and `q` when used.
fn special_params(n: usize, k: usize, q: Option<&Rational>) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("k".to_string(), k.to_string());
    if let Some(q) = q {
        params.insert("q".to_string(), format_rational(q));
    }
    params
}

enum Failure {
    Usage(String),
    Precondition(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

fn emit(records: &[OutputRecord], format: Format) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        Format::Json => write_json_lines(&mut out, records)?,
        Format::Csv => write_records_csv(&mut out, records)?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_number(args: &NumberArgs) -> Result<u8, Failure> {
    use NumberFamily::*;
    let p = &args.point;
    let mode = p.mode;
    let family_name = args
        .family
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let classical = |family: Family, kind: Kind| -> Result<OutputRecord, Failure> {
        let k = p.k.unwrap_or(1);
        let q = p.q.clone();
        if matches!(family, Family::QPoly) && q.is_none() {
            return Err(Failure::Usage(
                "--q is required for q-poly-cauchy families".into(),
            ));
        }
        let value = specialize(
            family,
            kind,
            p.n,
            k,
            &q.clone().unwrap_or_else(|| int(1)),
            &Lengths::unit(k)?,
        )?;
        let k_used = if family == Family::Classic { 1 } else { k };
        Ok(OutputRecord::number(
            &family_name,
            special_params(p.n, k_used, q.as_ref().filter(|_| family == Family::QPoly)),
            &value,
            mode.name(),
            p.decimals,
        ))
    };
    let record = match args.family {
        PolyCauchy1 => classical(Family::Poly, Kind::First)?,
        PolyCauchy2 => classical(Family::Poly, Kind::Second)?,
        Cauchy1 => classical(Family::Classic, Kind::First)?,
        Cauchy2 => classical(Family::Classic, Kind::Second)?,
        QPolyCauchy1 => classical(Family::QPoly, Kind::First)?,
        QPolyCauchy2 => classical(Family::QPoly, Kind::Second)?,
        PolyBernoulli => {
            let k = p.k.unwrap_or(1);
            let value = classic_poly_bernoulli::<Rational>(p.n, k);
            OutputRecord::number(
                &family_name,
                special_params(p.n, k, None),
                &value,
                mode.name(),
                p.decimals,
            )
        }
        MpCauchy1 | MpCauchy2 | MpBernoulli => {
            let r = resolve(p)?;
            let value = match (args.family, mode) {
                (MpCauchy1, _) => mp_first_def(&r.point),
                (MpCauchy2, Mode::Corrected) => mp_second_def(&r.point),
                (MpCauchy2, Mode::Verbatim) => mp_second_closed_abs(&r.point)?,
                _ => mp_bernoulli(&r.point, mode.convention())?,
            };
            OutputRecord::number(&family_name, r.params, &value, mode.name(), p.decimals)
        }
    };
    emit(&[record], p.format)?;
    Ok(0)
}

fn cmd_table(args: &TableArgs) -> Result<u8, Failure> {
    use TableFamily::*;
    let n_max = args.n_max;
    let alpha: Alpha = match &args.alpha {
        Some(a) => AlphaSeq::new(a.0.clone()),
        None => AlphaSeq::classical(n_max),
    };
    let table: Table = match args.family {
        Comtet1 => comtet_first(&alpha, n_max)?,
        Comtet2 => comtet_second(&alpha, n_max)?,
        SignlessComtet1 => signless_comtet_first(&alpha, n_max)?,
        Noncentral1 => noncentral_first(&alpha, n_max)?,
        Noncentral2 => noncentral_second(&alpha, n_max)?,
        Stirling1 => stirling_first(n_max),
        Stirling2 => stirling_second(n_max),
        Lah => lah_signed(n_max),
    };
    let uses_alpha = !matches!(args.family, Stirling1 | Stirling2 | Lah);
    let name = args
        .family
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let records: Vec<OutputRecord> = (0..=n_max)
        .map(|n| {
            let mut params = BTreeMap::new();
            params.insert("n".to_string(), n.to_string());
            if uses_alpha {
                params.insert(
                    "alpha".to_string(),
                    join(&alpha.as_slice()[..n.min(alpha.len())]),
                );
            }
            OutputRecord::list(
                &name,
                params,
                &table.row(n)[..=n],
                Mode::Corrected.name(),
                args.decimals,
            )
        })
        .collect();
    emit(&records, args.format)?;
    Ok(0)
}

fn cmd_poly(args: &PolyArgs) -> Result<u8, Failure> {
    use PolyFamily::*;
    let p = &args.point;
    let mode = p.mode;
    if matches!(args.family, GenCauchy1 | GenCauchy2) {
        let k = p.k.or(p.lengths.as_ref().map(|l| l.0.len())).unwrap_or(1);
        if k != 1 {
            return Err(Error::LengthCount {
                expected: 1,
                found: k,
            }
            .into());
        }
    }
    let r = resolve(p)?;
    let poly = match (args.family, mode) {
        (MpCauchy1 | GenCauchy1, _) => mp_poly_first(&r.point)?,
        (MpCauchy2 | GenCauchy2, Mode::Corrected) => mp_poly_second(&r.point)?,
        (MpCauchy2 | GenCauchy2, Mode::Verbatim) => mp_poly_second_abs(&r.point)?,
        (MpBernoulli, _) => mp_bernoulli_poly(&r.point, mode.convention())?,
    };
    // pad to n + 1 coefficients so the degree is explicit
    let coeffs: Vec<Rational> = (0..=p.n.max(poly.degree().unwrap_or(0)))
        .map(|i| poly.coeff(i))
        .collect();
    let name = args
        .family
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    emit(
        &[OutputRecord::list(
            &name,
            r.params,
            &coeffs,
            mode.name(),
            p.decimals,
        )],
        p.format,
    )?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let grid = GridSpec {
        n_max: args.n_max,
        k_max: args.k_max,
        points: args.points,
        order: args.order,
        height: args.height,
    };
    let result = sweep(&args.ids.0, &grid, args.seed);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if args.errata {
        let ledger = errata_ledger(&result.reports);
        match args.format {
            Format::Json => write_json_lines(&mut out, &ledger)?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record([
                    "identity",
                    "counterexample",
                    "verbatim_lhs",
                    "verbatim_rhs",
                    "failures",
                    "checked",
                    "corrected_reading",
                ])?;
                for e in &ledger {
                    w.write_record([
                        e.identity.tag().to_string(),
                        serde_json::to_string(&e.counterexample).map_err(io::Error::other)?,
                        e.verbatim_lhs.clone(),
                        e.verbatim_rhs.clone(),
                        e.failures.to_string(),
                        e.checked.to_string(),
                        e.corrected_reading.to_string(),
                    ])?;
                }
                w.flush()?;
            }
        }
    } else {
        let reports: Vec<_> = result
            .reports
            .iter()
            .filter(|r| args.mode == Mode::Corrected || r.verbatim == Verdict::Fail)
            .collect();
        match args.format {
            Format::Json => write_json_lines(&mut out, &reports)?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record([
                    "identity",
                    "point",
                    "verbatim",
                    "corrected",
                    "lhs",
                    "rhs",
                    "verbatim_lhs",
                    "verbatim_rhs",
                    "note",
                ])?;
                for r in reports {
                    w.write_record([
                        r.identity.tag().to_string(),
                        serde_json::to_string(&r.point).map_err(io::Error::other)?,
                        r.verbatim.as_str().to_string(),
                        r.corrected.as_str().to_string(),
                        r.lhs.clone(),
                        r.rhs.clone(),
                        r.verbatim_lhs.clone().unwrap_or_default(),
                        r.verbatim_rhs.clone().unwrap_or_default(),
                        r.note.clone(),
                    ])?;
                }
                w.flush()?;
            }
        }
    }
    out.flush()?;
    let count = |f: &dyn Fn(&polyfam_core::harness::IdentityReport) -> bool| {
        result.reports.iter().filter(|r| f(r)).count()
    };
    let failed = count(&|r| r.corrected == Verdict::Fail);
    eprintln!(
        "{} reports: {} corrected PASS, {} corrected FAIL, {} NA, {} printed-form FAIL",
        result.reports.len(),
        count(&|r| r.corrected == Verdict::Pass),
        failed,
        count(&|r| r.corrected == Verdict::Na),
        count(&|r| r.verbatim == Verdict::Fail),
    );
    Ok(if failed == 0 { 0 } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Number(args) => cmd_number(args),
        Command::Table(args) => cmd_table(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("precondition violated: {e}");
            ExitCode::from(EXIT_PRECONDITION)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
