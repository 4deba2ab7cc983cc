//! `hecke` subcommands. Exit codes: 0 success, 1 computation error, 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hecke_core::arith::{is_prime, primes_in};
use hecke_core::exactlin::{rank_and_kernel, restrict_operator, FieldError, PrimeField};
use hecke_core::heckepoly::{assemble, lift_polynomial, HeckePolyError, HeckePolynomial, LiftKind, Sl3Datum};
use hecke_core::ledger::{compare_families, range_table, ChangeOfVariable, LedgerError, RangeTable};
use hecke_core::modsym::{
    determinant, eigen_report, sturm_primes, unimodularize, vanishing_count, winding_pairing, Cusp, ManinBasisSpace,
    ModSymError, ModularSymbol,
};
use hecke_core::paramodular::{ParamodularDims, ParamodularError};
use hecke_core::Rational;
use serde::{Deserialize, Serialize};

use crate::config::{Config, DataPaths, OutputFormat, FIELD_PRIME_ENV};
use crate::formats::data::{parse_gritsenko, parse_sl3};
use crate::formats::ledger::{parse_family, CompareJson, LedgerJson, RangeTableJson};
use crate::formats::modsym::{eigen_csv, ModsymJson};
use crate::formats::poly::PolyJson;
use crate::formats::triples::{parse_triples, write_triples};
use crate::formats::{parse_rational, to_json, FormatError};
use crate::pipeline;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) | CliError::Output(_) => EXIT_COMPUTE,
        }
    }
}

impl From<ModSymError> for CliError {
    fn from(e: ModSymError) -> Self {
        use ModSymError::*;
        match e {
            InvalidLevel | UnsupportedWeight { .. } | BadPrime { .. } | NotPrime { .. } | NotCoprime { .. } | NoPrimes
            | NoCentralMonomial { .. } | CoefficientMismatch { .. } | DegenerateCusp => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<ParamodularError> for CliError {
    fn from(e: ParamodularError) -> Self {
        match e {
            ParamodularError::NonIntegralResult { .. } => CliError::Compute(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LedgerError> for CliError {
    fn from(e: LedgerError) -> Self {
        match e {
            LedgerError::ModSym(m) => m.into(),
            LedgerError::Paramodular(p) => p.into(),
            LedgerError::AnalysisMismatch | LedgerError::InconsistentVanishing => CliError::Compute(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Usage(format!("field prime: {e}"))
    }
}

impl From<HeckePolyError> for CliError {
    fn from(e: HeckePolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Modular symbols, Hecke eigensystems, SL4 lift ledgers and paramodular dimensions in exact arithmetic")]
#[command(after_help = "Exit codes: 0 success, 1 computation error, 2 usage error.")]
pub struct Cli {
    /// Field prime for modular linear algebra (2^31 < p < 2^63); the second field of the two-prime check is derived from it
    #[arg(long, global = true, env = FIELD_PRIME_ENV)]
    pub field_prime: Option<u64>,
    /// Output format (not every subcommand supports every format)
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Worker threads; output is identical for any value
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub threads: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modular symbol space for Γ0(N) and its cuspidal Hecke eigensystems
    Modsym(ModsymArgs),
    /// Hecke operator T_l on the symbol quotient as sparse triples
    HeckeMatrix(HeckeMatrixArgs),
    /// Weight-3 paramodular dimensions and the non-Gritsenko complement
    Paramodular(ParamodularArgs),
    /// Predicted lift constituents of H^5 for SL4 at prime level N, as ledger/1 JSON
    Ledger(LedgerArgs),
    /// Hecke polynomial of a lift family, or assembled from eigenvalues
    Poly(PolyArgs),
    /// Virtual cohomological dimension and cuspidal range for SL_n
    RangeTable(RangeTableArgs),
    /// Compare a report's lift polynomials against external data
    Compare(CompareArgs),
    /// Rank and kernel dimension of a sparse triple file
    Rank(RankArgs),
    /// Split a modular symbol into unimodular symbols
    Unimodularize(UnimodularizeArgs),
}

#[derive(Debug, Args)]
pub struct ModsymArgs {
    #[arg(long)]
    pub level: u64,
    /// Weight k+1 of the modular forms; must be even
    #[arg(long, default_value_t = 2)]
    pub weight: usize,
    /// Hecke primes, comma separated [default: primes up to the Sturm bound]
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Also compute winding pairings and the number of forms with vanishing central value
    #[arg(long)]
    pub winding: bool,
}

#[derive(Debug, Args)]
pub struct HeckeMatrixArgs {
    #[arg(long)]
    pub level: u64,
    #[arg(long, default_value_t = 2)]
    pub weight: usize,
    #[arg(long)]
    pub prime: u64,
    /// Restrict to the cuspidal subspace
    #[arg(long)]
    pub cuspidal: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "which")]
pub struct ParamodularSelect {
    /// A single prime
    #[arg(long, group = "which")]
    pub prime: Option<u64>,
    /// Inclusive range `a..b`; primes in it are tabulated
    #[arg(long, group = "which")]
    pub range: Option<String>,
}

#[derive(Debug, Args)]
pub struct ParamodularArgs {
    #[command(flatten)]
    pub select: ParamodularSelect,
    /// CSV `p,dim_gritsenko`
    #[arg(long)]
    pub gritsenko: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LedgerArgs {
    #[arg(long)]
    pub level: u64,
    /// Primes for the polynomial families [default: 2,3,5,7 without N]
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// CSV `level,prime,gamma,gamma_prime`
    #[arg(long)]
    pub sl3: Option<PathBuf>,
    /// CSV `p,dim_gritsenko`
    #[arg(long)]
    pub gritsenko: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyKind {
    Weight2A,
    Weight2B,
    Weight4,
    Sl3A,
    Sl3B,
    /// General rank-n polynomial from a(l,1..n-1)
    Assemble,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_enum)]
    pub kind: PolyKind,
    #[arg(long)]
    pub prime: u64,
    /// Eigenvalues as integers or `a/b`: α, β, (γ, γ′), or a(l,1..n-1) for assemble
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub values: Vec<String>,
    /// Rank n for assemble
    #[arg(long)]
    pub rank: Option<usize>,
    /// Central value a(l,n) for assemble
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub central: String,
}

#[derive(Debug, Args)]
pub struct RangeTableArgs {
    /// A single rank [default: 2..=9]
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// ledger/1 report
    #[arg(long)]
    pub report: PathBuf,
    /// ledger/1 report or family/1 polynomial list
    #[arg(long)]
    pub external: PathBuf,
    /// Substitute T -> sT in the external polynomials before comparing
    #[arg(long, conflicts_with = "prime_power", allow_hyphen_values = true)]
    pub scale: Option<String>,
    /// Substitute T -> l^e T in the external polynomials before comparing
    #[arg(long, allow_hyphen_values = true)]
    pub prime_power: Option<i32>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// Sparse triple file: `rows cols nnz`, then `i j value`
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct UnimodularizeArgs {
    /// Cusp `a/b`, an integer, or `oo`
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn config_of(cli: &Cli, data_paths: DataPaths) -> Config {
    Config {
        field_prime: cli.field_prime,
        output_format: cli.format.unwrap_or_default(),
        data_paths,
        threads: cli.threads as usize,
    }
}

fn unsupported(format: OutputFormat, command: &str) -> CliError {
    CliError::Usage(format!("{command} does not support --format {}", format.name()))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match &cli.command {
        Command::Modsym(a) => cmd_modsym(&config_of(cli, DataPaths::default()), a)?,
        Command::HeckeMatrix(a) => cmd_hecke_matrix(&config_of(cli, DataPaths::default()), a)?,
        Command::Paramodular(a) => {
            let paths = DataPaths { sl3: None, gritsenko: a.gritsenko.clone() };
            cmd_paramodular(&config_of(cli, paths), a)?
        }
        Command::Ledger(a) => {
            let paths = DataPaths { sl3: a.sl3.clone(), gritsenko: a.gritsenko.clone() };
            cmd_ledger(&config_of(cli, paths), a)?
        }
        Command::Poly(a) => cmd_poly(&config_of(cli, DataPaths::default()), a)?,
        Command::RangeTable(a) => cmd_range_table(&config_of(cli, DataPaths::default()), a)?,
        Command::Compare(a) => cmd_compare(&config_of(cli, DataPaths::default()), a)?,
        Command::Rank(a) => cmd_rank(&config_of(cli, DataPaths::default()), a)?,
        Command::Unimodularize(a) => cmd_unimodularize(&config_of(cli, DataPaths::default()), a)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn space_for(config: &Config, level: u64, weight: usize) -> Result<ManinBasisSpace, CliError> {
    if weight < 2 {
        return Err(CliError::Usage(format!("weight {weight} is below 2")));
    }
    Ok(ManinBasisSpace::new(level, weight - 1, config.field()?)?)
}

pub fn cmd_modsym(config: &Config, a: &ModsymArgs) -> Result<String, CliError> {
    let space = space_for(config, a.level, a.weight)?;
    let primes = if a.primes.is_empty() { sturm_primes(a.level, a.weight) } else { a.primes.clone() };
    let report = eigen_report(&space, &primes)?;
    let (pairings, vanishing) = if a.winding {
        let p = report.systems.iter().map(|s| winding_pairing(&space, s)).collect::<Result<Vec<_>, _>>()?;
        let v = if space.cuspidal_dim() == 0 { 0 } else { vanishing_count(&space, &primes)? };
        (Some(p), Some(v))
    } else {
        (None, None)
    };
    let doc = ModsymJson::new(&space, &primes, &report, pairings.as_deref(), vanishing);
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&doc)),
        OutputFormat::Csv => Ok(eigen_csv(&report.systems)?),
        OutputFormat::Text => {
            let s = &doc.summary;
            let mut t = format!(
                "level {} weight {}: quotient {}, cuspidal {}, eisenstein {}\n",
                s.level, doc.weight, s.quotient_dim, s.cuspidal_dim, s.eisenstein_dim
            );
            for (i, sys) in doc.eigensystems.iter().enumerate() {
                let ev: Vec<String> = sys.eigenvalues.iter().map(|(l, v)| format!("a_{l}={v}")).collect();
                write!(t, "system {} (dim {}): {}", i + 1, sys.dim, ev.join(" ")).expect("String write");
                if let Some(w) = &sys.winding_pairing {
                    write!(t, " winding={w}").expect("String write");
                }
                t.push('\n');
            }
            if doc.nonrational_dim > 0 {
                writeln!(t, "not split over Q: dim {}", doc.nonrational_dim).expect("String write");
            }
            if let Some(v) = doc.vanishing_forms {
                writeln!(t, "forms with vanishing central value: {v}").expect("String write");
            }
            Ok(t)
        }
    }
}

pub fn cmd_hecke_matrix(config: &Config, a: &HeckeMatrixArgs) -> Result<String, CliError> {
    if config.output_format != OutputFormat::Text && config.output_format != OutputFormat::Json {
        return Err(unsupported(config.output_format, "hecke-matrix"));
    }
    let space = space_for(config, a.level, a.weight)?;
    let mut t = pipeline::hecke_operators(&space, &[a.prime], config.threads)?.remove(0);
    if a.cuspidal {
        t = restrict_operator(&t, space.cuspidal_subspace()).map_err(|e| CliError::Compute(e.to_string()))?;
    }
    Ok(write_triples(&t))
}

fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("range must look like a..b, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub const PARAMODULAR_SCHEMA: &str = "paramodular/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamodularRow {
    pub p: u64,
    pub dim_s3: u64,
    pub dim_gritsenko: Option<u64>,
    pub dim_non_gritsenko: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamodularTable {
    pub schema: String,
    pub rows: Vec<ParamodularRow>,
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn cmd_paramodular(config: &Config, a: &ParamodularArgs) -> Result<String, CliError> {
    let gritsenko = match &config.data_paths.gritsenko {
        Some(path) => parse_gritsenko(&read(path)?)?,
        None => BTreeMap::new(),
    };
    let primes = match (&a.select.prime, &a.select.range) {
        (Some(p), _) => vec![*p],
        (None, Some(r)) => {
            let (lo, hi) = parse_range(r)?;
            primes_in(lo, hi)
        }
        (None, None) => unreachable!("clap requires one of --prime, --range"),
    };
    let dims: Vec<ParamodularDims> = pipeline::paramodular_table(&primes, |p| gritsenko.get(&p).copied(), config.threads)?;
    let rows: Vec<ParamodularRow> = dims
        .iter()
        .map(|d| ParamodularRow { p: d.p, dim_s3: d.dim_s3, dim_gritsenko: d.dim_gritsenko, dim_non_gritsenko: d.dim_non_gritsenko })
        .collect();
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&ParamodularTable { schema: PARAMODULAR_SCHEMA.into(), rows })),
        OutputFormat::Csv | OutputFormat::Text => {
            let sep = if config.output_format == OutputFormat::Csv { "," } else { "\t" };
            let mut t = ["p", "dim_s3", "dim_gritsenko", "dim_non_gritsenko"].join(sep);
            t.push('\n');
            for r in rows {
                let cells = [r.p.to_string(), r.dim_s3.to_string(), opt(r.dim_gritsenko), opt(r.dim_non_gritsenko)];
                t.push_str(&cells.join(sep));
                t.push('\n');
            }
            Ok(t)
        }
    }
}

fn load_sl3(config: &Config) -> Result<Option<Vec<Sl3Datum>>, CliError> {
    config.data_paths.sl3.as_deref().map(|p| Ok(parse_sl3(&read(p)?)?)).transpose()
}

pub fn cmd_ledger(config: &Config, a: &LedgerArgs) -> Result<String, CliError> {
    let primes: Vec<u64> =
        if a.primes.is_empty() { [2, 3, 5, 7].into_iter().filter(|&l| l != a.level).collect() } else { a.primes.clone() };
    let sl3 = load_sl3(config)?;
    let gritsenko = match &config.data_paths.gritsenko {
        Some(path) => parse_gritsenko(&read(path)?)?.get(&a.level).copied(),
        None => None,
    };
    let report = pipeline::build_report(a.level, &primes, sl3.as_deref(), gritsenko, config.field()?, config.threads)?;
    let doc = LedgerJson::of(&report);
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&doc)),
        OutputFormat::Text => {
            let mut t = format!(
                "level {}: Eisenstein {} {}, non-Eisenstein {}\n",
                doc.level,
                doc.tally_label,
                doc.dim_eisenstein_predicted,
                doc.dim_non_eisenstein_predicted.map_or_else(|| "unknown".to_string(), |d| d.to_string())
            );
            for c in &doc.constituents {
                writeln!(t, "  {} {} x{}", c.kind, c.source, c.multiplicity).expect("String write");
            }
            for e in &doc.excluded {
                writeln!(t, "  excluded (nonvanishing central value) {}", e.source).expect("String write");
            }
            for c in &doc.caveats {
                writeln!(t, "  caveat: {c}").expect("String write");
            }
            Ok(t)
        }
        OutputFormat::Csv => Err(unsupported(config.output_format, "ledger")),
    }
}

fn rationals(values: &[String]) -> Result<Vec<Rational>, CliError> {
    values.iter().map(|v| parse_rational(v).map_err(CliError::from)).collect()
}

pub fn cmd_poly(config: &Config, a: &PolyArgs) -> Result<String, CliError> {
    if !is_prime(a.prime) {
        return Err(CliError::Usage(format!("{} is not prime", a.prime)));
    }
    let values = rationals(&a.values)?;
    let poly: HeckePolynomial = match a.kind {
        PolyKind::Assemble => {
            let n = a.rank.ok_or_else(|| CliError::Usage("--kind assemble needs --rank".into()))?;
            assemble(n, a.prime, &values, parse_rational(&a.central)?)?
        }
        kind => {
            let lift = match kind {
                PolyKind::Weight2A => LiftKind::Weight2A,
                PolyKind::Weight2B => LiftKind::Weight2B,
                PolyKind::Weight4 => LiftKind::Weight4,
                PolyKind::Sl3A => LiftKind::Sl3A,
                PolyKind::Sl3B => LiftKind::Sl3B,
                PolyKind::Assemble => unreachable!(),
            };
            if values.len() != lift.arity() {
                return Err(CliError::Usage(format!("{} takes {} value(s), got {}", lift.name(), lift.arity(), values.len())));
            }
            lift_polynomial(lift, a.prime, &values)
        }
    };
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&PolyJson::of(&poly))),
        OutputFormat::Text => Ok(format!("{}\n", poly.poly)),
        OutputFormat::Csv => Err(unsupported(config.output_format, "poly")),
    }
}

pub const RANGE_SCHEMA: &str = "range-table/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeTableDoc {
    pub schema: String,
    pub rows: Vec<RangeTableJson>,
}

pub fn cmd_range_table(config: &Config, a: &RangeTableArgs) -> Result<String, CliError> {
    let ns: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (2..=9).collect(),
    };
    let mut rows = Vec::new();
    for n in ns {
        let t: RangeTable = match range_table(n) {
            Ok(t) => t,
            Err(LedgerError::CuspRangeUnknown { partial }) => partial,
            Err(e) => return Err(e.into()),
        };
        rows.push(RangeTableJson::from(&t));
    }
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&RangeTableDoc { schema: RANGE_SCHEMA.into(), rows })),
        OutputFormat::Csv | OutputFormat::Text => {
            let sep = if config.output_format == OutputFormat::Csv { "," } else { "\t" };
            let mut t = ["n", "dim_x", "vcd", "cusp_top", "cusp_bottom"].join(sep);
            t.push('\n');
            for r in rows {
                let u = |v: Option<usize>| v.map_or_else(String::new, |x| x.to_string());
                let cells = [r.n.to_string(), r.dim_x.to_string(), r.vcd.to_string(), u(r.cusp_top), u(r.cusp_bottom)];
                t.push_str(&cells.join(sep));
                t.push('\n');
            }
            Ok(t)
        }
    }
}

pub fn cmd_compare(config: &Config, a: &CompareArgs) -> Result<String, CliError> {
    let report_text = read(&a.report)?;
    let ours = LedgerJson::parse(&report_text)?;
    let theirs = parse_family(&read(&a.external)?)?;
    let (cov, label) = match (&a.scale, a.prime_power) {
        (Some(s), _) => (ChangeOfVariable::Scale(parse_rational(s)?), format!("T -> ({s})T")),
        (None, Some(e)) => (ChangeOfVariable::PrimePower(e), format!("T -> l^{e} T")),
        (None, None) => (ChangeOfVariable::Identity, "identity".to_string()),
    };
    // compare against the report's own polynomial list, so any ledger/1 file works
    let report_family = ours.family()?;
    let summary = compare_families(&report_family, &theirs, cov);
    let doc = CompareJson::of(&summary, &label);
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&doc)),
        OutputFormat::Text => {
            let mut t = format!("matched {}, mismatched {}\n", doc.matched, doc.mismatches.len());
            for m in &doc.mismatches {
                writeln!(t, "{} {} l={}: ours [{}] theirs [{}]", m.source, m.kind, m.l, m.ours.join(", "), m.theirs.join(", "))
                    .expect("String write");
            }
            for k in &doc.missing_external {
                writeln!(t, "missing externally: {} {} l={}", k.source, k.kind, k.l).expect("String write");
            }
            for k in &doc.unmatched_external {
                writeln!(t, "unmatched external: {} {} l={}", k.source, k.kind, k.l).expect("String write");
            }
            Ok(t)
        }
        OutputFormat::Csv => Err(unsupported(config.output_format, "compare")),
    }
}

pub const RANK_SCHEMA: &str = "rank/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDoc {
    pub schema: String,
    pub field_prime: u64,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

pub fn cmd_rank(config: &Config, a: &RankArgs) -> Result<String, CliError> {
    let field: PrimeField = config.field()?;
    let m = parse_triples(field, &read(&a.input)?)?;
    let (rank, kernel) = rank_and_kernel(&m);
    let doc = RankDoc {
        schema: RANK_SCHEMA.into(),
        field_prime: field.modulus(),
        rows: m.nrows(),
        cols: m.ncols(),
        rank,
        kernel_dim: kernel.dim(),
    };
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&doc)),
        OutputFormat::Text => Ok(format!("rank {} kernel {}\n", doc.rank, doc.kernel_dim)),
        OutputFormat::Csv => Err(unsupported(config.output_format, "rank")),
    }
}

pub const UNIMODULAR_SCHEMA: &str = "unimodular/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceJson {
    pub start: String,
    pub end: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodularDoc {
    pub schema: String,
    pub from: String,
    pub to: String,
    pub determinant: String,
    pub pieces: Vec<PieceJson>,
}

pub fn parse_cusp(s: &str) -> Result<Cusp, CliError> {
    let s = s.trim();
    if matches!(s, "oo" | "inf" | "infinity") {
        return Ok(Cusp::infinity());
    }
    let bad = || CliError::Usage(format!("bad cusp {s:?}: expected a/b, an integer or oo"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (s.parse().map_err(|_| bad())?, 1),
    };
    Cusp::new(p, q).map_err(|e| CliError::Usage(format!("bad cusp {s:?}: {e}")))
}

pub fn cmd_unimodularize(config: &Config, a: &UnimodularizeArgs) -> Result<String, CliError> {
    let s = ModularSymbol::plain(parse_cusp(&a.from)?, parse_cusp(&a.to)?);
    let pieces: Vec<PieceJson> =
        unimodularize(&s).iter().map(|p| PieceJson { start: p.q1.to_string(), end: p.q2.to_string() }).collect();
    let doc = UnimodularDoc {
        schema: UNIMODULAR_SCHEMA.into(),
        from: s.q1.to_string(),
        to: s.q2.to_string(),
        determinant: determinant(&s).to_string(),
        pieces,
    };
    match config.output_format {
        OutputFormat::Json => Ok(to_json(&doc)),
        OutputFormat::Text => Ok(doc.pieces.iter().map(|p| format!("{{{}, {}}}\n", p.start, p.end)).collect()),
        OutputFormat::Csv => Err(unsupported(config.output_format, "unimodularize")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exit_of(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hecke").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges_and_cusps() {
        assert_eq!(parse_range("2..100").unwrap(), (2, 100));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("5-7").is_err());
        assert!(parse_cusp("oo").unwrap().is_infinity());
        assert_eq!(parse_cusp("-3").unwrap(), Cusp::new(-3, 1).unwrap());
        assert_eq!(parse_cusp("4/6").unwrap(), Cusp::new(2, 3).unwrap());
        assert!(parse_cusp("1/0x").is_err());
    }

    #[test]
    fn error_classes() {
        assert_eq!(CliError::from(ModSymError::InvalidLevel).exit_code(), EXIT_USAGE);
        assert_eq!(CliError::Compute("x".into()).exit_code(), EXIT_COMPUTE);
        let (code, out, err) = exit_of(&["paramodular", "--prime", "4"]);
        assert_eq!((code, out.as_str()), (EXIT_USAGE, ""));
        assert!(err.starts_with("error:"));
        assert_eq!(exit_of(&["modsym", "--level", "11", "--weight", "1"]).0, EXIT_USAGE);
        assert_eq!(exit_of(&["ledger", "--level", "11", "--format", "csv"]).0, EXIT_USAGE);
        assert_eq!(exit_of(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn field_prime_flag_reaches_rank() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.txt");
        std::fs::write(&path, "1 2 2\n0 0 1\n0 1 2\n").unwrap();
        let p = hecke_core::exactlin::PrimeField::secondary_field().modulus().to_string();
        let (code, out, _) = exit_of(&["rank", "--input", path.to_str().unwrap(), "--field-prime", &p]);
        assert_eq!(code, EXIT_OK);
        let doc: RankDoc = serde_json::from_str(&out).unwrap();
        assert_eq!((doc.rank, doc.kernel_dim, doc.field_prime.to_string()), (1, 1, p));
    }
}
