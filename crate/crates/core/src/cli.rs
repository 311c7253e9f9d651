//! Command-line front end: `analyze`, `family`, `betti0` and `crofton`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    betti_sum_bound, classify, density_bound, lipschitz_killing_bound, op_baseline_density,
    sigma_bound, GermReport, KBound, LkEntry, LkExponent, PureDimensionality, ReportFlags,
    SigmaEntry, Versions,
};
use crate::crofton::crofton_matrix;
use crate::families::{transform_embed, transform_product, FamilyError, FamilySpec};
use crate::groebner::{tangent_cone, Budget, GroebnerError, DEFAULT_PAIR_BUDGET};
use crate::hilbert::cone_hilbert;
use crate::numtopo::{
    count_components, write_cells_csv, ComponentCount, CountStatus, NumTopoError, Resolution,
    SectionSpec, DEFAULT_LEAF_BUDGET,
};
use crate::parser::{emit_report, parse_ideal, IdealFile, ParseError};
use crate::polyring::{Coeff, Polynomial};
use crate::singular::{singular_dimension, SingularError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{module}: {message}")]
    Resource { module: &'static str, message: String },
    #[error("{0}")]
    Hypothesis(String),
    #[error("{module}: {message}")]
    Other { module: &'static str, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Resource { .. } => 3,
            CliError::Hypothesis(_) => 4,
            CliError::Other { .. } | CliError::Io { .. } => 1,
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::ResourceLimit { .. } => CliError::Resource {
                module: "groebner",
                message: e.to_string(),
            },
            GroebnerError::UnitIdeal => CliError::Hypothesis(e.to_string()),
            _ => CliError::Other {
                module: "groebner",
                message: e.to_string(),
            },
        }
    }
}

impl From<SingularError> for CliError {
    fn from(e: SingularError) -> Self {
        match e {
            SingularError::Groebner(g) => g.into(),
            SingularError::TooManyMinors { .. } => CliError::Resource {
                module: "singular",
                message: e.to_string(),
            },
            SingularError::MinorSize { .. } => CliError::Other {
                module: "singular",
                message: e.to_string(),
            },
        }
    }
}

impl From<NumTopoError> for CliError {
    fn from(e: NumTopoError) -> Self {
        match e {
            NumTopoError::LeafBudget { .. } => CliError::Resource {
                module: "numtopo",
                message: e.to_string(),
            },
            _ => CliError::Other {
                module: "numtopo",
                message: e.to_string(),
            },
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Other {
            module: "families",
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "germ-bounds", version, about = "Multiplicity-based bounds for real algebraic germs at the origin")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the tangent cone, multiplicity and all bounds for an ideal file.
    Analyze(AnalyzeArgs),
    /// Emit a member of one of the built-in families as an ideal file.
    Family(FamilyArgs),
    /// Count connected components of a plane section inside a box.
    Betti0(Betti0Args),
    /// Print the Cauchy-Crofton matrix.
    Crofton(CroftonArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum LkExponentArg {
    #[default]
    Default,
    PaperDisplay,
}

impl From<LkExponentArg> for LkExponent {
    fn from(a: LkExponentArg) -> Self {
        match a {
            LkExponentArg::Default => LkExponent::Default,
            LkExponentArg::PaperDisplay => LkExponent::PaperDisplay,
        }
    }
}

/// Inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange(pub usize, pub usize);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound `{t}`: {e}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(KRange(parse(a)?, parse(b)?))
            }
            None => {
                let k = parse(s)?;
                Ok(KRange(k, k))
            }
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    /// Section dimensions to classify, `a..b` inclusive; defaults to 2..n-1.
    #[arg(long = "k")]
    pub k: Option<KRange>,
    #[arg(long)]
    pub assume_pure_dimensional: bool,
    #[arg(long, value_enum, default_value_t = LkExponentArg::Default)]
    pub lk_exponent: LkExponentArg,
    /// Maximum number of S-pair reductions per Gröbner computation.
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: u64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    G,
    F,
    Union,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformArg {
    Product,
    Embed,
}

#[derive(Clone, Debug, Args)]
pub struct FamilyArgs {
    pub kind: FamilyKind,
    #[arg(long)]
    pub l: usize,
    /// Ambient dimension for `f` and `union`.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Dimension of the large plane for `union`.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Section dimension for `union`.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Transformations applied in order.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub transform: Vec<TransformArg>,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct Betti0Args {
    pub input: PathBuf,
    /// Assignments `var=value,...` pinning all but two variables.
    #[arg(long, value_delimiter = ',')]
    pub fix: Vec<String>,
    /// `xmin,xmax,ymin,ymax` for the two free variables.
    #[arg(long = "box", value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    pub bbox: Vec<String>,
    /// Cell width, or `auto`.
    #[arg(long, default_value = "auto")]
    pub res: String,
    #[arg(long, default_value_t = DEFAULT_LEAF_BUDGET)]
    pub leaf_budget: u64,
    /// Write occupied cells to this CSV file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct CroftonArgs {
    #[arg(long)]
    pub n: usize,
}

/// Parses `-3`, `3/4`, `0.125` or `-1e-2` exactly.
pub fn parse_rational(s: &str) -> Result<Coeff, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: `{s}`");
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Coeff::new(a, b));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(p) => (&s[..p], s[p + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = Coeff::from_integer(BigInt::from(10));
    let mut value = Coeff::from_integer(all);
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if neg { -value } else { value })
}

/// Settings for one analysis.
#[derive(Clone, Debug)]
pub struct AnalyzeConfig {
    pub k_range: Option<KRange>,
    pub assume_pure_dimensional: bool,
    pub lk_exponent: LkExponent,
    pub budget: u64,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            k_range: None,
            assume_pure_dimensional: false,
            lk_exponent: LkExponent::Default,
            budget: DEFAULT_PAIR_BUDGET,
        }
    }
}

/// A report together with the hypothesis failure, if any, that made parts
/// of it undefined.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: GermReport,
    pub hypothesis_failure: Option<String>,
}

const NOTE_D: &str = "dimension_d is the Krull dimension of the tangent cone over the algebraic closure";
const NOTE_S: &str = "singular_dimension_s is the Zariski dimension of the singular locus over the algebraic closure, an upper bound for the real dimension; -1 means empty";

/// Runs the full pipeline on a parsed ideal.
pub fn analyze_ideal(ideal: &IdealFile, input: &str, cfg: &AnalyzeConfig) -> Result<Analysis, CliError> {
    let n = ideal.vars.len();
    let gens = &ideal.generators;
    let user_pure = cfg.assume_pure_dimensional || ideal.assume_pure_dimensional;
    let pure = PureDimensionality::determine(gens.len(), user_pure);
    let budget = Budget::new(cfg.budget);
    let mut report = GermReport {
        input: input.to_string(),
        n,
        vars: ideal.vars.to_vec(),
        degrees: gens.iter().map(|g| g.total_degree().unwrap_or(0)).collect(),
        tangent_cone_generators: Vec::new(),
        dimension_d: None,
        multiplicity_mu: None,
        singular_dimension_s: None,
        pure_dimensional: pure,
        per_k: Vec::new(),
        sigma_bounds: Vec::new(),
        lk_bounds: Vec::new(),
        density_bound: None,
        op_baseline_density: None,
        flags: ReportFlags {
            assume_pure_dimensional: user_pure,
            lk_exponent: cfg.lk_exponent,
            budget: cfg.budget,
            k_range: cfg.k_range.map(|KRange(a, b)| [a, b]),
        },
        versions: Versions::default(),
        notes: vec![NOTE_D.to_string(), NOTE_S.to_string()],
    };

    let cone = match tangent_cone(gens, budget) {
        Ok(c) => c,
        Err(GroebnerError::UnitIdeal) => {
            let msg = "the ideal contains a unit at the origin, so the germ is empty".to_string();
            report.notes.push(msg.clone());
            return Ok(Analysis {
                report,
                hypothesis_failure: Some(msg),
            });
        }
        Err(e) => return Err(e.into()),
    };
    report.tangent_cone_generators = cone.generators.iter().map(|g| g.to_string()).collect();
    let h = cone_hilbert(&cone);
    let d = h.dim.ok_or(CliError::from(GroebnerError::UnitIdeal))?;
    let mu = h.degree;
    report.dimension_d = Some(d);
    report.multiplicity_mu = Some(mu);
    let sing = singular_dimension(&cone, n, d, budget)?;
    let s = sing.s;
    report.singular_dimension_s = Some(s);

    let mut failure = None;
    let (lo, hi) = match cfg.k_range {
        Some(KRange(a, b)) => (a, b),
        None => (2, n.saturating_sub(1)),
    };
    for k in lo..=hi {
        match classify(n, d, s, k, pure) {
            Ok(c) => report.per_k.push(KBound {
                k,
                case: c.case,
                betti_sum_bound: betti_sum_bound(mu, k, c.case),
                reason: c.reason,
            }),
            Err(e) => {
                let msg = format!("bounds: {e}");
                report.notes.push(msg.clone());
                failure.get_or_insert(msg);
            }
        }
    }
    let m = crofton_matrix(n.max(1));
    for l in 1..=n {
        report.sigma_bounds.push(SigmaEntry {
            l,
            bound: sigma_bound(mu, n, d, s, l, pure, cfg.lk_exponent),
        });
        let lk = lipschitz_killing_bound(mu, n, d, s, l, &m, pure, cfg.lk_exponent);
        report.lk_bounds.push(LkEntry {
            k: l,
            bound: lk.bound,
            reason: lk.reason,
        });
    }
    report.density_bound = Some(density_bound(mu));
    report.op_baseline_density = Some(op_baseline_density(&report.degrees, n, d));
    Ok(Analysis {
        report,
        hypothesis_failure: failure,
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

/// Returns the process exit code.
pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<i32, CliError> {
    let ideal = parse_ideal(&read(&args.input)?)?;
    let cfg = AnalyzeConfig {
        k_range: args.k,
        assume_pure_dimensional: args.assume_pure_dimensional,
        lk_exponent: args.lk_exponent.into(),
        budget: args.budget,
    };
    let analysis = analyze_ideal(&ideal, &args.input.display().to_string(), &cfg)?;
    write_output(args.output.as_deref(), &emit_report(&analysis.report))?;
    match analysis.hypothesis_failure {
        Some(msg) => {
            eprintln!("germ-bounds: hypothesis not met: {msg}");
            Ok(4)
        }
        None => Ok(0),
    }
}

/// Builds the requested family member with its transformations applied.
pub fn family_ideal(args: &FamilyArgs) -> Result<IdealFile, CliError> {
    let spec = match args.kind {
        FamilyKind::G => FamilySpec::G { l: args.l },
        FamilyKind::F => FamilySpec::F { n: args.n, l: args.l },
        FamilyKind::Union => FamilySpec::LinearUnion {
            n: args.n,
            d: args.d,
            k: args.k,
            l: args.l,
        },
    };
    let mut gens = spec.generate()?.generators;
    for t in &args.transform {
        gens = match t {
            TransformArg::Product => transform_product(&gens),
            TransformArg::Embed => transform_embed(&gens),
        };
    }
    Ok(IdealFile::new(gens[0].vars().clone(), gens))
}

pub fn cmd_family(args: &FamilyArgs) -> Result<i32, CliError> {
    let ideal = family_ideal(args)?;
    write_output(args.output.as_deref(), &ideal.to_string())?;
    Ok(0)
}

/// Single polynomial whose zero set is that of the ideal: the generator
/// itself, or the sum of squares of all generators.
pub fn sum_of_squares(gens: &[Polynomial]) -> Polynomial {
    if gens.len() == 1 {
        return gens[0].clone();
    }
    gens.iter()
        .map(|g| g * g)
        .reduce(|a, b| &a + &b)
        .expect("at least one generator")
}

#[derive(Serialize)]
struct Betti0Output<'a> {
    count: usize,
    certified: usize,
    status: CountStatus,
    depth: u32,
    cells_examined: u64,
    history: &'a [(u32, usize)],
    free_variables: [&'a str; 2],
}

/// Parses the `betti0` arguments into a section.
pub fn betti0_spec(ideal: &IdealFile, args: &Betti0Args) -> Result<SectionSpec, CliError> {
    let bad = |message: String| CliError::Other {
        module: "cli",
        message,
    };
    let mut fixed = Vec::new();
    for a in &args.fix {
        let (name, value) = a
            .split_once('=')
            .ok_or_else(|| bad(format!("expected var=value, got `{a}`")))?;
        fixed.push((name.trim().to_string(), parse_rational(value).map_err(bad)?));
    }
    if args.bbox.len() != 4 {
        return Err(bad("--box takes xmin,xmax,ymin,ymax".into()));
    }
    let mut rect = [Coeff::zero(), Coeff::one(), Coeff::zero(), Coeff::one()];
    for (slot, text) in rect.iter_mut().zip(&args.bbox) {
        *slot = parse_rational(text).map_err(bad)?;
    }
    let resolution = if args.res.trim() == "auto" {
        Resolution::Auto
    } else {
        let w = parse_rational(&args.res).map_err(bad)?;
        Resolution::Width(num_traits::ToPrimitive::to_f64(&w).unwrap_or(0.0))
    };
    let f = sum_of_squares(&ideal.generators);
    Ok(SectionSpec::new(f, fixed, rect, resolution)?.with_leaf_budget(args.leaf_budget))
}

pub fn cmd_betti0(args: &Betti0Args) -> Result<(i32, ComponentCount), CliError> {
    let ideal = parse_ideal(&read(&args.input)?)?;
    let spec = betti0_spec(&ideal, args)?;
    let result = count_components(&spec)?;
    if let Some(path) = &args.csv {
        let file = fs::File::create(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        write_cells_csv(&spec, &result, io::BufWriter::new(file)).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let out = Betti0Output {
        count: result.count,
        certified: result.certified,
        status: result.status,
        depth: result.depth,
        cells_examined: result.cells_examined,
        history: &result.history,
        free_variables: spec.free_names(),
    };
    let mut text = serde_json::to_string_pretty(&out).expect("serializes");
    text.push('\n');
    write_output(None, &text)?;
    Ok((0, result))
}

pub fn cmd_crofton(args: &CroftonArgs) -> Result<i32, CliError> {
    if args.n == 0 {
        return Err(CliError::Other {
            module: "crofton",
            message: "n must be at least 1".into(),
        });
    }
    write_output(None, &crofton_matrix(args.n).to_string())?;
    Ok(0)
}

/// Dispatches a parsed command line; returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Family(a) => cmd_family(a),
        Command::Betti0(a) => cmd_betti0(a).map(|(code, _)| code),
        Command::Crofton(a) => cmd_crofton(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("germ-bounds: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("1e-2").unwrap(), ratio(1, 100));
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn k_ranges() {
        assert_eq!("2..4".parse::<KRange>().unwrap(), KRange(2, 4));
        assert_eq!("2..=4".parse::<KRange>().unwrap(), KRange(2, 4));
        assert_eq!("3".parse::<KRange>().unwrap(), KRange(3, 3));
        assert!("a..b".parse::<KRange>().is_err());
    }

    #[test]
    fn cusp_has_an_empty_bounds_table() {
        let ideal = parse_ideal("vars x,y; x^2 - y^3;").unwrap();
        let a = analyze_ideal(&ideal, "cusp", &AnalyzeConfig::default()).unwrap();
        assert_eq!(a.report.multiplicity_mu, Some(2));
        assert!(a.report.per_k.is_empty());
        assert!(a.hypothesis_failure.is_none());
    }

    #[test]
    fn unit_ideal_gives_a_partial_report() {
        let ideal = parse_ideal("vars x,y; 1 + x;").unwrap();
        let a = analyze_ideal(&ideal, "unit", &AnalyzeConfig::default()).unwrap();
        assert!(a.hypothesis_failure.is_some());
        assert_eq!(a.report.multiplicity_mu, None);
    }

    #[test]
    fn out_of_range_k_is_a_hypothesis_failure() {
        let ideal = parse_ideal("vars x,y,z; z^2 - x*y;").unwrap();
        let cfg = AnalyzeConfig {
            k_range: Some(KRange(1, 2)),
            ..AnalyzeConfig::default()
        };
        let a = analyze_ideal(&ideal, "q", &cfg).unwrap();
        assert!(a.hypothesis_failure.is_some());
        assert_eq!(a.report.per_k.len(), 1);
    }
}
