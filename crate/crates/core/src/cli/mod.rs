//! The `planarlab` command line.
//!
//! Every subcommand writes one newline-terminated JSON document to standard
//! output (`scan` can write CSV instead) and diagnostics to standard error.
//!
//! ```text
//! --r <int>                   field GF(2^r), 1 <= r <= 24
//! --t <int> | <lo>..<hi>      exponent or inclusive exponent range
//! --a <hex|all|sample:N:SEED> coefficient(s); --a-mode is an alias
//! --format json|csv           csv only for scan
//! --workers <int>             rayon threads (env PLANARLAB_WORKERS)
//! --witness-cap <int>         collisions kept per planarity test
//! --no-timing                 omit duration_ms for byte-stable output
//! ```
//!
//! Polynomial arguments use the text formats of [`crate::poly::text`].
//! The worker count is not echoed in the report: output never depends on it.
//!
//! Exit codes: 0 consistent, 1 a checked claim failed, 2 usage or input
//! error, 3 capacity exceeded.

pub mod report;

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::designs::{build_rds, verify_rds};
use crate::error::Error;
use crate::field::{FieldCtx, FieldElem};
use crate::irreducibility::{
    build_g, build_h, build_hbar, capelli_for_h, reducible_translate_census,
};
use crate::is_power_of_two;
use crate::planarity::{
    is_planar, monomial_table, remark_threshold, scan_monomials, AMode, MonomialSpec, TRange,
};
use crate::poly::text::{parse_bi, parse_elem, parse_ternary};
use crate::weil::{
    count_affine_zeros_with, count_projective_zeros, counterexample_report,
    inequality_chain_check, weil_consistency_check, CountStrategy, Cubic, TernaryForm,
};
use report::{to_value, Envelope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// `--t`: a single exponent or an inclusive range `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TSpec {
    One(u64),
    Range(u64, u64),
}

impl TSpec {
    pub fn bounds(self) -> (u64, u64) {
        match self {
            TSpec::One(t) => (t, t),
            TSpec::Range(lo, hi) => (lo, hi),
        }
    }

    fn single(self) -> Result<u64, Error> {
        match self {
            TSpec::One(t) => Ok(t),
            TSpec::Range(..) => Err(Error::Parse("this command takes a single --t".into())),
        }
    }
}

impl FromStr for TSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("bad exponent {x:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(TSpec::Range(num(lo)?, num(hi)?)),
            None => Ok(TSpec::One(num(s)?)),
        }
    }
}

impl fmt::Display for TSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TSpec::One(t) => write!(f, "{t}"),
            TSpec::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

impl Serialize for TSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `--a`: one coefficient in hex, every nonzero coefficient, or a seeded sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ASpec {
    One(String),
    All,
    Sample { count: u32, seed: u64 },
}

impl ASpec {
    fn single(&self, ctx: &FieldCtx) -> Result<FieldElem, Error> {
        match self {
            ASpec::One(s) => parse_elem(ctx, s),
            _ => Err(Error::Parse("this command takes a single hex --a".into())),
        }
    }

    fn mode(&self, ctx: &FieldCtx) -> Result<AMode, Error> {
        match self {
            ASpec::All => Ok(AMode::All),
            ASpec::Sample { count, seed } => Ok(AMode::Sampled {
                count: *count,
                seed: *seed,
            }),
            ASpec::One(_) => Err(Error::Parse(format!(
                "scan takes --a all or sample:N:SEED (r = {})",
                ctx.r()
            ))),
        }
    }
}

impl FromStr for ASpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(ASpec::All);
        }
        if let Some(rest) = s.strip_prefix("sample:") {
            let (n, seed) = rest
                .split_once(':')
                .ok_or_else(|| format!("expected sample:N:SEED, got {s:?}"))?;
            let count = n.parse().map_err(|e| format!("bad sample count {n:?}: {e}"))?;
            let seed = seed.parse().map_err(|e| format!("bad seed {seed:?}: {e}"))?;
            return Ok(ASpec::Sample { count, seed });
        }
        let digits = s.strip_prefix("0x").unwrap_or(s);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(format!("expected hex, all, or sample:N:SEED, got {s:?}"));
        }
        Ok(ASpec::One(s.to_string()))
    }
}

impl fmt::Display for ASpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ASpec::One(s) => f.write_str(s),
            ASpec::All => f.write_str("all"),
            ASpec::Sample { count, seed } => write!(f, "sample:{count}:{seed}"),
        }
    }
}

impl Serialize for ASpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveArg {
    First,
    Second,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyArg {
    PerRow,
    Exhaustive,
}

#[derive(Parser, Debug)]
#[command(name = "planarlab", version, about = "Planar monomials over GF(2^r)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "PLANARLAB_WORKERS")]
    pub workers: Option<usize>,

    /// Omit wall-clock timing so output is byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Modulus, size and smallest generator of GF(2^r).
    FieldInfo(FieldArgs),
    /// Planarity of c -> a c^t.
    PlanarTest(PlanarArgs),
    /// Planarity of a c^t over a range of t and a set of a.
    Scan(ScanArgs),
    /// The auxiliary polynomials g, H and H-bar.
    BuildH(MonoArgs),
    /// Absolute irreducibility of H by the binomial criterion.
    Capelli(MonoArgs),
    /// Reducibility of H-bar + d for every d by exhaustive factor search.
    Census(CensusArgs),
    /// Zeros of a bivariate polynomial, or projective zeros of a form.
    CountPoints(CountArgs),
    /// Zero count of H against the Weil-type lower bound.
    WeilCheck(MonoArgs),
    /// The integer inequality chain for t (or a range of t).
    ChainCheck(ChainArgs),
    /// Least r under the sharper hypothesis, next to t^4 <= 2^r.
    Threshold(TOnlyArgs),
    /// Projective point counts of two singular cubics.
    Counterexamples(CurveArgs),
    /// Relative difference set from a c^t, checked by full census.
    RdsVerify(PlanarArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct FieldArgs {
    #[arg(long)]
    pub r: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct PlanarArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub t: TSpec,
    #[arg(long, visible_alias = "a-mode")]
    pub a: ASpec,
    #[arg(long, default_value_t = 1)]
    pub witness_cap: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct ScanArgs {
    #[arg(long)]
    pub r: u32,
    /// Defaults to 1..t_max with t_max^4 <= q.
    #[arg(long)]
    pub t: Option<TSpec>,
    #[arg(long, visible_alias = "a-mode", default_value = "all")]
    pub a: ASpec,
}

#[derive(Args, Debug, Serialize)]
pub struct MonoArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub t: TSpec,
    #[arg(long, visible_alias = "a-mode", default_value = "1")]
    pub a: ASpec,
}

#[derive(Args, Debug, Serialize)]
pub struct CensusArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub t: TSpec,
    /// Degree of the extension the factors may live in.
    #[arg(long, default_value_t = 1)]
    pub ext: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    #[arg(long)]
    pub r: u32,
    /// Bivariate polynomial, `i,j:hex;...`.
    #[arg(long, conflicts_with = "form", required_unless_present = "form")]
    pub poly: Option<String>,
    /// Homogeneous ternary form, `i,j,k:hex;...`.
    #[arg(long)]
    pub form: Option<String>,
    #[arg(long, value_enum, default_value = "per-row")]
    pub strategy: StrategyArg,
}

#[derive(Args, Debug, Serialize)]
pub struct ChainArgs {
    #[arg(long)]
    pub t: TSpec,
    /// Field size; defaults to the least power of 2 that is >= t^4.
    #[arg(long)]
    pub q: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct TOnlyArgs {
    #[arg(long)]
    pub t: TSpec,
}

#[derive(Args, Debug, Serialize)]
pub struct CurveArgs {
    #[arg(long, value_enum, default_value = "both")]
    pub curve: CurveArg,
}

/// What a subcommand produced, before it is framed.
struct Outcome {
    field: Option<FieldCtx>,
    result: Value,
    consistent: bool,
    csv: Option<String>,
}

impl Outcome {
    fn new(field: Option<FieldCtx>, result: Value, consistent: bool) -> Self {
        Outcome {
            field,
            result,
            consistent,
            csv: None,
        }
    }
}

fn hex(x: FieldElem) -> String {
    format!("{x:x}")
}

/// Range of `t` capped so that `t^4` stays in `u128` and fits the field sizes we handle.
const MAX_RANGE_LEN: u64 = 1_000_000;

fn t_values(t: TSpec) -> Result<std::ops::RangeInclusive<u64>, Error> {
    let (lo, hi) = t.bounds();
    if lo > hi {
        return Err(Error::Parse(format!("empty range {t}")));
    }
    if hi - lo >= MAX_RANGE_LEN {
        return Err(Error::Capacity(format!("range {t} has more than {MAX_RANGE_LEN} values")));
    }
    Ok(lo..=hi)
}

fn field_info(a: &FieldArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let result = json!({
        "q": ctx.q(),
        "modulus_hex": format!("{:x}", ctx.modulus()),
        "generator": hex(ctx.primitive_element()),
    });
    Ok(Outcome::new(Some(ctx), result, true))
}

fn planar_test(a: &PlanarArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let spec = MonomialSpec::new(&ctx, a.a.single(&ctx)?, a.t.single()?)?;
    let table = monomial_table(&ctx, &spec);
    let mut report = is_planar(&ctx, &table, a.witness_cap)?;
    report.monomial = Some(spec);
    let q = ctx.q() as u64;
    let predicted = if is_power_of_two(spec.t) {
        Some(true)
    } else if spec.t.checked_pow(4).is_some_and(|t4| t4 <= q) {
        Some(false)
    } else {
        None
    };
    let consistent = predicted.is_none_or(|p| p == report.planar);
    let mut result = to_value(&report);
    result["predicted"] = json!(predicted);
    Ok(Outcome::new(Some(ctx), result, consistent))
}

fn scan(a: &ScanArgs, format: Format) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let t_range = match a.t {
        None => TRange::Theorem,
        Some(t) => {
            let (lo, hi) = t.bounds();
            TRange::Explicit { lo, hi }
        }
    };
    let mode = a.a.mode(&ctx)?;
    let v = scan_monomials(&ctx, t_range, mode)?;
    let q = ctx.q() as u64;
    let per_t: Vec<Value> = (v.t_lo..=v.t_hi)
        .map(|t| {
            let rows: Vec<_> = v.verdicts.iter().filter(|x| x.t == t).collect();
            let planar = rows.iter().filter(|x| x.planar).count();
            json!({
                "t": t,
                "tested": rows.len(),
                "planar": planar,
                "predicted": rows.first().and_then(|x| x.predicted(q)),
            })
        })
        .collect();
    let (count, seed) = match mode {
        AMode::All => (q - 1, None),
        AMode::Sampled { count, seed } => ((count as u64).min(q - 1), Some(seed)),
    };
    let planar_t: Vec<u64> = per_t
        .iter()
        .filter(|x| x["planar"].as_u64() == Some(count))
        .filter_map(|x| x["t"].as_u64())
        .collect();
    let result = json!({
        "t_max": v.t_max,
        "t_lo": v.t_lo,
        "t_hi": v.t_hi,
        "a_count": count,
        "seed": seed,
        "per_t": per_t,
        "planar_pair_count": v.planar_pairs().count(),
        "planar_t_all_a": planar_t,
        "exceptions": v.exceptions().collect::<Vec<_>>(),
        "theorem_consistent": v.theorem_consistent,
    });
    let csv = (format == Format::Csv).then(|| {
        let mut out = String::from("t,a,planar,witness_b,witness_c1,witness_c2\n");
        for x in &v.verdicts {
            let (b, c1, c2) = match x.witness {
                Some(w) => (hex(w.b), hex(w.c1), hex(w.c2)),
                None => Default::default(),
            };
            out.push_str(&format!("{},{},{},{b},{c1},{c2}\n", x.t, hex(x.a), x.planar));
        }
        out
    });
    Ok(Outcome {
        field: Some(ctx),
        result,
        consistent: v.theorem_consistent,
        csv,
    })
}

fn build_h_cmd(a: &MonoArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let t = a.t.single()?;
    let coeff = a.a.single(&ctx)?;
    let result = json!({
        "t": t,
        "a": hex(coeff),
        "g": build_g(t)?.to_string(),
        "h": build_h(&ctx, coeff, t)?.to_string(),
        "hbar": build_hbar(t)?.to_string(),
    });
    Ok(Outcome::new(Some(ctx), result, true))
}

fn capelli(a: &MonoArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let t = a.t.single()?;
    let coeff = a.a.single(&ctx)?;
    let v = capelli_for_h(&ctx, coeff, t)?;
    let mut result = to_value(&v);
    result["t"] = json!(t);
    result["a"] = json!(hex(coeff));
    Ok(Outcome::new(Some(ctx), result, v.abs_irreducible))
}

fn census(a: &CensusArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let t = a.t.single()?;
    let hbar = build_hbar(t)?;
    let shifts: Vec<FieldElem> = ctx.elements().collect();
    let rows = reducible_translate_census(&ctx, &hbar, &shifts, a.ext)?;
    let reducible: Vec<String> = rows.iter().filter(|x| x.1).map(|x| hex(x.0)).collect();
    let result = json!({
        "t": t,
        "ext": a.ext,
        "hbar": hbar.to_string(),
        "shifts": rows.len(),
        "reducible_shifts": reducible,
    });
    Ok(Outcome::new(Some(ctx), result, true))
}

fn count_points(a: &CountArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let result = match (&a.poly, &a.form) {
        (Some(p), _) => {
            let p = parse_bi(&ctx, p)?;
            let strategy = match a.strategy {
                StrategyArg::PerRow => CountStrategy::PerRow,
                StrategyArg::Exhaustive => CountStrategy::Exhaustive,
            };
            to_value(&count_affine_zeros_with(&ctx, &p, strategy)?)
        }
        (None, Some(f)) => {
            let form = TernaryForm::new(parse_ternary(&ctx, f)?)?;
            json!({
                "q": ctx.q(),
                "form": form.to_string(),
                "projective_points": count_projective_zeros(&ctx, &form)?,
            })
        }
        (None, None) => return Err(Error::Parse("one of --poly or --form is required".into())),
    };
    Ok(Outcome::new(Some(ctx), result, true))
}

fn weil_check(a: &MonoArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let t = a.t.single()?;
    let coeff = a.a.single(&ctx)?;
    let h = build_h(&ctx, coeff, t)?;
    let abs = capelli_for_h(&ctx, coeff, t)?.abs_irreducible;
    let rep = weil_consistency_check(&ctx, &h, abs)?;
    let consistent = rep.satisfied != Some(false);
    let mut result = to_value(&rep);
    result["t"] = json!(t);
    result["a"] = json!(hex(coeff));
    Ok(Outcome::new(Some(ctx), result, consistent))
}

fn default_q(t: u64) -> Result<u64, Error> {
    let t4 = (t as u128)
        .checked_pow(4)
        .filter(|&x| x <= 1 << 62)
        .ok_or_else(|| Error::range("exponent", format!("t = {t} is too large")))?;
    Ok(t4.next_power_of_two() as u64)
}

fn chain_check(a: &ChainArgs) -> Result<Outcome, Error> {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    let mut single = None;
    for t in t_values(a.t)? {
        let q = match a.q {
            Some(q) => q,
            None => default_q(t)?,
        };
        let c = inequality_chain_check(t, q)?;
        checked += 1;
        if !c.passes() {
            failures.push(to_value(&c));
        }
        if matches!(a.t, crate::cli::TSpec::One(_)) {
            single = Some(to_value(&c));
        }
    }
    let consistent = failures.is_empty();
    let result = match single {
        Some(v) => v,
        None => json!({ "checked": checked, "failures": failures }),
    };
    Ok(Outcome::new(None, result, consistent))
}

fn threshold(a: &TOnlyArgs) -> Result<Outcome, Error> {
    let reports = t_values(a.t)?
        .map(remark_threshold)
        .collect::<Result<Vec<_>, _>>()?;
    let consistent = reports.iter().all(|r| r.is_weaker_hypothesis());
    let result = match a.t {
        TSpec::One(_) => to_value(&reports[0]),
        TSpec::Range(..) => to_value(&reports),
    };
    Ok(Outcome::new(None, result, consistent))
}

fn counterexamples(a: &CurveArgs) -> Result<Outcome, Error> {
    let curves: &[Cubic] = match a.curve {
        CurveArg::First => &[Cubic::First],
        CurveArg::Second => &[Cubic::Second],
        CurveArg::Both => &[Cubic::First, Cubic::Second],
    };
    let reports = curves
        .iter()
        .map(|&c| counterexample_report(c))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = |c: Cubic| match c {
        Cubic::First => 2,
        Cubic::Second => 4,
    };
    let consistent = reports.iter().all(|r| r.counts[0].points == expected(r.curve));
    let result = if reports.len() == 1 {
        to_value(&reports[0])
    } else {
        to_value(&reports)
    };
    Ok(Outcome::new(None, result, consistent))
}

fn rds_verify(a: &PlanarArgs) -> Result<Outcome, Error> {
    let ctx = FieldCtx::new(a.r)?;
    let spec = MonomialSpec::new(&ctx, a.a.single(&ctx)?, a.t.single()?)?;
    let table = monomial_table(&ctx, &spec);
    let cert = verify_rds(&ctx, &build_rds(&ctx, &table)?)?;
    let planar = is_planar(&ctx, &table, 1)?.planar;
    let mut result = to_value(&cert);
    result["t"] = json!(spec.t);
    result["a"] = json!(hex(spec.a));
    result["planar"] = json!(planar);
    Ok(Outcome::new(Some(ctx), result, cert.valid == planar))
}

fn dispatch(cli: &Cli) -> Result<(&'static str, Value, Outcome), Error> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Scan(_)) {
        return Err(Error::Parse("--format csv is only available for scan".into()));
    }
    Ok(match &cli.command {
        Command::FieldInfo(a) => ("field-info", to_value(a), field_info(a)?),
        Command::PlanarTest(a) => ("planar-test", to_value(a), planar_test(a)?),
        Command::Scan(a) => ("scan", to_value(a), scan(a, cli.format)?),
        Command::BuildH(a) => ("build-h", to_value(a), build_h_cmd(a)?),
        Command::Capelli(a) => ("capelli", to_value(a), capelli(a)?),
        Command::Census(a) => ("census", to_value(a), census(a)?),
        Command::CountPoints(a) => ("count-points", to_value(a), count_points(a)?),
        Command::WeilCheck(a) => ("weil-check", to_value(a), weil_check(a)?),
        Command::ChainCheck(a) => ("chain-check", to_value(a), chain_check(a)?),
        Command::Threshold(a) => ("threshold", to_value(a), threshold(a)?),
        Command::Counterexamples(a) => ("counterexamples", to_value(a), counterexamples(a)?),
        Command::RdsVerify(a) => ("rds-verify", to_value(a), rds_verify(a)?),
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Capacity(_) => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let start = Instant::now();
    let outcome = match cli.workers {
        Some(0) => Err(Error::Parse("--workers must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Parse(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli),
    };
    let (command, config, outcome) = match outcome {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "planarlab: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &outcome.csv {
        Some(csv) => out.write_all(csv.as_bytes()),
        None => {
            let doc = Envelope {
                command,
                config,
                field: outcome.field.as_ref(),
                result: outcome.result,
                duration_ms: (!cli.no_timing).then(|| start.elapsed().as_millis() as u64),
            }
            .to_value();
            writeln!(out, "{doc}")
        }
    };
    if let Err(e) = written {
        let _ = writeln!(err, "planarlab: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if outcome.consistent {
        EXIT_OK
    } else {
        let _ = writeln!(err, "planarlab: a checked claim does not hold; see the report");
        EXIT_INCONSISTENT
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
