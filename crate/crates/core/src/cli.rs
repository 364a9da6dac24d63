//! Command-line front end. Exit codes: 0 success or HOLDS, 2 a well-formed
//! negative answer (FAILS, no witness), 1 usage or computation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactmath::{Field, PrimeField, Rationals};
use crate::family::{
    candidate_binomials, family_config, parse_family, rank_bounds, reconstruct_witness,
    FamilyParams, WitnessResult,
};
use crate::groebner::{FieldDescriptor, GroebnerOptions, IdealFile};
use crate::polyring::{parse_poly, MonomialOrder, PolyRing, Polynomial};
use crate::toric::{solution_set, toric_ideal, PointConfiguration, DEFAULT_ENUMERATION_CAP};
use crate::verify::{finite_field_crosscheck, verify_cutout, CrossCheckReport, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "toric-stci",
    version,
    about = "Toric ideals and set-theoretic cut-out certificates"
)]
struct Cli {
    /// Maximum number of S-pairs per Gröbner computation (overrides TORIC_STCI_STEP_LIMIT).
    #[arg(long, global = true, value_name = "N")]
    step_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis of the toric ideal.
    ToricIdeal {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Decide whether the candidates cut out the variety.
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        candidates: CandidateArgs,
        #[command(flatten)]
        ring: RingArgs,
        /// Primes for advisory finite-field cross-checks.
        #[arg(long = "q", value_name = "P", value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// List the F_p-points of the variety, or of the candidates if given.
    Points {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        candidates: CandidateArgs,
        #[arg(long = "q", value_name = "P")]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Find a parameter vector mapping onto an F_p-point of the family.
    Witness {
        #[arg(long, value_name = "n=..,d=..,a=..")]
        family: String,
        #[arg(long)]
        no_strict: bool,
        #[arg(long = "q", value_name = "P")]
        prime: u64,
        /// Comma-separated coordinates (x1..xn, y1..y{n-1}).
        #[arg(
            long,
            value_name = "C,C,..",
            value_delimiter = ',',
            allow_negative_numbers = true
        )]
        point: Vec<i64>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Report arithmetical-rank bounds for the family.
    Bounds {
        #[arg(long, value_name = "n=..,d=..,a=..")]
        family: String,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// Family parameters, e.g. n=3,d=6,a=1,1.
    #[arg(long, value_name = "n=..,d=..,a=..", conflicts_with = "config")]
    family: Option<String>,
    /// Point configuration JSON file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Accept d without two distinct prime divisors.
    #[arg(long)]
    no_strict: bool,
}

#[derive(Debug, Args)]
struct CandidateArgs {
    /// One polynomial per line; blank lines and lines starting with # are skipped.
    #[arg(long, value_name = "FILE", conflicts_with = "candidates_builtin")]
    candidates: Option<PathBuf>,
    /// The family's known binomials (n = 2 or 3).
    #[arg(long)]
    candidates_builtin: bool,
}

#[derive(Debug, Args)]
struct RingArgs {
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    field: FieldDescriptor,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

fn parse_field(s: &str) -> std::result::Result<FieldDescriptor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Input {
    Family(FamilyParams),
    Config(PointConfiguration),
}

impl Input {
    fn config(&self) -> PointConfiguration {
        match self {
            Input::Family(p) => family_config(p),
            Input::Config(c) => c.clone(),
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("plain data");
    std::fs::write(path, text + "\n")
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load_family(text: &str, strict: bool) -> Result<FamilyParams> {
    let p = parse_family(text, strict)?;
    if let Some(w) = p.warning() {
        eprintln!("warning: {w}");
    }
    Ok(p)
}

fn load_source(source: &Source) -> Result<Input> {
    match (&source.family, &source.config) {
        (Some(text), None) => Ok(Input::Family(load_family(text, !source.no_strict)?)),
        (None, Some(path)) => Ok(Input::Config(PointConfiguration::from_json(&read_file(
            path,
        )?)?)),
        _ => Err(Error::Malformed(
            "give exactly one of --family or --config".into(),
        )),
    }
}

/// Candidate binomials in `ring`; `None` when no source was given and none is
/// implied (configurations without built-in candidates).
fn load_candidates<F: Field>(
    args: &CandidateArgs,
    input: &Input,
    ring: &std::sync::Arc<PolyRing<F>>,
    default_builtin: bool,
) -> Result<Option<Vec<Polynomial<F>>>> {
    if let Some(path) = &args.candidates {
        let text = read_file(path)?;
        let polys = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_poly(l, ring))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Some(polys));
    }
    if args.candidates_builtin || default_builtin {
        return match input {
            Input::Family(p) => candidate_binomials(p, ring).map(Some),
            Input::Config(_) => Err(Error::NotProvided(
                "built-in candidates exist only for --family inputs".into(),
            )),
        };
    }
    Ok(None)
}

struct Context {
    opts: GroebnerOptions,
}

fn cmd_toric_ideal<F: Field>(
    ctx: &Context,
    input: &Input,
    field: F,
    order: MonomialOrder,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let gb = toric_ideal(&input.config(), field, order, &ctx.opts)?;
    for g in gb.elements() {
        writeln!(out, "{g}").ok();
    }
    if let Some(path) = json {
        write_json(path, &IdealFile::from_generators(gb.ring(), gb.elements()))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    verdict: &'a Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    crosschecks: Vec<CrossCheckReport>,
}

fn format_point(pt: &[u64]) -> String {
    let parts: Vec<String> = pt.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify<F: Field>(
    ctx: &Context,
    input: &Input,
    candidates: &CandidateArgs,
    field: F,
    order: MonomialOrder,
    primes: &[u64],
    cap: u64,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let config = input.config();
    let primes = primes
        .iter()
        .map(|&p| PrimeField::new(p))
        .collect::<Result<Vec<_>>>()?;
    let ring = config.ambient_ring(field.clone(), order.clone())?;
    let cands = load_candidates(candidates, input, &ring, true)?.expect("default is builtin");
    let verdict = verify_cutout(&config, &cands, field, order, &ctx.opts)?;

    writeln!(out, "{}", if verdict.holds { "HOLDS" } else { "FAILS" }).ok();
    writeln!(out, "field: {}", verdict.field).ok();
    for f in &verdict.forward_failures {
        writeln!(
            out,
            "forward failure [{}]: {} has normal form {}",
            f.index, f.candidate, f.normal_form
        )
        .ok();
    }
    for f in &verdict.reverse_failures {
        writeln!(
            out,
            "reverse failure [{}]: {} ({})",
            f.index, f.generator, f.note
        )
        .ok();
    }

    let mut crosschecks = Vec::new();
    for p in &primes {
        let report = finite_field_crosscheck(&config, &cands, p, cap, &ctx.opts)?;
        writeln!(
            out,
            "crosscheck F_{}: candidates {} points, variety {} points, {}",
            report.p,
            report.candidate_count,
            report.variety_count,
            if report.equal { "equal" } else { "different" }
        )
        .ok();
        for pt in &report.separating {
            writeln!(out, "  separating point {}", format_point(pt)).ok();
        }
        crosschecks.push(report);
    }
    if let Some(path) = json {
        write_json(
            path,
            &VerifyOutput {
                verdict: &verdict,
                crosschecks,
            },
        )?;
    }
    Ok(if verdict.holds {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_points(
    ctx: &Context,
    input: &Input,
    candidates: &CandidateArgs,
    prime: u64,
    cap: u64,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let p = PrimeField::new(prime)?;
    let config = input.config();
    let ring = config.ambient_ring(p, MonomialOrder::Grevlex)?;
    let gens = match load_candidates(candidates, input, &ring, false)? {
        Some(c) => c,
        None => toric_ideal(&config, p, MonomialOrder::Grevlex, &ctx.opts)?
            .elements()
            .to_vec(),
    };
    let set = solution_set(&ring, &gens, &p, cap)?;
    writeln!(
        out,
        "# {} points over F_{} in dimension {}",
        set.len(),
        prime,
        set.dimension
    )
    .ok();
    write!(out, "{}", set.report()).ok();
    if let Some(path) = json {
        write_json(path, &set)?;
    }
    Ok(EXIT_OK)
}

fn cmd_witness(
    family: &FamilyParams,
    prime: u64,
    point: &[i64],
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let p = PrimeField::new(prime)?;
    let w: Vec<_> = point.iter().map(|&c| p.element_i64(c)).collect();
    let result = reconstruct_witness(family, &p, &w)?;
    let residues: Vec<u64> = w.iter().map(|c| c.residue()).collect();
    let (value, code) = match &result {
        WitnessResult::Witness(u) => {
            let u: Vec<u64> = u.iter().map(|c| c.residue()).collect();
            writeln!(out, "witness u = {}", format_point(&u)).ok();
            (
                json!({"p": prime, "point": residues, "witness": u}),
                EXIT_OK,
            )
        }
        WitnessResult::Absent(reason) => {
            writeln!(out, "no witness: {reason}").ok();
            (
                json!({"p": prime, "point": residues, "absent": reason}),
                EXIT_NEGATIVE,
            )
        }
    };
    if let Some(path) = json {
        write_json(path, &value)?;
    }
    Ok(code)
}

fn cmd_bounds(family: &FamilyParams, json: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let b = rank_bounds(family)?;
    writeln!(out, "N={}", b.ambient_dimension).ok();
    writeln!(out, "codim={}", b.codim).ok();
    writeln!(out, "lower={} (etale-cohomological bound)", b.lower).ok();
    writeln!(out, "upper={} (Eisenbud-Evans)", b.upper).ok();
    match b.ara_known {
        Some(ara) => writeln!(out, "ara={ara}").ok(),
        None => writeln!(out, "ara=unknown").ok(),
    };
    if let Some(path) = json {
        write_json(path, &b)?;
    }
    Ok(EXIT_OK)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let opts = match cli.step_limit {
        Some(step_limit) => GroebnerOptions { step_limit },
        None => GroebnerOptions::from_env()?,
    };
    let ctx = Context { opts };
    match cli.command {
        Command::ToricIdeal { source, ring, json } => {
            let input = load_source(&source)?;
            let order = ring.order.into();
            match ring.field {
                FieldDescriptor::Rationals => {
                    cmd_toric_ideal(&ctx, &input, Rationals, order, json.as_deref(), out)
                }
                FieldDescriptor::Prime(p) => {
                    cmd_toric_ideal(&ctx, &input, p, order, json.as_deref(), out)
                }
            }
        }
        Command::Verify {
            source,
            candidates,
            ring,
            primes,
            cap,
            json,
        } => {
            let input = load_source(&source)?;
            let order = ring.order.into();
            let json = json.as_deref();
            match ring.field {
                FieldDescriptor::Rationals => cmd_verify(
                    &ctx,
                    &input,
                    &candidates,
                    Rationals,
                    order,
                    &primes,
                    cap,
                    json,
                    out,
                ),
                FieldDescriptor::Prime(p) => {
                    cmd_verify(&ctx, &input, &candidates, p, order, &primes, cap, json, out)
                }
            }
        }
        Command::Points {
            source,
            candidates,
            prime,
            cap,
            json,
        } => {
            let input = load_source(&source)?;
            cmd_points(&ctx, &input, &candidates, prime, cap, json.as_deref(), out)
        }
        Command::Witness {
            family,
            no_strict,
            prime,
            point,
            json,
        } => {
            let family = load_family(&family, !no_strict)?;
            cmd_witness(&family, prime, &point, json.as_deref(), out)
        }
        Command::Bounds { family, json } => {
            let family = load_family(&family, true)?;
            cmd_bounds(&family, json.as_deref(), out)
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to stderr.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            e.print().ok();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = run_with(argv, &mut lock);
    lock.flush().ok();
    code
}
