//! Command-line front end. `run_with` is the whole program minus process
//! plumbing, so tests drive it with in-memory writers.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::honeycomb::{self, Honeycomb};
use crate::multiplicity::{self, DecompositionTable};
use crate::weights::Weight;
use crate::{conjmap, oracle, pictographs, polygon};

#[derive(Parser, Debug)]
#[command(name = "liecomb", version, about = "Exact SU(3) tensor product combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicity table of λ ⊗ μ.
    Decompose(DecomposeArgs),
    /// Number of constituents of each multiplicity.
    Census(PairArgs),
    /// Tensor polygon and its multiplicity layers.
    Polygon(PolygonArgs),
    /// KT-honeycombs (or hives) of λ ⊗ μ → ν.
    Honeycomb(HoneycombArgs),
    /// BZ-triangles, O-blades or SU(3)-honeycombs of λ ⊗ μ → ν.
    Pictograph(PictographArgs),
    /// The piecewise-linear map from λ ⊗ μ to λ ⊗ μ̄.
    Map(MapArgs),
    /// Brute-force SU(N) decomposition, N ≤ 4.
    Oracle(OracleArgs),
    /// Check the conjugation theorems for one pair or a whole range.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DrawFormat {
    Text,
    Json,
    Svg,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Only list constituents of this multiplicity.
    #[arg(long)]
    mult: Option<u64>,
}

#[derive(Args, Debug)]
struct PolygonArgs {
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    /// Use μ̄ in place of μ.
    #[arg(long)]
    conjugate_mu: bool,
    /// Include every multiplicity layer, not just the outer polygon.
    #[arg(long)]
    layers: bool,
    /// Draw weights on a hexagonal lattice instead of orthogonal axes.
    #[arg(long)]
    root_axes: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: DrawFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HoneycombArgs {
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    #[arg(long, value_parser = parse_labels)]
    nu: Labels,
    /// A single hexagon parameter; all admissible values otherwise.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    /// Print hives instead of honeycombs.
    #[arg(long)]
    hive: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Bz,
    Oblade,
    Su3honey,
}

impl From<KindArg> for pictographs::Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Bz => pictographs::Kind::BzTriangle,
            KindArg::Oblade => pictographs::Kind::Oblade,
            KindArg::Su3honey => pictographs::Kind::Su3Honeycomb,
        }
    }
}

#[derive(Args, Debug)]
struct PictographArgs {
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    #[arg(long, value_parser = parse_labels)]
    nu: Labels,
    #[arg(long, value_enum, default_value = "bz")]
    kind: KindArg,
    /// Only the pictograph at this position of the fiber (0-based).
    #[arg(long)]
    index: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: DrawFormat,
    /// SVG target; with several pictographs, files get a `-k` suffix.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    /// Map a single point `ν₁,ν₂,α`.
    #[arg(long, value_parser = parse_labels)]
    point: Option<Labels>,
    /// List the image of every point.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=4))]
    rank: u8,
    #[arg(long, value_parser = parse_labels)]
    lambda: Labels,
    #[arg(long, value_parser = parse_labels)]
    mu: Labels,
    /// SU(3): diff against the closed form. SU(4): compare with λ ⊗ μ̄.
    #[arg(long)]
    compare: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Equal totals and sums of squares.
    Theorem1,
    /// Equal sorted multiplicity lists.
    Theorem2,
    /// The conjugation map is a bijection (SU(3) only).
    Bijection,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
    rank: u8,
    /// Shorthand for `--mode theorem1` / `--mode theorem2`.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), conflicts_with = "mode")]
    theorem: Option<u8>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, value_parser = parse_labels, requires = "mu")]
    lambda: Option<Labels>,
    #[arg(long, value_parser = parse_labels, requires = "lambda")]
    mu: Option<Labels>,
    /// Sweep every pair with all Dynkin labels up to this value.
    #[arg(long, conflicts_with = "lambda")]
    max_label: Option<u32>,
    /// Sweep every pair whose levels are at most this value.
    #[arg(long, conflicts_with_all = ["lambda", "max_label"])]
    max_level: Option<u32>,
    /// With --max-level: sample this many pairs instead of sweeping.
    #[arg(long, requires = "max_level")]
    samples: Option<u64>,
    /// With --samples: only pairs where some level reaches this value.
    #[arg(long, requires = "samples", default_value_t = 0)]
    min_level: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

type Labels = Vec<u32>;

fn parse_labels(s: &str) -> Result<Labels, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{s}` is not a comma-separated list of non-negative integers"))
        })
        .collect()
}

enum CliError {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

fn weight(labels: &[u32], rank: usize, flag: &str) -> CliResult<Weight> {
    if labels.len() + 1 != rank {
        return Err(CliError::Usage(format!(
            "--{flag} needs {} labels for SU({rank}), got {}",
            rank - 1,
            labels.len()
        )));
    }
    let v: Vec<i64> = labels.iter().map(|&x| i64::from(x)).collect();
    Ok(Weight::new(&v)?)
}

fn su3(labels: &[u32], flag: &str) -> CliResult<Weight> {
    weight(labels, 3, flag)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Rank { .. } => "rank",
        Error::UnsupportedRank { .. } => "unsupported_rank",
        Error::NegativeLabel(_) => "negative_label",
        Error::NotDecreasing(_) => "not_decreasing",
        Error::NotInProduct { .. } => "not_in_product",
        Error::InequalityViolation { .. } => "inequality_violation",
        Error::AlphaOutOfRange { .. } => "alpha_out_of_range",
        Error::InvalidPictograph(_) => "invalid_pictograph",
        Error::StepOutOfFiber { .. } => "step_out_of_fiber",
        Error::MapInvariant(_) => "map_invariant",
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Caps the rayon pool from `LIECOMB_THREADS`, once per process.
fn configure_threads() {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        if let Some(n) = std::env::var("LIECOMB_THREADS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
        {
            // Fails only if a pool already exists, which is harmless.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    });
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code: 0 on success, 1 on domain errors or failed
/// verification, 2 on usage errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    configure_threads();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let json = wants_json(&cli.command);
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let (code, kind, message) = match e {
                CliError::Usage(m) => (2, "usage", m),
                CliError::Domain(e) => (1, error_kind(&e), e.to_string()),
                CliError::Io(e) => (1, "io", e.to_string()),
            };
            let _ = if json {
                json_line(err, &json!({ "error": kind, "message": message }))
            } else {
                writeln!(err, "error: {message}")
            };
            code
        }
    }
}

/// Convenience wrapper over the real process streams.
pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run_with(std::env::args_os(), &mut out, &mut stderr.lock());
    let _ = out.flush();
    code
}

fn wants_json(c: &Command) -> bool {
    match c {
        Command::Decompose(a) => a.pair.format == Format::Json,
        Command::Census(a) => a.format == Format::Json,
        Command::Polygon(a) => a.format == DrawFormat::Json,
        Command::Honeycomb(a) => a.format == Format::Json,
        Command::Pictograph(a) => a.format == DrawFormat::Json,
        Command::Map(a) => a.format == Format::Json,
        Command::Oracle(a) => a.format == Format::Json,
        Command::Verify(a) => a.format == Format::Json,
    }
}

/// `Ok(false)` means the command ran but a check failed.
fn dispatch(c: Command, out: &mut dyn Write) -> CliResult<bool> {
    match c {
        Command::Decompose(a) => decompose(a, out).map(|_| true),
        Command::Census(a) => census(a, out).map(|_| true),
        Command::Polygon(a) => polygon_cmd(a, out).map(|_| true),
        Command::Honeycomb(a) => honeycomb_cmd(a, out).map(|_| true),
        Command::Pictograph(a) => pictograph_cmd(a, out).map(|_| true),
        Command::Map(a) => map_cmd(a, out),
        Command::Oracle(a) => oracle_cmd(a, out),
        Command::Verify(a) => verify_cmd(a, out),
    }
}

fn table_text(t: &DecompositionTable, only: Option<u64>) -> String {
    let mut s = format!("{} x {}\n", t.lambda, t.mu);
    for e in t.entries.iter().filter(|e| only.is_none_or(|m| e.mult == m)) {
        let _ = writeln!(s, "{:<12} {}", e.nu.to_string(), e.mult);
    }
    let _ = writeln!(s, "constituents {}  total {}", t.entries.len(), t.total());
    s
}

fn decompose(a: DecomposeArgs, out: &mut dyn Write) -> CliResult {
    let (l, m) = (su3(&a.pair.lambda, "lambda")?, su3(&a.pair.mu, "mu")?);
    let mut t = multiplicity::decompose(&l, &m);
    if let Some(k) = a.mult {
        t.entries.retain(|e| e.mult == k);
    }
    match a.pair.format {
        Format::Json => json_line(out, &t)?,
        Format::Text => write!(out, "{}", table_text(&t, None))?,
    }
    Ok(())
}

fn census(a: PairArgs, out: &mut dyn Write) -> CliResult {
    let (l, m) = (su3(&a.lambda, "lambda")?, su3(&a.mu, "mu")?);
    let c = multiplicity::census(&l, &m);
    match a.format {
        Format::Json => json_line(out, &c)?,
        Format::Text => {
            writeln!(out, "{l} x {m}")?;
            for (s, n) in &c.by_mult {
                writeln!(out, "sigma({s}) = {n}")?;
            }
            writeln!(out, "distinct {}  max {}  total {}", c.distinct, c.mult_max, c.total)?;
        }
    }
    Ok(())
}

fn require_output(format: DrawFormat, output: &Option<PathBuf>) -> CliResult<Option<PathBuf>> {
    match (format, output) {
        (DrawFormat::Svg, None) => Err(CliError::Usage("--format svg requires --output".into())),
        (DrawFormat::Svg, Some(p)) => Ok(Some(p.clone())),
        (_, Some(_)) => Err(CliError::Usage("--output is only used with --format svg".into())),
        _ => Ok(None),
    }
}

fn polygon_cmd(a: PolygonArgs, out: &mut dyn Write) -> CliResult {
    let output = require_output(a.format, &a.output)?;
    let l = su3(&a.lambda, "lambda")?;
    let mut m = su3(&a.mu, "mu")?;
    if a.conjugate_mu {
        m = m.conjugate();
    }
    let mut diagram = polygon::layers(&l, &m);
    if !a.layers {
        diagram.layers.truncate(1);
    }
    match a.format {
        DrawFormat::Json => json_line(out, &diagram)?,
        DrawFormat::Text => write!(out, "{}", polygon::render_text(&diagram))?,
        DrawFormat::Svg => {
            let table = multiplicity::decompose(&l, &m);
            let opts = polygon::SvgOptions {
                axes: if a.root_axes {
                    polygon::Axes::Root
                } else {
                    polygon::Axes::Orthogonal
                },
                all_layers: a.layers,
                ..Default::default()
            };
            let svg = polygon::render_svg(&[(&diagram, &table)], &opts);
            write_file(&output.expect("checked above"), &svg, out)?;
        }
    }
    Ok(())
}

fn write_file(path: &Path, content: &str, out: &mut dyn Write) -> CliResult {
    std::fs::write(path, content)?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

fn honeycomb_cmd(a: HoneycombArgs, out: &mut dyn Write) -> CliResult {
    let (l, m, n) = (su3(&a.lambda, "lambda")?, su3(&a.mu, "mu")?, su3(&a.nu, "nu")?);
    let combs: Vec<Honeycomb> = match a.alpha {
        Some(alpha) => vec![honeycomb::build(&l, &m, &n, alpha)?],
        None => honeycomb::all_honeycombs(&l, &m, &n)?,
    };
    match (a.format, a.hive) {
        (Format::Json, false) => json_line(out, &combs)?,
        (Format::Json, true) => json_line(out, &combs.iter().map(Honeycomb::to_hive).collect::<Vec<_>>())?,
        (Format::Text, hive) => {
            writeln!(out, "{l} x {m} -> {n}: {} honeycomb(s)", combs.len())?;
            for h in &combs {
                writeln!(out)?;
                let s = if hive {
                    h.to_hive().render_text()
                } else {
                    h.render_text()
                };
                write!(out, "{s}")?;
            }
        }
    }
    Ok(())
}

fn pictograph_cmd(a: PictographArgs, out: &mut dyn Write) -> CliResult {
    let output = require_output(a.format, &a.output)?;
    let (l, m, n) = (su3(&a.lambda, "lambda")?, su3(&a.mu, "mu")?, su3(&a.nu, "nu")?);
    crate::weights::nu3(&l, &m, &n)?;
    let mut all = pictographs::enumerate(&l, &m, &n, a.kind.into());
    if let Some(i) = a.index {
        if i >= all.len() {
            return Err(CliError::Usage(format!(
                "--index {i} but the fiber has {} pictograph(s)",
                all.len()
            )));
        }
        all = vec![all[i]];
    }
    match a.format {
        DrawFormat::Json => {
            let rows: Vec<_> = all
                .iter()
                .map(|p| {
                    json!({
                        "kind": p.kind,
                        "labels": p.labels,
                        "components": pictographs::to_components(p),
                        "alpha": pictographs::alpha_of(p),
                    })
                })
                .collect();
            json_line(out, &json!({ "lambda": l, "mu": m, "nu": n, "pictographs": rows }))?;
        }
        DrawFormat::Text => {
            writeln!(out, "{} pictograph(s)", all.len())?;
            for p in &all {
                writeln!(out)?;
                write!(out, "{}", pictographs::render_text(p))?;
            }
        }
        DrawFormat::Svg => {
            let path = output.expect("checked above");
            if all.len() == 1 {
                write_file(&path, &pictographs::render_svg(&all[0]), out)?;
            } else {
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("pictograph");
                let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("svg");
                for (k, p) in all.iter().enumerate() {
                    let file = path.with_file_name(format!("{stem}-{k}.{ext}"));
                    write_file(&file, &pictographs::render_svg(p), out)?;
                }
            }
        }
    }
    Ok(())
}

fn map_cmd(a: MapArgs, out: &mut dyn Write) -> CliResult<bool> {
    let (l, m) = (su3(&a.lambda, "lambda")?, su3(&a.mu, "mu")?);
    if let Some(p) = a.point {
        let [n1, n2, alpha] = p[..] else {
            return Err(CliError::Usage("--point expects nu1,nu2,alpha".into()));
        };
        let nu = Weight::su3(n1, n2);
        let mp = conjmap::map_point(&l, &m, &nu, i64::from(alpha))?;
        match a.format {
            Format::Json => json_line(out, &mp)?,
            Format::Text => writeln!(
                out,
                "{} alpha={} m={} -> {} alpha={} m={} ({:?}, case {}, {:?})",
                mp.nu,
                mp.alpha,
                mp.m,
                mp.nu_image,
                mp.alpha_image,
                mp.m_image,
                mp.regime,
                mp.case.number(),
                mp.normalization
            )?,
        }
        return Ok(true);
    }
    let report = conjmap::verify_bijection(&l, &m);
    let points = if a.all { Some(all_points(&l, &m)?) } else { None };
    match a.format {
        Format::Json => match &points {
            Some(p) => json_line(out, &json!({ "report": report, "points": p }))?,
            None => json_line(out, &report)?,
        },
        Format::Text => {
            if let Some(p) = &points {
                for mp in p {
                    writeln!(
                        out,
                        "{} m={} -> {} m={} {:?}",
                        mp.nu, mp.m, mp.nu_image, mp.m_image, mp.regime
                    )?;
                }
            }
            writeln!(
                out,
                "{l} x {m}: case {} via {:?}, {} points ({} reflected, {} translated)",
                report.case.number(),
                report.normalization,
                report.points,
                report.reflections,
                report.translations
            )?;
            writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })?;
            if let Some(f) = &report.failure {
                writeln!(out, "failure: {f}")?;
            }
        }
    }
    Ok(report.passed())
}

fn all_points(l: &Weight, m: &Weight) -> CliResult<Vec<conjmap::MappedPoint>> {
    let mut v = Vec::new();
    for e in &multiplicity::decompose(l, m).entries {
        for alpha in honeycomb::alpha_bounds(l, m, &e.nu).iter() {
            v.push(conjmap::map_point(l, m, &e.nu, alpha)?);
        }
    }
    Ok(v)
}

fn oracle_cmd(a: OracleArgs, out: &mut dyn Write) -> CliResult<bool> {
    let rank = usize::from(a.rank);
    let (l, m) = (weight(&a.lambda, rank, "lambda")?, weight(&a.mu, rank, "mu")?);
    let table = oracle::decompose_table(&l, &m)?;
    if !a.compare {
        match a.format {
            Format::Json => json_line(out, &table)?,
            Format::Text => write!(out, "{}", table_text(&table, None))?,
        }
        return Ok(true);
    }
    if rank == 3 {
        let closed = multiplicity::decompose(&l, &m);
        let mut nus: Vec<Weight> = table.entries.iter().chain(&closed.entries).map(|e| e.nu).collect();
        nus.sort();
        nus.dedup();
        let diff: Vec<_> = nus
            .iter()
            .filter(|n| table.get(n) != closed.get(n))
            .map(|n| json!({ "nu": n, "oracle": table.get(n), "closed_form": closed.get(n) }))
            .collect();
        let ok = diff.is_empty();
        match a.format {
            Format::Json => json_line(out, &json!({ "table": table, "diff": diff, "agree": ok }))?,
            Format::Text => {
                write!(out, "{}", table_text(&table, None))?;
                writeln!(out, "{} disagreement(s) with the closed form", diff.len())?;
            }
        }
        Ok(ok)
    } else {
        let r = oracle::compare_conjugate(&l, &m)?;
        match a.format {
            Format::Json => json_line(out, &json!({ "table": table, "conjugate": r }))?,
            Format::Text => {
                write!(out, "{}", table_text(&table, None))?;
                writeln!(
                    out,
                    "with conjugate: totals {}/{}, squares {}/{}, max {}/{}, lists {}",
                    r.total,
                    r.total_conj,
                    r.squares,
                    r.squares_conj,
                    r.max_mult,
                    r.max_mult_conj,
                    if r.multisets_equal { "equal" } else { "differ" }
                )?;
            }
        }
        Ok(true)
    }
}

/// A pair that fails a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lambda: Weight,
    pub mu: Weight,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub rank: usize,
    pub mode: Mode,
    pub pairs: u64,
    pub failures: u64,
    /// Failing pairs in lexicographic order, at most [`MAX_LISTED`].
    pub counterexamples: Vec<Counterexample>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub const MAX_LISTED: usize = 64;

fn check_su3(l: &Weight, m: &Weight, mode: Mode) -> Option<String> {
    match mode {
        Mode::Theorem1 => {
            let r = multiplicity::verify_theorem1(l, m);
            (!r.equal).then(|| {
                format!(
                    "totals {}/{}, squares {}/{}",
                    r.total, r.total_conj, r.squares, r.squares_conj
                )
            })
        }
        Mode::Theorem2 => {
            let r = multiplicity::verify_theorem2(l, m);
            (!r.equal).then(|| format!("{:?} vs {:?}", r.multiset, r.multiset_conj))
        }
        Mode::Bijection => {
            let r = conjmap::verify_bijection(l, m);
            (!r.passed()).then(|| r.failure.unwrap_or_else(|| "bijection check failed".into()))
        }
    }
}

fn check_oracle(l: &Weight, m: &Weight, mode: Mode) -> Option<String> {
    let r = match oracle::compare_conjugate(l, m) {
        Ok(r) => r,
        Err(e) => return Some(e.to_string()),
    };
    let bad = match mode {
        Mode::Theorem1 => !r.totals_equal(),
        _ => !r.multisets_equal,
    };
    bad.then(|| {
        format!(
            "max multiplicity {} vs {}, totals {}/{}",
            r.max_mult, r.max_mult_conj, r.total, r.total_conj
        )
    })
}

fn summarize(rank: usize, mode: Mode, pairs: &[(Weight, Weight)]) -> SweepSummary {
    let check = |(l, m): &(Weight, Weight)| {
        let d = if rank == 3 {
            check_su3(l, m, mode)
        } else {
            check_oracle(l, m, mode)
        };
        d.map(|detail| Counterexample {
            lambda: *l,
            mu: *m,
            detail,
        })
    };
    let mut bad: Vec<Counterexample> = pairs.par_iter().filter_map(check).collect();
    bad.sort_by_key(|c| (c.lambda, c.mu));
    let failures = bad.len() as u64;
    bad.truncate(MAX_LISTED);
    SweepSummary {
        rank,
        mode,
        pairs: pairs.len() as u64,
        failures,
        counterexamples: bad,
    }
}

/// Exhaustive check over all SU(3) pairs with every label at most
/// `max_label`.
pub fn verify_sweep(max_label: u32, mode: Mode) -> SweepSummary {
    let ws: Vec<Weight> = (0..=max_label)
        .flat_map(|a| (0..=max_label).map(move |b| Weight::su3(a, b)))
        .collect();
    let pairs: Vec<(Weight, Weight)> = ws.iter().flat_map(|l| ws.iter().map(move |m| (*l, *m))).collect();
    summarize(3, mode, &pairs)
}

fn weights_up_to(rank: usize, max_level: u32) -> Vec<Weight> {
    (0..=max_level)
        .flat_map(|k| oracle::weights_of_level(rank, k))
        .collect()
}

/// Oracle sweep over all pairs of SU(`rank`) weights with levels at most
/// `max_level`.
pub fn verify_sweep_levels(rank: usize, max_level: u32, mode: Mode) -> SweepSummary {
    let ws = weights_up_to(rank, max_level);
    let pairs: Vec<(Weight, Weight)> = ws.iter().flat_map(|l| ws.iter().map(move |m| (*l, *m))).collect();
    summarize(rank, mode, &pairs)
}

/// Seeded sample of `samples` pairs with levels at most `max_level`, at
/// least one of them reaching `min_level`.
pub fn verify_sample_levels(
    rank: usize,
    min_level: u32,
    max_level: u32,
    samples: u64,
    seed: u64,
    mode: Mode,
) -> SweepSummary {
    let ws = weights_up_to(rank, max_level);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(samples as usize);
    if ws.iter().any(|w| w.level() >= u64::from(min_level)) {
        while (pairs.len() as u64) < samples {
            let l = ws[rng.gen_range(0..ws.len())];
            let m = ws[rng.gen_range(0..ws.len())];
            if l.level().max(m.level()) >= u64::from(min_level) {
                pairs.push((l, m));
            }
        }
    }
    summarize(rank, mode, &pairs)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> CliResult<bool> {
    let rank = usize::from(a.rank);
    let mode = match (a.mode, a.theorem) {
        (Some(m), _) => m,
        (None, Some(1)) => Mode::Theorem1,
        _ => Mode::Theorem2,
    };
    if rank == 4 && mode == Mode::Bijection {
        return Err(CliError::Usage("the bijection mode is only defined for SU(3)".into()));
    }
    if let (Some(l), Some(m)) = (&a.lambda, &a.mu) {
        let (l, m) = (weight(l, rank, "lambda")?, weight(m, rank, "mu")?);
        return verify_pair(&l, &m, mode, a.format, out);
    }
    let summary = match (a.max_label, a.max_level, a.samples) {
        (Some(k), _, _) if rank == 3 => verify_sweep(k, mode),
        (Some(_), _, _) => {
            return Err(CliError::Usage(
                "--max-label sweeps SU(3); use --max-level for SU(4)".into(),
            ))
        }
        (None, Some(k), None) => verify_sweep_levels(rank, k, mode),
        (None, Some(k), Some(n)) => verify_sample_levels(rank, a.min_level, k, n, a.seed, mode),
        (None, None, _) => return Err(CliError::Usage("give --lambda/--mu, --max-label or --max-level".into())),
    };
    match a.format {
        Format::Json => json_line(out, &summary)?,
        Format::Text => {
            writeln!(
                out,
                "SU({}) {:?}: {} pair(s), {} failure(s)",
                summary.rank, summary.mode, summary.pairs, summary.failures
            )?;
            for c in &summary.counterexamples {
                writeln!(out, "counterexample {} x {}: {}", c.lambda, c.mu, c.detail)?;
            }
            writeln!(out, "{}", if summary.passed() { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(summary.passed())
}

fn verify_pair(l: &Weight, m: &Weight, mode: Mode, format: Format, out: &mut dyn Write) -> CliResult<bool> {
    if l.rank() == 4 {
        let r = oracle::compare_conjugate(l, m)?;
        let ok = if mode == Mode::Theorem1 {
            r.totals_equal()
        } else {
            r.multisets_equal
        };
        match format {
            Format::Json => json_line(out, &json!({ "mode": mode, "report": r, "passed": ok }))?,
            Format::Text => {
                writeln!(out, "{l} x {m} vs {l} x {}", m.conjugate())?;
                writeln!(
                    out,
                    "totals {} / {}, squares {} / {}",
                    r.total, r.total_conj, r.squares, r.squares_conj
                )?;
                writeln!(out, "max multiplicity {} / {}", r.max_mult, r.max_mult_conj)?;
                writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
            }
        }
        return Ok(ok);
    }
    let (ok, report) = match mode {
        Mode::Theorem1 => {
            let r = multiplicity::verify_theorem1(l, m);
            (r.equal, serde_json::to_value(&r).expect("serializable"))
        }
        Mode::Theorem2 => {
            let r = multiplicity::verify_theorem2(l, m);
            (r.equal, serde_json::to_value(&r).expect("serializable"))
        }
        Mode::Bijection => {
            let r = conjmap::verify_bijection(l, m);
            (r.passed(), serde_json::to_value(&r).expect("serializable"))
        }
    };
    match format {
        Format::Json => json_line(out, &json!({ "mode": mode, "report": report, "passed": ok }))?,
        Format::Text => {
            writeln!(out, "{l} x {m} vs {l} x {}", m.conjugate())?;
            if let serde_json::Value::Object(map) = &report {
                for (k, v) in map {
                    writeln!(out, "{k}: {v}")?;
                }
            }
            writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(ok)
}
