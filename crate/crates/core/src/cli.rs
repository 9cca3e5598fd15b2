//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit status with the text meant
//! for standard output and standard error, so the binary stays a thin shell
//! and the commands can be tested in-process.
//!
//! Exit status: 0 on success, 1 on infeasible input or a failed
//! verification, 2 on numeric non-convergence, 64 on usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::area::{cyclic_area, FactorPair};
use crate::construction::circumradius_from_sides;
use crate::error::Error;
use crate::fan::{fan_decompose, TriangleSplit};
use crate::json;
use crate::spec::PolygonSpec;
use crate::verify::{fuzz, verify_polygon, FuzzConfig, Identity, Tolerances, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-area",
    version,
    about = "Area of convex cyclic polygons from incircle tangent lengths"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Path to a polygon spec JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Inline polygon spec JSON.
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Area and factor pair from the two-bracket formula.
    Area {
        #[command(flatten)]
        input: Input,
        /// Apex vertex of the fan.
        #[arg(long, default_value_t = 0)]
        apex: usize,
        /// Also evaluate the area from every apex.
        #[arg(long)]
        all_apices: bool,
    },
    /// Fan triangles with their tangent lengths and shared diagonals.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        apex: usize,
    },
    /// Check every identity on one polygon.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Tolerance override, `identity=value`; repeatable.
        #[arg(long = "tolerance", value_name = "IDENTITY=VALUE")]
        tolerances: Vec<String>,
    },
    /// Check every identity over a seeded grid of random polygons.
    Fuzz {
        /// Fuzz configuration JSON file; flags below override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed_start: Option<u64>,
        #[arg(long)]
        seed_count: Option<u64>,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',')]
        vertex_counts: Option<Vec<usize>>,
        #[arg(long)]
        radius: Option<f64>,
        /// Pinch the first gap of every polygon to this central angle.
        #[arg(long)]
        near_degenerate: Option<f64>,
        #[arg(long = "tolerance", value_name = "IDENTITY=VALUE")]
        tolerances: Vec<String>,
    },
    /// Circumradius of the cyclic polygon with the given sides.
    SolveRadius {
        /// Comma-separated side lengths.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["input", "spec"])]
        sides: Option<Vec<f64>>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        spec: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<(i32, String), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, "usage", m),
                Failure::Io(m) => (EXIT_INFEASIBLE, "io", m),
                Failure::Domain(e) => (exit_code(&e), e.kind(), e.to_string()),
            };
            let stderr = match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Diagnostic<'a> {
                        error: &'a str,
                        message: &'a str,
                        exit_code: i32,
                    }
                    let body = json::to_string(&Diagnostic {
                        error: kind,
                        message: &message,
                        exit_code: code,
                    })
                    .unwrap_or_default();
                    format!("{body}\n")
                }
                Format::Text => format!("error ({kind}): {message}\n"),
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

/// Exit status for a library error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Numeric(_) => EXIT_NUMERIC,
        _ => EXIT_INFEASIBLE,
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Area {
            input,
            apex,
            all_apices,
        } => area(&load_spec(input.input, input.spec)?, apex, all_apices, format),
        Command::Decompose { input, apex } => {
            decompose(&load_spec(input.input, input.spec)?, apex, format)
        }
        Command::Verify { input, tolerances } => {
            let tolerances = Tolerances::with_overrides(&parse_tolerances(&tolerances)?)?;
            verify(&load_spec(input.input, input.spec)?, &tolerances, format)
        }
        Command::Fuzz {
            config,
            seed_start,
            seed_count,
            vertex_counts,
            radius,
            near_degenerate,
            tolerances,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = read(&path)?;
                    serde_json::from_str::<FuzzConfig>(&text)
                        .map_err(|e| Error::InvalidSpec(format!("fuzz config: {e}")))?
                }
                None => FuzzConfig::default(),
            };
            if let Some(v) = seed_start {
                cfg.seed_start = v;
            }
            if let Some(v) = seed_count {
                cfg.seed_count = v;
            }
            if let Some(v) = vertex_counts {
                cfg.vertex_counts = v;
            }
            if let Some(v) = radius {
                cfg.radius = v;
            }
            if near_degenerate.is_some() {
                cfg.near_degenerate = near_degenerate;
            }
            cfg.tolerances.extend(parse_tolerances(&tolerances)?);
            let report = fuzz(&cfg)?;
            emit_report(None, &report, format)
        }
        Command::SolveRadius { sides, input, spec } => {
            let sides = match (sides, input, spec) {
                (Some(sides), None, None) => sides,
                (None, input, spec) if input.is_some() || spec.is_some() => {
                    match load_spec(input, spec)? {
                        PolygonSpec::SideLengths { sides } => sides,
                        other => other.build()?.side_lengths(),
                    }
                }
                _ => {
                    return Err(Failure::Usage(
                        "solve-radius needs exactly one of --sides, --input or --spec".into(),
                    ))
                }
            };
            solve_radius(&sides, format)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn load_spec(path: Option<PathBuf>, inline: Option<String>) -> Result<PolygonSpec, Failure> {
    let text = match (path, inline) {
        (Some(path), None) => read(&path)?,
        (None, Some(text)) => text,
        _ => {
            return Err(Failure::Usage(
                "exactly one of --input or --spec is required".into(),
            ))
        }
    };
    Ok(PolygonSpec::from_json(&text)?)
}

fn parse_tolerances(entries: &[String]) -> Result<BTreeMap<Identity, f64>, Failure> {
    let mut out = BTreeMap::new();
    for entry in entries {
        let (name, value) = entry
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("tolerance `{entry}` is not IDENTITY=VALUE")))?;
        let identity = Identity::from_name(name.trim())
            .ok_or_else(|| Failure::Usage(format!("unknown identity `{name}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("tolerance `{value}` is not a number")))?;
        out.insert(identity, value);
    }
    Ok(out)
}

fn render<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(format!("{}\n", json::to_string(value)?))
}

#[derive(Serialize)]
struct ApexArea {
    apex: usize,
    area: f64,
}

#[derive(Serialize)]
struct AreaOutput {
    area: f64,
    factor_pair: FactorPair,
    n: usize,
    apex: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    apex_sweep: Option<Vec<ApexArea>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    apex_spread: Option<f64>,
}

fn area(spec: &PolygonSpec, apex: usize, all_apices: bool, format: Format) -> CmdResult {
    let poly = spec.build()?;
    let fan = fan_decompose(&poly, apex)?;
    let result = cyclic_area(&fan)?;
    let (sweep, spread) = if all_apices {
        let sweep = (0..poly.vertex_count())
            .map(|a| {
                let area = cyclic_area(&fan_decompose(&poly, a)?)?.area;
                Ok(ApexArea { apex: a, area })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let hi = sweep.iter().map(|a| a.area).fold(f64::MIN, f64::max);
        let lo = sweep.iter().map(|a| a.area).fold(f64::MAX, f64::min);
        (Some(sweep), Some(crate::verify::rel_err(hi, lo)))
    } else {
        (None, None)
    };
    let out = AreaOutput {
        area: result.area,
        factor_pair: result.factors,
        n: fan.len(),
        apex,
        apex_sweep: sweep,
        apex_spread: spread,
    };
    match format {
        Format::Json => Ok((EXIT_OK, render(&out)?)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "area      {}", json::format_f64(out.area));
            let _ = writeln!(s, "f1        {}", json::format_f64(out.factor_pair.f1));
            let _ = writeln!(s, "f2        {}", json::format_f64(out.factor_pair.f2));
            let _ = writeln!(s, "triangles {}", out.n);
            let _ = writeln!(s, "apex      {}", out.apex);
            if let (Some(sweep), Some(spread)) = (&out.apex_sweep, out.apex_spread) {
                for a in sweep {
                    let _ = writeln!(s, "  apex {:>3}  area {}", a.apex, json::format_f64(a.area));
                }
                let _ = writeln!(s, "spread    {spread:e}");
            }
            Ok((EXIT_OK, s))
        }
    }
}

#[derive(Serialize)]
struct TriangleOutput {
    index: usize,
    #[serde(flatten)]
    split: TriangleSplit,
}

#[derive(Serialize)]
struct DiagonalOutput {
    /// `L_{i,i+1}`, 1-based `i`.
    index: usize,
    /// `s_i + t_i`
    from_left: f64,
    /// `s_{i+1} + r_{i+1}`
    from_right: f64,
}

#[derive(Serialize)]
struct DecomposeOutput {
    apex: usize,
    n: usize,
    triangles: Vec<TriangleOutput>,
    diagonals: Vec<DiagonalOutput>,
}

fn decompose(spec: &PolygonSpec, apex: usize, format: Format) -> CmdResult {
    let poly = spec.build()?;
    let fan = fan_decompose(&poly, apex)?;
    let out = DecomposeOutput {
        apex,
        n: fan.len(),
        triangles: fan
            .splits()
            .iter()
            .enumerate()
            .map(|(i, &split)| TriangleOutput { index: i + 1, split })
            .collect(),
        diagonals: fan
            .diagonals()
            .into_iter()
            .enumerate()
            .map(|(i, (from_left, from_right))| DiagonalOutput {
                index: i + 1,
                from_left,
                from_right,
            })
            .collect(),
    };
    match format {
        Format::Json => Ok((EXIT_OK, render(&out)?)),
        Format::Text => {
            let f = json::format_f64;
            let mut s = String::new();
            let _ = writeln!(s, "apex {} with {} triangles", out.apex, out.n);
            for t in &out.triangles {
                let x = &t.split;
                let _ = writeln!(
                    s,
                    "T{:<3} r {}  s {}  t {}  p {}  rho {}  area {}",
                    t.index,
                    f(x.r),
                    f(x.s),
                    f(x.t),
                    f(x.p),
                    f(x.rho),
                    f(x.area)
                );
            }
            for d in &out.diagonals {
                let _ = writeln!(
                    s,
                    "L{},{}  {}  {}",
                    d.index,
                    d.index + 1,
                    f(d.from_left),
                    f(d.from_right)
                );
            }
            Ok((EXIT_OK, s))
        }
    }
}

fn verify(spec: &PolygonSpec, tolerances: &Tolerances, format: Format) -> CmdResult {
    let poly = spec.build()?;
    let area = cyclic_area(&fan_decompose(&poly, 0)?)?.area;
    let report = verify_polygon(&poly, tolerances);
    emit_report(Some(area), &report, format)
}

fn emit_report(area: Option<f64>, report: &VerificationReport, format: Format) -> CmdResult {
    #[derive(Serialize)]
    struct WithArea<'a> {
        #[serde(skip_serializing_if = "Option::is_none")]
        area: Option<f64>,
        #[serde(flatten)]
        report: &'a VerificationReport,
    }
    let code = if report.pass { EXIT_OK } else { EXIT_INFEASIBLE };
    match format {
        Format::Json => Ok((code, render(&WithArea { area, report })?)),
        Format::Text => {
            let mut s = String::new();
            if let Some(a) = area {
                let _ = writeln!(s, "area {}", json::format_f64(a));
            }
            for (identity, r) in &report.identities {
                let _ = writeln!(
                    s,
                    "{:<4} {:<24} trials {:>7}  max_rel_err {:.3e}{}",
                    if r.pass { "ok" } else { "FAIL" },
                    identity.name(),
                    r.trials,
                    r.max_rel_err,
                    match r.worst_seed {
                        Some(seed) => format!("  worst seed {seed}"),
                        None => String::new(),
                    }
                );
            }
            let _ = writeln!(s, "{}", if report.pass { "PASS" } else { "FAIL" });
            Ok((code, s))
        }
    }
}

fn solve_radius(sides: &[f64], format: Format) -> CmdResult {
    let solution = circumradius_from_sides(sides)?;
    #[derive(Serialize)]
    struct Out {
        radius: f64,
        center_inside: bool,
    }
    match format {
        Format::Json => Ok((
            EXIT_OK,
            render(&Out {
                radius: solution.radius,
                center_inside: solution.center_inside,
            })?,
        )),
        Format::Text => Ok((
            EXIT_OK,
            format!(
                "radius {}\ncenter {}\n",
                json::format_f64(solution.radius),
                if solution.center_inside { "inside" } else { "outside" }
            ),
        )),
    }
}
