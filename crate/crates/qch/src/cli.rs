//! Command-line front end: evaluate any bound, sweep a parameter, print
//! the named constants, or run the full claim audit.
//!
//! Exit codes: `0` success (audit: no failed claims), `1` domain errors
//! and failed audits, `2` usage errors (unknown names, missing or
//! malformed flags).

use crate::audit::{self, REGISTRY_IDS};
use crate::bounds::{self, D2Convention, NamedConstants, TwistSpec};
use crate::error::Error;
use crate::geometry::{Genus, SystoleLength};
use crate::report::{self, BoundReport, ConstantRow, OutputFormat, SweepReport};
use crate::special::Dilatation;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// A failed command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The request itself is malformed (exit 2).
    #[error("{0}")]
    Usage(String),
    /// The request is well-formed but mathematically out of domain
    /// (exit 1).
    #[error(transparent)]
    Domain(#[from] Error),
    /// Writing `--out` failed (exit 1).
    #[error("output write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

/// Dilatation lower bounds for quasiconformally homogeneous hyperbolic
/// surfaces.
#[derive(Debug, Parser)]
#[command(
    name = "qch",
    version,
    about = "Dilatation lower bounds for quasiconformally homogeneous hyperbolic surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Reading of the embedded-disk constant d2 (affects phi and the
    /// crossing constants only).
    #[arg(long, global = true, value_enum, default_value_t = ConvArg::Diameter)]
    pub conv: ConvArg,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Top-level subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every named constant (K_F, K_P, K_A, L, K_D, d2, ...).
    Constants,
    /// Evaluate one bound at explicit parameter values.
    Bound(BoundArgs),
    /// Evaluate one bound along an inclusive parameter grid.
    Sweep(SweepArgs),
    /// Recompute and grade every registered claim.
    Audit(AuditArgs),
}

/// Arguments of `bound`.
#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Bound to evaluate.
    #[arg(value_enum)]
    pub name: BoundName,
    #[command(flatten)]
    pub params: ParamArgs,
}

/// Arguments of `sweep`.
#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Bound to sweep.
    #[arg(value_enum)]
    pub name: BoundName,
    /// Parameter to sweep (one of the bound's flags: g, n, ell, m, K, C,
    /// A, c0).
    #[arg(long)]
    pub param: String,
    /// Grid start (inclusive).
    #[arg(long)]
    pub from: f64,
    /// Grid end (inclusive).
    #[arg(long)]
    pub to: f64,
    /// Number of grid points (at least 2).
    #[arg(long)]
    pub steps: u64,
    #[command(flatten)]
    pub params: ParamArgs,
}

/// Arguments of `audit`.
#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Override one claim's tolerance as <id>=<value> (repeatable).
    #[arg(long = "tol", value_name = "ID=VALUE", value_parser = parse_tol_override)]
    pub tol: Vec<(String, f64)>,
}

/// Scalar parameters shared by `bound` and `sweep`; each bound requires
/// its own subset.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Genus (g >= 2).
    #[arg(long)]
    pub g: Option<u64>,
    /// Orbit / disk count (n >= 1).
    #[arg(long)]
    pub n: Option<u64>,
    /// Geodesic (systole) length, > 0.
    #[arg(long)]
    pub ell: Option<f64>,
    /// Twist power (m >= 1).
    #[arg(long)]
    pub m: Option<u64>,
    /// Dilatation (K >= 1).
    #[arg(long = "K")]
    pub k: Option<f64>,
    /// Disk-count growth constant (C > 0).
    #[arg(long = "C")]
    pub c: Option<f64>,
    /// Area constant (A > 0).
    #[arg(long = "A")]
    pub a: Option<f64>,
    /// Stability threshold (c0 >= 0).
    #[arg(long = "c0")]
    pub c0: Option<f64>,
}

/// Bounds the CLI can evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    /// Orbit-counting bound; requires --g and --n.
    Counting,
    /// Finite-subgroup constant K_F at the given genus; requires --g.
    Finite,
    /// Periodic-class bound; requires --g.
    Periodic,
    /// Fixed-point constant K_A; no parameters.
    Pa,
    /// Multi-twist bound; requires --m and --ell.
    Multitwist,
    /// Disk-density ratio; requires --ell (uses --conv).
    Phi,
    /// Single-twist curve; requires --ell.
    Psi,
    /// Torsion-free log-dilatation bound; requires --g.
    Torsionfree,
    /// Genus threshold for the homology-kernel argument; requires --A
    /// and --c0.
    Torelli,
    /// Counting bound under linear disk-count growth; requires --C.
    CountingHypothesis,
    /// Genus-weighted counting curve; requires --g and --K.
    Mug,
}

impl BoundName {
    fn as_str(self) -> &'static str {
        match self {
            BoundName::Counting => "counting",
            BoundName::Finite => "finite",
            BoundName::Periodic => "periodic",
            BoundName::Pa => "pa",
            BoundName::Multitwist => "multitwist",
            BoundName::Phi => "phi",
            BoundName::Psi => "psi",
            BoundName::Torsionfree => "torsionfree",
            BoundName::Torelli => "torelli",
            BoundName::CountingHypothesis => "counting-hypothesis",
            BoundName::Mug => "mug",
        }
    }

    fn sweepable_params(self) -> &'static [&'static str] {
        match self {
            BoundName::Counting => &["g", "n"],
            BoundName::Finite | BoundName::Periodic | BoundName::Torsionfree => &["g"],
            BoundName::Pa => &[],
            BoundName::Multitwist => &["m", "ell"],
            BoundName::Phi | BoundName::Psi => &["ell"],
            BoundName::Torelli => &["A", "c0"],
            BoundName::CountingHypothesis => &["C"],
            BoundName::Mug => &["g", "K"],
        }
    }
}

/// `--conv` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvArg {
    Diameter,
    Radius,
}

impl ConvArg {
    fn to_convention(self) -> D2Convention {
        match self {
            ConvArg::Diameter => D2Convention::Diameter,
            ConvArg::Radius => D2Convention::Radius,
        }
    }
}

/// `--format` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

impl FormatArg {
    fn to_format(self) -> OutputFormat {
        match self {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

fn parse_tol_override(raw: &str) -> Result<(String, f64), String> {
    let (id, value) = raw
        .split_once('=')
        .ok_or_else(|| format!("expected <id>=<value>, got '{raw}'"))?;
    let value: f64 = value
        .parse()
        .map_err(|_| format!("invalid tolerance value in '{raw}'"))?;
    if !(value.is_finite() && value >= 0.0) {
        return Err(format!(
            "tolerance must be a finite non-negative number, got {value}"
        ));
    }
    Ok((id.trim().to_string(), value))
}

/// A rendered command result plus the process exit code it implies.
#[derive(Debug)]
pub struct CmdOutput {
    /// The rendered document; empty when `--out` consumed it.
    pub rendered: String,
    /// `0` on success, `1` when the audit found failing claims.
    pub exit_code: u8,
}

/// Runs a parsed command to a rendered result. Pure except for `--out`
/// file writing.
pub fn execute(cli: Cli) -> Result<CmdOutput, CliError> {
    let conv = cli.conv.to_convention();
    let format = cli.format.to_format();
    let (rendered, exit_code) = match &cli.command {
        Command::Constants => (render_constants_cmd(conv, format)?, 0),
        Command::Bound(args) => {
            let bound = eval_bound(args.name, &args.params, conv)?;
            (report::render_bound(&bound, format), 0)
        }
        Command::Sweep(args) => (render_sweep_cmd(args, conv, format)?, 0),
        Command::Audit(args) => render_audit_cmd(args, conv, format)?,
    };
    if let Some(path) = &cli.out {
        std::fs::write(path, &rendered)?;
        Ok(CmdOutput {
            rendered: String::new(),
            exit_code,
        })
    } else {
        Ok(CmdOutput {
            rendered,
            exit_code,
        })
    }
}

fn missing(flag: &str, name: BoundName) -> CliError {
    CliError::Usage(format!("bound '{}' requires --{flag}", name.as_str()))
}

fn require_g(p: &ParamArgs, name: BoundName) -> Result<Genus, CliError> {
    let g = p.g.ok_or_else(|| missing("g", name))?;
    Ok(Genus::new(g)?)
}

fn require_n(p: &ParamArgs, name: BoundName) -> Result<u64, CliError> {
    p.n.ok_or_else(|| missing("n", name))
}

fn require_ell(p: &ParamArgs, name: BoundName) -> Result<SystoleLength, CliError> {
    let ell = p.ell.ok_or_else(|| missing("ell", name))?;
    Ok(SystoleLength::new(ell)?)
}

fn require_m(p: &ParamArgs, name: BoundName) -> Result<u64, CliError> {
    p.m.ok_or_else(|| missing("m", name))
}

fn require_k(p: &ParamArgs, name: BoundName) -> Result<Dilatation, CliError> {
    let k = p.k.ok_or_else(|| missing("K", name))?;
    Ok(Dilatation::new(k)?)
}

fn require_scalar(value: Option<f64>, flag: &str, name: BoundName) -> Result<f64, CliError> {
    value.ok_or_else(|| missing(flag, name))
}

fn eval_bound(name: BoundName, p: &ParamArgs, conv: D2Convention) -> Result<BoundReport, CliError> {
    let report = match name {
        BoundName::Counting => {
            let g = require_g(p, name)?;
            let n = require_n(p, name)?;
            let value = bounds::counting_bound(g, n)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::Counting.label(),
                kind: bounds::ValueKind::Dilatation.label(),
                value: value.get(),
                inputs: vec![("g".into(), g.get() as f64), ("n".into(), n as f64)],
            }
        }
        BoundName::Finite => {
            from_bound_result(name, bounds::finite_subgroup_bound(require_g(p, name)?))
        }
        BoundName::Periodic => from_bound_result(name, bounds::periodic_bound(require_g(p, name)?)),
        BoundName::Pa => from_bound_result(name, bounds::pseudo_anosov_constant()?),
        BoundName::Multitwist => {
            let m = require_m(p, name)?;
            let ell = require_ell(p, name)?;
            let spec = TwistSpec::new(m, ell)?;
            let (left, right) = bounds::multi_twist_bound_branches(spec);
            let value = bounds::multi_twist_bound(spec);
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::MultiTwist.label(),
                kind: bounds::ValueKind::Dilatation.label(),
                value: value.get(),
                inputs: vec![
                    ("m".into(), m as f64),
                    ("ell".into(), ell.get()),
                    ("left_branch".into(), left),
                    ("right_branch".into(), right),
                ],
            }
        }
        BoundName::Phi => {
            let ell = require_ell(p, name)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::DiskTwistCrossing.label(),
                kind: "ratio",
                value: bounds::phi(ell, conv),
                inputs: vec![("ell".into(), ell.get()), ("d2".into(), conv.d2())],
            }
        }
        BoundName::Psi => {
            let ell = require_ell(p, name)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::MultiTwist.label(),
                kind: bounds::ValueKind::Dilatation.label(),
                value: bounds::psi_mt(ell).get(),
                inputs: vec![("ell".into(), ell.get())],
            }
        }
        BoundName::Torsionfree => {
            let g = require_g(p, name)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::TorsionFree.label(),
                kind: bounds::ValueKind::LogDilatation.label(),
                value: bounds::torsion_free_bound(g),
                inputs: vec![("g".into(), g.get() as f64)],
            }
        }
        BoundName::Torelli => {
            let a = require_scalar(p.a, "A", name)?;
            let c0 = require_scalar(p.c0, "c0", name)?;
            let genus = bounds::torelli_threshold(a, c0)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::TorelliThreshold.label(),
                kind: "genus",
                value: genus.get() as f64,
                inputs: vec![("A".into(), a), ("c0".into(), c0)],
            }
        }
        BoundName::CountingHypothesis => {
            let c = require_scalar(p.c, "C", name)?;
            let value = bounds::hypothetical_counting_bound(c)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::HypotheticalCounting.label(),
                kind: bounds::ValueKind::Dilatation.label(),
                value: value.get(),
                inputs: vec![("C".into(), c)],
            }
        }
        BoundName::Mug => {
            let g = require_g(p, name)?;
            let k = require_k(p, name)?;
            BoundReport {
                name: name.as_str(),
                theorem: bounds::TheoremId::GenusCountingCurve.label(),
                kind: bounds::ValueKind::Dilatation.label(),
                value: bounds::mu_g(g, k),
                inputs: vec![("g".into(), g.get() as f64), ("K".into(), k.get())],
            }
        }
    };
    Ok(report)
}

fn from_bound_result(name: BoundName, result: bounds::BoundResult) -> BoundReport {
    BoundReport {
        name: name.as_str(),
        theorem: result.theorem.label(),
        kind: result.kind.label(),
        value: result.value,
        inputs: result
            .inputs
            .iter()
            .map(|(key, value)| (key.to_string(), *value))
            .collect(),
    }
}

fn render_constants_cmd(conv: D2Convention, format: OutputFormat) -> Result<String, CliError> {
    let g2 = Genus::new(2).expect("genus 2 is valid");
    let k_f = bounds::finite_subgroup_bound(g2);
    let k_p = bounds::periodic_bound(g2);
    let k_a = bounds::pseudo_anosov_constant()?;
    let (l, k_d) = bounds::multi_twist_constant(conv)?;
    let rows = vec![
        ConstantRow {
            id: "K_F",
            theorem: k_f.theorem.label(),
            value: k_f.value,
        },
        ConstantRow {
            id: "K_P",
            theorem: k_p.theorem.label(),
            value: k_p.value,
        },
        ConstantRow {
            id: "K_A",
            theorem: k_a.theorem.label(),
            value: k_a.value,
        },
        ConstantRow {
            id: "L",
            theorem: k_d.theorem.label(),
            value: l,
        },
        ConstantRow {
            id: "K_D",
            theorem: k_d.theorem.label(),
            value: k_d.value,
        },
        ConstantRow {
            id: "d2",
            theorem: "embedded-disk",
            value: conv.d2(),
        },
        ConstantRow {
            id: "flm_log",
            theorem: "torelli-flm",
            value: bounds::flm_bound(),
        },
        ConstantRow {
            id: "identity_class",
            theorem: "identity-class",
            value: NamedConstants::IDENTITY_CLASS_BOUND,
        },
    ];
    Ok(report::render_constants(&rows, conv.label(), format))
}

fn round_to_count(x: f64, param: &str) -> Result<u64, CliError> {
    if !x.is_finite() || x < 0.0 {
        return Err(CliError::Domain(Error::domain(
            "sweep",
            format!("integer parameter {param} cannot take the value {x}"),
        )));
    }
    Ok(x.round() as u64)
}

/// Sets the swept parameter on the parameter set, returning the value
/// actually used (integer parameters are rounded to the nearest count).
fn set_param(p: &mut ParamArgs, param: &str, x: f64) -> Result<f64, CliError> {
    match param {
        "g" => {
            let v = round_to_count(x, param)?;
            p.g = Some(v);
            Ok(v as f64)
        }
        "n" => {
            let v = round_to_count(x, param)?;
            p.n = Some(v);
            Ok(v as f64)
        }
        "m" => {
            let v = round_to_count(x, param)?;
            p.m = Some(v);
            Ok(v as f64)
        }
        "ell" => {
            p.ell = Some(x);
            Ok(x)
        }
        "K" => {
            p.k = Some(x);
            Ok(x)
        }
        "C" => {
            p.c = Some(x);
            Ok(x)
        }
        "A" => {
            p.a = Some(x);
            Ok(x)
        }
        "c0" => {
            p.c0 = Some(x);
            Ok(x)
        }
        other => Err(CliError::Usage(format!(
            "unknown sweep parameter '{other}'"
        ))),
    }
}

fn render_sweep_cmd(
    args: &SweepArgs,
    conv: D2Convention,
    format: OutputFormat,
) -> Result<String, CliError> {
    if args.steps < 2 {
        return Err(CliError::Usage("sweep requires --steps >= 2".to_string()));
    }
    if !(args.from.is_finite() && args.to.is_finite()) {
        return Err(CliError::Usage(
            "sweep requires finite --from and --to".to_string(),
        ));
    }
    if args.from >= args.to {
        return Err(CliError::Usage("sweep requires --from < --to".to_string()));
    }
    let allowed = args.name.sweepable_params();
    if !allowed.contains(&args.param.as_str()) {
        return Err(CliError::Usage(if allowed.is_empty() {
            format!("bound '{}' has no sweepable parameter", args.name.as_str())
        } else {
            format!(
                "bound '{}' cannot sweep parameter '{}' (allowed: {})",
                args.name.as_str(),
                args.param,
                allowed.join(", ")
            )
        }));
    }
    let mut points = Vec::with_capacity(args.steps as usize);
    for i in 0..args.steps {
        let x = args.from + (args.to - args.from) * i as f64 / (args.steps - 1) as f64;
        let mut params = args.params.clone();
        let used = set_param(&mut params, &args.param, x)?;
        let bound = eval_bound(args.name, &params, conv)?;
        points.push((used, bound.value));
    }
    Ok(report::render_sweep(
        &SweepReport {
            name: args.name.as_str(),
            param: args.param.clone(),
            points,
        },
        format,
    ))
}

fn render_audit_cmd(
    args: &AuditArgs,
    conv: D2Convention,
    format: OutputFormat,
) -> Result<(String, u8), CliError> {
    let mut overrides = BTreeMap::new();
    for (id, value) in &args.tol {
        if !REGISTRY_IDS.contains(&id.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown claim id '{id}' in --tol (known ids: {})",
                REGISTRY_IDS.join(", ")
            )));
        }
        overrides.insert(id.clone(), *value);
    }
    let report = audit::run_audit(conv, &overrides);
    let exit_code = u8::from(report.has_failures());
    Ok((report::render_audit(&report, format), exit_code))
}
