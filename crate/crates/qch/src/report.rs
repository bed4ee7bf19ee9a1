//! Rendering: plain-text tables for humans, JSON documents and CSV series
//! for machines. TEXT output rounds to 6 significant digits; JSON and CSV
//! carry 12.

use crate::audit::AuditReport;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

/// How a command's result is rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Human-readable table (the default).
    #[default]
    Text,
    /// One JSON document.
    Json,
    /// CSV with a header row.
    Csv,
}

/// Significant digits in TEXT output.
pub const TEXT_SIG_DIGITS: usize = 6;
/// Significant digits in JSON and CSV output.
pub const MACHINE_SIG_DIGITS: usize = 12;

const TOOL_NAME: &str = "qch";
const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Formats `x` with `sig` significant digits as a plain decimal, trimming
/// trailing fractional zeros: `format_sig(1.3554685057, 6)` is
/// `"1.35547"`, `format_sig(84.0, 6)` is `"84"`.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    let rendered = format!("{x:.decimals$}");
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}

/// Rounds `x` to [`MACHINE_SIG_DIGITS`] significant digits, for embedding
/// in JSON numbers.
pub fn round_machine(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.prec$e}", prec = MACHINE_SIG_DIGITS - 1)
        .parse()
        .unwrap_or(x)
}

fn json_number(x: f64) -> Value {
    serde_json::Number::from_f64(round_machine(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn machine_cell(x: f64) -> String {
    format_sig(x, MACHINE_SIG_DIGITS)
}

fn text_cell(x: f64) -> String {
    format_sig(x, TEXT_SIG_DIGITS)
}

/// Short scientific form for deviations and tolerances in TEXT tables.
fn diff_cell(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.2e}")
    }
}

fn csv_document(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory CSV write");
    for row in rows {
        writer.write_record(&row).expect("in-memory CSV write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV flush"))
        .expect("CSV output is UTF-8")
}

fn json_document(payload: Value) -> String {
    let mut document = json!({
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
    });
    let object = document.as_object_mut().expect("document is an object");
    if let Value::Object(fields) = payload {
        for (key, value) in fields {
            object.insert(key, value);
        }
    }
    let mut rendered = serde_json::to_string_pretty(&document).expect("JSON serialization");
    rendered.push('\n');
    rendered
}

/// One row of the named-constants table.
#[derive(Debug, Clone)]
pub struct ConstantRow {
    /// Constant name, e.g. `K_F`.
    pub id: &'static str,
    /// Label of the inequality the constant belongs to.
    pub theorem: &'static str,
    /// Computed value.
    pub value: f64,
}

/// Renders the named-constants table.
pub fn render_constants(rows: &[ConstantRow], convention: &str, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "named constants (convention: {convention})");
            let _ = writeln!(out);
            let _ = writeln!(out, "{:<16} {:<24} value", "id", "theorem");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:<16} {:<24} {}",
                    row.id,
                    row.theorem,
                    text_cell(row.value)
                );
            }
            out
        }
        OutputFormat::Json => json_document(json!({
            "convention": convention,
            "constants": rows
                .iter()
                .map(|row| {
                    json!({"id": row.id, "theorem": row.theorem, "value": json_number(row.value)})
                })
                .collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => csv_document(
            &["id", "theorem", "value"],
            rows.iter()
                .map(|row| {
                    vec![
                        row.id.to_string(),
                        row.theorem.to_string(),
                        machine_cell(row.value),
                    ]
                })
                .collect(),
        ),
    }
}

/// A single evaluated bound, ready to render.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// CLI name of the bound.
    pub name: &'static str,
    /// Label of the inequality behind it.
    pub theorem: &'static str,
    /// Unit label: `dilatation`, `log-dilatation`, `ratio`, or `genus`.
    pub kind: &'static str,
    /// The bound's value.
    pub value: f64,
    /// Named inputs and solver diagnostics, in evaluation order.
    pub inputs: Vec<(String, f64)>,
}

/// Renders one evaluated bound.
pub fn render_bound(bound: &BoundReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} = {} ({})",
                bound.name,
                text_cell(bound.value),
                bound.kind
            );
            for (name, value) in &bound.inputs {
                let _ = writeln!(out, "  {name} = {}", text_cell(*value));
            }
            out
        }
        OutputFormat::Json => {
            let mut inputs = Map::new();
            for (name, value) in &bound.inputs {
                inputs.insert(name.clone(), json_number(*value));
            }
            json_document(json!({
                "bound": {
                    "name": bound.name,
                    "theorem": bound.theorem,
                    "kind": bound.kind,
                    "value": json_number(bound.value),
                    "inputs": Value::Object(inputs),
                }
            }))
        }
        OutputFormat::Csv => csv_document(
            &["id", "theorem", "value"],
            vec![vec![
                bound.name.to_string(),
                bound.theorem.to_string(),
                machine_cell(bound.value),
            ]],
        ),
    }
}

/// An evaluated parameter sweep, ready to render.
#[derive(Debug, Clone)]
pub struct SweepReport {
    /// CLI name of the swept bound.
    pub name: &'static str,
    /// The swept parameter's flag name.
    pub param: String,
    /// `(parameter value, bound value)` pairs in grid order.
    pub points: Vec<(f64, f64)>,
}

/// Renders a parameter sweep as a two-column series.
pub fn render_sweep(sweep: &SweepReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "sweep of {} over {}", sweep.name, sweep.param);
            let _ = writeln!(out);
            let _ = writeln!(out, "{:<20} value", sweep.param);
            for (x, value) in &sweep.points {
                let _ = writeln!(out, "{:<20} {}", text_cell(*x), text_cell(*value));
            }
            out
        }
        OutputFormat::Json => json_document(json!({
            "sweep": {
                "name": sweep.name,
                "param": sweep.param,
                "points": sweep
                    .points
                    .iter()
                    .map(|(x, value)| {
                        let mut point = Map::new();
                        point.insert(sweep.param.clone(), json_number(*x));
                        point.insert("value".to_string(), json_number(*value));
                        Value::Object(point)
                    })
                    .collect::<Vec<_>>(),
            }
        })),
        OutputFormat::Csv => csv_document(
            &[sweep.param.as_str(), "value"],
            sweep
                .points
                .iter()
                .map(|(x, value)| vec![machine_cell(*x), machine_cell(*value)])
                .collect(),
        ),
    }
}

/// Renders a full audit report.
pub fn render_audit(report: &AuditReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "claim audit (convention: {})",
                report.precision.convention.label()
            );
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "{:<18} {:<10} {:<18} {:<18} {:<10} tol",
                "id", "status", "computed", "reference", "diff"
            );
            for record in &report.records {
                let _ = writeln!(
                    out,
                    "{:<18} {:<10} {:<18} {:<18} {:<10} {}",
                    record.id,
                    record.status.as_str(),
                    text_cell(record.computed_value),
                    text_cell(record.reference_value),
                    diff_cell(record.abs_diff),
                    diff_cell(record.tolerance),
                );
                if !record.convention_notes.is_empty() {
                    let _ = writeln!(out, "{:<18} note: {}", "", record.convention_notes);
                }
            }
            let (pass, fail, sensitive) = report.counts();
            let _ = writeln!(out);
            let _ = writeln!(out, "PASS: {pass}  FAIL: {fail}  SENSITIVE: {sensitive}");
            out
        }
        OutputFormat::Json => json_document(json!({
            "convention": report.precision.convention.label(),
            "timestamp": report.timestamp_unix,
            "records": report
                .records
                .iter()
                .map(|record| {
                    json!({
                        "id": record.id,
                        "paper_value": json_number(record.reference_value),
                        "computed": json_number(record.computed_value),
                        "diff": json_number(record.abs_diff),
                        "tol": json_number(record.tolerance),
                        "status": record.status.as_str(),
                        "notes": record.convention_notes,
                    })
                })
                .collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => csv_document(
            &[
                "id",
                "paper_value",
                "computed",
                "diff",
                "tol",
                "status",
                "notes",
            ],
            report
                .records
                .iter()
                .map(|record| {
                    vec![
                        record.id.clone(),
                        machine_cell(record.reference_value),
                        machine_cell(record.computed_value),
                        machine_cell(record.abs_diff),
                        machine_cell(record.tolerance),
                        record.status.as_str().to_string(),
                        record.convention_notes.clone(),
                    ]
                })
                .collect(),
        ),
    }
}
