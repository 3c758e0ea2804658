//! The `tribq` command-line front end.
//!
//! Each subcommand calls one library function and renders the result as an
//! aligned table, JSON or CSV. Exit codes: 0 success, 1 mathematical mismatch
//! or failing identity, 2 usage or domain error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::audit::{run_audit, AuditProfile, AuditReport, VerdictReport};
use crate::binet::BigFloat;
use crate::binet::{binet_quaternion, binet_scalar, policy_precision};
use crate::matrices::{det2, fast_seq, phi, Mat2C};
use crate::quat::{qnorm, seq_quaternion, QuatSeqKind, Quaternion};
use crate::seqcore::{derived_scalar, SequenceKind};
use crate::series::{builtin_series, SeriesName};
use crate::{Error, Result};

pub const PRECISION_ENV: &str = "TRIBQ_PRECISION_BITS";
pub const OUTPUT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "tribq", version, about = "Exact Tribonacci quaternion toolkit")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,
    /// Write output to this file instead of stdout (for `audit`: the JSON report).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Values of T, K, R, U, C or S over an index range.
    #[command(allow_negative_numbers = true)]
    Seq { kind: SequenceKind, from: i64, to: i64 },
    /// One sequence quaternion and its norm.
    #[command(allow_negative_numbers = true)]
    Quat { kind: QuatSeqKind, n: i64 },
    /// Check the identity catalog over bounded ranges.
    Audit {
        /// Comma-separated identity ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        ids: Vec<String>,
        #[arg(long, default_value_t = 200)]
        max_n: i64,
        #[arg(long, default_value_t = 50)]
        max_m: i64,
        #[arg(long, default_value_t = -25, allow_negative_numbers = true)]
        negative_floor: i64,
        /// Omit the timestamp and timings so reports are byte-identical.
        #[arg(long)]
        reproducible: bool,
    },
    /// Closed-form evaluation of T, K, Q or Qtilde compared with the exact value.
    #[command(allow_negative_numbers = true)]
    Binet {
        kind: String,
        n: i64,
        /// Working precision in bits; defaults to the policy value.
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Leading coefficients of f, h, G or normT.
    Series { name: SeriesName, count: usize },
    /// The 2x2 complex matrix of a sequence quaternion, with det and norm.
    #[command(allow_negative_numbers = true)]
    Matrix {
        n: i64,
        #[arg(long, default_value = "Q")]
        kind: QuatSeqKind,
    },
    /// Log-time evaluation through companion-matrix powers.
    #[command(allow_negative_numbers = true)]
    Pow { kind: SequenceKind, n: i64 },
}

/// Tabular result plus its JSON form.
struct Output {
    command: &'static str,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    data: Value,
    /// Lines printed after the table in table format.
    footer: Vec<String>,
    exit: i32,
}

impl Output {
    fn new(command: &'static str, header: &[&str], data: Value) -> Self {
        Output {
            command,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            data,
            footer: Vec::new(),
            exit: EXIT_OK,
        }
    }

    fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Table => {
                let mut s = render_table(&self.header, &self.rows);
                for line in &self.footer {
                    s.push_str(line);
                    s.push('\n');
                }
                Ok(s)
            }
            OutputFormat::Csv => render_csv(&self.header, &self.rows),
            OutputFormat::Json => {
                let v = json!({
                    "version": OUTPUT_VERSION,
                    "command": self.command,
                    "data": self.data,
                });
                Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json value")))
            }
        }
    }
}

fn render_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header);
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

fn render_csv(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Config(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn quat_json(q: &Quaternion) -> Value {
    serde_json::to_value(q).expect("quaternion serializes")
}

fn residue_text(r: &BigFloat) -> String {
    if r.is_zero() {
        "0".to_string()
    } else {
        format!("2^{:.1}", r.log2_approx())
    }
}

/// Effective Binet precision: explicit value, else the policy raised to the
/// environment floor.
pub fn effective_precision(n: i64, explicit: Option<u32>, env: Option<&str>) -> Result<u32> {
    if let Some(p) = explicit {
        return Ok(p);
    }
    let floor = match env.map(str::trim).filter(|s| !s.is_empty()) {
        None => 0,
        Some(s) => s
            .parse::<u32>()
            .map_err(|_| Error::Config(format!("{PRECISION_ENV} must be a positive integer, got `{s}`")))?,
    };
    Ok(policy_precision(n).max(floor))
}

fn cmd_seq(kind: SequenceKind, from: i64, to: i64) -> Result<Output> {
    if from > to {
        return Err(Error::InvalidArgument(format!("empty range {from}..{to}")));
    }
    kind.check_index(from)?;
    let values: Vec<(i64, BigInt)> = (from..=to)
        .map(|n| derived_scalar(kind, n).map(|v| (n, v)))
        .collect::<Result<_>>()?;
    let data = json!({
        "kind": kind.name(),
        "values": values.iter().map(|(n, v)| json!({"n": n, "value": v.to_string()})).collect::<Vec<_>>(),
    });
    let mut out = Output::new("seq", &["n", kind.name()], data);
    out.rows = values.iter().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
    Ok(out)
}

fn cmd_quat(kind: QuatSeqKind, n: i64) -> Result<Output> {
    let q = seq_quaternion(kind, n)?;
    let norm = qnorm(&q);
    let data = json!({"kind": kind.name(), "n": n, "value": quat_json(&q), "norm": norm.to_string()});
    let mut out = Output::new("quat", &["kind", "n", "value", "norm"], data);
    out.rows.push(vec![
        kind.name().to_string(),
        n.to_string(),
        q.to_string(),
        norm.to_string(),
    ]);
    Ok(out)
}

fn verdict_row(r: &VerdictReport) -> Vec<String> {
    let minimal = r
        .minimal_counterexample
        .as_ref()
        .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_else(|| "-".to_string());
    vec![
        r.id.clone(),
        r.status_text().to_string(),
        r.counterexample_count.to_string(),
        minimal,
        r.checked
            .iter()
            .map(|(k, [lo, hi])| format!("{k} in [{lo},{hi}]"))
            .collect::<Vec<_>>()
            .join(", "),
    ]
}

impl VerdictReport {
    fn status_text(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "FAIL"
        }
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Config(format!("cannot write {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn cmd_audit(ids: &[String], profile: AuditProfile, reproducible: bool) -> Result<(Output, AuditReport)> {
    let filter = (!ids.is_empty()).then_some(ids);
    let results = run_audit(&profile, filter)?;
    let report = AuditReport::new(profile, results, reproducible);
    let data = serde_json::to_value(&report).expect("report serializes");
    let mut out = Output::new("audit", &["id", "status", "failures", "minimal", "checked"], data);
    out.rows = report.results.iter().map(verdict_row).collect();
    out.footer
        .push(format!("{} passed, {} failed", report.passed, report.failed));
    if report.failed > 0 {
        out.exit = EXIT_MISMATCH;
    }
    Ok((out, report))
}

fn cmd_binet(kind: &str, n: i64, precision: u32) -> Result<Output> {
    let mut out = Output::new(
        "binet",
        &["component", "approximation", "residue", "rounded", "exact", "status"],
        Value::Null,
    );
    let digits = 30;
    let mut records = Vec::new();
    if let Ok(seq) = kind.parse::<SequenceKind>() {
        let b = binet_scalar(seq, n, precision)?;
        let exact = derived_scalar(seq, n)?;
        records.push((
            "value".to_string(),
            format!("{:.digits$}", b.approx),
            residue_text(&b.residue),
            b.rounded,
            exact,
        ));
    } else {
        let qk: QuatSeqKind = kind.parse()?;
        let b = binet_quaternion(qk, n, precision)?;
        let exact = seq_quaternion(qk, n)?;
        for (i, ((approx, rounded), exact)) in b
            .approx
            .components()
            .into_iter()
            .zip(b.rounded.into_components())
            .zip(exact.into_components())
            .enumerate()
        {
            records.push((
                format!("a{i}"),
                format!("{approx:.digits$}"),
                residue_text(&b.residue),
                rounded,
                exact,
            ));
        }
    }
    let all_match = records.iter().all(|r| r.3 == r.4);
    let mut rows_json = Vec::new();
    for (name, approx, residue, rounded, exact) in &records {
        let flag = if rounded == exact { "MATCH" } else { "MISMATCH" };
        out.rows.push(vec![
            name.clone(),
            approx.clone(),
            residue.clone(),
            rounded.to_string(),
            exact.to_string(),
            flag.to_string(),
        ]);
        rows_json.push(json!({
            "component": name,
            "approximation": approx,
            "residue": residue,
            "rounded": rounded.to_string(),
            "exact": exact.to_string(),
        }));
    }
    out.data = json!({
        "kind": kind,
        "n": n,
        "precision_bits": precision,
        "components": rows_json,
        "status": if all_match { "MATCH" } else { "MISMATCH" },
    });
    out.footer.push(format!(
        "{} at {precision} bits",
        if all_match { "MATCH" } else { "MISMATCH" }
    ));
    if !all_match {
        out.exit = EXIT_MISMATCH;
    }
    Ok(out)
}

fn cmd_series(name: SeriesName, count: usize) -> Result<Output> {
    let coeffs = builtin_series(name).expand(count)?;
    let scalar = coeffs.iter().all(|c| c.im().is_zero());
    let show = |c: &Quaternion| if scalar { c.a0.to_string() } else { c.to_string() };
    let data = json!({
        "name": name.name(),
        "count": count,
        "coefficients": coeffs
            .iter()
            .map(|c| if scalar { Value::String(c.a0.to_string()) } else { quat_json(c) })
            .collect::<Vec<_>>(),
    });
    let mut out = Output::new("series", &["n", "coefficient"], data);
    out.rows = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| vec![i.to_string(), show(c)])
        .collect();
    Ok(out)
}

fn cmd_matrix(kind: QuatSeqKind, n: i64) -> Result<Output> {
    let q = seq_quaternion(kind, n)?;
    let m: Mat2C = phi(&q);
    let det = det2(&m);
    let norm = qnorm(&q);
    let equal = det.im.is_zero() && det.re == norm;
    let cells: Vec<Vec<String>> = m.0.iter().map(|r| r.iter().map(|z| z.to_string()).collect()).collect();
    let data = json!({
        "kind": kind.name(),
        "n": n,
        "quaternion": quat_json(&q),
        "phi": cells,
        "det": det.to_string(),
        "norm": norm.to_string(),
        "det_equals_norm": equal,
    });
    let mut out = Output::new("matrix", &["row", "col0", "col1"], data);
    for (i, r) in cells.iter().enumerate() {
        out.rows.push(vec![i.to_string(), r[0].clone(), r[1].clone()]);
    }
    out.footer.push(format!("det = {det}"));
    out.footer.push(format!("norm = {norm}"));
    out.footer
        .push(if equal { "det = norm: yes" } else { "det = norm: NO" }.to_string());
    if !equal {
        out.exit = EXIT_MISMATCH;
    }
    Ok(out)
}

fn cmd_pow(kind: SequenceKind, n: i64) -> Result<Output> {
    let v = fast_seq(kind, n)?;
    let digits = v.abs().to_string().len();
    let data = json!({"kind": kind.name(), "n": n, "value": v.to_string(), "digits": digits});
    let mut out = Output::new("pow", &["kind", "n", "value", "digits"], data);
    out.rows.push(vec![
        kind.name().to_string(),
        n.to_string(),
        v.to_string(),
        digits.to_string(),
    ]);
    Ok(out)
}

fn execute(cli: &Cli, env_precision: Option<&str>, stdout: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));
    let (output, report) = match &cli.command {
        Command::Seq { kind, from, to } => (cmd_seq(*kind, *from, *to)?, None),
        Command::Quat { kind, n } => (cmd_quat(*kind, *n)?, None),
        Command::Audit {
            ids,
            max_n,
            max_m,
            negative_floor,
            reproducible,
        } => {
            let profile = AuditProfile {
                max_n: *max_n,
                max_m: *max_m,
                negative_floor: *negative_floor,
            };
            let (out, report) = cmd_audit(ids, profile, *reproducible)?;
            (out, Some(report))
        }
        Command::Binet { kind, n, precision } => {
            let p = effective_precision(*n, *precision, env_precision)?;
            (cmd_binet(kind, *n, p)?, None)
        }
        Command::Series { name, count } => (cmd_series(*name, *count)?, None),
        Command::Matrix { n, kind } => (cmd_matrix(*kind, *n)?, None),
        Command::Pow { kind, n } => (cmd_pow(*kind, *n)?, None),
    };
    match (&cli.out, report) {
        // The audit file is always the JSON report; stdout keeps the chosen format.
        (Some(path), Some(report)) => {
            let mut json = report.to_json();
            json.push('\n');
            write_atomic(path, &json)?;
            stdout.write_all(output.render(cli.format)?.as_bytes()).map_err(io)?;
        }
        (Some(path), None) => write_atomic(path, &output.render(cli.format)?)?,
        (None, _) => stdout.write_all(output.render(cli.format)?.as_bytes()).map_err(io)?,
    }
    Ok(output.exit)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, env_precision: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, env_precision, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point used by the binary: real arguments, environment and streams.
pub fn run() -> i32 {
    let env = std::env::var(PRECISION_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        std::env::args_os(),
        env.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
