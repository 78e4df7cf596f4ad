//! Command-line surface over the library.
//!
//! Subcommands: `enumerate`, `count`, `seq`, `gf`, `verify`, `paths`,
//! `bijection`. Every subcommand takes `--format plain|json|csv`
//! (default plain). Exit status is 0 on success, 1 when a verification
//! sweep or bijection check reports a failure, and 2 on usage errors.
//!
//! Output is deterministic byte for byte: JSON documents are single-line
//! with keys in sorted order, and any value that can outgrow 64 bits is
//! rendered as a decimal string. The only environment variable consulted
//! is `NCC_WIDTH`, a minimum column width hint for the `paths` table.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bijection::{classify, domain, forward, verify_bijection};
use crate::composition::{compositions, compositions_with_parts, Composition};
use crate::error::Error;
use crate::formulas::{binomial, count_a, fibonacci};
use crate::genfunc::{expand, gf_compositions_m, gf_of, IntPolynomial, RationalSeries};
use crate::identities::{sweep, IdentityKind, IdentityReport};
use crate::lattice::{d_count, enumerate_paths};
use crate::sequences::{seq, seq_window, SequenceId};

/// Full enumeration above this weight is refused without `--force`; the
/// composition count grows like `phi^(2*nu)`.
const ENUMERATION_CEILING: u32 = 24;
/// Bijection instances above this `n` enumerate weight `2n+1 > 23`.
const BIJECTION_CEILING: u32 = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "ncc",
    version,
    about = "Enumerate and count coloured compositions along independent routes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List compositions of a given weight in canonical order
    Enumerate {
        /// Weight to enumerate
        nu: u32,
        /// Restrict to self-inverse compositions
        #[arg(long)]
        self_inverse: bool,
        /// Restrict to exactly this many parts
        #[arg(long, value_name = "M")]
        parts: Option<u32>,
        /// Allow enumeration above the practical ceiling
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Count compositions without enumerating them
    Count {
        /// Weight to count
        nu: u64,
        /// Count self-inverse compositions
        #[arg(long)]
        self_inverse: bool,
        /// Count compositions with exactly this many parts
        #[arg(long, value_name = "M")]
        parts: Option<u64>,
        /// Recount by enumeration and fail on mismatch
        #[arg(long)]
        cross_check: bool,
        /// Allow cross-checking above the practical ceiling
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print a window of one of the sequences A, B, C, D
    Seq {
        /// Sequence selector: A, B, C or D
        id: SequenceId,
        /// First index (defaults to the sequence's first defined index)
        #[arg(long)]
        start: Option<u64>,
        /// Number of values
        #[arg(long, default_value_t = 10)]
        len: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Expand a generating function to a coefficient table
    Gf {
        /// Named series: A, B, C or D
        id: Option<SequenceId>,
        /// Series counting compositions with exactly M parts
        #[arg(long, value_name = "M", conflicts_with = "id")]
        parts: Option<u32>,
        /// Numerator as comma-separated ascending coefficients
        #[arg(long, requires = "den", conflicts_with_all = ["id", "parts"])]
        num: Option<String>,
        /// Denominator as comma-separated ascending coefficients
        #[arg(long, requires = "num")]
        den: Option<String>,
        /// Number of coefficients to print
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Sweep an identity over all valid indices up to a bound
    Verify {
        /// Identity label: T5.1, T6.1i, T6.1ii or T6.2b
        identity: IdentityKind,
        /// Largest index to check
        #[arg(long)]
        max: u64,
        /// Shorthand for --format json
        #[arg(long, conflicts_with = "format")]
        json: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Count restricted lattice paths
    Paths {
        /// Largest row of the triangle, or the row for --k
        nu: u32,
        /// Count only paths with exactly K vertical steps
        #[arg(long)]
        k: Option<u32>,
        /// List the paths as step strings instead of counting
        #[arg(long, requires = "k")]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run the three-class bijection check for one instance
    Bijection {
        /// Instance index (n >= 2)
        #[arg(long)]
        n: u32,
        /// Print every source with its class and image
        #[arg(long)]
        trace: bool,
        /// Allow instances above the practical ceiling
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Entry point for `main`: parses `std::env::args_os` and prints to the
/// real standard streams.
pub fn run_from_env() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` and executes the selected subcommand, writing output to
/// `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
        // A closed pipe (e.g. piping into `head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate {
            nu,
            self_inverse,
            parts,
            force,
            format,
        } => run_enumerate(nu, self_inverse, parts, force, format, out),
        Command::Count {
            nu,
            self_inverse,
            parts,
            cross_check,
            force,
            format,
        } => run_count(nu, self_inverse, parts, cross_check, force, format, out),
        Command::Seq {
            id,
            start,
            len,
            format,
        } => run_seq(id, start, len, format, out),
        Command::Gf {
            id,
            parts,
            num,
            den,
            terms,
            format,
        } => run_gf(id, parts, num, den, terms, format, out),
        Command::Verify {
            identity,
            max,
            json,
            format,
        } => {
            let format = if json { OutputFormat::Json } else { format };
            run_verify(identity, max, format, out)
        }
        Command::Paths {
            nu,
            k,
            enumerate,
            format,
        } => run_paths(nu, k, enumerate, format, out),
        Command::Bijection {
            n,
            trace,
            force,
            format,
        } => run_bijection(n, trace, force, format, out),
    }
}

fn check_ceiling(nu: u32, force: bool) -> Result<(), Failure> {
    if nu > ENUMERATION_CEILING && !force {
        return Err(Failure::Usage(format!(
            "enumeration of weight {nu} exceeds the practical ceiling of {ENUMERATION_CEILING}; \
             pass --force to proceed anyway"
        )));
    }
    Ok(())
}

fn composition_pairs(c: &Composition) -> Value {
    Value::Array(
        c.parts()
            .iter()
            .map(|p| json!([p.size(), p.colour()]))
            .collect(),
    )
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    let rendered = serde_json::to_string(value).expect("documents contain no non-string keys");
    writeln!(out, "{rendered}")?;
    Ok(())
}

fn run_enumerate(
    nu: u32,
    self_inverse: bool,
    parts: Option<u32>,
    force: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    check_ceiling(nu, force)?;
    let items: Vec<Composition> = match parts {
        Some(m) => compositions_with_parts(nu, m)
            .filter(|c| !self_inverse || c.is_self_inverse())
            .collect(),
        None => compositions(nu)
            .filter(|c| !self_inverse || c.is_self_inverse())
            .collect(),
    };
    match format {
        OutputFormat::Plain => {
            for c in &items {
                writeln!(out, "{c}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "composition")?;
            for c in &items {
                writeln!(out, "{c}")?;
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "compositions": items.iter().map(composition_pairs).collect::<Vec<_>>(),
                "count": items.len().to_string(),
                "nu": nu,
                "self_inverse": self_inverse,
            });
            if let Some(m) = parts {
                doc["parts"] = json!(m);
            }
            write_json(out, &doc)?;
        }
    }
    Ok(0)
}

/// Closed-form count for the `count` subcommand, never enumerating.
fn closed_count(nu: u64, self_inverse: bool, parts: Option<u64>) -> Result<BigUint, Failure> {
    // More parts than weight is impossible, and skipping that case keeps
    // the index arithmetic below in range.
    let too_large = || Failure::Usage(format!("weight {nu} is too large to count"));
    let count = match (self_inverse, parts) {
        (false, None) => fibonacci(nu.checked_mul(2).ok_or_else(too_large)?),
        (_, Some(m)) if m == 0 || m > nu => BigUint::zero(),
        (false, Some(m)) => {
            let top = nu.checked_add(m - 1).filter(|&t| t <= i64::MAX as u64);
            let top = top.ok_or_else(too_large)?;
            binomial(top as i64, (2 * m - 1) as i64)
        }
        (true, None) => {
            if nu == 0 {
                BigUint::zero()
            } else if nu % 2 == 1 {
                seq(SequenceId::A, (nu - 1) / 2)?
            } else {
                seq(SequenceId::D, nu / 2)?
            }
        }
        (true, Some(m)) => count_a(m, nu),
    };
    Ok(count)
}

fn run_count(
    nu: u64,
    self_inverse: bool,
    parts: Option<u64>,
    cross_check: bool,
    force: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let count = closed_count(nu, self_inverse, parts)?;
    if cross_check {
        let narrow = u32::try_from(nu)
            .map_err(|_| Failure::Usage(format!("weight {nu} is too large to cross-check")))?;
        check_ceiling(narrow, force)?;
        let enumerated = match parts {
            Some(m) => {
                let m = u32::try_from(m).unwrap_or(u32::MAX);
                compositions_with_parts(narrow, m)
                    .filter(|c| !self_inverse || c.is_self_inverse())
                    .count()
            }
            None => compositions(narrow)
                .filter(|c| !self_inverse || c.is_self_inverse())
                .count(),
        };
        if BigUint::from(enumerated as u64) != count {
            return Err(Failure::Usage(format!(
                "cross-check failed: closed form gives {count}, enumeration gives {enumerated}"
            )));
        }
    }
    match format {
        OutputFormat::Plain => writeln!(out, "{count}")?,
        OutputFormat::Csv => {
            writeln!(out, "count")?;
            writeln!(out, "{count}")?;
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "count": count.to_string(),
                "nu": nu,
                "self_inverse": self_inverse,
            });
            if let Some(m) = parts {
                doc["parts"] = json!(m);
            }
            if cross_check {
                doc["cross_checked"] = json!(true);
            }
            write_json(out, &doc)?;
        }
    }
    Ok(0)
}

fn run_seq(
    id: SequenceId,
    start: Option<u64>,
    len: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let start = start.unwrap_or_else(|| id.first_index());
    let window = seq_window(id, start, len)?;
    match format {
        OutputFormat::Plain => {
            for value in &window.values {
                writeln!(out, "{value}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (offset, value) in window.values.iter().enumerate() {
                writeln!(out, "{},{}", start + offset as u64, value)?;
            }
        }
        OutputFormat::Json => {
            let values: Vec<Value> = window
                .values
                .iter()
                .map(|v| Value::String(v.to_string()))
                .collect();
            write_json(out, &Value::Array(values))?;
        }
    }
    Ok(0)
}

fn parse_poly(text: &str, role: &str) -> Result<IntPolynomial, Failure> {
    let coeffs = text
        .split(',')
        .map(|tok| tok.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            Failure::Usage(format!(
                "cannot parse {role} `{text}`: expected comma-separated integers"
            ))
        })?;
    Ok(IntPolynomial::from_i64(&coeffs))
}

fn run_gf(
    id: Option<SequenceId>,
    parts: Option<u32>,
    num: Option<String>,
    den: Option<String>,
    terms: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let series: RationalSeries = match (id, parts, &num) {
        (Some(id), None, None) => gf_of(id),
        (None, Some(m), None) => {
            if m == 0 {
                return Err(Failure::Usage("--parts must be at least 1".to_owned()));
            }
            gf_compositions_m(m)
        }
        (None, None, Some(num_text)) => {
            let den_text = den.as_deref().expect("clap enforces --den with --num");
            RationalSeries::new(
                parse_poly(num_text, "numerator")?,
                parse_poly(den_text, "denominator")?,
            )?
        }
        _ => {
            return Err(Failure::Usage(
                "select exactly one series: a sequence id, --parts M, or --num/--den".to_owned(),
            ))
        }
    };
    let coefficients = expand(&series, terms)?;
    match format {
        OutputFormat::Plain => {
            for (n, c) in coefficients.iter().enumerate() {
                writeln!(out, "{n} {c}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,coefficient")?;
            for (n, c) in coefficients.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        OutputFormat::Json => {
            let strings = |poly: &IntPolynomial| -> Vec<Value> {
                poly.coeffs()
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect()
            };
            let mut doc = json!({
                "coefficients": coefficients
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect::<Vec<_>>(),
                "den": strings(series.denominator()),
                "num": strings(series.numerator()),
                "terms": terms,
            });
            if let Some(id) = id {
                doc["id"] = json!(id.to_string());
            }
            if let Some(m) = parts {
                doc["parts"] = json!(m);
            }
            write_json(out, &doc)?;
        }
    }
    Ok(0)
}

fn run_verify(
    identity: IdentityKind,
    max: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let reports = sweep(identity, max);
    let held = reports.iter().filter(|r| r.holds).count();
    let total = reports.len();
    match format {
        OutputFormat::Plain => {
            for r in &reports {
                let status = if r.holds { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{} index={} lhs={} rhs={} {status}",
                    r.identity, r.index, r.lhs, r.rhs
                )?;
            }
            writeln!(out, "{held}/{total} hold")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "identity,index,lhs,rhs,holds")?;
            for r in &reports {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.identity, r.index, r.lhs, r.rhs, r.holds
                )?;
            }
        }
        OutputFormat::Json => {
            let report_json = |r: &IdentityReport| {
                json!({
                    "holds": r.holds,
                    "index": r.index,
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                })
            };
            let doc = json!({
                "held": held,
                "identity": identity.label(),
                "max": max,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                "total": total,
            });
            write_json(out, &doc)?;
        }
    }
    Ok(if held == total { 0 } else { 1 })
}

fn run_paths(
    nu: u32,
    k: Option<u32>,
    enumerate: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if enumerate {
        let k = k.expect("clap enforces --k with --enumerate");
        let paths = enumerate_paths(nu, k);
        match format {
            OutputFormat::Plain => {
                for p in &paths {
                    writeln!(out, "{p}")?;
                }
            }
            OutputFormat::Csv => {
                writeln!(out, "path")?;
                for p in &paths {
                    writeln!(out, "{p}")?;
                }
            }
            OutputFormat::Json => {
                let doc = json!({
                    "k": k,
                    "nu": nu,
                    "paths": paths
                        .iter()
                        .map(|p| Value::String(p.to_string()))
                        .collect::<Vec<_>>(),
                });
                write_json(out, &doc)?;
            }
        }
        return Ok(0);
    }

    if let Some(k) = k {
        let row = d_count(nu, k);
        match format {
            OutputFormat::Plain => writeln!(out, "{}", row.count)?,
            OutputFormat::Csv => {
                writeln!(out, "nu,k,count")?;
                writeln!(out, "{nu},{k},{}", row.count)?;
            }
            OutputFormat::Json => {
                let doc = json!({
                    "count": row.count.to_string(),
                    "k": k,
                    "nu": nu,
                });
                write_json(out, &doc)?;
            }
        }
        return Ok(0);
    }

    // Full triangle: one row per weight index up to nu, with row totals.
    let rows: Vec<Vec<BigUint>> = (0..=nu)
        .map(|row_nu| (0..=row_nu).map(|k| d_count(row_nu, k).count).collect())
        .collect();
    let totals: Vec<BigUint> = rows.iter().map(|row| row.iter().sum()).collect();
    match format {
        OutputFormat::Plain => {
            let mut width = rows
                .iter()
                .flatten()
                .map(|c| c.to_string().len())
                .max()
                .unwrap_or(1);
            if let Some(hint) = std::env::var("NCC_WIDTH")
                .ok()
                .and_then(|w| w.parse::<usize>().ok())
            {
                width = width.max(hint);
            }
            for (row, total) in rows.iter().zip(&totals) {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{} | {}", cells.join(" "), total)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "nu,k,count")?;
            for (row_nu, row) in rows.iter().enumerate() {
                for (k, count) in row.iter().enumerate() {
                    writeln!(out, "{row_nu},{k},{count}")?;
                }
            }
        }
        OutputFormat::Json => {
            let mut row_docs = Vec::new();
            for (row_nu, row) in rows.iter().enumerate() {
                for (k, count) in row.iter().enumerate() {
                    row_docs.push(json!({
                        "count": count.to_string(),
                        "k": k,
                        "nu": row_nu,
                    }));
                }
            }
            let doc = json!({
                "nu": nu,
                "rows": row_docs,
                "totals": totals
                    .iter()
                    .map(|t| Value::String(t.to_string()))
                    .collect::<Vec<_>>(),
            });
            write_json(out, &doc)?;
        }
    }
    Ok(0)
}

fn run_bijection(
    n: u32,
    trace: bool,
    force: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if n > BIJECTION_CEILING && !force {
        return Err(Failure::Usage(format!(
            "bijection instance n={n} exceeds the practical ceiling of {BIJECTION_CEILING}; \
             pass --force to proceed anyway"
        )));
    }
    let summary = verify_bijection(n)?;
    let trace_rows = if trace {
        let mut rows = Vec::new();
        for source in domain(n)? {
            let class = classify(&source, n)?;
            let image = forward(&source, n)?;
            rows.push((source, class, image));
        }
        Some(rows)
    } else {
        None
    };

    let ok = summary.is_valid();
    match format {
        OutputFormat::Plain => {
            if let Some(rows) = &trace_rows {
                for (source, class, image) in rows {
                    writeln!(
                        out,
                        "{} | {} | {class} | {image}",
                        source.origin, source.composition
                    )?;
                }
            }
            writeln!(
                out,
                "n={} expected={} class_i={} class_ii={} class_iii={} round_trip_failures={} {}",
                summary.n,
                summary.expected,
                summary.class_counts[0],
                summary.class_counts[1],
                summary.class_counts[2],
                summary.round_trip_failures,
                if ok { "ok" } else { "FAIL" }
            )?;
        }
        OutputFormat::Csv => {
            if let Some(rows) = &trace_rows {
                writeln!(out, "origin,source,class,image")?;
                for (source, class, image) in rows {
                    writeln!(
                        out,
                        "{},{},{class},{image}",
                        source.origin, source.composition
                    )?;
                }
            } else {
                writeln!(out, "n,expected,class_i,class_ii,class_iii,round_trip_failures,ok")?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{ok}",
                    summary.n,
                    summary.expected,
                    summary.class_counts[0],
                    summary.class_counts[1],
                    summary.class_counts[2],
                    summary.round_trip_failures,
                )?;
            }
        }
        OutputFormat::Json => {
            let mut doc = json!({
                "class_counts": summary
                    .class_counts
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect::<Vec<_>>(),
                "expected": summary.expected.to_string(),
                "n": summary.n,
                "ok": ok,
                "round_trip_failures": summary.round_trip_failures,
            });
            if let Some(rows) = &trace_rows {
                doc["trace"] = Value::Array(
                    rows.iter()
                        .map(|(source, class, image)| {
                            json!({
                                "class": class.to_string(),
                                "image": image.to_string(),
                                "origin": source.origin.to_string(),
                                "source": source.composition.to_string(),
                            })
                        })
                        .collect(),
                );
            }
            write_json(out, &doc)?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}
