//! `aag`: analysis of AAG semigroups from the command line.

mod output;
mod span;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use aag_core::grobner::order_by_name;
use aag_core::oracle::OracleReport;
use aag_core::report::{analyze, AnalysisOptions};
use aag_core::scan::{scan, verify, PivotFilter, ScanEvent, ScanSpec, Span};
use aag_core::{build_table, validate_params, AagError, Int};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use output::{analysis_json, analysis_text, csv_row, oracle_json, table_json, Num, RecordJson, CSV_HEADER};
use span::parse_span;

const EXIT_MISMATCH: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "aag", version, about = "Euclid tables, Apery sets and pseudo-Frobenius numbers of AAG semigroups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyse one tuple (a, d, h, k, c).
    Analyze(AnalyzeArgs),
    /// Classify every tuple of a grid and emit records.
    Scan(ScanArgs),
    /// Check the closed forms against the oracle over a grid.
    Verify(VerifyArgs),
    /// Print the Euclid table of one tuple.
    Table(TupleArgs),
    /// Shortest-path oracle for an arbitrary generator list.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct TupleArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: Int,
    #[arg(long, allow_negative_numbers = true)]
    d: Int,
    #[arg(long, allow_negative_numbers = true)]
    h: Int,
    #[arg(long, allow_negative_numbers = true)]
    k: Int,
    #[arg(long, allow_negative_numbers = true)]
    c: Int,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    tuple: TupleArgs,
    /// List the Apery set points (y, z, phi).
    #[arg(long)]
    apery: bool,
    /// Build and certify the Groebner basis.
    #[arg(long)]
    grobner: bool,
    /// Try the quadratic fast path before the table classification.
    #[arg(long)]
    fast: bool,
    /// Cross-check against the shortest-path oracle.
    #[arg(long)]
    oracle_verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Strict,
    Hypothesis,
    None,
}

impl From<FilterArg> for PivotFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Strict => PivotFilter::Strict,
            FilterArg::Hypothesis => PivotFilter::Hypothesis,
            FilterArg::None => PivotFilter::None,
        }
    }
}

#[derive(Args)]
struct GridArgs {
    /// Range for a: N, START..END or START..END:STEP (inclusive).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    a: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    d: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    c: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    k: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    h: Span,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write records here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Which pivots to analyse; tuples outside are skipped.
    #[arg(long, value_enum, default_value = "none")]
    pivot_filter: FilterArg,
    /// Only tuples with r'_mu >= h (same as --pivot-filter strict).
    #[arg(long, conflicts_with = "pivot_filter")]
    hypothesis_only: bool,
    /// Cross-check every record against the oracle.
    #[arg(long)]
    oracle_verify: bool,
    /// Classify with the quadratic fast path only.
    #[arg(long)]
    fast_only: bool,
    /// Emit every analysed tuple, not only almost symmetric ones.
    #[arg(long)]
    all: bool,
    /// Break the skip count down by reason.
    #[arg(long)]
    explain_skips: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Monomial order used for the Groebner certificate.
    #[arg(long, default_value = "degrevlex", value_parser = ["degrevlex", "inverted"])]
    order: String,
    /// Only tuples with r'_mu >= h instead of the full hypothesis.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Comma separated generators.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    gens: Vec<Int>,
    /// Modulus for the Apery map (default: smallest generator).
    #[arg(long)]
    modulus: Option<Int>,
    /// Include the full Apery map.
    #[arg(long)]
    apery: bool,
}

enum Failure {
    Mismatch(String),
    Validation(AagError, bool),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn classify_err(e: AagError, json: bool) -> Failure {
    let user_error = e.is_validation()
        || matches!(
            e,
            AagError::Overflow(_) | AagError::HypothesisViolated { .. } | AagError::ModulusTooLarge { .. }
        );
    if user_error {
        Failure::Validation(e, json)
    } else {
        Failure::Other(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.cmd {
        Cmd::Analyze(a) => cmd_analyze(a),
        Cmd::Scan(s) => cmd_scan(s),
        Cmd::Verify(v) => cmd_verify(v),
        Cmd::Table(t) => cmd_table(t),
        Cmd::Oracle(o) => cmd_oracle(o),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Validation(e, json)) => {
            if json {
                println!("{}", json!({"error": e.kind(), "reason": e.to_string()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn params(t: &TupleArgs) -> Result<aag_core::AagParams, Failure> {
    validate_params(t.a, t.d, t.h, t.k, t.c).map_err(|e| classify_err(e, t.json))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let json = args.tuple.json;
    let p = params(&args.tuple)?;
    let opts = AnalysisOptions {
        fast: args.fast,
        grobner: args.grobner,
        oracle_verify: args.oracle_verify,
    };
    let rep = analyze(&p, opts).map_err(|e| classify_err(e, json))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if json {
        serde_json::to_writer_pretty(&mut out, &analysis_json(&rep, args.apery)).map_err(anyhow::Error::from)?;
        writeln!(out)?;
    } else {
        analysis_text(&rep, args.apery, &mut out)?;
    }
    if let Some(o) = &rep.oracle {
        if !o.agrees() {
            return Err(Failure::Mismatch(format!("closed forms disagree with the oracle for {p}")));
        }
    }
    if rep.basis_certified == Some(false) {
        return Err(Failure::Mismatch(format!("groebner certificate failed for {p}")));
    }
    Ok(())
}

fn spec_from(grid: &GridArgs) -> ScanSpec {
    ScanSpec::new(grid.a, grid.d, grid.c, grid.k, grid.h)
}

fn cmd_scan(args: ScanArgs) -> Result<(), Failure> {
    let mut spec = spec_from(&args.grid);
    spec.filter = if args.hypothesis_only {
        PivotFilter::Strict
    } else {
        args.pivot_filter.into()
    };
    spec.all = args.all;
    spec.oracle_verify = args.oracle_verify;
    spec.fast_only = args.fast_only;
    eprintln!("scanning {} tuples", spec.total());

    let sink: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(File::create(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let mut disagreements = 0usize;
    let summary = match args.format {
        Format::Json => scan(&spec, args.grid.workers, |ev| {
            match ev {
                ScanEvent::Record(r) => {
                    disagreements += (r.oracle_agrees == Some(false)) as usize;
                    serde_json::to_writer(&mut out, &RecordJson::new(r))?;
                }
                ScanEvent::Error { tuple: (a, d, c, k, h), message } => {
                    let v = json!({"a": Num(a), "d": Num(d), "c": Num(c), "k": Num(k), "h": Num(h), "error": message});
                    serde_json::to_writer(&mut out, &v)?;
                }
            }
            writeln!(out)
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(CSV_HEADER).map_err(anyhow::Error::from)?;
            let s = scan(&spec, args.grid.workers, |ev| {
                match ev {
                    ScanEvent::Record(r) => {
                        disagreements += (r.oracle_agrees == Some(false)) as usize;
                        w.write_record(csv_row(r)).map_err(io::Error::from)
                    }
                    ScanEvent::Error { tuple, message } => {
                        eprintln!("error at {tuple:?}: {message}");
                        Ok(())
                    }
                }
            });
            w.flush()?;
            s
        }
    }
    .map_err(|e| classify_err(e, false))?;
    out.flush()?;

    let skipped: usize = summary.skipped.values().sum();
    eprintln!(
        "total {}, analysed {}, records {}, skipped {}, errors {}",
        summary.total,
        summary.analysed,
        summary.records,
        skipped,
        summary.errors.len()
    );
    if args.explain_skips {
        for (reason, n) in &summary.skipped {
            eprintln!("  skipped {reason}: {n}");
        }
    }
    if spec.oracle_verify {
        eprintln!("oracle disagreements: {disagreements}");
        if disagreements > 0 {
            return Err(Failure::Mismatch(format!("{disagreements} records disagree with the oracle")));
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let mut spec = spec_from(&args.grid);
    spec.filter = if args.strict {
        PivotFilter::Strict
    } else {
        PivotFilter::Hypothesis
    };
    let order = order_by_name(&args.order).expect("clap restricts the order names");
    let s = verify(&spec, args.grid.workers, order.as_ref()).map_err(|e| classify_err(e, false))?;
    let first = s.first_failure.as_ref().map(|((a, d, c, k, h), checks)| {
        json!({"a": Num(*a), "d": Num(*d), "c": Num(*c), "k": Num(*k), "h": Num(*h), "checks": checks})
    });
    if args.json {
        let v = json!({
            "order": order.name(),
            "total": s.total,
            "checked": s.checked,
            "skipped": s.skipped,
            "mismatches": s.mismatches,
            "almost_symmetric": s.almost_symmetric,
            "fast_hits": s.fast_hits,
            "first_failure": first,
        });
        println!("{}", serde_json::to_string_pretty(&v).map_err(anyhow::Error::from)?);
    } else {
        println!("order {}: total {}, checked {}, mismatches {}", order.name(), s.total, s.checked, s.total_mismatches());
        println!("almost symmetric {}, fast path hits {}", s.almost_symmetric, s.fast_hits);
        for (reason, n) in &s.skipped {
            println!("  skipped {reason}: {n}");
        }
        for (check, n) in &s.mismatches {
            println!("  mismatch {check}: {n}");
        }
    }
    match &s.first_failure {
        None => Ok(()),
        Some((tuple, checks)) => Err(Failure::Mismatch(format!(
            "{} failed checks; first (a, d, c, k, h) = {tuple:?}: {}",
            s.total_mismatches(),
            checks.join(", ")
        ))),
    }
}

fn cmd_table(args: TupleArgs) -> Result<(), Failure> {
    let p = params(&args)?;
    let t = build_table(&p).map_err(|e| classify_err(e, args.json))?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&table_json(&t)).map_err(anyhow::Error::from)?);
    } else {
        print!("{}", t.render());
    }
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<(), Failure> {
    let rep = match args.modulus {
        Some(m) => OracleReport::with_modulus(&args.gens, m),
        None => OracleReport::new(&args.gens),
    }
    .map_err(|e| classify_err(e, true))?;
    println!("{}", serde_json::to_string_pretty(&oracle_json(&rep, args.apery)).map_err(anyhow::Error::from)?);
    Ok(())
}
