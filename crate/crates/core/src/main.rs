use std::collections::BTreeSet;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use hookcontent::formulas::{principal_spec_closed, ExcitedShape};
use hookcontent::harness::{self, Check, SweepConfig};
use hookcontent::oracles::{Oracle, OracleLimits};
use hookcontent::{Error, QPoly, QRat, Result, SkewShape};

#[derive(Parser)]
#[command(name = "hookcontent", version, about = "Hook-length and hook-content formulas for skew shapes")]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the excited diagrams of a shape, one per line.
    Eyd {
        shape: SkewShape,
        /// Print only the number of diagrams.
        #[arg(long)]
        count: bool,
    },
    /// Number of standard tableaux from the hook-length sum.
    Count {
        shape: SkewShape,
        /// Cross-check by brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// The reduced q-analog f_q.
    Fq { shape: SkewShape },
    /// H(n; q), H(n; q)/[m]_q! and Hbar(n).
    Hc {
        shape: SkewShape,
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
        /// Also compute the literal excited-diagram sum and compare.
        #[arg(long)]
        both_sides: bool,
        /// Accept n below the length of the outer partition.
        #[arg(long)]
        allow_below_length: bool,
    },
    /// Principal specializations: closed form at n variables, or the
    /// infinite specialization as a truncated series.
    Spec {
        shape: SkewShape,
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Print the series s(1, q, q^2, ...) through q^N.
        #[arg(long)]
        series: bool,
        #[arg(short = 'N', default_value_t = 20)]
        order: usize,
    },
    /// Littlewood-Richardson expansion and the resulting identity for f.
    Lr { shape: SkewShape },
    /// Screen every mu inside lambda with |lambda| up to a bound.
    Sweep {
        #[arg(long)]
        max_size: usize,
        /// Comma-separated checks; all when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Inclusive offsets a..b added to the length of lambda.
        #[arg(long, default_value = "0..3", value_parser = parse_offsets)]
        n_offsets: RangeInclusive<i64>,
        /// Order of the series checks.
        #[arg(long, default_value_t = 20)]
        truncation: usize,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Report file; appended to and resumed from.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Record per-check running times.
        #[arg(long)]
        timings: bool,
        /// Largest shape for standard-tableau and LR enumeration.
        #[arg(long, default_value_t = OracleLimits::default().syt_cells)]
        syt_limit: usize,
        /// Largest shape for semistandard enumeration.
        #[arg(long, default_value_t = OracleLimits::default().ssyt_cells)]
        ssyt_limit: usize,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_offsets(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok(a..=b)
}

fn coeffs_json(p: &QPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from))
            .collect(),
    )
}

fn rat_json(r: &QRat) -> Value {
    json!({
        "num": coeffs_json(r.num()),
        "den": coeffs_json(r.den()),
        "rendered": r.to_string(),
    })
}

fn print_json(v: &Value) {
    println!("{v}");
}

fn eyd(shape: SkewShape, count: bool, json: bool) {
    let es = ExcitedShape::new(shape);
    let diagrams = es.diagrams();
    if json {
        let mut v = json!({ "shape": es.shape().to_string(), "count": diagrams.len() });
        if !count {
            v["diagrams"] = diagrams
                .iter()
                .map(|d| d.cells().map(|c| json!([c.row, c.col])).collect::<Value>())
                .collect();
        }
        print_json(&v);
    } else if count {
        println!("{}", diagrams.len());
    } else {
        for d in diagrams {
            println!("{d}");
        }
    }
}

fn count(shape: SkewShape, oracle: bool, json: bool) -> Result<bool> {
    let f = ExcitedShape::new(shape.clone()).naruse_f()?;
    let brute = if oracle { Some(Oracle::default().count_syt(&shape)?) } else { None };
    let agree = brute.as_ref().is_none_or(|b| *b == f);
    if json {
        let mut v = json!({ "shape": shape.to_string(), "f": f.to_string() });
        if let Some(b) = &brute {
            v["oracle"] = Value::String(b.to_string());
            v["match"] = Value::Bool(agree);
        }
        print_json(&v);
    } else {
        println!("{f}");
        if let Some(b) = &brute {
            println!("oracle {b} {}", if agree { "(match)" } else { "(MISMATCH)" });
        }
    }
    Ok(agree)
}

fn fq(shape: SkewShape, json: bool) {
    let es = ExcitedShape::new(shape);
    let f = es.f_q();
    if json {
        let mut v = rat_json(f);
        v["shape"] = Value::String(es.shape().to_string());
        print_json(&v);
    } else {
        println!("{f}");
    }
}

fn hc(shape: SkewShape, n: i64, both_sides: bool, allow_below: bool, json: bool) -> Result<()> {
    let es = ExcitedShape::new(shape).allow_below_length(allow_below);
    let r = es.hook_content(n, both_sides)?;
    let over = es.h_over_q_factorial(n)?;
    if json {
        print_json(&json!({
            "shape": r.shape.to_string(),
            "n": n,
            "H": rat_json(&r.h_product),
            "H_sum_checked": r.h_sum.is_some(),
            "H_over_qfact": rat_json(&over),
            "Hbar": r.hbar_at_1.to_string(),
        }));
    } else {
        println!("H       = {}", r.h_product);
        if r.h_sum.is_some() {
            println!("sum side matches product side");
        }
        println!("H/[m]!  = {over}");
        println!("Hbar    = {}", r.hbar_at_1);
    }
    Ok(())
}

fn spec(shape: SkewShape, n: Option<usize>, series: bool, order: usize, json: bool) -> Result<()> {
    if n.is_none() && !series {
        return Err(Error::InvalidConfig("spec needs -n or --series".into()));
    }
    let mut v = json!({ "shape": shape.to_string() });
    if let Some(n) = n {
        if !shape.inner().is_empty() {
            return Err(Error::InvalidConfig("the closed form needs a straight shape".into()));
        }
        let closed = principal_spec_closed(shape.outer(), n);
        if json {
            v["n"] = json!(n);
            v["closed"] = rat_json(&closed);
        } else {
            println!("{closed}");
        }
    }
    if series {
        let s = ExcitedShape::new(shape).spec_series(order);
        if json {
            v["order"] = json!(order);
            v["series"] = coeffs_json(&s.to_poly());
        } else {
            println!("{s}");
        }
    }
    if json {
        print_json(&v);
    }
    Ok(())
}

fn lr(shape: SkewShape, json: bool) -> Result<bool> {
    let coeffs = Oracle::default().lr_coefficients(shape.outer(), shape.inner())?;
    let f = ExcitedShape::new(shape.clone()).naruse_f()?;
    let mut total = BigInt::from(0);
    let mut rows = Vec::new();
    for (nu, c) in &coeffs {
        let f_nu = ExcitedShape::new(SkewShape::straight(nu.clone())).naruse_f()?;
        total += &f_nu * c;
        rows.push((nu.clone(), *c, f_nu));
    }
    let holds = total == f;
    if json {
        print_json(&json!({
            "shape": shape.to_string(),
            "coefficients": rows.iter().map(|(nu, c, f_nu)| json!({
                "nu": nu, "c": c, "f": f_nu.to_string(),
            })).collect::<Vec<_>>(),
            "f": f.to_string(),
            "sum": total.to_string(),
            "holds": holds,
        }));
    } else {
        println!("{:<16} {:>6} {:>10}", "nu", "c", "f^nu");
        for (nu, c, f_nu) in &rows {
            println!("{:<16} {:>6} {:>10}", nu.to_string(), c, f_nu.to_string());
        }
        println!("f = {f}; sum c*f^nu = {total} {}", if holds { "(holds)" } else { "(FAILS)" });
    }
    Ok(holds)
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    max_size: usize,
    checks: Vec<Check>,
    n_offsets: RangeInclusive<i64>,
    truncation: usize,
    workers: usize,
    output: Option<PathBuf>,
    timings: bool,
    limits: OracleLimits,
    json: bool,
) -> Result<bool> {
    let checks: BTreeSet<Check> = if checks.is_empty() { Check::ALL.into_iter().collect() } else { checks.into_iter().collect() };
    let config = SweepConfig {
        max_lambda_size: max_size,
        n_offsets,
        truncation,
        checks,
        workers,
        output_path: output,
        json,
        timings,
        limits,
    };
    let summary = harness::sweep(&config)?;
    let mut err = io::stderr().lock();
    if !summary.fails.is_empty() {
        let _ = writeln!(err, "!!! {} FAIL record(s):", summary.fails.len());
        for key in &summary.fails {
            let _ = writeln!(err, "!!!   {key}");
        }
    }
    let _ = writeln!(err, "summary: {summary}");
    Ok(summary.fails.is_empty())
}

fn run(cli: Cli) -> Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Eyd { shape, count: c } => {
            eyd(shape, c, json);
            Ok(true)
        }
        Command::Count { shape, oracle } => count(shape, oracle, json),
        Command::Fq { shape } => {
            fq(shape, json);
            Ok(true)
        }
        Command::Hc {
            shape,
            n,
            both_sides,
            allow_below_length,
        } => hc(shape, n, both_sides, allow_below_length, json).map(|_| true),
        Command::Spec { shape, n, series, order } => spec(shape, n, series, order, json).map(|_| true),
        Command::Lr { shape } => lr(shape, json),
        Command::Sweep {
            max_size,
            checks,
            n_offsets,
            truncation,
            workers,
            output,
            timings,
            syt_limit,
            ssyt_limit,
        } => sweep(
            max_size,
            checks,
            n_offsets,
            truncation,
            workers,
            output,
            timings,
            OracleLimits {
                syt_cells: syt_limit,
                ssyt_cells: ssyt_limit,
            },
            json,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
