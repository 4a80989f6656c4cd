use std::fmt::Write as _;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fano_lg::{
    f_closed, f_rec, fano_sweep, g_closed, g_rec, hodge_h1, k_lg, resolution_trace,
    verify_main_theorem, verify_period, ChartType, CompleteIntersection, ExactInt, TheoremReport,
};
use serde::Serialize;
use serde_json::Value;

/// Largest `d` or `s` accepted by `fg`; the recursion depth grows linearly in `d`.
const FG_MAX: i64 = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "fano-lg",
    version,
    about = "Hodge numbers and Landau-Ginzburg component counts of Fano complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h^{1,N-1}, its primitive part and the Jacobian ring dimensions.
    Hodge(CiArgs),
    /// Components of the central fiber of the compactified LG model.
    Klg {
        #[command(flatten)]
        ci: CiArgs,
        /// Include the per-stratum breakdown.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Check that h^{1,N-1} matches k_LG (exit 1 if not).
    Verify(CiArgs),
    /// Compare constant terms of f_X with the I-series (exit 1 on mismatch).
    Periods {
        #[command(flatten)]
        ci: CiArgs,
        /// Truncation order; defaults to three times the index.
        #[arg(long)]
        order: Option<usize>,
    },
    /// F(d,s) and G(d,s) by recursion and closed form (exit 1 if they differ).
    Fg {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chart tree of the blow-up procedure for L_{dbar,s}.
    ResolveTrace {
        /// Comma-separated exponents of the a variables.
        #[arg(long, alias = "d", value_delimiter = ',', required = true)]
        dbar: Vec<u32>,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 1_000_000)]
        node_limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Table over every Fano complete intersection in a range.
    Sweep {
        #[arg(long, default_value_t = 2)]
        min_dim: u32,
        #[arg(long, default_value_t = 8)]
        max_dim: u32,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct CiArgs {
    /// Dimension N of X.
    #[arg(long)]
    dim: u32,
    /// Comma-separated degrees d_1,..,d_k.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

struct Outcome {
    output: String,
    ok: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Hodge(args) => hodge(args),
        Command::Klg { ci, verbose } => klg(ci, verbose),
        Command::Verify(args) => verify(args),
        Command::Periods { ci, order } => periods(ci, order),
        Command::Fg { d, s, format } => fg(d, s, format),
        Command::ResolveTrace {
            dbar,
            s,
            node_limit,
            format,
        } => trace(dbar, s, node_limit, format),
        Command::Sweep {
            min_dim,
            max_dim,
            max_k,
            max_degree,
            format,
        } => sweep(min_dim, max_dim, max_k, max_degree, format),
    }
}

impl CiArgs {
    fn build(&self, allowed: &[Format]) -> Result<CompleteIntersection, String> {
        check_format(self.format, allowed)?;
        CompleteIntersection::new(self.dim, self.degrees.clone()).map_err(|e| e.to_string())
    }
}

fn check_format(format: Format, allowed: &[Format]) -> Result<(), String> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<_> = allowed
            .iter()
            .map(|f| format!("{f:?}").to_lowercase())
            .collect();
        Err(format!(
            "format {:?} is not available here (use {})",
            format,
            names.join(" or ")
        )
        .to_lowercase())
    }
}

/// JSON with every number rewritten as a decimal string.
fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    stringify_numbers(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn stringify_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => *v = Value::String(n.to_string()),
        Value::Array(items) => items.iter_mut().for_each(stringify_numbers),
        Value::Object(map) => map.values_mut().for_each(stringify_numbers),
        _ => {}
    }
}

fn joined(degrees: &[u32], sep: &str) -> String {
    degrees
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn hodge(args: CiArgs) -> Result<Outcome, String> {
    let ci = args.build(&[Format::Text, Format::Json])?;
    let r = hodge_h1(&ci);
    if args.format == Format::Json {
        return Ok(Outcome::ok(to_json(&r)));
    }
    let mut out = String::new();
    writeln!(out, "{ci}  (N={}, index {})", ci.dim(), r.index).unwrap();
    writeln!(out, "dim R'_1   {}", r.dim_r_prime).unwrap();
    writeln!(out, "dim R_1    {}", r.dim_r).unwrap();
    writeln!(out, "h_pr       {}", r.h_pr).unwrap();
    writeln!(out, "h^{{1,{}}}     {}", ci.dim() - 1, r.h).unwrap();
    Ok(Outcome::ok(out))
}

fn klg(args: CiArgs, verbose: bool) -> Result<Outcome, String> {
    let ci = args.build(&[Format::Text, Format::Json])?;
    let mut report = k_lg(&ci);
    if !verbose {
        report.contributions.clear();
    }
    if args.format == Format::Json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut out = String::new();
    writeln!(out, "{ci}  (N={}, l={})", ci.dim(), ci.l()).unwrap();
    writeln!(out, "k_LG                      {}", report.k_lg).unwrap();
    writeln!(
        out,
        "central fiber components  {}",
        report.central_fiber_components
    )
    .unwrap();
    if verbose {
        writeln!(
            out,
            "\n{:>3}  {:<12} {:>12} {:>12} {:>12}",
            "j", "i", "strata", "divisors", "total"
        )
        .unwrap();
        for c in &report.contributions {
            writeln!(
                out,
                "{:>3}  {:<12} {:>12} {:>12} {:>12}",
                c.label.j,
                joined(&c.label.ivec, ","),
                c.multiplicity,
                c.per_stratum_divisors,
                c.total()
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn verify(args: CiArgs) -> Result<Outcome, String> {
    let ci = args.build(&[Format::Text, Format::Json])?;
    let r = verify_main_theorem(&ci);
    let output = if args.format == Format::Json {
        to_json(&r)
    } else {
        let relation = if ci.dim() == 2 {
            "h = k_LG + 1"
        } else {
            "h = k_LG"
        };
        format!(
            "{ci}: h={} h_pr={} k_LG={}  {relation}: {}\n",
            r.h,
            r.h_pr,
            r.k_lg,
            if r.holds { "holds" } else { "FAILS" }
        )
    };
    Ok(Outcome {
        output,
        ok: r.holds,
    })
}

fn periods(args: CiArgs, order: Option<usize>) -> Result<Outcome, String> {
    let ci = args.build(&[Format::Text, Format::Json])?;
    let order = order.unwrap_or(3 * ci.index() as usize);
    let r = verify_period(&ci, order);
    let output = if args.format == Format::Json {
        to_json(&r)
    } else {
        let mut out = String::new();
        writeln!(out, "{ci}: constant terms vs I-series up to t^{order}").unwrap();
        writeln!(out, "{:>4}  {:>24} {:>24}", "n", "phi_n", "I_n").unwrap();
        for (n, (a, b)) in r
            .phi
            .coefficients
            .iter()
            .zip(&r.i_series.coefficients)
            .enumerate()
        {
            let flag = if a == b { "" } else { "  <- mismatch" };
            writeln!(out, "{n:>4}  {a:>24} {b:>24}{flag}").unwrap();
        }
        if let Some(alpha) = &r.i_series.alpha {
            writeln!(out, "alpha = {alpha}").unwrap();
        }
        writeln!(out, "{}", if r.matches { "match" } else { "MISMATCH" }).unwrap();
        out
    };
    Ok(Outcome {
        output,
        ok: r.matches,
    })
}

#[derive(Serialize)]
struct FgReport {
    d: i64,
    s: u32,
    f_recursive: ExactInt,
    f_closed: ExactInt,
    g_recursive: ExactInt,
    g_closed: ExactInt,
    agree: bool,
}

fn fg(d: i64, s: u32, format: Format) -> Result<Outcome, String> {
    check_format(format, &[Format::Text, Format::Json])?;
    if d > FG_MAX || i64::from(s) > FG_MAX {
        return Err(format!("d and s must be at most {FG_MAX}"));
    }
    let r = FgReport {
        d,
        s,
        f_recursive: f_rec(d, s),
        f_closed: f_closed(d, s).map_err(|e| e.to_string())?,
        g_recursive: g_rec(d, s).map_err(|e| e.to_string())?,
        g_closed: g_closed(d, s).map_err(|e| e.to_string())?,
        agree: false,
    };
    let r = FgReport {
        agree: r.f_recursive == r.f_closed && r.g_recursive == r.g_closed,
        ..r
    };
    let output = if format == Format::Json {
        to_json(&r)
    } else {
        format!(
            "F({d},{s}) = {} (closed {})\nG({d},{s}) = {} (closed {})\n{}\n",
            r.f_recursive,
            r.f_closed,
            r.g_recursive,
            r.g_closed,
            if r.agree { "agree" } else { "DISAGREE" }
        )
    };
    Ok(Outcome {
        output,
        ok: r.agree,
    })
}

fn trace(dbar: Vec<u32>, s: u32, node_limit: usize, format: Format) -> Result<Outcome, String> {
    check_format(format, &[Format::Text, Format::Json, Format::Dot])?;
    let chart = ChartType::new(dbar, s).map_err(|e| e.to_string())?;
    let t = resolution_trace(&chart, node_limit).map_err(|e| e.to_string())?;
    let ok = t.weights_strictly_decrease() && t.all_leaves_terminal();
    let output = match format {
        Format::Json => to_json(&t),
        Format::Dot => t.to_dot(),
        _ => format!(
            "{chart}: {} stored nodes, {} charts unfolded, depth {}, {} leaves\nweights strictly decrease: {}\n",
            t.node_count(),
            t.expanded_chart_count(),
            t.depth(),
            t.leaves().count(),
            ok
        ),
    };
    Ok(Outcome { output, ok })
}

#[derive(Serialize)]
struct SweepRow {
    #[serde(rename = "N")]
    n: u32,
    degrees: Vec<u32>,
    index: u64,
    h_pr: ExactInt,
    h: ExactInt,
    k_lg: ExactInt,
    theorem_holds: bool,
}

impl From<TheoremReport> for SweepRow {
    fn from(r: TheoremReport) -> Self {
        SweepRow {
            n: r.dim,
            degrees: r.degrees,
            index: r.index,
            h_pr: r.h_pr,
            h: r.h,
            k_lg: r.k_lg,
            theorem_holds: r.holds,
        }
    }
}

fn sweep(
    min_dim: u32,
    max_dim: u32,
    max_k: usize,
    max_degree: u32,
    format: Format,
) -> Result<Outcome, String> {
    check_format(format, &[Format::Csv, Format::Json, Format::Text])?;
    if min_dim < 2 {
        return Err(format!(
            "dimension must be at least 2, got --min-dim {min_dim}"
        ));
    }
    if max_k == 0 {
        return Err("at least one equation is required (--max-k >= 1)".into());
    }
    let cases = fano_sweep(min_dim, max_dim, max_k, max_degree);
    let rows = evaluate_in_parallel(&cases);
    let ok = rows.iter().all(|r| r.theorem_holds);
    let output = match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = String::from("N,degrees,index,h_pr,h,k_lg,theorem_holds\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n,
                    joined(&r.degrees, "-"),
                    r.index,
                    r.h_pr,
                    r.h,
                    r.k_lg,
                    r.theorem_holds
                )
                .unwrap();
            }
            out
        }
        _ => {
            let mut out = format!(
                "{:>3}  {:<12} {:>5} {:>12} {:>12}  holds\n",
                "N", "degrees", "index", "h", "k_LG"
            );
            for r in &rows {
                writeln!(
                    out,
                    "{:>3}  {:<12} {:>5} {:>12} {:>12}  {}",
                    r.n,
                    joined(&r.degrees, ","),
                    r.index,
                    r.h,
                    r.k_lg,
                    r.theorem_holds
                )
                .unwrap();
            }
            out
        }
    };
    Ok(Outcome { output, ok })
}

/// Rows come back in the order of `cases`.
fn evaluate_in_parallel(cases: &[CompleteIntersection]) -> Vec<SweepRow> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(cases.len().max(1));
    let chunk = cases.len().div_ceil(workers).max(1);
    thread::scope(|scope| {
        let handles: Vec<_> = cases
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|c| SweepRow::from(verify_main_theorem(c)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}
