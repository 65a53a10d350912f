use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Number, Value};

use cjp_core::bench::{run_bench, write_csv, BenchConfig};
use cjp_core::oracle::naive_colored_jones;
use cjp_core::par::with_threads;
use cjp_core::table::KnotTable;
use cjp_core::{colored_jones, BraidWord, CjpOptions, Error, LaurentPolynomial};

#[derive(Parser)]
#[command(
    name = "cjp",
    version,
    about = "Colored Jones polynomials of closed braids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute J_N of one knot.
    Compute(ComputeArgs),
    /// Time the engine over the knot table and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["braid", "knot"])))]
struct ComputeArgs {
    /// Braid word as space separated signed generator indices, e.g. "-1 2 -1 2".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Knot name from the table, e.g. 4_1.
    #[arg(long)]
    knot: Option<String>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    color: u32,
    /// Strand count, when larger than the braid word implies.
    #[arg(long)]
    strands: Option<usize>,
    /// Also evaluate at this complex number, e.g. "0.5+1i".
    #[arg(long, allow_hyphen_values = true)]
    eval_q: Option<Complex64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    no_mirror_opt: bool,
    #[arg(long)]
    no_drl: bool,
    /// Use the brute-force reference implementation.
    #[arg(long, hide = true)]
    oracle: bool,
    /// Knot table CSV (name,crossings,braid) replacing the bundled one.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 9)]
    max_crossings: u32,
    /// Comma separated colors.
    #[arg(long, value_delimiter = ',', default_value = "2",
          value_parser = clap::value_parser!(u32).range(1..))]
    colors: Vec<u32>,
    /// Also count walks without pruning.
    #[arg(long)]
    with_no_drl: bool,
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Run knots one after another instead of concurrently.
    #[arg(long)]
    sequential_knots: bool,
    /// Time each computation this many times and keep the fastest.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    repeats: u32,
}

fn load_table(path: &Option<PathBuf>) -> Result<KnotTable, Error> {
    match path {
        Some(p) => KnotTable::load(p),
        None => Ok(KnotTable::bundled()),
    }
}

fn exit_code(err: &Error) -> ExitCode {
    match err {
        Error::NotAKnot { .. } => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    exit_code(&err)
}

fn terms_json(p: &LaurentPolynomial) -> Value {
    p.terms()
        .map(|(exp, c)| {
            let coeff: Number = c.to_string().parse().expect("integer literal");
            json!({ "exp": exp, "coeff": coeff })
        })
        .collect()
}

fn compute(args: ComputeArgs) -> Result<String, Error> {
    let (input, text) = match (&args.braid, &args.knot) {
        (Some(b), _) => (b.clone(), b.clone()),
        (None, Some(name)) => {
            let table = load_table(&args.table)?;
            (name.clone(), table.lookup(name)?.braid.clone())
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let braid = BraidWord::parse(&text, args.strands)?;
    braid.require_knot()?;
    let n = args.color;

    let start = Instant::now();
    let (polynomial, meta) = if args.oracle {
        let p = with_threads(args.threads, || naive_colored_jones(&braid, n))?;
        let framing = (n as i64 - 1) * (braid.writhe() - braid.strands() as i64 + 1) / 2;
        let meta = json!({
            "mirror_used": false,
            "framing_exponent": framing,
            "heights_summed": Value::Null,
            "simple_walks": Value::Null,
        });
        (p, meta)
    } else {
        let opts = CjpOptions {
            mirror_opt: !args.no_mirror_opt,
            drl: !args.no_drl,
            max_height: None,
        };
        let r = with_threads(args.threads, || colored_jones(&braid, n, opts))?;
        let meta = json!({
            "mirror_used": r.mirror_used,
            "framing_exponent": r.framing_exponent,
            "heights_summed": r.heights_summed,
            "simple_walks": r.simple_walk_count,
        });
        (r.polynomial, meta)
    };
    let time_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    let value = args.eval_q.map(|z| polynomial.eval_at(z)).transpose()?;

    Ok(match args.format {
        Format::Text => {
            let mut out = format!("{polynomial}\n");
            if let Some(v) = value {
                out.push_str(&format!("{v}\n"));
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "input": input,
                "n": n,
                "terms": terms_json(&polynomial),
                "time_ms": time_ms,
            });
            let map = obj.as_object_mut().expect("object");
            for (k, v) in meta.as_object().expect("object") {
                map.insert(k.clone(), v.clone());
            }
            if let Some(v) = value {
                map.insert("value".into(), json!({ "re": v.re, "im": v.im }));
            }
            format!("{obj}\n")
        }
    })
}

fn bench(args: BenchArgs) -> Result<(), Error> {
    let table = load_table(&args.table)?;
    let records = table.up_to(args.max_crossings);
    let config = BenchConfig {
        colors: args.colors,
        with_no_drl: args.with_no_drl,
        knots_in_parallel: !args.sequential_knots,
        repeats: args.repeats as usize,
    };
    let rows = with_threads(args.threads, || run_bench(&records, &config))?;
    write_csv(&rows, std::io::stdout().lock())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Compute(args) => match compute(args) {
            Ok(out) => {
                let _ = std::io::stdout().lock().write_all(out.as_bytes());
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Bench(args) => match bench(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
    }
}
