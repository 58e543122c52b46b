//! Batch front end: construction, spectral indices, bounds, polynomial
//! roots, exhaustive enumeration and claim verification.
//!
//! Exit codes: 0 success/pass, 1 usage or parse error, 2 verification
//! failure, 3 flagged/inconclusive, 4 numerical failure.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcf::bounds::{self, Polynomial};
use qcf::enumerate::{self, EnumSpec, IndexKind};
use qcf::error::Error;
use qcf::g6;
use qcf::graph::{self, Graph};
use qcf::spectral;
use qcf::verify::{self, Status, VerificationReport};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAIL: u8 = 2;
const EXIT_FLAGGED: u8 = 3;
const EXIT_NUMERICAL: u8 = 4;

#[derive(Parser)]
#[command(name = "qcf", version, about = "Spectral extremal toolkit for C4-free k-cyclic graphs")]
struct Cli {
    /// Worker threads for enumeration and batch index computation.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral indices of one graph.
    Compute(ComputeArgs),
    /// Closed-form bound reports for one graph.
    Bound(BoundArgs),
    /// Largest real root of a family polynomial.
    Root(RootArgs),
    /// Exhaustive isomorphism-free enumeration.
    Enumerate(EnumerateArgs),
    /// Claim verification over enumerated classes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WhichIndex {
    Q,
    Mu,
    Both,
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph source: constructor DSL (path:4, star:5, cycle:6,
    /// complete:4, gnk:7,2, u2:6,A, b2:8,B), `g6:<string>`, or
    /// `file:<path>`.
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = WhichIndex::Both)]
    index: WhichIndex,
    /// Residual tolerance for the eigensolver.
    #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct RootArgs {
    /// Polynomial: fk:<n>,<k> (cubic), f2:<n> or f3:<n> (quintics),
    /// or coeffs:<c0,c1,...> ascending.
    #[arg(long)]
    poly: String,
    /// Lower end of the bracket (defaults to the family's natural one).
    #[arg(long)]
    lo: Option<f64>,
    /// Upper end of the bracket.
    #[arg(long)]
    hi: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Keep only C4-free graphs.
    #[arg(long)]
    c4free: bool,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    min_degree: Option<usize>,
    /// Rank output by this index, descending, as CSV "g6,value".
    #[arg(long, value_enum)]
    rank: Option<RankIndex>,
    /// Keep only the top T rows of the ranking.
    #[arg(long)]
    top: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<String>,
    /// Write a per-graph table (canonical key, g6, n, m, max degree, q,
    /// mu, degree-mean bound) to this CSV file.
    #[arg(long)]
    csv: Option<String>,
    /// Use the edge-subset reference generator (n <= 7).
    #[arg(long)]
    naive: bool,
    /// Enumeration order ceiling (env QCF_ENUM_CEILING overrides the
    /// built-in default).
    #[arg(long)]
    ceiling: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RankIndex {
    Q,
    Mu,
}

#[derive(Args)]
struct VerifyArgs {
    /// thm3.1, thm3.2, thm3.3, lem2.1, lem2.2, lem2.3, lem2.4, rem3.4,
    /// proof3.1-edgecount, proof3.2-F, or all.
    #[arg(long)]
    claim: String,
    /// Order or inclusive order range, e.g. 6 or 6..9.
    #[arg(long)]
    n: Option<String>,
    /// Cyclomatic number or range for thm3.1, e.g. 1 or 1..3.
    #[arg(long)]
    k: Option<String>,
    /// Trials for lem2.1.
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Corpus bound for lem2.2/lem2.3/proof3.1-edgecount.
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Write the full reports as JSON to this file.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    ceiling: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders --help/--version through the error path too
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.workers > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Bound(args) => run_bound(args),
        Command::Root(args) => run_root(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Convergence { .. } | Error::Numerical(_) => EXIT_NUMERICAL,
        Error::Identification(_) => EXIT_VERIFY_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Parse a graph source: constructor DSL, g6 string or file path.
fn parse_graph(src: &str) -> Result<Graph, Error> {
    let (tag, rest) = src
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("graph source needs a tag, got {src:?}")))?;
    let int = |s: &str| -> Result<usize, Error> {
        s.trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    };
    let two_ints = |s: &str| -> Result<(usize, usize), Error> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected two comma-separated values in {s:?}")))?;
        Ok((int(a)?, int(b)?))
    };
    let variant_pair = |s: &str| -> Result<(usize, graph::Variant), Error> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected n,variant in {s:?}")))?;
        let v = match b.trim() {
            "A" | "a" => graph::Variant::A,
            "B" | "b" => graph::Variant::B,
            other => return Err(Error::Parse(format!("variant must be A or B, got {other:?}"))),
        };
        Ok((int(a)?, v))
    };
    match tag {
        "path" => graph::path(int(rest)?),
        "star" => graph::star(int(rest)?),
        "cycle" => graph::cycle(int(rest)?),
        "complete" => graph::complete(int(rest)?),
        "gnk" => {
            let (n, k) = two_ints(rest)?;
            graph::extremal_kcyclic(n, k)
        }
        "u2" => {
            let (n, v) = variant_pair(rest)?;
            graph::unicyclic_delta_n2(n, v)
        }
        "b2" => {
            let (n, v) = variant_pair(rest)?;
            graph::bicyclic_delta_n2(n, v)
        }
        "g6" => g6::decode(rest),
        "file" => {
            let content = std::fs::read_to_string(rest)?;
            let trimmed = content.trim();
            // files may hold either format; the text format starts with
            // a digit header line
            if trimmed
                .lines()
                .next()
                .is_some_and(|l| l.split_whitespace().count() == 2)
                && trimmed.starts_with(|c: char| c.is_ascii_digit())
            {
                graph::parse_text(trimmed)
            } else {
                g6::decode(trimmed)
            }
        }
        other => Err(Error::Parse(format!("unknown graph source tag {other:?}"))),
    }
}

fn run_compute(args: ComputeArgs) -> Result<ExitCode, Error> {
    let g = parse_graph(&args.graph)?;
    let mut record = json!({
        "n": g.n(),
        "m": g.m(),
        "max_degree": g.max_degree(),
    });
    if matches!(args.index, WhichIndex::Q | WhichIndex::Both) {
        let r = spectral::dominant_eigenpair(&spectral::signless_laplacian(&g), args.tol)?;
        record["q"] = json!(r.value);
        record["q_residual"] = json!(r.residual);
    }
    if matches!(args.index, WhichIndex::Mu | WhichIndex::Both) {
        let r = spectral::dominant_eigenpair(&spectral::laplacian(&g), args.tol)?;
        record["mu"] = json!(r.value);
        record["mu_residual"] = json!(r.residual);
    }
    match args.format {
        OutputFormat::Json => println!("{record}"),
        OutputFormat::Csv => {
            let keys = ["n", "m", "max_degree", "q", "mu"];
            let present: Vec<&str> = keys.iter().copied().filter(|k| !record[k].is_null()).collect();
            println!("{}", present.join(","));
            let cells: Vec<String> = present
                .iter()
                .map(|k| match &record[*k] {
                    Value::Number(x) if x.is_f64() => format!("{:.12}", x.as_f64().unwrap()),
                    v => v.to_string(),
                })
                .collect();
            println!("{}", cells.join(","));
        }
        OutputFormat::Plain => {
            println!("n = {}", record["n"]);
            println!("m = {}", record["m"]);
            println!("max_degree = {}", record["max_degree"]);
            for key in ["q", "mu"] {
                if let Some(v) = record[key].as_f64() {
                    let res = record[format!("{key}_residual")].as_f64().unwrap();
                    println!("{key} = {v:.12} (residual {res:.3e})");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bound(args: BoundArgs) -> Result<ExitCode, Error> {
    let g = parse_graph(&args.graph)?;
    let merris = bounds::merris_bound(&g)?;
    let dp = bounds::delta_plus_one_check(&g)?;
    if args.format == OutputFormat::Json {
        println!(
            "{}",
            json!({"degree_mean": merris, "delta_plus_one": dp})
        );
    } else {
        println!(
            "degree_mean_bound = {:.12} (vertex {}, equality class {})",
            merris.value,
            merris.achieving_vertex.map_or("-".into(), |v| v.to_string()),
            merris.equality_class
        );
        println!("q = {:.12}, mu = {:.12}, max_degree = {}", dp.q, dp.mu, dp.delta);
        println!(
            "q >= delta+1: {} (equality {}), star: {}",
            dp.q_lower_ok, dp.q_equality, dp.is_star
        );
        println!(
            "mu >= delta+1: {} (equality {}), dominating vertex: {}",
            dp.mu_lower_ok, dp.mu_equality, dp.has_dominating_vertex
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_root(args: RootArgs) -> Result<ExitCode, Error> {
    let (poly, default_lo, default_hi): (Polynomial, f64, f64) = {
        let (tag, rest) = args
            .poly
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("polynomial needs a tag, got {:?}", args.poly)))?;
        let int = |s: &str| -> Result<usize, Error> {
            s.trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
        };
        match tag {
            "fk" => {
                let (n, k) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("fk needs n,k".into()))?;
                let (n, k) = (int(n)?, int(k)?);
                (bounds::poly_fk(n, k)?, n as f64, 2.0 * (n as f64 - 1.0))
            }
            "f2" => {
                let n = int(rest)?;
                (bounds::poly_f2(n)?, (n - 1) as f64, 2.0 * (n as f64 - 1.0))
            }
            "f3" => {
                let n = int(rest)?;
                (bounds::poly_f3(n)?, (n - 1) as f64, 2.0 * (n as f64 - 1.0))
            }
            "coeffs" => {
                let coeffs: Result<Vec<i64>, Error> = rest
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("bad coefficient {c:?}: {e}")))
                    })
                    .collect();
                let p = Polynomial::new(coeffs?)?;
                (p, 0.0, 1e6)
            }
            other => return Err(Error::Parse(format!("unknown polynomial tag {other:?}"))),
        }
    };
    let lo = args.lo.unwrap_or(default_lo);
    let hi = args.hi.unwrap_or(default_hi);
    let root = bounds::largest_real_root(&poly, lo, hi, args.tol)?;
    println!("{root:.12}");
    Ok(ExitCode::SUCCESS)
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let ceiling = args
        .ceiling
        .or_else(|| env_ceiling("QCF_ENUM_CEILING"))
        .unwrap_or(enumerate::DEFAULT_ENUM_CEILING);
    let mut spec = EnumSpec::new(args.n, args.k)?.c4_free(args.c4free).ceiling(ceiling);
    if let Some(d) = args.max_degree {
        spec = spec.max_degree(d);
    }
    if let Some(d) = args.min_degree {
        spec = spec.min_degree(d);
    }
    let result = if args.naive {
        enumerate::enumerate_naive(&spec)?
    } else {
        enumerate::enumerate(&spec)?
    };
    if let Some(path) = &args.csv {
        std::fs::write(path, verify::corpus_csv(result.graphs())?)?;
    }

    let mut lines = Vec::new();
    match args.rank {
        None => {
            for g in result.graphs() {
                lines.push(g6::encode(g)?);
            }
        }
        Some(which) => {
            let kind = match which {
                RankIndex::Q => IndexKind::Q,
                RankIndex::Mu => IndexKind::Mu,
            };
            let top = args.top.unwrap_or(result.count().max(1));
            let ranking = enumerate::rank_by_index(&result, kind, top)?;
            for (g, _, v) in &ranking.entries {
                lines.push(format!("{},{v:.12}", g6::encode(g)?));
            }
        }
    }
    write_lines(&args.out, &lines)?;
    Ok(ExitCode::SUCCESS)
}

fn env_ceiling(var: &str) -> Option<usize> {
    std::env::var(var).ok().and_then(|v| v.parse().ok())
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad range start {a:?}: {e}")))?;
        let hi = b
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad range end {b:?}: {e}")))?;
        if hi < lo {
            return Err(Error::Parse(format!("empty range {s:?}")));
        }
        Ok((lo, hi))
    } else {
        let v = s
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad value {s:?}: {e}")))?;
        Ok((v, v))
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let ceiling = args
        .ceiling
        .or_else(|| env_ceiling("QCF_ENUM_CEILING"))
        .unwrap_or(enumerate::DEFAULT_ENUM_CEILING);
    let mut reports: Vec<VerificationReport> = Vec::new();

    let claims: Vec<String> = if args.claim == "all" {
        [
            "thm3.1", "thm3.2", "thm3.3", "lem2.1", "lem2.2", "lem2.3", "lem2.4", "rem3.4",
            "proof3.1-edgecount", "proof3.2-F",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect()
    } else {
        vec![args.claim.clone()]
    };

    for claim in &claims {
        match claim.as_str() {
            "thm3.1" => {
                let (k_lo, k_hi) = args.k.as_deref().map(parse_range).transpose()?.unwrap_or((1, 3));
                for k in k_lo..=k_hi {
                    let (n_lo, n_hi) = args
                        .n
                        .as_deref()
                        .map(parse_range)
                        .transpose()?
                        .unwrap_or((2 * k + 2, ceiling));
                    let floor = 2 * k + 2;
                    if args.n.is_some() && n_lo.max(floor) > n_hi {
                        return Err(Error::Precondition(format!(
                            "thm3.1 needs n >= 2k+2 = {floor}, got n = {n_lo}..{n_hi}"
                        )));
                    }
                    for n in n_lo.max(floor)..=n_hi {
                        reports.push(verify::verify_thm31(n, k, ceiling)?);
                    }
                }
            }
            "thm3.2" => {
                let (n_lo, n_hi) = args
                    .n
                    .as_deref()
                    .map(parse_range)
                    .transpose()?
                    .unwrap_or((6, 9.min(ceiling)));
                for n in n_lo..=n_hi {
                    reports.push(verify::verify_thm32(n, ceiling)?);
                }
            }
            "thm3.3" => {
                let (n_lo, n_hi) = args
                    .n
                    .as_deref()
                    .map(parse_range)
                    .transpose()?
                    .unwrap_or((8, 9.min(ceiling)));
                for n in n_lo..=n_hi {
                    reports.push(verify::verify_thm33(n, ceiling)?);
                }
            }
            "lem2.1" => {
                let (n_lo, n_hi) = args
                    .n
                    .as_deref()
                    .map(parse_range)
                    .transpose()?
                    .unwrap_or((5, 9));
                reports.push(verify::verify_lemma21_random(
                    args.trials,
                    n_lo,
                    n_hi,
                    args.seed,
                )?);
            }
            "lem2.2" | "lem2.3" | "proof3.1-edgecount" => {
                let all = verify::verify_bounds_corpus(args.n_max, ceiling)?;
                reports.extend(all.into_iter().filter(|r| &r.claim == claim));
            }
            "lem2.4" => {
                let orders: Vec<usize> = match args.n.as_deref() {
                    Some(s) => {
                        let (lo, hi) = parse_range(s)?;
                        (lo..=hi).collect()
                    }
                    None => vec![6, 10, 20, 50, 100, 200],
                };
                reports.push(verify::verify_lemma24(&orders, 50)?);
            }
            "rem3.4" => {
                let (_, n_hi) = args
                    .n
                    .as_deref()
                    .map(parse_range)
                    .transpose()?
                    .unwrap_or((6, 9.min(ceiling)));
                reports.push(verify::verify_remark34(n_hi, ceiling)?);
            }
            "proof3.2-F" => {
                let (n_lo, n_hi) = args
                    .n
                    .as_deref()
                    .map(parse_range)
                    .transpose()?
                    .unwrap_or((6, 50));
                reports.push(verify::verify_f_positivity(n_lo, n_hi, 1000)?);
            }
            other => {
                return Err(Error::Parse(format!("unknown claim {other:?}")));
            }
        }
    }

    for r in &reports {
        println!("{} {}: {}", r.claim, compact_params(&r.params), r.status);
    }
    if let Some(path) = &args.out {
        let body = serde_json::to_string_pretty(&reports)
            .map_err(|e| Error::Numerical(format!("report serialization: {e}")))?;
        std::fs::write(path, body)?;
    }

    let any_fail = reports.iter().any(|r| r.status == Status::Fail);
    let any_flagged = reports.iter().any(|r| r.status == Status::Flagged);
    Ok(ExitCode::from(if any_fail {
        EXIT_VERIFY_FAIL
    } else if any_flagged {
        EXIT_FLAGGED
    } else {
        0
    }))
}

fn compact_params(params: &Value) -> String {
    match params.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" "),
        None => params.to_string(),
    }
}

fn write_lines(out: &Option<String>, lines: &[String]) -> Result<(), Error> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            for line in lines {
                writeln!(f, "{line}")?;
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for line in lines {
                writeln!(lock, "{line}")?;
            }
        }
    }
    Ok(())
}
