//! Command-line front end: every computation in the library as a
//! subcommand with deterministic table and JSON output.
//!
//! Exit codes: 0 on success, 2 on validation errors (bad flags, malformed
//! partitions, out-of-range parameters), 1 when a verification subcommand
//! finds a falsified identity (verify-ses, verify-kernel,
//! verify-conjecture, selftest).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use truncweyl_core::charring::tensor_decompose;
use truncweyl_core::checks;
use truncweyl_core::cvengine::{
    char_json, char_json_named, classify_demazure, dim_truncated, flag_multiplicities,
    graded_char_label, kernel_is_truncated, verify_ses, CvContext, DemazureClassification,
    ModuleKind, ModuleLabel,
};
use truncweyl_core::error::Error;
use truncweyl_core::fusion::{default_params, fusion_for_partition};
use truncweyl_core::partitions::{xi_parts, Partition};
use truncweyl_core::poset::maximal_elements;
use truncweyl_core::rootsys::{build_root_system, RootSystem, Series};

#[derive(Parser)]
#[command(
    name = "truncweyl",
    version,
    about = "Exact invariants of truncated Weyl, Chari-Venkatesh and Demazure modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleChoice {
    #[value(name = "W", alias = "w")]
    Truncated,
    #[value(name = "D", alias = "d")]
    Demazure,
    #[value(name = "CV", alias = "cv")]
    Cv,
}

#[derive(Subcommand)]
enum Command {
    /// Partition attached to the truncated Weyl module W_N(lambda)
    Xi {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dimension of W_N(lambda) by the closed product formula
    Dim {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Graded character of a rank-one module
    Char {
        /// W (truncated Weyl), D (Demazure) or CV
        #[arg(long, value_enum)]
        module: ModuleChoice,
        /// Highest weight (for W and D)
        #[arg(long)]
        lambda: Option<u64>,
        /// Truncation level (for W)
        #[arg(long)]
        n: Option<u64>,
        /// Demazure level (for D)
        #[arg(long)]
        level: Option<u64>,
        /// Partition, comma-separated non-increasing (for CV)
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Demazure flag multiplicities of CV(xi) at a level
    Flag {
        #[arg(long)]
        xi: String,
        #[arg(long)]
        level: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of steps in a level-l Demazure flag of CV(xi)
    FlagLength {
        #[arg(long)]
        xi: String,
        #[arg(long)]
        level: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Is W_N(lambda) a Demazure module?
    Classify {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Maximal orbits of the weight-tuple order on sums lambda = sum lambda_j
    Maximal {
        /// Series letter A-G
        #[arg(long = "type")]
        series: String,
        #[arg(long)]
        rank: usize,
        /// Dominant weight, comma-separated coordinates
        #[arg(long)]
        lambda: String,
        /// Number of tuple entries
        #[arg(long)]
        n: usize,
        /// Enumeration budget (number of tuples)
        #[arg(long, default_value_t = 10_000_000)]
        bound: u128,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the short exact sequence attached to xi
    VerifySes {
        #[arg(long)]
        xi: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Is the kernel of W_N(lambda) -> W_(N-1)(lambda) a shifted W_N(lambda-2)?
    VerifyKernel {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Brute-force fusion product of evaluation modules
    Fusion {
        /// Highest weights, comma-separated non-increasing
        #[arg(long)]
        parts: String,
        /// Evaluation parameters, comma-separated (default 0,1,...,l-1)
        #[arg(long)]
        params: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare the fusion product over the maximal tuple with char W_N(m)
    VerifyConjecture {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose a tensor product of two irreducibles
    Tensor {
        /// Series letter A-G
        #[arg(long = "type")]
        series: String,
        #[arg(long)]
        rank: usize,
        /// First highest weight, comma-separated coordinates
        #[arg(long)]
        lambda: String,
        /// Second highest weight, comma-separated coordinates
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the full consistency suite at reduced bounds
    Selftest,
}

/// Validation failure (exit 2).
struct Invalid(String);

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Invalid(e.to_string())
    }
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>, Invalid> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Invalid(format!("{}: `{}` is not an integer", what, p.trim())))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, Invalid> {
    let ints = parse_ints(s, "partition")?;
    let parts: Vec<u64> = ints
        .into_iter()
        .map(|v| {
            u64::try_from(v).map_err(|_| Invalid(format!("partition part {} is negative", v)))
        })
        .collect::<Result<_, _>>()?;
    Ok(Partition::new(parts)?)
}

fn parse_system(series: &str, rank: usize) -> Result<RootSystem, Invalid> {
    let letter = match series.chars().collect::<Vec<char>>()[..] {
        [c] => c,
        _ => return Err(Invalid(format!("series must be one letter, got `{}`", series))),
    };
    let series = Series::from_letter(letter)
        .ok_or_else(|| Invalid(format!("unknown series letter `{}`", letter)))?;
    Ok(build_root_system(series, rank)?)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", value);
}

fn char_table(gc: &truncweyl_core::charring::GradedCharacter, ctx: &CvContext) -> Vec<String> {
    let mut lines = Vec::new();
    for (degree, piece) in gc.pieces() {
        let summands: Vec<String> = piece
            .iter()
            .rev()
            .map(|(w, c)| {
                if c == &truncweyl_core::BigInt::from(1) {
                    format!("V{}", w)
                } else {
                    format!("{} V{}", c, w)
                }
            })
            .collect();
        lines.push(format!("degree {}: {}", degree, summands.join(" + ")));
    }
    if let Ok(series) = gc.dim_series(ctx.rank_one()) {
        lines.push(format!("dim series: {}", series));
    }
    lines
}

fn run(cli: Cli) -> Result<ExitCode, Invalid> {
    match cli.command {
        Command::Xi { lambda, n, format } => {
            let xi = xi_parts(lambda, n)?;
            match format {
                Format::Table => println!("{}", xi),
                Format::Json => print_json(&serde_json::json!({
                    "lambda": lambda,
                    "n": n,
                    "xi": xi.to_json(),
                })),
            }
        }
        Command::Dim { lambda, n, format } => {
            let dim = dim_truncated(lambda, n)?;
            match format {
                Format::Table => println!("{}", dim),
                Format::Json => print_json(&serde_json::json!({
                    "lambda": lambda,
                    "n": n,
                    "dim": dim.to_string(),
                })),
            }
        }
        Command::Char {
            module,
            lambda,
            n,
            level,
            xi,
            format,
        } => {
            let need = |opt: Option<u64>, flag: &str| {
                opt.ok_or_else(|| Invalid(format!("--{} is required for this module", flag)))
            };
            let kind = match module {
                ModuleChoice::Truncated => ModuleKind::Truncated {
                    lambda: need(lambda, "lambda")?,
                    n: need(n, "n")?,
                },
                ModuleChoice::Demazure => ModuleKind::Demazure {
                    level: need(level, "level")?,
                    lambda: need(lambda, "lambda")?,
                },
                ModuleChoice::Cv => {
                    let s = xi.ok_or_else(|| Invalid("--xi is required for CV".to_string()))?;
                    ModuleKind::Cv(parse_partition(&s)?)
                }
            };
            let label = ModuleLabel::plain(kind);
            let mut ctx = CvContext::new();
            let gc = graded_char_label(&mut ctx, &label)?;
            match format {
                Format::Table => {
                    println!("{}", label);
                    for line in char_table(&gc, &ctx) {
                        println!("{}", line);
                    }
                }
                Format::Json => print_json(&char_json(&ctx, &label, &gc)?),
            }
        }
        Command::Flag { xi, level, format } => {
            let xi = parse_partition(&xi)?;
            let mut ctx = CvContext::new();
            let fm = flag_multiplicities(&mut ctx, &xi, level)?;
            match format {
                Format::Table => {
                    for (mu, poly) in fm.entries() {
                        println!("mu {}: {}", mu, poly);
                    }
                    println!("length: {}", fm.length());
                }
                Format::Json => print_json(&fm.to_json()),
            }
        }
        Command::FlagLength { xi, level, format } => {
            let xi = parse_partition(&xi)?;
            let mut ctx = CvContext::new();
            let fm = flag_multiplicities(&mut ctx, &xi, level)?;
            match format {
                Format::Table => println!("{}", fm.length()),
                Format::Json => print_json(&serde_json::json!({
                    "xi": xi.to_json(),
                    "level": level,
                    "length": fm.length().to_string(),
                })),
            }
        }
        Command::Classify { lambda, n, format } => {
            let mut ctx = CvContext::new();
            let verdict = classify_demazure(&mut ctx, lambda, n)?;
            match format {
                Format::Table => println!("{}", verdict),
                Format::Json => {
                    let value = match &verdict {
                        DemazureClassification::Demazure { level } => serde_json::json!({
                            "lambda": lambda,
                            "n": n,
                            "demazure": true,
                            "level": level,
                        }),
                        DemazureClassification::NotDemazure {
                            flag_level,
                            flag_length,
                        } => serde_json::json!({
                            "lambda": lambda,
                            "n": n,
                            "demazure": false,
                            "flag_level": flag_level,
                            "flag_length": flag_length.to_string(),
                        }),
                    };
                    print_json(&value);
                }
            }
        }
        Command::Maximal {
            series,
            rank,
            lambda,
            n,
            bound,
            format,
        } => {
            let rs = parse_system(&series, rank)?;
            let coords = parse_ints(&lambda, "lambda")?;
            let orbits = maximal_elements(&rs, &coords, n, bound)?;
            match format {
                Format::Table => {
                    for orbit in &orbits {
                        println!("{} (orbit size {})", orbit.representative, orbit.size);
                    }
                    println!("maximal orbits: {}", orbits.len());
                }
                Format::Json => {
                    let list: Vec<serde_json::Value> =
                        orbits.iter().map(|o| o.to_json()).collect();
                    print_json(&serde_json::json!({ "orbits": list }));
                }
            }
        }
        Command::VerifySes { xi, format } => {
            let xi = parse_partition(&xi)?;
            let mut ctx = CvContext::new();
            let report = verify_ses(&mut ctx, &xi)?;
            match format {
                Format::Table => {
                    println!(
                        "0 -> tau_{} CV{} -> CV{} -> CV{} -> 0",
                        report.shift, report.minus, report.xi, report.plus
                    );
                    println!(
                        "dimensions: {} = {} + {} ({})",
                        report.dim,
                        report.dim_plus,
                        report.dim_minus,
                        if report.dims_hold { "ok" } else { "FALSIFIED" }
                    );
                    println!(
                        "graded characters: {}",
                        if report.chars_hold { "ok" } else { "FALSIFIED" }
                    );
                    if let Some(t) = &report.truncated {
                        println!(
                            "truncated form: 0 -> tau W_{}({}) -> W_{}({}) -> W_{}({}) -> 0 ({})",
                            t.minus_level,
                            t.lambda - 2,
                            t.n,
                            t.lambda,
                            t.n - 1,
                            t.lambda,
                            if t.plus_matches && t.minus_matches {
                                "ok"
                            } else {
                                "FALSIFIED"
                            }
                        );
                    }
                    println!("{}", if report.holds { "HOLDS" } else { "FALSIFIED" });
                }
                Format::Json => print_json(&report.to_json()),
            }
            if !report.holds {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyKernel { lambda, n, format } => {
            let report = kernel_is_truncated(lambda, n)?;
            match format {
                Format::Table => println!("{}", report),
                Format::Json => print_json(&report.to_json()),
            }
            if !report.holds {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Fusion {
            parts,
            params,
            format,
        } => {
            let xi = parse_partition(&parts)?;
            let params = match params {
                Some(s) => parse_ints(&s, "params")?,
                None => default_params(xi.len()),
            };
            let run = fusion_for_partition(&xi, &params)?;
            if !run.distinct_parameters {
                eprintln!(
                    "warning: parameters are not pairwise distinct; the tensor product need not be cyclic (span {} of {})",
                    run.span_dim, run.ambient_dim
                );
            }
            let name = format!(
                "fusion {} @ ({})",
                xi,
                params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let ctx = CvContext::new();
            match format {
                Format::Table => {
                    println!("{}", name);
                    for line in char_table(&run.character, &ctx) {
                        println!("{}", line);
                    }
                    println!(
                        "span {} of {} (parameters {})",
                        run.span_dim,
                        run.ambient_dim,
                        if run.distinct_parameters {
                            "distinct"
                        } else {
                            "repeated"
                        }
                    );
                }
                Format::Json => {
                    let mut value = char_json_named(&ctx, &name, &run.character)?;
                    let obj = value.as_object_mut().expect("object");
                    obj.insert(
                        "span_dim".to_string(),
                        serde_json::json!(run.span_dim),
                    );
                    obj.insert(
                        "ambient_dim".to_string(),
                        serde_json::json!(run.ambient_dim),
                    );
                    obj.insert(
                        "distinct_parameters".to_string(),
                        serde_json::json!(run.distinct_parameters),
                    );
                    print_json(&value);
                }
            }
        }
        Command::VerifyConjecture { m, n, format } => {
            let report = checks::verify_conjecture_sl2(m, n)?;
            match format {
                Format::Table => {
                    for line in report.verdict_lines() {
                        println!("{}", line);
                    }
                }
                Format::Json => print_json(&serde_json::json!({
                    "m": m,
                    "n": n,
                    "tuple": report.tuple.to_json(),
                    "equal": report.equal,
                    "oracle": report.oracle.to_json(),
                    "recursion": report.recursion.to_json(),
                })),
            }
            if !report.equal {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Tensor {
            series,
            rank,
            lambda,
            mu,
            format,
        } => {
            let rs = parse_system(&series, rank)?;
            let lambda = parse_ints(&lambda, "lambda")?;
            let mu = parse_ints(&mu, "mu")?;
            let decomposition = tensor_decompose(&rs, &lambda, &mu)?;
            match format {
                Format::Table => {
                    let summands: Vec<String> = decomposition
                        .iter()
                        .rev()
                        .map(|(w, c)| {
                            if c == &truncweyl_core::BigInt::from(1) {
                                format!("V{}", w)
                            } else {
                                format!("{} V{}", c, w)
                            }
                        })
                        .collect();
                    println!("{}", summands.join(" + "));
                }
                Format::Json => {
                    let list: Vec<serde_json::Value> = decomposition
                        .iter()
                        .map(|(w, c)| {
                            serde_json::json!({
                                "weight": w.to_json(),
                                "mult": c.to_string(),
                            })
                        })
                        .collect();
                    print_json(&serde_json::json!({ "summands": list }));
                }
            }
        }
        Command::Selftest => {
            let outcomes = checks::selftest();
            let mut unhealthy = 0usize;
            let mut documented = 0usize;
            for outcome in &outcomes {
                println!("{}", outcome.summary_line());
                println!("{}", outcome.detail);
                if !outcome.healthy {
                    unhealthy += 1;
                } else if !outcome.passed {
                    documented += 1;
                }
            }
            println!(
                "selftest: {} checks, {} clean, {} with documented discrepancies, {} failed",
                outcomes.len(),
                outcomes.len() - unhealthy - documented,
                documented,
                unhealthy
            );
            if unhealthy > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Invalid(message)) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}
