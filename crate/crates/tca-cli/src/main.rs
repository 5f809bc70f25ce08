//! `tca`: batch computations over modules of the twisted commutative
//! algebra Sym(C^d ⊗ C^∞), with deterministic text and JSON output.
//!
//! Every infinite object is truncated; the truncation flags (`--cutoff`,
//! `--imax`) are mandatory and echoed in the output. Exit codes: 0 success,
//! 2 argument error, 1 internal assertion failure.

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use tca::bott::{bott_sort, BottOutcome};
use tca::characters::{cauchy_a, k_module_character, torsion_injective_character, EquivCharacter};
use tca::ktheory::{basis_class, fourier, pairing_matrix, KClass};
use tca::localcoh::derived_saturation;
use tca::partitions::{Partition, Weight};
use tca::resolutions::{betti_table, regularity_report};
use tca::spectrum::{krull_dimension, maximal_chain, ChainLabel};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "tca", version, about = "Invariants of Sym(C^d ⊗ C^∞)-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bott's algorithm on a weight: prints `vanishes` or `gamma=[...] steps=N`
    Bott(BottArgs),
    /// Cauchy decomposition of A itself
    Cauchy(CauchyArgs),
    /// Character of the generator module K_{r,λ}
    Kmodule(KmoduleArgs),
    /// Character of the torsion injective J_λ = S_λ(E* ⊕ V)
    Jmodule(JmoduleArgs),
    /// Derived saturation R^i S(S_μ(K))
    Satur(SaturArgs),
    /// Betti table of the truncation (S_λ ⊗ A)^{≤n}
    Resolve(ResolveArgs),
    /// Regularity report for the truncation (S_λ ⊗ A)^{≤n}
    Regularity(ResolveArgs),
    /// K-theory of Grassmannians and of A
    Ktheory(KtheoryArgs),
    /// Fourier involution on K(A) (same as `ktheory fourier`)
    Fourier(FourierArgs),
    /// Maximal chain of irreducible closed subsets of Gr(E)
    Chain(ChainArgs),
}

#[derive(Args)]
struct BottArgs {
    /// Weight literal, e.g. "[0,2]"
    #[arg(long)]
    weight: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CauchyArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    cutoff: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KmoduleArgs {
    #[arg(long)]
    r: usize,
    /// Partition literal, e.g. "[3,1,1]"; the empty partition is "[]"
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    cutoff: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct JmoduleArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    cutoff: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SaturArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    d: usize,
    /// Cohomological degree i of R^i S
    #[arg(long)]
    i: usize,
    /// Enumeration bound on the E-degree |λ|
    #[arg(long)]
    cutoff: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ResolveArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    n: usize,
    #[arg(long = "dimE")]
    dim_e: usize,
    #[arg(long)]
    imax: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KtheoryArgs {
    #[command(subcommand)]
    sub: KtheorySub,
}

#[derive(Subcommand)]
enum KtheorySub {
    /// Dual-basis pairing matrix on K(Gr_r(C^d))
    Pairing {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Fourier involution applied to a basis class
    Fourier(FourierArgs),
}

#[derive(Args)]
struct FourierArgs {
    #[arg(long)]
    d: usize,
    /// Basis class as JSON, e.g. '{"r":0,"lambda":[],"mu":[]}'
    #[arg(long)]
    class: String,
    #[arg(long)]
    json: bool,
}

#[derive(Deserialize)]
struct ClassSpec {
    r: usize,
    lambda: Partition,
    mu: Partition,
}

enum Failure {
    /// Bad user input: exit 2.
    Usage(String),
    /// Violated internal invariant: exit 1.
    Internal(String),
}

impl From<tca::Error> for Failure {
    fn from(e: tca::Error) -> Self {
        match e {
            tca::Error::Internal(msg) => Failure::Internal(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| dispatch(cli.command));
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {}", msg);
            2
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {}", msg);
            1
        }
        Err(_) => {
            eprintln!("internal error: assertion failure");
            1
        }
    };
    std::process::exit(code);
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn emit(envelope: serde_json::Value) {
    println!("{}", serde_json::to_string(&envelope).expect("valid JSON"));
}

fn envelope(command: &str, parameters: serde_json::Value, result: serde_json::Value) -> serde_json::Value {
    json!({
        "command": command,
        "parameters": parameters,
        "result": result,
        "version": VERSION,
    })
}

fn print_character(header: String, ch: &EquivCharacter) {
    println!("{}", header);
    for line in ch.render_lines() {
        println!("{}", line);
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Bott(args) => {
            let weight: Weight = args.weight.parse().map_err(Failure::from)?;
            if weight.len() != args.d {
                return Err(Failure::Usage(format!(
                    "weight {} has length {}, but --d is {}",
                    weight,
                    weight.len(),
                    args.d
                )));
            }
            let result = bott_sort(&weight);
            if args.json {
                let payload = match &result {
                    BottOutcome::Vanishes => json!({ "vanishes": true }),
                    BottOutcome::Nonzero { sorted, steps } => json!({
                        "vanishes": false,
                        "gamma": sorted.entries(),
                        "steps": steps,
                    }),
                };
                emit(envelope(
                    "bott",
                    json!({ "weight": weight.entries(), "d": args.d }),
                    payload,
                ));
            } else {
                match result {
                    BottOutcome::Vanishes => println!("vanishes"),
                    BottOutcome::Nonzero { sorted, steps } => {
                        println!("gamma={} steps={}", sorted, steps)
                    }
                }
            }
            Ok(())
        }
        Command::Cauchy(args) => {
            let ch = cauchy_a(args.d, args.cutoff);
            if args.json {
                emit(envelope(
                    "cauchy",
                    json!({ "d": args.d, "cutoff": args.cutoff }),
                    json!({ "terms": ch.to_json() }),
                ));
            } else {
                print_character(format!("cauchy d={} cutoff={}", args.d, args.cutoff), &ch);
            }
            Ok(())
        }
        Command::Kmodule(args) => {
            let lam = parse_partition(&args.lambda)?;
            let ch = k_module_character(args.r, &lam, args.d, args.cutoff)?;
            if args.json {
                emit(envelope(
                    "kmodule",
                    json!({ "r": args.r, "lambda": lam, "d": args.d, "cutoff": args.cutoff }),
                    json!({ "terms": ch.to_json() }),
                ));
            } else {
                print_character(
                    format!(
                        "kmodule r={} lambda={} d={} cutoff={}",
                        args.r, lam, args.d, args.cutoff
                    ),
                    &ch,
                );
            }
            Ok(())
        }
        Command::Jmodule(args) => {
            let lam = parse_partition(&args.lambda)?;
            let ch = torsion_injective_character(&lam, args.d, args.cutoff);
            if args.json {
                emit(envelope(
                    "jmodule",
                    json!({ "lambda": lam, "d": args.d, "cutoff": args.cutoff }),
                    json!({ "terms": ch.to_json() }),
                ));
            } else {
                print_character(
                    format!(
                        "jmodule lambda={} d={} cutoff={}",
                        lam, args.d, args.cutoff
                    ),
                    &ch,
                );
            }
            Ok(())
        }
        Command::Satur(args) => {
            let mu = parse_partition(&args.mu)?;
            if args.d == 0 {
                return Err(Failure::Usage("satur requires --d >= 1".into()));
            }
            let ch = derived_saturation(&mu, args.d, args.i, args.cutoff);
            if args.json {
                emit(envelope(
                    "satur",
                    json!({ "mu": mu, "d": args.d, "i": args.i, "cutoff": args.cutoff }),
                    json!({ "terms": ch.to_json(), "vCutoff": ch.cutoff() }),
                ));
            } else {
                print_character(
                    format!(
                        "satur mu={} d={} i={} cutoff={}",
                        mu, args.d, args.i, args.cutoff
                    ),
                    &ch,
                );
            }
            Ok(())
        }
        Command::Resolve(args) => {
            let lam = parse_partition(&args.lambda)?;
            let bt = betti_table(&lam, args.n, args.dim_e, args.imax)?;
            if args.json {
                emit(envelope(
                    "resolve",
                    json!({
                        "lambda": lam, "n": args.n, "dimE": args.dim_e, "imax": args.imax,
                    }),
                    json!({ "entries": bt.to_json() }),
                ));
            } else {
                println!(
                    "resolve lambda={} n={} dimE={} imax={}",
                    lam, args.n, args.dim_e, args.imax
                );
                for line in bt.render_lines() {
                    println!("{}", line);
                }
            }
            Ok(())
        }
        Command::Regularity(args) => {
            let lam = parse_partition(&args.lambda)?;
            let report = regularity_report(&lam, args.n, args.dim_e, args.imax)?;
            if args.json {
                emit(envelope(
                    "regularity",
                    json!({
                        "lambda": lam, "n": args.n, "dimE": args.dim_e, "imax": args.imax,
                    }),
                    json!({
                        "observed": report.observed,
                        "bound": report.bound,
                        "certified": report.certified,
                    }),
                ));
            } else {
                println!(
                    "regularity lambda={} n={} dimE={} imax={}",
                    lam, args.n, args.dim_e, args.imax
                );
                let label = if report.certified {
                    "certified"
                } else {
                    "observed only"
                };
                println!(
                    "observed_reg={} bound={} ({})",
                    report.observed, report.bound, label
                );
            }
            Ok(())
        }
        Command::Ktheory(args) => match args.sub {
            KtheorySub::Pairing { d, r, json: as_json } => {
                let m = pairing_matrix(d, r)?;
                if as_json {
                    let rows: Vec<Vec<String>> = m
                        .iter()
                        .map(|row| row.iter().map(|x| x.to_string()).collect())
                        .collect();
                    let rows_json: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|row| {
                            serde_json::Value::Array(
                                row.iter()
                                    .map(|x| {
                                        serde_json::Value::Number(
                                            x.parse().expect("integer literal"),
                                        )
                                    })
                                    .collect(),
                            )
                        })
                        .collect();
                    emit(envelope(
                        "ktheory pairing",
                        json!({ "d": d, "r": r }),
                        json!({ "matrix": rows_json }),
                    ));
                } else {
                    println!("ktheory pairing d={} r={}", d, r);
                    for row in &m {
                        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        println!("[{}]", cells.join(", "));
                    }
                }
                Ok(())
            }
            KtheorySub::Fourier(fargs) => run_fourier(fargs),
        },
        Command::Fourier(args) => run_fourier(args),
        Command::Chain(args) => {
            if args.d == 0 {
                return Err(Failure::Usage("chain requires --d >= 1".into()));
            }
            let chain = maximal_chain(args.d);
            let dim = krull_dimension(args.d);
            if args.json {
                let labels: Vec<serde_json::Value> = chain
                    .iter()
                    .map(|label| match label {
                        ChainLabel::Closure { r, i } => json!({ "r": r, "i": i }),
                        ChainLabel::Total => json!("Gr(E)"),
                    })
                    .collect();
                emit(envelope(
                    "chain",
                    json!({ "d": args.d }),
                    json!({ "labels": labels, "dimension": dim }),
                ));
            } else {
                println!("chain d={}", args.d);
                for label in &chain {
                    println!("{}", label);
                }
                println!("dimension {}", dim);
            }
            Ok(())
        }
    }
}

#[derive(Args)]
struct ChainArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    json: bool,
}

fn run_fourier(args: FourierArgs) -> Result<(), Failure> {
    let spec: ClassSpec = serde_json::from_str(&args.class)
        .map_err(|e| Failure::Usage(format!("invalid --class JSON '{}': {}", args.class, e)))?;
    let x = basis_class(spec.r, &spec.lambda, &spec.mu, args.d)?;
    let y = fourier(&x)?;
    if args.json {
        emit(envelope(
            "ktheory fourier",
            json!({
                "d": args.d,
                "class": { "r": spec.r, "lambda": spec.lambda, "mu": spec.mu },
            }),
            json!({ "class": y.to_json() }),
        ));
    } else {
        println!(
            "ktheory fourier d={} r={} lambda={} mu={}",
            args.d, spec.r, spec.lambda, spec.mu
        );
        print_kclass(&y);
    }
    Ok(())
}

fn print_kclass(x: &KClass) {
    for line in x.render_lines() {
        println!("{}", line);
    }
}
