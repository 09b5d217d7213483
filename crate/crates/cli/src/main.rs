//! Command-line front end: JSON output per query, TSV for the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 on an internal invariant failure or a
//! failed verification suite, 2 on invalid input. Output is deterministic:
//! JSON keys are emitted in a fixed order and TSV rows are sorted by case
//! key, so identical invocations produce byte-identical output.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use supvar::cells::{lusztig_orbit, sign_type_of_weight, special_weight, weight_cell_partition};
use supvar::dimension::{divisibility_report, graded_dimension};
use supvar::linkage::{fundamental_representative, is_linked, support_of_induced, LinkageParams};
use supvar::root_system::{build_root_system, CartanDatum, CartanFamily, RootSystem};
use supvar::verify::{all_pass, run_suite, to_tsv, Suite, VerifyConfig, DEFAULT_SEED};
use supvar::{Error, Partition, Weight};

#[derive(Parser)]
#[command(
    name = "supvar",
    version,
    about = "Exact root-system combinatorics: supports, dimensions, cells, linkage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Support data of the induced module of a dominant weight
    Support(TypedWeightArgs),
    /// Graded dimension, vanishing order, and divisibility report
    Dim(TypedWeightArgs),
    /// Type-A sign type, cell partition, and orbit of a dominant weight
    Cell(CellArgs),
    /// Canonical cell representative weight of a partition (type A)
    Special(SpecialArgs),
    /// Whether two weights lie in the same linkage class
    Linked(LinkedArgs),
    /// Run a verification suite; prints one TSV row per case
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TypedWeightArgs {
    /// Cartan family letter (A..G)
    #[arg(short = 't', long = "type")]
    family: String,
    /// Rank of the root system
    #[arg(short, long)]
    rank: usize,
    /// Level: odd, above the Coxeter number (type G: prime to 3)
    #[arg(short, long)]
    l: i64,
    /// Weight in fundamental coordinates, comma-separated
    #[arg(short, long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct CellArgs {
    /// Rank n of the ambient A_n
    #[arg(short, long)]
    rank: usize,
    #[arg(short, long)]
    l: i64,
    /// Dominant weight in fundamental coordinates, comma-separated
    #[arg(short, long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct SpecialArgs {
    /// Rank n of the ambient A_n; the partition must total n+1
    #[arg(short, long)]
    rank: usize,
    #[arg(short, long)]
    l: i64,
    /// Partition parts, comma-separated, weakly decreasing
    #[arg(short, long)]
    partition: String,
}

#[derive(Args)]
struct LinkedArgs {
    #[arg(short = 't', long = "type")]
    family: String,
    #[arg(short, long)]
    rank: usize,
    #[arg(short, long)]
    l: i64,
    /// First weight, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    w1: String,
    /// Second weight, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    w2: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// orders | divisibility | tworoute | greene | linkage | richardson | all
    #[arg(long)]
    suite: String,
    /// Coordinate bound for swept and random weights (default 2l per type)
    #[arg(long)]
    max_coord: Option<i64>,
    /// Rank list for the suites that take one, comma-separated
    #[arg(long)]
    ranks: Option<String>,
    /// Seed for the randomized sweeps
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Serialize)]
struct SupportJson {
    r_lambda_roots: Vec<Vec<i64>>,
    r_lambda_type: Vec<String>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    #[serde(rename = "dim_u_J")]
    dim_u_j: usize,
    dim_support: usize,
    codim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    jordan_type: Option<Vec<u32>>,
    conjugacy_verified: bool,
}

#[derive(Serialize)]
struct DimJson {
    weight: Vec<i64>,
    l: i64,
    dim: String,
    a: u32,
    l_pow_a_divides_dim: bool,
    d_r_times_dim_divisible: bool,
    l_prime: bool,
    graded_coeffs: Vec<String>,
}

#[derive(Serialize)]
struct CellJson {
    sign: String,
    partition: Vec<u32>,
    orbit: Vec<u32>,
}

#[derive(Serialize)]
struct SpecialJson {
    x: Vec<i64>,
    weight: Vec<i64>,
}

#[derive(Serialize)]
struct LinkedJson {
    rep1: Vec<i64>,
    rep2: Vec<i64>,
    linked: bool,
}

fn parse_i64_list(s: &str, what: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("bad {what} entry {part:?}")))
        })
        .collect()
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight, Error> {
    let coords = parse_i64_list(s, "weight")?;
    if coords.len() != rank {
        return Err(Error::DimensionMismatch(format!(
            "weight {s:?} has {} coordinates, rank is {rank}",
            coords.len()
        )));
    }
    Ok(Weight::new(coords))
}

fn build(family: &str, rank: usize) -> Result<RootSystem, Error> {
    let family = CartanFamily::from_str(family)?;
    build_root_system(CartanDatum::new(family, rank)?)
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Support(args) => {
            let rs = build(&args.family, args.rank)?;
            let params = LinkageParams::new(&rs, args.l)?;
            let lambda = parse_weight(&args.weight, args.rank)?;
            let report = support_of_induced(&params, &lambda)?;
            let out = SupportJson {
                r_lambda_roots: report
                    .r_lambda
                    .members
                    .iter()
                    .map(|&i| rs.positive_roots()[i].root_coords.clone())
                    .collect(),
                r_lambda_type: report
                    .r_lambda
                    .type_decomposition
                    .iter()
                    .map(|t| t.to_string())
                    .collect(),
                j: report.parabolic.iter().map(|i| i + 1).collect(),
                dim_u_j: report.dim_u_j,
                dim_support: report.dim_support,
                codim: report.codim,
                jordan_type: report.jordan_type.map(|p| p.parts().to_vec()),
                conjugacy_verified: report.conjugacy_verified,
            };
            Ok(serde_json::to_string(&out).expect("serializable"))
        }
        Command::Dim(args) => {
            let rs = build(&args.family, args.rank)?;
            let params = LinkageParams::new(&rs, args.l)?;
            let lambda = parse_weight(&args.weight, args.rank)?;
            let report = divisibility_report(&params, &lambda)?;
            let graded = graded_dimension(&rs, &lambda)?;
            let out = DimJson {
                weight: lambda.coords().to_vec(),
                l: args.l,
                dim: report.weyl_dim.to_string(),
                a: report.order,
                l_pow_a_divides_dim: report.l_pow_a_divides_dim,
                d_r_times_dim_divisible: report.d_r_times_dim_divisible,
                l_prime: report.l_prime,
                graded_coeffs: graded.coeffs().iter().map(|c| c.to_string()).collect(),
            };
            Ok(serde_json::to_string(&out).expect("serializable"))
        }
        Command::Cell(args) => {
            let lambda = parse_weight(&args.weight, args.rank)?;
            let f = sign_type_of_weight(args.l, &lambda)?;
            let partition = weight_cell_partition(args.l, &lambda)?;
            let orbit = lusztig_orbit(&partition);
            let out = CellJson {
                sign: f.row_major_string(),
                partition: partition.parts().to_vec(),
                orbit: orbit.parts().to_vec(),
            };
            Ok(serde_json::to_string(&out).expect("serializable"))
        }
        Command::Special(args) => {
            let parts = parse_i64_list(&args.partition, "partition")?;
            if parts.iter().any(|&p| p <= 0) {
                return Err(Error::InvalidPartition(format!(
                    "parts {parts:?} must be positive"
                )));
            }
            let p = Partition::new(parts.iter().map(|&x| x as u32).collect())?;
            if p.total() as usize != args.rank + 1 {
                return Err(Error::InvalidPartition(format!(
                    "partition {p} totals {}, rank {} needs {}",
                    p.total(),
                    args.rank,
                    args.rank + 1
                )));
            }
            let (x, weight) = special_weight(&p, args.l)?;
            let out = SpecialJson {
                x,
                weight: weight.coords().to_vec(),
            };
            Ok(serde_json::to_string(&out).expect("serializable"))
        }
        Command::Linked(args) => {
            let rs = build(&args.family, args.rank)?;
            let params = LinkageParams::new(&rs, args.l)?;
            let w1 = parse_weight(&args.w1, args.rank)?;
            let w2 = parse_weight(&args.w2, args.rank)?;
            let rep1 = fundamental_representative(&params, &w1);
            let rep2 = fundamental_representative(&params, &w2);
            let out = LinkedJson {
                rep1: rep1.coords().to_vec(),
                rep2: rep2.coords().to_vec(),
                linked: is_linked(&params, &w1, &w2),
            };
            Ok(serde_json::to_string(&out).expect("serializable"))
        }
        Command::Verify(args) => {
            let suite = Suite::from_str(&args.suite)?;
            let ranks = match &args.ranks {
                None => None,
                Some(s) => {
                    let list = parse_i64_list(s, "ranks")?;
                    if list.iter().any(|&r| r <= 0) {
                        return Err(Error::InvalidArgument(format!(
                            "ranks {list:?} must be positive"
                        )));
                    }
                    Some(list.into_iter().map(|r| r as usize).collect())
                }
            };
            let cfg = VerifyConfig {
                max_coord: args.max_coord,
                ranks,
                seed: args.seed,
                parallel: true,
            };
            let outcomes = run_suite(suite, &cfg)?;
            let tsv = to_tsv(&outcomes);
            if all_pass(&outcomes) {
                Ok(tsv)
            } else {
                // Rows are still printed; the nonzero exit code signals
                // the failure.
                print!("{tsv}");
                Err(Error::Internal("verification suite failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            if output.ends_with('\n') {
                print!("{output}");
            } else {
                println!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_invalid_input() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
