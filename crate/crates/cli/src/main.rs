use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use permcode::crt::decompose;
use permcode::embed::self_dual_verdicts;
use permcode::lincode::DEFAULT_BUDGET;
use permcode::perm::{parse_permutation, parse_permutation_auto};
use permcode::search::{search, SearchOptions};
use permcode::sigma::{code_from_generators, sigma_dual, ModuleElement};
use permcode::tables::{parse_tables, verify_rows, BUNDLED_TABLES};
use permcode::torsion::{dimension_formula_check, invariant_factors, DimensionVerdict};
use permcode::{Error, Permutation, PrimeField};

#[derive(Parser)]
#[command(name = "permcode", version, about = "Analyze codes invariant under a permutation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from module generators and print its structure.
    Analyze {
        #[arg(long)]
        field: u32,
        #[arg(long)]
        sigma: String,
        /// Comma-separated polynomials, one per cycle. Repeat for more generators.
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        /// Code length; defaults to the largest point in --sigma.
        #[arg(long)]
        n: Option<usize>,
        /// Maximum number of codewords enumerated for the minimum distance.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Recompute (k, d) for every row of a table file.
    Tables {
        /// Table file; the bundled tables when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the tab-separated report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Enumerate orbit codes and keep the best distance per dimension.
    Search {
        #[arg(long)]
        field: u32,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        target_k: Option<usize>,
        /// Maximum number of candidate vectors.
        #[arg(long)]
        budget: Option<u128>,
        /// Also consider vectors whose cycle blocks have dependent shifts.
        #[arg(long)]
        no_block_filter: bool,
    },
}

enum Failure {
    Input(String),
    Budget(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn permutation(text: &str, n: Option<usize>) -> Result<Permutation, Error> {
    match n {
        Some(n) => parse_permutation(text, n),
        None => parse_permutation_auto(text),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(
    p: u32,
    sigma: &str,
    generators: &[String],
    n: Option<usize>,
    budget: u128,
) -> Result<(), Failure> {
    let field = PrimeField::new(p)?;
    let sigma = permutation(sigma, n)?;
    let gens = generators
        .iter()
        .map(|g| ModuleElement::parse(field, &sigma, g))
        .collect::<Result<Vec<_>, _>>()?;
    let sc = code_from_generators(field, &sigma, &gens)?;
    let d = sc.code().min_distance(budget)?;
    let dual = sigma_dual(&sc)?;

    println!("sigma = {sigma}");
    println!("n = {}", sc.n());
    println!("k = {}", sc.dim());
    match d {
        Some(d) => println!("d = {d}"),
        None => println!("d = -"),
    }
    println!("dual dim = {}", dual.dim());
    if sc.dim() > 0 {
        let report = invariant_factors(&sc)?;
        println!("o(M) = {}", report.o_m);
        println!("{report}");
        match dimension_formula_check(&sc)? {
            DimensionVerdict::Holds => println!("deg o(C) = k: holds"),
            DimensionVerdict::Fails { deg_oc, actual_k } => {
                println!("deg o(C) = k: fails (deg o(C) = {deg_oc}, k = {actual_k})")
            }
        }
    } else {
        println!("o(C) = 1; divisors: none");
    }
    let sd = self_dual_verdicts(&sc);
    let crt = decompose(&sc)?;
    let structural = crt.structural_verdicts().iter().all(|&b| b);
    println!(
        "self-dual: {}/{}/{} (euclidean/hermitian/structural)",
        yes_no(sd.euclidean),
        yes_no(sd.hermitian),
        yes_no(structural)
    );
    print!("{crt}");
    Ok(())
}

fn tables(
    input: Option<PathBuf>,
    report: Option<PathBuf>,
    jobs: usize,
    budget: u128,
) -> Result<(), Failure> {
    let text = match &input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => BUNDLED_TABLES.to_string(),
    };
    let rows = parse_tables(&text)?;
    let result = verify_rows(&rows, budget, jobs)?;
    match &report {
        Some(path) => fs::write(path, result.to_string())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => print!("{result}"),
    }
    let summary = result.summary();
    if report.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    if result.unflagged_all_match() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            field,
            sigma,
            generators,
            n,
            budget,
        } => analyze(field, &sigma, &generators, n, budget),
        Command::Tables {
            input,
            report,
            jobs,
            budget,
        } => tables(input, report, jobs, budget),
        Command::Search {
            field,
            sigma,
            n,
            target_k,
            budget,
            no_block_filter,
        } => {
            let field = PrimeField::new(field)?;
            let sigma = permutation(&sigma, n)?;
            let opts = SearchOptions {
                target_k,
                budget: budget.unwrap_or(u128::MAX),
                block_filter: !no_block_filter,
                ..SearchOptions::default()
            };
            print!("{}", search(field, &sigma, &opts)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli);
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: unflagged rows differ from their claimed (k, d)");
            ExitCode::from(1)
        }
    }
}
