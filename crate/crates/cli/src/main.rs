use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use poisson_kit::chart::Chart;
use poisson_kit::graded::DEFAULT_BASIS_CAP;
use poisson_kit::groebner::DEFAULT_BUDGET;
use poisson_kit::poly::{parse_poly, parse_rational, Lexer, Rational, Token};
use poisson_kit::sample::DEFAULT_SEED;
use poisson_kit_cli::commands::{self, CliError, Outcome};
use poisson_kit_cli::structure::StructureFile;
use poisson_kit_cli::{digest, envelope};

#[derive(Parser)]
#[command(name = "poisson-kit", version, about = "Exact invariants of polynomial Poisson structures")]
struct Cli {
    /// Emit the JSON report envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Gröbner reduction-step budget.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity [pi, pi] = 0.
    Check { file: PathBuf },
    /// Modular vector field and the symmetry check L_zeta pi = 0.
    Modular { file: PathBuf },
    /// Pfaffian, log-symplectic and holonomicity diagnostics.
    Report {
        file: PathBuf,
        /// Betti numbers b0,b1,b2 of the open leaf, for surfaces.
        #[arg(long)]
        betti: Option<String>,
    },
    /// Graded Lichnerowicz cohomology table.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        wmax: i64,
        /// Largest graded piece to assemble.
        #[arg(long, default_value_t = DEFAULT_BASIS_CAP)]
        cap: usize,
    },
    /// Tjurina number of a curve, globally or at a point.
    Tjurina {
        /// A structure file (its curve block, or the Pfaffian of a surface) or a polynomial.
        input: String,
        /// Variables for a polynomial argument, e.g. "w,z"; defaults to the sorted identifiers.
        #[arg(long)]
        vars: Option<String>,
        /// Point such as "1,-1/2" for the local number.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Random identity suite for the polyvector calculus.
    Identities {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Modular { .. } => "modular",
            Command::Report { .. } => "report",
            Command::Cohomology { .. } => "cohomology",
            Command::Tjurina { .. } => "tjurina",
            Command::Identities { .. } => "identities",
        }
    }
}

fn read(path: &Path) -> Result<(StructureFile, String), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Usage(format!("{}: not UTF-8 text", path.display())))?;
    Ok((StructureFile::parse(&text)?, digest(&bytes)))
}

fn parse_list<T>(text: &str, item: impl Fn(&str) -> Option<T>, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|x| item(x.trim()).ok_or_else(|| CliError::Usage(format!("bad {what} entry \"{}\"", x.trim()))))
        .collect()
}

fn tjurina_input(input: &str, vars: Option<&str>) -> Result<(poisson_kit::poly::Poly, String), CliError> {
    let path = Path::new(input);
    if path.is_file() {
        let (file, d) = read(path)?;
        if let Some(c) = file.curve {
            return Ok((c, d));
        }
        if file.chart.dim() == 2 {
            return Ok((file.structure()?.pfaffian()?, d));
        }
        return Err(CliError::Usage("file has no curve block and is not a surface".into()));
    }
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => {
            let mut ids: Vec<String> = Lexer::tokenize(input)
                .map_err(poisson_kit::error::Error::from)?
                .into_iter()
                .filter_map(|(t, _)| match t {
                    Token::Ident(s) => Some(s),
                    _ => None,
                })
                .collect();
            ids.sort();
            ids.dedup();
            if ids.is_empty() {
                ids.push("x".into());
            }
            ids
        }
    };
    let chart = Chart::new(&names)?;
    let f = parse_poly(input, &chart)?;
    Ok((f, digest(format!("{input}\n{}", names.join(",")).as_bytes())))
}

fn run(cli: &Cli) -> Result<(Outcome, String), CliError> {
    match &cli.command {
        Command::Check { file } => {
            let (f, d) = read(file)?;
            Ok((commands::check(&f)?, d))
        }
        Command::Modular { file } => {
            let (f, d) = read(file)?;
            Ok((commands::modular(&f)?, d))
        }
        Command::Report { file, betti } => {
            let (f, d) = read(file)?;
            let betti = betti.as_deref().map(|b| parse_list(b, |x| x.parse::<u64>().ok(), "Betti")).transpose()?;
            Ok((commands::report(&f, betti.as_deref(), cli.budget)?, d))
        }
        Command::Cohomology { file, kmax, wmax, cap } => {
            let (f, d) = read(file)?;
            Ok((commands::cohomology(&f, *kmax, *wmax, *cap)?, d))
        }
        Command::Tjurina { input, vars, point } => {
            let (f, d) = tjurina_input(input, vars.as_deref())?;
            let point: Option<Vec<Rational>> =
                point.as_deref().map(|p| parse_list(p, |x| parse_rational(x).ok(), "point")).transpose()?;
            Ok((commands::tjurina(&f, point.as_deref(), cli.budget)?, d))
        }
        Command::Identities { cases } => {
            let d = digest(format!("seed={};cases={cases}", cli.seed).as_bytes());
            Ok((commands::identities(cli.seed, *cases)?, d))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let name = cli.command.name();
    let code = match outcome {
        Ok((o, d)) => {
            if cli.json {
                println!("{}", envelope(name, &d, o.result, ms));
            } else {
                print!("{}", o.text);
            }
            if o.precondition_failed {
                3
            } else {
                0
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", envelope(name, "", e.to_json(), ms));
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
