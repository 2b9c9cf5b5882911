use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::board::{BoardMode, Position, Variant};
use crate::duotaire::{Engine, EngineError, SearchOutcome, DEFAULT_SEARCH_LEN};
use crate::solver::{is_solvable, min_pegs, solve_to_one};

use super::api::{self, AppState};
use super::cache;
use super::verify::{self, Suite};

const DOMAIN_ERROR: u8 = 1;
const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "peglab", version, about = "One-dimensional peg solitaire and duotaire")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Single,
    Multi,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Single => Variant::SingleHop,
            VariantArg::Multi => Variant::MultiHop,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Fixed,
    Open,
}

impl From<ModeArg> for BoardMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Fixed => BoardMode::Fixed,
            ModeArg::Open => BoardMode::Open,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a board to a single peg
    Solve {
        board: String,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: ModeArg,
    },
    /// Fewest pegs a board can be reduced to, with a plan
    Minpegs {
        board: String,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: ModeArg,
    },
    /// Nim-value of a duotaire position
    Grundy {
        board: String,
        #[arg(long, value_enum, default_value = "multi")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: ModeArg,
    },
    /// Every move to a zero position
    Best {
        board: String,
        #[arg(long, value_enum, default_value = "multi")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "fixed")]
        mode: ModeArg,
    },
    /// First peg word w whose board 0w0 has each value up to --max-g
    SearchFirst {
        #[arg(long, value_enum, default_value = "single")]
        variant: VariantArg,
        #[arg(long)]
        max_g: u32,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LEN)]
        max_len: usize,
    },
    /// Rerun a reproduction suite
    Verify {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
    },
    /// Serve the HTTP API
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "PEGLAB_CACHE")]
        cache: Option<PathBuf>,
    },
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}

type Failure = (u8, String);

fn parse(board: &str, mode: ModeArg) -> Result<Position, Failure> {
    Position::parse(board, mode.into()).map_err(|e| (USAGE_ERROR, e.to_string()))
}

fn engine_failure(e: EngineError) -> Failure {
    (DOMAIN_ERROR, e.to_string())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve { board, mode } => {
            let p = parse(&board, mode)?;
            if !is_solvable(&p) {
                return Err((DOMAIN_ERROR, "not solvable".into()));
            }
            let moves = solve_to_one(&p).map_err(|e| (DOMAIN_ERROR, e.to_string()))?;
            let mut cur = p;
            for m in &moves {
                cur = cur.apply(m).expect("strategy moves are legal");
                println!("{m}  {}", cur.render());
            }
            println!("{} moves", moves.len());
        }
        Command::Minpegs { board, mode } => {
            let p = parse(&board, mode)?;
            let (k, plan) = min_pegs(&p).map_err(|e| (DOMAIN_ERROR, e.to_string()))?;
            println!("{k}");
            let segments: Vec<String> = plan.segments.iter().map(|(lo, hi)| format!("{lo}..{hi}")).collect();
            println!("segments {}", segments.join(" "));
            let mut cur = p;
            for m in &plan.moves {
                cur = cur.apply(m).expect("plans replay");
                println!("{m}  {}", cur.render());
            }
        }
        Command::Grundy { board, variant, mode } => {
            let p = parse(&board, mode)?;
            let g = Engine::shared().grundy(&p, variant.into()).map_err(engine_failure)?;
            println!("{g}");
        }
        Command::Best { board, variant, mode } => {
            let p = parse(&board, mode)?;
            let moves = Engine::shared().best_moves(&p, variant.into()).map_err(engine_failure)?;
            for m in moves {
                println!("{m}  {}", p.apply(&m).expect("generated moves are legal").render());
            }
        }
        Command::SearchFirst { variant, max_g, max_len } => {
            let table = Engine::shared().first_positions(max_g, variant.into(), max_len);
            let mut missing = false;
            for (g, row) in table.iter().enumerate() {
                match row {
                    SearchOutcome::Found(w) => println!("{g} {w}"),
                    SearchOutcome::NotFound { max_len } => {
                        missing = true;
                        println!("{g} not found within length {max_len}");
                    }
                }
            }
            if missing {
                return Err((DOMAIN_ERROR, "search bound exhausted".into()));
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(|e| (USAGE_ERROR, e))?;
            let checks = verify::run(suite, Engine::shared());
            let failed = checks.iter().filter(|c| !c.passed).count();
            for c in &checks {
                println!("{c}");
            }
            if failed > 0 {
                return Err((DOMAIN_ERROR, format!("{failed} of {} checks failed", checks.len())));
            }
        }
        Command::Serve { port, cache: cache_path } => {
            let _ = tracing_subscriber::fmt().try_init();
            let engine = Engine::new();
            if let Some(path) = &cache_path {
                let n = cache::warm(path, engine.memo()).map_err(|e| (DOMAIN_ERROR, e.to_string()))?;
                tracing::info!("loaded {n} cached values from {}", path.display());
            }
            let state = Arc::new(AppState::new(engine, cache_path));
            let rt = tokio::runtime::Runtime::new().map_err(|e| (DOMAIN_ERROR, e.to_string()))?;
            rt.block_on(api::serve(port, state)).map_err(|e| (DOMAIN_ERROR, e.to_string()))?;
        }
    }
    Ok(())
}
