use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser, Debug)]
#[command(name = "fatlab", version, about = "Exact checks on fat 4-polytopes, edge-tangent compounds and surface covers")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Worker threads for parallel experiments.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report here instead of stdout; for `zoo`, write the cell
    /// complex here and exact coordinates next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fatness and Euler check of an f-vector (3 entries for a surface, 4 for a 3-sphere).
    Fvector {
        #[arg(required = true, num_args = 3..=4)]
        counts: Vec<u128>,
    },
    /// f-vector and fatness of the E-construction.
    Econ {
        /// f-vector of Q (simplicial) or of its dual (simple).
        #[arg(num_args = 4, conflicts_with = "family")]
        counts: Vec<u128>,
        #[arg(long, value_enum, default_value_t = Side::Simplicial)]
        from: Side,
        /// Evaluate a compound family instead.
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long, default_value_t = 1)]
        n: u64,
        /// Corona counts (defaults to the corona around one 600-cell).
        #[arg(long)]
        atoms: Option<u64>,
        #[arg(long)]
        bonds: Option<u64>,
        #[arg(long)]
        rings: Option<u64>,
    },
    /// Build an atom and report its combinatorics and hyperbolic angles.
    Zoo {
        #[arg(value_enum)]
        name: ZooName,
        /// Vertices to cut from the 600-cell.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        cuts: Vec<usize>,
    },
    /// Edge-tangent compounds.
    Compounds {
        #[command(subcommand)]
        command: CompoundsCommand,
    },
    /// Covers of surfaces and the sausage 3-sphere.
    Covers {
        #[command(subcommand)]
        command: CoversCommand,
    },
    /// Run every acceptance check.
    VerifyAll {
        /// Run only these checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum CompoundsCommand {
    /// Compounds of simplices.
    Prop4,
    /// Cross polytope with simplices on independent facet sets.
    Prop5,
    /// Jewel catalogs.
    Jewels {
        #[arg(long, value_enum, default_value_t = Tiles::Tri)]
        tiles: Tiles,
    },
    /// Build a chain explicitly and compare with its formula.
    Chain {
        #[arg(long, value_enum)]
        kind: ChainKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Ten doubly-cut 600-cells around a triangle.
    Ring10,
}

#[derive(Subcommand, Debug)]
enum CoversCommand {
    /// The F_q cover S'_g and its structure checks.
    Sgprime {
        #[arg(long)]
        g: u64,
    },
    /// Obstructing loops of S'_g.
    Loops {
        #[arg(long)]
        g: u64,
    },
    /// Random Z/n covers of S'_g tested for strong regularity.
    Experiment {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// S'_g times a path with end caps.
    Sausage {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        slices: u128,
    },
    /// Polynomial accounting of the sausage 3-sphere.
    Thm2 {
        #[arg(long)]
        g: u64,
        #[arg(long, default_value_t = 7)]
        slice_exponent: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Simplicial,
    Simple,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Cross,
    Cut600,
    Corona,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZooName {
    Simplex,
    Cross,
    Cube,
    #[value(name = "600-cell")]
    Cell600,
    #[value(name = "120-cell")]
    Cell120,
    Snub24,
    Cut600,
    Cap,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Tiles {
    Tri,
    Trisq,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChainKind {
    Cross,
    Cut600,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = if cli.json { report.render_json() } else { report.render_text() };
    match (&cli.out, &cli.command) {
        (Some(path), c) if !matches!(c, Command::Zoo { .. }) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{body}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
