use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use treelap::analysis::{Mode, TreeClass};
use treelap::Theorem;

#[derive(Debug, Parser)]
#[command(
    name = "treelap",
    version,
    about = "Exact Laplacian coefficients of trees, the domination order and extremal checks"
)]
pub struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Lift the size guards (14 for pairwise commands, 20 for per-tree ones).
    #[arg(long, global = true)]
    pub force: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Matchings of the subdivision graph.
    Matchings,
    /// Fraction-free determinants and interpolation.
    Charpoly,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient vector of every tree read from the input.
    Coeffs {
        /// Tree file, one tree per line (standard input if absent).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Engine::Matchings)]
        engine: Engine,
    },
    /// Classifies the first two trees of the input under the domination order.
    Compare {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Every tree on n vertices up to isomorphism, optionally filtered.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        perfect_matching: bool,
        /// Starlike trees with this many legs.
        #[arg(long)]
        starlike: Option<usize>,
    },
    /// Pair classification counts for all trees on n vertices.
    ClassifyPairs {
        #[arg(long)]
        n: usize,
    },
    /// Incomparable-pair table for n = min-n ..= max-n.
    Table1 {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Star-to-path chain of strictly increasing coefficient vectors.
    Chain {
        #[arg(long)]
        n: usize,
        /// Check endpoints and strictness; exit 1 on failure.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive check of a monotonicity theorem.
    Verify {
        /// delta, path_shift, two_edge_shift or majorization.
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        max_n: usize,
    },
    /// Per-k extremal trees over a class.
    Extremal {
        #[arg(long)]
        n: usize,
        /// diameter=D, max-degree=D, starlike=K or pm-max-degree=D.
        #[arg(long, value_parser = parse_class)]
        class: TreeClass,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
    },
    /// Closed-form coefficients of the diameter n-3 trees T1 and T2.
    ClosedForm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Where c_k(T2) - c_k(T1) changes sign, against the root of P(x).
    Crossing {
        #[arg(long)]
        n: usize,
    },
    /// Longest chain and largest antichain of the domination order.
    PosetStats {
        #[arg(long)]
        n: usize,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: treelap::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: treelap::Error| e.to_string())
}

pub fn parse_class(s: &str) -> Result<TreeClass, String> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got {s:?}"))?;
    let value: usize = value
        .parse()
        .map_err(|_| format!("not a number: {value:?}"))?;
    match key.replace('_', "-").as_str() {
        "diameter" => Ok(TreeClass::Diameter(value)),
        "max-degree" => Ok(TreeClass::MaxDegree(value)),
        "starlike" => Ok(TreeClass::Starlike(value)),
        "pm-max-degree" => Ok(TreeClass::PerfectMatchingMaxDegree(value)),
        _ => Err(format!(
            "unknown class {key:?} (expected diameter, max-degree, starlike or pm-max-degree)"
        )),
    }
}
