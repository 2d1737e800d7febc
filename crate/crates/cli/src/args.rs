use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pml",
    version,
    about = "Poison modal logic: model checking, the Poison Game and friends"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Role {
    Proponent,
    Opponent,
}

impl From<Role> for pml::game::Player {
    fn from(r: Role) -> Self {
        match r {
            Role::Proponent => pml::game::Player::Proponent,
            Role::Opponent => pml::game::Player::Opponent,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula on a model, or search small models for a
    /// countermodel (or a satisfying model with --sat).
    Check(CheckArgs),
    /// Solve the Poison Game on a model.
    Solve(SolveArgs),
    /// List the nonempty semi-kernels of a model's graph.
    Semikernels(ModelArg),
    /// List the admissible sets of a model read as an attack graph.
    Admissible(ModelArg),
    /// Decide p-bisimilarity of two pointed models.
    Bisim(BisimArgs),
    /// Translate a formula into first-order, memory or hybrid logic.
    Translate(TranslateArgs),
    /// Emit a generated formula or fixture model.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run a bounded exhaustive cross-check.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Serve the HTTP play API.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// Model file (JSON).
    #[arg(long)]
    pub model: PathBuf,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Model file; without it, small models are searched.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Formula text, or `@path` to read it from a file.
    #[arg(long)]
    pub formula: String,
    /// State to evaluate at; without it, the full truth set is reported.
    #[arg(long)]
    pub state: Option<String>,
    /// Largest model size searched.
    #[arg(long, default_value_t = 3)]
    pub max_states: usize,
    /// Draw random models from this seed instead of enumerating.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random models drawn.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u128,
    /// Look for a satisfying point instead of a countermodel.
    #[arg(long)]
    pub sat: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub model: PathBuf,
    /// Refuse models larger than this.
    #[arg(long, default_value_t = pml::game::DEFAULT_GAME_STATES)]
    pub max_states: usize,
    /// Include both players' strategies.
    #[arg(long)]
    pub strategies: bool,
}

#[derive(Debug, Args)]
pub struct BisimArgs {
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long)]
    pub state: String,
    /// Second model; defaults to the first.
    #[arg(long)]
    pub against: Option<PathBuf>,
    #[arg(long)]
    pub against_state: String,
    /// Only decide equivalence up to this modal depth.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Include the relation in the output.
    #[arg(long)]
    pub relation: bool,
    /// Apply the clauses for every relation index.
    #[arg(long)]
    pub multi_index: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// First-order logic.
    St,
    /// Memory logic.
    Mt,
    /// Hybrid logic with the down-arrow binder.
    Ht,
}

#[derive(Debug, Args)]
pub struct TranslateArgs {
    #[arg(long)]
    pub formula: String,
    #[arg(long, value_enum)]
    pub to: Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Opponent,
    Proponent,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// The n-step circuit formula.
    Delta {
        #[arg(long)]
        n: usize,
    },
    /// The first k terms of a winning-position formula.
    Win {
        #[arg(long, value_enum)]
        player: Side,
        #[arg(long)]
        k: usize,
    },
    /// The admissibility formula over atom p.
    Admissibility,
    /// The formula whose models are all infinite.
    Fmp,
    /// The six poison-modality validities for given instances.
    Validities {
        #[arg(long, default_value = "p")]
        phi: String,
        #[arg(long, default_value = "q")]
        psi: String,
    },
    /// The tiling formula for a tile set (JSON list of {top,right,bottom,left}).
    Tiling {
        #[arg(long)]
        tiles: PathBuf,
        /// Reproduce the construction exactly as printed.
        #[arg(long)]
        verbatim: bool,
    },
    /// A k-by-k torus fixture for a tile set.
    Torus {
        #[arg(long)]
        tiles: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Tile indices per cell as JSON rows, e.g. `[[0,1],[1,0]]`;
        /// defaults to tile 0 everywhere.
        #[arg(long)]
        grid: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Proponent can win somewhere iff a nonempty semi-kernel exists.
    SemiKernels {
        #[arg(long, default_value_t = 4)]
        max_states: usize,
    },
    /// The six validities on every small model.
    Validities {
        #[arg(long, default_value_t = 3)]
        max_states: usize,
    },
    /// The circuit formulas against walk search.
    Circuits {
        #[arg(long, default_value_t = 4)]
        max_states: usize,
        /// Largest circuit length checked.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// The winning-position formulas against the solver.
    Winning {
        #[arg(long, default_value_t = 3)]
        max_states: usize,
        /// Prefix length; defaults to the number of game positions.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The infinite-model formula has no small model.
    Fmp {
        #[arg(long, default_value_t = 3)]
        max_states: usize,
    },
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    /// Model used when a session is created without one.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Role given to the human when a session does not choose one.
    #[arg(long, value_enum, default_value_t = Role::Proponent)]
    pub role: Role,
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value_t = pml::game::DEFAULT_GAME_STATES)]
    pub max_states: usize,
}
