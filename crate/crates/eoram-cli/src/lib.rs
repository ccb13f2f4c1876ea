//! The `eoram` command line: argument grammar, dispatch, and exit codes.
//!
//! Exit codes: 0 = success / witness found / value determined; 2 = bad
//! arguments or malformed input; 3 = a search came back negative (no
//! embedding, host does not arrow, nothing saturates); 4 = a budget was
//! exhausted (value unknown, cap or limit exceeded); 5 = a certificate or
//! witness failed verification.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

pub mod commands;
pub mod io;
pub mod repro;

/// Search and certification toolkit for edge-ordered Ramsey numbers.
#[derive(Parser)]
#[command(name = "eoram", version, about)]
pub struct Cli {
    /// Worker threads for parallel searches (0 = all cores). Results do not
    /// depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct OutOpt {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a named graph and print it as JSON.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Find an order-preserving embedding of a pattern in a host.
    Embed {
        /// Pattern graph file (flavor recognized by fields).
        #[arg(long)]
        pattern: PathBuf,
        /// Host graph file of the same flavor.
        #[arg(long)]
        host: PathBuf,
        /// Restrict to edges of `--color` under this coloring.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Color name (`red`, `blue`) or number.
        #[arg(long)]
        color: Option<String>,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Minimal-host Ramsey searches.
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Partitioned-host greedy embedding.
    #[command(subcommand)]
    Greedy(GreedyCmd),
    /// Random edge orderings: containment probabilities and saturation.
    #[command(subcommand)]
    Prob(ProbCmd),
    /// 0/1-matrix pattern containment and weight bounds.
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Parameter words and induced-copy verification.
    #[command(subcommand)]
    Pwords(PwordsCmd),
    /// Re-check an emitted certificate from its own data.
    Verify {
        /// Certificate file.
        #[arg(long)]
        cert: PathBuf,
        /// Copy-enumeration cap for re-run searches.
        #[arg(long, default_value_t = commands::DEFAULT_COPY_CAP)]
        copy_cap: u64,
    },
    /// Run a named reproduction experiment (see `repro list`).
    Repro {
        /// Experiment name, or `list`.
        name: String,
        /// Directory for emitted certificates (default `eoram-certs`).
        #[arg(long)]
        emit_certs: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum ConstructCmd {
    /// Lexicographically edge-ordered complete graph.
    Lex {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Max-lexicographically edge-ordered complete graph.
    MaxLex {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Reversal of the lexicographic complete graph.
    InverseLex {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Reversal of the max-lexicographic complete graph.
    InverseMaxLex {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Path with edges ordered along the path.
    MonotonePath {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Vertex-ordered monotone path.
    MonotonePathVog {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Perfect matching with edges ordered left to right.
    Matching {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Star with edges ordered by leaf.
    Star {
        #[arg(long)]
        leaves: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Lexicographically ordered complete bipartite graph.
    LexBipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Uniformly random edge ordering of the complete graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutOpt,
    },
}

#[derive(Subcommand)]
pub enum RamseyCmd {
    /// Fix the host to the lexicographic complete graph.
    Lex(RamseyArgs),
    /// Vertex-ordered targets in the vertex-ordered complete host.
    Ordered(RamseyArgs),
    /// Unordered targets in the complete host.
    Classic(RamseyArgs),
    /// Best host over all edge-ordering classes of the complete graph.
    Edge(RamseyArgs),
}

#[derive(Args)]
pub struct RamseyArgs {
    /// Target graph file (colored red).
    #[arg(long)]
    pub target: PathBuf,
    /// Second target (colored blue); defaults to the red target.
    #[arg(long)]
    pub blue_target: Option<PathBuf>,
    /// Largest host vertex count to try.
    #[arg(long)]
    pub max_host: usize,
    /// Cap on distinct copies per (host, target) pair.
    #[arg(long, default_value_t = commands::DEFAULT_COPY_CAP)]
    pub copy_cap: u64,
    /// Vertex cap for full ordering-class enumeration (edge search only).
    #[arg(long, default_value_t = eoram_core::ramsey::DEFAULT_CLASS_VERTEX_CAP)]
    pub class_cap: usize,
    /// Write lower/upper certificates into this directory.
    #[arg(long)]
    pub emit_certs: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum GreedyCmd {
    /// Run the greedy procedure on a coloring of the partitioned host.
    Embed {
        /// Target graph file (plain).
        #[arg(long)]
        h: PathBuf,
        /// Part-size parameter t.
        #[arg(long)]
        t: usize,
        /// Red/blue coloring of the complete host, by edge index.
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Print the derived instance (order, parts, host size).
    Instance {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Generate a seeded random coloring of the instance's host.
    SampleColoring {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability that an edge is blue.
        #[arg(long, default_value_t = 0.5)]
        blue_bias: f64,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Re-check a greedy certificate.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum ProbCmd {
    /// Exact containment probability over all edge orderings of the host.
    Exact {
        /// Edge-ordered pattern file.
        #[arg(long)]
        pattern: PathBuf,
        /// Plain host graph file.
        #[arg(long)]
        host: PathBuf,
    },
    /// Monte-Carlo containment estimate.
    Mc {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that every t × t sub-biclique of an ordering contains the
    /// pattern.
    Saturate {
        /// Edge-ordered complete bipartite host.
        #[arg(long)]
        ordering: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        t: usize,
        /// Cap on the number of subset pairs.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Search for a saturating ordering by seeded restarts.
    Search {
        /// Side size of the complete bipartite host.
        #[arg(long)]
        side: usize,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100)]
        restarts: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[command(flatten)]
        out: OutOpt,
    },
    /// First-moment feasibility of the saturation decomposition.
    Feasible {
        /// Pattern vertex count per side.
        #[arg(long)]
        n: usize,
        /// Pattern edge count.
        #[arg(long)]
        m: usize,
        /// Sub-biclique side size.
        #[arg(long)]
        t: usize,
        /// Host side size.
        #[arg(long)]
        side: usize,
    },
}

#[derive(Subcommand)]
pub enum MatrixCmd {
    /// Does a matrix contain a pattern as an order-preserving submatrix?
    Contains {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// The staircase path pattern on n vertices.
    Pattern {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Weight bound for matrices avoiding the path pattern.
    Bound {
        /// Path vertex count.
        #[arg(long)]
        n: usize,
        /// Host vertex count.
        #[arg(long)]
        big_n: usize,
    },
    /// Closed-form host-size bound for monotone paths in the
    /// lexicographic host.
    LexBound {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive maximum weight of pattern-avoiding matrices.
    Oracle {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
}

#[derive(Subcommand)]
pub enum PwordsCmd {
    /// Substitute g into the parameter slots of f.
    Compose {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[command(flatten)]
        out: OutOpt,
    },
    /// The subset-host edge encoded by a 3-parameter word.
    Edge {
        #[arg(long)]
        word: PathBuf,
    },
    /// The subsets selected by an (n+m)-parameter word for a target.
    Extract {
        #[arg(long)]
        word: PathBuf,
        /// Edge-ordered target file.
        #[arg(long)]
        target: PathBuf,
    },
    /// Verify the extracted copy against a named coloring rule.
    Verify {
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Ground-set size of the subset host.
        #[arg(long)]
        ground: usize,
        /// Coloring rule: `parity` (of the least common element) or
        /// `constant:<c>`.
        #[arg(long, default_value = "parity")]
        chi: String,
        /// Accept words whose parameter blocks are out of order.
        #[arg(long)]
        relaxed: bool,
    },
}

/// Parse `std::env::args`, run, and return the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Ignore failure: the global pool can only be set once (tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match commands::dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

/// Map an error to the documented exit code family.
pub fn exit_code_for(e: &eoram_core::Error) -> i32 {
    use eoram_core::Error;
    match e {
        Error::LimitExceeded { .. } | Error::CapExceeded { .. } => 4,
        Error::VerificationFailed(_) | Error::NotMonochromaticWord { .. } => 5,
        _ => 2,
    }
}
