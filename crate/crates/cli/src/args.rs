use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "zerosum",
    version,
    about = "Zero-sum invariants of finite abelian groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Stop a search after this many nodes.
    #[arg(long, global = true, value_name = "N")]
    pub budget_nodes: Option<u64>,
    /// Stop a search after this many seconds.
    #[arg(long, global = true, value_name = "S")]
    pub budget_seconds: Option<f64>,
    /// Worker threads for searches.
    #[arg(long, global = true, value_name = "W", default_value_t = 1)]
    pub workers: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, value_name = "X", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Known-values table to use instead of the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    pub data: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute s_L(G) by exhaustive search.
    Invariant(InvariantArgs),
    /// Build a lower-bound or extremal sequence.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Check the length and shortest zero-sum of a sequence.
    Verify(VerifyArgs),
    /// Report the binomial coefficients a_i mod p and the short zero-sum criterion.
    Criteria(CriteriaArgs),
    /// Evaluate the upper-bound claims for a group and optionally check them.
    Theorems(TheoremsArgs),
    /// Build the s_{≤D−j} threshold table and locate k_G.
    Conjectures(ConjecturesArgs),
    /// Run the seeded i₀ sweep and property suites.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct InvariantArgs {
    /// Group spec, e.g. C2^3 or C2xC4.
    pub group: String,
    #[command(flatten)]
    pub which: Which,
    /// Length cap for non-interval L.
    #[arg(long)]
    pub horizon: Option<u64>,
    /// Reduce the search by automorphisms (homocyclic groups).
    #[arg(long)]
    pub symmetry: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Which {
    /// L = [1, K].
    #[arg(long, value_name = "K")]
    pub leq: Option<u64>,
    /// L = {M}.
    #[arg(long, value_name = "M")]
    pub exactly: Option<u64>,
    /// L = all positive lengths.
    #[arg(long)]
    pub davenport: bool,
    /// L = [1, exp(G)].
    #[arg(long)]
    pub eta: bool,
    /// L = {exp(G)}.
    #[arg(long)]
    pub egz: bool,
    /// L = {K·exp(G)}.
    #[arg(long, value_name = "K")]
    pub kexp: Option<u64>,
    /// L = an explicit list of lengths.
    #[arg(long = "L", value_name = "a,b,c", value_delimiter = ',')]
    pub lengths: Option<Vec<u64>>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Homocyclic lower-bound sequence over C_n^r of length 2^{r−1}(n−1)+k.
    Lowercnr { n: u64, r: usize, k: u64 },
    /// Lower-bound sequence of length D*+k−1 for a rank ≥ 2 group.
    General {
        group: String,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Extremal sequence over C_n ⊕ C_n for the given k.
    Inv2 {
        n: u64,
        k: u64,
        /// Coefficients x_1..x_n with sum ≡ 1 (mod n), for k ≤ 1.
        #[arg(long, value_delimiter = ',', conflicts_with = "x")]
        xs: Option<Vec<u64>>,
        /// Unit x, for k = n − 1.
        #[arg(long)]
        x: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub group: String,
    /// Sequence text such as "1,0^2; 0,1^2"; "-" reads stdin.
    pub sequence: String,
    /// Required length; defaults to the sequence's own length.
    #[arg(long)]
    pub len: Option<usize>,
    /// Every zero-sum subsequence must be at least this long.
    #[arg(long)]
    pub min_zs: usize,
}

#[derive(Args, Debug)]
pub struct CriteriaArgs {
    /// Group of a zero-sum sequence T; with SEQUENCE, p, |T| and D come from it.
    #[arg(requires = "sequence")]
    pub group: Option<String>,
    pub sequence: Option<String>,
    #[arg(long)]
    pub k: u64,
    #[arg(long, required_unless_present = "group")]
    pub p: Option<u64>,
    #[arg(long = "T-len", alias = "t-len", required_unless_present = "group")]
    pub t_len: Option<u64>,
    /// Davenport constant; defaults to D*(G) with a sequence.
    #[arg(long = "D", required_unless_present = "group")]
    pub d: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TheoremsArgs {
    /// Group whose claims are evaluated.
    #[arg(required_unless_present = "case")]
    pub group: Option<String>,
    /// Elementary shape: power2:T, fourth:P or diagonal:P,D.
    #[arg(long, conflicts_with = "group")]
    pub case: Option<String>,
    /// Search for the bounded invariant of every active claim in range.
    #[arg(long)]
    pub check: bool,
    /// Also test that T·g² has a short zero-sum for minimal zero-sum T of length D−1.
    #[arg(long)]
    pub tg: bool,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    pub group: String,
    /// Read values from the known-values table instead of searching.
    #[arg(long)]
    pub bundled: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Primes to sweep.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    pub p: Vec<u64>,
    /// Largest |T| in the i₀ sweep.
    #[arg(long = "max-T", alias = "max-t", default_value_t = 400)]
    pub max_t: u64,
    /// Values of t in the lifted and unit shapes.
    #[arg(long, value_delimiter = ',', default_value = "0,1")]
    pub t: Vec<u32>,
    /// Samples per randomized suite.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}
