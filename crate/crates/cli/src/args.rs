use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "aybe", version, about = "Belavin-Drinfeld triples, associative r-matrices and their identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List Belavin-Drinfeld triples for sl_n with associativity flags.
    Enumerate(EnumerateArgs),
    /// Build an r-matrix for one structure and serialise it.
    Build(BuildArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    Associative,
    Cg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Classical,
    Ggs,
    Ruv,
    Baxterized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    /// GGS: `assoc` (cyclic-permutation form) or `general`; r(u,v): `afgq` or `gruv`.
    Default,
    Assoc,
    General,
    Afgq,
    Gruv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StructureSet {
    /// Every triple if `n` is within the enumeration bound, else Cremmer-Gervais only.
    Auto,
    All,
    Cg,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of stdout; defaults to a file under $AYBE_OUTPUT_DIR when set.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, env = "AYBE_OUTPUT_DIR", hide_env_values = true)]
    pub output_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Filter::All)]
    pub filter: Filter,
    #[arg(long, default_value_t = aybe_core::bd::DEFAULT_ENUMERATION_BOUND)]
    pub bound: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Selector {
    /// Cremmer-Gervais triple with parameter m.
    #[arg(long, conflicts_with_all = ["trivial", "triple_file"])]
    pub cg: Option<usize>,
    #[arg(long, conflicts_with = "triple_file")]
    pub trivial: bool,
    /// Structure JSON (`n`, `gamma1`, `gamma2`, `t_map`, optional `tilde_t`).
    #[arg(long)]
    pub triple_file: Option<PathBuf>,
    /// Images of 1..n under the cyclic permutation, e.g. "2,3,1".
    #[arg(long)]
    pub perm: Option<String>,
    /// `s0` or `s0+phi:<d1>,...,<dn>` with rational diagonal entries.
    #[arg(long, default_value = "s0")]
    pub s: String,
}

impl Selector {
    pub fn is_set(&self) -> bool {
        self.cg.is_some() || self.trivial || self.triple_file.is_some()
    }
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub select: Selector,
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long, value_enum, default_value_t = Formula::Default)]
    pub formula: Formula,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub select: Selector,
    /// Verify a matrix document written by `build` instead of a structure.
    #[arg(long, conflicts_with_all = ["cg", "trivial", "triple_file"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    pub mode: ModeArg,
    /// Comma-separated subset of cybe,qybe,hecke,aybe,unitarity,lift,rRc,cab,ps,cross-formula, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also run cab on triples that admit no compatible permutation.
    #[arg(long)]
    pub include_nonassociative: bool,
    #[arg(long, value_enum, default_value_t = StructureSet::Auto)]
    pub structures: StructureSet,
    #[arg(long, default_value_t = aybe_core::bd::DEFAULT_ENUMERATION_BOUND)]
    pub bound: usize,
    #[command(flatten)]
    pub out: Output,
}
