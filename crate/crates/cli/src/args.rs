use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use golod_core::{FieldConfig, Guards};

#[derive(Parser, Debug)]
#[command(
    name = "golod",
    version,
    about = "Resolutions, A∞-structures, Massey products and Golod tests for monomial rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Common {
    /// JSON input: {"vars","generators"} or {"m","facets"}; `-` reads stdin.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Generators inline, e.g. "x*y,y*z,x*z".
    #[arg(long, global = true, value_name = "LIST")]
    pub gens: Option<String>,
    /// Variable order for --gens (default: order of first appearance).
    #[arg(long, global = true, value_name = "LIST")]
    pub vars: Option<String>,
    /// Coefficient field: q, f2 or fp:<p>.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldConfig,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true)]
    pub guard_subsets: Option<usize>,
    #[arg(long, global = true)]
    pub guard_perms: Option<usize>,
    #[arg(long, global = true)]
    pub guard_orders: Option<usize>,
    #[arg(long, global = true)]
    pub guard_massey_classes: Option<usize>,
    #[arg(long, global = true)]
    pub guard_bar_basis: Option<usize>,
}

impl Common {
    pub fn guards(&self) -> Guards {
        let mut g = Guards::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut g.subsets, self.guard_subsets);
        set(&mut g.perms, self.guard_perms);
        set(&mut g.orders, self.guard_orders);
        set(&mut g.massey_classes, self.guard_massey_classes);
        set(&mut g.bar_basis, self.guard_bar_basis);
        g
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Taylor resolution of the generator list exactly as given.
    Taylor,
    /// Lyubeznik resolution for --order (identity order by default).
    Lyubeznik,
    /// Rooted resolution for --pi, --order, or the first minimal one found by search.
    Rooted,
}

#[derive(Args, Debug, Default)]
pub struct RootingArgs {
    /// Total order on generators, 1-based, e.g. "2,1,3" meaning m2 < m1 < m3.
    #[arg(long, value_name = "LIST", conflicts_with = "pi")]
    pub order: Option<String>,
    /// Rooting map as JSON {"<lcm>": <generator index>, ...}.
    #[arg(long, value_name = "FILE")]
    pub pi: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a Taylor, Lyubeznik or rooted resolution.
    Resolve {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[command(flatten)]
        rooting: RootingArgs,
        /// Print the differential matrices.
        #[arg(long)]
        emit_matrices: bool,
    },
    /// Gcd condition, product on Tor and μ-minimality, with a consensus verdict.
    Golod {
        #[command(flatten)]
        rooting: RootingArgs,
    },
    /// Tabulate the transferred A∞-structure μ_n.
    Ainfty {
        #[command(flatten)]
        rooting: RootingArgs,
        /// Largest n (default: the degree bound of F).
        #[arg(long)]
        max_n: Option<usize>,
        /// Also verify the transfer identities and the Stasheff identities.
        #[arg(long)]
        verify: bool,
    },
    /// Massey products on Tor^S(R, k), or the (B_r) condition.
    Massey {
        /// Class ids (as listed by this command), e.g. "2,3,2".
        #[arg(long, value_name = "LIST")]
        classes: Option<String>,
        /// Largest arity checked for (B_r) (default: the Massey arity guard).
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Multigraded Betti numbers of S/I.
    Tor,
    /// Serre bound versus bar-complex dimensions of Tor^R(k, k).
    Poincare {
        /// Highest power of t.
        #[arg(long, default_value_t = 3)]
        truncate: usize,
        /// Internal-degree caps per j, e.g. "0,1,2,3".
        #[arg(long, value_name = "LIST")]
        caps: Option<String>,
    },
    /// Cohomology ranks of the moment-angle complex of a facet list.
    MomentAngle,
    /// Search all generator orders for a minimal Lyubeznik resolution.
    SearchOrder,
}

pub fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{what}: `{}` is not a non-negative integer", t.trim()))
        })
        .collect()
}
