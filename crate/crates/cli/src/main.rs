//! `hm`: counts, lifting invariants, Brauer groups and predicted constants for
//! G-covers of the projective line over a finite field.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hm", version, about = "Hurwitz spaces, lifting invariants and Malle constants over F_q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Enumeration budget; defaults to HM_BUDGET or 1e8.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    /// Builtin name (Z4, S3, D4, Q8, A4, Z2xZ2, PSL2_7, …) or a JSON file.
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: u64,
    /// Element σ for the inner twist of G.
    #[arg(long)]
    pub twist: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct HeightArgs {
    /// Per-class weights: `v1,v2,…` or `class:value,…`.
    #[arg(long)]
    pub f: Option<String>,
    /// Height at ∞: weight, zero or per:v0,v1,….
    #[arg(long = "h-inf", default_value = "weight")]
    pub h_inf: String,
    /// Local condition at ∞: all, unramified, gamma:c,… or points:σ/γ;….
    #[arg(long, default_value = "all")]
    pub omega: String,
    /// Degree cutoff for the regularized Euler products.
    #[arg(long, default_value_t = 20)]
    pub cutoff: u64,
    /// Elements of M for the unbalanced case.
    #[arg(long)]
    pub m: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, classes, center and abelianization.
    Group(GroupArg),
    /// Braid orbits on tuples of a given multidegree and boundary.
    Orbits {
        #[command(flatten)]
        group: GroupArg,
        /// Multidegree per class (identity entry optional).
        #[arg(long)]
        nbar: String,
        /// Boundary monodromy γ; the product of the tuple is γ⁻¹.
        #[arg(long, default_value_t = 0)]
        gamma: usize,
        /// Only tuples generating G.
        #[arg(long)]
        connected: bool,
    },
    /// H₂(G,C) with its Smith normal form certificate.
    H2 {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "all")]
        classes: String,
    },
    /// Lifting invariant of a tuple.
    Lifting {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "all")]
        classes: String,
        /// Tuple of elements of C.
        #[arg(long)]
        tuple: String,
    },
    /// The Brauer classes (α, ψ) and the size identity.
    Brauer {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "all")]
        classes: String,
    },
    /// Points of configuration spaces of colored points on A¹.
    Conf {
        #[arg(long)]
        q: u64,
        /// Frobenius orbit degree of each color.
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        nbar: String,
        /// Also count by listing polynomials.
        #[arg(long)]
        brute: bool,
    },
    /// Poles, period and per-(α, β) terms of the leading constant.
    Constant {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        height: HeightArgs,
    },
    /// c_H(d) and the main term for a range of d.
    Predict {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        height: HeightArgs,
        #[arg(long)]
        d: String,
    },
    /// Predicted main term against exact Kummer counts for cyclic G.
    CompareOracle {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        height: HeightArgs,
        #[arg(long)]
        d: String,
        /// Exit nonzero if any relative deviation exceeds --tolerance.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 0.0)]
        tolerance: f64,
    },
    /// Möbius function of abelian groups, or the interval M ⊆ L ⊆ G.
    Mobius {
        /// Invariants of an abelian group, e.g. 2,4.
        #[arg(long)]
        invariants: Option<String>,
        #[arg(long)]
        group: Option<String>,
        /// Elements of a normal subgroup M.
        #[arg(long)]
        m: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => match report::emit(&report, cli.format, cli.out.as_deref()) {
            Ok(()) if report.passed => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
