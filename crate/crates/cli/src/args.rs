use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lefschetz", version, about = "Exact invariants of Lefschetz fibrations on adjoint orbits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    SimpleRoot,
    FundamentalWeight,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical set, critical values and fiber topology of f_H on the orbit of H0.
    Orbit(OrbitArgs),
    /// Flag-manifold Hodge diamonds, mirror reflection and checks.
    #[command(subcommand)]
    Diamond(DiamondCommand),
    /// Directed categories of vanishing cycles at rank level.
    #[command(subcommand)]
    Fukaya(FukayaCommand),
    /// Fibers of the mirror potential g = y.
    #[command(subcommand)]
    Mirror(MirrorCommand),
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Cartan type such as A2, B3, E8.
    #[arg(long = "type")]
    pub cartan_type: String,

    /// H0 as comma-separated rationals, e.g. 1,0 or 2/3,1/3.
    #[arg(long, allow_hyphen_values = true)]
    pub h0: String,

    /// H as comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub h: String,

    /// Basis of the --h0 and --h coordinates.
    #[arg(long, value_enum, default_value_t = Basis::FundamentalWeight)]
    pub basis: Basis,

    /// Largest orbit to enumerate.
    #[arg(long, env = "LEFSCHETZ_ORBIT_CAP", default_value_t = lefschetz_core::DEFAULT_ORBIT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum DiamondCommand {
    /// Hodge diamond of G/P_theta.
    Flag {
        #[arg(long = "type")]
        cartan_type: String,
        /// One-based simple roots spanning the Levi factor, e.g. 2 or 1,3.
        #[arg(long, default_value = "")]
        theta: String,
        #[arg(long, env = "LEFSCHETZ_ORBIT_CAP", default_value_t = lefschetz_core::DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Reflect a diamond across the 45-degree line.
    Reflect {
        #[arg(long)]
        input: PathBuf,
    },
    /// Serre, conjugation and connectedness checks plus the vampire flag.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum FukayaCommand {
    /// The two-thimble category.
    Lg2,
    /// Objects from the critical points of an orbit report, Homs from --hom.
    FromOrbit {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Hom ranks as `i,j:deg:rank,deg:rank`; repeatable.
        #[arg(long = "hom")]
        homs: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MirrorCommand {
    /// Classify the fiber over a level `re` or `re,im`.
    Fiber {
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Levels with singular fibers.
    CriticalLevels,
    /// Rank-level comparison table of both sides.
    Consistency,
}
