use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Multigraded local cohomology and Ext modules at squarefree monomial ideals.
#[derive(Debug, Parser)]
#[command(name = "moncoh", version, about)]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Coefficient field: `rational` or `gf <p>`. Overrides the input file.
    #[arg(long, global = true)]
    pub field: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ideal,
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    Ext,
    Lc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander dual generators.
    Dual { file: PathBuf },

    /// The complex Δ; with --alpha the complex Δ_α, with --nerve the complex T on generators.
    Complex {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, requires = "alpha")]
        nerve: bool,
    },

    /// Multigraded Betti diagram.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ideal")]
        of: Which,
    },

    /// dim H^i_B(R)_α.
    Lc {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Use the complex on generators instead of Δ.
        #[arg(long)]
        via_t: bool,
    },

    /// dim Ext^i_R(R/B, R)_α.
    Ext {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },

    /// Matrix of multiplication by a variable from degree α to α + e_var.
    Mult {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        var: String,
    },

    /// Subquotients of the degree filtration of Ext^i_R(R/B, R).
    Filtration {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
    },

    /// Associated primes of Ext^i_R(R/B, R).
    Ass {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
        #[arg(long)]
        minimal: bool,
    },

    /// Hilbert function on a box, or the closed-form Hilbert series.
    Hilbert {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        index: i64,
        /// Box `lo..hi`, applied to every coordinate.
        #[arg(
            long = "box",
            allow_hyphen_values = true,
            conflicts_with = "closed_form"
        )]
        bounds: Option<String>,
        #[arg(long)]
        closed_form: bool,
        #[arg(long, value_enum, default_value = "ext")]
        module: ModuleArg,
    },

    /// Betti inequality between the ideal and its dual, with extremal cases.
    Check { file: PathBuf },

    /// Cross-check every computation against the independent oracles.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also verify this many seeded random ideals.
        #[arg(long)]
        random: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dual { .. } => "dual",
            Command::Complex { .. } => "complex",
            Command::Betti { .. } => "betti",
            Command::Lc { .. } => "lc",
            Command::Ext { .. } => "ext",
            Command::Mult { .. } => "mult",
            Command::Filtration { .. } => "filtration",
            Command::Ass { .. } => "ass",
            Command::Hilbert { .. } => "hilbert",
            Command::Check { .. } => "check",
            Command::Verify { .. } => "verify",
        }
    }

    pub fn file(&self) -> &PathBuf {
        match self {
            Command::Dual { file }
            | Command::Complex { file, .. }
            | Command::Betti { file, .. }
            | Command::Lc { file, .. }
            | Command::Ext { file, .. }
            | Command::Mult { file, .. }
            | Command::Filtration { file, .. }
            | Command::Ass { file, .. }
            | Command::Hilbert { file, .. }
            | Command::Check { file }
            | Command::Verify { file, .. } => file,
        }
    }
}
