use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twistspec_core::group::DEFAULT_ORDER_CAP;
use twistspec_core::search::DEFAULT_PRODUCT_BUDGET;
use twistspec_core::Method;

#[derive(Parser, Debug)]
#[command(
    name = "twistspec",
    version,
    about = "Reidemeister numbers and spectra of finite permutation groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Limits {
    /// Maximum number of group products per morphism enumeration
    #[arg(long, env = "TWISTSPEC_BUDGET", default_value_t = DEFAULT_PRODUCT_BUDGET)]
    pub budget: u64,

    /// Largest group order that will be materialized
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Fixed,
    Orbits,
    Checked,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fixed => Method::FixedClasses,
            MethodArg::Orbits => Method::Orbits,
            MethodArg::Checked => Method::Checked,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, class number, class sizes, centre and structural flags
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
    },
    /// Reidemeister spectrum over automorphisms (and endomorphisms with --extended)
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Fixed)]
        method: MethodArg,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
    },
    /// Run the theorem battery with both Reidemeister methods
    Verify {
        file: PathBuf,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
    },
    /// Classify every group definition in a directory
    Survey {
        dir: PathBuf,
        /// Comma-separated conditions, e.g. `full_extended_spectrum=true,order<=120`
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Fixed)]
        method: MethodArg,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the built-in catalog as definition files
    ExportCatalog { dir: PathBuf },
}
