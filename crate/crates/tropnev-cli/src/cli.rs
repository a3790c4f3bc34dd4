//! Argument surface and dispatch onto the command handlers.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{self, Outcome};
use crate::config::{self, ConfigInputs, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "tropnev",
    version,
    about = "Tables and checks for max-plus value distribution",
    long_about = "Evaluates piecewise-linear max-plus functions, tabulates their proximity, \
                  counting, and characteristic functionals over radius grids, and runs the \
                  bundled identity and inequality checks. Output is CSV (default) or JSON, \
                  always prefixed with the resolved run configuration. Exit codes: 0 success, \
                  1 a check failed, 2 bad usage or unparsable input."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Function: grammar text like '0:1|0/0:1|1', a JSON document, or a
    /// file holding either; repeatable where a family is expected.
    #[arg(
        short = 'f',
        long = "function",
        value_name = "EXPR",
        allow_hyphen_values = true
    )]
    pub function: Vec<String>,

    /// Projective map as a JSON document or a file holding one.
    #[arg(long, value_name = "JSON")]
    pub map: Option<String>,

    /// Hypersurface as a JSON document or a file; repeatable.
    #[arg(long = "hyper", value_name = "JSON")]
    pub hyper: Vec<String>,

    /// Radius grid min:max:count[:log]; linear spacing unless log.
    #[arg(long = "r", value_name = "MIN:MAX:COUNT[:LOG]")]
    pub r: Option<String>,

    /// Sphere quadrature node count (even, at least 2); the default is
    /// dimension-dependent.
    #[arg(long = "K", value_name = "N")]
    pub k: Option<usize>,

    /// Quadrature seed; the TROPNEV_SEED environment variable is the
    /// fallback, then 0.
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,

    /// Tolerance for checks and point classification.
    #[arg(long, value_name = "EPS")]
    pub tol: Option<f64>,

    /// Write the output to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, value_name = "FMT")]
    pub format: Option<FormatArg>,

    /// JSON file with defaults for r, K, seed, tol, format; flags win.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

impl CommonOpts {
    fn one_function(&self) -> Result<&str, String> {
        match self.function.as_slice() {
            [one] => Ok(one),
            [] => Err("this command needs -f/--function".into()),
            _ => Err("this command takes exactly one -f/--function".into()),
        }
    }

    fn the_map(&self) -> Result<&str, String> {
        self.map
            .as_deref()
            .ok_or_else(|| "this command needs --map".into())
    }

    fn inputs(&self) -> ConfigInputs<'_> {
        ConfigInputs {
            r: self.r.as_deref(),
            k: self.k,
            seed: self.seed,
            tol: self.tol,
            format: self.format.map(Into::into),
            config: self.config.as_deref(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Evaluate a function at points.
    Eval {
        #[command(flatten)]
        common: CommonOpts,
        /// Evaluation point x1,x2,...; repeatable.
        #[arg(long = "at", value_name = "POINT", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Classify points as smooth, root, or pole with multiplicities.
    Classify {
        #[command(flatten)]
        common: CommonOpts,
        /// Point to classify x1,x2,...; repeatable.
        #[arg(long = "at", value_name = "POINT", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Restrict a function to a ray and list the slope breakpoints.
    Slice {
        #[command(flatten)]
        common: CommonOpts,
        /// Ray direction d1,d2,... (normalized internally); all ones by
        /// default.
        #[arg(long, value_name = "DIR", allow_hyphen_values = true)]
        dir: Option<String>,
        /// Half-width of the scanned interval; the grid maximum by default.
        #[arg(long, value_name = "R")]
        radius: Option<f64>,
    },
    /// Tabulate proximity, counting density, counting, and characteristic
    /// over the radius grid.
    Charfun {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Check the Jensen identity residual over the radius grid; fails when
    /// the largest residual exceeds the tolerance.
    Jensen {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Gap of the level-shifted characteristic against the base one; fails
    /// when the level sits at or above the pole value floor.
    Fmt {
        #[command(flatten)]
        common: CommonOpts,
        /// Level a joined to the function by the tropical sum.
        #[arg(
            short = 'a',
            long = "level",
            value_name = "A",
            allow_hyphen_values = true
        )]
        level: f64,
    },
    /// Additive shift-quotient proximity against its closed-form bound;
    /// the bound check runs in one variable and fails on violation.
    Ldl {
        #[command(flatten)]
        common: CommonOpts,
        /// Shift vector c1,c2,...; all ones by default.
        #[arg(long = "c", value_name = "C", allow_hyphen_values = true)]
        c: Option<String>,
        /// Radius inflation of the bound; must exceed 1.
        #[arg(long, value_name = "A", default_value_t = 2.0, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Multiplicative shift-quotient proximity next to the characteristic
    /// (observational, no check).
    Qldl {
        #[command(flatten)]
        common: CommonOpts,
        /// Argument scale q of the shift x -> q x.
        #[arg(long, value_name = "Q", default_value_t = 2.0, allow_hyphen_values = true)]
        scale: f64,
    },
    /// Cartan characteristic of a projective map over the radius grid.
    Cartan {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Hypersurface first-main-theorem report; fails when the residual
    /// spread exceeds the coefficient spread.
    Hyperfmt {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Defect estimate of hypersurfaces under a map: one --hyper gives the
    /// single estimate in [0, 1], several give the defect-sum report.
    Defect {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Root counting of the Casorati determinant of a shifted family of
    /// entire functions (repeat -f for the base).
    Casorati {
        #[command(flatten)]
        common: CommonOpts,
        /// Translation step c1,c2,...; all ones by default.
        #[arg(long = "c", value_name = "C", allow_hyphen_values = true)]
        c: Option<String>,
        /// Multiplicative step q (outside 0 and 1) instead of a translation.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        scale: Option<f64>,
    },
    /// Tropical determinant (permanent under max-plus) of a matrix.
    Det {
        #[command(flatten)]
        common: CommonOpts,
        /// Matrix as JSON rows, e.g. '[[1,2],[3,4]]'; "-inf" is a legal
        /// entry.
        #[arg(short = 'A', long = "matrix", value_name = "JSON")]
        matrix: String,
    },
    /// Second-main-theorem report for an additive shift; fails when the
    /// inequality slack dips below -tol on a non-vacuous instance.
    Smt {
        #[command(flatten)]
        common: CommonOpts,
        /// Shift vector c1,c2,...; all ones by default.
        #[arg(long = "c", value_name = "C", allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Second-main-theorem report for a multiplicative shift; needs a
    /// geometric grid (use :log).
    Qsmt {
        #[command(flatten)]
        common: CommonOpts,
        /// Argument scale q of the shift x -> q x.
        #[arg(long, value_name = "Q", default_value_t = 2.0, allow_hyphen_values = true)]
        scale: f64,
    },
    /// Growth order and hyper-order estimates from the tabulated
    /// characteristic; the grid must span three decades.
    Growth {
        #[command(flatten)]
        common: CommonOpts,
    },
}

impl Cli {
    pub fn common(&self) -> &CommonOpts {
        match &self.cmd {
            Cmd::Eval { common, .. }
            | Cmd::Classify { common, .. }
            | Cmd::Slice { common, .. }
            | Cmd::Charfun { common }
            | Cmd::Jensen { common }
            | Cmd::Fmt { common, .. }
            | Cmd::Ldl { common, .. }
            | Cmd::Qldl { common, .. }
            | Cmd::Cartan { common }
            | Cmd::Hyperfmt { common }
            | Cmd::Defect { common }
            | Cmd::Casorati { common, .. }
            | Cmd::Det { common, .. }
            | Cmd::Smt { common, .. }
            | Cmd::Qsmt { common, .. }
            | Cmd::Growth { common } => common,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.cmd {
        Cmd::Eval { common, at } => {
            let cfg = config::resolve(common.inputs())?;
            commands::eval(&cfg, common.one_function()?, at)
        }
        Cmd::Classify { common, at } => {
            let cfg = config::resolve(common.inputs())?;
            commands::classify(&cfg, common.one_function()?, at)
        }
        Cmd::Slice {
            common,
            dir,
            radius,
        } => {
            let cfg = config::resolve(common.inputs())?;
            commands::slice(&cfg, common.one_function()?, dir.as_deref(), *radius)
        }
        Cmd::Charfun { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::charfun(&cfg, common.one_function()?)
        }
        Cmd::Jensen { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::jensen(&cfg, common.one_function()?)
        }
        Cmd::Fmt { common, level } => {
            let cfg = config::resolve(common.inputs())?;
            commands::fmt(&cfg, common.one_function()?, *level)
        }
        Cmd::Ldl { common, c, alpha } => {
            let cfg = config::resolve(common.inputs())?;
            commands::ldl(&cfg, common.one_function()?, c.as_deref(), *alpha)
        }
        Cmd::Qldl { common, scale } => {
            let cfg = config::resolve(common.inputs())?;
            commands::qldl(&cfg, common.one_function()?, *scale)
        }
        Cmd::Cartan { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::cartan(&cfg, common.the_map()?)
        }
        Cmd::Hyperfmt { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::hyperfmt(&cfg, common.the_map()?, &common.hyper)
        }
        Cmd::Defect { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::defect(&cfg, common.the_map()?, &common.hyper)
        }
        Cmd::Casorati { common, c, scale } => {
            let cfg = config::resolve(common.inputs())?;
            commands::casorati(&cfg, &common.function, c.as_deref(), *scale)
        }
        Cmd::Det { common, matrix } => {
            let cfg = config::resolve(common.inputs())?;
            commands::det(&cfg, matrix)
        }
        Cmd::Smt { common, c } => {
            let cfg = config::resolve(common.inputs())?;
            commands::smt(&cfg, common.the_map()?, &common.hyper, c.as_deref())
        }
        Cmd::Qsmt { common, scale } => {
            let cfg = config::resolve(common.inputs())?;
            commands::qsmt(&cfg, common.the_map()?, &common.hyper, *scale)
        }
        Cmd::Growth { common } => {
            let cfg = config::resolve(common.inputs())?;
            commands::growth(&cfg, common.one_function()?)
        }
    }
}
