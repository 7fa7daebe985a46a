use cantor_core::{FamilySpec, DEFAULT_DEPTH_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};
use crate::formats::{family_from_json, parse_rational};

/// Exact stages, measures, dimensions and membership for Cantor-like sets.
///
/// Exit codes: 0 ok, 1 other failure, 2 invalid family or malformed rational,
/// 3 depth over cap, 4 `--limit` on a family without a digit characterization.
#[derive(Debug, Parser)]
#[command(name = "cantor", version)]
pub struct Cli {
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest stage that may be enumerated interval by interval.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH_CAP)]
    pub depth_cap: u32,

    /// Add 15-significant-digit decimal columns next to exact values.
    #[arg(long, global = true)]
    pub decimal: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the closed intervals of one stage.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        depth: u32,
    },
    /// Measures, dimension and level statistics as one JSON report.
    Analyze {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 10)]
        depth: u32,
    },
    /// Membership of a rational point at a finite stage or in the limit set.
    Member {
        #[arg(long)]
        x: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "limit", required_unless_present = "limit")]
        depth: Option<u32>,
        /// Decide membership in the limit set (digit families only).
        #[arg(long)]
        limit: bool,
    },
    /// Eventually periodic base-b expansion of a rational in [0, 1].
    Expansion {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 10)]
        base: u32,
    },
    /// The Cantor function at a point of the middle-thirds set.
    CantorFn {
        #[arg(long)]
        x: String,
    },
    /// Partial removed measure and L1 tail for n = 0..n_max.
    Counterexample {
        #[arg(long, default_value_t = 15)]
        n_max: usize,
        /// Family whose removed intervals are listed; power n=4 when omitted.
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Draw stages 0..depth as an SVG diagram.
    Render {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 800)]
        width_px: u32,
        #[arg(long, default_value_t = 24)]
        row_height_px: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Proportional,
    Power,
    Digit,
    Lambda,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum, conflicts_with = "family_json")]
    pub family: Option<FamilyKind>,
    /// Removed proportion for the proportional family, as p/q.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Base for the power and digit families.
    #[arg(long)]
    pub n: Option<u32>,
    /// Kept digits for the digit family, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub digits: Option<Vec<u32>>,
    /// Scale for the lambda family, as p/q.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Full family as JSON, e.g. {"family":"digit","n":5,"digits":[0,2,4]}.
    #[arg(long)]
    pub family_json: Option<String>,
}

impl FamilyArgs {
    pub fn is_empty(&self) -> bool {
        self.family.is_none() && self.family_json.is_none()
    }

    pub fn resolve(&self) -> CliResult<FamilySpec> {
        if let Some(text) = &self.family_json {
            return family_from_json(text);
        }
        let kind = self.family.ok_or_else(|| CliError::usage("need --family or --family-json"))?;
        let missing = |flag: &str| CliError::usage(format!("--family {kind:?} needs --{flag}").to_lowercase());
        let family = match kind {
            FamilyKind::Proportional => {
                FamilySpec::proportional(parse_rational(self.alpha.as_deref().ok_or_else(|| missing("alpha"))?)?)?
            }
            FamilyKind::Power => FamilySpec::power(self.n.ok_or_else(|| missing("n"))?)?,
            FamilyKind::Digit => FamilySpec::digit_set(
                self.n.ok_or_else(|| missing("n"))?,
                self.digits.clone().ok_or_else(|| missing("digits"))?,
            )?,
            FamilyKind::Lambda => {
                FamilySpec::lambda(parse_rational(self.lambda.as_deref().ok_or_else(|| missing("lambda"))?)?)?
            }
        };
        Ok(family)
    }
}
