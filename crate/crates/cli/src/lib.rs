//! Command-line front end for `cantor-core`.
//!
//! [`run`] turns parsed arguments into the exact stdout payload, so the binary
//! is only argument parsing, printing and exit codes.

pub mod args;
pub mod error;
pub mod formats;
pub mod svg;

use cantor_core::{
    base_expansion, cantor_function, dimension_estimates, iterate_with_cap, level_stats,
    limit_measure, limit_witness, measure_at_depth, member_at_depth, similarity_dimension,
    Construction, Error, FamilySpec, OpenInterval, Rational,
};
use serde_json::{json, Value};

pub use args::{Cli, Command, FamilyArgs, FamilyKind, Format};
pub use error::{CliError, CliResult};
use formats::{decimal, dimension_to_json, expansion_to_json, family_to_json, level_stats_to_json, parse_rational};
pub use svg::RenderSpec;

const SVG_WIDTH_PX: u32 = 800;
const SVG_ROW_HEIGHT_PX: u32 = 24;

pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Generate { family, depth } => generate(cli, &family.resolve()?, *depth),
        Command::Analyze { family, depth } => {
            only_json(cli)?;
            analyze(&family.resolve()?, *depth, cli.decimal)
        }
        Command::Member { x, family, depth, limit } => {
            only_json(cli)?;
            member(&parse_rational(x)?, &family.resolve()?, *depth, *limit)
        }
        Command::Expansion { x, base } => {
            only_json(cli)?;
            let rec = base_expansion(&parse_rational(x)?, *base)?;
            Ok(pretty(&expansion_to_json(&rec)))
        }
        Command::CantorFn { x } => {
            only_json(cli)?;
            let x = parse_rational(x)?;
            let value = cantor_function(&x)?;
            let mut out = json!({ "x": x.to_string(), "value": value.to_string() });
            if cli.decimal {
                out["value_decimal"] = json!(decimal(&value));
            }
            Ok(pretty(&out))
        }
        Command::Counterexample { n_max, family } => {
            let family = if family.is_empty() { FamilySpec::power(4)? } else { family.resolve()? };
            counterexample(cli, &family, *n_max)
        }
        Command::Render { family, depth, width_px, row_height_px } => {
            if !matches!(cli.format, None | Some(Format::Svg)) {
                return Err(CliError::usage("render only writes svg"));
            }
            let spec = RenderSpec {
                depth: *depth,
                width_px: *width_px,
                row_height_px: *row_height_px,
                family: family.resolve()?,
            };
            svg::render(&spec, cli.depth_cap)
        }
    }
}

fn only_json(cli: &Cli) -> CliResult<()> {
    match cli.format {
        None | Some(Format::Json) => Ok(()),
        Some(other) => Err(CliError::usage(format!("this command only writes json, not {other:?}").to_lowercase())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn generate(cli: &Cli, family: &FamilySpec, depth: u32) -> CliResult<String> {
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let set = iterate_with_cap(family, depth, cli.depth_cap)?;
            let mut s = serde_json::to_string(&formats::set_to_json(&set, cli.decimal))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => Ok(formats::set_to_csv(&iterate_with_cap(family, depth, cli.depth_cap)?, cli.decimal)),
        Format::Svg => {
            let spec = RenderSpec {
                depth,
                width_px: SVG_WIDTH_PX,
                row_height_px: SVG_ROW_HEIGHT_PX,
                family: family.clone(),
            };
            svg::render(&spec, cli.depth_cap)
        }
    }
}

/// `null` for quantities the family does not have (a collapsed limit).
fn unless_degenerate(r: cantor_core::Result<Value>) -> CliResult<Value> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::DegenerateLimit) => Ok(Value::Null),
        Err(e) => Err(e.into()),
    }
}

fn analyze(family: &FamilySpec, depth: u32, with_decimal: bool) -> CliResult<String> {
    let at_depth = measure_at_depth(family, depth)?;
    let limit = limit_measure(family)?;
    let mut out = json!({
        "family": family_to_json(family),
        "depth": depth,
        "measure_at_depth": at_depth.to_string(),
        "limit_measure": limit.to_string(),
        "dimension": unless_degenerate(similarity_dimension(family).map(|d| dimension_to_json(&d)))?,
        "estimates": unless_degenerate(dimension_estimates(family, depth).map(|d| dimension_to_json(&d)))?,
        "level_stats": level_stats_to_json(&level_stats(family, depth)?),
    });
    if with_decimal {
        out["measure_at_depth_decimal"] = json!(decimal(&at_depth));
        out["limit_measure_decimal"] = json!(decimal(&limit));
    }
    Ok(pretty(&out))
}

fn member(x: &Rational, family: &FamilySpec, depth: Option<u32>, limit: bool) -> CliResult<String> {
    let out = if limit {
        let witness = limit_witness(x, family)?;
        json!({
            "x": x.to_string(),
            "mode": "limit",
            "member": witness.is_some(),
            "witness": witness.as_ref().map(expansion_to_json),
        })
    } else {
        let k = depth.ok_or_else(|| CliError::usage("need --depth or --limit"))?;
        json!({ "x": x.to_string(), "mode": "depth", "depth": k, "member": member_at_depth(x, family, k)? })
    };
    Ok(pretty(&out))
}

/// Removed intervals in generation order, enough of them to cover `n_max`
/// entries or until the construction stops removing anything.
fn removed_prefix(family: &FamilySpec, n_max: usize, depth_cap: u32) -> CliResult<Vec<OpenInterval>> {
    let mut c = Construction::new(family.clone())?;
    let mut entries = Vec::new();
    while entries.len() < n_max {
        if c.stage() >= depth_cap {
            return Err(Error::DepthOverCap { depth: c.stage() + 1, cap: depth_cap }.into());
        }
        let before = entries.len();
        c.advance_recording(&mut entries)?;
        if entries.len() == before {
            break;
        }
    }
    Ok(entries)
}

fn counterexample(cli: &Cli, family: &FamilySpec, n_max: usize) -> CliResult<String> {
    let removed_total = Rational::one() - limit_measure(family)?;
    let entries = removed_prefix(family, n_max, cli.depth_cap)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut sum = Rational::zero();
    for n in 0..=n_max {
        if n > 0 {
            if let Some(e) = entries.get(n - 1) {
                sum += &e.length();
            }
        }
        let tail = &removed_total - &sum;
        rows.push((n, sum.clone(), tail));
    }

    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from(if cli.decimal { "n,sum_removed,tail,tail_decimal\n" } else { "n,sum_removed,tail\n" });
            for (n, sum, tail) in &rows {
                out.push_str(&format!("{n},{sum},{tail}"));
                if cli.decimal {
                    out.push_str(&format!(",{}", decimal(tail)));
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, sum, tail)| {
                    let mut row = json!({ "n": n, "sum_removed": sum.to_string(), "tail": tail.to_string() });
                    if cli.decimal {
                        row["tail_decimal"] = json!(decimal(tail));
                    }
                    row
                })
                .collect();
            Ok(pretty(&Value::Array(rows)))
        }
        Format::Svg => Err(CliError::usage("counterexample writes csv or json")),
    }
}
