//! JSON and CSV shapes. Rationals are always `"p/q"` strings; decimals only
//! ever appear as extra convenience fields.

use cantor_core::{
    ClosedInterval, DimensionKind, DimensionReport, ExpansionRecord, FamilySpec, IntervalSet,
    LevelStats, Rational,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const DECIMAL_DIGITS: usize = 15;

pub fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("malformed rational {s:?}; expected p/q")))
}

pub fn decimal(x: &Rational) -> String {
    x.to_decimal_string(DECIMAL_DIGITS)
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    a: String,
    b: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    a_decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    b_decimal: Option<String>,
}

pub fn set_to_json(set: &IntervalSet, with_decimal: bool) -> Value {
    let rows: Vec<IntervalJson> = set
        .iter()
        .map(|iv| IntervalJson {
            a: iv.a().to_string(),
            b: iv.b().to_string(),
            a_decimal: with_decimal.then(|| decimal(iv.a())),
            b_decimal: with_decimal.then(|| decimal(iv.b())),
        })
        .collect();
    serde_json::to_value(rows).expect("interval rows serialize")
}

pub fn set_from_json(text: &str) -> CliResult<IntervalSet> {
    let rows: Vec<IntervalJson> = serde_json::from_str(text)?;
    let intervals = rows
        .into_iter()
        .map(|row| Ok(ClosedInterval::new(parse_rational(&row.a)?, parse_rational(&row.b)?)?))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(IntervalSet::normalize(intervals))
}

/// One `a,b` row per interval, no header.
pub fn set_to_csv(set: &IntervalSet, with_decimal: bool) -> String {
    let mut out = String::new();
    for iv in set.iter() {
        out.push_str(&format!("{},{}", iv.a(), iv.b()));
        if with_decimal {
            out.push_str(&format!(",{},{}", decimal(iv.a()), decimal(iv.b())));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
enum FamilyJson {
    Proportional { alpha: String },
    Power { n: u32 },
    Digit { n: u32, digits: Vec<u32> },
    Lambda { lambda: String },
}

pub fn family_to_json(family: &FamilySpec) -> Value {
    let shape = match family {
        FamilySpec::Proportional { alpha } => FamilyJson::Proportional { alpha: alpha.to_string() },
        FamilySpec::Power { n } => FamilyJson::Power { n: *n },
        FamilySpec::DigitSet { n, digits } => FamilyJson::Digit { n: *n, digits: digits.clone() },
        FamilySpec::Lambda { lambda } => FamilyJson::Lambda { lambda: lambda.to_string() },
    };
    serde_json::to_value(shape).expect("family serializes")
}

pub fn family_from_json(text: &str) -> CliResult<FamilySpec> {
    let shape: FamilyJson = serde_json::from_str(text)?;
    let family = match shape {
        FamilyJson::Proportional { alpha } => FamilySpec::proportional(parse_rational(&alpha)?)?,
        FamilyJson::Power { n } => FamilySpec::power(n)?,
        FamilyJson::Digit { n, digits } => FamilySpec::digit_set(n, digits)?,
        FamilyJson::Lambda { lambda } => FamilySpec::lambda(parse_rational(&lambda)?)?,
    };
    Ok(family)
}

pub fn expansion_to_json(rec: &ExpansionRecord) -> Value {
    json!({ "base": rec.base, "preperiod": rec.preperiod, "period": rec.period })
}

pub fn dimension_to_json(report: &DimensionReport) -> Value {
    match report.kind {
        DimensionKind::ExactSimilarity => {
            let (copies, scale) = report.symbolic.as_ref().expect("exact report has a symbolic form");
            json!({
                "kind": "exact_similarity",
                "value": report.value,
                "numerator_count": copies,
                "scale": scale.to_string(),
            })
        }
        DimensionKind::EstimateSequence => {
            let sequence: Vec<Value> = report.sequence.iter().map(|&(k, d)| json!({ "k": k, "d": d })).collect();
            json!({ "kind": "estimate_sequence", "value": report.value, "sequence": sequence })
        }
    }
}

pub fn level_stats_to_json(stats: &LevelStats) -> Value {
    json!({
        "count": stats.count.to_string(),
        "min_length": stats.min_length.to_string(),
        "max_length": stats.max_length.to_string(),
        "total_length": stats.total_length().to_string(),
    })
}
