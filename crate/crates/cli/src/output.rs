//! Rendering helpers shared by the subcommands.

use khazamula::verify::{format_significant, VerificationRecord};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Number, Value};

/// Parses `p`, `-p`, or `p/q` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    let (numer_text, denom_text) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = numer_text
        .parse()
        .map_err(|_| format!("`{text}` is not a rational literal"))?;
    let denom: BigInt = match denom_text {
        Some(d) => d
            .parse()
            .map_err(|_| format!("`{text}` is not a rational literal"))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(format!("`{text}` has a zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Integers small enough for a JSON number stay numbers; anything larger
/// is emitted as a decimal string.
pub fn bigint_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(v) => Value::Number(Number::from(v)),
        Err(_) => Value::String(value.to_string()),
    }
}

/// Floating value at 12 significant digits.
pub fn float_cell(value: f64) -> String {
    format_significant(value, 12)
}

pub fn markdown_row(cells: &[String]) -> String {
    format!("| {} |", cells.join(" | "))
}

pub fn markdown_header(columns: &[&str]) -> String {
    let header = markdown_row(&columns.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let rule = format!("|{}|", columns.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
    format!("{header}\n{rule}")
}

pub fn record_json(record: &VerificationRecord) -> Value {
    let mut map = Map::new();
    map.insert("claim".into(), json!(record.claim.to_string()));
    map.insert("instance".into(), json!(record.instance));
    map.insert("convention".into(), json!(record.convention.to_string()));
    map.insert("definitional".into(), json!(record.definitional.to_string()));
    map.insert("claimed".into(), json!(record.claimed.to_string()));
    map.insert("tolerance".into(), json!(record.tolerance));
    map.insert("verdict".into(), json!(record.verdict.to_string()));
    map.insert("expected".into(), json!(record.expected.to_string()));
    map.insert("note".into(), match &record.note {
        Some(n) => json!(n),
        None => Value::Null,
    });
    Value::Object(map)
}

pub fn record_markdown(record: &VerificationRecord) -> String {
    let tolerance = if record.tolerance == 0.0 {
        "0".to_string()
    } else {
        format!("{:e}", record.tolerance)
    };
    markdown_row(&[
        record.claim.to_string(),
        record.instance.clone(),
        record.convention.to_string(),
        record.definitional.to_string(),
        record.claimed.to_string(),
        tolerance,
        record.verdict.to_string(),
        record.expected.to_string(),
        record.note.clone().unwrap_or_default(),
    ])
}

pub const RECORD_COLUMNS: [&str; 9] = [
    "claim",
    "instance",
    "convention",
    "definitional",
    "claimed",
    "tolerance",
    "verdict",
    "expected",
    "note",
];
