//! Record rendering for JSON lines and CSV.

use std::collections::BTreeMap;
use std::io::Write;

use polyfam_core::scalar::{format_rational, Rational};
use serde::Serialize;

/// Either a single exact value or a coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    One(String),
    Many(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub value: Value,
    pub mode: String,
    /// Rounded decimal rendering, present only with `--decimals`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Value>,
}

impl OutputRecord {
    pub fn number(
        family: &str,
        params: BTreeMap<String, String>,
        value: &Rational,
        mode: &str,
        decimals: Option<u32>,
    ) -> Self {
        Self {
            family: family.to_string(),
            params,
            value: Value::One(format_rational(value)),
            mode: mode.to_string(),
            approx: decimals.map(|d| Value::One(approximate(value, d))),
        }
    }

    pub fn list(
        family: &str,
        params: BTreeMap<String, String>,
        values: &[Rational],
        mode: &str,
        decimals: Option<u32>,
    ) -> Self {
        Self {
            family: family.to_string(),
            params,
            value: Value::Many(values.iter().map(format_rational).collect()),
            mode: mode.to_string(),
            approx: decimals
                .map(|d| Value::Many(values.iter().map(|v| approximate(v, d)).collect())),
        }
    }
}

/// `value` rounded half away from zero to `decimals` places.
pub fn approximate(value: &Rational, decimals: u32) -> String {
    use polyfam_core::scalar::int;
    let scale = (0..decimals).fold(int(1), |acc, _| acc * int(10));
    let scaled = (value * scale).round();
    let digits = scaled.numer().magnitude().to_string();
    let negative = *scaled.numer() < 0.into();
    let d = decimals as usize;
    let padded = format!("{digits:0>width$}", width = d + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - d);
    let sign = if negative { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

fn render_value(value: &Value) -> String {
    match value {
        Value::One(s) => s.clone(),
        Value::Many(xs) => xs.join(" "),
    }
}

pub fn write_json_lines<W: Write, T: Serialize>(out: &mut W, items: &[T]) -> std::io::Result<()> {
    for item in items {
        serde_json::to_writer(&mut *out, item)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// CSV with a header row: `family, mode`, the parameter names of the first
/// record, `value`, and `approx` when present.
pub fn write_records_csv<W: Write>(out: W, records: &[OutputRecord]) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    let keys: Vec<String> = records
        .first()
        .map(|r| r.params.keys().cloned().collect())
        .unwrap_or_default();
    let with_approx = records.iter().any(|r| r.approx.is_some());
    let mut header: Vec<&str> = vec!["family", "mode"];
    header.extend(keys.iter().map(String::as_str));
    header.push("value");
    if with_approx {
        header.push("approx");
    }
    writer.write_record(&header)?;
    for r in records {
        let mut row = vec![r.family.clone(), r.mode.clone()];
        row.extend(
            keys.iter()
                .map(|k| r.params.get(k).cloned().unwrap_or_default()),
        );
        row.push(render_value(&r.value));
        if with_approx {
            row.push(r.approx.as_ref().map(render_value).unwrap_or_default());
        }
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}
