//! Report rendering: tables, ad-hoc computations, appendix calculators, and
//! plot series, each in text, CSV, or JSON.
//!
//! Formatting contract: text shows 4 significant digits (`{:.3e}`); CSV and
//! JSON carry full precision (shortest representation that round-trips the
//! exact binary value). Identical inputs produce byte-identical output; the
//! only environment sensitivity is `MACROSCOPE_NO_COLOR`, which strips the
//! ANSI decoration from text output.

pub mod compute;
pub mod plot;
pub mod tables;

use crate::quantities::{Interval, Quantity};
use serde_json::json;

/// Output encoding selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// Environment variable that disables ANSI decoration in text output.
pub const NO_COLOR_ENV: &str = "MACROSCOPE_NO_COLOR";

fn color_enabled() -> bool {
    std::env::var_os(NO_COLOR_ENV).is_none()
}

/// Wraps `text` in an ANSI style when decoration is on.
fn styled(text: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub(crate) fn bold(text: &str) -> String {
    styled(text, "1")
}

pub(crate) fn green(text: &str) -> String {
    styled(text, "32")
}

pub(crate) fn red(text: &str) -> String {
    styled(text, "31")
}

/// 4-significant-digit scientific notation used throughout text output.
pub(crate) fn sci4(value: f64) -> String {
    format!("{value:.3e}")
}

/// Quantity in text form: 4 significant digits plus the dimension symbol.
pub(crate) fn quantity_text(q: Quantity) -> String {
    if q.dim().is_none() {
        sci4(q.value())
    } else {
        format!("{} {}", sci4(q.value()), q.dim())
    }
}

/// Interval in text form: single value when degenerate, `lo..hi` otherwise.
pub(crate) fn interval_text(i: Interval) -> String {
    let body = if i.is_degenerate() {
        sci4(i.lo().value())
    } else {
        format!("{}..{}", sci4(i.lo().value()), sci4(i.hi().value()))
    };
    if i.dim().is_none() {
        body
    } else {
        format!("{} {}", body, i.dim())
    }
}

/// One named value in a computation report.
pub(crate) enum Rendered {
    Scalar(Quantity),
    Band(Interval),
    /// Bare number (counts, ratios of like quantities).
    Number(f64),
}

pub(crate) struct Item {
    pub key: String,
    pub value: Rendered,
}

impl Item {
    pub fn scalar(key: impl Into<String>, q: Quantity) -> Item {
        Item {
            key: key.into(),
            value: Rendered::Scalar(q),
        }
    }

    pub fn band(key: impl Into<String>, i: Interval) -> Item {
        Item {
            key: key.into(),
            value: Rendered::Band(i),
        }
    }

    pub fn number(key: impl Into<String>, value: f64) -> Item {
        Item {
            key: key.into(),
            value: Rendered::Number(value),
        }
    }
}

/// A computation report: echoed inputs followed by results.
pub(crate) struct ValueReport {
    pub inputs: Vec<Item>,
    pub results: Vec<Item>,
}

impl ValueReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (header, items) in [("inputs:", &self.inputs), ("results:", &self.results)] {
            out.push_str(&bold(header));
            out.push('\n');
            for item in items {
                let value = match &item.value {
                    Rendered::Scalar(q) => quantity_text(*q),
                    Rendered::Band(i) => interval_text(*i),
                    Rendered::Number(v) => sci4(*v),
                };
                out.push_str(&format!("  {} = {}\n", item.key, value));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("section,key,lo,hi,dim\n");
        for (section, items) in [("input", &self.inputs), ("result", &self.results)] {
            for item in items {
                let (lo, hi, dim) = match &item.value {
                    Rendered::Scalar(q) => (q.value(), q.value(), q.dim().to_string()),
                    Rendered::Band(i) => (i.lo().value(), i.hi().value(), i.dim().to_string()),
                    Rendered::Number(v) => (*v, *v, "1".to_string()),
                };
                out.push_str(&format!("{section},{},{lo:e},{hi:e},{dim}\n", item.key));
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let encode = |items: &[Item]| {
            let mut map = serde_json::Map::new();
            for item in items {
                let value = match &item.value {
                    Rendered::Scalar(q) => json!({
                        "value": q.value(),
                        "dim": q.dim().to_string(),
                    }),
                    Rendered::Band(i) => json!({
                        "lo": i.lo().value(),
                        "hi": i.hi().value(),
                        "dim": i.dim().to_string(),
                    }),
                    Rendered::Number(v) => json!(v),
                };
                map.insert(item.key.clone(), value);
            }
            serde_json::Value::Object(map)
        };
        let doc = json!({
            "inputs": encode(&self.inputs),
            "results": encode(&self.results),
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantities::Dimension;

    #[test]
    fn sci4_gives_four_significant_digits() {
        assert_eq!(sci4(5.6485835911e-4), "5.649e-4");
        assert_eq!(sci4(370.0), "3.700e2");
    }

    #[test]
    fn csv_report_is_full_precision() {
        let report = ValueReport {
            inputs: vec![Item::scalar("lambda", Quantity::meters(5e-11))],
            results: vec![Item::scalar(
                "beta",
                Quantity::dimensionless(5.648583591154447e-4),
            )],
        };
        let csv = report.render(OutputFormat::Csv);
        assert!(csv.contains("input,lambda,5e-11,5e-11,m\n"), "{csv}");
        assert!(
            csv.contains("result,beta,5.648583591154447e-4,5.648583591154447e-4,1\n"),
            "{csv}"
        );
    }

    #[test]
    fn json_report_round_trips_values() {
        let report = ValueReport {
            inputs: vec![],
            results: vec![Item::band(
                "beta",
                Interval::new(
                    Quantity::new(0.58, Dimension::NONE),
                    Quantity::new(0.62, Dimension::NONE),
                )
                .unwrap(),
            )],
        };
        let doc: serde_json::Value =
            serde_json::from_str(&report.render(OutputFormat::Json)).unwrap();
        assert_eq!(doc["results"]["beta"]["lo"], json!(0.58));
        assert_eq!(doc["results"]["beta"]["hi"], json!(0.62));
    }
}
