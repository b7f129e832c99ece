//! Survey-table rendering: computed vs published β per record.

use super::{bold, green, interval_text, red, OutputFormat};
use crate::dataset::{EvaluationSummary, RecordResult};
use serde_json::json;
use std::fmt::Write as _;

/// Renders evaluated records with agreement flags plus a summary line.
pub fn render(
    results: &[RecordResult],
    summary: EvaluationSummary,
    tolerance: f64,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => render_text(results, summary, tolerance),
        OutputFormat::Csv => render_csv(results),
        OutputFormat::Json => render_json(results, summary, tolerance),
    }
}

fn deviation_text(dev: Option<f64>) -> String {
    match dev {
        Some(d) => format!("{:.1}%", d * 100.0),
        None => "-".to_string(),
    }
}

fn render_text(results: &[RecordResult], summary: EvaluationSummary, tolerance: f64) -> String {
    // status, styled status, trailing diagnostic
    let mut rows: Vec<([String; 6], String, Option<String>)> = Vec::new();
    for result in results {
        let identity = [
            result.label.clone(),
            result.year.to_string(),
            result.citation.clone(),
        ];
        match &result.outcome {
            Ok(eval) => {
                let status = if eval.published_beta.is_none() {
                    "OK".to_string()
                } else if eval.agrees {
                    green("AGREE")
                } else {
                    red("DIFFER")
                };
                let plain = if eval.published_beta.is_none() {
                    "OK"
                } else if eval.agrees {
                    "AGREE"
                } else {
                    "DIFFER"
                };
                rows.push((
                    [
                        identity[0].clone(),
                        identity[1].clone(),
                        identity[2].clone(),
                        interval_text(eval.beta),
                        eval.published_beta
                            .map_or_else(|| "-".to_string(), interval_text),
                        deviation_text(eval.max_rel_deviation),
                    ],
                    status,
                    plain
                        .eq("DIFFER")
                        .then(|| format!("exceeds tolerance {:.1}%", tolerance * 100.0)),
                ));
            }
            Err(error) => rows.push((
                [
                    identity[0].clone(),
                    identity[1].clone(),
                    identity[2].clone(),
                    "-".to_string(),
                    "-".to_string(),
                    "-".to_string(),
                ],
                red("ERROR"),
                Some(error.to_string()),
            )),
        }
    }

    let headers = ["label", "year", "citation", "computed", "published", "dev"];
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for (cells, _, _) in &rows {
        for (w, cell) in widths.iter_mut().zip(cells) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let header_line = headers
        .iter()
        .zip(&widths)
        .map(|(h, w)| format!("{h:<w$}"))
        .collect::<Vec<_>>()
        .join("  ");
    let _ = writeln!(out, "{}  {}", bold(&header_line), bold("status"));
    for (cells, status, diagnostic) in &rows {
        let body = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        match diagnostic {
            Some(message) => {
                let _ = writeln!(out, "{body}  {status}  {message}");
            }
            None => {
                let _ = writeln!(out, "{body}  {status}");
            }
        }
    }
    let _ = writeln!(
        out,
        "summary: {} records — {} agree, {} differ, {} failed (tolerance {:.1}%)",
        summary.total,
        summary.agreed,
        summary.disagreed,
        summary.failed,
        tolerance * 100.0
    );
    out
}

fn render_csv(results: &[RecordResult]) -> String {
    let mut out = String::from(
        "table,label,year,citation,beta_lo,beta_mid,beta_hi,published_lo,published_hi,max_rel_deviation,agrees\n",
    );
    for result in results {
        let _ = write!(
            out,
            "{},{},{},{},",
            result.kind_name, result.label, result.year, result.citation
        );
        match &result.outcome {
            Ok(eval) => {
                let _ = write!(
                    out,
                    "{:e},{:e},{:e},",
                    eval.beta.lo().value(),
                    eval.beta.midpoint().value(),
                    eval.beta.hi().value()
                );
                match &eval.published_beta {
                    Some(p) => {
                        let _ = write!(out, "{:e},{:e},", p.lo().value(), p.hi().value());
                    }
                    None => out.push_str(",,"),
                }
                match eval.max_rel_deviation {
                    Some(d) => {
                        let _ = write!(out, "{d:e},");
                    }
                    None => out.push(','),
                }
                let _ = writeln!(out, "{}", eval.agrees);
            }
            Err(_) => out.push_str(",,,,,,false\n"),
        }
    }
    out
}

fn render_json(results: &[RecordResult], summary: EvaluationSummary, tolerance: f64) -> String {
    let records: Vec<serde_json::Value> = results
        .iter()
        .map(|result| {
            let mut entry = json!({
                "table": result.kind_name,
                "label": result.label,
                "year": result.year,
                "citation": result.citation,
            });
            let object = entry.as_object_mut().expect("entry is an object");
            match &result.outcome {
                Ok(eval) => {
                    object.insert(
                        "beta".to_string(),
                        json!({"lo": eval.beta.lo().value(), "hi": eval.beta.hi().value()}),
                    );
                    object.insert(
                        "tau".to_string(),
                        eval.tau.map_or(
                            serde_json::Value::Null,
                            |tau| json!({"lo": tau.lo().value(), "hi": tau.hi().value()}),
                        ),
                    );
                    object.insert(
                        "coherence_time".to_string(),
                        eval.coherence_time
                            .map_or(serde_json::Value::Null, |t| json!(t.value())),
                    );
                    object.insert(
                        "published".to_string(),
                        eval.published_beta.map_or(
                            serde_json::Value::Null,
                            |p| json!({"lo": p.lo().value(), "hi": p.hi().value()}),
                        ),
                    );
                    object.insert(
                        "max_rel_deviation".to_string(),
                        eval.max_rel_deviation
                            .map_or(serde_json::Value::Null, |d| json!(d)),
                    );
                    object.insert("agrees".to_string(), json!(eval.agrees));
                    object.insert("error".to_string(), serde_json::Value::Null);
                }
                Err(error) => {
                    object.insert("agrees".to_string(), json!(false));
                    object.insert("error".to_string(), json!(error.to_string()));
                }
            }
            entry
        })
        .collect();
    let doc = json!({
        "tolerance": tolerance,
        "records": records,
        "summary": {
            "total": summary.total,
            "agreed": summary.agreed,
            "disagreed": summary.disagreed,
            "failed": summary.failed,
            "all_agree": summary.all_agree(),
        },
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("tables serialize");
    text.push('\n');
    text
}
