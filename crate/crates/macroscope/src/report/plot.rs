//! Plot-series emission: the (x, y, label) points behind the survey figures.

use super::{bold, sci4, OutputFormat};
use crate::dataset::{evaluate_kind, ExperimentRecord, RecordKind};
use crate::error::{Error, Result};
use crate::quantities::constants;
use serde_json::json;
use std::fmt::Write as _;

/// Data series that can be emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeriesKind {
    /// Matter-wave records, β against particle mass in u.
    #[value(name = "beta_vs_mass")]
    BetaVsMass,
    /// Matter-wave records, β against publication year.
    #[value(name = "beta_vs_year_mw")]
    BetaVsYearMw,
    /// Ramsey records, β against publication year.
    #[value(name = "beta_vs_year_ramsey")]
    BetaVsYearRamsey,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::BetaVsMass => "beta_vs_mass",
            SeriesKind::BetaVsYearMw => "beta_vs_year_mw",
            SeriesKind::BetaVsYearRamsey => "beta_vs_year_ramsey",
        }
    }

    pub fn x_axis(self) -> &'static str {
        match self {
            SeriesKind::BetaVsMass => "mass_u",
            SeriesKind::BetaVsYearMw | SeriesKind::BetaVsYearRamsey => "year",
        }
    }

    pub fn y_axis(self) -> &'static str {
        "beta"
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotPoint {
    pub x: f64,
    pub y: f64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSeries {
    pub name: &'static str,
    pub x_axis: &'static str,
    pub y_axis: &'static str,
    pub points: Vec<PlotPoint>,
}

/// Builds one series from records, computing β for each applicable record.
/// Interval β bands contribute both endpoints, labeled `(min)` and `(max)`.
pub fn build_series(kind: SeriesKind, records: &[ExperimentRecord]) -> Result<PlotSeries> {
    let mut points = Vec::new();
    for record in records {
        let x = match (kind, &record.kind) {
            (SeriesKind::BetaVsMass, RecordKind::MatterWave(mw)) => {
                mw.mass.value() / constants::ATOMIC_MASS
            }
            (SeriesKind::BetaVsYearMw, RecordKind::MatterWave(_))
            | (SeriesKind::BetaVsYearRamsey, RecordKind::Ramsey(_)) => f64::from(record.year),
            _ => continue,
        };
        // Tolerance does not affect the β band itself.
        let beta = evaluate_kind(&record.kind, 0.0)?.beta;
        let identifier = record.identifier();
        if beta.is_degenerate() {
            points.push(PlotPoint {
                x,
                y: beta.lo().value(),
                label: identifier,
            });
        } else {
            points.push(PlotPoint {
                x,
                y: beta.lo().value(),
                label: format!("{identifier} (min)"),
            });
            points.push(PlotPoint {
                x,
                y: beta.hi().value(),
                label: format!("{identifier} (max)"),
            });
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyDataset);
    }
    points.sort_by(|a, b| {
        a.x.total_cmp(&b.x)
            .then_with(|| a.label.cmp(&b.label))
            .then_with(|| a.y.total_cmp(&b.y))
    });
    Ok(PlotSeries {
        name: kind.name(),
        x_axis: kind.x_axis(),
        y_axis: kind.y_axis(),
        points,
    })
}

/// Renders a series in the requested format.
pub fn render(series: &PlotSeries, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} ({} points; x: {}, y: {})",
                bold(series.name),
                series.points.len(),
                series.x_axis,
                series.y_axis
            );
            let x_width = series
                .points
                .iter()
                .map(|p| format!("{}", p.x).len())
                .max()
                .unwrap_or(1)
                .max(series.x_axis.len());
            for point in &series.points {
                let _ = writeln!(
                    out,
                    "  {:<x_width$}  {:>9}  {}",
                    point.x,
                    sci4(point.y),
                    point.label
                );
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("series,x,y,label\n");
            for point in &series.points {
                let _ = writeln!(
                    out,
                    "{},{},{:e},{}",
                    series.name, point.x, point.y, point.label
                );
            }
            out
        }
        OutputFormat::Json => {
            let doc = json!({
                "series": series.name,
                "x_axis": series.x_axis,
                "y_axis": series.y_axis,
                "points": series
                    .points
                    .iter()
                    .map(|p| json!({"x": p.x, "y": p.y, "label": p.label}))
                    .collect::<Vec<_>>(),
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("series serializes");
            text.push('\n');
            text
        }
    }
}
