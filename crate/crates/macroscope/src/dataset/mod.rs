//! Experiment records: the text format, the built-in survey, and batch
//! evaluation against published macroscopicity values.

mod builtin;
mod eval;
mod parse;

pub use builtin::{builtin_all, builtin_table1, builtin_table2};
pub use eval::{evaluate_all, evaluate_kind, BetaResult, EvaluationSummary, RecordResult};
pub use parse::{parse_interval_argument, parse_records, parse_scalar_argument};

use crate::matterwave::{MatterWaveRecord, SlitConfig};
use crate::quantities::{Dimension, Interval, Quantity};
use crate::ramsey::RamseyRecord;
use crate::trap::TrapRecord;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Physics payload of a record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum RecordKind {
    MatterWave(MatterWaveRecord),
    Ramsey(RamseyRecord),
    Trap(TrapRecord),
}

impl RecordKind {
    pub fn name(&self) -> &'static str {
        match self {
            RecordKind::MatterWave(_) => "matterwave",
            RecordKind::Ramsey(_) => "ramsey",
            RecordKind::Trap(_) => "trap",
        }
    }
}

/// One experiment: identifying metadata plus kind-specific parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub label: String,
    pub citation: String,
    pub year: i32,
    pub note: Option<String>,
    pub kind: RecordKind,
}

impl ExperimentRecord {
    /// Unique human-readable row identifier used in reports and diagnostics.
    pub fn identifier(&self) -> String {
        format!("{} {} [{}]", self.label, self.year, self.citation)
    }
}

fn write_quantity(out: &mut String, key: &str, q: Quantity, unit: &str) {
    let _ = writeln!(out, "{key} = {:e} {unit}", q.value());
}

fn write_interval(out: &mut String, key: &str, i: Interval, unit: &str) {
    if i.is_degenerate() {
        let _ = write!(out, "{key} = {:e}", i.lo().value());
    } else {
        let _ = write!(out, "{key} = {:e}..{:e}", i.lo().value(), i.hi().value());
    }
    if unit.is_empty() {
        out.push('\n');
    } else {
        let _ = writeln!(out, " {unit}");
    }
}

/// Renders records back to the text format, one blank-line-separated block per
/// record, all magnitudes in SI base units so that reparsing is exact.
pub fn serialize_records(records: &[ExperimentRecord]) -> String {
    let mut out = String::new();
    for (index, record) in records.iter().enumerate() {
        if index > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "kind = {}", record.kind.name());
        let _ = writeln!(out, "label = {}", record.label);
        let _ = writeln!(out, "citation = {}", record.citation);
        let _ = writeln!(out, "year = {}", record.year);
        match &record.kind {
            RecordKind::MatterWave(mw) => {
                write_quantity(&mut out, "mass", mw.mass, "kg");
                write_interval(&mut out, "lambda", mw.wavelength, "m");
                write_quantity(&mut out, "d", mw.slit_width, "m");
                if let Some(theta) = mw.theta {
                    write_quantity(&mut out, "theta", theta, "rad");
                }
                match &mw.geometry {
                    Some(SlitConfig::Single {
                        source_distance, ..
                    }) => {
                        let _ = writeln!(out, "geometry = single");
                        write_quantity(&mut out, "source_distance", *source_distance, "m");
                    }
                    Some(SlitConfig::Double {
                        separation,
                        collimator_width,
                        collimator_distance,
                        ..
                    }) => {
                        let _ = writeln!(out, "geometry = double");
                        write_quantity(&mut out, "separation", *separation, "m");
                        write_quantity(&mut out, "collimator", *collimator_width, "m");
                        write_quantity(&mut out, "collimator_distance", *collimator_distance, "m");
                    }
                    Some(SlitConfig::Multi {
                        count,
                        period,
                        source_distance,
                        ..
                    }) => {
                        let _ = writeln!(out, "geometry = multi");
                        let _ = writeln!(out, "slit_count = {count}");
                        write_quantity(&mut out, "separation", *period, "m");
                        write_quantity(&mut out, "source_distance", *source_distance, "m");
                    }
                    None => {}
                }
                if let Some(published) = mw.published_beta {
                    write_interval(&mut out, "beta", published, "");
                }
            }
            RecordKind::Ramsey(r) => {
                write_quantity(&mut out, "nu0", r.hyperfine_splitting, "Hz");
                write_quantity(&mut out, "nu_s", r.transition_frequency, "Hz");
                if let Some(r_s) = r.system_size {
                    write_quantity(&mut out, "r_s", r_s, "m");
                }
                if let Some(a) = r.einstein_a {
                    write_quantity(&mut out, "einstein_a", a, "1/s");
                }
                write_quantity(&mut out, "t", r.coherence_time, "s");
                if let Some(published) = r.published_beta {
                    let _ = writeln!(out, "beta = {published:e}");
                }
            }
            RecordKind::Trap(t) => {
                write_quantity(&mut out, "energy", t.energy, "J");
                write_quantity(&mut out, "separation", t.separation, "m");
            }
        }
        if let Some(note) = &record.note {
            let _ = writeln!(out, "note = {note}");
        }
    }
    out
}

/// Quantity rendered in SI with its dimension symbol, for input echoes.
pub fn describe_quantity(q: Quantity) -> String {
    if q.dim() == Dimension::NONE {
        format!("{:e}", q.value())
    } else {
        format!("{:e} {}", q.value(), q.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifier_is_unique_across_builtin() {
        let mut seen = std::collections::BTreeSet::new();
        for record in builtin_all() {
            assert!(
                seen.insert(record.identifier()),
                "duplicate identifier {}",
                record.identifier()
            );
        }
    }

    #[test]
    fn serialize_reparse_round_trip() {
        let records = builtin_all();
        let text = serialize_records(&records);
        let reparsed = parse_records(&text).unwrap();
        assert_eq!(records, reparsed);
    }
}
