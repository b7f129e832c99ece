//! Evaluation of experiment records: computed β bands, time scales, and
//! agreement against published values.

use super::{ExperimentRecord, RecordKind};
use crate::error::Result;
use crate::matterwave;
use crate::quantities::{Dimension, Interval, Monotonicity, Quantity};
use crate::ramsey;

/// Everything computed for one record.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaResult {
    /// Computed macroscopicity band (degenerate when inputs are exact).
    pub beta: Interval,
    /// Distinguishing time τ, when the record determines it (matter-wave
    /// records need a geometry for the flight distance; trap records have
    /// no time scale of their own).
    pub tau: Option<Interval>,
    /// Observed coherence time T, when the record determines a unique one.
    pub coherence_time: Option<Quantity>,
    /// Published β band, if the record carries one.
    pub published_beta: Option<Interval>,
    /// Worst relative deviation of the computed band from the published one,
    /// compared endpoint-by-endpoint; `None` without a published value.
    pub max_rel_deviation: Option<f64>,
    /// Whether the deviation is within tolerance (vacuously true without a
    /// published value).
    pub agrees: bool,
}

/// Outcome for one record, keeping the identifying fields next to it so
/// reports can name the row even when evaluation failed.
#[derive(Debug)]
pub struct RecordResult {
    pub kind_name: &'static str,
    pub label: String,
    pub citation: String,
    pub year: i32,
    pub outcome: Result<BetaResult>,
}

/// Tally over a batch of records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvaluationSummary {
    pub total: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub failed: usize,
}

impl EvaluationSummary {
    /// True when every record evaluated cleanly and within tolerance.
    pub fn all_agree(&self) -> bool {
        self.disagreed == 0 && self.failed == 0
    }
}

fn evaluate_matterwave(
    record: &matterwave::MatterWaveRecord,
    tolerance: f64,
) -> Result<BetaResult> {
    record.validate()?;
    let beta = matterwave::beta_interval(record)?;
    let theta = record.resolved_theta()?;
    let width = record.slit_width;

    let mut tau = None;
    let mut coherence_time = None;
    if let Some(geometry) = &record.geometry {
        let divergence = matterwave::effective_divergence(geometry)?;
        let path_length = divergence.path_length;
        tau = Some(record.wavelength.map_monotone(
            Monotonicity::Increasing,
            Dimension::TIME,
            |lambda| {
                let momentum = matterwave::de_broglie_momentum(lambda)?;
                let speed = momentum / record.mass;
                matterwave::distinguish_time(path_length, speed, momentum, theta, width)
            },
        )?);
        if record.wavelength.is_degenerate() {
            let momentum = matterwave::de_broglie_momentum(record.wavelength.lo())?;
            let speed = momentum / record.mass;
            coherence_time = Some(matterwave::coherence_time(path_length, speed)?);
        }
    }

    Ok(compare(
        beta,
        tau,
        coherence_time,
        record.published_beta,
        tolerance,
    ))
}

fn evaluate_ramsey(record: &ramsey::RamseyRecord, tolerance: f64) -> Result<BetaResult> {
    record.validate()?;
    let beta = Interval::exact(ramsey::beta(record)?);
    let tau = Interval::exact(ramsey::distinguish_time(
        record.hyperfine_splitting,
        record.transition_frequency,
        record.resolved_system_size()?,
    )?);
    let published = record
        .published_beta
        .map(|b| Interval::exact(Quantity::dimensionless(b)));
    Ok(compare(
        beta,
        Some(tau),
        Some(record.coherence_time),
        published,
        tolerance,
    ))
}

fn evaluate_trap(record: &crate::trap::TrapRecord, tolerance: f64) -> Result<BetaResult> {
    record.validate()?;
    let beta = Interval::exact(record.beta()?);
    Ok(compare(beta, None, None, None, tolerance))
}

fn compare(
    beta: Interval,
    tau: Option<Interval>,
    coherence_time: Option<Quantity>,
    published_beta: Option<Interval>,
    tolerance: f64,
) -> BetaResult {
    let max_rel_deviation = published_beta
        .as_ref()
        .map(|published| beta.max_relative_deviation(published));
    let agrees = max_rel_deviation.is_none_or(|d| d <= tolerance);
    BetaResult {
        beta,
        tau,
        coherence_time,
        published_beta,
        max_rel_deviation,
        agrees,
    }
}

/// Evaluates a single record kind against a relative tolerance.
pub fn evaluate_kind(kind: &RecordKind, tolerance: f64) -> Result<BetaResult> {
    match kind {
        RecordKind::MatterWave(record) => evaluate_matterwave(record, tolerance),
        RecordKind::Ramsey(record) => evaluate_ramsey(record, tolerance),
        RecordKind::Trap(record) => evaluate_trap(record, tolerance),
    }
}

/// Evaluates every record in order, tallying agreement.
pub fn evaluate_all(
    records: &[ExperimentRecord],
    tolerance: f64,
) -> (Vec<RecordResult>, EvaluationSummary) {
    let mut summary = EvaluationSummary::default();
    let results = records
        .iter()
        .map(|record| {
            summary.total += 1;
            let outcome = evaluate_kind(&record.kind, tolerance);
            match &outcome {
                Ok(result) if result.agrees => summary.agreed += 1,
                Ok(_) => summary.disagreed += 1,
                Err(_) => summary.failed += 1,
            }
            RecordResult {
                kind_name: record.kind.name(),
                label: record.label.clone(),
                citation: record.citation.clone(),
                year: record.year,
                outcome,
            }
        })
        .collect();
    (results, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::parse_records;

    const NEUTRON: &str = "\
kind = matterwave
label = Neutron
citation = 1988neutron
year = 1988
mass = 1 u
lambda = 1901+-70 pm
d = 96 um
theta = 15.2 urad
beta = 0.60+-0.02
";

    #[test]
    fn neutron_row_agrees_at_default_tolerance() {
        let records = parse_records(NEUTRON).unwrap();
        let result = evaluate_kind(&records[0].kind, 0.10).unwrap();
        assert!(result.agrees, "deviation {:?}", result.max_rel_deviation);
        let mid = result.beta.midpoint().value();
        assert!((mid - 0.60).abs() < 0.03, "midpoint β = {mid}");
        assert!(result.tau.is_none(), "no geometry, no flight distance");
        assert!(result.coherence_time.is_none());
    }

    #[test]
    fn corrupted_published_value_disagrees() {
        let text = NEUTRON.replace("beta = 0.60+-0.02", "beta = 6.0");
        let records = parse_records(&text).unwrap();
        let result = evaluate_kind(&records[0].kind, 0.10).unwrap();
        assert!(!result.agrees);
        assert!(result.max_rel_deviation.unwrap() > 0.8);
    }

    #[test]
    fn ramsey_result_carries_both_time_scales() {
        let text = "\
kind = ramsey
label = 87Rb
citation = 2013Rb
year = 2013
nu0 = 6.8 GHz
nu_s = 377 THz
r_s = 5.2 a0
t = 2.3 s
beta = 370
";
        let records = parse_records(text).unwrap();
        let result = evaluate_kind(&records[0].kind, 0.10).unwrap();
        assert!(result.agrees, "deviation {:?}", result.max_rel_deviation);
        let tau = result.tau.unwrap();
        assert!(tau.is_degenerate());
        let t = result.coherence_time.unwrap();
        let ratio = t.value() / tau.lo().value();
        let beta = result.beta.lo().value();
        assert!(
            ((ratio - beta) / beta).abs() < 1e-12,
            "β = T/τ must hold: {ratio} vs {beta}"
        );
    }

    #[test]
    fn geometry_record_gains_tau_band() {
        let text = "\
kind = matterwave
label = Bench
citation = bench
year = 2000
mass = 1 u
lambda = 400..600 pm
d = 1.2 um
geometry = multi
slit_count = 100
separation = 2.4 um
source_distance = 1 m
";
        let records = parse_records(text).unwrap();
        let result = evaluate_kind(&records[0].kind, 0.10).unwrap();
        let tau = result.tau.unwrap();
        assert!(tau.lo().value() < tau.hi().value(), "τ grows with λ");
        assert!(
            result.coherence_time.is_none(),
            "λ band has no single speed"
        );
        assert!(result.agrees, "no published value means vacuous agreement");
        assert!(result.max_rel_deviation.is_none());
    }

    #[test]
    fn summary_counts_partition_the_batch() {
        let good = parse_records(NEUTRON).unwrap().remove(0);
        let bad_text = NEUTRON.replace("beta = 0.60+-0.02", "beta = 6.0");
        let bad = parse_records(&bad_text).unwrap().remove(0);
        let (results, summary) = evaluate_all(&[good, bad], 0.10);
        assert_eq!(results.len(), 2);
        assert_eq!(summary.total, 2);
        assert_eq!(summary.agreed, 1);
        assert_eq!(summary.disagreed, 1);
        assert_eq!(summary.failed, 0);
        assert!(!summary.all_agree());
    }
}
