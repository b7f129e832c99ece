//! Ad-hoc β computation and the probe-photon / hydrogenic-scattering
//! calculators, driven by `key=value` command-line parameters.

use super::{Item, OutputFormat, ValueReport};
use crate::dataset::{evaluate_kind, parse_interval_argument, parse_scalar_argument, RecordKind};
use crate::error::{Error, Result};
use crate::matterwave::{self, SlitConfig};
use crate::quantities::{Dimension, Interval, Monotonicity, Quantity};
use crate::ramsey::{self, HyperfineState, RamseyRecord};
use crate::trap::TrapRecord;

/// Experiment class for `compute`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ComputeKind {
    /// Matter-wave interferometer.
    Mw,
    /// Ramsey-like interferometer.
    Ramsey,
    /// Two-trap superposition.
    Trap,
}

/// Calculator for `appendix`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum AppendixCalc {
    /// Probe-photon frequency window and the distinguishing time it implies.
    #[value(name = "probe_window")]
    ProbeWindow,
    /// Elastic cross-sections of the two hyperfine components.
    #[value(name = "xsec")]
    Xsec,
    /// Detuned-absorption expression.
    #[value(name = "pa")]
    Pa,
    /// Scattering-picture distinguishing time vs the simplified formula.
    #[value(name = "tau_general")]
    TauGeneral,
}

/// Parsed `key=value` parameters, consumed key by key.
struct Params {
    entries: Vec<(String, String)>,
}

impl Params {
    fn parse(tokens: &[String]) -> Result<Params> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for token in tokens {
            let Some((key, value)) = token.split_once('=') else {
                return Err(Error::parse(
                    0,
                    format!("expected key=value, got `{token}`"),
                ));
            };
            let key = key.trim().to_ascii_lowercase();
            let value = value.trim().to_string();
            if entries.iter().any(|(k, _)| *k == key) {
                return Err(Error::parse(0, format!("duplicate parameter `{key}`")));
            }
            entries.push((key, value));
        }
        Ok(Params { entries })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        let index = self.entries.iter().position(|(k, _)| k == key)?;
        Some(self.entries.remove(index).1)
    }

    fn take_scalar(&mut self, key: &str) -> Result<Option<Quantity>> {
        self.take(key)
            .map(|raw| parse_scalar_argument(key, &raw))
            .transpose()
    }

    fn require_scalar(&mut self, key: &str) -> Result<Quantity> {
        self.take_scalar(key)?
            .ok_or_else(|| Error::MissingParameter(key.to_string()))
    }

    fn take_interval(&mut self, key: &str) -> Result<Option<Interval>> {
        self.take(key)
            .map(|raw| parse_interval_argument(key, &raw))
            .transpose()
    }

    fn take_u32(&mut self, key: &str) -> Result<Option<u32>> {
        self.take(key)
            .map(|raw| {
                raw.parse::<u32>()
                    .map_err(|_| Error::parse(0, format!("`{raw}` is not a non-negative integer")))
            })
            .transpose()
    }

    fn finish(self) -> Result<()> {
        match self.entries.into_iter().next() {
            Some((key, _)) => Err(Error::parse(0, format!("unknown parameter `{key}`"))),
            None => Ok(()),
        }
    }
}

/// Consumes the slit-geometry parameters, echoing them as inputs.
fn take_geometry(
    params: &mut Params,
    width: Quantity,
    inputs: &mut Vec<Item>,
) -> Result<Option<SlitConfig>> {
    let Some(shape) = params.take("geometry") else {
        return Ok(None);
    };
    fn grab(params: &mut Params, inputs: &mut Vec<Item>, key: &str) -> Result<Quantity> {
        let q = params.require_scalar(key)?;
        inputs.push(Item::scalar(key, q));
        Ok(q)
    }
    let config = match shape.as_str() {
        "single" => SlitConfig::Single {
            width,
            source_distance: grab(params, inputs, "source_distance")?,
        },
        "double" => SlitConfig::Double {
            width,
            separation: grab(params, inputs, "separation")?,
            collimator_width: grab(params, inputs, "collimator")?,
            collimator_distance: grab(params, inputs, "collimator_distance")?,
        },
        "multi" => {
            let count = params
                .take_u32("slit_count")?
                .ok_or_else(|| Error::MissingParameter("slit_count".to_string()))?;
            inputs.push(Item::number("slit_count", f64::from(count)));
            SlitConfig::Multi {
                count,
                width,
                period: grab(params, inputs, "separation")?,
                source_distance: grab(params, inputs, "source_distance")?,
            }
        }
        other => {
            return Err(Error::parse(
                0,
                format!("geometry must be single, double, or multi, got `{other}`"),
            ))
        }
    };
    config.validate()?;
    Ok(Some(config))
}

fn compute_mw(mut params: Params, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let mass = params.take_scalar("mass")?;
    let wavelength = params.take_interval("lambda")?;
    let momentum = params.take_scalar("p")?;
    let width = params.require_scalar("d")?;
    let theta_given = params.take_scalar("theta")?;
    let geometry = take_geometry(&mut params, width, inputs)?;
    params.finish()?;

    if let Some(m) = mass {
        inputs.push(Item::scalar("mass", m));
    }
    if let Some(band) = wavelength {
        inputs.push(Item::band("lambda", band));
    }
    if let Some(p) = momentum {
        inputs.push(Item::scalar("p", p));
    }
    inputs.push(Item::scalar("d", width));
    if let Some(theta) = theta_given {
        inputs.push(Item::scalar("theta", theta));
    }

    let divergence = geometry
        .as_ref()
        .map(matterwave::effective_divergence)
        .transpose()?;
    let theta = theta_given
        .or(divergence.map(|d| d.theta))
        .ok_or_else(|| Error::MissingParameter("theta or geometry".to_string()))?;

    let mut results = Vec::new();
    if theta_given.is_none() {
        results.push(Item::scalar("theta", theta));
    }
    if let Some(divergence) = divergence {
        results.push(Item::scalar("path_length", divergence.path_length));
    }

    let beta = match (wavelength, momentum) {
        (Some(band), None) => {
            band.map_monotone(Monotonicity::Decreasing, Dimension::NONE, |lambda| {
                matterwave::beta_from_wavelength(lambda, theta, width)
            })?
        }
        (None, Some(p)) => Interval::exact(matterwave::beta(p, theta, width)?),
        (Some(_), Some(_)) => return Err(Error::parse(0, "give either lambda or p, not both")),
        (None, None) => return Err(Error::MissingParameter("lambda or p".to_string())),
    };
    results.push(Item::band("beta", beta));

    // The flight distance plus a mass turn the β band into explicit times.
    if let (Some(divergence), Some(mass)) = (divergence, mass) {
        let flight = divergence.path_length;
        let tau_of = |p: Quantity| matterwave::distinguish_time(flight, p / mass, p, theta, width);
        let tau = match (wavelength, momentum) {
            (Some(band), _) => {
                band.map_monotone(Monotonicity::Increasing, Dimension::TIME, |lambda| {
                    tau_of(matterwave::de_broglie_momentum(lambda)?)
                })?
            }
            (_, Some(p)) => Interval::exact(tau_of(p)?),
            _ => unreachable!("momentum presence already checked"),
        };
        results.push(Item::band("tau", tau));
        let unique_momentum = match (wavelength, momentum) {
            (_, Some(p)) => Some(p),
            (Some(band), _) if band.is_degenerate() => {
                Some(matterwave::de_broglie_momentum(band.lo())?)
            }
            _ => None,
        };
        if let Some(p) = unique_momentum {
            results.push(Item::scalar(
                "coherence_time",
                matterwave::coherence_time(flight, p / mass)?,
            ));
        }
    }
    Ok(results)
}

fn compute_ramsey(mut params: Params, tolerance: f64, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let record = RamseyRecord {
        hyperfine_splitting: params.require_scalar("nu0")?,
        transition_frequency: params.require_scalar("nu_s")?,
        system_size: params.take_scalar("r_s")?,
        einstein_a: params.take_scalar("einstein_a")?,
        coherence_time: params.require_scalar("t")?,
        published_beta: None,
    };
    params.finish()?;

    inputs.push(Item::scalar("nu0", record.hyperfine_splitting));
    inputs.push(Item::scalar("nu_s", record.transition_frequency));
    if let Some(r_s) = record.system_size {
        inputs.push(Item::scalar("r_s", r_s));
    }
    if let Some(a) = record.einstein_a {
        inputs.push(Item::scalar("einstein_a", a));
    }
    inputs.push(Item::scalar("t", record.coherence_time));

    let evaluation = evaluate_kind(&RecordKind::Ramsey(record.clone()), tolerance)?;
    let mut results = Vec::new();
    // Echo the derived counterpart of whichever size input was given.
    match (record.system_size, record.einstein_a) {
        (Some(r_s), None) => results.push(Item::scalar(
            "einstein_a",
            ramsey::einstein_a_from_system_size(r_s, record.transition_frequency)?,
        )),
        (None, Some(a)) => results.push(Item::scalar(
            "r_s",
            ramsey::system_size_from_einstein_a(a, record.transition_frequency)?,
        )),
        _ => {}
    }
    results.push(Item::band("beta", evaluation.beta));
    if let Some(tau) = evaluation.tau {
        results.push(Item::band("tau", tau));
    }
    if let Some(t) = evaluation.coherence_time {
        results.push(Item::scalar("coherence_time", t));
    }
    Ok(results)
}

fn compute_trap(mut params: Params, tolerance: f64, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let energy = match params.take_scalar("e")? {
        Some(e) => e,
        None => params.require_scalar("energy")?,
    };
    let separation = match params.take_scalar("d")? {
        Some(d) => d,
        None => params.require_scalar("separation")?,
    };
    params.finish()?;
    inputs.push(Item::scalar("e", energy));
    inputs.push(Item::scalar("d", separation));
    let evaluation = evaluate_kind(
        &RecordKind::Trap(TrapRecord { energy, separation }),
        tolerance,
    )?;
    Ok(vec![Item::band("beta", evaluation.beta)])
}

/// Runs `compute` and renders the report.
pub fn run_compute(
    kind: ComputeKind,
    tokens: &[String],
    tolerance: f64,
    format: OutputFormat,
) -> Result<String> {
    let params = Params::parse(tokens)?;
    let mut inputs = Vec::new();
    let results = match kind {
        ComputeKind::Mw => compute_mw(params, &mut inputs)?,
        ComputeKind::Ramsey => compute_ramsey(params, tolerance, &mut inputs)?,
        ComputeKind::Trap => compute_trap(params, tolerance, &mut inputs)?,
    };
    Ok(ValueReport { inputs, results }.render(format))
}

fn momentum_from(params: &mut Params, inputs: &mut Vec<Item>) -> Result<Quantity> {
    let wavelength = params.take_scalar("lambda")?;
    let momentum = params.take_scalar("p")?;
    match (wavelength, momentum) {
        (Some(lambda), None) => {
            inputs.push(Item::scalar("lambda", lambda));
            matterwave::de_broglie_momentum(lambda)
        }
        (None, Some(p)) => {
            inputs.push(Item::scalar("p", p));
            Ok(p)
        }
        (Some(_), Some(_)) => Err(Error::parse(0, "give either lambda or p, not both")),
        (None, None) => Err(Error::MissingParameter("lambda or p".to_string())),
    }
}

fn probe_window_calc(mut params: Params, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let mass = params.require_scalar("mass")?;
    inputs.push(Item::scalar("mass", mass));
    let momentum = momentum_from(&mut params, inputs)?;
    let theta = params.require_scalar("theta")?;
    let width = params.require_scalar("d")?;
    let flight = params.require_scalar("l")?;
    let separation = params.take_scalar("separation")?;
    params.finish()?;
    inputs.push(Item::scalar("theta", theta));
    inputs.push(Item::scalar("d", width));
    inputs.push(Item::scalar("l", flight));
    if let Some(sep) = separation {
        inputs.push(Item::scalar("separation", sep));
    }

    let window = match separation {
        Some(sep) => matterwave::probe_window_exact(mass, momentum, theta, width, flight, sep)?,
        None => matterwave::probe_window(mass, momentum, theta, width, flight)?,
    };
    let tau_flight = matterwave::distinguish_time(flight, momentum / mass, momentum, theta, width)?;
    Ok(vec![
        Item::scalar("omega_max", window.omega_max),
        Item::scalar("delta_omega_max", window.delta_omega_max),
        Item::scalar("tau", window.tau),
        Item::scalar("tau_flight_formula", tau_flight),
        Item::number("ratio", window.tau.value() / tau_flight.value()),
    ])
}

fn level_set(params: &mut Params) -> Result<(Vec<ramsey::HydrogenicLevel>, u32)> {
    let n_max = params.take_u32("n_max")?.unwrap_or(10);
    Ok((ramsey::hydrogen_levels(n_max)?, n_max))
}

fn xsec_calc(mut params: Params, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let nu = params.require_scalar("nu")?;
    let nu0 = params.require_scalar("nu0")?;
    let (levels, n_max) = level_set(&mut params)?;
    params.finish()?;
    inputs.push(Item::scalar("nu", nu));
    inputs.push(Item::scalar("nu0", nu0));
    inputs.push(Item::number("n_max", f64::from(n_max)));

    let sigma_f0 = ramsey::elastic_cross_section(HyperfineState::F0, nu, &levels, nu0)?;
    let sigma_f1 = ramsey::elastic_cross_section(HyperfineState::F1, nu, &levels, nu0)?;
    let delta = ramsey::cross_section_distinction(nu, &levels, nu0)?;
    Ok(vec![
        Item::scalar("sigma_f0", sigma_f0),
        Item::scalar("sigma_f1", sigma_f1),
        Item::scalar("delta_sigma", delta),
    ])
}

fn pa_calc(mut params: Params, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let nu = params.require_scalar("nu")?;
    let duration = params.require_scalar("tau")?;
    let (levels, n_max) = level_set(&mut params)?;
    params.finish()?;
    inputs.push(Item::scalar("nu", nu));
    inputs.push(Item::scalar("tau", duration));
    inputs.push(Item::number("n_max", f64::from(n_max)));

    let p_a = ramsey::detuning_absorption(nu, duration, &levels)?;
    Ok(vec![Item::scalar("p_a", p_a)])
}

fn tau_general_calc(mut params: Params, inputs: &mut Vec<Item>) -> Result<Vec<Item>> {
    let nu0 = params.require_scalar("nu0")?;
    let nu_given = params.take_scalar("nu")?;
    let (levels, n_max) = level_set(&mut params)?;
    params.finish()?;
    let nu21 = levels[0].nu_n1;
    // Default probe frequency: halfway to the first resonance.
    let nu = nu_given.unwrap_or(nu21.scale(0.5));
    inputs.push(Item::scalar("nu0", nu0));
    inputs.push(Item::scalar("nu", nu));
    inputs.push(Item::number("n_max", f64::from(n_max)));

    let tau_general = ramsey::distinguish_time_general(nu, &levels, nu0)?;
    let r21 = ramsey::hydrogen_matrix_element(2)?;
    let tau_simplified = ramsey::distinguish_time(nu0, nu21, r21)?;
    Ok(vec![
        Item::scalar("tau_general", tau_general),
        Item::scalar("tau_simplified", tau_simplified),
        Item::number("ratio", tau_general.value() / tau_simplified.value()),
    ])
}

/// Runs `appendix` and renders the report.
pub fn run_appendix(calc: AppendixCalc, tokens: &[String], format: OutputFormat) -> Result<String> {
    let params = Params::parse(tokens)?;
    let mut inputs = Vec::new();
    let results = match calc {
        AppendixCalc::ProbeWindow => probe_window_calc(params, &mut inputs)?,
        AppendixCalc::Xsec => xsec_calc(params, &mut inputs)?,
        AppendixCalc::Pa => pa_calc(params, &mut inputs)?,
        AppendixCalc::TauGeneral => tau_general_calc(params, &mut inputs)?,
    };
    Ok(ValueReport { inputs, results }.render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(tokens: &[&str]) -> Vec<String> {
        tokens.iter().map(|t| t.to_string()).collect()
    }

    fn result_value(csv: &str, key: &str) -> f64 {
        for line in csv.lines() {
            let cells: Vec<&str> = line.split(',').collect();
            if cells[0] == "result" && cells[1] == key {
                return cells[2].parse().unwrap();
            }
        }
        panic!("key {key} not found in {csv}");
    }

    #[test]
    fn electron_row_from_flags() {
        let out = run_compute(
            ComputeKind::Mw,
            &args(&["lambda=50pm", "theta=0.58urad", "d=0.062um"]),
            0.10,
            OutputFormat::Csv,
        )
        .unwrap();
        let beta = result_value(&out, "beta");
        assert!((beta - 5.6e-4).abs() / 5.6e-4 < 0.01, "beta = {beta}");
    }

    #[test]
    fn cesium_row_from_flags() {
        let out = run_compute(
            ComputeKind::Ramsey,
            &args(&["nu0=9.2GHz", "nu_s=335THz", "r_s=5.5a0", "t=0.354s"]),
            0.10,
            OutputFormat::Csv,
        )
        .unwrap();
        let beta = result_value(&out, "beta");
        assert!((beta - 70.0).abs() / 70.0 < 0.03, "beta = {beta}");
    }

    #[test]
    fn trap_calibration_point() {
        let out = run_compute(
            ComputeKind::Trap,
            &args(&["e=1eV", "d=2.480um"]),
            0.10,
            OutputFormat::Csv,
        )
        .unwrap();
        let beta = result_value(&out, "beta");
        assert!((beta - 1.0).abs() < 1e-3, "beta = {beta}");
    }

    #[test]
    fn geometry_and_mass_bring_the_time_scales() {
        let out = run_compute(
            ComputeKind::Mw,
            &args(&[
                "mass=1u",
                "lambda=500pm",
                "d=1.2um",
                "geometry=multi",
                "slit_count=100",
                "separation=2.4um",
                "source_distance=1m",
            ]),
            0.10,
            OutputFormat::Csv,
        )
        .unwrap();
        let beta = result_value(&out, "beta");
        let tau = result_value(&out, "tau");
        let coherence = result_value(&out, "coherence_time");
        assert!(
            ((coherence / tau) - beta).abs() / beta < 1e-12,
            "β = T/τ: {beta} vs {}",
            coherence / tau
        );
    }

    #[test]
    fn missing_required_parameter_is_reported() {
        let err = run_compute(
            ComputeKind::Mw,
            &args(&["lambda=50pm", "theta=0.58urad"]),
            0.10,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingParameter(ref k) if k == "d"));
    }

    #[test]
    fn unknown_parameter_is_rejected() {
        let err = run_compute(
            ComputeKind::Trap,
            &args(&["e=1eV", "d=1um", "bogus=3"]),
            0.10,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
    }

    #[test]
    fn probe_window_matches_flight_formula() {
        let out = run_appendix(
            AppendixCalc::ProbeWindow,
            &args(&[
                "mass=1u",
                "lambda=500pm",
                "theta=0.51urad",
                "d=1.2um",
                "l=1m",
            ]),
            OutputFormat::Csv,
        )
        .unwrap();
        let ratio = result_value(&out, "ratio");
        assert!((ratio - 1.0).abs() < 1e-12, "ratio = {ratio}");
        let omega = result_value(&out, "omega_max");
        assert!((omega - 1.1301909e12).abs() / 1.1301909e12 < 1e-6);
    }

    #[test]
    fn absorption_vanishes_at_zero_duration() {
        let out = run_appendix(
            AppendixCalc::Pa,
            &args(&["nu=1.2e15Hz", "tau=0s"]),
            OutputFormat::Csv,
        )
        .unwrap();
        assert_eq!(result_value(&out, "p_a"), 0.0);
    }

    #[test]
    fn tau_general_bridge_ratio_is_order_one() {
        let out = run_appendix(
            AppendixCalc::TauGeneral,
            &args(&["nu0=1.4204GHz", "n_max=2"]),
            OutputFormat::Csv,
        )
        .unwrap();
        let ratio = result_value(&out, "ratio");
        assert!((0.5..=2.0).contains(&ratio), "ratio = {ratio}");
        assert!((ratio - 1.35).abs() < 0.01, "ratio = {ratio}");
    }
}
