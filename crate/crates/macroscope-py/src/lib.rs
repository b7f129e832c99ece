//! Python bindings for the macroscope library.
//!
//! Every function takes and returns plain floats in SI units (kg, m, s, Hz,
//! J, rad) so the module needs no wrapper types on the Python side; the
//! dimensional bookkeeping stays inside the Rust core, and any violation or
//! invalid input surfaces as `ValueError`. Built-in survey rows come back as
//! dictionaries mirroring the CLI's CSV columns.

use macroscope::dataset::{self, RecordResult};
use macroscope::quantities::{constants, Dimension, Quantity};
use macroscope::{matterwave, ramsey, trap};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(err: macroscope::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn scalar(result: macroscope::Result<Quantity>) -> PyResult<f64> {
    result.map(|q| q.value()).map_err(value_error)
}

/// Momentum of a matter wave of wavelength λ (m): p = h/λ, in kg·m/s.
#[pyfunction]
fn de_broglie_momentum(wavelength: f64) -> PyResult<f64> {
    scalar(matterwave::de_broglie_momentum(Quantity::meters(
        wavelength,
    )))
}

/// Matter-wave macroscopicity β = pθd/(8ℏ) from momentum (kg·m/s),
/// divergence angle (rad), and slit width (m).
#[pyfunction]
fn matterwave_beta(momentum: f64, theta: f64, width: f64) -> PyResult<f64> {
    scalar(matterwave::beta(
        Quantity::new(momentum, Dimension::MOMENTUM),
        Quantity::radians(theta),
        Quantity::meters(width),
    ))
}

/// Matter-wave macroscopicity β = πθd/(4λ) from the wavelength (m) instead
/// of the momentum.
#[pyfunction]
fn matterwave_beta_from_wavelength(wavelength: f64, theta: f64, width: f64) -> PyResult<f64> {
    scalar(matterwave::beta_from_wavelength(
        Quantity::meters(wavelength),
        Quantity::radians(theta),
        Quantity::meters(width),
    ))
}

/// Observed coherence time T = L/v (s) for flight distance L (m) and speed
/// v (m/s).
#[pyfunction]
fn matterwave_coherence_time(path_length: f64, speed: f64) -> PyResult<f64> {
    scalar(matterwave::coherence_time(
        Quantity::meters(path_length),
        Quantity::new(speed, Dimension::SPEED),
    ))
}

/// Repeatable-distinguishing time τ = 8ℏL/(vpθd) in seconds.
#[pyfunction]
fn matterwave_distinguish_time(
    path_length: f64,
    speed: f64,
    momentum: f64,
    theta: f64,
    width: f64,
) -> PyResult<f64> {
    scalar(matterwave::distinguish_time(
        Quantity::meters(path_length),
        Quantity::new(speed, Dimension::SPEED),
        Quantity::new(momentum, Dimension::MOMENTUM),
        Quantity::radians(theta),
        Quantity::meters(width),
    ))
}

/// Probe-photon window for a matter-wave experiment.
///
/// Returns a dict with `omega_max` (rad/s), `delta_omega_max` (rad/s) and
/// `tau` (s); `tau` equals the flight-formula distinguishing time exactly.
#[pyfunction]
fn probe_window(
    py: Python<'_>,
    mass: f64,
    momentum: f64,
    theta: f64,
    width: f64,
    path_length: f64,
) -> PyResult<Py<PyDict>> {
    let window = matterwave::probe_window(
        Quantity::kilograms(mass),
        Quantity::new(momentum, Dimension::MOMENTUM),
        Quantity::radians(theta),
        Quantity::meters(width),
        Quantity::meters(path_length),
    )
    .map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("omega_max", window.omega_max.value())?;
    out.set_item("delta_omega_max", window.delta_omega_max.value())?;
    out.set_item("tau", window.tau.value())?;
    Ok(out.unbind())
}

/// Ramsey macroscopicity β = 8π³α(r_sν_s)²ν₀T/(9c²).
///
/// Pass either `system_size` (r_s, m) or `einstein_a` (spontaneous emission
/// rate of the ν_s transition, 1/s); `system_size` wins if both are given.
#[pyfunction]
#[pyo3(signature = (hyperfine_splitting, transition_frequency, coherence_time, system_size=None, einstein_a=None))]
fn ramsey_beta(
    hyperfine_splitting: f64,
    transition_frequency: f64,
    coherence_time: f64,
    system_size: Option<f64>,
    einstein_a: Option<f64>,
) -> PyResult<f64> {
    let record = ramsey::RamseyRecord {
        hyperfine_splitting: Quantity::hertz(hyperfine_splitting),
        transition_frequency: Quantity::hertz(transition_frequency),
        system_size: system_size.map(Quantity::meters),
        einstein_a: einstein_a.map(Quantity::hertz),
        coherence_time: Quantity::seconds(coherence_time),
        published_beta: None,
    };
    scalar(ramsey::beta(&record))
}

/// Ramsey distinguishing time τ = [9/(8π³αν₀)]·(c/(r_sν_s))² in seconds.
#[pyfunction]
fn ramsey_distinguish_time(
    hyperfine_splitting: f64,
    transition_frequency: f64,
    system_size: f64,
) -> PyResult<f64> {
    scalar(ramsey::distinguish_time(
        Quantity::hertz(hyperfine_splitting),
        Quantity::hertz(transition_frequency),
        Quantity::meters(system_size),
    ))
}

/// Spontaneous emission rate A = 32απ³ν_s³r_s²/(9c²) in 1/s.
#[pyfunction]
fn einstein_a_from_system_size(system_size: f64, transition_frequency: f64) -> PyResult<f64> {
    scalar(ramsey::einstein_a_from_system_size(
        Quantity::meters(system_size),
        Quantity::hertz(transition_frequency),
    ))
}

/// Dipole size r_s = sqrt(9c²A/(32απ³ν_s³)) in meters.
#[pyfunction]
fn system_size_from_einstein_a(einstein_a: f64, transition_frequency: f64) -> PyResult<f64> {
    scalar(ramsey::system_size_from_einstein_a(
        Quantity::hertz(einstein_a),
        Quantity::hertz(transition_frequency),
    ))
}

/// Radial matrix element |⟨np|r|1s⟩| of hydrogen in meters.
#[pyfunction]
fn hydrogen_matrix_element(n: u32) -> PyResult<f64> {
    scalar(ramsey::hydrogen_matrix_element(n))
}

/// Hydrogenic levels n = 2..=n_max as (n, ν_n1 in Hz, |r_n1|² in m²) tuples.
#[pyfunction]
fn hydrogen_levels(n_max: u32) -> PyResult<Vec<(u32, f64, f64)>> {
    let levels = ramsey::hydrogen_levels(n_max).map_err(value_error)?;
    Ok(levels
        .iter()
        .map(|level| (level.n, level.nu_n1.value(), level.r_n1_sq.value()))
        .collect())
}

fn hyperfine_state(f: u32) -> PyResult<ramsey::HyperfineState> {
    match f {
        0 => Ok(ramsey::HyperfineState::F0),
        1 => Ok(ramsey::HyperfineState::F1),
        other => Err(PyValueError::new_err(format!(
            "hyperfine state must be 0 or 1, got {other}"
        ))),
    }
}

/// Elastic scattering cross-section σ(F, ν) in m² off the hyperfine state
/// F ∈ {0, 1}, for probe frequency ν (Hz), splitting ν₀ (Hz), and
/// intermediate levels up to n_max.
#[pyfunction]
#[pyo3(signature = (f, nu, hyperfine_splitting, n_max=10))]
fn elastic_cross_section(f: u32, nu: f64, hyperfine_splitting: f64, n_max: u32) -> PyResult<f64> {
    let levels = ramsey::hydrogen_levels(n_max).map_err(value_error)?;
    scalar(ramsey::elastic_cross_section(
        hyperfine_state(f)?,
        Quantity::hertz(nu),
        &levels,
        Quantity::hertz(hyperfine_splitting),
    ))
}

/// Cross-section distinction δσ = |σ(1, ν) − σ(0, ν)| in m².
#[pyfunction]
#[pyo3(signature = (nu, hyperfine_splitting, n_max=10))]
fn cross_section_distinction(nu: f64, hyperfine_splitting: f64, n_max: u32) -> PyResult<f64> {
    let levels = ramsey::hydrogen_levels(n_max).map_err(value_error)?;
    scalar(ramsey::cross_section_distinction(
        Quantity::hertz(nu),
        &levels,
        Quantity::hertz(hyperfine_splitting),
    ))
}

/// Detuning absorption measure P_a(ν, τ) in m²·s.
#[pyfunction]
#[pyo3(signature = (nu, duration, n_max=10))]
fn detuning_absorption(nu: f64, duration: f64, n_max: u32) -> PyResult<f64> {
    let levels = ramsey::hydrogen_levels(n_max).map_err(value_error)?;
    scalar(ramsey::detuning_absorption(
        Quantity::hertz(nu),
        Quantity::seconds(duration),
        &levels,
    ))
}

/// General scattering-based distinguishing time, in seconds.
#[pyfunction]
#[pyo3(signature = (nu, hyperfine_splitting, n_max=10))]
fn ramsey_distinguish_time_general(nu: f64, hyperfine_splitting: f64, n_max: u32) -> PyResult<f64> {
    let levels = ramsey::hydrogen_levels(n_max).map_err(value_error)?;
    scalar(ramsey::distinguish_time_general(
        Quantity::hertz(nu),
        &levels,
        Quantity::hertz(hyperfine_splitting),
    ))
}

/// Trapped-superposition macroscopicity β = ED/(4πℏc) from the well energy
/// E (J) and trap separation D (m).
#[pyfunction]
fn trap_beta(energy: f64, separation: f64) -> PyResult<f64> {
    scalar(trap::beta(
        Quantity::joules(energy),
        Quantity::meters(separation),
    ))
}

fn row_dict(py: Python<'_>, result: &RecordResult) -> PyResult<Py<PyDict>> {
    let row = PyDict::new(py);
    row.set_item("kind", result.kind_name)?;
    row.set_item("label", &result.label)?;
    row.set_item("citation", &result.citation)?;
    row.set_item("year", result.year)?;
    match &result.outcome {
        Ok(outcome) => {
            row.set_item("beta_lo", outcome.beta.lo().value())?;
            row.set_item("beta_mid", outcome.beta.midpoint().value())?;
            row.set_item("beta_hi", outcome.beta.hi().value())?;
            row.set_item("tau_lo", outcome.tau.as_ref().map(|t| t.lo().value()))?;
            row.set_item("tau_hi", outcome.tau.as_ref().map(|t| t.hi().value()))?;
            row.set_item("coherence_time", outcome.coherence_time.map(|t| t.value()))?;
            row.set_item(
                "published_lo",
                outcome.published_beta.as_ref().map(|p| p.lo().value()),
            )?;
            row.set_item(
                "published_hi",
                outcome.published_beta.as_ref().map(|p| p.hi().value()),
            )?;
            row.set_item("max_rel_deviation", outcome.max_rel_deviation)?;
            row.set_item("agrees", outcome.agrees)?;
            row.set_item("error", py.None())?;
        }
        Err(err) => {
            row.set_item("agrees", false)?;
            row.set_item("error", err.to_string())?;
        }
    }
    Ok(row.unbind())
}

/// Evaluates the built-in survey and returns one dict per record.
#[pyfunction]
#[pyo3(signature = (tolerance=0.1))]
fn evaluate_builtin(py: Python<'_>, tolerance: f64) -> PyResult<Vec<Py<PyDict>>> {
    let records = dataset::builtin_all();
    let (results, _) = dataset::evaluate_all(&records, tolerance);
    results.iter().map(|r| row_dict(py, r)).collect()
}

/// Parses experiment records from text and evaluates them; same row shape
/// as `evaluate_builtin`.
#[pyfunction]
#[pyo3(signature = (text, tolerance=0.1))]
fn evaluate_records(py: Python<'_>, text: &str, tolerance: f64) -> PyResult<Vec<Py<PyDict>>> {
    let records = dataset::parse_records(text).map_err(value_error)?;
    let (results, _) = dataset::evaluate_all(&records, tolerance);
    results.iter().map(|r| row_dict(py, r)).collect()
}

/// Serializes the built-in survey in the record file format.
#[pyfunction]
fn export_builtin() -> String {
    dataset::serialize_records(&dataset::builtin_all())
}

#[pymodule]
fn macroscope_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HBAR", constants::HBAR)?;
    m.add("PLANCK", constants::PLANCK)?;
    m.add("LIGHT_SPEED", constants::LIGHT_SPEED)?;
    m.add("FINE_STRUCTURE", constants::FINE_STRUCTURE)?;
    m.add("BOHR_RADIUS", constants::BOHR_RADIUS)?;
    m.add("ATOMIC_MASS", constants::ATOMIC_MASS)?;
    m.add("ELECTRON_VOLT", constants::ELECTRON_VOLT)?;
    m.add("RYDBERG_FREQUENCY", constants::RYDBERG_FREQUENCY)?;

    m.add_function(wrap_pyfunction!(de_broglie_momentum, m)?)?;
    m.add_function(wrap_pyfunction!(matterwave_beta, m)?)?;
    m.add_function(wrap_pyfunction!(matterwave_beta_from_wavelength, m)?)?;
    m.add_function(wrap_pyfunction!(matterwave_coherence_time, m)?)?;
    m.add_function(wrap_pyfunction!(matterwave_distinguish_time, m)?)?;
    m.add_function(wrap_pyfunction!(probe_window, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_beta, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_distinguish_time, m)?)?;
    m.add_function(wrap_pyfunction!(einstein_a_from_system_size, m)?)?;
    m.add_function(wrap_pyfunction!(system_size_from_einstein_a, m)?)?;
    m.add_function(wrap_pyfunction!(hydrogen_matrix_element, m)?)?;
    m.add_function(wrap_pyfunction!(hydrogen_levels, m)?)?;
    m.add_function(wrap_pyfunction!(elastic_cross_section, m)?)?;
    m.add_function(wrap_pyfunction!(cross_section_distinction, m)?)?;
    m.add_function(wrap_pyfunction!(detuning_absorption, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_distinguish_time_general, m)?)?;
    m.add_function(wrap_pyfunction!(trap_beta, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_builtin, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_records, m)?)?;
    m.add_function(wrap_pyfunction!(export_builtin, m)?)?;
    Ok(())
}
