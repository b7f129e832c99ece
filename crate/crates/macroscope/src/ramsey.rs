//! Ramsey-like interferometer macroscopicity.
//!
//! The superposed components are the two hyperfine ground states of an atom,
//! split by ν₀ and held for the interval T between the two Ramsey pulses.
//! Distinguishing the branches by elastic photon scattering leads to
//! τ = [9/(8π³αν₀)]·(c/(r_sν_s))² and hence β = 8π³α(r_sν_s)²ν₀T/(9c²),
//! where ν_s is the principal optical (D1) transition frequency and r_s the
//! effective dipole size of the atom.
//!
//! The second half of the module keeps the underlying hydrogenic scattering
//! machinery: state-dependent elastic cross-sections, the cross-section
//! distinction δσ, the detuned-absorption probability that limits the probe
//! duration, and the general distinguishing time those combine into.

use crate::error::{Error, Result};
use crate::quantities::{constants, Dimension, Quantity};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Relative guard band on resonance denominators. Evaluations closer than
/// this to a root are rejected as `NearResonance`: the cross-section formula
/// only holds off resonance.
pub const RESONANCE_GUARD: f64 = 1e-6;

/// One Ramsey experiment: clock transition, host-atom parameters, and the
/// pulse-separation time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseyRecord {
    /// Hyperfine splitting ν₀, Hz.
    pub hyperfine_splitting: Quantity,
    /// Principal optical transition frequency ν_s, Hz.
    pub transition_frequency: Quantity,
    /// Effective dipole size r_s, m. Preferred over `einstein_a` when both
    /// are present.
    pub system_size: Option<Quantity>,
    /// Spontaneous emission rate of the ν_s transition, s⁻¹, used to derive
    /// r_s when `system_size` is absent.
    pub einstein_a: Option<Quantity>,
    /// Interval between the two Ramsey pulses, s.
    pub coherence_time: Quantity,
    /// Published β for comparison, if any.
    pub published_beta: Option<f64>,
}

impl RamseyRecord {
    pub fn validate(&self) -> Result<()> {
        self.hyperfine_splitting
            .expect_dim(Dimension::FREQUENCY, "hyperfine splitting")?;
        self.hyperfine_splitting
            .expect_positive("hyperfine splitting")?;
        self.transition_frequency
            .expect_dim(Dimension::FREQUENCY, "transition frequency")?;
        self.transition_frequency
            .expect_positive("transition frequency")?;
        if self.hyperfine_splitting.value() >= self.transition_frequency.value() {
            return Err(Error::NonPositiveInput {
                name: "transition frequency minus hyperfine splitting",
                value: self.transition_frequency.value() - self.hyperfine_splitting.value(),
            });
        }
        self.coherence_time
            .expect_dim(Dimension::TIME, "coherence time")?;
        self.coherence_time.expect_positive("coherence time")?;
        if let Some(r) = self.system_size {
            r.expect_dim(Dimension::LENGTH, "system size")?;
            r.expect_positive("system size")?;
        }
        if let Some(a) = self.einstein_a {
            a.expect_dim(Dimension::FREQUENCY, "spontaneous emission rate")?;
            a.expect_positive("spontaneous emission rate")?;
        }
        if self.system_size.is_none() && self.einstein_a.is_none() {
            return Err(Error::MissingParameter(
                "system size or spontaneous emission rate".to_string(),
            ));
        }
        Ok(())
    }

    /// The dipole size to use: explicit `system_size` when present, otherwise
    /// derived from the spontaneous emission rate.
    pub fn resolved_system_size(&self) -> Result<Quantity> {
        if let Some(r) = self.system_size {
            return Ok(r);
        }
        match self.einstein_a {
            Some(a) => system_size_from_einstein_a(a, self.transition_frequency),
            None => Err(Error::MissingParameter(
                "system size or spontaneous emission rate".to_string(),
            )),
        }
    }
}

/// Spontaneous emission rate of a transition of frequency ν_s and dipole size
/// r_s: A = 32απ³ν_s³r_s²/(9c²).
pub fn einstein_a_from_system_size(system_size: Quantity, nu_s: Quantity) -> Result<Quantity> {
    system_size.expect_dim(Dimension::LENGTH, "system size")?;
    system_size.expect_positive("system size")?;
    nu_s.expect_dim(Dimension::FREQUENCY, "transition frequency")?;
    nu_s.expect_positive("transition frequency")?;
    let a = constants::fine_structure().scale(32.0 * PI.powi(3) / 9.0)
        * nu_s.powi(3)
        * system_size.powi(2)
        / constants::light_speed().powi(2);
    a.expect_dim(Dimension::FREQUENCY, "spontaneous emission rate")?;
    Ok(a)
}

/// Inverts the spontaneous-emission relation for the dipole size:
/// r_s = sqrt(9c²A/(32απ³ν_s³)).
pub fn system_size_from_einstein_a(einstein_a: Quantity, nu_s: Quantity) -> Result<Quantity> {
    einstein_a.expect_dim(Dimension::FREQUENCY, "spontaneous emission rate")?;
    einstein_a.expect_positive("spontaneous emission rate")?;
    nu_s.expect_dim(Dimension::FREQUENCY, "transition frequency")?;
    nu_s.expect_positive("transition frequency")?;
    let r_sq = constants::light_speed()
        .powi(2)
        .scale(9.0 / (32.0 * PI.powi(3)))
        * einstein_a
        / (constants::fine_structure() * nu_s.powi(3));
    let r = r_sq.sqrt()?;
    r.expect_dim(Dimension::LENGTH, "system size")?;
    Ok(r)
}

/// Time to repeatably distinguish the hyperfine components:
/// τ = [9/(8π³αν₀)]·(c/(r_sν_s))².
pub fn distinguish_time(nu0: Quantity, nu_s: Quantity, system_size: Quantity) -> Result<Quantity> {
    nu0.expect_dim(Dimension::FREQUENCY, "hyperfine splitting")?;
    nu0.expect_positive("hyperfine splitting")?;
    nu_s.expect_dim(Dimension::FREQUENCY, "transition frequency")?;
    nu_s.expect_positive("transition frequency")?;
    system_size.expect_dim(Dimension::LENGTH, "system size")?;
    system_size.expect_positive("system size")?;
    let ratio = constants::light_speed() / (system_size * nu_s);
    let tau = ratio.powi(2).scale(9.0 / (8.0 * PI.powi(3))) / (constants::fine_structure() * nu0);
    tau.expect_dim(Dimension::TIME, "distinguishing time")?;
    Ok(tau)
}

/// Macroscopicity of a Ramsey interferometer:
/// β = 8π³α(r_sν_s)²ν₀T/(9c²) = T/τ.
pub fn beta(record: &RamseyRecord) -> Result<Quantity> {
    record.validate()?;
    let r_s = record.resolved_system_size()?;
    let scaled = (r_s * record.transition_frequency / constants::light_speed()).powi(2);
    let b = scaled.scale(8.0 * PI.powi(3) / 9.0)
        * constants::fine_structure()
        * record.hyperfine_splitting
        * record.coherence_time;
    b.expect_dim(Dimension::NONE, "beta")?;
    Ok(b)
}

/// One hydrogenic intermediate level: principal quantum number, transition
/// frequency to the ground state, and squared radial matrix element.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HydrogenicLevel {
    pub n: u32,
    /// ν_{n1}, Hz.
    pub nu_n1: Quantity,
    /// |r_{n1}|², m².
    pub r_n1_sq: Quantity,
}

/// Radial matrix element |⟨np|r|1s⟩| of hydrogen in closed form:
/// 2⁴·n^{7/2}·(n−1)^{n−5/2}/(n+1)^{n+5/2} Bohr radii.
pub fn hydrogen_matrix_element(n: u32) -> Result<Quantity> {
    if n < 2 {
        return Err(Error::InvalidQuantumNumber(n));
    }
    let nf = n as f64;
    let in_bohr = 16.0 * nf.powf(3.5) * (nf - 1.0).powf(nf - 2.5) / (nf + 1.0).powf(nf + 2.5);
    Ok(constants::bohr_radius().scale(in_bohr))
}

/// Lyman-series levels n = 2..=n_max with ν_{n1} = cR∞(1 − 1/n²) and the
/// closed-form matrix elements.
pub fn hydrogen_levels(n_max: u32) -> Result<Vec<HydrogenicLevel>> {
    if n_max < 2 {
        return Err(Error::InvalidQuantumNumber(n_max));
    }
    (2..=n_max)
        .map(|n| {
            let nf = n as f64;
            let nu_n1 = constants::rydberg_frequency().scale(1.0 - 1.0 / (nf * nf));
            let r = hydrogen_matrix_element(n)?;
            Ok(HydrogenicLevel {
                n,
                nu_n1,
                r_n1_sq: r.powi(2),
            })
        })
        .collect()
}

/// Hyperfine ground-state component being probed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HyperfineState {
    F0,
    F1,
}

impl HyperfineState {
    fn quantum_number(self) -> f64 {
        match self {
            HyperfineState::F0 => 0.0,
            HyperfineState::F1 => 1.0,
        }
    }
}

fn check_levels(levels: &[HydrogenicLevel]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::EmptyLevelSet);
    }
    for level in levels {
        level
            .nu_n1
            .expect_dim(Dimension::FREQUENCY, "level frequency")?;
        level.nu_n1.expect_positive("level frequency")?;
        level
            .r_n1_sq
            .expect_dim(Dimension::AREA, "matrix element squared")?;
        level.r_n1_sq.expect_positive("matrix element squared")?;
    }
    Ok(())
}

/// Elastic scattering cross-section of a probe photon of frequency ν off the
/// hyperfine state F:
///
/// σ(F,ν) = (16π³α²/3c²)·ν⁴·|Σ_n (|r_{n1}|²/3)·(−2ν_{n1}+2Fν₀)/((ν_{n1}−Fν₀)²−ν²)|².
pub fn elastic_cross_section(
    state: HyperfineState,
    nu: Quantity,
    levels: &[HydrogenicLevel],
    nu0: Quantity,
) -> Result<Quantity> {
    check_levels(levels)?;
    nu.expect_dim(Dimension::FREQUENCY, "probe frequency")?;
    nu.expect_positive("probe frequency")?;
    nu0.expect_dim(Dimension::FREQUENCY, "hyperfine splitting")?;
    if nu0.value() < 0.0 {
        return Err(Error::NonPositiveInput {
            name: "hyperfine splitting",
            value: nu0.value(),
        });
    }
    let f = state.quantum_number();
    let mut sum = Quantity::new(0.0, Dimension::AREA_TIME);
    for level in levels {
        let shifted = level.nu_n1.try_sub(nu0.scale(f))?;
        let denominator = shifted.powi(2).try_sub(nu.powi(2))?;
        if denominator.value().abs() <= RESONANCE_GUARD * level.nu_n1.value().powi(2) {
            return Err(Error::NearResonance {
                nu: nu.value(),
                n: level.n,
            });
        }
        let numerator = (nu0.scale(f).try_sub(level.nu_n1)?).scale(2.0);
        sum = sum.try_add(level.r_n1_sq.scale(1.0 / 3.0) * numerator / denominator)?;
    }
    let prefactor = constants::fine_structure()
        .powi(2)
        .scale(16.0 * PI.powi(3) / 3.0)
        * nu.powi(4)
        / constants::light_speed().powi(2);
    let sigma = prefactor * sum.powi(2);
    sigma.expect_dim(Dimension::AREA, "cross-section")?;
    Ok(sigma)
}

/// Distinction between the hyperfine components: δσ = |σ(1,ν) − σ(0,ν)|.
pub fn cross_section_distinction(
    nu: Quantity,
    levels: &[HydrogenicLevel],
    nu0: Quantity,
) -> Result<Quantity> {
    let upper = elastic_cross_section(HyperfineState::F1, nu, levels, nu0)?;
    let lower = elastic_cross_section(HyperfineState::F0, nu, levels, nu0)?;
    Ok(upper.try_sub(lower)?.abs())
}

fn check_detuning(nu: Quantity, levels: &[HydrogenicLevel]) -> Result<()> {
    for level in levels {
        let detuning = level.nu_n1.value() - nu.value();
        if detuning * detuning <= RESONANCE_GUARD * level.nu_n1.value().powi(2) {
            return Err(Error::NearResonance {
                nu: nu.value(),
                n: level.n,
            });
        }
    }
    Ok(())
}

/// Detuned-absorption expression for a probe of frequency ν applied for a
/// time t:
///
/// P_a ∝ ν·Σ_n |r_{n1}|²/(ν_{n1}−ν)²·sin²[(ν_{n1}−ν)t/2].
///
/// The proportionality constant is unspecified, so the returned quantity
/// (evaluation dimension m²·s) is meaningful only in ratios.
pub fn detuning_absorption(
    nu: Quantity,
    duration: Quantity,
    levels: &[HydrogenicLevel],
) -> Result<Quantity> {
    check_levels(levels)?;
    nu.expect_dim(Dimension::FREQUENCY, "probe frequency")?;
    nu.expect_positive("probe frequency")?;
    duration.expect_dim(Dimension::TIME, "duration")?;
    if duration.value() < 0.0 {
        return Err(Error::NonPositiveInput {
            name: "duration",
            value: duration.value(),
        });
    }
    check_detuning(nu, levels)?;
    let mut sum = Quantity::new(0.0, Dimension::AREA * Dimension::TIME.pow(2));
    for level in levels {
        let detuning = level.nu_n1.try_sub(nu)?;
        let phase = 0.5 * detuning.value() * duration.value();
        let oscillation = phase.sin().powi(2);
        sum = sum.try_add((level.r_n1_sq / detuning.powi(2)).scale(oscillation))?;
    }
    let p = nu * sum;
    p.expect_dim(Dimension::AREA_TIME, "detuned absorption")?;
    Ok(p)
}

/// General repeatable-distinguishing time from the scattering picture:
///
/// τ = (2αν/3δσ)·Σ_n |r_{n1}|²/(ν_{n1}−ν)².
pub fn distinguish_time_general(
    nu: Quantity,
    levels: &[HydrogenicLevel],
    nu0: Quantity,
) -> Result<Quantity> {
    check_detuning(nu, levels)?;
    let distinction = cross_section_distinction(nu, levels, nu0)?;
    if distinction.value() == 0.0 {
        return Err(Error::ZeroDistinction);
    }
    let mut sum = Quantity::new(0.0, Dimension::AREA * Dimension::TIME.pow(2));
    for level in levels {
        let detuning = level.nu_n1.try_sub(nu)?;
        sum = sum.try_add(level.r_n1_sq / detuning.powi(2))?;
    }
    let tau = constants::fine_structure().scale(2.0 / 3.0) * nu * sum / distinction;
    tau.expect_dim(Dimension::TIME, "distinguishing time")?;
    Ok(tau)
}
