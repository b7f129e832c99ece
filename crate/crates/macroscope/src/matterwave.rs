//! Matter-wave interferometer macroscopicity.
//!
//! A particle of momentum p flies a distance L, is split over two paths that
//! diverge by an angle θ, and interferes behind slits of width d. The observed
//! coherence time is the flight time T = L/v, the repeatable-distinguishing
//! time is τ = 8ℏL/(vpθd), and the macroscopicity β = T/τ = pθd/(8ℏ) depends
//! only on (p, θ, d). The probe-photon window at the end of this module
//! rederives τ from the two measurement inequalities it encodes.

use crate::error::{Error, Result};
use crate::quantities::{constants, Dimension, Interval, Monotonicity, Quantity};
use serde::{Deserialize, Serialize};

/// Slit geometry variants used to estimate the divergence angle θ.
///
/// `width` is always the open slit width d that enters β; `separation` (or
/// `period`) is the center-to-center slit distance D.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum SlitConfig {
    /// One slit at distance `source_distance` = L from the source; θ = d/L.
    Single {
        width: Quantity,
        source_distance: Quantity,
    },
    /// Two slits fed through a collimating slit of width d' a distance l
    /// upstream; θ = (D − d')/l and the effective flight distance is D/θ.
    Double {
        width: Quantity,
        separation: Quantity,
        collimator_width: Quantity,
        collimator_distance: Quantity,
    },
    /// A grating of `count` ≥ 3 slits with period D at distance L; adjacent
    /// slits dominate the observed fringes, so θ = D/L.
    Multi {
        count: u32,
        width: Quantity,
        period: Quantity,
        source_distance: Quantity,
    },
}

impl SlitConfig {
    /// Open slit width d, the length scale entering β.
    pub fn width(&self) -> Quantity {
        match *self {
            SlitConfig::Single { width, .. }
            | SlitConfig::Double { width, .. }
            | SlitConfig::Multi { width, .. } => width,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |q: Quantity, name: &'static str| -> Result<()> {
            q.expect_dim(Dimension::LENGTH, name)?;
            q.expect_positive(name)
        };
        match *self {
            SlitConfig::Single {
                width,
                source_distance,
            } => {
                positive(width, "slit width")?;
                positive(source_distance, "source distance")?;
            }
            SlitConfig::Double {
                width,
                separation,
                collimator_width,
                collimator_distance,
            } => {
                positive(width, "slit width")?;
                positive(separation, "slit separation")?;
                positive(collimator_width, "collimator width")?;
                positive(collimator_distance, "collimator distance")?;
                if separation.value() <= collimator_width.value() {
                    return Err(Error::DegenerateGeometry {
                        separation: separation.value(),
                        collimator: collimator_width.value(),
                    });
                }
            }
            SlitConfig::Multi {
                count,
                width,
                period,
                source_distance,
            } => {
                if count < 3 {
                    return Err(Error::TooFewSlits(count));
                }
                positive(width, "slit width")?;
                positive(period, "grating period")?;
                positive(source_distance, "source distance")?;
                if period.value() <= width.value() {
                    return Err(Error::DegenerateGeometry {
                        separation: period.value(),
                        collimator: width.value(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Divergence angle θ between the interfering paths, with the flight distance
/// L consistent with the geometry that produced it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Divergence {
    /// Angle between the two paths, rad.
    pub theta: Quantity,
    /// Flight distance from source to slit plane, m.
    pub path_length: Quantity,
}

/// Estimates θ from slit geometry.
///
/// Single slit: θ = d/L. Double slit: θ = (D − d')/l, and L is recovered as
/// D/θ. Multi slit: θ = D/L with D the grating period.
pub fn effective_divergence(slits: &SlitConfig) -> Result<Divergence> {
    slits.validate()?;
    let (theta, path_length) = match *slits {
        SlitConfig::Single {
            width,
            source_distance,
        } => (width / source_distance, source_distance),
        SlitConfig::Double {
            separation,
            collimator_width,
            collimator_distance,
            ..
        } => {
            let gap = separation.try_sub(collimator_width)?;
            let theta = gap / collimator_distance;
            (theta, separation / theta)
        }
        SlitConfig::Multi {
            period,
            source_distance,
            ..
        } => (period / source_distance, source_distance),
    };
    theta.expect_dim(Dimension::NONE, "divergence angle")?;
    Ok(Divergence { theta, path_length })
}

/// Momentum of a matter wave of wavelength λ: p = 2πℏ/λ = h/λ.
pub fn de_broglie_momentum(wavelength: Quantity) -> Result<Quantity> {
    wavelength.expect_dim(Dimension::LENGTH, "wavelength")?;
    wavelength.expect_positive("wavelength")?;
    Ok(constants::planck() / wavelength)
}

/// Observed coherence time: the flight time T = L/v.
pub fn coherence_time(path_length: Quantity, speed: Quantity) -> Result<Quantity> {
    path_length.expect_dim(Dimension::LENGTH, "path length")?;
    path_length.expect_positive("path length")?;
    speed.expect_dim(Dimension::SPEED, "speed")?;
    speed.expect_positive("speed")?;
    Ok(path_length / speed)
}

/// Time to repeatably distinguish the two momentum trajectories:
/// τ = 8ℏL/(vpθd).
pub fn distinguish_time(
    path_length: Quantity,
    speed: Quantity,
    momentum: Quantity,
    theta: Quantity,
    width: Quantity,
) -> Result<Quantity> {
    path_length.expect_dim(Dimension::LENGTH, "path length")?;
    speed.expect_dim(Dimension::SPEED, "speed")?;
    momentum.expect_dim(Dimension::MOMENTUM, "momentum")?;
    theta.expect_dim(Dimension::NONE, "divergence angle")?;
    width.expect_dim(Dimension::LENGTH, "slit width")?;
    for (q, name) in [
        (path_length, "path length"),
        (speed, "speed"),
        (momentum, "momentum"),
        (theta, "divergence angle"),
        (width, "slit width"),
    ] {
        q.expect_positive(name)?;
    }
    let tau = constants::hbar().scale(8.0) * path_length / (speed * momentum * theta * width);
    tau.expect_dim(Dimension::TIME, "distinguishing time")?;
    Ok(tau)
}

/// Macroscopicity of a matter-wave interferometer: β = pθd/(8ℏ).
pub fn beta(momentum: Quantity, theta: Quantity, width: Quantity) -> Result<Quantity> {
    momentum.expect_dim(Dimension::MOMENTUM, "momentum")?;
    theta.expect_dim(Dimension::NONE, "divergence angle")?;
    width.expect_dim(Dimension::LENGTH, "slit width")?;
    momentum.expect_positive("momentum")?;
    theta.expect_positive("divergence angle")?;
    width.expect_positive("slit width")?;
    let b = momentum * theta * width / constants::hbar().scale(8.0);
    b.expect_dim(Dimension::NONE, "beta")?;
    Ok(b)
}

/// β expressed through the wavelength: β = πθd/(4λ).
pub fn beta_from_wavelength(
    wavelength: Quantity,
    theta: Quantity,
    width: Quantity,
) -> Result<Quantity> {
    beta(de_broglie_momentum(wavelength)?, theta, width)
}

/// One matter-wave experiment: particle, wavelength band, and slit data.
///
/// Published tables list θ directly without the full geometry, so the record
/// carries the slit width plus either a measured `theta` or a `geometry` to
/// derive it from; a present `theta` wins.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatterWaveRecord {
    /// Particle mass, kg.
    pub mass: Quantity,
    /// De Broglie wavelength band, m (degenerate for a single value).
    pub wavelength: Interval,
    /// Open slit width d, m.
    pub slit_width: Quantity,
    /// Full slit geometry, when known.
    pub geometry: Option<SlitConfig>,
    /// Measured divergence angle, rad; overrides `geometry`.
    pub theta: Option<Quantity>,
    /// Published β for comparison, if any.
    pub published_beta: Option<Interval>,
}

impl MatterWaveRecord {
    pub fn validate(&self) -> Result<()> {
        self.mass.expect_dim(Dimension::MASS, "mass")?;
        self.mass.expect_positive("mass")?;
        if self.wavelength.dim() != Dimension::LENGTH {
            return Err(Error::DimensionMismatch {
                context: "wavelength",
                left: self.wavelength.dim(),
                right: Dimension::LENGTH,
            });
        }
        self.wavelength.lo().expect_positive("wavelength")?;
        self.slit_width
            .expect_dim(Dimension::LENGTH, "slit width")?;
        self.slit_width.expect_positive("slit width")?;
        if let Some(theta) = self.theta {
            theta.expect_dim(Dimension::NONE, "divergence angle")?;
            theta.expect_positive("divergence angle")?;
        }
        if let Some(geometry) = &self.geometry {
            geometry.validate()?;
        }
        if self.theta.is_none() && self.geometry.is_none() {
            return Err(Error::MissingParameter(
                "theta or slit geometry".to_string(),
            ));
        }
        if let Some(published) = &self.published_beta {
            if !published.dim().is_none() {
                return Err(Error::DimensionMismatch {
                    context: "published beta",
                    left: published.dim(),
                    right: Dimension::NONE,
                });
            }
        }
        Ok(())
    }

    /// Divergence angle: the measured value when present, otherwise derived
    /// from the geometry.
    pub fn resolved_theta(&self) -> Result<Quantity> {
        if let Some(theta) = self.theta {
            return Ok(theta);
        }
        match &self.geometry {
            Some(geometry) => Ok(effective_divergence(geometry)?.theta),
            None => Err(Error::MissingParameter(
                "theta or slit geometry".to_string(),
            )),
        }
    }
}

/// β band of a record, mapped endpoint-wise from the wavelength band through
/// the decreasing map λ ↦ πθd/(4λ).
pub fn beta_interval(record: &MatterWaveRecord) -> Result<Interval> {
    record.validate()?;
    let theta = record.resolved_theta()?;
    let width = record.slit_width;
    record
        .wavelength
        .map_monotone(Monotonicity::Decreasing, Dimension::NONE, |lambda| {
            beta_from_wavelength(lambda, theta, width)
        })
}

/// Probe-photon window behind τ.
///
/// Distinguishing the paths requires resolving their momentum difference pθ
/// from the Doppler shift, bounding the probe bandwidth:
/// (Mc/2)(Δω/ω) ≤ pθ/2. Staying repeatable requires the photon recoil 2ℏω/c
/// to hide inside the slit momentum uncertainty pd/(2L), bounding the probe
/// frequency itself. The window is the extreme admissible pair, and τ is
/// twice the minimum interaction time 1/Δω_max (emission plus detection).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeWindow {
    /// Largest admissible probe angular frequency, rad/s.
    pub omega_max: Quantity,
    /// Largest admissible probe bandwidth at `omega_max`, rad/s.
    pub delta_omega_max: Quantity,
    /// Distinguishing time 2/Δω_max, s; equals 8ℏL/(vpθd) identically.
    pub tau: Quantity,
}

/// Computes the probe window with the recoil bound's far-field form
/// pd/(2L), giving ω_max = cpd/(4ℏL).
pub fn probe_window(
    mass: Quantity,
    momentum: Quantity,
    theta: Quantity,
    width: Quantity,
    path_length: Quantity,
) -> Result<ProbeWindow> {
    mass.expect_dim(Dimension::MASS, "mass")?;
    mass.expect_positive("mass")?;
    probe_window_at_distance(mass, momentum, theta, width, path_length, path_length)
}

/// Probe window keeping the recoil bound's exact geometric distance
/// √(L² + D²/4) in place of L, for sensitivity studies when the slit
/// separation D is not negligible against L.
pub fn probe_window_exact(
    mass: Quantity,
    momentum: Quantity,
    theta: Quantity,
    width: Quantity,
    path_length: Quantity,
    separation: Quantity,
) -> Result<ProbeWindow> {
    mass.expect_dim(Dimension::MASS, "mass")?;
    mass.expect_positive("mass")?;
    separation.expect_dim(Dimension::LENGTH, "slit separation")?;
    separation.expect_positive("slit separation")?;
    let distance = (path_length.powi(2).try_add(separation.powi(2) / 4.0)?).sqrt()?;
    probe_window_at_distance(mass, momentum, theta, width, path_length, distance)
}

fn probe_window_at_distance(
    mass: Quantity,
    momentum: Quantity,
    theta: Quantity,
    width: Quantity,
    path_length: Quantity,
    recoil_distance: Quantity,
) -> Result<ProbeWindow> {
    momentum.expect_dim(Dimension::MOMENTUM, "momentum")?;
    theta.expect_dim(Dimension::NONE, "divergence angle")?;
    width.expect_dim(Dimension::LENGTH, "slit width")?;
    path_length.expect_dim(Dimension::LENGTH, "path length")?;
    for (q, name) in [
        (momentum, "momentum"),
        (theta, "divergence angle"),
        (width, "slit width"),
        (path_length, "path length"),
    ] {
        q.expect_positive(name)?;
    }
    let omega_max = constants::light_speed() * momentum * width
        / (constants::hbar().scale(4.0) * recoil_distance);
    let delta_omega_max = omega_max * momentum * theta / (mass * constants::light_speed());
    let tau = Quantity::dimensionless(2.0) / delta_omega_max;
    omega_max.expect_dim(Dimension::FREQUENCY, "probe frequency")?;
    delta_omega_max.expect_dim(Dimension::FREQUENCY, "probe bandwidth")?;
    tau.expect_dim(Dimension::TIME, "distinguishing time")?;
    Ok(ProbeWindow {
        omega_max,
        delta_omega_max,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn micron(x: f64) -> Quantity {
        Quantity::meters(x * 1e-6)
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn de_broglie_anchor_values() {
        let p = de_broglie_momentum(Quantity::meters(50e-12)).unwrap();
        assert!(rel(p.value(), 1.325214030e-23) < 1e-9);
        assert_eq!(p.dim(), Dimension::MOMENTUM);

        let p = de_broglie_momentum(Quantity::meters(1901e-12)).unwrap();
        assert!(rel(p.value(), 3.4855708311e-25) < 1e-9);
    }

    #[test]
    fn de_broglie_inverse_proportionality() {
        let p1 = de_broglie_momentum(Quantity::meters(1e-10)).unwrap();
        let p2 = de_broglie_momentum(Quantity::meters(1e-9)).unwrap();
        assert!(rel(p1.value(), 10.0 * p2.value()) < 1e-12);
    }

    #[test]
    fn divergence_rules() {
        let single = SlitConfig::Single {
            width: micron(1.0),
            source_distance: Quantity::meters(1.0),
        };
        let div = effective_divergence(&single).unwrap();
        assert!(rel(div.theta.value(), 1e-6) < 1e-12);

        let double = SlitConfig::Double {
            width: micron(0.5),
            separation: micron(2.0),
            collimator_width: micron(1.0),
            collimator_distance: Quantity::meters(1.0),
        };
        let div = effective_divergence(&double).unwrap();
        assert!(rel(div.theta.value(), 1e-6) < 1e-12);
        assert!(rel(div.path_length.value(), 2.0) < 1e-12);

        let multi = SlitConfig::Multi {
            count: 5,
            width: micron(0.05),
            period: micron(0.1),
            source_distance: Quantity::meters(1.0),
        };
        let div = effective_divergence(&multi).unwrap();
        assert!(rel(div.theta.value(), 1e-7) < 1e-12);
    }

    #[test]
    fn degenerate_double_slit_rejected() {
        let config = SlitConfig::Double {
            width: micron(0.5),
            separation: micron(1.0),
            collimator_width: micron(1.0),
            collimator_distance: Quantity::meters(1.0),
        };
        assert!(matches!(
            effective_divergence(&config),
            Err(Error::DegenerateGeometry { .. })
        ));
    }

    #[test]
    fn too_few_slits_rejected() {
        let config = SlitConfig::Multi {
            count: 2,
            width: micron(0.05),
            period: micron(0.1),
            source_distance: Quantity::meters(1.0),
        };
        assert!(matches!(config.validate(), Err(Error::TooFewSlits(2))));
    }

    #[test]
    fn beta_anchor_rows() {
        // Electron biprism, 2013: λ = 50 pm, θ = 0.58 µrad, d = 0.062 µm.
        let b = beta_from_wavelength(
            Quantity::meters(50e-12),
            Quantity::radians(0.58e-6),
            micron(0.062),
        )
        .unwrap();
        assert!(rel(b.value(), 5.6486e-4) < 1e-4);
        assert!(rel(b.value(), 5.6e-4) < 0.01);

        // Neutron double slit, 1988: λ = 1901 pm, θ = 15.2 µrad, d = 96 µm.
        let b = beta_from_wavelength(
            Quantity::meters(1901e-12),
            Quantity::radians(15.2e-6),
            micron(96.0),
        )
        .unwrap();
        assert!(rel(b.value(), 0.6028685) < 1e-6);
        assert!(rel(b.value(), 0.60) < 0.01);

        // 25 000 u macromolecule, 2019: λ = 0.061 pm, θ = 0.27 µrad, d = 0.133 µm.
        let b = beta_from_wavelength(
            Quantity::meters(0.061e-12),
            Quantity::radians(0.27e-6),
            micron(0.133),
        )
        .unwrap();
        assert!(rel(b.value(), 0.4623549) < 1e-6);
        assert!(rel(b.value(), 0.46) < 0.01);
    }

    #[test]
    fn beta_is_flight_time_over_distinguish_time() {
        let p = Quantity::new(3.4855708311e-25, Dimension::MOMENTUM);
        let mass = Quantity::kilograms(1.66053906660e-27);
        let v = p / mass;
        let theta = Quantity::radians(15.2e-6);
        let d = micron(96.0);
        for length in [0.3, 1.0, 7.5] {
            let length = Quantity::meters(length);
            let t = coherence_time(length, v).unwrap();
            let tau = distinguish_time(length, v, p, theta, d).unwrap();
            let ratio = t / tau;
            let direct = beta(p, theta, d).unwrap();
            assert!(rel(ratio.value(), direct.value()) < 1e-12);
        }
    }

    #[test]
    fn beta_interval_maps_wavelength_band() {
        // Fullerene far-field row: λ ∈ [1.9, 3.6] pm, d = 0.05 µm, θ = 0.088 µrad.
        let record = MatterWaveRecord {
            mass: Quantity::kilograms(720.0 * 1.66053906660e-27),
            wavelength: Interval::new(Quantity::meters(1.9e-12), Quantity::meters(3.6e-12))
                .unwrap(),
            slit_width: micron(0.05),
            geometry: None,
            theta: Some(Quantity::radians(0.088e-6)),
            published_beta: None,
        };
        let band = beta_interval(&record).unwrap();
        assert!(band.lo().value() < band.hi().value());
        assert!(rel(band.lo().value(), 0.00096) < 0.01);
        assert!(rel(band.hi().value(), 0.00182) < 0.01);
    }

    #[test]
    fn probe_window_worked_example() {
        // M = 1 u, λ = 500 pm, θ = 0.51 µrad, d = 1.2 µm, L = 1 m.
        let mass = Quantity::kilograms(1.66053906660e-27);
        let p = de_broglie_momentum(Quantity::meters(500e-12)).unwrap();
        let theta = Quantity::radians(0.51e-6);
        let d = micron(1.2);
        let length = Quantity::meters(1.0);
        let window = probe_window(mass, p, theta, d, length).unwrap();
        assert!(rel(window.omega_max.value(), 1.1301909e12) < 1e-6);
        assert!(rel(window.delta_omega_max.value(), 1.5343987) < 1e-6);
        assert!(rel(window.tau.value(), 1.3034422) < 1e-6);
        assert!(window.delta_omega_max.value() < window.omega_max.value());
    }

    #[test]
    fn probe_window_matches_distinguish_time() {
        let mass = Quantity::kilograms(1.66053906660e-27);
        let p = de_broglie_momentum(Quantity::meters(500e-12)).unwrap();
        let v = p / mass;
        let theta = Quantity::radians(0.51e-6);
        let d = micron(1.2);
        let length = Quantity::meters(1.0);
        let window = probe_window(mass, p, theta, d, length).unwrap();
        let tau = distinguish_time(length, v, p, theta, d).unwrap();
        assert!(rel(window.tau.value(), tau.value()) < 1e-12);
    }

    #[test]
    fn probe_window_scaling_in_path_length() {
        let mass = Quantity::kilograms(1.66053906660e-27);
        let p = de_broglie_momentum(Quantity::meters(500e-12)).unwrap();
        let theta = Quantity::radians(0.51e-6);
        let d = micron(1.2);
        let w1 = probe_window(mass, p, theta, d, Quantity::meters(1.0)).unwrap();
        let w2 = probe_window(mass, p, theta, d, Quantity::meters(2.0)).unwrap();
        assert!(rel(w2.tau.value(), 2.0 * w1.tau.value()) < 1e-12);
        assert!(rel(w2.omega_max.value(), 0.5 * w1.omega_max.value()) < 1e-12);
    }

    #[test]
    fn exact_recoil_distance_shrinks_window() {
        let mass = Quantity::kilograms(1.66053906660e-27);
        let p = de_broglie_momentum(Quantity::meters(500e-12)).unwrap();
        let theta = Quantity::radians(0.51e-6);
        let d = micron(1.2);
        let length = Quantity::meters(1.0);
        let far = probe_window(mass, p, theta, d, length).unwrap();
        let exact = probe_window_exact(mass, p, theta, d, length, Quantity::meters(0.5)).unwrap();
        // √(1 + 0.25²/1²)⁻¹ = 0.97014 of the far-field window.
        assert!(rel(exact.omega_max.value(), 0.97014250 * far.omega_max.value()) < 1e-6);
        assert!(exact.omega_max.value() < far.omega_max.value());
    }

    #[test]
    fn record_requires_theta_or_geometry() {
        let record = MatterWaveRecord {
            mass: Quantity::kilograms(1.66053906660e-27),
            wavelength: Interval::exact(Quantity::meters(500e-12)),
            slit_width: micron(1.2),
            geometry: None,
            theta: None,
            published_beta: None,
        };
        assert!(matches!(record.validate(), Err(Error::MissingParameter(_))));
    }
}
