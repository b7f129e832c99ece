//! CODATA 2018 physical constants in SI units.

use super::{Dimension, Quantity};

/// Planck constant, J s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Reduced Planck constant h / 2π, J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s (exact).
pub const LIGHT_SPEED: f64 = 299_792_458.0;
/// Fine-structure constant, dimensionless.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;
/// Bohr radius, m.
pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
/// Atomic mass unit, kg.
pub const ATOMIC_MASS: f64 = 1.660_539_066_60e-27;
/// Elementary charge, C (exact); also 1 eV in joules.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// One electron volt, J.
pub const ELECTRON_VOLT: f64 = ELEMENTARY_CHARGE;
/// Vacuum electric permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Rydberg frequency c R∞, Hz.
pub const RYDBERG_FREQUENCY: f64 = 3.289_841_960_250_880_5e15;

pub fn planck() -> Quantity {
    Quantity::new(PLANCK, Dimension::ACTION)
}

pub fn hbar() -> Quantity {
    Quantity::new(HBAR, Dimension::ACTION)
}

pub fn light_speed() -> Quantity {
    Quantity::new(LIGHT_SPEED, Dimension::SPEED)
}

pub fn fine_structure() -> Quantity {
    Quantity::dimensionless(FINE_STRUCTURE)
}

pub fn bohr_radius() -> Quantity {
    Quantity::meters(BOHR_RADIUS)
}

pub fn atomic_mass() -> Quantity {
    Quantity::kilograms(ATOMIC_MASS)
}

pub fn electron_volt() -> Quantity {
    Quantity::joules(ELECTRON_VOLT)
}

pub fn rydberg_frequency() -> Quantity {
    Quantity::hertz(RYDBERG_FREQUENCY)
}
