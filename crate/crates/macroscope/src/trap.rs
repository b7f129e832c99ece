//! Macroscopicity of a particle superposed across two potential traps:
//! β = ED/(4πℏc), with E the energy of the well and D the trap separation.

use crate::error::Result;
use crate::quantities::{constants, Dimension, Quantity};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// A two-trap superposition: well energy and spatial separation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrapRecord {
    /// Energy associated with the potential well, J.
    pub energy: Quantity,
    /// Separation between the traps, m.
    pub separation: Quantity,
}

impl TrapRecord {
    pub fn validate(&self) -> Result<()> {
        self.energy.expect_dim(Dimension::ENERGY, "trap energy")?;
        self.energy.expect_positive("trap energy")?;
        self.separation
            .expect_dim(Dimension::LENGTH, "trap separation")?;
        self.separation.expect_positive("trap separation")?;
        Ok(())
    }

    pub fn beta(&self) -> Result<Quantity> {
        self.validate()?;
        beta(self.energy, self.separation)
    }
}

/// β = ED/(4πℏc).
pub fn beta(energy: Quantity, separation: Quantity) -> Result<Quantity> {
    energy.expect_dim(Dimension::ENERGY, "trap energy")?;
    energy.expect_positive("trap energy")?;
    separation.expect_dim(Dimension::LENGTH, "trap separation")?;
    separation.expect_positive("trap separation")?;
    let b = energy * separation / (constants::hbar().scale(4.0 * PI) * constants::light_speed());
    b.expect_dim(Dimension::NONE, "beta")?;
    Ok(b)
}
