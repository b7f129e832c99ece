//! Dimension-checked physical quantities in SI base units.

use super::Dimension;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Div, Mul};

/// A real value plus its physical dimension. Magnitudes are always stored in
/// SI base units; unit parsing and formatting live at the dataset/CLI boundary.
///
/// Stored magnitudes are finite; constructing from NaN or an infinity panics.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    value: f64,
    dim: Dimension,
}

impl Quantity {
    pub fn new(value: f64, dim: Dimension) -> Quantity {
        assert!(value.is_finite(), "non-finite quantity magnitude: {value}");
        Quantity { value, dim }
    }

    pub fn dimensionless(value: f64) -> Quantity {
        Quantity::new(value, Dimension::NONE)
    }

    pub fn kilograms(value: f64) -> Quantity {
        Quantity::new(value, Dimension::MASS)
    }

    pub fn meters(value: f64) -> Quantity {
        Quantity::new(value, Dimension::LENGTH)
    }

    pub fn seconds(value: f64) -> Quantity {
        Quantity::new(value, Dimension::TIME)
    }

    pub fn hertz(value: f64) -> Quantity {
        Quantity::new(value, Dimension::FREQUENCY)
    }

    /// Plane angle; dimensionless in SI.
    pub fn radians(value: f64) -> Quantity {
        Quantity::new(value, Dimension::NONE)
    }

    pub fn joules(value: f64) -> Quantity {
        Quantity::new(value, Dimension::ENERGY)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// Errors with `DimensionMismatch` unless the quantity has dimension `dim`.
    pub fn expect_dim(&self, dim: Dimension, context: &'static str) -> Result<()> {
        if self.dim == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context,
                left: self.dim,
                right: dim,
            })
        }
    }

    /// Errors with `NonPositiveInput` unless the magnitude is strictly positive.
    pub fn expect_positive(&self, name: &'static str) -> Result<()> {
        if self.value > 0.0 {
            Ok(())
        } else {
            Err(Error::NonPositiveInput {
                name,
                value: self.value,
            })
        }
    }

    pub fn try_add(self, rhs: Quantity) -> Result<Quantity> {
        self.expect_same_dim(rhs, "add")?;
        Ok(Quantity::new(self.value + rhs.value, self.dim))
    }

    pub fn try_sub(self, rhs: Quantity) -> Result<Quantity> {
        self.expect_same_dim(rhs, "sub")?;
        Ok(Quantity::new(self.value - rhs.value, self.dim))
    }

    pub fn powi(self, n: i32) -> Quantity {
        Quantity::new(self.value.powi(n), self.dim.pow(n))
    }

    /// Square root; panics if any dimension exponent is odd (call sites are
    /// statically even-dimensioned).
    pub fn sqrt(self) -> Result<Quantity> {
        if self.value < 0.0 {
            return Err(Error::NonPositiveInput {
                name: "sqrt argument",
                value: self.value,
            });
        }
        Ok(Quantity::new(self.value.sqrt(), self.dim.halve()))
    }

    pub fn abs(self) -> Quantity {
        Quantity::new(self.value.abs(), self.dim)
    }

    pub fn scale(self, factor: f64) -> Quantity {
        Quantity::new(self.value * factor, self.dim)
    }

    fn expect_same_dim(&self, rhs: Quantity, context: &'static str) -> Result<()> {
        if self.dim == rhs.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                context,
                left: self.dim,
                right: rhs.dim,
            })
        }
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value * rhs.value, self.dim * rhs.dim)
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value / rhs.value, self.dim / rhs.dim)
    }
}

impl Mul<f64> for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: f64) -> Quantity {
        self.scale(rhs)
    }
}

impl Div<f64> for Quantity {
    type Output = Quantity;
    fn div(self, rhs: f64) -> Quantity {
        Quantity::new(self.value / rhs, self.dim)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim.is_none() {
            write!(f, "{:e}", self.value)
        } else {
            write!(f, "{:e} {}", self.value, self.dim)
        }
    }
}

impl fmt::Debug for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quantity({self})")
    }
}

/// Binary operation selector for [`combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Mul,
    Div,
    Add,
    Sub,
}

/// Combines two quantities under the given operation, enforcing dimensional
/// compatibility for addition and subtraction.
pub fn combine(a: Quantity, b: Quantity, op: CombineOp) -> Result<Quantity> {
    match op {
        CombineOp::Mul => Ok(a * b),
        CombineOp::Div => Ok(a / b),
        CombineOp::Add => a.try_add(b),
        CombineOp::Sub => a.try_sub(b),
    }
}
