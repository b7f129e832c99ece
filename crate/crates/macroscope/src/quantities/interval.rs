//! Closed intervals of quantities, used to carry parameter ranges and
//! propagated uncertainty bands through the calculators.

use super::{Dimension, Quantity};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Direction of a monotone map over an interval's endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

/// A closed interval `[lo, hi]` sharing one dimension. Degenerate intervals
/// (`lo == hi`) represent point values.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
    dim: Dimension,
}

impl Interval {
    pub fn new(lo: Quantity, hi: Quantity) -> Result<Interval> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch {
                context: "interval endpoints",
                left: lo.dim(),
                right: hi.dim(),
            });
        }
        if lo.value() > hi.value() {
            return Err(Error::InvertedInterval {
                lo: lo.value(),
                hi: hi.value(),
            });
        }
        Ok(Interval {
            lo: lo.value(),
            hi: hi.value(),
            dim: lo.dim(),
        })
    }

    /// Point interval around a single quantity.
    pub fn exact(q: Quantity) -> Interval {
        Interval {
            lo: q.value(),
            hi: q.value(),
            dim: q.dim(),
        }
    }

    /// Symmetric band `[c(1 - s·r), c(1 + s·r)]` from a central value, a
    /// relative error, and a sensitivity factor (first-order propagation).
    pub fn from_central_relative(
        central: Quantity,
        rel_err: f64,
        sensitivity: f64,
    ) -> Result<Interval> {
        if rel_err < 0.0 {
            return Err(Error::NegativeError(rel_err));
        }
        let spread = sensitivity.abs() * rel_err;
        let lo = central.scale(1.0 - spread);
        let hi = central.scale(1.0 + spread);
        if lo.value() <= hi.value() {
            Interval::new(lo, hi)
        } else {
            Interval::new(hi, lo)
        }
    }

    pub fn lo(&self) -> Quantity {
        Quantity::new(self.lo, self.dim)
    }

    pub fn hi(&self) -> Quantity {
        Quantity::new(self.hi, self.dim)
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn midpoint(&self) -> Quantity {
        Quantity::new(0.5 * (self.lo + self.hi), self.dim)
    }

    pub fn half_width(&self) -> Quantity {
        Quantity::new(0.5 * (self.hi - self.lo), self.dim)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: Quantity) -> bool {
        q.dim() == self.dim && self.lo <= q.value() && q.value() <= self.hi
    }

    /// Applies a monotone endpoint map, producing an interval with dimension
    /// `out_dim`. For decreasing maps the endpoint images are swapped so the
    /// result stays ordered.
    pub fn map_monotone(
        &self,
        direction: Monotonicity,
        out_dim: Dimension,
        mut f: impl FnMut(Quantity) -> Result<Quantity>,
    ) -> Result<Interval> {
        let a = f(self.lo())?;
        let b = f(self.hi())?;
        a.expect_dim(out_dim, "monotone map image")?;
        b.expect_dim(out_dim, "monotone map image")?;
        match direction {
            Monotonicity::Increasing => Interval::new(a, b),
            Monotonicity::Decreasing => Interval::new(b, a),
        }
    }

    /// Largest relative deviation of this interval from a reference interval,
    /// compared endpoint-to-endpoint and midpoint-to-midpoint.
    pub fn max_relative_deviation(&self, reference: &Interval) -> f64 {
        let pairs = [
            (self.lo, reference.lo),
            (
                0.5 * (self.lo + self.hi),
                0.5 * (reference.lo + reference.hi),
            ),
            (self.hi, reference.hi),
        ];
        pairs
            .into_iter()
            .map(|(ours, theirs)| {
                if theirs == 0.0 {
                    if ours == 0.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    ((ours - theirs) / theirs).abs()
                }
            })
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{:e}", self.lo)?;
        } else {
            write!(f, "{:e}..{:e}", self.lo, self.hi)?;
        }
        if !self.dim.is_none() {
            write!(f, " {}", self.dim)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interval({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_endpoints() {
        let err = Interval::new(Quantity::meters(2.0), Quantity::meters(1.0)).unwrap_err();
        assert!(matches!(err, Error::InvertedInterval { .. }));
    }

    #[test]
    fn rejects_mixed_dimensions() {
        let err = Interval::new(Quantity::meters(1.0), Quantity::seconds(2.0)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn central_relative_band() {
        let band = Interval::from_central_relative(Quantity::meters(10.0), 0.1, 2.0).unwrap();
        assert!((band.lo().value() - 8.0).abs() < 1e-12);
        assert!((band.hi().value() - 12.0).abs() < 1e-12);
        assert_eq!(band.midpoint().value(), 10.0);
    }

    #[test]
    fn central_relative_rejects_negative_error() {
        let err = Interval::from_central_relative(Quantity::meters(1.0), -0.01, 1.0).unwrap_err();
        assert!(matches!(err, Error::NegativeError(_)));
    }

    #[test]
    fn decreasing_map_keeps_order() {
        let x = Interval::new(Quantity::meters(1.0), Quantity::meters(4.0)).unwrap();
        let y = x
            .map_monotone(Monotonicity::Decreasing, Dimension::LENGTH.recip(), |q| {
                Ok(Quantity::new(1.0 / q.value(), Dimension::LENGTH.recip()))
            })
            .unwrap();
        assert_eq!(y.lo().value(), 0.25);
        assert_eq!(y.hi().value(), 1.0);
    }

    #[test]
    fn deviation_against_reference() {
        let ours = Interval::new(Quantity::meters(0.9), Quantity::meters(2.2)).unwrap();
        let reference = Interval::new(Quantity::meters(1.0), Quantity::meters(2.0)).unwrap();
        let dev = ours.max_relative_deviation(&reference);
        assert!((dev - 0.1).abs() < 1e-12);
    }
}
