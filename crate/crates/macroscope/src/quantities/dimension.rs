//! Runtime dimensional algebra over the seven SI base dimensions.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Div, Mul};

/// Exponents of the SI base dimensions, in the order
/// mass, length, time, current, temperature, amount, luminous intensity.
///
/// Multiplication adds exponents, division subtracts them; addition and
/// comparison of quantities require equal dimensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dimension([i8; 7]);

impl Dimension {
    pub const NONE: Dimension = Dimension([0, 0, 0, 0, 0, 0, 0]);
    pub const MASS: Dimension = Dimension([1, 0, 0, 0, 0, 0, 0]);
    pub const LENGTH: Dimension = Dimension([0, 1, 0, 0, 0, 0, 0]);
    pub const TIME: Dimension = Dimension([0, 0, 1, 0, 0, 0, 0]);

    pub const AREA: Dimension = Dimension([0, 2, 0, 0, 0, 0, 0]);
    pub const FREQUENCY: Dimension = Dimension([0, 0, -1, 0, 0, 0, 0]);
    pub const SPEED: Dimension = Dimension([0, 1, -1, 0, 0, 0, 0]);
    pub const MOMENTUM: Dimension = Dimension([1, 1, -1, 0, 0, 0, 0]);
    pub const ENERGY: Dimension = Dimension([1, 2, -2, 0, 0, 0, 0]);
    /// J·s, the dimension of ℏ.
    pub const ACTION: Dimension = Dimension([1, 2, -1, 0, 0, 0, 0]);
    /// m²·s, the evaluation dimension of the detuning-absorption expression.
    pub const AREA_TIME: Dimension = Dimension([0, 2, 1, 0, 0, 0, 0]);

    pub fn is_none(&self) -> bool {
        *self == Dimension::NONE
    }

    pub fn recip(self) -> Dimension {
        let mut e = self.0;
        for x in &mut e {
            *x = -*x;
        }
        Dimension(e)
    }

    pub fn pow(self, n: i32) -> Dimension {
        let mut e = self.0;
        for x in &mut e {
            *x = (*x as i32 * n) as i8;
        }
        Dimension(e)
    }

    /// Halves every exponent; panics if any exponent is odd.
    /// Used by `Quantity::sqrt`, whose call sites are statically even-dimensioned.
    pub(crate) fn halve(self) -> Dimension {
        let mut e = self.0;
        for x in &mut e {
            assert!(*x % 2 == 0, "sqrt of dimension with odd exponent: {self}");
            *x /= 2;
        }
        Dimension(e)
    }
}

impl Mul for Dimension {
    type Output = Dimension;
    // Multiplying quantities adds their base-unit exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dimension) -> Dimension {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Dimension(e)
    }
}

impl Div for Dimension {
    type Output = Dimension;
    // Dividing quantities subtracts their base-unit exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Dimension) -> Dimension {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0) {
            *x -= y;
        }
        Dimension(e)
    }
}

const SYMBOLS: [&str; 7] = ["kg", "m", "s", "A", "K", "mol", "cd"];

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_none() {
            return write!(f, "1");
        }
        let mut first = true;
        for (sym, &e) in SYMBOLS.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dimension({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        assert_eq!(Dimension::LENGTH * Dimension::FREQUENCY, Dimension::SPEED);
        assert_eq!(Dimension::MOMENTUM / Dimension::MASS, Dimension::SPEED);
        assert_eq!(Dimension::ENERGY, Dimension::MASS * Dimension::SPEED.pow(2));
        assert_eq!(Dimension::ACTION, Dimension::ENERGY * Dimension::TIME);
        assert_eq!(Dimension::TIME.recip(), Dimension::FREQUENCY);
        assert_eq!(Dimension::AREA.halve(), Dimension::LENGTH);
    }

    #[test]
    fn display() {
        assert_eq!(Dimension::NONE.to_string(), "1");
        assert_eq!(Dimension::MOMENTUM.to_string(), "kg m s^-1");
        assert_eq!(Dimension::AREA.to_string(), "m^2");
    }
}
