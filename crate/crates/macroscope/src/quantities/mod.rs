//! Runtime dimensional analysis: quantities, intervals, and constants.

mod dimension;
mod interval;
mod quantity;

pub mod constants;

pub use dimension::Dimension;
pub use interval::{Interval, Monotonicity};
pub use quantity::{combine, CombineOp, Quantity};
