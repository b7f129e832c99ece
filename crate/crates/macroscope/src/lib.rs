//! Macroscopicity calculator for quantum superposition experiments.
//!
//! The macroscopicity of an experiment is defined as β = T / τ, where T is the
//! duration over which a superposition is held and τ is the time an idealized
//! classical probe would need to repeatably distinguish the superposed
//! branches. This crate provides:
//!
//! - [`quantities`]: runtime dimension checking ([`Quantity`], [`Interval`])
//!   plus CODATA 2018 constants;
//! - [`matterwave`]: near-field/far-field slit interferometers, including the
//!   probe-photon window analysis;
//! - [`ramsey`]: internal-state (hyperfine clock) interferometers, including
//!   hydrogenic elastic scattering cross sections;
//! - [`trap`]: trapped-particle spatial superpositions;
//! - [`dataset`]: a line-oriented record format, the built-in survey of
//!   published experiments, and batch evaluation against published values;
//! - [`report`]: text/CSV/JSON rendering of tables, plot series, and
//!   single-record computations for the command-line interface.

pub mod dataset;
pub mod error;
pub mod matterwave;
pub mod quantities;
pub mod ramsey;
pub mod report;
pub mod trap;

pub use error::{Error, Result};
pub use quantities::{Dimension, Interval, Monotonicity, Quantity};
