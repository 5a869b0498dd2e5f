//! Tight-binding simulation of measurement-controlled waveguide lattices.
//!
//! The library models arrays of coupled guides whose dynamics along the
//! propagation axis follow -i d/dz |psi> = H(z) |psi>, with H(z) combining a
//! phase-pumped hopping modulation and site-local "measurement" perturbations
//! of tunable strength. On top of the propagator it provides eigenframe
//! analysis with band tracking, the quantum metric over the (phase, strength)
//! plane, decay-rate phase diagrams separating measurement-frozen from
//! measurement-accelerated transfer, and scenario runners for boundary-state
//! pumping experiments.

pub mod analysis;
pub mod config;
pub mod error;
pub mod evolve;
mod linalg;
pub mod model;
pub mod output;
pub mod run;
pub mod spectral;

pub use error::{Error, Result};
