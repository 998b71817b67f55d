//! Relay placement for two-tier wireless backbones on 3-D grids.
//!
//! A backbone of base station, cluster heads and first-phase relay chains
//! is grown on an integer lattice; second-phase relays are then placed on
//! candidate vertices by seeded metaheuristics (differential evolution,
//! gravitational search, artificial bee colony) minimizing the average
//! internode distance of the augmented backbone under a soft algebraic
//! connectivity penalty. The experiment harness reproduces the full
//! size/optimizer/repetition matrix with per-cell statistics, CSV output
//! and plot series.
//!
//! All numeric kernels are generic over the scalar type via [`Float`];
//! concrete `f64` aliases are exported at the crate root. The experiment
//! harness itself runs in `f64`.

pub mod deploy;
pub mod energy;
pub mod error;
pub mod experiment;
pub mod float;
pub mod graph;
pub mod grid;
pub mod laplacian;
pub mod objective;
pub mod optim;
pub mod reference;
pub mod report;
pub mod spectral;
pub mod stats;

pub use error::{Error, Result};
pub use float::Float;

/// Concrete `f64` aliases for the generic core types.
pub type Laplacian64 = laplacian::LaplacianMatrix<f64>;
pub type Spectral64 = spectral::SpectralSummary<f64>;
pub type Grid64 = grid::GridSpec<f64>;
pub type Energy64 = energy::EnergyParams<f64>;
pub type Objective64 = objective::ObjectiveContext<f64>;
pub type Fitness64 = objective::Fitness<f64>;
pub type OptimizerConfig64 = optim::OptimizerConfig<f64>;
pub type RunTrace64 = optim::RunTrace<f64>;
