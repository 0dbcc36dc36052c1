//! Calibration and pricing engine for a bivariate spread-loss portfolio
//! credit model.
//!
//! The engine models the portfolio default counter as a continuous-time
//! Markov chain whose next-to-default intensity carries a state-dependent
//! contagion factor. Two layers are provided:
//!
//! * a one-dimensional local-intensity model ([`local::LocalModel`]) that
//!   calibrates exactly to a grid of tranche quotes, and
//! * a two-dimensional extension ([`joint::JointLattice`]) where the
//!   intensity is driven by a discretized stochastic factor, calibrated
//!   either directly or by forward induction under a no-arbitrage drift
//!   constraint.
//!
//! On top of the calibrated lattices sit vanilla tranche pricing
//! ([`pricing`]), backward-induction exotics ([`exotic`]: tranche options,
//! forward-starting tranches, leveraged super-seniors), a first-order risk
//! layer ([`risk`]) and a semi-analytical adiabatic approximation
//! ([`adiabatic`]) used for fast pricing and cross-checks.

pub mod adiabatic;
pub mod chain;
pub mod curve;
pub mod driver;
pub mod error;
pub mod exotic;
pub mod io;
pub mod joint;
pub mod linalg;
pub mod local;
pub mod portfolio;
pub mod pricing;
pub mod qbd;
pub mod quotes;
pub mod risk;
pub mod solve;
pub mod surface;

pub use error::{Error, Result};
