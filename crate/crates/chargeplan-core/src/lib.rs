//! Core algorithms for two-phase EV charger infrastructure planning.
//!
//! Phase 1 estimates per-cell charging demand: the study region is binned
//! into square cells ([`cells`]), each cell is classified by charger/POI
//! presence, the imbalanced training classes are rebalanced with SMOTE
//! ([`smote`]), and a gradient-boosted regression model ([`gbt`]) predicts
//! port demand for candidate cells.
//!
//! Phase 2 sites and sizes stations: a maximum-coverage mixed-integer
//! program ([`milp`]) selects new stations and port expansions over an
//! integrated spatial/power-grid network ([`grid`]), and a backward/forward
//! sweep power-flow engine ([`powerflow`]) validates the plan against
//! voltage and thermal limits.
//!
//! The crate is `no_std` + `alloc`: all operations are pure functions over
//! immutable inputs, float math goes through `libm`, and every random
//! choice is driven by an explicit seed, so results are bit-identical
//! across platforms and runs. File formats, CSV ingestion, and the CLI live
//! in the companion `chargeplan` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cells;
pub mod dataset;
pub mod gbt;
pub mod geo;
pub mod grid;
pub mod matrix;
pub mod metrics;
pub mod milp;
pub mod olc;
pub mod powerflow;
pub mod smote;
