//! Simulation and tooling companion to `boe-core`: seeded Monte Carlo
//! samplers for the matrix ensembles whose linear statistics the core crate
//! predicts, empirical cumulants with jackknife errors, text parsers for
//! polynomials and symbols, machine-readable reports, and the acceptance
//! suite the CLI and integration tests share.

pub mod acceptance;
pub mod eig;
pub mod ensemble;
pub mod parse;
pub mod report;
