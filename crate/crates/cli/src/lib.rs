//! Command-line front end: single points, sweeps, figures and verification.

pub mod cli;
pub mod config;
pub mod csv;
pub mod error;
pub mod figures;
pub mod svg;
pub mod sweep;

pub use cli::run;
