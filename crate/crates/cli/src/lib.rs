//! File formats, batch sweeps and reports on top of `rainbow-torus`.

pub mod error;
pub mod exec;
pub mod format;
pub mod report;
pub mod sweep;
