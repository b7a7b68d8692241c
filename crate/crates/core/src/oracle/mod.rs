//! Exact `γ_rk(C_m □ C_n)` for `k ∈ {1, 2}` at small scale.
//!
//! Two engines compute the same minimum: [`exact_brute`] enumerates every
//! assignment, [`exact_dp`] runs a cyclic transfer program over column
//! labels. [`gamma_prism`] computes the ordinary domination number of the
//! prism `C_m □ C_n □ K_2` as an independent cross-check.

use core::fmt;
use core::str::FromStr;

use alloc::format;

use crate::grid::{Assignment, Dims};
use crate::{Error, Result};

mod brute;
mod dp;
mod prism;

pub use brute::exact_brute_with;
pub use dp::{DpSolver, Executor, Sequential, StartOutcome};
pub use prism::gamma_prism_with;

/// Size limits. Exceeding one is a [`Error::Capacity`], never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `mn` enumerated by brute force for `k = 2`.
    pub brute_cells_k2: usize,
    /// Largest `mn` enumerated by brute force for `k = 1`.
    pub brute_cells_k1: usize,
    /// Largest number of column labels `(2^k)^min(m, n)` for the DP.
    pub dp_labels: u64,
    /// Largest number of DP transitions.
    pub dp_edges: u64,
    /// Largest prism vertex count `2mn`.
    pub prism_vertices: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { brute_cells_k2: 12, brute_cells_k1: 16, dp_labels: 1024, dp_edges: 1 << 25, prism_vertices: 24 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Brute,
    Dp,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Dp => "dp",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EngineChoice {
    #[default]
    Auto,
    Brute,
    Dp,
}

impl FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<EngineChoice> {
        match s {
            "auto" => Ok(EngineChoice::Auto),
            "brute" => Ok(EngineChoice::Brute),
            "dp" => Ok(EngineChoice::Dp),
            _ => Err(Error::Input(format!("unknown engine {s:?} (expected auto, brute or dp)"))),
        }
    }
}

/// An exact value with an optimal witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub value: u64,
    pub witness: Assignment,
    pub engine: Engine,
}

pub fn exact_brute(m: usize, n: usize, k_colors: usize) -> Result<ExactResult> {
    exact_brute_with(m, n, k_colors, &Budget::default())
}

pub fn exact_dp(m: usize, n: usize, k_colors: usize) -> Result<ExactResult> {
    DpSolver::new(m, n, k_colors, &Budget::default())?.solve()
}

/// Runs the DP when it fits the budget and brute force otherwise.
pub fn exact(m: usize, n: usize, k_colors: usize, engine: EngineChoice) -> Result<ExactResult> {
    exact_with(m, n, k_colors, engine, &Budget::default(), &Sequential)
}

pub fn exact_with(
    m: usize,
    n: usize,
    k_colors: usize,
    engine: EngineChoice,
    budget: &Budget,
    exec: &dyn Executor,
) -> Result<ExactResult> {
    match engine {
        EngineChoice::Brute => exact_brute_with(m, n, k_colors, budget),
        EngineChoice::Dp => DpSolver::new(m, n, k_colors, budget)?.solve_with(exec),
        EngineChoice::Auto => match DpSolver::new(m, n, k_colors, budget) {
            Ok(dp) => dp.solve_with(exec),
            Err(Error::Capacity { .. }) => exact_brute_with(m, n, k_colors, budget),
            Err(e) => Err(e),
        },
    }
}

pub fn gamma_prism(m: usize, n: usize) -> Result<u64> {
    gamma_prism_with(m, n, &Budget::default())
}

fn check_dims(m: usize, n: usize, k_colors: usize) -> Result<Dims> {
    Dims::new(m, n, k_colors)
}

fn capacity(what: &'static str, requested: u64, limit: u64) -> Error {
    Error::Capacity { what, requested, limit }
}
