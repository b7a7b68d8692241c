//! Parallel and timed wrappers around the exact oracle.

use std::time::Instant;

use rainbow_torus::oracle::{exact_with, Budget, EngineChoice, ExactResult, Executor, StartOutcome};
use rayon::prelude::*;
use serde::Serialize;

/// Spreads DP start states over the rayon pool.
pub struct Rayon;

impl Executor for Rayon {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> Option<StartOutcome> + Sync)) -> Vec<Option<StartOutcome>> {
        (0..jobs).into_par_iter().map(job).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Timed {
    pub result: ExactResult,
    pub elapsed_ms: u64,
}

pub fn exact_timed(
    m: usize,
    n: usize,
    k: usize,
    engine: EngineChoice,
    budget: &Budget,
) -> Result<Timed, rainbow_torus::Error> {
    let start = Instant::now();
    let result = exact_with(m, n, k, engine, budget, &Rayon)?;
    Ok(Timed { result, elapsed_ms: start.elapsed().as_millis() as u64 })
}

#[derive(Serialize)]
pub struct ExactJson {
    pub value: u64,
    pub engine: &'static str,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl ExactJson {
    pub fn new(t: &Timed, witness: bool) -> ExactJson {
        ExactJson {
            value: t.result.value,
            engine: t.result.engine.name(),
            elapsed_ms: t.elapsed_ms,
            witness: witness.then(|| crate::format::to_json_value(&t.result.witness)),
        }
    }
}
