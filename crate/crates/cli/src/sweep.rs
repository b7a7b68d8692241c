//! Batch evaluation of bounds, constructions and exact values over a grid of
//! sizes.

use std::io::Write;
use std::ops::RangeInclusive;

use rainbow_torus::bounds::bound_set;
use rainbow_torus::oracle::{Budget, EngineChoice};
use rainbow_torus::patterns::construct_upper;
use rainbow_torus::{verify, Error};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::exec::exact_timed;

/// One CSV line. Column order follows field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: usize,
    pub n: usize,
    pub lb: u64,
    pub ub1: Option<u64>,
    pub ub2: Option<u64>,
    pub ub_best: u64,
    pub known_exact: Option<u64>,
    pub exact: Option<u64>,
    pub exact_engine: Option<String>,
    pub recipe: String,
    pub construction_weight: u64,
    pub valid: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Fill the `exact` column where the DP fits the budget.
    pub exact: bool,
    pub budget: Budget,
}

impl Default for SweepOptions {
    fn default() -> SweepOptions {
        SweepOptions { exact: true, budget: Budget::default() }
    }
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {t:?} in range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

pub fn sweep_row(m: usize, n: usize, opts: &SweepOptions) -> CliResult<SweepRow> {
    let started = std::time::Instant::now();
    let bounds = bound_set(m, n)?;
    let c = construct_upper(m, n, None)?;
    let rep = verify(&c.assignment);
    if !rep.valid || rep.weight != c.claimed_weight || c.claimed_weight != bounds.best_upper {
        return Err(Error::Construction(format!("{} on {m}x{n} failed re-verification", c.recipe)).into());
    }
    let exact = if opts.exact {
        match exact_timed(m, n, 2, EngineChoice::Dp, &opts.budget) {
            Ok(t) => Some(t.result),
            Err(Error::Capacity { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    if let Some(e) = &exact {
        if e.value < bounds.lower || e.value > bounds.best_upper {
            return Err(Error::Inconsistent(format!(
                "{m}x{n}: exact {} outside [{}, {}]",
                e.value, bounds.lower, bounds.best_upper
            ))
            .into());
        }
    }
    Ok(SweepRow {
        m,
        n,
        lb: bounds.lower,
        ub1: bounds.ub1,
        ub2: bounds.ub2,
        ub_best: bounds.best_upper,
        known_exact: bounds.known_exact,
        exact: exact.as_ref().map(|e| e.value),
        exact_engine: exact.as_ref().map(|e| e.engine.name().to_string()),
        recipe: c.recipe.to_string(),
        construction_weight: rep.weight,
        valid: rep.valid,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Rows in `(m, n)` lexicographic order, whatever order they finish in.
pub fn sweep(ms: RangeInclusive<usize>, ns: RangeInclusive<usize>, opts: &SweepOptions) -> CliResult<Vec<SweepRow>> {
    let cells: Vec<(usize, usize)> = ms.flat_map(|m| ns.clone().map(move |n| (m, n))).collect();
    cells.par_iter().map(|&(m, n)| sweep_row(m, n, opts)).collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(CliError::Io)
}
