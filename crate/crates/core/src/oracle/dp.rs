//! Cyclic transfer program over column labels.
//!
//! The grid is solved with the shorter factor as column height `h`. A state
//! is a pair `(L, N)`: the label `L` of the current column (`k` bits per
//! row) and the colors `N` its empty cells still need from the next column
//! after their vertical neighbors and the previous column are accounted for.
//! An assignment is valid exactly when its columns form a closed walk of
//! length `len = max(m, n)` through these states.
//!
//! Each walk is rotated so that its first column has the least weight `w1`;
//! walks are searched by increasing `w1`, every later column must weigh at
//! least `w1`, and only start states that are canonical under row rotation,
//! row reflection and color swap are tried.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU32, Ordering};

use super::{capacity, check_dims, Budget, Engine, ExactResult};
use crate::grid::{Assignment, ColorSet, Dims};
use crate::Result;

const INF: u32 = u32::MAX;
const NONE: u32 = u32::MAX;

/// Runs independent start jobs and returns their outcomes in job order.
pub trait Executor: Sync {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> Option<StartOutcome> + Sync)) -> Vec<Option<StartOutcome>>;
}

/// Runs jobs one after another on the calling thread.
pub struct Sequential;

impl Executor for Sequential {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> Option<StartOutcome> + Sync)) -> Vec<Option<StartOutcome>> {
        (0..jobs).map(job).collect()
    }
}

/// Best closed walk found from one start state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartOutcome {
    pub value: u32,
    /// Column labels, starting with the start column.
    pub columns: Vec<u32>,
}

pub struct DpSolver {
    dims: Dims,
    h: usize,
    len: usize,
    k: usize,
    label_weight: Vec<u32>,
    allowed: Vec<u32>,
    /// `(label, need)` per state.
    states: Vec<(u32, u32)>,
    edge_start: Vec<u32>,
    edge_to: Vec<u32>,
    /// Canonical start states grouped by the weight of their label.
    starts: Vec<Vec<u32>>,
}

impl DpSolver {
    pub fn new(m: usize, n: usize, k_colors: usize, budget: &Budget) -> Result<DpSolver> {
        let dims = check_dims(m, n, k_colors)?;
        let (h, len, k) = (m.min(n), m.max(n), k_colors);
        let bits = h * k;
        let labels = 1u64.checked_shl(bits as u32).filter(|&l| l <= budget.dp_labels.min(1 << 12));
        let Some(labels) = labels else {
            let requested = 1u64.checked_shl(bits as u32).unwrap_or(u64::MAX);
            return Err(capacity("dp column labels", requested, budget.dp_labels));
        };
        let nl = labels as usize;
        let full = (1u32 << k) - 1;
        let cell = |l: u32, r: usize| (l >> (r * k)) & full;

        let label_weight: Vec<u32> = (0..nl as u32).map(u32::count_ones).collect();
        let allowed: Vec<u32> = (0..nl as u32)
            .map(|l| {
                (0..h).fold(0, |acc, r| {
                    if cell(l, r) != 0 {
                        return acc;
                    }
                    let vertical = cell(l, (r + h - 1) % h) | cell(l, (r + 1) % h);
                    acc | (full & !vertical) << (r * k)
                })
            })
            .collect();

        let mut index = vec![NONE; nl * nl];
        let mut states = Vec::new();
        let mut edge_count = 0u64;
        for l in 0..nl as u32 {
            for need in subsets(allowed[l as usize]) {
                index[(need as usize) << bits | l as usize] = states.len() as u32;
                states.push((l, need));
                edge_count += 1u64 << (bits as u32 - need.count_ones());
            }
        }
        if edge_count > budget.dp_edges {
            return Err(capacity("dp transitions", edge_count, budget.dp_edges));
        }

        let mask = (nl - 1) as u32;
        let mut edge_start = Vec::with_capacity(states.len() + 1);
        let mut edge_to = Vec::with_capacity(edge_count as usize);
        for &(l, need) in &states {
            edge_start.push(edge_to.len() as u32);
            for extra in subsets(mask & !need) {
                let next = need | extra;
                let next_need = allowed[next as usize] & !l;
                edge_to.push(index[(next_need as usize) << bits | next as usize]);
            }
        }
        edge_start.push(edge_to.len() as u32);

        let syms = symmetries(h, k);
        let mut starts = vec![Vec::new(); bits + 1];
        for (s, &(l, need)) in states.iter().enumerate() {
            let canonical = syms.iter().all(|g| (g.apply(l), g.apply(need)) >= (l, need));
            if canonical {
                starts[label_weight[l as usize] as usize].push(s as u32);
            }
        }

        Ok(DpSolver { dims, h, len, k, label_weight, allowed, states, edge_start, edge_to, starts })
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_to.len()
    }

    pub fn solve(&self) -> Result<ExactResult> {
        self.solve_with(&Sequential)
    }

    /// Same result for every executor: outcomes are reduced by value, then
    /// by start order, never by completion order.
    pub fn solve_with(&self, exec: &dyn Executor) -> Result<ExactResult> {
        let bound = AtomicU32::new(INF);
        let mut best: Option<StartOutcome> = None;
        for (w1, group) in self.starts.iter().enumerate() {
            if best.as_ref().is_some_and(|b| (w1 * self.len) as u64 >= u64::from(b.value)) {
                break;
            }
            let outcomes = exec.run(group.len(), &|i| self.run_start(group[i], w1 as u32, &bound));
            for o in outcomes.into_iter().flatten() {
                if best.as_ref().is_none_or(|b| o.value < b.value) {
                    best = Some(o);
                }
            }
            if let Some(b) = &best {
                bound.fetch_min(b.value, Ordering::Relaxed);
            }
        }
        let best = best.expect("the all-full assignment is a closed walk");
        Ok(ExactResult { value: u64::from(best.value), witness: self.witness(&best.columns), engine: Engine::Dp })
    }

    fn run_start(&self, start: u32, w1: u32, bound: &AtomicU32) -> Option<StartOutcome> {
        let ns = self.states.len();
        let len = self.len;
        let (start_l, start_need) = self.states[start as usize];
        let mut cur = vec![INF; ns];
        let mut next = vec![INF; ns];
        let mut preds: Vec<Vec<u32>> = Vec::with_capacity(len);
        cur[start as usize] = 0;

        for t in 1..=len {
            let rem = u64::from(w1) * (len - t) as u64;
            let b = u64::from(bound.load(Ordering::Relaxed));
            let mut pred = vec![NONE; ns];
            next.fill(INF);
            if t == len {
                // Only the transition back into the start state matters.
                let w = self.label_weight[start_l as usize];
                for (s, &d) in cur.iter().enumerate() {
                    if d == INF {
                        continue;
                    }
                    let (l, need) = self.states[s];
                    let closes = need & !start_l == 0 && self.allowed[start_l as usize] & !l == start_need;
                    if closes && u64::from(d + w) <= b && d + w < next[start as usize] {
                        next[start as usize] = d + w;
                        pred[start as usize] = s as u32;
                    }
                }
            } else {
                for (s, &d) in cur.iter().enumerate() {
                    if d == INF || u64::from(d) + rem + u64::from(w1) > b {
                        continue;
                    }
                    let edges = &self.edge_to[self.edge_start[s] as usize..self.edge_start[s + 1] as usize];
                    for &s2 in edges {
                        let w = self.label_weight[self.states[s2 as usize].0 as usize];
                        if w < w1 {
                            continue;
                        }
                        let nd = d + w;
                        if nd < next[s2 as usize] && u64::from(nd) + rem <= b {
                            next[s2 as usize] = nd;
                            pred[s2 as usize] = s as u32;
                        }
                    }
                }
            }
            preds.push(pred);
            core::mem::swap(&mut cur, &mut next);
        }

        let value = cur[start as usize];
        if value == INF {
            return None;
        }
        bound.fetch_min(value, Ordering::Relaxed);
        let mut columns = vec![0u32; len];
        let mut s = start;
        for t in (1..=len).rev() {
            columns[t % len] = self.states[s as usize].0;
            s = preds[t - 1][s as usize];
        }
        debug_assert_eq!(s, start);
        Some(StartOutcome { value, columns })
    }

    fn witness(&self, columns: &[u32]) -> Assignment {
        let full = (1u32 << self.k) - 1;
        let solved = Dims { m: self.h, n: self.len, k_colors: self.k };
        let a = Assignment::from_fn(solved, |r, j| ColorSet::from_bits((columns[j] >> (r * self.k) & full) as u8));
        if solved == self.dims {
            a
        } else {
            a.transpose()
        }
    }
}

/// Subsets of `mask` in increasing order.
fn subsets(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    core::iter::from_fn(move || {
        let cur = next?;
        let succ = cur.wrapping_sub(mask) & mask;
        next = (succ != 0).then_some(succ);
        Some(cur)
    })
}

/// A row rotation, optionally preceded by a reflection and a color swap.
struct Symmetry {
    h: usize,
    k: usize,
    shift: usize,
    reflect: bool,
    swap: bool,
}

impl Symmetry {
    fn apply(&self, x: u32) -> u32 {
        let full = (1u32 << self.k) - 1;
        (0..self.h).fold(0, |acc, r| {
            let mut c = (x >> (r * self.k)) & full;
            if self.swap {
                c = (c & 1) << 1 | (c >> 1);
            }
            let dst = if self.reflect { self.h - 1 - r } else { r };
            acc | c << (((dst + self.shift) % self.h) * self.k)
        })
    }
}

fn symmetries(h: usize, k: usize) -> Vec<Symmetry> {
    let swaps: &[bool] = if k == 2 { &[false, true] } else { &[false] };
    let mut out = Vec::new();
    for shift in 0..h {
        for reflect in [false, true] {
            for &swap in swaps {
                out.push(Symmetry { h, k, shift, reflect, swap });
            }
        }
    }
    out
}
