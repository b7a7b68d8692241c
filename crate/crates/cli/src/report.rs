//! Table reports: known small-cycle formulas, the comparison of the two
//! upper-bound families, and exact-minus-lower-bound data.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rainbow_torus::bounds::{
    self, best_triples, incomparable_cell, lower_bound, small_family_value, ub_winner, CellWinner, KnownFamily, Triple,
};
use rainbow_torus::oracle::{Budget, DpSolver, EngineChoice};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliResult;
use crate::exec::exact_timed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportId {
    KnownTable,
    UbComparison,
    Conjecture,
}

/// Right-aligns every column to its widest entry.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KnownRow {
    pub label: String,
    pub values: Vec<Option<u64>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KnownTable {
    pub n: Vec<usize>,
    pub rows: Vec<KnownRow>,
}

/// Small-cycle formulas evaluated over `ns`; a row is blank below its
/// family's domain `n >= k`.
pub fn known_table(ns: RangeInclusive<usize>) -> KnownTable {
    let n: Vec<usize> = ns.collect();
    let mut rows = Vec::new();
    for (k, fam) in [(3, KnownFamily::C3), (4, KnownFamily::C4), (5, KnownFamily::C5), (8, KnownFamily::C8)] {
        rows.push(KnownRow {
            label: format!("r2 C{k}"),
            values: n.iter().map(|&x| (x >= k).then(|| small_family_value(fam, x as u64)).flatten()).collect(),
        });
    }
    for k in 3..=5 {
        rows.push(KnownRow {
            label: format!("gamma C{k}"),
            values: n.iter().map(|&x| (x >= k).then(|| bounds::known_gamma(k, x)).flatten()).collect(),
        });
    }
    KnownTable { n, rows }
}

impl KnownTable {
    pub fn render(&self) -> String {
        let mut grid = vec![std::iter::once("n".to_string()).chain(self.n.iter().map(usize::to_string)).collect()];
        for r in &self.rows {
            grid.push(std::iter::once(r.label.clone()).chain(r.values.iter().map(|&v| opt(v))).collect());
        }
        align(&grid)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TripleJson {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl From<Triple> for TripleJson {
    fn from(t: Triple) -> TripleJson {
        TripleJson { x: t.x, y: t.y, z: t.z }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IncomparableReport {
    pub m_mod6: usize,
    pub n_mod6: usize,
    /// `UB1 >=< UB2 <=> lhs >=< rhs`, derived from the triples.
    pub rule: String,
    /// The rule `n+1 >=< m` (resp. `n >=< 2m`) checked against direct
    /// evaluation on the sample.
    pub alternative_rule: String,
    pub samples: usize,
    pub alternative_disagreements: usize,
    pub examples: Vec<IncomparableExample>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IncomparableExample {
    pub m: usize,
    pub n: usize,
    pub ub1: u64,
    pub ub2: u64,
    pub winner: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BestCell {
    pub m_mod6: usize,
    pub n_mod6: usize,
    pub triples: Vec<TripleJson>,
    pub delta: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UbComparison {
    /// Indexed `[m mod 6][n mod 6]`.
    pub ub1: Vec<Vec<TripleJson>>,
    pub ub2: Vec<Vec<TripleJson>>,
    pub winner: Vec<Vec<String>>,
    pub incomparable: Vec<IncomparableReport>,
    /// Upper triangle `m mod 6 <= n mod 6`, valid for `m, n >= 6`.
    pub best: Vec<BestCell>,
}

/// `UB1 >=< UB2 <=> lhs >=< rhs` from the difference of the triples.
fn difference_rule(t1: Triple, t2: Triple) -> String {
    let mut lhs = Triple::new(0, 0, 0);
    let mut rhs = Triple::new(0, 0, 0);
    for (a, b, l, r) in [
        (t1.x, t2.x, &mut lhs.x, &mut rhs.x),
        (t1.y, t2.y, &mut lhs.y, &mut rhs.y),
        (t1.z, t2.z, &mut lhs.z, &mut rhs.z),
    ] {
        if a >= b {
            *l = a - b;
        } else {
            *r = b - a;
        }
    }
    format!("UB1(m,n) >=< UB2(m,n) <=> {} >=< {}", lhs.expression(), rhs.expression())
}

pub fn ub_comparison() -> UbComparison {
    let table = |f: fn(usize, usize) -> Triple| -> Vec<Vec<TripleJson>> {
        (0..6).map(|mr| (0..6).map(|nr| f(mr, nr).into()).collect()).collect()
    };
    let winner = (0..6).map(|mr| (0..6).map(|nr| ub_winner(mr, nr).label().to_string()).collect()).collect();

    let mut incomparable = Vec::new();
    for mr in 0..6 {
        for nr in 0..6 {
            if ub_winner(mr, nr) != CellWinner::Incomparable {
                continue;
            }
            let (t1, t2) = (bounds::ub1_triple(mr, nr), bounds::ub2_triple(mr, nr));
            let alternative_rule = match (mr, nr) {
                (2, 3) => "n+1 >=< m",
                (3, 3) => "n >=< 2m",
                _ => "none",
            };
            let mut samples = 0;
            let mut disagreements = 0;
            let mut examples = Vec::new();
            for m in (6..=120).filter(|m| m % 6 == mr) {
                for n in (6..=120).filter(|n| n % 6 == nr) {
                    let Some(c) = incomparable_cell(m, n) else { continue };
                    samples += 1;
                    if !c.agrees() {
                        disagreements += 1;
                    }
                    let (u1, u2) = (bounds::ub1(m, n).unwrap(), bounds::ub2(m, n).unwrap());
                    let interesting = m.abs_diff(n) <= 1 || m.abs_diff(2 * n) <= 3 || n.abs_diff(2 * m) <= 3;
                    if examples.len() < 6 && interesting {
                        let winner = match u1.cmp(&u2) {
                            std::cmp::Ordering::Less => "UB1(m,n)",
                            std::cmp::Ordering::Equal => "=",
                            std::cmp::Ordering::Greater => "UB2(m,n)",
                        };
                        examples.push(IncomparableExample { m, n, ub1: u1, ub2: u2, winner: winner.into() });
                    }
                }
            }
            incomparable.push(IncomparableReport {
                m_mod6: mr,
                n_mod6: nr,
                rule: difference_rule(t1, t2),
                alternative_rule: alternative_rule.into(),
                samples,
                alternative_disagreements: disagreements,
                examples,
            });
        }
    }

    let mut best = Vec::new();
    for mr in 0..6 {
        for nr in mr..6 {
            let triples = best_triples(mr, nr);
            let delta = match triples.as_slice() {
                [t] => t.expression(),
                ts => format!("min{{{}}}", ts.iter().map(|t| t.expression()).collect::<Vec<_>>().join(", ")),
            };
            best.push(BestCell {
                m_mod6: mr,
                n_mod6: nr,
                triples: triples.into_iter().map(Into::into).collect(),
                delta,
            });
        }
    }

    UbComparison { ub1: table(bounds::ub1_triple), ub2: table(bounds::ub2_triple), winner, incomparable, best }
}

fn triple_text(t: &TripleJson) -> String {
    format!("({},{},{})", t.x, t.y, t.z)
}

fn residue_grid(title: &str, cells: impl Fn(usize, usize) -> String) -> Vec<Vec<String>> {
    let mut grid = vec![std::iter::once(title.to_string()).chain((0..6).map(|r| r.to_string())).collect::<Vec<_>>()];
    for mr in 0..6 {
        grid.push(std::iter::once(mr.to_string()).chain((0..6).map(|nr| cells(mr, nr))).collect());
    }
    grid
}

impl UbComparison {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("UB1(m,n) = mn/3 + (x n + y m + z)/3, rows m mod 6, columns n mod 6\n");
        out.push_str(&align(&residue_grid("m\\n", |m, n| triple_text(&self.ub1[m][n]))));
        out.push_str("\nUB2(m,n) = mn/3 + (x n + y m + z)/3\n");
        out.push_str(&align(&residue_grid("m\\n", |m, n| triple_text(&self.ub2[m][n]))));
        out.push_str("\nsmaller of UB1(m,n) and UB2(m,n)\n");
        out.push_str(&align(&residue_grid("m\\n", |m, n| self.winner[m][n].clone())));
        for c in &self.incomparable {
            writeln!(out, "\nm = {} (mod 6), n = {} (mod 6): {}", c.m_mod6, c.n_mod6, c.rule).unwrap();
            writeln!(
                out,
                "  rule {} disagrees with direct evaluation on {} of {} sampled sizes",
                c.alternative_rule, c.alternative_disagreements, c.samples
            )
            .unwrap();
            let mut grid = vec![vec!["m".into(), "n".into(), "UB1".into(), "UB2".into(), "smaller".into()]];
            for e in &c.examples {
                grid.push(vec![
                    e.m.to_string(),
                    e.n.to_string(),
                    e.ub1.to_string(),
                    e.ub2.to_string(),
                    e.winner.clone(),
                ]);
            }
            for line in align(&grid).lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        out.push_str("\nbest of UB1(m,n), UB2(m,n), UB1(n,m), UB2(n,m) for m, n >= 6: mn/3 + delta/3\n");
        let mut grid = vec![vec!["m".into(), "n".into(), "(x,y,z)".into(), "delta".into()]];
        for b in &self.best {
            let ts = b.triples.iter().map(triple_text).collect::<Vec<_>>().join(" or ");
            grid.push(vec![b.m_mod6.to_string(), b.n_mod6.to_string(), ts, b.delta.clone()]);
        }
        out.push_str(&align(&grid));
        out
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConjectureCell {
    pub n: usize,
    pub exact: u64,
    pub lb: u64,
    pub diff: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConjectureRow {
    pub m: usize,
    pub cells: Vec<ConjectureCell>,
    pub min_diff: Option<u64>,
    pub max_diff: Option<u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Conjecture {
    pub rows: Vec<ConjectureRow>,
}

/// `exact - lower_bound` for every size the DP can solve within `budget`.
pub fn conjecture(ms: RangeInclusive<usize>, ns: RangeInclusive<usize>, budget: &Budget) -> CliResult<Conjecture> {
    let cells: Vec<(usize, usize)> = ms
        .clone()
        .flat_map(|m| ns.clone().map(move |n| (m, n)))
        .filter(|&(m, n)| m >= 3 && n >= 3 && DpSolver::new(m, n, 2, budget).is_ok())
        .collect();
    let values: Vec<(usize, ConjectureCell)> = cells
        .par_iter()
        .map(|&(m, n)| {
            let exact = exact_timed(m, n, 2, EngineChoice::Dp, budget)?.result.value;
            let lb = lower_bound(m, n);
            Ok((m, ConjectureCell { n, exact, lb, diff: exact - lb }))
        })
        .collect::<CliResult<_>>()?;
    let rows = ms
        .filter_map(|m| {
            let cells: Vec<ConjectureCell> = values.iter().filter(|(mm, _)| *mm == m).map(|(_, c)| c.clone()).collect();
            (!cells.is_empty()).then(|| ConjectureRow {
                m,
                min_diff: cells.iter().map(|c| c.diff).min(),
                max_diff: cells.iter().map(|c| c.diff).max(),
                cells,
            })
        })
        .collect();
    Ok(Conjecture { rows })
}

impl Conjecture {
    pub fn render(&self) -> String {
        let mut out = String::from("exact - lower bound, by m\n");
        let ns: Vec<usize> = {
            let mut v: Vec<usize> = self.rows.iter().flat_map(|r| r.cells.iter().map(|c| c.n)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut grid = vec![std::iter::once("m\\n".to_string())
            .chain(ns.iter().map(usize::to_string))
            .chain(["min".into(), "max".into()])
            .collect::<Vec<_>>()];
        for r in &self.rows {
            let mut line = vec![r.m.to_string()];
            for n in &ns {
                line.push(r.cells.iter().find(|c| c.n == *n).map_or("-".into(), |c| c.diff.to_string()));
            }
            line.push(opt(r.min_diff));
            line.push(opt(r.max_diff));
            grid.push(line);
        }
        out.push_str(&align(&grid));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_table_c3_row() {
        let t = known_table(6..=11);
        let c3 = &t.rows[0];
        assert_eq!(c3.label, "r2 C3");
        assert_eq!(c3.values, [6, 8, 9, 10, 12, 12].map(Some));
        let c8 = t.rows.iter().find(|r| r.label == "r2 C8").unwrap();
        assert_eq!(c8.values[0], None);
    }

    #[test]
    fn comparison_shape() {
        let c = ub_comparison();
        assert_eq!(c.ub1.len(), 6);
        assert_eq!(c.ub1[0][0], TripleJson { x: 0, y: 0, z: 0 });
        assert_eq!(c.incomparable.len(), 2);
        assert_eq!(c.incomparable[0].rule, "UB1(m,n) >=< UB2(m,n) <=> m+1 >=< n");
        assert_eq!(c.incomparable[1].rule, "UB1(m,n) >=< UB2(m,n) <=> m >=< 2n");
        assert!(c.incomparable.iter().all(|i| i.alternative_disagreements > 0));
        assert_eq!(c.best.len(), 21);
    }

    #[test]
    fn align_pads_columns() {
        let t = align(&[vec!["a".into(), "bbb".into()], vec!["cc".into(), "d".into()]]);
        assert_eq!(t, " a  bbb\ncc    d\n");
    }
}
