//! Closed-form bounds on `γ_r2(C_m □ C_n)` and a registry of known values.
//!
//! Both upper-bound families are exact products of ceilings, and each can be
//! written as `mn/3 + (x·n + y·m + z)/3` for a coefficient [`Triple`] that
//! depends only on `m mod 6` and `n mod 6`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

#[inline]
fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `⌈3^{-1} x⌉`
#[inline]
pub fn ceil3(x: usize) -> u64 {
    ceil_div(x as u64, 3)
}

/// Ceiling padding to the next multiple of 3: `3⌈m/3⌉ - m`.
pub fn pad3(x: usize) -> u64 {
    [0, 2, 1][x % 3]
}

/// Column overhead of the first upper-bound family, by `n mod 6`.
pub fn beta(n: usize) -> u64 {
    [0, 1, 1, 1, 2, 1][n % 6]
}

/// Row overhead of the second upper-bound family, by `m mod 6`.
pub fn gamma(m: usize) -> u64 {
    [0, 2, 2, 2, 2, 1][m % 6]
}

/// Lower-bound increment per column in halves: `2α`, by `m mod 3`.
pub fn alpha_halves(m: usize) -> u64 {
    (m % 3) as u64
}

/// `⌈k|V| / (r + k)⌉`: every kRDF of an r-regular graph weighs at least this.
pub fn regular_lower_bound(k_colors: u64, r: u64, num_vertices: u64) -> u64 {
    assert!(r >= 1 && k_colors >= 1, "regular_lower_bound needs r >= 1 and k >= 1");
    ceil_div(k_colors * num_vertices, r + k_colors)
}

/// Discharging lower bound `mn/3 + ℓn/6` (with `ℓ = m mod 3`), taken over
/// both factor orders and rounded up.
pub fn lower_bound(m: usize, n: usize) -> u64 {
    let (m64, n64) = (m as u64, n as u64);
    let base = 2 * m64 * n64;
    let rows = base + alpha_halves(m) * n64;
    let cols = base + alpha_halves(n) * m64;
    ceil_div(rows.max(cols), 6)
}

/// Largest admissible distance between the best upper and the lower bound:
/// `⌈(2m + 2n + 4) / 3⌉`.
pub fn gap_limit(m: usize, n: usize) -> u64 {
    ceil_div(2 * m as u64 + 2 * n as u64 + 4, 3)
}

/// `⌈m/3⌉ (n + β)`; needs `m >= 3`, `n >= 6`.
pub fn ub1(m: usize, n: usize) -> Option<u64> {
    (m >= 3 && n >= 6).then(|| ceil3(m) * (n as u64 + beta(n)))
}

/// `⌈n/3⌉ (m + γ)`; needs `m >= 6`, `n >= 3`.
pub fn ub2(m: usize, n: usize) -> Option<u64> {
    (m >= 6 && n >= 3).then(|| ceil3(n) * (m as u64 + gamma(m)))
}

/// Which of the four upper bounds is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    /// `UB1(m, n)`
    Ub1,
    /// `UB2(m, n)`
    Ub2,
    /// `UB1(n, m)`
    Ub1Transposed,
    /// `UB2(n, m)`
    Ub2Transposed,
}

impl BoundKind {
    /// Tie-break order used when several bounds reach the minimum.
    pub const ORDER: [BoundKind; 4] =
        [BoundKind::Ub1, BoundKind::Ub2, BoundKind::Ub1Transposed, BoundKind::Ub2Transposed];

    pub fn label(self) -> &'static str {
        match self {
            BoundKind::Ub1 => "UB1(m,n)",
            BoundKind::Ub2 => "UB2(m,n)",
            BoundKind::Ub1Transposed => "UB1(n,m)",
            BoundKind::Ub2Transposed => "UB2(n,m)",
        }
    }

    pub fn value(self, m: usize, n: usize) -> Option<u64> {
        match self {
            BoundKind::Ub1 => ub1(m, n),
            BoundKind::Ub2 => ub2(m, n),
            BoundKind::Ub1Transposed => ub1(n, m),
            BoundKind::Ub2Transposed => ub2(n, m),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpperBounds {
    pub ub1: Option<u64>,
    pub ub2: Option<u64>,
    pub ub1_t: Option<u64>,
    pub ub2_t: Option<u64>,
    pub best: u64,
    pub best_kind: BoundKind,
}

impl UpperBounds {
    pub fn get(&self, kind: BoundKind) -> Option<u64> {
        match kind {
            BoundKind::Ub1 => self.ub1,
            BoundKind::Ub2 => self.ub2,
            BoundKind::Ub1Transposed => self.ub1_t,
            BoundKind::Ub2Transposed => self.ub2_t,
        }
    }
}

/// All four upper bounds and their minimum over the applicable ones.
pub fn upper_bounds(m: usize, n: usize) -> Result<UpperBounds> {
    let mut best: Option<(u64, BoundKind)> = None;
    for kind in BoundKind::ORDER {
        if let Some(v) = kind.value(m, n) {
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, kind));
            }
        }
    }
    let (best, best_kind) = best.ok_or_else(|| {
        Error::Applicability(format!("no upper bound applies to C{m} x C{n}: one factor must have length >= 6"))
    })?;
    Ok(UpperBounds { ub1: ub1(m, n), ub2: ub2(m, n), ub1_t: ub1(n, m), ub2_t: ub2(n, m), best, best_kind })
}

/// Coefficients `(x, y, z)` of a bound `mn/3 + (x·n + y·m + z)/3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Triple {
    pub const fn new(x: u64, y: u64, z: u64) -> Triple {
        Triple { x, y, z }
    }

    /// `x·n + y·m + z`
    pub fn eval(self, m: usize, n: usize) -> u64 {
        self.x * n as u64 + self.y * m as u64 + self.z
    }

    /// Componentwise comparison.
    pub fn compare(self, other: Triple) -> TripleOrder {
        let le = self.x <= other.x && self.y <= other.y && self.z <= other.z;
        let ge = self.x >= other.x && self.y >= other.y && self.z >= other.z;
        match (le, ge) {
            (true, true) => TripleOrder::Equal,
            (true, false) => TripleOrder::Less,
            (false, true) => TripleOrder::Greater,
            (false, false) => TripleOrder::Incomparable,
        }
    }

    /// Renders `x·n + y·m + z` the way a table cell would, e.g. `n+2m+2`.
    pub fn expression(self) -> alloc::string::String {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        for (coef, var) in [(self.x, "n"), (self.y, "m")] {
            match coef {
                0 => {}
                1 => parts.push(var.into()),
                c => parts.push(format!("{c}{var}")),
            }
        }
        if self.z > 0 || parts.is_empty() {
            parts.push(format!("{}", self.z));
        }
        parts.join("+")
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleOrder {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// Triple of `UB1(m, n)` for `m ≡ mr`, `n ≡ nr (mod 6)`: `(a, β, aβ)`.
pub fn ub1_triple(mr: usize, nr: usize) -> Triple {
    let (a, b) = (pad3(mr), beta(nr));
    Triple::new(a, b, a * b)
}

/// Triple of `UB2(m, n)`: `(γ, c, γc)`.
pub fn ub2_triple(mr: usize, nr: usize) -> Triple {
    let (g, c) = (gamma(mr), pad3(nr));
    Triple::new(g, c, g * c)
}

/// Triple of bound `kind`, expressed in the `(n, m, 1)` frame of `(m, n)`.
pub fn triple(kind: BoundKind, mr: usize, nr: usize) -> Triple {
    match kind {
        BoundKind::Ub1 => ub1_triple(mr, nr),
        BoundKind::Ub2 => ub2_triple(mr, nr),
        BoundKind::Ub1Transposed => {
            // ⌈n/3⌉(m + β(m)) = (n + c)(m + β(m)) / 3
            let t = ub1_triple(nr, mr);
            Triple::new(t.y, t.x, t.z)
        }
        BoundKind::Ub2Transposed => {
            let t = ub2_triple(nr, mr);
            Triple::new(t.y, t.x, t.z)
        }
    }
}

/// Winner of `UB1(m, n)` against `UB2(m, n)` for a residue cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellWinner {
    Equal,
    Ub1,
    Ub2,
    /// The triples are incomparable; the winner depends on `m` and `n`.
    Incomparable,
}

impl CellWinner {
    pub fn label(self) -> &'static str {
        match self {
            CellWinner::Equal => "=",
            CellWinner::Ub1 => "UB1(m,n)",
            CellWinner::Ub2 => "UB2(m,n)",
            CellWinner::Incomparable => ">=<",
        }
    }
}

pub fn ub_winner(mr: usize, nr: usize) -> CellWinner {
    match ub1_triple(mr, nr).compare(ub2_triple(mr, nr)) {
        TripleOrder::Equal => CellWinner::Equal,
        TripleOrder::Less => CellWinner::Ub1,
        TripleOrder::Greater => CellWinner::Ub2,
        TripleOrder::Incomparable => CellWinner::Incomparable,
    }
}

/// Pareto-minimal distinct triples among the four bounds (all assumed
/// applicable, i.e. `m, n >= 6`). A single entry means one bound dominates.
pub fn best_triples(mr: usize, nr: usize) -> Vec<Triple> {
    let all: Vec<Triple> = BoundKind::ORDER.iter().map(|&k| triple(k, mr, nr)).collect();
    let mut out: Vec<Triple> = Vec::new();
    for &t in &all {
        let dominated = all.iter().any(|&o| o.compare(t) == TripleOrder::Less);
        if !dominated && !out.contains(&t) {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// `δ = 3·best_upper - mn` for `m, n >= 6`.
pub fn delta(m: usize, n: usize) -> Option<u64> {
    if m < 6 || n < 6 {
        return None;
    }
    best_triples(m % 6, n % 6).into_iter().map(|t| t.eval(m, n)).min()
}

/// The two residue cells where the triples of `UB1(m, n)` and `UB2(m, n)` are
/// incomparable, resolved for concrete sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncomparableCell {
    /// `UB1(m, n).cmp(UB2(m, n))` by direct evaluation.
    pub direct: Ordering,
    /// The same comparison predicted by the rule `n + 1 <> m` (for
    /// `m ≡ 2, n ≡ 3`) or `n <> 2m` (for `m ≡ 3, n ≡ 3`).
    pub stated_rule: Ordering,
}

impl IncomparableCell {
    pub fn agrees(&self) -> bool {
        self.direct == self.stated_rule
    }
}

pub fn incomparable_cell(m: usize, n: usize) -> Option<IncomparableCell> {
    let stated_rule = match (m % 6, n % 6) {
        (2, 3) => (n + 1).cmp(&m),
        (3, 3) => n.cmp(&(2 * m)),
        _ => return None,
    };
    let direct = ub1(m, n)?.cmp(&ub2(m, n)?);
    Some(IncomparableCell { direct, stated_rule })
}

/// Residue data attached to one `(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueParams {
    /// `m = 3q + ℓ`
    pub q: u64,
    pub ell: u64,
    /// `3⌈m/3⌉ - m`
    pub a: u64,
    /// `3⌈n/3⌉ - n`
    pub c: u64,
    /// `2α`
    pub alpha_halves: u64,
    pub beta: u64,
    pub gamma_coeff: u64,
    pub delta: Option<u64>,
}

pub fn residue_params(m: usize, n: usize) -> ResidueParams {
    ResidueParams {
        q: (m / 3) as u64,
        ell: (m % 3) as u64,
        a: pad3(m),
        c: pad3(n),
        alpha_halves: alpha_halves(m),
        beta: beta(n),
        gamma_coeff: gamma(m),
        delta: delta(m, n),
    }
}

/// Families with a known closed form for `γ_r2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownFamily {
    C3,
    C4,
    C5,
    C8,
    /// `mn/3` when `m ≡ 0 (3), n ≡ 0 (6)` or `m ≡ 0 (6), n ≡ 0 (3)`.
    ThirdOfVertices,
    /// `(m/3) n` for `m ≡ 0 (3)`, `n ≡ 0 (6)`, `n >= 6`.
    ZeroModThree,
    /// `(m+1) n / 3` for `m ≡ 2 (3)`, `n ≡ 0 (6)`, `n >= 6`.
    TwoModThree,
}

fn c4_value(n: u64) -> u64 {
    let extra = match n % 8 {
        0 => 0,
        2 | 4 | 5 => 1,
        _ => 2,
    };
    3 * n / 2 + extra
}

fn c3_value(n: u64) -> u64 {
    match n % 6 {
        0 => n,
        4 => n + 2,
        _ => n + 1,
    }
}

/// Value of a small-cycle family `C_k □ C_n` evaluated at `n` (no range check).
pub fn small_family_value(family: KnownFamily, n: u64) -> Option<u64> {
    match family {
        KnownFamily::C3 => Some(c3_value(n)),
        KnownFamily::C4 => Some(c4_value(n)),
        KnownFamily::C5 => Some(2 * n),
        KnownFamily::C8 => Some(3 * n),
        _ => None,
    }
}

/// Every family that covers `(m, n)` (in either order) with its value.
///
/// Small-cycle families `C_k □ C_n` are applied with `k` the shorter factor.
pub fn known_families(m: usize, n: usize) -> Vec<(KnownFamily, u64)> {
    let (s, l) = (m.min(n) as u64, m.max(n) as u64);
    let mut out = Vec::new();
    let small = match s {
        3 => Some(KnownFamily::C3),
        4 => Some(KnownFamily::C4),
        5 => Some(KnownFamily::C5),
        8 => Some(KnownFamily::C8),
        _ => None,
    };
    if let Some(f) = small {
        out.push((f, small_family_value(f, l).unwrap()));
    }
    let (m64, n64) = (m as u64, n as u64);
    if (m64 % 3 == 0 && n64 % 6 == 0) || (m64 % 6 == 0 && n64 % 3 == 0) {
        out.push((KnownFamily::ThirdOfVertices, m64 * n64 / 3));
    }
    for (x, y) in [(m64, n64), (n64, m64)] {
        if y % 6 != 0 || y < 6 {
            continue;
        }
        match x % 3 {
            0 => out.push((KnownFamily::ZeroModThree, x / 3 * y)),
            2 => out.push((KnownFamily::TwoModThree, (x + 1) * y / 3)),
            _ => {}
        }
    }
    out
}

/// Known exact `γ_r2(C_m □ C_n)`, or `None` when no family applies.
/// Families that overlap must agree; a disagreement is an error.
pub fn known_exact_r2(m: usize, n: usize) -> Result<Option<u64>> {
    let fams = known_families(m, n);
    let Some(&(first_family, first)) = fams.first() else {
        return Ok(None);
    };
    if let Some(&(f, v)) = fams.iter().find(|&&(_, v)| v != first) {
        return Err(Error::Inconsistent(format!("C{m} x C{n}: {first_family:?} gives {first} but {f:?} gives {v}")));
    }
    Ok(Some(first))
}

/// Ordinary domination number for `C_3`, `C_4`, `C_5` times a cycle.
pub fn known_gamma(m: usize, n: usize) -> Option<u64> {
    let (s, l) = (m.min(n), m.max(n) as u64);
    match s {
        3 => Some(l - l / 4),
        4 => Some(l),
        5 => Some(match l % 5 {
            0 => l,
            3 => l + 2,
            _ => l + 1,
        }),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundSet {
    pub m: usize,
    pub n: usize,
    pub lower: u64,
    pub ub1: Option<u64>,
    pub ub2: Option<u64>,
    pub ub1_t: Option<u64>,
    pub ub2_t: Option<u64>,
    pub best_upper: u64,
    pub best_kind: BoundKind,
    pub known_exact: Option<u64>,
    pub known_gamma: Option<u64>,
}

/// Everything known about `(m, n)` without running an oracle.
pub fn bound_set(m: usize, n: usize) -> Result<BoundSet> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidDims { m, n, k: 2 });
    }
    let up = upper_bounds(m, n)?;
    let lower = lower_bound(m, n);
    let known_exact = known_exact_r2(m, n)?;
    if lower > up.best {
        return Err(Error::Inconsistent(format!("C{m} x C{n}: lower bound {lower} above upper bound {}", up.best)));
    }
    if let Some(v) = known_exact {
        if v < lower || v > up.best {
            return Err(Error::Inconsistent(format!("C{m} x C{n}: known value {v} outside [{lower}, {}]", up.best)));
        }
    }
    Ok(BoundSet {
        m,
        n,
        lower,
        ub1: up.ub1,
        ub2: up.ub2,
        ub1_t: up.ub1_t,
        ub2_t: up.ub2_t,
        best_upper: up.best,
        best_kind: up.best_kind,
        known_exact,
        known_gamma: known_gamma(m, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_bound_examples() {
        assert_eq!(regular_lower_bound(2, 4, 36), 12);
        assert_eq!(regular_lower_bound(1, 1, 2), 1);
        assert_eq!(regular_lower_bound(2, 4, 20), 7);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(4, 6), 9);
        assert_eq!(lower_bound(3, 6), 6);
        assert_eq!(lower_bound(5, 6), 12);
        assert_eq!(lower_bound(6, 4), 9);
    }

    #[test]
    fn upper_bound_examples() {
        let u = upper_bounds(6, 10).unwrap();
        assert_eq!(u.ub1, Some(24));
        assert_eq!(u.best, 24);
        assert_eq!(delta(6, 10), Some(12));

        let u = upper_bounds(6, 6).unwrap();
        assert_eq!(u.best, 12);
        assert_eq!(u.best_kind, BoundKind::Ub1);

        // m ≡ 2, n ≡ 3 (mod 6): the transposed first family wins.
        let u = upper_bounds(8, 9).unwrap();
        assert_eq!((u.ub1, u.ub2, u.ub1_t, u.ub2_t), (Some(30), Some(30), Some(27), Some(33)));
        assert_eq!(u.best, 27);
        assert_eq!(u.best_kind, BoundKind::Ub1Transposed);
    }

    #[test]
    fn no_bound_for_two_short_cycles() {
        assert!(matches!(upper_bounds(5, 5), Err(Error::Applicability(_))));
        assert!(upper_bounds(5, 6).is_ok());
        assert!(upper_bounds(6, 3).is_ok());
    }

    #[test]
    fn triples_match_closed_forms() {
        for m in 6..30 {
            for n in 6..30 {
                for kind in BoundKind::ORDER {
                    let v = kind.value(m, n).unwrap();
                    let t = triple(kind, m % 6, n % 6);
                    assert_eq!(3 * v, (m * n) as u64 + t.eval(m, n), "{kind} at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn incomparable_cells() {
        assert_eq!(ub_winner(2, 3), CellWinner::Incomparable);
        assert_eq!(ub_winner(3, 3), CellWinner::Incomparable);
        let c = incomparable_cell(8, 9).unwrap();
        assert_eq!(c.direct, Ordering::Equal);
        // m = 20, n = 9: UB1 = 7·10 = 70, UB2 = 3·22 = 66.
        let c = incomparable_cell(20, 9).unwrap();
        assert_eq!(c.direct, Ordering::Greater);
        assert!(!c.agrees());
        assert!(incomparable_cell(6, 6).is_none());
    }

    #[test]
    fn known_r2_examples() {
        assert_eq!(known_exact_r2(3, 4).unwrap(), Some(6));
        assert_eq!(known_exact_r2(4, 8).unwrap(), Some(12));
        assert_eq!(known_exact_r2(5, 7).unwrap(), Some(14));
        assert_eq!(known_exact_r2(8, 11).unwrap(), Some(33));
        assert_eq!(known_exact_r2(7, 7).unwrap(), None);
        assert_eq!(known_exact_r2(4, 6).unwrap(), Some(11));
        assert_eq!(known_exact_r2(3, 6).unwrap(), Some(6));
        assert_eq!(known_exact_r2(9, 12).unwrap(), Some(36));
        // C5 family applies with 5 as the shorter factor.
        assert_eq!(known_exact_r2(8, 5).unwrap(), Some(16));
    }

    #[test]
    fn known_gamma_examples() {
        assert_eq!(known_gamma(3, 8), Some(6));
        assert_eq!(known_gamma(4, 7), Some(7));
        assert_eq!(known_gamma(5, 8), Some(10));
        assert_eq!(known_gamma(4, 3), Some(3));
        assert_eq!(known_gamma(6, 6), None);
    }

    #[test]
    fn bound_set_examples() {
        let b = bound_set(4, 6).unwrap();
        assert_eq!((b.lower, b.best_upper, b.known_exact), (9, 12, Some(11)));
        let b = bound_set(6, 6).unwrap();
        assert_eq!((b.lower, b.best_upper, b.known_exact), (12, 12, Some(12)));
        let b = bound_set(9, 12).unwrap();
        assert_eq!((b.lower, b.best_upper, b.known_exact), (36, 36, Some(36)));
    }

    #[test]
    fn residue_params_ranges() {
        for m in 3..40 {
            for n in 3..40 {
                let r = residue_params(m, n);
                assert!(r.a <= 2 && r.c <= 2 && r.beta <= 2 && r.gamma_coeff <= 2 && r.alpha_halves <= 2);
                assert_eq!(3 * r.q + r.ell, m as u64);
                assert_eq!((m as u64 + r.a) % 3, 0);
                assert_eq!((n as u64 + r.c) % 3, 0);
            }
        }
    }

    #[test]
    fn triple_expression() {
        assert_eq!(Triple::new(1, 2, 2).expression(), "n+2m+2");
        assert_eq!(Triple::new(0, 0, 0).expression(), "0");
        assert_eq!(Triple::new(0, 2, 0).expression(), "2m");
    }
}
