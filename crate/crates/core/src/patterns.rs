//! Explicit weight-`mn/3` patterns and the row/column union constructions
//! that realize the closed-form upper bounds.
//!
//! Every construction is checked with [`verify`](crate::verify()) before it is
//! returned; a failed check is reported as [`Error::Construction`].

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bounds::{self, BoundKind};
use crate::grid::{Assignment, ColorSet, Dims};
use crate::verify::verify;
use crate::{Error, Result};

fn c1() -> ColorSet {
    ColorSet::singleton(1)
}

fn c2() -> ColorSet {
    ColorSet::singleton(2)
}

/// Diagonal pattern with colors alternating along each row:
///
/// ```text
/// 1 0 0 2 0 0
/// 0 2 0 0 1 0
/// 0 0 1 0 0 2
/// ```
///
/// Needs `m ≡ 0 (mod 3)` and `n ≡ 0 (mod 6)`. Every column carries `m/3`
/// colors.
pub fn pattern_f1(m: usize, n: usize) -> Result<Assignment> {
    if !m.is_multiple_of(3) || !n.is_multiple_of(6) {
        return Err(Error::Applicability(format!("F1 needs m ≡ 0 (mod 3) and n ≡ 0 (mod 6), got {m}x{n}")));
    }
    Ok(diagonal_pattern(Dims::new(m, n, 2)?, |_, j| j))
}

/// The transpose of [`pattern_f1`]: colors alternate down each column.
///
/// Needs `m ≡ 0 (mod 6)` and `n ≡ 0 (mod 3)`. Every row carries `n/3`
/// colors.
pub fn pattern_f2(m: usize, n: usize) -> Result<Assignment> {
    if !m.is_multiple_of(6) || !n.is_multiple_of(3) {
        return Err(Error::Applicability(format!("F2 needs m ≡ 0 (mod 6) and n ≡ 0 (mod 3), got {m}x{n}")));
    }
    Ok(diagonal_pattern(Dims::new(m, n, 2)?, |i, _| i))
}

/// Row `i` of pattern (2) on `width` columns; `i` may be negative.
fn f2_row(i: i64, width: usize) -> Vec<ColorSet> {
    let i = i.rem_euclid(6) as usize;
    (0..width).map(|j| diagonal_cell(i, j, i)).collect()
}

fn diagonal_cell(i: usize, j: usize, parity_of: usize) -> ColorSet {
    if !(i + 3 - j % 3).is_multiple_of(3) {
        ColorSet::EMPTY
    } else if parity_of.is_multiple_of(2) {
        c1()
    } else {
        c2()
    }
}

fn diagonal_pattern(dims: Dims, parity: impl Fn(usize, usize) -> usize) -> Assignment {
    Assignment::from_fn(dims, |i, j| diagonal_cell(i, j, parity(i, j)))
}

fn adjacent(r1: usize, r2: usize, len: usize) -> bool {
    r2 == (r1 + 1) % len || r1 == (r2 + 1) % len
}

/// Replaces rows `r1` and `r2` (adjacent modulo `m`) by their cell-wise
/// union. The merged row takes the place of the earlier row in cyclic order;
/// for the pair `(m-1, 0)` it becomes the last row.
pub fn merge_rows(a: &Assignment, r1: usize, r2: usize) -> Result<Assignment> {
    let Dims { m, n, k_colors } = a.dims();
    for r in [r1, r2] {
        if r >= m {
            return Err(Error::OutOfRange { what: "row", index: r, len: m });
        }
    }
    if r1 == r2 || !adjacent(r1, r2, m) {
        return Err(Error::Input(format!("rows {r1} and {r2} are not adjacent in a cycle of length {m}")));
    }
    let (first, second) = if r2 == (r1 + 1) % m { (r1, r2) } else { (r2, r1) };
    let dims = Dims::new(m - 1, n, k_colors)?;
    let merged: Vec<ColorSet> = a.row(first).iter().zip(a.row(second)).map(|(x, y)| x.union(*y)).collect();
    let mut rows: Vec<Vec<ColorSet>> = Vec::with_capacity(m - 1);
    for i in 0..m {
        if i == first {
            rows.push(merged.clone());
        } else if i != second {
            rows.push(a.row(i).to_vec());
        }
    }
    Assignment::from_cells(dims, rows.concat())
}

/// Column version of [`merge_rows`].
pub fn merge_cols(a: &Assignment, c1: usize, c2: usize) -> Result<Assignment> {
    if c1 >= a.dims().n || c2 >= a.dims().n {
        return Err(Error::OutOfRange { what: "column", index: c1.max(c2), len: a.dims().n });
    }
    merge_rows(&a.transpose(), c1, c2).map(|t| t.transpose())
}

fn check_disjoint(a: &[ColorSet], b: &[ColorSet], what: &str) -> Result<()> {
    match a.iter().zip(b).position(|(x, y)| !x.is_disjoint(*y)) {
        None => Ok(()),
        Some(p) => Err(Error::Construction(format!("{what}: overlapping cells at position {p}"))),
    }
}

/// [`merge_rows`] for `(r, r + 1 mod m)`, failing if the two rows share a
/// color anywhere (which would lose weight).
fn merge_rows_disjoint(a: &Assignment, r: usize) -> Result<Assignment> {
    let r2 = (r + 1) % a.dims().m;
    check_disjoint(a.row(r), a.row(r2), &format!("row merge ({r}, {r2})"))?;
    merge_rows(a, r, r2)
}

fn merge_cols_disjoint(a: &Assignment, c: usize) -> Result<Assignment> {
    merge_rows_disjoint(&a.transpose(), c).map(|t| t.transpose())
}

fn union_cells(a: &[ColorSet], b: &[ColorSet]) -> Vec<ColorSet> {
    a.iter().zip(b).map(|(x, y)| x.union(*y)).collect()
}

fn from_columns(cols: &[Vec<ColorSet>]) -> Result<Assignment> {
    Ok(Assignment::from_rows(2, cols)?.transpose())
}

/// A named construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Recipe {
    F1,
    F2,
    /// Pattern base with one extra row merged away (`m ≡ 2 mod 3`).
    Prop42,
    /// Two extra rows merged away (`m ≡ 1 mod 3`).
    Prop43,
    /// Pattern (1) with the columns adapted to `n ≡ b (mod 6)`, `b` in 1..=5.
    Prop45(u8),
    /// The `Prop45` construction on `3⌈m/3⌉` rows followed by row merges.
    Prop46,
    /// Pattern (2) rows adapted to `m`, then columns adapted to `n`.
    Prop47,
    /// The given recipe on `(n, m)`, transposed.
    Transpose(Box<Recipe>),
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::F1 => f.write_str("F1"),
            Recipe::F2 => f.write_str("F2"),
            Recipe::Prop42 => f.write_str("PROP42"),
            Recipe::Prop43 => f.write_str("PROP43"),
            Recipe::Prop45(b) => write!(f, "PROP45_B{b}"),
            Recipe::Prop46 => f.write_str("PROP46"),
            Recipe::Prop47 => f.write_str("PROP47"),
            Recipe::Transpose(r) => write!(f, "TRANSPOSE_OF({r})"),
        }
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Recipe> {
        let t = s.trim().to_ascii_uppercase();
        if let Some(inner) = t.strip_prefix("TRANSPOSE_OF(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Recipe::Transpose(Box::new(inner.parse()?)));
        }
        Ok(match t.as_str() {
            "F1" => Recipe::F1,
            "F2" => Recipe::F2,
            "PROP42" => Recipe::Prop42,
            "PROP43" => Recipe::Prop43,
            "PROP46" => Recipe::Prop46,
            "PROP47" => Recipe::Prop47,
            _ => match t.strip_prefix("PROP45_B").and_then(|b| b.parse::<u8>().ok()) {
                Some(b @ 1..=5) => Recipe::Prop45(b),
                _ => return Err(Error::Input(format!("unknown recipe {s:?}"))),
            },
        })
    }
}

impl Recipe {
    /// Whether the recipe's hypothesis holds for `(m, n)`.
    pub fn applies(&self, m: usize, n: usize) -> bool {
        if m < 3 || n < 3 {
            return false;
        }
        match self {
            Recipe::F1 => m.is_multiple_of(3) && n.is_multiple_of(6),
            Recipe::F2 => m.is_multiple_of(6) && n.is_multiple_of(3),
            Recipe::Prop42 => m % 3 == 2 && n.is_multiple_of(6),
            Recipe::Prop43 => m % 3 == 1 && n.is_multiple_of(6) && m >= 4,
            Recipe::Prop45(b) => m.is_multiple_of(3) && n >= 6 && n % 6 == usize::from(*b),
            Recipe::Prop46 => !m.is_multiple_of(3) && n >= 6 && !n.is_multiple_of(6),
            Recipe::Prop47 => m >= 6,
            Recipe::Transpose(r) => r.applies(n, m),
        }
    }

    /// The weight the recipe achieves on `(m, n)`, if it applies.
    pub fn claimed_weight(&self, m: usize, n: usize) -> Option<u64> {
        if !self.applies(m, n) {
            return None;
        }
        match self {
            Recipe::F1 | Recipe::F2 => Some((m * n / 3) as u64),
            Recipe::Prop42 | Recipe::Prop43 | Recipe::Prop45(_) | Recipe::Prop46 => bounds::ub1(m, n),
            Recipe::Prop47 => bounds::ub2(m, n),
            Recipe::Transpose(r) => r.claimed_weight(n, m),
        }
    }

    /// The recipe realizing `UB1(m, n)`.
    pub fn for_ub1(m: usize, n: usize) -> Recipe {
        if n.is_multiple_of(6) {
            match m % 3 {
                0 => Recipe::F1,
                1 => Recipe::Prop43,
                _ => Recipe::Prop42,
            }
        } else if m.is_multiple_of(3) {
            Recipe::Prop45((n % 6) as u8)
        } else {
            Recipe::Prop46
        }
    }

    /// The recipe realizing `UB2(m, n)`.
    pub fn for_ub2(m: usize, n: usize) -> Recipe {
        if m.is_multiple_of(6) && n.is_multiple_of(3) {
            Recipe::F2
        } else {
            Recipe::Prop47
        }
    }

    pub fn for_bound(kind: BoundKind, m: usize, n: usize) -> Recipe {
        match kind {
            BoundKind::Ub1 => Recipe::for_ub1(m, n),
            BoundKind::Ub2 => Recipe::for_ub2(m, n),
            BoundKind::Ub1Transposed => Recipe::Transpose(Box::new(Recipe::for_ub1(n, m))),
            BoundKind::Ub2Transposed => Recipe::Transpose(Box::new(Recipe::for_ub2(n, m))),
        }
    }
}

/// A verified assignment together with the recipe that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub recipe: Recipe,
    pub assignment: Assignment,
    pub claimed_weight: u64,
}

/// Builds `recipe` on `C_m □ C_n` and verifies the result.
pub fn construct(recipe: &Recipe, m: usize, n: usize) -> Result<Construction> {
    Dims::new(m, n, 2)?;
    let Some(claimed_weight) = recipe.claimed_weight(m, n) else {
        return Err(Error::Applicability(format!("{recipe} does not apply to {m}x{n}")));
    };
    let assignment = build(recipe, m, n)?;
    let report = verify(&assignment);
    if assignment.dims() != Dims::new(m, n, 2)? {
        return Err(Error::Construction(format!("{recipe} on {m}x{n} produced a grid of the wrong shape")));
    }
    if !report.valid {
        return Err(Error::Construction(format!(
            "{recipe} on {m}x{n} leaves {} vertices undominated, first at {:?}",
            report.violations.len(),
            report.violations[0].vertex
        )));
    }
    if report.weight != claimed_weight {
        return Err(Error::Construction(format!(
            "{recipe} on {m}x{n} has weight {} instead of {claimed_weight}",
            report.weight
        )));
    }
    Ok(Construction { recipe: recipe.clone(), assignment, claimed_weight })
}

fn build(recipe: &Recipe, m: usize, n: usize) -> Result<Assignment> {
    match recipe {
        Recipe::F1 => pattern_f1(m, n),
        Recipe::F2 => pattern_f2(m, n),
        Recipe::Prop42 | Recipe::Prop43 => build_row_merged(m, n),
        Recipe::Prop45(b) => build_prop45(m, n, *b),
        Recipe::Prop46 => build_prop46(m, n),
        Recipe::Prop47 => build_prop47(m, n),
        Recipe::Transpose(r) => Ok(build(r, n, m)?.transpose()),
    }
}

/// `n ≡ 0 (mod 6)` and `m ≢ 0 (mod 3)`: start from a pattern on `3⌈m/3⌉`
/// rows and merge rows `(1, 2)`, plus the original rows `(3, 4)` when two
/// rows have to go.
fn build_row_merged(m: usize, n: usize) -> Result<Assignment> {
    let base_m = 3 * m.div_ceil(3);
    let base = if base_m.is_multiple_of(6) { pattern_f2(base_m, n)? } else { pattern_f1(base_m, n)? };
    let a = merge_rows_disjoint(&base, 1)?;
    if base_m - m == 2 {
        merge_rows_disjoint(&a, 2)
    } else {
        Ok(a)
    }
}

/// `m ≡ 0 (mod 3)`, `n = 6a + b`: keep the first `6a` columns of pattern (1)
/// and replace the tail by `b` columns of weight `(m/3)·β(b)` extra.
fn build_prop45(m: usize, n: usize, b: u8) -> Result<Assignment> {
    let a6 = n - usize::from(b);
    let base = pattern_f1(m, a6 + 6)?;
    let col = |j: usize| base.column(j);
    let mut cols: Vec<Vec<ColorSet>> = (0..a6).map(col).collect();
    let rows_by = |f: &dyn Fn(usize) -> ColorSet| (0..m).map(f).collect::<Vec<_>>();
    match b {
        5 => return merge_cols_disjoint(&base, a6 + 3),
        4 => {
            let (x, y, z, w) = (col(a6 + 2), col(a6 + 3), col(a6 + 4), col(a6 + 5));
            check_disjoint(&x, &z, "tail column union")?;
            check_disjoint(&y, &w, "tail column union")?;
            cols.extend([col(a6), col(a6 + 1), union_cells(&x, &z), union_cells(&y, &w)]);
        }
        3 => {
            cols.push(rows_by(&|i| if i % 3 == 0 { c1() } else { ColorSet::EMPTY }));
            cols.push(rows_by(&|i| if i % 3 == 1 { ColorSet::full(2) } else { ColorSet::EMPTY }));
            cols.push(rows_by(&|i| if i % 3 == 2 { c2() } else { ColorSet::EMPTY }));
        }
        2 => {
            cols.push(rows_by(&|i| if i % 3 == 0 { c1() } else { ColorSet::EMPTY }));
            cols.push(rows_by(&|i| if i % 3 != 0 { c2() } else { ColorSet::EMPTY }));
        }
        1 => cols.push(rows_by(&|i| [c1(), ColorSet::EMPTY, c2()][i % 3])),
        _ => return Err(Error::Applicability(format!("PROP45 needs b in 1..=5, got {b}"))),
    }
    from_columns(&cols)
}

/// `m ≢ 0 (mod 3)`, `n ≢ 0 (mod 6)`: the `Prop45` grid on `3⌈m/3⌉` rows,
/// with rows `(0, 1)` merged and, for `m ≡ 1`, also the original rows `(3, 4)`.
fn build_prop46(m: usize, n: usize) -> Result<Assignment> {
    let base_m = 3 * m.div_ceil(3);
    let base = build_prop45(base_m, n, (n % 6) as u8)?;
    let a = merge_rows_disjoint(&base, 0)?;
    if base_m - m == 2 {
        merge_rows_disjoint(&a, 2)
    } else {
        Ok(a)
    }
}

/// Pattern (2) rows on `3⌈n/3⌉` columns, fitted to `m` rows, then one or two
/// disjoint column merges to reach width `n`.
fn build_prop47(m: usize, n: usize) -> Result<Assignment> {
    let width = 3 * n.div_ceil(3);
    let dims = Dims::new(m, width, 2)?;
    let mut rows: Vec<Vec<ColorSet>> = (0..m as i64).map(|i| f2_row(i, width)).collect();
    let mut a = match m % 6 {
        0 => Assignment::from_rows(2, &rows)?,
        5 => {
            rows.push(f2_row(m as i64, width));
            merge_rows_disjoint(&Assignment::from_rows(2, &rows)?, m - 1)?
        }
        _ => {
            // Fold in the rows that would sit just outside the cycle.
            let top = f2_row(m as i64, width);
            let bottom = f2_row(-1, width);
            check_disjoint(&rows[0], &top, "first row union")?;
            check_disjoint(&rows[m - 1], &bottom, "last row union")?;
            rows[0] = union_cells(&rows[0], &top);
            rows[m - 1] = union_cells(&rows[m - 1], &bottom);
            Assignment::from_rows(2, &rows)?
        }
    };
    debug_assert_eq!(a.dims(), dims);
    let excess = width - n;
    if excess > 0 {
        let Some(j) = (0..3).find(|&j| {
            let (x, y) = (a.column(j), a.column(j + 1));
            x.iter().zip(&y).all(|(p, q)| p.is_disjoint(*q))
        }) else {
            return Err(Error::Construction(format!("PROP47 on {m}x{n}: no disjoint column pair")));
        };
        if excess == 2 {
            a = merge_cols_disjoint(&a, (j + 3) % width)?;
        }
        a = merge_cols_disjoint(&a, j)?;
    }
    Ok(a)
}

/// The best closed-form construction for `(m, n)`, or the given recipe.
///
/// Without a recipe the cheapest of `UB1(m,n)`, `UB2(m,n)`, `UB1(n,m)`,
/// `UB2(n,m)` is built, ties going to the earlier one in that list.
pub fn construct_upper(m: usize, n: usize, recipe: Option<&Recipe>) -> Result<Construction> {
    Dims::new(m, n, 2)?;
    if let Some(r) = recipe {
        return construct(r, m, n);
    }
    let ub = bounds::upper_bounds(m, n)?;
    let c = construct(&Recipe::for_bound(ub.best_kind, m, n), m, n)?;
    if c.claimed_weight != ub.best {
        return Err(Error::Construction(format!(
            "{} on {m}x{n} claims {} but the best bound is {}",
            c.recipe, c.claimed_weight, ub.best
        )));
    }
    Ok(c)
}

/// Grid rows as text, one token per cell.
pub fn render_rows(a: &Assignment) -> Vec<String> {
    a.rows().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect()
}
