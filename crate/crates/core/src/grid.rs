//! Torus geometry and assignments of color sets to its vertices.
//!
//! Vertices are `(i, j)` with `0 <= i < m` (row) and `0 <= j < n` (column);
//! both coordinates wrap around. A *column* is the set of `m` vertices
//! `{(0, j), .., (m - 1, j)}`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest rainbow order handled here.
pub const MAX_COLORS: usize = 2;

/// A subset of `{1, .., k}` stored as a bitmask (bit `c - 1` for color `c`).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, .., k}`.
    pub const fn full(k: usize) -> ColorSet {
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub const fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits)
    }

    /// `{color}`; colors are 1-based.
    pub fn singleton(color: u8) -> ColorSet {
        debug_assert!((1..=8).contains(&color));
        ColorSet(1 << (color - 1))
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, color: u8) -> bool {
        (1..=8).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    pub const fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub const fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: ColorSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member colors in ascending order.
    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=8u8).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

/// Compact token: ascending color digits, `0` for the empty set.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for c in self.colors() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Shape of `C_m □ C_n` together with the rainbow order `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
    pub k_colors: usize,
}

impl Dims {
    pub fn new(m: usize, n: usize, k_colors: usize) -> Result<Dims> {
        if m < 3 || n < 3 || !(1..=MAX_COLORS).contains(&k_colors) {
            return Err(Error::InvalidDims { m, n, k: k_colors });
        }
        Ok(Dims { m, n, k_colors })
    }

    pub fn vertices(&self) -> usize {
        self.m * self.n
    }

    pub fn full(&self) -> ColorSet {
        ColorSet::full(self.k_colors)
    }

    pub fn transpose(&self) -> Dims {
        Dims { m: self.n, n: self.m, k_colors: self.k_colors }
    }

    /// Row-major index of `(i, j)`.
    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.m {
            return Err(Error::OutOfRange { what: "row", index: i, len: self.m });
        }
        if j >= self.n {
            return Err(Error::OutOfRange { what: "column", index: j, len: self.n });
        }
        Ok(())
    }
}

/// The four neighbors of `(i, j)`: up, down, left, right.
pub fn neighbors(i: usize, j: usize, dims: &Dims) -> Result<[(usize, usize); 4]> {
    dims.check(i, j)?;
    Ok(neighbors_unchecked(i, j, dims.m, dims.n))
}

#[inline]
pub(crate) fn neighbors_unchecked(i: usize, j: usize, m: usize, n: usize) -> [(usize, usize); 4] {
    [((i + m - 1) % m, j), ((i + 1) % m, j), (i, (j + n - 1) % n), (i, (j + 1) % n)]
}

/// An `m × n` grid of color sets, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    dims: Dims,
    cells: Vec<ColorSet>,
}

impl Assignment {
    pub fn empty(dims: Dims) -> Assignment {
        Assignment { dims, cells: alloc::vec![ColorSet::EMPTY; dims.vertices()] }
    }

    pub fn from_fn(dims: Dims, mut f: impl FnMut(usize, usize) -> ColorSet) -> Assignment {
        let full = dims.full();
        let mut cells = Vec::with_capacity(dims.vertices());
        for i in 0..dims.m {
            for j in 0..dims.n {
                cells.push(f(i, j).intersection(full));
            }
        }
        Assignment { dims, cells }
    }

    /// Row-major cells; fails on a wrong count or a color above `k`.
    pub fn from_cells(dims: Dims, cells: Vec<ColorSet>) -> Result<Assignment> {
        if cells.len() != dims.vertices() {
            return Err(Error::Input(alloc::format!(
                "expected {} cells for a {}x{} grid, got {}",
                dims.vertices(),
                dims.m,
                dims.n,
                cells.len()
            )));
        }
        let full = dims.full();
        if let Some(pos) = cells.iter().position(|c| !c.is_subset(full)) {
            return Err(Error::Input(alloc::format!(
                "cell ({}, {}) uses a color above k={}",
                pos / dims.n,
                pos % dims.n,
                dims.k_colors
            )));
        }
        Ok(Assignment { dims, cells })
    }

    /// Builds an assignment from rows of equal length.
    pub fn from_rows(k_colors: usize, rows: &[Vec<ColorSet>]) -> Result<Assignment> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let dims = Dims::new(m, n, k_colors)?;
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Input(alloc::format!("row {bad} has {} cells, expected {n}", rows[bad].len())));
        }
        Assignment::from_cells(dims, rows.concat())
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn cells(&self) -> &[ColorSet] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ColorSet {
        self.cells[self.dims.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: ColorSet) {
        let idx = self.dims.index(i, j);
        self.cells[idx] = c.intersection(self.dims.full());
    }

    pub fn row(&self, i: usize) -> &[ColorSet] {
        let n = self.dims.n;
        &self.cells[i * n..(i + 1) * n]
    }

    pub fn column(&self, j: usize) -> Vec<ColorSet> {
        (0..self.dims.m).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ColorSet]> {
        self.cells.chunks(self.dims.n)
    }

    /// `w(f)`: total number of colors used.
    pub fn weight(&self) -> u64 {
        self.cells.iter().map(|c| u64::from(c.len())).sum()
    }

    pub fn transpose(&self) -> Assignment {
        let dims = self.dims.transpose();
        Assignment::from_fn(dims, |i, j| self.get(j, i))
    }

    /// Cyclic shift: cell `(i, j)` moves to `(i + di, j + dj)`.
    pub fn shifted(&self, di: usize, dj: usize) -> Assignment {
        let Dims { m, n, .. } = self.dims;
        Assignment::from_fn(self.dims, |i, j| self.get((i + m - di % m) % m, (j + n - dj % n) % n))
    }

    /// The same cells under a larger rainbow order.
    pub fn with_colors(&self, k_colors: usize) -> Result<Assignment> {
        let dims = Dims::new(self.dims.m, self.dims.n, k_colors)?;
        Assignment::from_cells(dims, self.cells.clone())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Assignment {}x{} k={}", self.dims.m, self.dims.n, self.dims.k_colors)?;
        for row in self.rows() {
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
