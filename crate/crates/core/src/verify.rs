//! Rainbow-domination checks.

use alloc::vec::Vec;

use crate::grid::{neighbors_unchecked, Assignment, ColorSet};

/// Per-column weights `s_j = Σ_i |f(i, j)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnProfile(pub Vec<u64>);

impl ColumnProfile {
    pub fn of(a: &Assignment) -> ColumnProfile {
        let n = a.dims().n;
        let mut sums = alloc::vec![0u64; n];
        for row in a.rows() {
            for (s, c) in sums.iter_mut().zip(row) {
                *s += u64::from(c.len());
            }
        }
        ColumnProfile(sums)
    }

    pub fn sums(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// An empty vertex whose neighborhood misses some colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: (usize, usize),
    pub missing: ColorSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub weight: u64,
    pub violations: Vec<Violation>,
    pub profile: ColumnProfile,
    /// Column-sum inequality holds everywhere; `None` unless `k = 2`.
    pub lemma33_ok: Option<bool>,
}

/// Checks every empty vertex and reports all of them that are not rainbow
/// dominated, in row-major order.
pub fn verify(a: &Assignment) -> VerificationReport {
    let dims = a.dims();
    let full = dims.full();
    let mut violations = Vec::new();
    for i in 0..dims.m {
        for j in 0..dims.n {
            if !a.get(i, j).is_empty() {
                continue;
            }
            let seen = neighbors_unchecked(i, j, dims.m, dims.n)
                .iter()
                .fold(ColorSet::EMPTY, |acc, &(x, y)| acc.union(a.get(x, y)));
            let missing = full.difference(seen);
            if !missing.is_empty() {
                violations.push(Violation { vertex: (i, j), missing });
            }
        }
    }
    let profile = ColumnProfile::of(a);
    let lemma33_ok = (dims.k_colors == 2).then(|| lemma33_check(&profile, dims.m).is_empty());
    VerificationReport { valid: violations.is_empty(), weight: profile.total(), violations, profile, lemma33_ok }
}

/// Columns `j` (cyclic) with `s_{j-1} + s_{j+1} < 2m - 4 s_j`.
///
/// Any 2-rainbow dominating function satisfies the inequality in every
/// column: the empty cells of a column demand at least `2(m - s_j)` colors,
/// the column itself supplies at most `2 s_j` of them vertically and the
/// rest must come from the two side columns.
pub fn lemma33_check(profile: &ColumnProfile, m: usize) -> Vec<usize> {
    let s = profile.sums();
    let n = s.len();
    let m = m as i64;
    (0..n)
        .filter(|&j| {
            let side = s[(j + n - 1) % n] as i64 + s[(j + 1) % n] as i64;
            side < 2 * m - 4 * s[j] as i64
        })
        .collect()
}
