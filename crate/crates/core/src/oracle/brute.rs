use alloc::vec::Vec;

use super::{capacity, check_dims, Budget, Engine, ExactResult};
use crate::grid::{neighbors_unchecked, Assignment, ColorSet};
use crate::Result;

/// Hard ceiling: vertex sets are `u32` masks and codes fit in a `u64`.
const MAX_CELLS: usize = 32;

/// Neighborhood unions of vertex masks, looked up one byte at a time.
struct CoverTable {
    chunks: Vec<[u32; 256]>,
}

impl CoverTable {
    fn new(nb: &[u32]) -> CoverTable {
        let chunks = nb
            .chunks(8)
            .map(|vs| {
                let mut t = [0u32; 256];
                for (byte, slot) in t.iter_mut().enumerate() {
                    *slot = vs.iter().enumerate().filter(|&(b, _)| byte >> b & 1 == 1).fold(0, |acc, (_, &m)| acc | m);
                }
                t
            })
            .collect();
        CoverTable { chunks }
    }

    #[inline]
    fn cover(&self, set: u32) -> u32 {
        self.chunks.iter().enumerate().fold(0, |acc, (c, t)| acc | t[(set >> (8 * c) & 0xff) as usize])
    }
}

/// Even bits of `x`, packed.
#[inline]
fn even_bits(mut x: u64) -> u32 {
    x &= 0x5555_5555_5555_5555;
    x = (x | x >> 1) & 0x3333_3333_3333_3333;
    x = (x | x >> 2) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | x >> 4) & 0x00ff_00ff_00ff_00ff;
    x = (x | x >> 8) & 0x0000_ffff_0000_ffff;
    x = (x | x >> 16) & 0x0000_0000_ffff_ffff;
    x as u32
}

/// Enumerates all `(2^k)^(mn)` assignments in code order (cell `v = i·n + j`
/// occupies bits `k·v .. k·v + k`) and returns the first one of least weight.
pub fn exact_brute_with(m: usize, n: usize, k_colors: usize, budget: &Budget) -> Result<ExactResult> {
    let dims = check_dims(m, n, k_colors)?;
    let cells = m * n;
    let limit = if k_colors == 2 { budget.brute_cells_k2 } else { budget.brute_cells_k1 }.min(MAX_CELLS / k_colors);
    if cells > limit {
        return Err(capacity("brute-force cells", cells as u64, limit as u64));
    }
    let nb: Vec<u32> = (0..cells)
        .map(|v| neighbors_unchecked(v / n, v % n, m, n).iter().fold(0u32, |acc, &(i, j)| acc | 1 << (i * n + j)))
        .collect();
    let table = CoverTable::new(&nb);
    let all: u32 = if cells == 32 { u32::MAX } else { (1u32 << cells) - 1 };

    let valid = |code: u64| -> bool {
        if k_colors == 1 {
            let x = code as u32;
            return (x | table.cover(x)) == all;
        }
        let x1 = even_bits(code);
        let x2 = even_bits(code >> 1);
        let occupied = x1 | x2;
        (occupied | (table.cover(x1) & table.cover(x2))) == all
    };

    let total: u64 = 1u64 << (k_colors * cells);
    let mut best = u32::MAX;
    let mut best_code = 0u64;
    for code in 0..total {
        let w = code.count_ones();
        if w < best && valid(code) {
            best = w;
            best_code = code;
        }
    }

    let mask = (1u64 << k_colors) - 1;
    let witness =
        Assignment::from_fn(dims, |i, j| ColorSet::from_bits((best_code >> (k_colors * (i * n + j)) & mask) as u8));
    Ok(ExactResult { value: u64::from(best), witness, engine: Engine::Brute })
}
