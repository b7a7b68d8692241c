use alloc::vec::Vec;

use super::{capacity, check_dims, Budget};
use crate::grid::neighbors_unchecked;
use crate::Result;

/// `γ(C_m □ C_n □ K_2)` by trying vertex subsets in order of size.
///
/// Vertex `(i, j, layer)` has index `layer·mn + i·n + j`.
pub fn gamma_prism_with(m: usize, n: usize, budget: &Budget) -> Result<u64> {
    check_dims(m, n, 2)?;
    let mn = m * n;
    let total = 2 * mn;
    let limit = budget.prism_vertices.min(63);
    if total > limit {
        return Err(capacity("prism vertices", total as u64, limit as u64));
    }
    let closed: Vec<u64> = (0..total)
        .map(|v| {
            let (layer, cell) = (v / mn, v % mn);
            let base = layer * mn;
            let mut mask = 1u64 << v | 1u64 << ((1 - layer) * mn + cell);
            for (i, j) in neighbors_unchecked(cell / n, cell % n, m, n) {
                mask |= 1u64 << (base + i * n + j);
            }
            mask
        })
        .collect();
    let all = (1u64 << total) - 1;
    for size in 1..=total {
        // Gosper's hack walks all subsets of the given size.
        let mut set: u64 = (1u64 << size) - 1;
        while set <= all {
            let mut covered = 0u64;
            let mut rest = set;
            while rest != 0 {
                covered |= closed[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if covered == all {
                return Ok(size as u64);
            }
            let c = set & set.wrapping_neg();
            let r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set dominates")
}
