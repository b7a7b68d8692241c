//! Reference values written straight from the known closed forms. Kept
//! apart from the library so the acceptance gate does not grade itself.

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `r2(C_3 x C_n)`.
pub fn c3_formula(n: u64) -> u64 {
    match n % 6 {
        0 => n,
        4 => n + 2,
        _ => n + 1,
    }
}

/// `r2(C_4 x C_n)`.
pub fn c4_formula(n: u64) -> u64 {
    3 * n / 2
        + match n % 8 {
            0 => 0,
            2 | 4 | 5 => 1,
            _ => 2,
        }
}

pub fn lower(m: u64, n: u64) -> u64 {
    ceil_div((2 * m * n + (m % 3) * n).max(2 * m * n + (n % 3) * m), 6)
}

pub fn ub1(m: u64, n: u64) -> Option<u64> {
    (n >= 6).then(|| ceil_div(m, 3) * (n + [0, 1, 1, 1, 2, 1][(n % 6) as usize]))
}

pub fn ub2(m: u64, n: u64) -> Option<u64> {
    (m >= 6).then(|| ceil_div(n, 3) * (m + [0, 2, 2, 2, 2, 1][(m % 6) as usize]))
}

pub fn best_upper(m: u64, n: u64) -> Option<u64> {
    [ub1(m, n), ub2(m, n), ub1(n, m), ub2(n, m)].into_iter().flatten().min()
}

pub fn gap_limit(m: u64, n: u64) -> u64 {
    ceil_div(2 * m + 2 * n + 4, 3)
}

type T = (u64, u64, u64);

/// `(x, y, z)` with `UB1(m, n) = (mn + xn + ym + z) / 3`, by `[m mod 6][n mod 6]`.
pub const UB1_TABLE: [[T; 6]; 6] = [
    [(0, 0, 0), (0, 1, 0), (0, 1, 0), (0, 1, 0), (0, 2, 0), (0, 1, 0)],
    [(2, 0, 0), (2, 1, 2), (2, 1, 2), (2, 1, 2), (2, 2, 4), (2, 1, 2)],
    [(1, 0, 0), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 2), (1, 1, 1)],
    [(0, 0, 0), (0, 1, 0), (0, 1, 0), (0, 1, 0), (0, 2, 0), (0, 1, 0)],
    [(2, 0, 0), (2, 1, 2), (2, 1, 2), (2, 1, 2), (2, 2, 4), (2, 1, 2)],
    [(1, 0, 0), (1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 2, 2), (1, 1, 1)],
];

/// Same for `UB2`.
pub const UB2_TABLE: [[T; 6]; 6] = [
    [(0, 0, 0), (0, 2, 0), (0, 1, 0), (0, 0, 0), (0, 2, 0), (0, 1, 0)],
    [(2, 0, 0), (2, 2, 4), (2, 1, 2), (2, 0, 0), (2, 2, 4), (2, 1, 2)],
    [(2, 0, 0), (2, 2, 4), (2, 1, 2), (2, 0, 0), (2, 2, 4), (2, 1, 2)],
    [(2, 0, 0), (2, 2, 4), (2, 1, 2), (2, 0, 0), (2, 2, 4), (2, 1, 2)],
    [(2, 0, 0), (2, 2, 4), (2, 1, 2), (2, 0, 0), (2, 2, 4), (2, 1, 2)],
    [(1, 0, 0), (1, 2, 2), (1, 1, 1), (1, 0, 0), (1, 2, 2), (1, 1, 1)],
];

pub const WINNERS: [[&str; 6]; 6] = [
    ["=", "UB1(m,n)", "=", "UB2(m,n)", "=", "="],
    ["=", "UB1(m,n)", "=", "UB2(m,n)", "=", "="],
    ["UB1(m,n)", "UB1(m,n)", "UB1(m,n)", ">=<", "UB1(m,n)", "UB1(m,n)"],
    ["UB1(m,n)", "UB1(m,n)", "UB1(m,n)", ">=<", "UB1(m,n)", "UB1(m,n)"],
    ["=", "UB1(m,n)", "=", "UB2(m,n)", "=", "="],
    ["=", "UB1(m,n)", "=", "UB2(m,n)", "=", "="],
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree_with_closed_forms() {
        for m in 6..60u64 {
            for n in 6..60u64 {
                let (mr, nr) = ((m % 6) as usize, (n % 6) as usize);
                for (t, v) in [(UB1_TABLE[mr][nr], ub1(m, n)), (UB2_TABLE[mr][nr], ub2(m, n))] {
                    assert_eq!(Some(m * n + t.0 * n + t.1 * m + t.2), v.map(|v| 3 * v), "({m},{n})");
                }
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!((lower(8, 9), ub1(8, 9), ub2(8, 9), best_upper(8, 9)), (27, Some(30), Some(30), Some(27)));
        assert_eq!(c4_formula(6), 11);
        assert_eq!(c3_formula(10), 12);
    }
}
