//! Matrix rank over prime fields.

/// Rank over GF(2) of a matrix given as bit-packed rows of `cols` columns.
pub(crate) fn rank_gf2(rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        debug_assert_eq!(row.len(), words);
        while let Some(col) = lowest_bit(&row) {
            match &pivots[col] {
                Some(p) => {
                    for (r, q) in row.iter_mut().zip(p).skip(col / 64) {
                        *r ^= q;
                    }
                }
                None => {
                    pivots[col] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over GF(p), `p` an odd prime below 2^16, of a matrix given by
/// sparse rows of `(column, value)` entries with values already reduced.
pub(crate) fn rank_mod_p(rows: Vec<Vec<(usize, u32)>>, cols: usize, p: u32) -> usize {
    let p64 = p as u64;
    let mut pivots: Vec<Option<Vec<u32>>> = vec![None; cols];
    let mut rank = 0;
    let mut dense = vec![0u32; cols];
    for row in rows {
        dense.iter_mut().for_each(|x| *x = 0);
        let mut first = cols;
        for (c, v) in row {
            dense[c] = v % p;
            if dense[c] != 0 {
                first = first.min(c);
            }
        }
        let mut col = first;
        while col < cols {
            if dense[col] == 0 {
                col += 1;
                continue;
            }
            match &pivots[col] {
                Some(piv) => {
                    // pivot rows are normalized to 1 at their pivot column
                    let factor = dense[col] as u64;
                    for c in col..cols {
                        if piv[c] != 0 {
                            let sub = factor * piv[c] as u64 % p64;
                            dense[c] = ((dense[c] as u64 + p64 - sub) % p64) as u32;
                        }
                    }
                    col += 1;
                }
                None => {
                    let inv = inverse(dense[col] as u64, p64);
                    let normalized: Vec<u32> = dense.iter().map(|&x| (x as u64 * inv % p64) as u32).collect();
                    pivots[col] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn inverse(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut exp) = (1u64, a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}
