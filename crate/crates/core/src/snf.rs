//! Exact rank and elementary divisors of sparse integer matrices.
//!
//! Elimination runs in two phases. Unit (±1) pivots are removed sparsely,
//! chosen by a Markowitz minimum-fill estimate; each such pivot is a
//! unimodular row/column operation, so rank and divisors are preserved.
//! Whatever survives without a unit entry is finished by a dense Smith
//! normal form. All arithmetic is checked 128-bit; overflow is reported,
//! never wrapped.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Error, Result};

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// A sparse integer matrix in column-major form with a row-occupancy
/// index, supporting destructive elimination.
pub(crate) struct SparseIntMatrix {
    cols: Vec<BTreeMap<usize, i128>>,
    row_occ: Vec<BTreeSet<usize>>,
}

impl SparseIntMatrix {
    pub(crate) fn new(rows: usize, cols: usize) -> SparseIntMatrix {
        SparseIntMatrix { cols: vec![BTreeMap::new(); cols], row_occ: vec![BTreeSet::new(); rows] }
    }

    /// Accumulates `v` into entry `(r, c)`.
    pub(crate) fn add_entry(&mut self, r: usize, c: usize, v: i128) {
        if v == 0 {
            return;
        }
        let slot = self.cols[c].entry(r).or_insert(0);
        *slot += v;
        if *slot == 0 {
            self.cols[c].remove(&r);
            self.row_occ[r].remove(&c);
        } else {
            self.row_occ[r].insert(c);
        }
    }

    /// Consumes the matrix and returns its rank together with the
    /// elementary divisors greater than 1, in divisibility order.
    pub(crate) fn rank_and_divisors(mut self) -> Result<(usize, Vec<u64>)> {
        let mut rank = 0usize;
        while let Some((r, c)) = self.best_unit_pivot() {
            self.eliminate_unit(r, c)?;
            rank += 1;
        }
        let (dense_rank, divisors) = self.finish_dense()?;
        Ok((rank + dense_rank, divisors))
    }

    /// The ±1 entry minimizing the Markowitz fill estimate
    /// `(col_nnz − 1) · (row_nnz − 1)`.
    fn best_unit_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (c, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            let col_cost = col.len() - 1;
            for (&r, &v) in col {
                if v != 1 && v != -1 {
                    continue;
                }
                let cost = col_cost * (self.row_occ[r].len() - 1);
                if best.is_none_or(|(bcost, _, _)| cost < bcost) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// Pivots on the unit entry at `(r, c)`: clears row `r` from all other
    /// columns, then drops row `r` and column `c`.
    fn eliminate_unit(&mut self, r: usize, c: usize) -> Result<()> {
        let s = self.cols[c][&r];
        debug_assert!(s == 1 || s == -1);
        let pivot_col: Vec<(usize, i128)> =
            self.cols[c].iter().map(|(&rr, &vv)| (rr, vv)).collect();
        let touched: Vec<usize> = self.row_occ[r].iter().copied().filter(|&cj| cj != c).collect();
        for cj in touched {
            let f = self.cols[cj][&r];
            // col_j ← col_j − f·s · col_c zeroes the entry in row r.
            let mult = mul(-f, s)?;
            for &(rr, vv) in &pivot_col {
                let delta = mul(mult, vv)?;
                let slot = self.cols[cj].entry(rr).or_insert(0);
                *slot = add(*slot, delta)?;
                if *slot == 0 {
                    self.cols[cj].remove(&rr);
                    self.row_occ[rr].remove(&cj);
                } else {
                    self.row_occ[rr].insert(cj);
                }
            }
        }
        // Remaining entries of column c die by implicit row operations
        // (row r is zero outside column c, so they cause no fill).
        for (rr, _) in pivot_col {
            self.row_occ[rr].remove(&c);
        }
        self.cols[c].clear();
        Ok(())
    }

    /// Packs the surviving entries into a dense block and runs Smith
    /// normal form on it.
    fn finish_dense(self) -> Result<(usize, Vec<u64>)> {
        let mut live_rows: Vec<usize> = Vec::new();
        let mut live_cols: Vec<usize> = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            if !col.is_empty() {
                live_cols.push(c);
            }
        }
        for (r, occ) in self.row_occ.iter().enumerate() {
            if !occ.is_empty() {
                live_rows.push(r);
            }
        }
        if live_cols.is_empty() {
            return Ok((0, Vec::new()));
        }
        let rpos: BTreeMap<usize, usize> =
            live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut block = vec![vec![0i128; live_cols.len()]; live_rows.len()];
        for (j, &c) in live_cols.iter().enumerate() {
            for (&r, &v) in &self.cols[c] {
                block[rpos[&r]][j] = v;
            }
        }
        let diag = dense_smith(&mut block)?;
        let rank = diag.len();
        let mut divisors = Vec::new();
        for d in diag {
            let d = u64::try_from(d.unsigned_abs()).map_err(|_| Error::Overflow)?;
            if d > 1 {
                divisors.push(d);
            }
        }
        Ok((rank, divisors))
    }
}

/// In-place dense Smith normal form; returns the nonzero diagonal in
/// divisibility order.
fn dense_smith(m: &mut [Vec<i128>]) -> Result<Vec<i128>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Move a minimal-magnitude nonzero entry to (t, t).
        let Some((pi, pj)) = min_entry(m, t) else {
            break;
        };
        m.swap(t, pi);
        swap_cols(m, t, pj);
        'reduce: loop {
            let p = m[t][t];
            debug_assert_ne!(p, 0);
            // Clear column t; a nonzero remainder yields a smaller pivot.
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t].checked_div(p).ok_or(Error::Overflow)?;
                    row_sub(m, i, t, q)?;
                    if m[i][t] != 0 {
                        m.swap(t, i);
                        continue 'reduce;
                    }
                }
            }
            // Clear row t the same way.
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j].checked_div(p).ok_or(Error::Overflow)?;
                    col_sub(m, j, t, q)?;
                    if m[t][j] != 0 {
                        swap_cols(m, t, j);
                        continue 'reduce;
                    }
                }
            }
            // Enforce divisibility of the remaining block by the pivot.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % p != 0 {
                        let (head, tail) = m.split_at_mut(i);
                        for (a, b) in head[t].iter_mut().zip(&tail[0]).skip(t) {
                            *a = add(*a, *b)?;
                        }
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        diag.push(m[t][t]);
        t += 1;
    }
    Ok(diag)
}

fn min_entry(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.is_none_or(|(bv, _, _)| v.abs() < bv) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// `row_i ← row_i − q·row_t`.
fn row_sub(m: &mut [Vec<i128>], i: usize, t: usize, q: i128) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for j in 0..m[t].len() {
        let d = mul(q, m[t][j])?;
        m[i][j] = add(m[i][j], -d)?;
    }
    Ok(())
}

/// `col_j ← col_j − q·col_t`.
fn col_sub(m: &mut [Vec<i128>], j: usize, t: usize, q: i128) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        let d = mul(q, row[t])?;
        row[j] = add(row[j], -d)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize, i128)]) -> SparseIntMatrix {
        let mut m = SparseIntMatrix::new(rows, cols);
        for &(r, c, v) in entries {
            m.add_entry(r, c, v);
        }
        m
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(from_entries(3, 3, &[]).rank_and_divisors().unwrap(), (0, vec![]));
    }

    #[test]
    fn diagonal_2_3_has_divisor_6() {
        let m = from_entries(2, 2, &[(0, 0, 2), (1, 1, 3)]);
        assert_eq!(m.rank_and_divisors().unwrap(), (2, vec![6]));
    }

    #[test]
    fn diagonal_2_4_keeps_both_divisors() {
        let m = from_entries(2, 2, &[(0, 0, 2), (1, 1, 4)]);
        assert_eq!(m.rank_and_divisors().unwrap(), (2, vec![2, 4]));
    }

    #[test]
    fn unit_pivot_then_dense_residual() {
        // [[1,2],[3,4]] has determinant -2: divisors (1, 2).
        let m = from_entries(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4)]);
        assert_eq!(m.rank_and_divisors().unwrap(), (2, vec![2]));
    }

    #[test]
    fn rank_deficient_multiples() {
        // [[2,4],[4,8]] has rank 1 with divisor 2.
        let m = from_entries(2, 2, &[(0, 0, 2), (0, 1, 4), (1, 0, 4), (1, 1, 8)]);
        assert_eq!(m.rank_and_divisors().unwrap(), (1, vec![2]));
    }

    #[test]
    fn accumulating_entries_cancels() {
        let m = from_entries(2, 2, &[(0, 0, 1), (0, 0, -1), (1, 1, 1)]);
        assert_eq!(m.rank_and_divisors().unwrap(), (1, vec![]));
    }

    #[test]
    fn wide_unit_matrix() {
        // A 2x4 matrix of all ones has rank 1.
        let entries: Vec<(usize, usize, i128)> =
            (0..2).flat_map(|r| (0..4).map(move |c| (r, c, 1))).collect();
        let m = from_entries(2, 4, &entries);
        assert_eq!(m.rank_and_divisors().unwrap(), (1, vec![]));
    }

    #[test]
    fn divisor_chain_is_in_divisibility_order() {
        // diag(4, 6, 10) has Smith form diag(2, 2, 60).
        let m = from_entries(3, 3, &[(0, 0, 4), (1, 1, 6), (2, 2, 10)]);
        let (rank, divs) = m.rank_and_divisors().unwrap();
        assert_eq!(rank, 3);
        assert_eq!(divs, vec![2, 2, 60]);
        for w in divs.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }
}
