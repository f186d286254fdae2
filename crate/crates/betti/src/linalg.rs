//! Dense exact Gaussian elimination over the rationals.
//!
//! Desk-scale sizes only (a few hundred rows); plain elimination with a
//! small-pivot heuristic keeps coefficient growth manageable.

use num_traits::Zero;

use crate::rational::Rational;

/// Row-reduces `rows` in place to reduced row echelon form.
/// Returns the pivot column indices in row order; zero rows are dropped.
pub(crate) fn rref(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        // prefer a pivot with small numerator and denominator
        let mut best: Option<(usize, u64)> = None;
        for r in row..rows.len() {
            let v = &rows[r][col];
            if v.is_zero() {
                continue;
            }
            let size = (v.numer().bits() + v.denom().bits()) as u64;
            if best.map_or(true, |(_, s)| size < s) {
                best = Some((r, size));
            }
        }
        let Some((r, _)) = best else { continue };
        rows.swap(row, r);
        let inv = rows[row][col].clone().recip();
        for v in rows[row].iter_mut() {
            *v *= &inv;
        }
        for other in 0..rows.len() {
            if other == row || rows[other][col].is_zero() {
                continue;
            }
            let factor = rows[other][col].clone();
            for c in col..cols {
                let delta = &factor * &rows[row][c];
                rows[other][c] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

/// Rank of the matrix spanned by `rows`.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    rref(&mut rows, cols).len()
}

/// Rank of a sparse matrix given as per-column entry lists.
pub(crate) fn rank_sparse_columns(columns: &[Vec<(usize, Rational)>], nrows: usize) -> usize {
    if nrows == 0 || columns.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = columns
        .iter()
        .map(|col| {
            let mut row = vec![Rational::zero(); nrows];
            for (r, v) in col {
                row[*r] += v;
            }
            row
        })
        .collect();
    rank(rows, nrows)
}
