//! Dense Gaussian elimination over F_q.

use crate::gf::{Fe, Field};

pub type Matrix = Vec<Vec<Fe>>;

/// Reduced row echelon form of the span of `rows`; returns the nonzero rows
/// and their pivot columns.
pub fn rref(field: &Field, rows: &[Vec<Fe>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(sel) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = field.inv(m[rank][col]).unwrap();
        for c in m[rank].iter_mut() {
            *c = field.mul(*c, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (c, &pv) in row.iter_mut().zip(&pivot_row) {
                *c = field.sub(*c, field.mul(factor, pv));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

/// Basis of `{a : a M = 0}` for an `rows x cols` matrix `M`.
pub fn left_kernel(field: &Field, m: &[Vec<Fe>]) -> Matrix {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    // a M = 0  <=>  M^T a^T = 0
    let transposed: Matrix = (0..cols).map(|c| (0..rows).map(|r| m[r][c]).collect()).collect();
    let (reduced, pivots) = rref(field, &transposed);
    let free: Vec<usize> = (0..rows).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fe::ZERO; rows];
            v[fc] = field.one();
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul(field: &Field, a: &[Fe], m: &[Vec<Fe>]) -> Vec<Fe> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![Fe::ZERO; cols];
    for (&coef, row) in a.iter().zip(m) {
        if coef.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(coef, x));
        }
    }
    out
}

pub fn rank(field: &Field, rows: &[Vec<Fe>]) -> usize {
    rref(field, rows).0.len()
}
