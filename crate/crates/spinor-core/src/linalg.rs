//! Exact linear algebra over the Gaussian rationals: rank, reduced row
//! echelon form, and kernel bases. Pivot choice is first-nonzero, which keeps
//! every reduced basis deterministic.

use alloc::vec::Vec;

use crate::scalar::GaussianRational;

pub type Row = Vec<GaussianRational>;

/// Reduced row echelon form in place. Returns the pivot column list.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let mut piv = None;
        for r in rank..nrows {
            if !rows[r][col].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv();
        for c in col..ncols {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] -= &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut work: Vec<Row> = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel of the matrix (rows are equations).
/// Free variables are set to 1 in ascending column order, so the output
/// is deterministic.
pub fn kernel_basis(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut work: Vec<Row> = rows.to_vec();
    let pivots = rref(&mut work);
    let mut is_pivot = alloc::vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = alloc::vec![GaussianRational::zero(); ncols];
        v[free] = GaussianRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&work[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Rank of the joint span of two row families without mutating either.
pub fn joint_rank(a: &[Row], b: &[Row]) -> usize {
    let mut all: Vec<Row> = a.to_vec();
    all.extend(b.iter().cloned());
    rank(&all)
}
