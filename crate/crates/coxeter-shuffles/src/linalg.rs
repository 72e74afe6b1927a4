//! Small dense exact-rational linear algebra used by the identity checks:
//! rank, solving for linear combinations, and square solves. Everything is
//! Gaussian elimination over `BigRational`; matrices here are tiny (at most a
//! few dozen rows) even when the vectors are long.

use num::rational::BigRational;
use num::traits::Zero;

/// Reduce in place to row echelon form; returns the rank.
pub fn row_echelon(rows: &mut [Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let pivot = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// Rank of a list of row vectors.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    row_echelon(&mut rows)
}

/// Express `target` as a linear combination of `rows`, if possible.
/// Returns the coefficients in row order.
pub fn solve_combination(
    rows: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    // Solve A^T x = target where the rows of A are the given vectors:
    // eliminate on the augmented system whose columns are the rows.
    let m = rows.len();
    let dim = target.len();
    let mut aug: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| {
            let mut row: Vec<BigRational> = rows.iter().map(|r| r[c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..m {
        let Some(src) = (pivot_row..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, src);
        let pivot = aug[pivot_row][col].clone();
        for x in aug[pivot_row].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..aug.len() {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=m {
                    let delta = &factor * &aug[pivot_row][c];
                    aug[r][c] = &aug[r][c] - delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == aug.len() {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for r in pivot_row..aug.len() {
        if !aug[r][m].is_zero() {
            return None;
        }
    }
    let mut solution = vec![BigRational::zero(); m];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = aug[r][m].clone();
    }
    Some(solution)
}

/// Solve the square system A x = b exactly; `None` if singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = b.len();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row = a[r].clone();
            row.push(b[r].clone());
            row
        })
        .collect();
    for col in 0..n {
        let src = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, src);
        let pivot = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &aug[col][c];
                    aug[r][c] = &aug[r][c] - delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}
