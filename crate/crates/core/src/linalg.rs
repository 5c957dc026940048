//! Dense Gaussian elimination over any [`Scalar`]; sizes here are ≤ 6.

use crate::scalar::Scalar;

/// Solves `a·x = b`. Pivots on the largest magnitude, which in exact mode
/// only needs to be non-zero. Returns `None` for singular systems.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i][col]
                .magnitude()
                .partial_cmp(&a[j][col].magnitude())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].is_zero() {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = S::one() / a[col][col];
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col] * inv;
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Inverse of a 2×2 matrix given as `[[a,b],[c,d]]`.
pub fn inverse2(m: [[f64; 2]; 2]) -> Option<[[f64; 2]; 2]> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    Some([
        [m[1][1] / det, -m[0][1] / det],
        [-m[1][0] / det, m[0][0] / det],
    ])
}
