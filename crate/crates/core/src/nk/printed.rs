//! The structure tables as they are usually printed for this manifold,
//! kept verbatim (including known transcription slips) so the harness can
//! compare them against independently derived values.

use crate::scalar::Scalar;

use super::point::{FrameCoeffs, FrameIndex};

/// Printed brackets `[X_i, X_j]` for `i < j`, as multiples of the frame.
/// The `[E2,E3]` line reads `−2E3`; the commutator gives `−2E1`.
const BRACKETS: [(usize, usize, [i64; 6]); 6] = [
    (0, 1, [0, 0, 2, 0, 0, 0]),
    (0, 2, [0, 2, 0, 0, 0, 0]),
    (1, 2, [0, 0, -2, 0, 0, 0]),
    (3, 4, [0, 0, 0, 0, 0, 2]),
    (3, 5, [0, 0, 0, 0, 2, 0]),
    (4, 5, [0, 0, 0, -2, 0, 0]),
];

/// `∇̃_{X_i} X_j`, numerators over 3.
const LEVI_CIVITA: [[[i64; 6]; 6]; 6] = [
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 3, 0, 0, 0],
        [0, 3, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 1],
        [0, -1, 0, 0, 1, 0],
    ],
    [
        [0, 0, -3, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-3, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, -1],
        [0, 0, 0, 0, 0, 0],
        [1, 0, 0, -1, 0, 0],
    ],
    [
        [0, -3, 0, 0, 0, 0],
        [3, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, -1, 0],
        [-1, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, -1],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 3],
        [0, 0, 0, 0, 3, 0],
    ],
    [
        [0, 0, -1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, -3],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, -3, 0, 0],
    ],
    [
        [0, -1, 0, 0, 1, 0],
        [1, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -3, 0],
        [0, 0, 0, 3, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
];

/// `(∇̃_{X_i} J) X_j` as multiples of `2/(3√3)`; `None` marks the entry
/// printed with an empty right-hand side.
const NABLA_J: [[Option<[i64; 6]>; 6]; 6] = [
    [
        Some([0, 0, 0, 0, 0, 0]),
        Some([0, 0, -1, 0, 0, -2]),
        Some([0, -1, 0, 0, -2, 0]),
        None,
        Some([0, 0, -1, 0, 0, 1]),
        Some([0, -1, 0, 0, 1, 0]),
    ],
    [
        Some([0, 0, 1, 0, 0, 2]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([1, 0, 0, 2, 0, 0]),
        Some([0, 0, 1, 0, 0, -1]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([1, 0, 0, -1, 0, 0]),
    ],
    [
        Some([0, 1, 0, 0, 2, 0]),
        Some([-1, 0, 0, -2, 0, 0]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([0, 1, 0, 0, -1, 0]),
        Some([-1, 0, 0, 1, 0, 0]),
        Some([0, 0, 0, 0, 0, 0]),
    ],
    [
        Some([0, 0, 0, 0, 0, 0]),
        Some([0, 0, -1, 0, 0, 1]),
        Some([0, -1, 0, 0, 1, 0]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([0, 0, 2, 0, 0, 1]),
        Some([0, 2, 0, 0, 1, 0]),
    ],
    [
        Some([0, 0, 1, 0, 0, -1]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([1, 0, 0, -1, 0, 0]),
        Some([0, 0, -2, 0, 0, -1]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([-2, 0, 0, -1, 0, 0]),
    ],
    [
        Some([0, 1, 0, 0, -1, 0]),
        Some([-1, 0, 0, 1, 0, 0]),
        Some([0, 0, 0, 0, 0, 0]),
        Some([0, -2, 0, 0, -1, 0]),
        Some([2, 0, 0, 1, 0, 0]),
        Some([0, 0, 0, 0, 0, 0]),
    ],
];

fn coeffs<S: Scalar>(row: &[i64; 6], num: S) -> FrameCoeffs<S> {
    FrameCoeffs(row.map(|n| S::from_int(n) * num))
}

/// The printed bracket `[X_i, X_j]`, extended by antisymmetry.
pub fn printed_bracket<S: Scalar>(i: FrameIndex, j: FrameIndex) -> FrameCoeffs<S> {
    let (a, b) = (i.index(), j.index());
    for (p, q, row) in BRACKETS.iter() {
        if (a, b) == (*p, *q) {
            return coeffs(row, S::one());
        }
        if (a, b) == (*q, *p) {
            return -coeffs::<S>(row, S::one());
        }
    }
    FrameCoeffs::zero()
}

/// The printed Levi-Civita entry `∇̃_{X_i} X_j`.
pub fn printed_levi_civita<S: Scalar>(i: FrameIndex, j: FrameIndex) -> FrameCoeffs<S> {
    coeffs(&LEVI_CIVITA[i.index()][j.index()], S::from_ratio(1, 3))
}

/// The printed `(∇̃_{X_i} J) X_j`, or `None` for the blank entry.
pub fn printed_nabla_j<S: Scalar>(i: FrameIndex, j: FrameIndex) -> Option<FrameCoeffs<S>> {
    let k = S::from_ratio(2, 3) / S::sqrt3();
    NABLA_J[i.index()][j.index()].map(|row| coeffs(&row, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QSqrt3;
    use FrameIndex::*;

    #[test]
    fn blank_entry_is_the_only_gap() {
        let blanks: Vec<_> = FrameIndex::ALL
            .iter()
            .flat_map(|&i| FrameIndex::ALL.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| printed_nabla_j::<QSqrt3>(i, j).is_none())
            .collect();
        assert_eq!(blanks, vec![(E1, F1)]);
    }

    #[test]
    fn bracket_lookup_is_antisymmetric() {
        let a: FrameCoeffs<QSqrt3> = printed_bracket(E1, E2);
        let b: FrameCoeffs<QSqrt3> = printed_bracket(E2, E1);
        assert!((a + b).is_zero());
        assert!(printed_bracket::<QSqrt3>(E1, F2).is_zero());
    }
}
