//! 2x2 integer matrices acting on row vectors.
//!
//! Throughout the crate lattice bases are stored as matrix *rows*, and a
//! basis change acts by left multiplication: the sublattice with matrix `H`
//! inside a lattice with basis rows `B` has basis rows `H * B`.

use alloc::vec::Vec;

use crate::arith::ext_gcd;
use crate::Int;

/// A 2x2 integer matrix, row major.
pub type Mat2 = [[Int; 2]; 2];

/// The identity matrix.
pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];

/// Determinant.
pub fn det(m: &Mat2) -> Int {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Matrix product `a * b`.
pub fn mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// Transpose.
pub fn transpose(m: &Mat2) -> Mat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

/// Adjugate: `adj(m) * m = m * adj(m) = det(m) * I`.
pub fn adjugate(m: &Mat2) -> Mat2 {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

/// Row vector times matrix.
pub fn vec_mul(v: [Int; 2], m: &Mat2) -> [Int; 2] {
    [
        v[0] * m[0][0] + v[1] * m[1][0],
        v[0] * m[0][1] + v[1] * m[1][1],
    ]
}

/// Hermite normal form of the row span of `rows` (which must span a finite
/// index subgroup of Z^2): the unique basis
///
/// ```text
/// [ d1  e ]
/// [  0 d2 ]
/// ```
///
/// with `d1, d2 > 0` and `0 <= e < d2`.
pub fn row_hnf(rows: &[[Int; 2]]) -> Mat2 {
    // Combine rows until a single row carries the gcd of the first column,
    // clearing the first entry of every other row along the way.
    let mut pivot: Option<[Int; 2]> = None;
    let mut rest: Vec<[Int; 2]> = Vec::new();
    for &r in rows {
        match pivot {
            None => pivot = Some(r),
            Some(p) => {
                if r[0] == 0 {
                    rest.push(r);
                    continue;
                }
                let (g, x, y) = ext_gcd(p[0], r[0]);
                let combined = [g, x * p[1] + y * r[1]];
                // p and r reduced against the new pivot both have first entry 0.
                rest.push([0, (p[0] / g) * r[1] - (r[0] / g) * p[1]]);
                pivot = Some(combined);
            }
        }
    }
    let mut p = pivot.expect("row_hnf needs at least one row");
    if p[0] < 0 {
        p = [-p[0], -p[1]];
    }
    let mut d2: Int = 0;
    for r in rest {
        let (g, _, _) = ext_gcd(d2, r[1]);
        d2 = g;
    }
    assert!(p[0] > 0 && d2 > 0, "rows do not span a finite index subgroup");
    // Reduce the top-right entry modulo the second pivot.
    p[1] = p[1].rem_euclid(d2);
    [[p[0], p[1]], [0, d2]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_det_mul_adjugate() {
        let a = [[2, 3], [1, 4]];
        let b = [[0, 1], [-1, 0]];
        assert_eq!(det(&a), 5);
        assert_eq!(det(&mul(&a, &b)), 5 * det(&b));
        let adj = adjugate(&a);
        assert_eq!(mul(&a, &adj), [[5, 0], [0, 5]]);
        assert_eq!(mul(&adj, &a), [[5, 0], [0, 5]]);
    }

    #[test]
    fn test_vec_mul_row_convention() {
        // Row vector convention: e1 * M = first row of M.
        let m = [[7, 8], [9, 10]];
        assert_eq!(vec_mul([1, 0], &m), [7, 8]);
        assert_eq!(vec_mul([0, 1], &m), [9, 10]);
    }

    #[test]
    fn test_row_hnf_canonical() {
        // Index-11 sublattice generated by (2,-1) and (-11,11).
        assert_eq!(row_hnf(&[[2, -1], [-11, 11]]), [[1, 5], [0, 11]]);
        // Already in HNF.
        assert_eq!(row_hnf(&[[1, 5], [0, 11]]), [[1, 5], [0, 11]]);
        // Redundant generating sets collapse to the same basis.
        assert_eq!(row_hnf(&[[2, -1], [-11, 11], [2, 10], [0, 11]]), [[1, 5], [0, 11]]);
        // Diagonal shape.
        assert_eq!(row_hnf(&[[7, 0], [0, 1]]), [[7, 0], [0, 1]]);
        // Negative determinant input still yields positive pivots.
        assert_eq!(det(&row_hnf(&[[0, 1], [3, 0]])), 3);
    }

    #[test]
    #[should_panic]
    fn test_row_hnf_rejects_rank_deficient() {
        row_hnf(&[[2, 4], [1, 2]]);
    }
}
