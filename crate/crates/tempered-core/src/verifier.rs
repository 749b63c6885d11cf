//! Definition-level verification of tempered perfect forms.
//!
//! Everything else in this crate *constructs* candidate pairs `(L, M)` by
//! theory; this module checks them from scratch.  Given a rational Gram
//! matrix for the ambient lattice basis and an integer matrix spanning the
//! sublattice, it enumerates short vectors exhaustively (with exact rational
//! comparisons, no floating point), recomputes the minima inside and outside
//! the sublattice, and classifies the pair:
//!
//! * `m_out` — minimum over `L - M`, attained on `s` pairs `{v, -v}`;
//! * `m_in` — minimum over `M - {0}`, attained on `s'` pairs;
//! * `u = m_in / m_out = tau^2` after normalizing the outside minimum to 1.
//!
//! The pair is *tempered* when `u >= 1` and `s + s' >= 4`: a rational
//! positive definite form with those minima automatically satisfies the
//! remaining conditions (strictness and uniqueness) of the definition.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{floor_sqrt, is_prime};
use crate::bqf::Form;
use crate::eisenstein::{self, EisSublattice};
use crate::mat::{self, Mat2};
use crate::{Error, Int, Rational, Result};

/// A symmetric positive definite 2x2 matrix `[[g11, g12], [g12, g22]]` with
/// exact rational entries, evaluated on integer row vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gram {
    pub g11: Rational,
    pub g12: Rational,
    pub g22: Rational,
}

impl Gram {
    pub fn new(g11: Rational, g12: Rational, g22: Rational) -> Gram {
        Gram { g11, g12, g22 }
    }

    /// The Gram matrix of the distinguished basis of the lattice of a form
    /// `(a, b, c)`, namely `[[a, b/2], [b/2, c]]`.
    pub fn from_form(f: &Form) -> Gram {
        Gram {
            g11: Rational::from_integer(f.a),
            g12: Rational::new(f.b, 2),
            g22: Rational::from_integer(f.c),
        }
    }

    /// The hexagonal Gram matrix `[[1, -1/2], [-1/2, 1]]` of the Eisenstein
    /// lattice basis `{1, w}`.
    pub fn hexagonal() -> Gram {
        Gram {
            g11: Rational::from_integer(1),
            g12: Rational::new(-1, 2),
            g22: Rational::from_integer(1),
        }
    }

    /// The quadratic value `v G v^T`.
    pub fn evaluate(&self, v: [Int; 2]) -> Rational {
        let x = Rational::from_integer(v[0]);
        let y = Rational::from_integer(v[1]);
        self.g11 * x * x + Rational::from_integer(2) * self.g12 * x * y + self.g22 * y * y
    }

    pub fn det(&self) -> Rational {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    pub fn is_positive_definite(&self) -> bool {
        self.g11 > Rational::zero() && self.det() > Rational::zero()
    }

    /// Base change by an integer matrix acting on rows: `h G h^T`, the Gram
    /// matrix of the basis `{row1(h), row2(h)}`.
    pub fn transform(&self, h: &Mat2) -> Gram {
        let r = |v: Int| Rational::from_integer(v);
        let [[p, q], [s, t]] = *h;
        let g11 = self.evaluate([p, q]);
        let g22 = self.evaluate([s, t]);
        let g12 = self.g11 * r(p) * r(s)
            + self.g12 * (r(p) * r(t) + r(q) * r(s))
            + self.g22 * r(q) * r(t);
        Gram { g11, g12, g22 }
    }
}

/// A plane lattice pair: an ambient lattice carrying `gram` in its basis,
/// and the sublattice of prime index `ell` spanned by the rows of `sub`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairLattice {
    pub gram: Gram,
    pub sub: Mat2,
    pub ell: Int,
}

impl PairLattice {
    pub fn new(gram: Gram, sub: Mat2, ell: Int) -> Result<PairLattice> {
        if !gram.is_positive_definite() {
            return Err(Error::DegenerateGram);
        }
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        let found = mat::det(&sub).abs();
        if found != ell {
            return Err(Error::WrongIndex { expected: ell, found });
        }
        Ok(PairLattice { gram, sub, ell })
    }

    /// Membership of an ambient vector in the sublattice:
    /// `v in M  <=>  v * adj(sub) = 0 mod det(sub)`.
    pub fn contains(&self, v: [Int; 2]) -> bool {
        let adj = mat::adjugate(&self.sub);
        let d = mat::det(&self.sub);
        let z = mat::vec_mul(v, &adj);
        z[0] % d == 0 && z[1] % d == 0
    }
}

/// All nonzero vectors `v` with `v G v^T <= bound`, one representative per
/// pair `{v, -v}` (the one with `x > 0`, or `x = 0, y > 0`), sorted by
/// `(x, y)`.  Loose integer boxes are cut down by exact rational comparison
/// of each candidate's value.
pub fn short_vectors(g: &Gram, bound: Rational) -> Vec<[Int; 2]> {
    let mut out = Vec::new();
    if bound < Rational::zero() {
        return out;
    }
    debug_assert!(g.is_positive_definite());
    let det = g.det();
    let xmax = floor_sqrt(bound * g.g22 / det);
    let ymax = floor_sqrt(bound * g.g11 / det);
    for y in 1..=ymax {
        if g.evaluate([0, y]) <= bound {
            out.push([0, y]);
        }
    }
    for x in 1..=xmax {
        // For fixed x the admissible y lie in an interval around the
        // projection -g12*x/g22 of half-width sqrt((g22*bound - det*x^2))/g22.
        let center = (-g.g12 * Rational::from_integer(x) / g.g22).floor().to_integer();
        let radicand = (g.g22 * bound - det * Rational::from_integer(x * x))
            / (g.g22 * g.g22);
        let r = floor_sqrt(radicand) + 1;
        for y in (center - r)..=(center + r) {
            if g.evaluate([x, y]) <= bound {
                out.push([x, y]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The unimodular matrix `u` (`det u = +-1`) whose rows Lagrange-Gauss
/// reduce the basis carrying `g`: `u G u^T` satisfies `g11 <= g22` and
/// `|g12| <= g11 / 2`, so its diagonal entries are the two successive
/// minima.  Keeps enumeration windows tight no matter how skew the given
/// basis is (e.g. Hermite-form sublattice bases).
fn reducing_transform(g: &Gram) -> Mat2 {
    debug_assert!(g.is_positive_definite());
    let mut u: Mat2 = [[1, 0], [0, 1]];
    let mut g = *g;
    loop {
        if g.g11 > g.g22 {
            u.swap(0, 1);
            g = Gram { g11: g.g22, g12: g.g12, g22: g.g11 };
        }
        let k = crate::arith::round(g.g12 / g.g11);
        if k == 0 {
            break;
        }
        // Second row <- second row - k * first row.
        u[1] = [u[1][0] - k * u[0][0], u[1][1] - k * u[0][1]];
        let kr = Rational::from_integer(k);
        g = Gram {
            g11: g.g11,
            g12: g.g12 - kr * g.g11,
            g22: g.g22 - Rational::from_integer(2) * kr * g.g12 + kr * kr * g.g11,
        };
    }
    u
}

/// The outcome of classifying a pair against the tempered-perfect
/// definition.  `tau_squared` is reported whether or not the pair is
/// tempered (it is the normalized inner minimum `u = m_in / m_out`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tempered: bool,
    pub s: usize,
    pub s_prime: usize,
    pub tau_squared: Rational,
    pub min_outside: Rational,
    pub min_inside: Rational,
    pub outside_minima: Vec<[Int; 2]>,
    pub inside_minima: Vec<[Int; 2]>,
}

fn canonical_pair_rep(v: [Int; 2]) -> [Int; 2] {
    if v[0] < 0 || (v[0] == 0 && v[1] < 0) {
        [-v[0], -v[1]]
    } else {
        v
    }
}

/// Classifies a pair from first principles by exhaustive short-vector
/// enumeration with exact arithmetic.
pub fn classify(p: &PairLattice) -> Classification {
    // Work throughout in Lagrange-Gauss reduced bases (unimodular changes of
    // basis, which move neither minima nor membership) so enumeration stays
    // cheap even for very skew inputs; vectors map back to the original
    // coordinates before being reported.
    let red_l = reducing_transform(&p.gram);
    let gl = p.gram.transform(&red_l);

    // Minima of the sublattice, enumerated in its own (reduced) coordinates:
    // the first diagonal entry of the reduced Gram is the minimum itself, so
    // one pass suffices.
    let red_m = reducing_transform(&p.gram.transform(&p.sub));
    let gm = p.gram.transform(&p.sub).transform(&red_m);
    let m_rows = mat::mul(&red_m, &p.sub);
    let in_bound = gm.g11.min(gm.g22);
    let min_inside = short_vectors(&gm, in_bound)
        .into_iter()
        .map(|z| gm.evaluate(z))
        .min()
        .expect("a basis row of the sublattice attains the starting bound");
    let mut inside_minima: Vec<[Int; 2]> = short_vectors(&gm, min_inside)
        .into_iter()
        .filter(|&z| gm.evaluate(z) == min_inside)
        .map(|z| canonical_pair_rep(mat::vec_mul(z, &m_rows)))
        .collect();
    inside_minima.sort_unstable();

    // Minimum over the complement L - M: start at the ambient minimum and
    // double until a vector outside M shows up.
    let mut out_bound = gl.g11.min(gl.g22);
    let min_outside = loop {
        let found = short_vectors(&gl, out_bound)
            .into_iter()
            .filter(|&z| !p.contains(mat::vec_mul(z, &red_l)))
            .map(|z| gl.evaluate(z))
            .min();
        if let Some(m) = found {
            break m;
        }
        out_bound *= Rational::from_integer(2);
    };
    let mut outside_minima: Vec<[Int; 2]> = short_vectors(&gl, min_outside)
        .into_iter()
        .filter(|&z| gl.evaluate(z) == min_outside)
        .map(|z| canonical_pair_rep(mat::vec_mul(z, &red_l)))
        .filter(|&v| !p.contains(v))
        .collect();
    outside_minima.sort_unstable();

    let s = outside_minima.len();
    let s_prime = inside_minima.len();
    debug_assert!(s <= 3 && s_prime <= 3, "plane lattices have at most 3 minimal pairs");
    let u = min_inside / min_outside;
    Classification {
        tempered: u >= Rational::from_integer(1) && s + s_prime >= 4,
        s,
        s_prime,
        tau_squared: u,
        min_outside,
        min_inside,
        outside_minima,
        inside_minima,
    }
}

/// The dual pair: `(L, M)` maps to `(M^*, L^*)` rescaled to a rational Gram.
/// In the basis dual to the sublattice basis, the ambient Gram becomes the
/// adjugate of `h G h^T` (a determinant multiple of its inverse, which is
/// the same lattice up to homothety) and the sublattice matrix becomes
/// `h^T`.  For a tempered pair with `tau^2 < ell^2` the dual is tempered
/// with the counts swapped and `tau^2 * (tau^*)^2 = ell^2`; at the boundary
/// `tau^2 = ell^2` a minimal vector of `M` lies in `ell L` and the dual can
/// degenerate (see `test_duality_boundary_at_squared_index`).
pub fn dualize(p: &PairLattice) -> PairLattice {
    let gm = p.gram.transform(&p.sub);
    let dual_gram = Gram { g11: gm.g22, g12: -gm.g12, g22: gm.g11 };
    let dual_sub = mat::transpose(&p.sub);
    PairLattice::new(dual_gram, dual_sub, p.ell)
        .expect("dual of a valid pair is a valid pair")
}

/// A rational solution of the minimal-vector value constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalitySolution {
    pub gram: Gram,
    pub u: Rational,
    pub unique: bool,
}

/// Solves the linear system expressing "every vector of `outside` has value
/// 1 and every vector of `inside` has the common value `u`" for the four
/// unknowns `(g11, g12, g22, u)`.  Returns `None` when the system is
/// inconsistent; `unique` reports whether the solution is pinned down
/// exactly (the rationality statement behind tempered forms: with
/// `s + s' >= 4` independent conditions the Gram matrix is rational).
pub fn solve_rationality(
    outside: &[[Int; 2]],
    inside: &[[Int; 2]],
) -> Option<RationalitySolution> {
    let r = Rational::from_integer;
    // Rows: [x^2, 2xy, y^2, coeff of u | rhs].
    let mut rows: Vec<[Rational; 5]> = Vec::new();
    for &[x, y] in outside {
        rows.push([r(x * x), r(2 * x * y), r(y * y), r(0), r(1)]);
    }
    for &[x, y] in inside {
        rows.push([r(x * x), r(2 * x * y), r(y * y), r(-1), r(0)]);
    }
    // Gauss-Jordan elimination over the rationals.
    let mut pivot_of_col = [usize::MAX; 4];
    let mut rank = 0;
    for col in 0..4 {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].recip();
        for e in rows[rank].iter_mut() {
            *e *= inv;
        }
        let pivot_row = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col];
                for (e, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *e -= f * *p;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    // Inconsistent: a zero row with nonzero right-hand side.
    for row in rows.iter().skip(rank) {
        if !row[4].is_zero() {
            return None;
        }
    }
    // Particular solution with free variables set to zero.
    let value = |col: usize| {
        if pivot_of_col[col] == usize::MAX {
            Rational::zero()
        } else {
            rows[pivot_of_col[col]][4]
        }
    };
    Some(RationalitySolution {
        gram: Gram { g11: value(0), g12: value(1), g22: value(2) },
        u: value(3),
        unique: rank == 4,
    })
}

/// Ground-truth classification of every index-`ell` sublattice of the
/// Eisenstein lattice, pairing the hexagonal Gram matrix with each canonical
/// sublattice in turn.  This is the independent oracle the Eisenstein
/// temperament lists are checked against.
pub fn oracle_eisenstein(ell: Int) -> Result<Vec<(EisSublattice, Classification)>> {
    let subs = eisenstein::sublattices(ell)?;
    Ok(subs
        .into_iter()
        .map(|m| {
            let p = PairLattice::new(Gram::hexagonal(), m.matrix(), ell)
                .expect("hexagonal pairs are valid");
            let c = classify(&p);
            (m, c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: Int, d: Int) -> Rational {
        Rational::new(n, d)
    }

    fn worked_pair() -> PairLattice {
        // Gram of (391, 169, 19) scaled by 1 (scaling is irrelevant to the
        // classification), sublattice spanned by (1,0) and (0,23).
        let f = Form::new(391, 169, 19).unwrap();
        PairLattice::new(Gram::from_form(&f), [[1, 0], [0, 23]], 23).unwrap()
    }

    #[test]
    fn test_pair_validation() {
        let f = Form::new(391, 169, 19).unwrap();
        assert_eq!(
            PairLattice::new(Gram::from_form(&f), [[1, 0], [0, 22]], 23),
            Err(Error::WrongIndex { expected: 23, found: 22 })
        );
        assert_eq!(
            PairLattice::new(Gram::from_form(&f), [[1, 0], [0, 4]], 4),
            Err(Error::NotPrime(4))
        );
        let flat = Gram::new(rat(1, 1), rat(1, 1), rat(1, 1));
        assert_eq!(PairLattice::new(flat, [[1, 0], [0, 2]], 2), Err(Error::DegenerateGram));
    }

    #[test]
    fn test_membership() {
        let p = worked_pair();
        assert!(p.contains([1, 0]));
        assert!(p.contains([5, -23]));
        assert!(p.contains([0, 23]));
        assert!(!p.contains([0, 1]));
        assert!(!p.contains([1, -4]));
    }

    #[test]
    fn test_short_vectors_hexagonal() {
        let g = Gram::hexagonal();
        // Exactly the three unit pairs at the minimum.
        assert_eq!(short_vectors(&g, rat(1, 1)), [[0, 1], [1, 0], [1, 1]]);
        // Norm 3 adds the ramified prime's vectors, norm 2 nothing new.
        assert_eq!(short_vectors(&g, rat(2, 1)), [[0, 1], [1, 0], [1, 1]]);
        let three: Vec<[Int; 2]> = short_vectors(&g, rat(3, 1));
        assert_eq!(three, [[0, 1], [1, -1], [1, 0], [1, 1], [1, 2], [2, 1]]);
        // Empty below the minimum, empty for negative bounds.
        assert!(short_vectors(&g, rat(1, 2)).is_empty());
        assert!(short_vectors(&g, rat(-1, 1)).is_empty());
    }

    #[test]
    fn test_short_vectors_worked_example() {
        let f = Form::new(391, 169, 19).unwrap();
        let g = Gram::from_form(&f);
        assert_eq!(short_vectors(&g, rat(19, 1)), [[0, 1], [1, -4]]);
        assert_eq!(short_vectors(&g, rat(21, 1)), [[0, 1], [1, -5], [1, -4]]);
    }

    #[test]
    fn test_classify_worked_example() {
        let c = classify(&worked_pair());
        assert!(c.tempered);
        assert_eq!(c.s, 2);
        assert_eq!(c.s_prime, 2);
        assert_eq!(c.min_outside, rat(19, 1));
        assert_eq!(c.min_inside, rat(391, 1));
        assert_eq!(c.tau_squared, rat(391, 19));
        assert_eq!(c.outside_minima, [[0, 1], [1, -4]]);
        assert_eq!(c.inside_minima, [[1, 0], [5, -23]]);
    }

    #[test]
    fn test_classify_is_scale_invariant() {
        // Same pair with the Gram divided by 19, so the outside minimum is 1.
        let g = Gram::new(rat(391, 19), rat(169, 38), rat(19, 19));
        let p = PairLattice::new(g, [[1, 0], [0, 23]], 23).unwrap();
        let c = classify(&p);
        assert!(c.tempered);
        assert_eq!((c.s, c.s_prime), (2, 2));
        assert_eq!(c.tau_squared, rat(391, 19));
        assert_eq!(c.min_outside, rat(1, 1));
    }

    #[test]
    fn test_classify_hexagonal_ideal() {
        // (Z[w], p_7): 3-and-3 with tau^2 = 7.
        let p = PairLattice::new(Gram::hexagonal(), [[1, 3], [0, 7]], 7).unwrap();
        let c = classify(&p);
        assert!(c.tempered);
        assert_eq!((c.s, c.s_prime), (3, 3));
        assert_eq!(c.tau_squared, rat(7, 1));
        assert_eq!(c.outside_minima, [[0, 1], [1, 0], [1, 1]]);
    }

    #[test]
    fn test_classify_untempered_unit_in_sublattice() {
        // The sublattice [[1,0],[0,7]] of Z[w] contains the unit 1, so the
        // inner minimum is 1 = outer minimum but s + s' = 2 + 1 = 3 < 4.
        let p = PairLattice::new(Gram::hexagonal(), [[1, 0], [0, 7]], 7).unwrap();
        let c = classify(&p);
        assert!(!c.tempered);
        assert_eq!((c.s, c.s_prime), (2, 1));
        assert_eq!(c.tau_squared, rat(1, 1));
        assert_eq!(c.inside_minima, [[1, 0]]);
    }

    #[test]
    fn test_classify_gaussian_ramified() {
        // (Z[i], (1+i)): the 2-and-2 pair at ell = 2 with tau^2 = 2.
        let g = Gram::new(rat(1, 1), rat(0, 1), rat(1, 1));
        let p = PairLattice::new(g, [[1, 1], [0, 2]], 2).unwrap();
        let c = classify(&p);
        assert!(c.tempered);
        assert_eq!((c.s, c.s_prime), (2, 2));
        assert_eq!(c.tau_squared, rat(2, 1));
        assert_eq!(c.outside_minima, [[0, 1], [1, 0]]);
        assert_eq!(c.inside_minima, [[1, -1], [1, 1]]);
    }

    #[test]
    fn test_dualize_worked_example() {
        let p = worked_pair();
        let d = dualize(&p);
        let c = classify(&p);
        let cd = classify(&d);
        // Duality swaps the two counts and multiplies temperaments to ell^2.
        assert_eq!((cd.s, cd.s_prime), (c.s_prime, c.s));
        assert_eq!(c.tau_squared * cd.tau_squared, rat(23 * 23, 1));
        assert!(cd.tempered);
        // Double dual restores the classification.
        let cdd = classify(&dualize(&d));
        assert_eq!((cdd.s, cdd.s_prime, cdd.tempered), (c.s, c.s_prime, c.tempered));
        assert_eq!(cdd.tau_squared, c.tau_squared);
    }

    #[test]
    fn test_dualize_three_one() {
        // A 3-and-1 pair dualizes to 1-and-3 with tau^2 = ell^2 / beta.
        let p = PairLattice::new(Gram::hexagonal(), [[1, 5], [0, 11]], 11).unwrap();
        let c = classify(&p);
        assert!(c.tempered);
        assert_eq!((c.s, c.s_prime), (3, 1));
        assert_eq!(c.tau_squared, rat(7, 1));
        let cd = classify(&dualize(&p));
        assert!(cd.tempered);
        assert_eq!((cd.s, cd.s_prime), (1, 3));
        assert_eq!(cd.tau_squared, rat(121, 7));
    }

    #[test]
    fn test_duality_boundary_at_squared_index() {
        // Since ell L <= M, the temperament never exceeds ell^2, and the
        // boundary value is attained: this 1-and-3 pair is tempered (its
        // minima pin the form and u = 4 uniquely) but one of its inside
        // minima, (0,2) = 2*(0,1), lies in ell L.  Dualizing sends that
        // vector into the dual's sublattice, which steals an outside
        // minimum pair there: the dual degenerates to an untempered
        // 2-and-1 pair.  The count swap and the product tau^2 tau*^2 =
        // ell^2 therefore require tau^2 < ell^2 strictly.
        let p = PairLattice::new(
            Gram::new(rat(3, 1), rat(0, 1), rat(1, 1)),
            [[2, 0], [1, 1]],
            2,
        )
        .unwrap();
        let c = classify(&p);
        assert!(c.tempered);
        assert_eq!((c.s, c.s_prime), (1, 3));
        assert_eq!(c.tau_squared, rat(4, 1));
        assert_eq!(c.outside_minima, vec![[0, 1]]);
        assert_eq!(c.inside_minima, vec![[0, 2], [1, -1], [1, 1]]);
        let sol = solve_rationality(&c.outside_minima, &c.inside_minima).unwrap();
        assert!(sol.unique, "the boundary pair is still perfect");

        let cd = classify(&dualize(&p));
        assert!(!cd.tempered);
        assert_eq!((cd.s, cd.s_prime), (2, 1));
        assert_eq!(cd.tau_squared, rat(1, 1));
    }

    #[test]
    fn test_solve_rationality_worked_example() {
        let sol = solve_rationality(&[[0, 1], [1, -4]], &[[1, 0], [5, -23]]).unwrap();
        assert!(sol.unique);
        assert_eq!(sol.u, rat(391, 19));
        assert_eq!(sol.gram, Gram::new(rat(391, 19), rat(169, 38), rat(1, 1)));
    }

    #[test]
    fn test_solve_rationality_underdetermined() {
        // Three conditions leave a one-parameter family.
        let sol = solve_rationality(&[[0, 1], [1, -4]], &[[1, 0]]).unwrap();
        assert!(!sol.unique);
        // The reported particular solution still satisfies the constraints.
        let g = sol.gram;
        assert_eq!(g.evaluate([0, 1]), rat(1, 1));
        assert_eq!(g.evaluate([1, -4]), rat(1, 1));
        assert_eq!(g.evaluate([1, 0]), sol.u);
    }

    #[test]
    fn test_solve_rationality_inconsistent() {
        // (1,0) cannot simultaneously have value 1 and value u with u free
        // unless consistent; force a contradiction via colinear vectors with
        // different target values: (1,0) outside and (2,0)... (2,0) has value
        // 4*g11, so 4*1 = u is consistent; instead use two outside vectors
        // forcing g11 = 1 and g11 = 1/4 via (2,0).
        assert!(solve_rationality(&[[1, 0], [2, 0]], &[]).is_none());
    }

    #[test]
    fn test_gram_transform_matches_evaluate() {
        let f = Form::new(391, 169, 19).unwrap();
        let g = Gram::from_form(&f);
        let h = [[1, 0], [0, 23]];
        let t = g.transform(&h);
        for v in [[1, 0], [0, 1], [2, -3], [5, -1]] {
            assert_eq!(t.evaluate(v), g.evaluate(mat::vec_mul(v, &h)));
        }
    }
}
