//! Integral binary quadratic forms `a*x^2 + b*x*y + c*y^2` of negative
//! discriminant, together with the unimodular changes of variable that act
//! on them.
//!
//! Conventions:
//!
//! * the discriminant is `b^2 - 4ac < 0` and forms are positive definite
//!   (`a > 0`, `c > 0`);
//! * a change of variable is a matrix `m` acting on *row* vectors, sending
//!   the Gram matrix `A` of the form to `m * A * m^T`;
//! * a form is *reduced* when `|b| <= a <= c` and moreover `b <= 0` whenever
//!   `|b| = a` or `a = c`.  Every positive definite form is properly
//!   equivalent to exactly one reduced form, and the sign corner cases pick
//!   `b <= 0` (not the more common `b >= 0`) so that a reduced form with
//!   `gcd(a, b) = ell` restricts nicely to index-`ell` sublattices.

use core::fmt;

use num_traits::Zero;

use crate::arith::{gcd, isqrt};
use crate::mat::{self, Mat2};
use crate::{Error, Int, Rational, Result};

/// A binary quadratic form `a*x^2 + b*x*y + c*y^2`.
///
/// Ordering is lexicographic in `(a, b, c)`, which for a fixed discriminant
/// coincides with the `(a, b)` ordering used to list reduced forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl Form {
    /// Builds a positive definite form, rejecting anything indefinite,
    /// negative definite or degenerate.
    pub fn new(a: Int, b: Int, c: Int) -> Result<Form> {
        if a <= 0 || b * b - 4 * a * c >= 0 {
            return Err(Error::NotPositiveDefinite { a, b, c });
        }
        Ok(Form { a, b, c })
    }

    /// `b^2 - 4ac`; negative for every value this type admits.
    pub fn discriminant(&self) -> Int {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Gcd of the three coefficients.
    pub fn content(&self) -> Int {
        gcd(gcd(self.a, self.b), self.c)
    }

    /// A form is primitive when its coefficients are coprime.
    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Reduction predicate: `|b| <= a <= c`, with `b <= 0` on the two
    /// boundary cases `|b| = a` and `a = c`.
    pub fn is_reduced(&self) -> bool {
        let Form { a, b, c } = *self;
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b > 0)
    }

    /// Evaluates the form at an integer point.
    pub fn evaluate(&self, x: Int, y: Int) -> Int {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// Applies a unimodular change of variable: the result `g` satisfies
    /// `g(v) = f(v * m)` for every row vector `v`, i.e. the Gram matrix maps
    /// to `m * A * m^T`.  The discriminant is unchanged.
    pub fn transform(&self, m: &UnimodularMap) -> Form {
        let [[p, q], [r, s]] = m.matrix();
        let a = self.evaluate(p, q);
        let c = self.evaluate(r, s);
        let b = 2 * (self.a * p * r + self.c * q * s) + self.b * (p * s + q * r);
        debug_assert_eq!(b * b - 4 * a * c, self.discriminant());
        Form { a, b, c }
    }

    /// Gauss reduction.  Returns the unique reduced form properly equivalent
    /// to `self`, together with a determinant `+1` map `m` such that
    /// `self.transform(&m)` equals the reduced form.
    pub fn reduce(&self) -> (Form, UnimodularMap) {
        let (mut a, mut b, mut c) = (self.a, self.b, self.c);
        let mut m = mat::IDENTITY;
        loop {
            // Translate b into [-a, a): (a, b, c) -> (a, b + 2ka, f(k, 1)).
            if b < -a || b >= a {
                let k = -(b + a).div_euclid(2 * a);
                c += a * k * k + b * k;
                b += 2 * a * k;
                m = mat::mul(&[[1, 0], [k, 1]], &m);
            }
            // Swap the outer coefficients: (a, b, c) -> (c, -b, a).
            if a > c {
                core::mem::swap(&mut a, &mut c);
                b = -b;
                m = mat::mul(&[[0, 1], [-1, 0]], &m);
                continue;
            }
            // Boundary case a = c wants b <= 0; the swap fixes the sign.
            if a == c && b > 0 {
                b = -b;
                m = mat::mul(&[[0, 1], [-1, 0]], &m);
            }
            break;
        }
        let reduced = Form { a, b, c };
        debug_assert!(reduced.is_reduced());
        debug_assert_eq!(reduced.discriminant(), self.discriminant());
        let map = UnimodularMap::new(m).expect("reduction steps are unimodular");
        debug_assert_eq!(map.det(), 1);
        debug_assert_eq!(self.transform(&map), reduced);
        (reduced, map)
    }

    /// The dual form `(c, -b, a)`, the form of the dual basis of the lattice
    /// rescaled to the same discriminant.  An involution.
    pub fn dual(&self) -> Form {
        Form { a: self.c, b: -self.b, c: self.a }
    }

    /// Searches for a primitive representation `f(x, y) = n` with
    /// `gcd(x, y) = 1`.  Returns the smallest witness ordered by
    /// `(|x|, |y|, sign)`, preferring non-negative signs, or `None` when `n`
    /// is not primitively represented.  `n` must be positive.
    pub fn represents(&self, n: Int) -> Option<(Int, Int)> {
        debug_assert!(n > 0);
        let d = self.discriminant().abs();
        // 4a*f = (2ax + by)^2 + |D|y^2, so |D|y^2 <= 4an, and symmetrically
        // 4c*f = (bx + 2cy)^2 + |D|x^2 bounds x.
        let ymax = isqrt(4 * self.a * n / d);
        let xmax = isqrt(4 * self.c * n / d);
        let mut best: Option<(Int, Int)> = None;
        for x in -xmax..=xmax {
            for y in -ymax..=ymax {
                if self.evaluate(x, y) == n && gcd(x, y) == 1 {
                    let key = (x.abs(), y.abs(), x < 0, y < 0);
                    let better = match best {
                        None => true,
                        Some((bx, by)) => key < (bx.abs(), by.abs(), bx < 0, by < 0),
                    };
                    if better {
                        best = Some((x, y));
                    }
                }
            }
        }
        best
    }

    /// The distinguished basis `{1, gamma}` of the plane lattice attached to
    /// the form, as the quadratic surd `gamma = (b + sqrt(D)) / (2a)`.
    pub fn distinguished_basis(&self) -> QuadSurd {
        QuadSurd {
            rational: Rational::new(self.b, 2 * self.a),
            coefficient: Rational::new(1, 2 * self.a),
            radicand: self.discriminant(),
        }
    }
}

/// An element `rational + coefficient * sqrt(radicand)` of an imaginary
/// quadratic field, with `radicand < 0` a discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub rational: Rational,
    pub coefficient: Rational,
    pub radicand: Int,
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*sqrt({})", self.coefficient, self.radicand);
        }
        write!(f, "{} + {}*sqrt({})", self.rational, self.coefficient, self.radicand)
    }
}

/// An integer matrix of determinant `+1` or `-1`, acting on row vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    m: Mat2,
}

impl UnimodularMap {
    /// Wraps a matrix after checking its determinant is `+1` or `-1`.
    pub fn new(m: Mat2) -> Option<UnimodularMap> {
        if mat::det(&m).abs() == 1 {
            Some(UnimodularMap { m })
        } else {
            None
        }
    }

    /// The identity map.
    pub fn identity() -> UnimodularMap {
        UnimodularMap { m: mat::IDENTITY }
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    /// Determinant, `+1` or `-1`.
    pub fn det(&self) -> Int {
        mat::det(&self.m)
    }

    /// Proper maps (determinant `+1`) preserve orientation; only these are
    /// used to define proper equivalence of forms.
    pub fn is_proper(&self) -> bool {
        self.det() == 1
    }

    /// The inverse map: `adj(m) / det(m)`, which stays integral.
    pub fn inverse(&self) -> UnimodularMap {
        let adj = mat::adjugate(&self.m);
        let m = if self.det() == 1 {
            adj
        } else {
            [[-adj[0][0], -adj[0][1]], [-adj[1][0], -adj[1][1]]]
        };
        UnimodularMap { m }
    }
}

impl core::ops::Mul for UnimodularMap {
    type Output = UnimodularMap;

    /// Matrix product; `f.transform(&(m1 * m2)) = f.transform(&m2).transform(&m1)`.
    fn mul(self, rhs: UnimodularMap) -> UnimodularMap {
        UnimodularMap { m: mat::mul(&self.m, &rhs.m) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: Int, b: Int, c: Int) -> Form {
        Form::new(a, b, c).unwrap()
    }

    #[test]
    fn test_new_rejects_indefinite() {
        assert!(Form::new(1, 3, 1).is_err()); // disc 5 > 0
        assert!(Form::new(-1, 0, -1).is_err()); // negative definite
        assert!(Form::new(0, 0, 1).is_err()); // degenerate
        assert!(Form::new(1, 2, 1).is_err()); // disc 0
        assert!(Form::new(1, 0, 1).is_ok());
    }

    #[test]
    fn test_discriminant() {
        assert_eq!(form(1, -1, 289).discriminant(), -1155);
        assert_eq!(form(391, 169, 19).discriminant(), -1155);
        assert_eq!(form(1, 0, 1).discriminant(), -4);
        assert_eq!(form(1, -1, 1).discriminant(), -3);
    }

    #[test]
    fn test_is_reduced_boundaries() {
        assert!(form(19, -17, 19).is_reduced());
        assert!(!form(19, 17, 19).is_reduced()); // a = c wants b <= 0
        assert!(form(1, -1, 14).is_reduced());
        assert!(!form(1, 1, 14).is_reduced()); // |b| = a wants b <= 0
        assert!(form(2, 1, 7).is_reduced()); // interior: both signs reduced
        assert!(form(2, -1, 7).is_reduced());
        assert!(!form(391, 169, 19).is_reduced());
        assert!(form(1, 0, 1).is_reduced());
        assert!(form(3, -3, 97).is_reduced());
    }

    #[test]
    fn test_evaluate() {
        let f = form(391, 169, 19);
        assert_eq!(f.evaluate(0, 0), 0);
        assert_eq!(f.evaluate(0, 1), 19);
        assert_eq!(f.evaluate(1, -4), 19);
        assert_eq!(f.evaluate(1, 0), 391);
        assert_eq!(f.evaluate(5, -23), 391);
    }

    #[test]
    fn test_reduce_worked_example() {
        let f = form(391, 169, 19);
        let (g, m) = f.reduce();
        assert_eq!(g, form(19, -17, 19));
        assert_eq!(m.det(), 1);
        assert_eq!(f.transform(&m), g);
        // The inverse map carries the reduced form back.
        assert_eq!(g.transform(&m.inverse()), f);
    }

    #[test]
    fn test_reduce_is_idempotent() {
        for f in [form(19, -17, 19), form(1, -1, 289), form(2, 1, 7), form(1, 0, 1)] {
            let (g, m) = f.reduce();
            assert_eq!(g, f);
            assert_eq!(m.matrix(), mat::IDENTITY);
        }
    }

    #[test]
    fn test_reduce_corner_cases() {
        // a = c corner must land on b <= 0.
        let (g, _) = form(17, 1, 17).reduce();
        assert_eq!(g, form(17, -1, 17));
        // |b| = a corner likewise.
        let (g, _) = form(1, 1, 14).reduce();
        assert_eq!(g, form(1, -1, 14));
        // (a, a, c) reduces to the b = -a representative.
        let (g, _) = form(5, 5, 8).reduce();
        assert_eq!(g, form(5, -5, 8));
        assert!(g.is_reduced());
    }

    #[test]
    fn test_reduce_preserves_discriminant_and_content() {
        for f in [form(391, 169, 19), form(285, 135, 17), form(14, 13, 4), form(6, 2, 6)] {
            let (g, m) = f.reduce();
            assert!(g.is_reduced());
            assert_eq!(g.discriminant(), f.discriminant());
            assert_eq!(g.content(), f.content());
            assert!(m.is_proper());
            assert_eq!(f.transform(&m), g);
        }
    }

    #[test]
    fn test_dual_involution() {
        let f = form(3, -3, 97);
        assert_eq!(f.dual(), form(97, 3, 3));
        assert_eq!(f.dual().dual(), f);
        assert_eq!(f.dual().discriminant(), f.discriminant());
        // Self-dual shape: a = c and b = -b only for b = 0.
        assert_eq!(form(1, 0, 1).dual(), form(1, 0, 1));
    }

    #[test]
    fn test_represents_witnesses() {
        assert_eq!(form(1, 0, 1).represents(17), Some((1, 4)));
        assert_eq!(form(4, -3, 4).represents(31), Some((1, 3)));
        assert_eq!(form(1, -1, 14).represents(59), Some((1, -2)));
        assert_eq!(form(15, -15, 23).represents(23), Some((0, 1)));
        // Both (7,1) and (6,-1) hit 331; (6,-1) wins on smaller |x|.
        assert_eq!(form(1, -1, 289).represents(331), Some((6, -1)));
    }

    #[test]
    fn test_represents_misses() {
        assert_eq!(form(1, 0, 1).represents(3), None);
        assert_eq!(form(1, -1, 14).represents(2), None);
        // 4 = (2,0) but that witness is imprimitive; (1,0,1) has no other.
        assert_eq!(form(1, 0, 1).represents(4), None);
        // Minimal value of a reduced form is a; below it nothing is hit.
        assert_eq!(form(15, -15, 23).represents(14), None);
    }

    #[test]
    fn test_represents_minimum_of_reduced_form() {
        // The minimum of a reduced form is its leading coefficient.
        for f in [form(19, -17, 19), form(2, -1, 7), form(15, -15, 23)] {
            assert!(f.represents(f.a).is_some());
            for n in 1..f.a {
                assert_eq!(f.represents(n), None, "{f} represents {n} below its minimum");
            }
        }
    }

    #[test]
    fn test_distinguished_basis() {
        let g = form(19, -17, 19).distinguished_basis();
        assert_eq!(g.rational, Rational::new(-17, 38));
        assert_eq!(g.coefficient, Rational::new(1, 38));
        assert_eq!(g.radicand, -1155);
        // Hexagonal lattice: gamma = (-1 + sqrt(-3)) / 2 is a sixth root of unity shift.
        let w = form(1, -1, 1).distinguished_basis();
        assert_eq!(w.rational, Rational::new(-1, 2));
        assert_eq!(w.coefficient, Rational::new(1, 2));
        assert_eq!(w.radicand, -3);
    }

    #[test]
    fn test_unimodular_map_basics() {
        assert!(UnimodularMap::new([[2, 0], [0, 1]]).is_none());
        let s = UnimodularMap::new([[0, 1], [-1, 0]]).unwrap();
        assert!(s.is_proper());
        let r = UnimodularMap::new([[0, 1], [1, 0]]).unwrap();
        assert_eq!(r.det(), -1);
        assert!(!r.is_proper());
        for m in [s, r, UnimodularMap::new([[1, 0], [4, 1]]).unwrap()] {
            let prod = m * m.inverse();
            assert_eq!(prod.matrix(), mat::IDENTITY);
        }
    }

    #[test]
    fn test_transform_composition_order() {
        let f = form(3, -3, 97);
        let m1 = UnimodularMap::new([[1, 0], [2, 1]]).unwrap();
        let m2 = UnimodularMap::new([[0, 1], [-1, 0]]).unwrap();
        assert_eq!(f.transform(&m2).transform(&m1), f.transform(&(m1 * m2)));
    }

    #[test]
    fn test_display() {
        assert_eq!(alloc::format!("{}", form(19, -17, 19)), "(19,-17,19)");
        let g = form(19, -17, 19).distinguished_basis();
        assert_eq!(alloc::format!("{g}"), "-17/38 + 1/38*sqrt(-1155)");
    }
}
