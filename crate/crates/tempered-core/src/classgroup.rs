//! Form class groups of negative discriminants.
//!
//! For a discriminant `d < 0` (an integer congruent to 0 or 1 mod 4) the
//! primitive reduced forms of discriminant `d` represent the proper
//! equivalence classes of primitive positive definite forms, and composition
//! makes them a finite abelian group.  This module enumerates the reduced
//! forms, composes classes, and answers the structural questions the
//! tempered-form search needs: which classes are ambiguous (order at most
//! two), which are well-rounded (`a = c`), which classes represent a given
//! prime, and how the classes fall into genera.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arith::{divisors, ext_gcd, gcd, is_prime};
use crate::bqf::{Form, UnimodularMap};
use crate::{Error, Int, Result};

/// Checks that `d` is a negative discriminant: `d < 0`, `d = 0 or 1 mod 4`.
pub fn check_discriminant(d: Int) -> Result<()> {
    if d >= 0 || d.rem_euclid(4) > 1 {
        return Err(Error::NotADiscriminant(d));
    }
    Ok(())
}

/// Kronecker symbol `(a | n)` for positive `n`.
///
/// For a discriminant `a = d` and an odd prime `n = p` this is `+1` when `p`
/// splits, `-1` when `p` is inert and `0` when `p` ramifies (`p | d`); for
/// `n = 2` the symbol depends on `d mod 8` in the usual way.
pub fn kronecker(a: Int, n: Int) -> Int {
    debug_assert!(n > 0);
    let mut a = a;
    let mut n = n;
    let mut result = 1;
    if n % 2 == 0 {
        if a % 2 == 0 {
            return 0;
        }
        while n % 2 == 0 {
            n /= 2;
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    // Jacobi symbol for odd n, by quadratic reciprocity.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            result = -result;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// All primitive reduced forms of discriminant `d`, sorted by `(a, b)`.
///
/// Enumerates `b` of the right parity with `3b^2 <= |d|` and splits
/// `ac = (b^2 - d)/4` over divisor pairs; the boundary cases `b = 0`,
/// `|b| = a`, `a = c` contribute a single sign of `b`, all others both.
pub fn reduced_forms(d: Int) -> Result<Vec<Form>> {
    check_discriminant(d)?;
    let abs_d = -d;
    let mut out = Vec::new();
    let mut b = abs_d % 2;
    while 3 * b * b <= abs_d {
        let n = (b * b + abs_d) / 4; // a*c for this |b|
        for a in divisors(n) {
            if a * a > n {
                break;
            }
            if a < b.max(1) {
                continue;
            }
            let c = n / a;
            if gcd(gcd(a, b), c) != 1 {
                continue;
            }
            if b == 0 || a == b || a == c {
                out.push(Form { a, b: -b, c });
            } else {
                out.push(Form { a, b, c });
                out.push(Form { a, b: -b, c });
            }
        }
        b += 2;
    }
    out.sort();
    Ok(out)
}

/// A factorization witness that a discriminant has a well-rounded class.
///
/// For odd `d`: `-d = f * g` with `f >= g`, `gcd(f, g) = 1` and `f <= 3g`;
/// the corresponding well-rounded reduced form is `(a, b, a)` with
/// `a = (f + g)/4`, `b = (g - f)/2`.  For even `d` the same with
/// `-d/4 = f * g`, `a = (f + g)/2`, `b = g - f`, and the coprimality
/// condition `gcd((f + g)/2, 2g) = 1`.  The witnesses biject with the
/// well-rounded reduced forms of discriminant `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WrWitness {
    pub f: Int,
    pub g: Int,
    pub a: Int,
    pub b: Int,
}

impl WrWitness {
    /// The well-rounded reduced form `(a, b, a)` this witness describes.
    pub fn form(&self) -> Form {
        Form { a: self.a, b: self.b, c: self.a }
    }
}

/// All well-rounded factorization witnesses for `d`, sorted by `(a, b)`.
/// Empty exactly when `d` has no well-rounded class.
pub fn wr_witnesses(d: Int) -> Result<Vec<WrWitness>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    if d.rem_euclid(4) == 1 {
        let m = -d;
        for f in divisors(m) {
            let g = m / f;
            if f < g || f > 3 * g || gcd(f, g) != 1 {
                continue;
            }
            // f, g odd with fg = 3 mod 4, so f + g = 0 mod 4 automatically.
            let (a, b) = ((f + g) / 4, (g - f) / 2);
            debug_assert_eq!(b * b - 4 * a * a, d);
            out.push(WrWitness { f, g, a, b });
        }
    } else {
        let m = -d / 4;
        for f in divisors(m) {
            let g = m / f;
            if f < g || f > 3 * g || (f + g) % 2 != 0 {
                continue;
            }
            if gcd((f + g) / 2, 2 * g) != 1 {
                continue;
            }
            let (a, b) = ((f + g) / 2, g - f);
            debug_assert_eq!(b * b - 4 * a * a, d);
            out.push(WrWitness { f, g, a, b });
        }
    }
    out.sort_by_key(|w| (w.a, w.b));
    Ok(out)
}

/// Finds a form properly equivalent to `f` whose leading coefficient is
/// coprime to `m`, by searching primitive points with `gcd(f(x, y), m) = 1`
/// and completing them to a unimodular change of variable.
fn equivalent_with_coprime_leading(f: &Form, m: Int) -> Form {
    if gcd(f.a, m) == 1 {
        return *f;
    }
    let limit = m.abs().max(4);
    for r in 1..=limit {
        for x in -r..=r {
            for y in -r..=r {
                if x.abs().max(y.abs()) != r || gcd(x, y) != 1 {
                    continue;
                }
                if gcd(f.evaluate(x, y), m) != 1 {
                    continue;
                }
                let (_, s, t) = ext_gcd(x, y); // s*x + t*y = 1
                let u = UnimodularMap::new([[x, y], [-t, s]])
                    .expect("completion of a primitive row is unimodular");
                let g = f.transform(&u);
                debug_assert_eq!(gcd(g.a, m), 1);
                return g;
            }
        }
    }
    unreachable!("a primitive form represents values coprime to any modulus")
}

/// Composition of primitive forms of the same discriminant (class-level:
/// the result is reduced).  Dirichlet composition after replacing `f2` by an
/// equivalent form whose leading coefficient is coprime to `f1.a`.
pub fn compose_forms(f1: &Form, f2: &Form) -> Result<Form> {
    let d = f1.discriminant();
    if f2.discriminant() != d {
        return Err(Error::WrongDiscriminant { expected: d, found: f2.discriminant() });
    }
    for f in [f1, f2] {
        if !f.is_primitive() {
            return Err(Error::ImprimitiveForm { a: f.a, b: f.b, c: f.c });
        }
    }
    let g2 = equivalent_with_coprime_leading(f2, f1.a);
    let (a1, b1) = (f1.a, f1.b);
    let (a2, b2) = (g2.a, g2.b);
    // Solve bb = b1 mod 2*a1 and bb = b2 mod 2*a2; the moduli share only the
    // factor 2 and b1 = b2 mod 2, so the system is consistent.
    let (g, inv, _) = ext_gcd(a1.rem_euclid(a2), a2);
    debug_assert_eq!(g, 1);
    let k = (((b2 - b1) / 2).rem_euclid(a2) * inv.rem_euclid(a2)).rem_euclid(a2);
    let bb = b1 + 2 * a1 * k;
    let aa = a1 * a2;
    debug_assert_eq!((bb * bb - d).rem_euclid(4 * aa), 0);
    let cc = (bb * bb - d) / (4 * aa);
    Ok(Form { a: aa, b: bb, c: cc }.reduce().0)
}

/// The form class group of a negative discriminant: the primitive reduced
/// forms under composition.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    disc: Int,
    classes: Vec<Form>,
}

impl ClassGroup {
    pub fn new(d: Int) -> Result<ClassGroup> {
        let classes = reduced_forms(d)?;
        debug_assert!(!classes.is_empty());
        debug_assert_eq!(classes[0].a, 1, "the principal form sorts first");
        Ok(ClassGroup { disc: d, classes })
    }

    pub fn discriminant(&self) -> Int {
        self.disc
    }

    /// The class number `h(d)`.
    pub fn class_number(&self) -> usize {
        self.classes.len()
    }

    /// The reduced representatives, sorted by `(a, b)`.
    pub fn classes(&self) -> &[Form] {
        &self.classes
    }

    /// Index of the principal class (always 0: the principal form is the
    /// unique one with `a = 1` and sorts first).
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the class of `f`, which must be primitive of the right
    /// discriminant.
    pub fn class_of(&self, f: &Form) -> Result<usize> {
        if f.discriminant() != self.disc {
            return Err(Error::WrongDiscriminant { expected: self.disc, found: f.discriminant() });
        }
        if !f.is_primitive() {
            return Err(Error::ImprimitiveForm { a: f.a, b: f.b, c: f.c });
        }
        let (r, _) = f.reduce();
        Ok(self
            .classes
            .binary_search(&r)
            .expect("every primitive form reduces to a listed representative"))
    }

    /// Composition on class indices.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        let f = compose_forms(&self.classes[i], &self.classes[j])
            .expect("classes share a discriminant and are primitive");
        self.classes
            .binary_search(&f)
            .expect("composition of reduced forms is a reduced form of the group")
    }

    /// Index of the inverse class, represented by the mirror form `(a, -b, c)`.
    pub fn inverse_of(&self, i: usize) -> usize {
        let f = self.classes[i];
        let (r, _) = Form { a: f.a, b: -f.b, c: f.c }.reduce();
        self.classes.binary_search(&r).expect("mirror form is reduced or reduces into the list")
    }

    /// Multiplicative order of a class.
    pub fn order_of(&self, i: usize) -> usize {
        let mut k = i;
        let mut n = 1;
        while k != self.identity() {
            k = self.compose(k, i);
            n += 1;
            debug_assert!(n <= self.class_number());
        }
        n
    }

    /// The full composition table, `table[i][j] = compose(i, j)`.
    pub fn composition_table(&self) -> Vec<Vec<usize>> {
        let h = self.class_number();
        (0..h).map(|i| (0..h).map(|j| self.compose(i, j)).collect()).collect()
    }

    /// Classes of order at most two.  These are exactly the classes whose
    /// reduced form satisfies `b = 0`, `b = -a` or `a = c`.
    pub fn ambiguous_classes(&self) -> Vec<usize> {
        (0..self.class_number())
            .filter(|&i| {
                let f = self.classes[i];
                f.b == 0 || f.b == -f.a || f.a == f.c
            })
            .collect()
    }

    /// Classes whose reduced form is well-rounded (`a = c`): the attached
    /// plane lattice has its two shortest independent vectors of equal
    /// length.  Every well-rounded class is ambiguous.
    pub fn well_rounded_classes(&self) -> Vec<usize> {
        (0..self.class_number()).filter(|&i| self.classes[i].a == self.classes[i].c).collect()
    }

    /// Classes primitively representing `n > 0` (intended for prime `n`;
    /// for a split prime these are a class and its inverse, for a ramified
    /// prime a single ambiguous class, for an inert prime none).
    pub fn classes_representing(&self, n: Int) -> Vec<usize> {
        (0..self.class_number()).filter(|&i| self.classes[i].represents(n).is_some()).collect()
    }

    /// Genus of each class, as ids `0..genus_count`; the principal genus
    /// (the coset of the subgroup of squares) gets id 0.
    pub fn genus_partition(&self) -> Vec<usize> {
        let h = self.class_number();
        let squares: BTreeSet<usize> = (0..h).map(|i| self.compose(i, i)).collect();
        let mut genus = alloc::vec![usize::MAX; h];
        let mut next = 0;
        for i in 0..h {
            if genus[i] != usize::MAX {
                continue;
            }
            for &s in &squares {
                genus[self.compose(i, s)] = next;
            }
            next += 1;
        }
        genus
    }

    /// True when every genus contains a single class; equivalently the
    /// represented residues mod `|d|` determine the class exactly.
    pub fn one_class_per_genus(&self) -> bool {
        let p = self.genus_partition();
        let count = p.iter().max().map_or(0, |m| m + 1);
        count == self.class_number()
    }

    /// The residues mod `|d|` coprime to `d` represented by the genus of
    /// class `i`, by brute-force evaluation over a full period.  Classes in
    /// one genus produce identical sets.
    pub fn genus_values(&self, i: usize) -> Vec<Int> {
        let f = self.classes[i];
        let m = -self.disc;
        let (a, b, c) = (f.a.rem_euclid(m), f.b.rem_euclid(m), f.c.rem_euclid(m));
        let mut seen = BTreeSet::new();
        for x in 0..m {
            for y in 0..m {
                let v = (a * x * x + b * x * y + c * y * y).rem_euclid(m);
                if gcd(v, m) == 1 {
                    seen.insert(v);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The smallest prime `p <= cap` represented by class `i` (the smallest
    /// non-inert prime lying in the corresponding ideal class).
    pub fn smallest_prime(&self, i: usize, cap: Int) -> Option<Int> {
        let mut p = 2;
        while p <= cap {
            if is_prime(p)
                && kronecker(self.disc, p) >= 0
                && self.classes[i].represents(p).is_some()
            {
                return Some(p);
            }
            p += 1;
        }
        None
    }
}
