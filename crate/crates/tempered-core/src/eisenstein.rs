//! The Eisenstein integers `Z[w]`, `w = exp(2*pi*i/3)`, as the hexagonal
//! plane lattice, and the classification of its prime-index sublattices.
//!
//! A vector `x + y*w` has norm `x^2 - xy + y^2` (the hexagonal quadratic
//! form) and six unit multiples.  For a prime `ell` the `ell + 1`
//! sublattices of index `ell` pair with the ambient lattice to produce the
//! temperaments with a hexagonal side:
//!
//! * `3-and-3`: the ideal sublattices (ramified or split `ell`), with
//!   `tau^2 = ell`;
//! * `3-and-1`: the sublattice generated by a primitive vector of norm
//!   `beta < ell` together with `ell * Z[w]`, with `tau^2 = beta` — the
//!   admissible `beta` are found by a sieve on second-minimal vectors;
//! * `1-and-3`: the duals of the `3-and-1` pairs, with `tau^2 = ell^2/beta`.
//!
//! Every record produced here is re-checked against the definition by the
//! short-vector verifier before being returned.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use core::fmt;

use crate::arith::{ext_gcd, gcd, is_prime, isqrt, round};
use crate::mat::{self, Mat2};
use crate::verifier::{self, PairLattice};
use crate::{Error, Int, Rational, Result};

/// An Eisenstein integer `x + y*w` with `w^2 + w + 1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EisInt {
    pub x: Int,
    pub y: Int,
}

impl EisInt {
    pub fn new(x: Int, y: Int) -> EisInt {
        EisInt { x, y }
    }

    /// The norm `x^2 - xy + y^2 = |x + y*w|^2`, zero only at zero.
    pub fn norm(&self) -> Int {
        self.x * self.x - self.x * self.y + self.y * self.y
    }

    /// Complex conjugate: `conj(x + y*w) = (x - y) - y*w`.
    pub fn conj(&self) -> EisInt {
        EisInt::new(self.x - self.y, -self.y)
    }

    /// Multiplication by the unit `w`: rotation by 120 degrees.
    pub fn mul_omega(&self) -> EisInt {
        EisInt::new(-self.y, self.x - self.y)
    }

    pub fn scale(&self, k: Int) -> EisInt {
        EisInt::new(k * self.x, k * self.y)
    }

    /// `gcd(x, y) = 1`; primitive vectors are the ones not divisible by a
    /// rational integer `> 1`.
    pub fn is_primitive(&self) -> bool {
        gcd(self.x, self.y) == 1
    }

    /// The six unit multiples `{±v, ±w*v, ±w^2*v}` of `v`, in that order.
    pub fn unit_orbit(&self) -> [EisInt; 6] {
        let a = *self;
        let b = a.mul_omega();
        let c = b.mul_omega();
        [a, b, c, -a, -b, -c]
    }

    /// The lexicographically largest member of the unit orbit, used as the
    /// deterministic representative when listing orbits.
    pub fn canonical_orbit_rep(&self) -> EisInt {
        *self
            .unit_orbit()
            .iter()
            .max()
            .expect("orbit is nonempty")
    }
}

impl core::ops::Add for EisInt {
    type Output = EisInt;
    fn add(self, o: EisInt) -> EisInt {
        EisInt::new(self.x + o.x, self.y + o.y)
    }
}

impl core::ops::Sub for EisInt {
    type Output = EisInt;
    fn sub(self, o: EisInt) -> EisInt {
        EisInt::new(self.x - o.x, self.y - o.y)
    }
}

impl core::ops::Neg for EisInt {
    type Output = EisInt;
    fn neg(self) -> EisInt {
        EisInt::new(-self.x, -self.y)
    }
}

impl core::ops::Mul for EisInt {
    type Output = EisInt;
    /// `(a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd) w`.
    fn mul(self, o: EisInt) -> EisInt {
        EisInt::new(
            self.x * o.x - self.y * o.y,
            self.x * o.y + self.y * o.x - self.y * o.y,
        )
    }
}

impl fmt::Display for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (x, 0) => write!(f, "{x}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, y) => write!(f, "{y}w"),
            (x, 1) => write!(f, "{x}+w"),
            (x, -1) => write!(f, "{x}-w"),
            (x, y) if y > 0 => write!(f, "{x}+{y}w"),
            (x, y) => write!(f, "{x}{y}w"),
        }
    }
}

/// Twice the real inner product of `u` and `v` in the hexagonal metric:
/// `2 <u, v> = 2 u1 v1 + 2 u2 v2 - u1 v2 - u2 v1`.  Doubling keeps it an
/// integer; `inner_twice(v, v) = 2 norm(v)`.
pub fn inner_twice(u: &EisInt, v: &EisInt) -> Int {
    2 * u.x * v.x + 2 * u.y * v.y - u.x * v.y - u.y * v.x
}

/// How a rational prime behaves in `Z[w]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    /// `p = 3`: the square of the prime `(1 - w)` up to units.
    Ramified,
    /// `p = 1 mod 6`: a product of two conjugate primes of norm `p`.
    Split,
    /// `p = 2 mod 3`: stays prime, with norm `p^2`.
    Inert,
}

pub fn splitting(p: Int) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(if p == 3 {
        Splitting::Ramified
    } else if p % 6 == 1 {
        Splitting::Split
    } else {
        Splitting::Inert
    })
}

/// All primitive `v` with `norm(v) = n`, sorted by `(x, y)`.  Nonempty
/// exactly when `n = 3^d * (product of primes = 1 mod 6)` with `d <= 1`.
pub fn primitive_representations(n: Int) -> Vec<EisInt> {
    let mut out = Vec::new();
    if n < 1 {
        return out;
    }
    // norm(v) = n forces (2x - y)^2 + 3 y^2 = 4n, so |x|, |y| <= sqrt(4n/3).
    let r = isqrt(4 * n / 3) + 1;
    for x in -r..=r {
        for y in -r..=r {
            let v = EisInt::new(x, y);
            if v.norm() == n && v.is_primitive() {
                out.push(v);
            }
        }
    }
    out
}

/// A finite-index sublattice of `Z[w]`, held as the canonical Hermite
/// normal form `[[d1, e], [0, d2]]` of a row basis (`d1, d2 > 0`,
/// `0 <= e < d2`).  The rows are coordinates in the basis `{1, w}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EisSublattice {
    m: Mat2,
}

impl EisSublattice {
    /// Normalizes an arbitrary row basis.  Panics if the rows are linearly
    /// dependent.
    pub fn from_rows(rows: [[Int; 2]; 2]) -> EisSublattice {
        EisSublattice { m: mat::row_hnf(&rows) }
    }

    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    /// The index in `Z[w]`, i.e. the determinant of the basis matrix.
    pub fn index(&self) -> Int {
        self.m[0][0] * self.m[1][1]
    }

    pub fn basis(&self) -> (EisInt, EisInt) {
        (
            EisInt::new(self.m[0][0], self.m[0][1]),
            EisInt::new(self.m[1][0], self.m[1][1]),
        )
    }

    /// Membership by back-substitution against the triangular basis.
    pub fn contains(&self, v: &EisInt) -> bool {
        let [[d1, e], [_, d2]] = self.m;
        if v.x % d1 != 0 {
            return false;
        }
        (v.y - (v.x / d1) * e) % d2 == 0
    }

    /// An ideal of `Z[w]` is a sublattice closed under multiplication by
    /// `w`; it is enough to check the two basis vectors.
    pub fn is_ideal(&self) -> bool {
        let (b1, b2) = self.basis();
        self.contains(&b1.mul_omega()) && self.contains(&b2.mul_omega())
    }

    /// A Lagrange-reduced basis `(u, v)`: `norm(u) <= norm(v)` and
    /// `|inner_twice(u, v)| <= norm(u)`... the first vector attains the
    /// minimum of the sublattice and the second attains the minimum outside
    /// `Z u`.  Signs are normalized to `x > 0` (or `x = 0, y > 0`).
    pub fn reduced_basis(&self) -> (EisInt, EisInt) {
        let (mut u, mut v) = self.basis();
        if u.norm() > v.norm() {
            core::mem::swap(&mut u, &mut v);
        }
        loop {
            let k = round(Rational::new(inner_twice(&u, &v), 2 * u.norm()));
            v = v - u.scale(k);
            if v.norm() < u.norm() {
                core::mem::swap(&mut u, &mut v);
            } else {
                break;
            }
        }
        debug_assert!(inner_twice(&u, &v).abs() <= u.norm());
        let canonical = |w: EisInt| {
            if w.x < 0 || (w.x == 0 && w.y < 0) {
                -w
            } else {
                w
            }
        };
        (canonical(u), canonical(v))
    }

    /// The smallest norm of a nonzero vector of the sublattice.
    pub fn minimal_norm(&self) -> Int {
        self.reduced_basis().0.norm()
    }
}

/// The `ell + 1` sublattices of prime index `ell`, sorted by basis matrix:
/// `[[1, k], [0, ell]]` for `0 <= k < ell`, then `[[ell, 0], [0, 1]]`.
pub fn sublattices(ell: Int) -> Result<Vec<EisSublattice>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let mut out = Vec::with_capacity((ell + 1) as usize);
    for k in 0..ell {
        out.push(EisSublattice { m: [[1, k], [0, ell]] });
    }
    out.push(EisSublattice { m: [[ell, 0], [0, 1]] });
    Ok(out)
}

/// The unique index-`ell` sublattice containing a primitive vector `v`,
/// namely `Z v + ell Z[w]`.
pub fn sublattice_containing(v: &EisInt, ell: Int) -> Result<EisSublattice> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if !v.is_primitive() {
        return Err(Error::ImprimitiveVector { x: v.x, y: v.y });
    }
    let (_, s, t) = ext_gcd(v.x, v.y);
    let m = EisSublattice::from_rows([[v.x, v.y], [-ell * t, ell * s]]);
    debug_assert!(m.contains(v));
    debug_assert_eq!(m.index(), ell);
    Ok(m)
}

/// A second-minimal vector of `Z v + ell Z[w]` for a primitive `v` of norm
/// below `ell`: the shortest vector outside the line `Z v`.  Completes `v`
/// to a basis `{v, w}` of `Z[w]` and minimizes `norm(ell*w + k*v)` over the
/// integers `k` near the orthogonal projection; ties take the smaller `k`.
pub fn second_minimal(v: &EisInt, ell: Int) -> Result<EisInt> {
    let m = sublattice_containing(v, ell)?;
    let n = v.norm();
    if n >= ell {
        return Err(Error::NormTooLarge { norm: n, limit: ell });
    }
    let (_, s, t) = ext_gcd(v.x, v.y);
    let w = EisInt::new(-t, s);
    let t0 = Rational::new(-ell * inner_twice(&w, v), 2 * n);
    let lo = t0.floor().to_integer() - 1;
    let hi = t0.ceil().to_integer() + 1;
    let mut best: Option<EisInt> = None;
    for k in lo..=hi {
        let cand = w.scale(ell) + v.scale(k);
        if best.is_none_or(|b| cand.norm() < b.norm()) {
            best = Some(cand);
        }
    }
    let found = best.expect("window is nonempty");
    // Cross-check: {norm(v), norm(found)} must be the successive minima of
    // the sublattice as computed by full basis reduction.
    #[cfg(debug_assertions)]
    {
        let (b1, b2) = m.reduced_basis();
        let mut got = [n, found.norm()];
        got.sort_unstable();
        let mut want = [b1.norm(), b2.norm()];
        want.sort_unstable();
        debug_assert_eq!(got, want);
    }
    let _ = m;
    Ok(found)
}

/// Which temperament shape a hexagonal record realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemperedKind {
    ThreeThree,
    ThreeOne,
    OneThree,
}

impl fmt::Display for TemperedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TemperedKind::ThreeThree => "3-and-3",
            TemperedKind::ThreeOne => "3-and-1",
            TemperedKind::OneThree => "1-and-3",
        })
    }
}

/// A verified tempered pair with a hexagonal side.  `witness` is a vector
/// whose norm controls the temperament and `sublattice` is the index-`ell`
/// sublattice realizing it (for `1-and-3` the pair is the *dual* of the
/// stored hexagonal pair).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemperedRecord {
    pub kind: TemperedKind,
    pub ell: Int,
    pub s: usize,
    pub s_prime: usize,
    pub tau_squared: Rational,
    pub witness: EisInt,
    pub sublattice: EisSublattice,
}

impl TemperedRecord {
    /// The lattice pair realizing this record.
    pub fn pair(&self) -> PairLattice {
        let base = PairLattice::new(
            verifier::Gram::hexagonal(),
            self.sublattice.matrix(),
            self.ell,
        )
        .expect("hexagonal pairs are valid");
        match self.kind {
            TemperedKind::OneThree => verifier::dualize(&base),
            _ => base,
        }
    }

    /// Re-derives the classification from the definition and panics if it
    /// disagrees with the record.  Every constructor in this module calls
    /// this before returning a record.
    pub fn verify(&self) {
        let c = verifier::classify(&self.pair());
        assert!(
            c.tempered
                && c.s == self.s
                && c.s_prime == self.s_prime
                && c.tau_squared == self.tau_squared,
            "record does not match its from-scratch classification"
        );
    }
}

/// The `3-and-3` pair at `ell`, present unless `ell` is inert: the ideal of
/// norm `ell` (either of the two conjugate ideals when `ell` splits; they
/// are isometric), with `tau^2 = ell`.
pub fn three_three(ell: Int) -> Result<Option<TemperedRecord>> {
    if splitting(ell)? == Splitting::Inert {
        return Ok(None);
    }
    let reps = primitive_representations(ell);
    let witness = reps[0].canonical_orbit_rep();
    let sublattice = sublattice_containing(&witness, ell)?;
    debug_assert!(sublattice.is_ideal());
    let rec = TemperedRecord {
        kind: TemperedKind::ThreeThree,
        ell,
        s: 3,
        s_prime: 3,
        tau_squared: Rational::from_integer(ell),
        witness,
        sublattice,
    };
    rec.verify();
    Ok(Some(rec))
}

/// The sieve for `3-and-1` norms in the window `3*ell/4 <= beta < ell`
/// (where the Hermite bound no longer guarantees the witness is minimal).
///
/// Orbits of primitive vectors are listed per norm, smallest first.  Each
/// live orbit records its norm and then crosses out the orbit of the
/// second-minimal vector of its sublattice whenever that vector is
/// primitive of norm below `ell`: such a sublattice was already counted at
/// the smaller norm, so its larger minimum-candidate must not be recorded
/// for it again... the crossed-out orbit's own sublattice coincides with
/// the recording orbit's, which keeps exactly the realizable norms.
pub fn algorithm_one(ell: Int) -> Result<Vec<Int>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let lo = (3 * ell + 3) / 4;
    let mut slots: Vec<(Int, Vec<(EisInt, bool)>)> = Vec::new();
    for beta in lo..ell {
        let reps = primitive_representations(beta);
        if reps.is_empty() {
            continue;
        }
        let orbits: BTreeSet<EisInt> =
            reps.iter().map(EisInt::canonical_orbit_rep).collect();
        debug_assert_eq!(orbits.len() * 6, reps.len());
        slots.push((beta, orbits.into_iter().map(|r| (r, true)).collect()));
    }
    let mut recorded: BTreeSet<Int> = BTreeSet::new();
    for i in 0..slots.len() {
        for j in 0..slots[i].1.len() {
            if !slots[i].1[j].1 {
                continue;
            }
            let (beta, v) = (slots[i].0, slots[i].1[j].0);
            recorded.insert(beta);
            let w = second_minimal(&v, ell)?;
            let wn = w.norm();
            debug_assert!(wn > beta, "second minimum exceeds a sub-`ell` first minimum");
            if wn < ell && w.is_primitive() {
                let wrep = w.canonical_orbit_rep();
                let slot = slots
                    .iter_mut()
                    .find(|(norm, _)| *norm == wn)
                    .expect("every primitively represented norm below ell is listed");
                let entry = slot
                    .1
                    .iter_mut()
                    .find(|(rep, _)| *rep == wrep)
                    .expect("listed norms carry all their orbits");
                entry.1 = false;
            }
        }
    }
    Ok(recorded.into_iter().collect())
}

/// All `3-and-1` records at `ell`, sorted by `tau^2 = beta`:
/// * every primitively represented `beta` with `1 < beta` and
///   `4 beta^2 < 3 ell^2` (the Hermite bound makes the witness minimal);
/// * plus the sieved norms from the window `[3*ell/4, ell)`.
pub fn three_one_records(ell: Int) -> Result<Vec<TemperedRecord>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let mut norms: BTreeSet<Int> = BTreeSet::new();
    let mut beta = 2;
    while 4 * beta * beta < 3 * ell * ell {
        if !primitive_representations(beta).is_empty() {
            norms.insert(beta);
        }
        beta += 1;
    }
    for beta in algorithm_one(ell)? {
        norms.insert(beta);
    }
    let mut out = Vec::new();
    for beta in norms {
        let reps = primitive_representations(beta);
        let witness = reps[0].canonical_orbit_rep();
        let sublattice = sublattice_containing(&witness, ell)?;
        let rec = TemperedRecord {
            kind: TemperedKind::ThreeOne,
            ell,
            s: 3,
            s_prime: 1,
            tau_squared: Rational::from_integer(beta),
            witness,
            sublattice,
        };
        rec.verify();
        out.push(rec);
    }
    Ok(out)
}

/// The temperaments `tau^2` of the `3-and-1` records, ascending.
pub fn three_one_temperaments(ell: Int) -> Result<Vec<Rational>> {
    Ok(three_one_records(ell)?.iter().map(|r| r.tau_squared).collect())
}

/// All `1-and-3` records at `ell`: the duals of the `3-and-1` pairs, with
/// `tau^2 = ell^2 / beta`, sorted ascending by `tau^2`.
pub fn one_three_records(ell: Int) -> Result<Vec<TemperedRecord>> {
    let mut out: Vec<TemperedRecord> = three_one_records(ell)?
        .into_iter()
        .map(|r| {
            let beta = *r.tau_squared.numer();
            let rec = TemperedRecord {
                kind: TemperedKind::OneThree,
                s: 1,
                s_prime: 3,
                tau_squared: Rational::new(ell * ell, beta),
                ..r
            };
            rec.verify();
            rec
        })
        .collect();
    out.sort_unstable_by_key(|r| r.tau_squared);
    Ok(out)
}

/// The temperaments `tau^2` of the `1-and-3` records, ascending.
pub fn one_three_temperaments(ell: Int) -> Result<Vec<Rational>> {
    Ok(one_three_records(ell)?.iter().map(|r| r.tau_squared).collect())
}

/// The set `E_ell(n)` of index-`ell` sublattices containing a vector of
/// norm `n`, for `n < ell` (each primitive pair `{v, -v}` determines its
/// sublattice uniquely).  Sorted by basis matrix.
pub fn e_set(ell: Int, n: Int) -> Result<Vec<EisSublattice>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if n >= ell {
        return Err(Error::NormTooLarge { norm: n, limit: ell });
    }
    let set: BTreeSet<EisSublattice> = primitive_representations(n)
        .iter()
        .map(|v| sublattice_containing(v, ell))
        .collect::<Result<_>>()?;
    debug_assert_eq!(set.len(), expected_e_count(n));
    Ok(set.into_iter().collect())
}

/// `|E_ell(n)|`; equals `3 * 2^(number of split primes dividing n)` when
/// `n` is primitively represented, else `0`.
pub fn e_count(ell: Int, n: Int) -> Result<usize> {
    Ok(e_set(ell, n)?.len())
}

/// The closed-form count behind `e_count`, from the factorization of `n`.
fn expected_e_count(n: Int) -> usize {
    if n < 1 {
        return 0;
    }
    let mut m = n;
    let mut split = 0u32;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if p == 3 {
                if e > 1 {
                    return 0;
                }
            } else if p % 6 == 1 {
                split += 1;
            } else {
                return 0;
            }
        }
        p += 1;
    }
    if m > 1 {
        if m == 3 {
            // a single leftover factor 3 is fine
        } else if m % 6 == 1 {
            split += 1;
        } else {
            return 0;
        }
    }
    3 * (1usize << split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn e(x: Int, y: Int) -> EisInt {
        EisInt::new(x, y)
    }

    #[test]
    fn test_norm_and_conjugate() {
        assert_eq!(e(1, 0).norm(), 1);
        assert_eq!(e(0, 1).norm(), 1);
        assert_eq!(e(1, 1).norm(), 1);
        assert_eq!(e(2, -1).norm(), 7);
        assert_eq!(e(3, 4).norm(), 13);
        assert_eq!(e(2, -1).conj(), e(3, 1));
        assert_eq!(e(3, 1).conj(), e(2, -1));
        // Conjugation preserves the norm; w * conj(w)-type identities.
        for x in -4..=4 {
            for y in -4..=4 {
                let v = e(x, y);
                assert_eq!(v.conj().norm(), v.norm());
                assert_eq!(v.conj().conj(), v);
            }
        }
    }

    #[test]
    fn test_ring_identities() {
        let w = e(0, 1);
        // w^3 = 1 and w^2 + w + 1 = 0.
        assert_eq!(w * w * w, e(1, 0));
        assert_eq!(w * w + w + e(1, 0), e(0, 0));
        assert_eq!(w.mul_omega(), w * w);
        // Norm is multiplicative.
        for x in -3..=3_i128 {
            for y in -3..=3 {
                let a = e(x, y);
                let b = e(2, -1);
                assert_eq!((a * b).norm(), a.norm() * b.norm());
                assert_eq!(a.mul_omega(), a * w);
            }
        }
    }

    #[test]
    fn test_inner_twice_polarization() {
        for x in -3..=3 {
            for y in -3..=3 {
                for z in -3..=3 {
                    for t in -3..=3 {
                        let u = e(x, y);
                        let v = e(z, t);
                        assert_eq!(
                            (u + v).norm() - u.norm() - v.norm(),
                            inner_twice(&u, &v)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn test_unit_orbit() {
        let units = e(1, 0).unit_orbit();
        assert_eq!(
            units,
            [e(1, 0), e(0, 1), e(-1, -1), e(-1, 0), e(0, -1), e(1, 1)]
        );
        assert_eq!(e(1, 0).canonical_orbit_rep(), e(1, 1));
        // Orbit members share a canonical representative.
        let v = e(2, -1);
        for u in v.unit_orbit() {
            assert_eq!(u.canonical_orbit_rep(), v.canonical_orbit_rep());
            assert_eq!(u.norm(), 7);
        }
        assert_eq!(v.canonical_orbit_rep(), e(3, 2));
    }

    #[test]
    fn test_display() {
        assert_eq!(format!("{}", e(0, 0)), "0");
        assert_eq!(format!("{}", e(1, 0)), "1");
        assert_eq!(format!("{}", e(-1, 0)), "-1");
        assert_eq!(format!("{}", e(0, 1)), "w");
        assert_eq!(format!("{}", e(0, -1)), "-w");
        assert_eq!(format!("{}", e(0, 3)), "3w");
        assert_eq!(format!("{}", e(2, -1)), "2-w");
        assert_eq!(format!("{}", e(1, 3)), "1+3w");
        assert_eq!(format!("{}", e(-2, -3)), "-2-3w");
    }

    #[test]
    fn test_splitting() {
        assert_eq!(splitting(3), Ok(Splitting::Ramified));
        assert_eq!(splitting(7), Ok(Splitting::Split));
        assert_eq!(splitting(13), Ok(Splitting::Split));
        assert_eq!(splitting(2), Ok(Splitting::Inert));
        assert_eq!(splitting(5), Ok(Splitting::Inert));
        assert_eq!(splitting(11), Ok(Splitting::Inert));
        assert_eq!(splitting(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn test_primitive_representations() {
        assert_eq!(primitive_representations(1).len(), 6);
        assert_eq!(primitive_representations(3).len(), 6);
        assert_eq!(primitive_representations(7).len(), 12);
        assert_eq!(primitive_representations(21).len(), 12);
        assert_eq!(primitive_representations(49).len(), 12);
        assert!(primitive_representations(2).is_empty());
        assert!(primitive_representations(4).is_empty());
        assert!(primitive_representations(9).is_empty());
        assert!(primitive_representations(0).is_empty());
        // Sorted and actually of the right norm.
        let reps = primitive_representations(7);
        let mut sorted = reps.clone();
        sorted.sort_unstable();
        assert_eq!(reps, sorted);
        for v in &reps {
            assert_eq!(v.norm(), 7);
            assert!(v.is_primitive());
        }
    }

    #[test]
    fn test_representability_matches_factorization() {
        // Nonempty exactly when the closed-form count is nonzero.
        for n in 1..=200 {
            let reps = primitive_representations(n);
            assert_eq!(
                !reps.is_empty(),
                expected_e_count(n) != 0,
                "n = {n}"
            );
            if !reps.is_empty() {
                assert_eq!(reps.len(), 2 * expected_e_count(n), "n = {n}");
            }
        }
    }

    #[test]
    fn test_sublattices() {
        let subs = sublattices(7).unwrap();
        assert_eq!(subs.len(), 8);
        for s in &subs {
            assert_eq!(s.index(), 7);
        }
        // Exactly the two ideals above the split prime 7: k^2 - k + 1 = 0
        // mod 7 at k = 3 and k = 5.
        let ideals: Vec<Mat2> =
            subs.iter().filter(|s| s.is_ideal()).map(|s| s.matrix()).collect();
        assert_eq!(ideals, vec![[[1, 3], [0, 7]], [[1, 5], [0, 7]]]);
        assert_eq!(sublattices(4), Err(Error::NotPrime(4)));
        // Inert: no ideals of prime index; ramified: exactly one.
        assert_eq!(sublattices(11).unwrap().iter().filter(|s| s.is_ideal()).count(), 0);
        assert_eq!(sublattices(13).unwrap().iter().filter(|s| s.is_ideal()).count(), 2);
        let ram: Vec<Mat2> = sublattices(3)
            .unwrap()
            .iter()
            .filter(|s| s.is_ideal())
            .map(|s| s.matrix())
            .collect();
        assert_eq!(ram, vec![[[1, 2], [0, 3]]]);
    }

    #[test]
    fn test_contains() {
        let m = EisSublattice::from_rows([[1, 5], [0, 11]]);
        assert!(m.contains(&e(2, -1)));
        assert!(m.contains(&e(1, 5)));
        assert!(m.contains(&e(0, 11)));
        assert!(!m.contains(&e(1, 0)));
        assert!(!m.contains(&e(0, 1)));
        let diag = EisSublattice::from_rows([[7, 0], [0, 1]]);
        assert!(diag.contains(&e(0, 1)));
        assert!(!diag.contains(&e(1, 0)));
    }

    #[test]
    fn test_sublattice_containing() {
        let m = sublattice_containing(&e(2, -1), 11).unwrap();
        assert_eq!(m.matrix(), [[1, 5], [0, 11]]);
        let m2 = sublattice_containing(&e(1, 0), 2).unwrap();
        assert_eq!(m2.matrix(), [[1, 0], [0, 2]]);
        assert_eq!(
            sublattice_containing(&e(2, 4), 11),
            Err(Error::ImprimitiveVector { x: 2, y: 4 })
        );
        assert_eq!(sublattice_containing(&e(1, 0), 6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn test_sublattice_containing_is_unique() {
        // Scan: each primitive vector lies in exactly one index-ell
        // sublattice, the one the constructor returns.
        for ell in [5, 7] {
            let subs = sublattices(ell).unwrap();
            for x in -6..=6 {
                for y in -6..=6 {
                    let v = e(x, y);
                    if !v.is_primitive() {
                        continue;
                    }
                    let hits: Vec<&EisSublattice> =
                        subs.iter().filter(|m| m.contains(&v)).collect();
                    assert_eq!(hits.len(), 1);
                    assert_eq!(*hits[0], sublattice_containing(&v, ell).unwrap());
                }
            }
        }
    }

    #[test]
    fn test_reduced_basis() {
        let m = EisSublattice::from_rows([[1, 5], [0, 11]]);
        let (u, v) = m.reduced_basis();
        assert_eq!((u, v), (e(2, -1), e(3, 4)));
        assert_eq!((u.norm(), v.norm()), (7, 13));
        assert_eq!(m.minimal_norm(), 7);
        // Ideals are hexagonal: both minima equal the index.
        let p7 = EisSublattice::from_rows([[1, 3], [0, 7]]);
        let (a, b) = p7.reduced_basis();
        assert_eq!((a.norm(), b.norm()), (7, 7));
        assert_eq!(p7.minimal_norm(), 7);
        let unit_sub = EisSublattice::from_rows([[1, 0], [0, 7]]);
        assert_eq!(unit_sub.minimal_norm(), 1);
    }

    #[test]
    fn test_second_minimal() {
        // Successive minima 7 and 13 for the sublattice of 2 - w at 11.
        assert_eq!(second_minimal(&e(2, -1), 11).unwrap().norm(), 13);
        // At ell = 2 the sublattice of 1 has second minimum of norm 3.
        assert_eq!(second_minimal(&e(1, 0), 2).unwrap().norm(), 3);
        // At ell = 7: minimize x^2 - 7x + 49, attained at x = 3 (tie with 4
        // broken toward the smaller coefficient).
        assert_eq!(second_minimal(&e(1, 0), 7).unwrap(), e(3, 7));
        assert_eq!(second_minimal(&e(1, 0), 7).unwrap().norm(), 37);
        // The result lies in the sublattice, off the line through v.
        let v = e(2, -1);
        let w = second_minimal(&v, 23).unwrap();
        let m = sublattice_containing(&v, 23).unwrap();
        assert!(m.contains(&w));
        assert_ne!(v.x * w.y - v.y * w.x, 0);
        // Errors.
        assert_eq!(
            second_minimal(&e(2, -1), 7),
            Err(Error::NormTooLarge { norm: 7, limit: 7 })
        );
        assert_eq!(
            second_minimal(&e(2, 4), 11),
            Err(Error::ImprimitiveVector { x: 2, y: 4 })
        );
        assert_eq!(second_minimal(&e(1, 0), 6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn test_three_three() {
        let rec = three_three(7).unwrap().unwrap();
        assert_eq!(rec.kind, TemperedKind::ThreeThree);
        assert_eq!((rec.s, rec.s_prime), (3, 3));
        assert_eq!(rec.tau_squared, Rational::from_integer(7));
        assert!(rec.sublattice.is_ideal());
        assert_eq!(rec.witness.norm(), 7);
        let ram = three_three(3).unwrap().unwrap();
        assert_eq!(ram.tau_squared, Rational::from_integer(3));
        assert!(three_three(11).unwrap().is_none());
        assert!(three_three(2).unwrap().is_none());
        assert_eq!(three_three(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn test_algorithm_one() {
        assert_eq!(algorithm_one(7).unwrap(), vec![]);
        assert_eq!(algorithm_one(11).unwrap(), vec![]);
        assert_eq!(algorithm_one(13).unwrap(), vec![]);
        assert_eq!(algorithm_one(17).unwrap(), vec![13]);
        // At 23 the window holds 19 and 21; the two 19-orbits cross out
        // both 21-orbits, leaving 19 alone.
        assert_eq!(algorithm_one(23).unwrap(), vec![19]);
        assert_eq!(algorithm_one(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn test_three_one_temperaments() {
        let taus = |ell: Int| -> Vec<Int> {
            three_one_temperaments(ell)
                .unwrap()
                .iter()
                .map(|t| *t.numer())
                .collect()
        };
        assert_eq!(taus(7), vec![3]);
        assert_eq!(taus(11), vec![3, 7]);
        assert_eq!(taus(17), vec![3, 7, 13]);
        assert_eq!(taus(23), vec![3, 7, 13, 19]);
        assert!(taus(2).is_empty());
        assert!(taus(3).is_empty());
        assert_eq!(taus(5), vec![3]);
    }

    #[test]
    fn test_three_one_records_structure() {
        for rec in three_one_records(23).unwrap() {
            assert_eq!(rec.kind, TemperedKind::ThreeOne);
            assert_eq!((rec.s, rec.s_prime), (3, 1));
            assert_eq!(rec.ell, 23);
            assert_eq!(Rational::from_integer(rec.witness.norm()), rec.tau_squared);
            assert!(rec.sublattice.contains(&rec.witness));
            // verify() already ran in the constructor; run it again.
            rec.verify();
        }
    }

    #[test]
    fn test_one_three_records() {
        let recs = one_three_records(11).unwrap();
        let taus: Vec<Rational> = recs.iter().map(|r| r.tau_squared).collect();
        assert_eq!(taus, vec![Rational::new(121, 7), Rational::new(121, 3)]);
        for rec in recs {
            assert_eq!(rec.kind, TemperedKind::OneThree);
            assert_eq!((rec.s, rec.s_prime), (1, 3));
        }
    }

    #[test]
    fn test_sieve_agrees_with_hermite_range_in_overlap() {
        // In [3*ell/4, sqrt(3)*ell/2) both the Hermite bound and the sieve
        // apply; they must agree (those orbits are never crossed out).
        for ell in [11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59] {
            let t = algorithm_one(ell).unwrap();
            let lo = (3 * ell + 3) / 4;
            for beta in lo..ell {
                if 4 * beta * beta < 3 * ell * ell {
                    assert_eq!(
                        t.contains(&beta),
                        !primitive_representations(beta).is_empty(),
                        "ell = {ell}, beta = {beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn test_e_count() {
        assert_eq!(e_count(7, 1).unwrap(), 3);
        assert_eq!(e_count(7, 3).unwrap(), 3);
        assert_eq!(e_count(7, 2).unwrap(), 0);
        assert_eq!(e_count(7, 4).unwrap(), 0);
        assert_eq!(e_count(11, 7).unwrap(), 6);
        assert_eq!(e_count(23, 19).unwrap(), 6);
        assert_eq!(e_count(23, 21).unwrap(), 6);
        assert_eq!(e_count(13, 12).unwrap(), 0);
        assert_eq!(e_count(7, 7), Err(Error::NormTooLarge { norm: 7, limit: 7 }));
        assert_eq!(e_count(6, 1), Err(Error::NotPrime(6)));
    }

    #[test]
    fn test_e_set_intersections() {
        // Sublattices recorded at 19 all contain a 21-vector (their second
        // minima), so E(19) is a subset of E(21) at ell = 23.
        let e19 = e_set(23, 19).unwrap();
        let e21 = e_set(23, 21).unwrap();
        assert_eq!(e19.len(), 6);
        assert_eq!(e21.len(), 6);
        let inter: Vec<&EisSublattice> =
            e19.iter().filter(|m| e21.contains(m)).collect();
        assert_eq!(inter.len(), 6);
        // Norms 3 and 7 cannot coexist in an index-23 sublattice.
        let e3 = e_set(23, 3).unwrap();
        let e7 = e_set(23, 7).unwrap();
        assert_eq!(e3.iter().filter(|m| e7.contains(m)).count(), 0);
    }
}
