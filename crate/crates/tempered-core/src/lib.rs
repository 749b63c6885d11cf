//! Exact arithmetic for tempered perfect forms on pairs of plane lattices.
//!
//! A *pair* is a lattice `L` in the plane together with a sublattice `M` of
//! prime index `ell`.  A positive definite quadratic form on `L` is *tempered
//! perfect* when its minimal vectors outside `M` all take the value 1, its
//! minimal vectors inside `M` share a common value `u >= 1`, the form is
//! strictly larger everywhere else, the minimal-vector conditions pin the form
//! down uniquely, and the *temperament* `tau` satisfies `tau^2 = u`.  Writing
//! `s` for the number of `{v, -v}` pairs of minimal vectors outside `M` and
//! `s'` for the number inside, such a form is called *s-and-s'*.
//!
//! Everything here is computed with exact integer and rational arithmetic
//! (128-bit integers, `Ratio<i128>`); no floating point enters any
//! classification decision.  The crate is `no_std` (with `alloc`), so the
//! arithmetic can be embedded anywhere; file formats, command-line handling
//! and rendering live in the companion `tempered-cli` crate.
//!
//! Module map:
//!
//! * [`bqf`] — integral binary quadratic forms: reduction, duality,
//!   representation of integers, the distinguished basis of the associated
//!   plane lattice.
//! * [`classgroup`] — form class groups of negative discriminants:
//!   enumeration of reduced forms, composition, ambiguous / well-rounded
//!   classes, genus theory, well-rounded discriminant witnesses.
//! * [`eisenstein`] — the hexagonal lattice `Z[w]`: prime splitting,
//!   sublattices of prime index, second minima, and the 3-and-s' temperament
//!   lists.
//! * [`two_two`] — enumeration of all 2-and-2 tempered perfect forms for a
//!   given prime, discriminant scans and congruence descriptions.
//! * [`verifier`] — an independent definition-level checker: given a Gram
//!   matrix and a sublattice it recomputes minima by exhaustive short-vector
//!   enumeration and classifies the pair from scratch.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bqf;
pub mod classgroup;
pub mod eisenstein;
pub mod mat;
pub mod two_two;
pub mod verifier;

use core::fmt;

/// Integer type used throughout the crate.
///
/// 128 bits comfortably covers every intermediate this crate produces
/// (the largest are squares of composition coefficients, far below 2^120).
pub type Int = i128;

/// Exact rational number over [`Int`], always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::Ratio<Int>;

/// Errors reported by the operations in this crate.
///
/// Only genuinely caller-visible failures are errors; internal consistency
/// violations (which would indicate a bug, not bad input) are asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The integer is not a discriminant of a binary quadratic form:
    /// it is not negative, or is not congruent to 0 or 1 modulo 4.
    NotADiscriminant(Int),
    /// A form had a different discriminant than the context required.
    WrongDiscriminant { expected: Int, found: Int },
    /// The form is not primitive (gcd of coefficients exceeds 1).
    ImprimitiveForm { a: Int, b: Int, c: Int },
    /// The form is not positive definite.
    NotPositiveDefinite { a: Int, b: Int, c: Int },
    /// A vector that must be primitive (coprime coordinates) is not.
    ImprimitiveVector { x: Int, y: Int },
    /// The argument must be prime but is not.
    NotPrime(Int),
    /// A vector's norm is too large for the requested operation.
    NormTooLarge { norm: Int, limit: Int },
    /// The Gram matrix is not positive definite.
    DegenerateGram,
    /// The sublattice matrix does not have the required index.
    WrongIndex { expected: Int, found: Int },
    /// No well-rounded class exists for this discriminant.
    NoWellRoundedClass(Int),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotADiscriminant(d) => {
                write!(f, "{d} is not a negative discriminant (need d < 0 and d = 0 or 1 mod 4)")
            }
            Error::WrongDiscriminant { expected, found } => {
                write!(f, "form has discriminant {found}, expected {expected}")
            }
            Error::ImprimitiveForm { a, b, c } => {
                write!(f, "form ({a},{b},{c}) is not primitive")
            }
            Error::NotPositiveDefinite { a, b, c } => {
                write!(f, "form ({a},{b},{c}) is not positive definite")
            }
            Error::ImprimitiveVector { x, y } => {
                write!(f, "vector ({x},{y}) is not primitive")
            }
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::NormTooLarge { norm, limit } => {
                write!(f, "norm {norm} is too large (must be below {limit})")
            }
            Error::DegenerateGram => write!(f, "Gram matrix is not positive definite"),
            Error::WrongIndex { expected, found } => {
                write!(f, "sublattice has index {found}, expected {expected}")
            }
            Error::NoWellRoundedClass(d) => {
                write!(f, "discriminant {d} has no well-rounded class")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Shorthand result type for fallible operations in this crate.
pub type Result<T> = core::result::Result<T, Error>;
