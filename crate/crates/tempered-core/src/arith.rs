//! Small exact-arithmetic helpers shared by the other modules.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use crate::{Int, Rational};

/// Greatest common divisor, always non-negative.
pub fn gcd(a: Int, b: Int) -> Int {
    a.gcd(&b)
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    if b == 0 {
        if a < 0 {
            return (-a, -1, 0);
        }
        return (a, 1, 0);
    }
    let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
    // g = b*x + (a - b*floor(a/b))*y
    (g, y, x - a.div_euclid(b) * y)
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: Int) -> Int {
    debug_assert!(n >= 0);
    n.sqrt()
}

/// Floor of the square root of a non-negative rational.
pub fn floor_sqrt(q: Rational) -> Int {
    debug_assert!(!q.is_negative());
    if q.is_zero() {
        return 0;
    }
    let (n, d) = (*q.numer(), *q.denom());
    let mut k = isqrt(n / d);
    while (k + 1) * (k + 1) * d <= n {
        k += 1;
    }
    while k * k * d > n {
        k -= 1;
    }
    k
}

/// Nearest integer to a rational, ties rounded toward negative infinity
/// (any fixed tie rule works for the minimization windows that call this).
pub fn round(q: Rational) -> Int {
    (q + Rational::new(1, 2)).floor().to_integer()
}

/// Deterministic primality test by trial division; exact for the full `Int`
/// range this crate exercises (inputs stay far below 2^64).
pub fn is_prime(n: Int) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes up to and including `n`, by sieve of Eratosthenes.
pub fn primes_up_to(n: Int) -> Vec<Int> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as Int);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// Sorted list of the positive divisors of `n > 0`.
pub fn divisors(n: Int) -> Vec<Int> {
    debug_assert!(n > 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
