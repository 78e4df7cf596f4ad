//! Closed-form counting: binomial coefficients, Fibonacci and Lucas
//! numbers, and the explicit formulas for self-inverse composition counts
//! by part count and weight parity.
//!
//! Everything returns arbitrary-precision integers; there are no
//! floating-point shortcuts anywhere.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with the out-of-range convention: returns 0 when
/// `k < 0`, `k > n` or `n < 0`, so summation formulas can be evaluated with
/// their literal index bounds.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    linear_pair(n, BigUint::zero(), BigUint::one())
}

/// `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> BigUint {
    linear_pair(n, BigUint::from(2u32), BigUint::one())
}

fn linear_pair(n: u64, seed0: BigUint, seed1: BigUint) -> BigUint {
    let (mut prev, mut curr) = (seed0, seed1);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &prev + &curr;
        prev = curr;
        curr = next;
    }
    curr
}

/// Self-inverse compositions of the odd weight `2*nu - 1` into `2*m - 1`
/// parts: an odd central part `2l - 1` flanked by two identical
/// compositions of `nu - l` into `m - 1` parts. The `m = 1` case is the
/// bare central part, which can take `2*nu - 1` colours.
pub fn count_si_odd_weight(m: u64, nu: u64) -> BigUint {
    debug_assert!(m >= 1 && nu >= 1);
    if m == 1 {
        return BigUint::from(2 * nu - 1);
    }
    let (m, nu) = (m as i64, nu as i64);
    let mut acc = BigUint::zero();
    for l in 1..=nu - 1 {
        acc += BigUint::from((2 * l - 1) as u64) * binomial(nu + m - l - 2, 2 * m - 3);
    }
    acc
}

/// Self-inverse compositions of the even weight `2*nu` into `2*m` parts:
/// two mirror-image halves, each a composition of `nu` into `m` parts.
pub fn count_si_even_weight_even_parts(m: u64, nu: u64) -> BigUint {
    debug_assert!(m >= 1 && nu >= 1);
    let (m, nu) = (m as i64, nu as i64);
    binomial(nu + m - 1, 2 * m - 1)
}

/// Self-inverse compositions of the even weight `2*nu` into `2*m - 1`
/// parts: an even central part `2l` flanked by mirror halves. The `m = 1`
/// case is the single part of size `2*nu`, in `2*nu` colours.
pub fn count_si_even_weight_odd_parts(m: u64, nu: u64) -> BigUint {
    debug_assert!(m >= 1 && nu >= 1);
    if m == 1 {
        return BigUint::from(2 * nu);
    }
    let (m, nu) = (m as i64, nu as i64);
    let mut acc = BigUint::zero();
    for l in 1..=nu - 1 {
        acc += BigUint::from((2 * l) as u64) * binomial(nu + m - l - 2, 2 * m - 3);
    }
    acc
}

/// Number of self-inverse compositions of `nu` into exactly `m` parts,
/// dispatching on the parities of `m` and `nu`. An even number of parts
/// forces an even weight, so the (even, odd) case is always zero.
pub fn count_a(m: u64, nu: u64) -> BigUint {
    debug_assert!(m >= 1 && nu >= 1);
    match (m.is_multiple_of(2), nu.is_multiple_of(2)) {
        (false, false) => count_si_odd_weight(m.div_ceil(2), nu.div_ceil(2)),
        (true, true) => count_si_even_weight_even_parts(m / 2, nu / 2),
        (false, true) => count_si_even_weight_odd_parts(m.div_ceil(2), nu / 2),
        (true, false) => BigUint::zero(),
    }
}

/// Self-inverse compositions of `2*nu` into an even number of parts,
/// summed over all part counts.
pub fn b_closed(nu: u64) -> BigUint {
    debug_assert!(nu >= 1);
    let nu = nu as i64;
    let mut acc = BigUint::zero();
    for m in 1..=nu {
        acc += binomial(nu + m - 1, 2 * m - 1);
    }
    acc
}

/// Self-inverse compositions of `2*nu` into an odd number of parts,
/// summed over all part counts.
pub fn c_closed(nu: u64) -> BigUint {
    debug_assert!(nu >= 1);
    let mut acc = BigUint::from(2 * nu);
    let nu = nu as i64;
    for m in 2..=nu {
        for l in 1..=nu - 1 {
            acc += BigUint::from((2 * l) as u64) * binomial(nu + m - l - 2, 2 * m - 3);
        }
    }
    acc
}

/// Self-inverse compositions of `2*n + 1`, summed over all part counts.
/// The double sum is empty for `n = 0`.
pub fn a_closed(n: u64) -> BigUint {
    let mut acc = BigUint::from(2 * n + 1);
    let n = n as i64;
    for m in 2..=n + 1 {
        for l in 1..=n {
            acc += BigUint::from((2 * l - 1) as u64) * binomial(n + m - l - 1, 2 * m - 3);
        }
    }
    acc
}
