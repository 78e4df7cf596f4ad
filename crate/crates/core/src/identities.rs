//! Executable verifiers for the summation and binomial identities.
//!
//! Each verifier returns both sides of its identity in an
//! [`IdentityReport`] so a failing index would surface as a concrete
//! counterexample instead of a bare boolean. None is expected to fail;
//! the reports exist for regression visibility.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Error;
use crate::formulas::{a_closed, binomial, fibonacci};
use crate::sequences::{seq, SequenceId};

/// The four identities this crate can sweep, keyed by their CLI labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `T5.1`: the alternating binomial sum over `a_k` collapses to 1.
    AlternatingSum,
    /// `T6.1i`: two summations both counting `lucas(2*nu + 1)`.
    LucasSum,
    /// `T6.1ii`: two summations both counting `fibonacci(2*nu)`.
    FibonacciSum,
    /// `T6.2b`: `d_nu` is three times the composition count `fibonacci(2*nu)`.
    ThreeTimes,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 4] = [
        IdentityKind::AlternatingSum,
        IdentityKind::LucasSum,
        IdentityKind::FibonacciSum,
        IdentityKind::ThreeTimes,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityKind::AlternatingSum => "T5.1",
            IdentityKind::LucasSum => "T6.1i",
            IdentityKind::FibonacciSum => "T6.1ii",
            IdentityKind::ThreeTimes => "T6.2b",
        }
    }

    /// First index at which the identity is stated.
    pub fn first_index(self) -> u64 {
        match self {
            IdentityKind::AlternatingSum | IdentityKind::LucasSum => 0,
            IdentityKind::FibonacciSum | IdentityKind::ThreeTimes => 1,
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityKind::ALL
            .into_iter()
            .find(|kind| kind.label() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_owned()))
    }
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub index: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityReport {
    fn new(identity: IdentityKind, index: u64, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            identity,
            index,
            lhs,
            rhs,
            holds,
        }
    }
}

/// `sum_{k=0}^{n} (-1)^(n+k) * binomial(2n+1, n-k) * a_k`, which the
/// summation formula asserts is 1 for every `n`.
pub fn alternating_sum(n: u64) -> BigInt {
    alternating_sum_with(n, a_closed)
}

/// Same sum with a caller-chosen supplier for `a_k`; the closed sum and
/// the recurrence route must be interchangeable here.
pub fn alternating_sum_with(n: u64, a: impl Fn(u64) -> BigUint) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let term = BigInt::from(binomial((2 * n + 1) as i64, (n - k) as i64) * a(k));
        if (n + k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Checks `a_closed(nu)` against the weighted binomial sum
/// `sum_{m=0}^{nu} (2nu+1)/(2nu+1-m) * binomial(2nu+1-m, m)`.
///
/// The right side is evaluated through the split
/// `n/(n-m) * binomial(n-m, m) = binomial(n-m, m) + binomial(n-m-1, m-1)`,
/// which keeps every intermediate an integer.
pub fn identity_i(nu: u64) -> IdentityReport {
    let lhs = BigInt::from(a_closed(nu));
    let n = 2 * nu as i64 + 1;
    let mut rhs = BigInt::zero();
    for m in 0..=nu as i64 {
        rhs += BigInt::from(binomial(n - m, m) + binomial(n - m - 1, m - 1));
    }
    IdentityReport::new(IdentityKind::LucasSum, nu, lhs, rhs)
}

/// The same right side evaluated literally, multiplying first and dividing
/// by `2nu+1-m` afterwards. Exact by construction; kept as a cross-check
/// on the split used in [`identity_i`].
pub fn identity_i_rhs_by_division(nu: u64) -> BigInt {
    let n = 2 * nu as i64 + 1;
    let mut rhs = BigInt::zero();
    for m in 0..=nu as i64 {
        let numerator = BigInt::from(n) * BigInt::from(binomial(n - m, m));
        let (quot, rem) = num_integer::Integer::div_rem(&numerator, &BigInt::from(n - m));
        debug_assert!(rem.is_zero(), "weighted binomial term is not integral");
        rhs += quot;
    }
    rhs
}

/// Checks `nu + sum sum l*binomial(nu+m-l-2, 2m-3)` against
/// `sum binomial(nu+m-1, 2m-1)`; both sides count `fibonacci(2*nu)`.
pub fn identity_ii(nu: u64) -> IdentityReport {
    debug_assert!(nu >= 1);
    let n = nu as i64;
    let mut lhs = BigInt::from(n);
    for m in 2..=n {
        for l in 1..=n - 1 {
            lhs += BigInt::from(l) * BigInt::from(binomial(n + m - l - 2, 2 * m - 3));
        }
    }
    let mut rhs = BigInt::zero();
    for m in 1..=n {
        rhs += BigInt::from(binomial(n + m - 1, 2 * m - 1));
    }
    IdentityReport::new(IdentityKind::FibonacciSum, nu, lhs, rhs)
}

/// Checks `d_nu = 3 * fibonacci(2*nu)`: self-inverse compositions of even
/// weight are exactly three times as many as compositions of half the
/// weight.
pub fn three_times(nu: u64) -> IdentityReport {
    debug_assert!(nu >= 1);
    let lhs = BigInt::from(seq(SequenceId::D, nu).expect("nu >= 1"));
    let rhs = BigInt::from(3) * BigInt::from(fibonacci(2 * nu));
    IdentityReport::new(IdentityKind::ThreeTimes, nu, lhs, rhs)
}

/// Evaluates one identity at every valid index up to and including
/// `max_index`, reports ordered by index.
pub fn sweep(kind: IdentityKind, max_index: u64) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for index in kind.first_index()..=max_index {
        reports.push(match kind {
            IdentityKind::AlternatingSum => {
                let lhs = alternating_sum(index);
                IdentityReport::new(kind, index, lhs, BigInt::from(1))
            }
            IdentityKind::LucasSum => identity_i(index),
            IdentityKind::FibonacciSum => identity_ii(index),
            IdentityKind::ThreeTimes => three_times(index),
        });
    }
    reports
}
