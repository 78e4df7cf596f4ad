//! Exact enumeration and counting of coloured compositions, where a part
//! of size `k` may take any of `k` colours, and of the self-inverse
//! (palindromic) compositions among them.
//!
//! The same quantities are computed along four independent routes so that
//! each checks the others:
//!
//! - [`composition`]: brute-force enumeration, the ground-truth oracle
//! - [`formulas`]: closed-form binomial sums, Fibonacci and Lucas numbers
//! - [`sequences`]: the shared recurrence `x_n = 3x_{n-1} - x_{n-2}`
//! - [`genfunc`]: exact rational power-series expansion
//!
//! [`identities`] turns the summation identities relating these routes
//! into runnable checks, [`lattice`] counts the restricted lattice paths
//! with the same Lucas totals, and [`bijection`] executes the three-class
//! correspondence that proves the recurrence combinatorially.

pub mod bijection;
pub mod cli;
pub mod composition;
pub mod error;
pub mod formulas;
pub mod genfunc;
pub mod identities;
pub mod lattice;
pub mod sequences;

pub use composition::{
    compositions, compositions_with_parts, enumerate_compositions, enumerate_compositions_m,
    enumerate_self_inverse, enumerate_self_inverse_m, self_inverse_compositions,
    self_inverse_compositions_with_parts, ColouredPart, Composition,
};
pub use error::Error;
pub use formulas::{
    a_closed, b_closed, binomial, c_closed, count_a, count_si_even_weight_even_parts,
    count_si_even_weight_odd_parts, count_si_odd_weight, fibonacci, lucas,
};
pub use genfunc::{expand, gf_compositions_m, gf_of, IntPolynomial, RationalSeries};
pub use identities::{
    alternating_sum, identity_i, identity_ii, sweep, three_times, IdentityKind, IdentityReport,
};
pub use lattice::{b_total, d_count, enumerate_paths, LatticePath, PathCountRow, Step};
pub use sequences::{seq, seq_window, SequenceId, SequenceWindow};
