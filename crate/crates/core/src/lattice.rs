//! Restricted lattice paths counted by the odd-index Lucas numbers.
//!
//! The paths run from (0,0) to (2*nu+1-k, k) in unit horizontal and
//! vertical steps, subject to two rules:
//!
//! - no two vertical steps in succession (which keeps every prefix below
//!   the line y = x + 1), and
//! - the first and last step must not BOTH be vertical. The conjunction is
//!   deliberate: banning each end individually undercounts (see the
//!   negative-control test), while the joint ban makes the row sums
//!   `B(nu) = sum_k d(nu, k)` land exactly on `lucas(2*nu + 1)`.
//!
//! [`enumerate_paths`] is the exhaustive oracle; [`d_count`] recounts with
//! dynamic programming and never materializes a path.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;

/// One unit step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Horizontal,
    Vertical,
}

impl Step {
    fn glyph(self) -> char {
        match self {
            Step::Horizontal => 'H',
            Step::Vertical => 'V',
        }
    }
}

/// A step sequence satisfying both path constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::InvalidPath {
                reason: "a path needs at least one step",
            });
        }
        if steps.windows(2).any(|w| w == [Step::Vertical, Step::Vertical]) {
            return Err(Error::InvalidPath {
                reason: "two vertical steps in succession",
            });
        }
        if steps.first() == Some(&Step::Vertical) && steps.last() == Some(&Step::Vertical) {
            return Err(Error::InvalidPath {
                reason: "first and last step are both vertical",
            });
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Endpoint reached from (0,0): (horizontal steps, vertical steps).
    pub fn endpoint(&self) -> (u64, u64) {
        let vertical = self.steps.iter().filter(|s| **s == Step::Vertical).count() as u64;
        (self.steps.len() as u64 - vertical, vertical)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.glyph())?;
        }
        Ok(())
    }
}

/// One counted cell of the path triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountRow {
    pub nu: u32,
    pub k: u32,
    pub count: BigUint,
}

/// All valid paths of length `2*nu + 1` with exactly `k` vertical steps,
/// in lexicographic order with horizontal before vertical. Empty when
/// `k > nu`.
pub fn enumerate_paths(nu: u32, k: u32) -> Vec<LatticePath> {
    let length = 2 * nu as usize + 1;
    if k as usize > length {
        return Vec::new();
    }
    let mut paths = Vec::new();
    let mut prefix: Vec<Step> = Vec::with_capacity(length);
    extend(&mut prefix, length, length - k as usize, k as usize, &mut paths);
    paths
}

fn extend(
    prefix: &mut Vec<Step>,
    length: usize,
    horizontals_left: usize,
    verticals_left: usize,
    paths: &mut Vec<LatticePath>,
) {
    if prefix.len() == length {
        paths.push(LatticePath {
            steps: prefix.clone(),
        });
        return;
    }
    if horizontals_left > 0 {
        prefix.push(Step::Horizontal);
        extend(prefix, length, horizontals_left - 1, verticals_left, paths);
        prefix.pop();
    }
    if verticals_left > 0 {
        let after_vertical = prefix.last() == Some(&Step::Vertical);
        let closing = prefix.len() + 1 == length;
        // For a single-step path the candidate itself is the first step.
        let opens_vertical = prefix.first().is_none_or(|s| *s == Step::Vertical);
        let banned_ending = closing && opens_vertical;
        if !after_vertical && !banned_ending {
            prefix.push(Step::Vertical);
            extend(prefix, length, horizontals_left, verticals_left - 1, paths);
            prefix.pop();
        }
    }
}

/// Number of valid paths to (2*nu+1-k, k), by dynamic programming over
/// (verticals used, last step vertical, first step vertical). Agrees with
/// the exhaustive enumeration cell for cell.
pub fn d_count(nu: u32, k: u32) -> PathCountRow {
    PathCountRow {
        nu,
        k,
        count: count_paths(nu, k),
    }
}

fn count_paths(nu: u32, k: u32) -> BigUint {
    let length = 2 * nu as usize + 1;
    let k = k as usize;
    if k > length {
        return BigUint::zero();
    }
    // dp[v][last][first] = prefixes with v verticals so far; the booleans
    // record whether the last and first steps were vertical (index 1).
    let blank = || vec![[[BigUint::zero(), BigUint::zero()], [BigUint::zero(), BigUint::zero()]]; k + 1];
    let mut dp = blank();
    dp[0][0][0] += 1u32;
    if k >= 1 {
        dp[1][1][1] += 1u32;
    }
    for _ in 1..length {
        let mut next = blank();
        for (v, plane) in dp.iter().enumerate() {
            for (last, row) in plane.iter().enumerate() {
                for (first, ways) in row.iter().enumerate() {
                    if ways.is_zero() {
                        continue;
                    }
                    next[v][0][first] += ways;
                    if last == 0 && v < k {
                        next[v + 1][1][first] += ways;
                    }
                }
            }
        }
        dp = next;
    }
    let mut total = BigUint::zero();
    for (last, row) in dp[k].iter().enumerate() {
        for (first, ways) in row.iter().enumerate() {
            if first == 1 && last == 1 {
                continue;
            }
            total += ways;
        }
    }
    total
}

/// Row sum `B(nu) = sum_{k=0}^{nu} d(nu, k)`.
pub fn b_total(nu: u32) -> BigUint {
    (0..=nu).map(|k| d_count(nu, k).count).sum()
}
