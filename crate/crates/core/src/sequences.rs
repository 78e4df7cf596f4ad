//! The four self-inverse composition counting sequences.
//!
//! All four satisfy `x_n = 3*x_{n-1} - x_{n-2}` and differ only in their
//! seeds:
//!
//! - `A`: compositions of odd weight `2n+1`, seeds `a_0 = 1, a_1 = 4`
//! - `B`: even weight `2n`, even part count, seeds `b_1 = 1, b_2 = 3`
//! - `C`: even weight `2n`, odd part count, seeds `c_1 = 2, c_2 = 6`
//! - `D`: even weight `2n` in total, seeds `d_1 = 3, d_2 = 9`
//!
//! `B`, `C` and `D` are indexed from 1; asking for index 0 is a domain
//! error rather than an invented seed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::Error;

/// Selector over the four sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    A,
    B,
    C,
    D,
}

impl SequenceId {
    pub const ALL: [SequenceId; 4] = [SequenceId::A, SequenceId::B, SequenceId::C, SequenceId::D];

    /// First index at which the sequence is defined.
    pub fn first_index(self) -> u64 {
        match self {
            SequenceId::A => 0,
            _ => 1,
        }
    }

    /// The two seed values at `first_index` and `first_index + 1`.
    fn seeds(self) -> (u64, u64) {
        match self {
            SequenceId::A => (1, 4),
            SequenceId::B => (1, 3),
            SequenceId::C => (2, 6),
            SequenceId::D => (3, 9),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            SequenceId::A => "A",
            SequenceId::B => "B",
            SequenceId::C => "C",
            SequenceId::D => "D",
        };
        f.write_str(tag)
    }
}

impl FromStr for SequenceId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(SequenceId::A),
            "B" | "b" => Ok(SequenceId::B),
            "C" | "c" => Ok(SequenceId::C),
            "D" | "d" => Ok(SequenceId::D),
            other => Err(format!("unknown sequence `{other}` (expected A, B, C or D)")),
        }
    }
}

/// A consecutive run of sequence values starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    pub id: SequenceId,
    pub start: u64,
    pub values: Vec<BigUint>,
}

/// Value of the selected sequence at index `n`, by iterating the
/// recurrence from the seeds.
pub fn seq(id: SequenceId, n: u64) -> Result<BigUint, Error> {
    let mut window = seq_window(id, n, 1)?;
    Ok(window.values.pop().expect("window of length 1"))
}

/// `len` consecutive values starting at `start`. The whole prefix is
/// generated iteratively, so a window is linear in `start + len` rather
/// than quadratic like repeated `seq` calls.
pub fn seq_window(id: SequenceId, start: u64, len: usize) -> Result<SequenceWindow, Error> {
    let first = id.first_index();
    if start < first {
        return Err(Error::IndexBelowDomain {
            id,
            index: start,
            min: first,
        });
    }
    let (s0, s1) = id.seeds();
    let (mut prev, mut curr) = (BigUint::from(s0), BigUint::from(s1));
    let mut values = Vec::with_capacity(len);
    for offset in 0.. {
        let index = first + offset;
        if index >= start + len as u64 {
            break;
        }
        if index >= start {
            values.push(prev.clone());
        }
        let next = BigUint::from(3u32) * &curr - &prev;
        prev = std::mem::replace(&mut curr, next);
    }
    Ok(SequenceWindow { id, start, values })
}
