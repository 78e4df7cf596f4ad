//! Coloured compositions and their exhaustive enumeration.
//!
//! A part of size `k` carries a colour index in `1..=k`, so a given weight
//! admits many more compositions than in the classical uncoloured setting.
//! The enumerators here are deliberately brute-force: they are the oracle
//! against which every closed-form counter in this crate is checked.
//!
//! Enumeration order is canonical: part sequences are emitted in
//! lexicographic order, with individual parts ordered by size descending
//! and colour ascending. The first composition of weight `nu` is the single
//! part `nu_1`; the last is all `1_1` parts. Full enumeration is practical
//! up to roughly `nu = 20` (the count grows like `phi^(2*nu)`).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One part of a composition: a size together with a colour in `1..=size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPart {
    size: u32,
    colour: u32,
}

impl ColouredPart {
    pub fn new(size: u32, colour: u32) -> Result<Self, Error> {
        if size == 0 {
            return Err(Error::ZeroPartSize);
        }
        if colour == 0 || colour > size {
            return Err(Error::ColourOutOfRange { size, colour });
        }
        Ok(ColouredPart { size, colour })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn colour(&self) -> u32 {
        self.colour
    }
}

impl fmt::Display for ColouredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.size, self.colour)
    }
}

/// An ordered, non-empty sequence of coloured parts.
///
/// Equality and hashing are structural over the `(size, colour)` pairs, so
/// compositions can be collected into sets when tests compare enumerations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<ColouredPart>,
}

impl Composition {
    pub fn new(parts: Vec<ColouredPart>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition { parts })
    }

    /// Builds a composition from raw `(size, colour)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self, Error> {
        let parts = pairs
            .iter()
            .map(|&(s, c)| ColouredPart::new(s, c))
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }

    /// Internal constructor for parts produced by the enumerators, which
    /// maintain the colour invariant themselves.
    fn from_valid(pairs: &[(u32, u32)]) -> Self {
        debug_assert!(!pairs.is_empty());
        debug_assert!(pairs.iter().all(|&(s, c)| s >= 1 && (1..=s).contains(&c)));
        Composition {
            parts: pairs
                .iter()
                .map(|&(size, colour)| ColouredPart { size, colour })
                .collect(),
        }
    }

    pub fn parts(&self) -> &[ColouredPart] {
        &self.parts
    }

    /// Sum of the part sizes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.size)).sum()
    }

    /// True iff the sequence of `(size, colour)` pairs equals its own
    /// reversal.
    pub fn is_self_inverse(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses the text form `"2_1 1_1 2_1"`: parts separated by single
    /// spaces, each written `size_colour`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_err = |reason: &str| Error::ParseComposition {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let mut parts = Vec::new();
        for token in s.split(' ') {
            let (size, colour) = token
                .split_once('_')
                .ok_or_else(|| parse_err("expected size_colour"))?;
            let size: u32 = size
                .parse()
                .map_err(|_| parse_err("size is not an integer"))?;
            let colour: u32 = colour
                .parse()
                .map_err(|_| parse_err("colour is not an integer"))?;
            parts.push(ColouredPart::new(size, colour)?);
        }
        Composition::new(parts)
    }
}

/// Streaming enumerator over all coloured compositions of `nu` in canonical
/// order. Holds only the current composition, so counting does not
/// materialize the full list.
pub struct Compositions {
    state: Option<Vec<(u32, u32)>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.state.take()?;
        let item = Composition::from_valid(&current);
        self.state = successor(current);
        Some(item)
    }
}

/// Streaming enumerator restricted to exactly `m` parts, canonical order.
pub struct CompositionsWithParts {
    state: Option<Vec<(u32, u32)>>,
}

impl Iterator for CompositionsWithParts {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.state.take()?;
        let item = Composition::from_valid(&current);
        self.state = successor_fixed_parts(current);
        Some(item)
    }
}

/// All coloured compositions of weight `nu`. Empty for `nu = 0`.
pub fn compositions(nu: u32) -> Compositions {
    let state = (nu >= 1).then(|| vec![(nu, 1)]);
    Compositions { state }
}

/// All coloured compositions of weight `nu` with exactly `m` parts.
/// Empty whenever `m = 0` or `m > nu`.
pub fn compositions_with_parts(nu: u32, m: u32) -> CompositionsWithParts {
    let state = (m >= 1 && m <= nu).then(|| {
        let mut parts = Vec::with_capacity(m as usize);
        fill_first(&mut parts, nu, m);
        parts
    });
    CompositionsWithParts { state }
}

/// Self-inverse compositions of weight `nu`: the brute-force filter of the
/// full enumeration.
pub fn self_inverse_compositions(nu: u32) -> impl Iterator<Item = Composition> {
    compositions(nu).filter(Composition::is_self_inverse)
}

/// Self-inverse compositions of weight `nu` with exactly `m` parts.
pub fn self_inverse_compositions_with_parts(
    nu: u32,
    m: u32,
) -> impl Iterator<Item = Composition> {
    compositions_with_parts(nu, m).filter(Composition::is_self_inverse)
}

pub fn enumerate_compositions(nu: u32) -> Vec<Composition> {
    compositions(nu).collect()
}

pub fn enumerate_compositions_m(nu: u32, m: u32) -> Vec<Composition> {
    compositions_with_parts(nu, m).collect()
}

pub fn enumerate_self_inverse(nu: u32) -> Vec<Composition> {
    self_inverse_compositions(nu).collect()
}

pub fn enumerate_self_inverse_m(nu: u32, m: u32) -> Vec<Composition> {
    self_inverse_compositions_with_parts(nu, m).collect()
}

/// Advances `parts` to the next composition of the same weight in canonical
/// order. Walks in from the right end looking for a slot that can still
/// move: bump the colour if possible, otherwise shrink the size by one and
/// restart the tail with the canonical first filler (a single part carrying
/// colour 1).
fn successor(mut parts: Vec<(u32, u32)>) -> Option<Vec<(u32, u32)>> {
    let mut tail_weight = 0u32;
    for i in (0..parts.len()).rev() {
        let (size, colour) = parts[i];
        tail_weight += size;
        if colour < size {
            parts.truncate(i);
            parts.push((size, colour + 1));
            if tail_weight > size {
                parts.push((tail_weight - size, 1));
            }
            return Some(parts);
        }
        if size > 1 {
            parts.truncate(i);
            parts.push((size - 1, 1));
            parts.push((tail_weight - size + 1, 1));
            return Some(parts);
        }
    }
    None
}

/// Successor restricted to a fixed number of parts. Shrinking a slot's size
/// is only possible while at least one later slot exists to absorb the
/// freed weight.
fn successor_fixed_parts(mut parts: Vec<(u32, u32)>) -> Option<Vec<(u32, u32)>> {
    let m = parts.len();
    let mut tail_weight = 0u32;
    for i in (0..m).rev() {
        let (size, colour) = parts[i];
        tail_weight += size;
        let after = (m - 1 - i) as u32;
        if colour < size {
            parts.truncate(i);
            parts.push((size, colour + 1));
            fill_first(&mut parts, tail_weight - size, after);
            return Some(parts);
        }
        if size > 1 && after >= 1 {
            parts.truncate(i);
            parts.push((size - 1, 1));
            fill_first(&mut parts, tail_weight - size + 1, after);
            return Some(parts);
        }
    }
    None
}

/// Appends the canonical first composition of weight `w` into exactly `j`
/// parts: the largest possible head followed by unit parts, colours all 1.
fn fill_first(parts: &mut Vec<(u32, u32)>, w: u32, j: u32) {
    if j == 0 {
        debug_assert_eq!(w, 0);
        return;
    }
    debug_assert!(w >= j);
    parts.push((w - j + 1, 1));
    for _ in 1..j {
        parts.push((1, 1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{binomial, fibonacci};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn comp(pairs: &[(u32, u32)]) -> Composition {
        Composition::from_pairs(pairs).unwrap()
    }

    #[test]
    fn part_invariants_enforced() {
        assert!(ColouredPart::new(3, 1).is_ok());
        assert!(ColouredPart::new(3, 3).is_ok());
        assert_eq!(ColouredPart::new(0, 1), Err(Error::ZeroPartSize));
        assert_eq!(
            ColouredPart::new(3, 4),
            Err(Error::ColourOutOfRange { size: 3, colour: 4 })
        );
        assert_eq!(
            ColouredPart::new(3, 0),
            Err(Error::ColourOutOfRange { size: 3, colour: 0 })
        );
        assert_eq!(Composition::new(vec![]).unwrap_err(), Error::EmptyComposition);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(comp(&[(3, 2), (1, 1)]).weight(), 4);
        assert_eq!(comp(&[(1, 1)]).weight(), 1);
        assert_eq!(comp(&[(2, 1), (1, 1), (2, 1)]).weight(), 5);
    }

    #[test]
    fn self_inverse_examples() {
        assert!(comp(&[(1, 1), (3, 2), (1, 1)]).is_self_inverse());
        assert!(!comp(&[(2, 1), (1, 1)]).is_self_inverse());
        assert!(comp(&[(2, 2)]).is_self_inverse());
        // Colour matters, not just size.
        assert!(!comp(&[(2, 1), (1, 1), (2, 2)]).is_self_inverse());
    }

    #[test]
    fn enumerate_weight_three() {
        let expected: Vec<Composition> = [
            "3_1", "3_2", "3_3", "2_1 1_1", "2_2 1_1", "1_1 2_1", "1_1 2_2", "1_1 1_1 1_1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(enumerate_compositions(3), expected);
    }

    #[test]
    fn enumerate_small_weights() {
        assert_eq!(enumerate_compositions(0), Vec::<Composition>::new());
        assert_eq!(enumerate_compositions(1), vec![comp(&[(1, 1)])]);
        assert_eq!(enumerate_compositions(5).len(), 55);
    }

    #[test]
    fn enumerate_with_parts_examples() {
        let two_of_three: Vec<Composition> = ["2_1 1_1", "2_2 1_1", "1_1 2_1", "1_1 2_2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(enumerate_compositions_m(3, 2), two_of_three);

        let singles = enumerate_compositions_m(4, 1);
        let expected: Vec<Composition> =
            (1..=4).map(|c| comp(&[(4, c)])).collect();
        assert_eq!(singles, expected);

        assert_eq!(enumerate_compositions_m(4, 2).len(), 10);
        assert!(enumerate_compositions_m(3, 4).is_empty());
        assert!(enumerate_compositions_m(3, 0).is_empty());
    }

    #[test]
    fn self_inverse_of_five_matches_known_list() {
        let expected: HashSet<Composition> = [
            "5_1",
            "5_2",
            "5_3",
            "5_4",
            "5_5",
            "1_1 3_1 1_1",
            "1_1 3_2 1_1",
            "1_1 3_3 1_1",
            "2_1 1_1 2_1",
            "2_2 1_1 2_2",
            "1_1 1_1 1_1 1_1 1_1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        let got = enumerate_self_inverse(5);
        assert_eq!(got.len(), 11);
        assert_eq!(got.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn self_inverse_small_weights() {
        assert_eq!(enumerate_self_inverse(1), vec![comp(&[(1, 1)])]);
        let four: HashSet<Composition> = [
            "4_1",
            "4_2",
            "4_3",
            "4_4",
            "1_1 2_1 1_1",
            "1_1 2_2 1_1",
            "2_1 2_1",
            "2_2 2_2",
            "1_1 1_1 1_1 1_1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(
            enumerate_self_inverse(4).into_iter().collect::<HashSet<_>>(),
            four
        );
    }

    #[test]
    fn self_inverse_with_parts_examples() {
        assert_eq!(
            enumerate_self_inverse_m(4, 2),
            vec![comp(&[(2, 1), (2, 1)]), comp(&[(2, 2), (2, 2)])]
        );
        let expected: HashSet<Composition> = [
            "1_1 3_1 1_1",
            "1_1 3_2 1_1",
            "1_1 3_3 1_1",
            "2_1 1_1 2_1",
            "2_2 1_1 2_2",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(
            enumerate_self_inverse_m(5, 3).into_iter().collect::<HashSet<_>>(),
            expected
        );
        assert!(enumerate_self_inverse_m(3, 2).is_empty());
    }

    #[test]
    fn counts_match_even_fibonacci() {
        for nu in 0..=14u32 {
            let count = compositions(nu).count();
            assert_eq!(
                count.to_string(),
                fibonacci(2 * u64::from(nu)).to_string(),
                "composition count of {nu}"
            );
        }
    }

    #[test]
    fn part_restricted_counts_match_binomial() {
        for nu in 0..=14u32 {
            for m in 1..=nu {
                let count = compositions_with_parts(nu, m).count();
                let expected = binomial(i64::from(nu) + i64::from(m) - 1, 2 * i64::from(m) - 1);
                assert_eq!(count.to_string(), expected.to_string(), "nu={nu} m={m}");
            }
        }
    }

    #[test]
    fn restricted_lists_partition_full_enumeration() {
        for nu in 1..=10u32 {
            let mut stitched: Vec<Composition> = Vec::new();
            for m in 1..=nu {
                stitched.extend(enumerate_compositions_m(nu, m));
            }
            let full = enumerate_compositions(nu);
            assert_eq!(stitched.len(), full.len());
            let stitched: HashSet<_> = stitched.into_iter().collect();
            let full: HashSet<_> = full.into_iter().collect();
            assert_eq!(stitched, full, "nu={nu}");
        }
    }

    #[test]
    fn enumerations_have_no_duplicates_and_valid_parts() {
        for nu in 0..=12u32 {
            let mut seen = HashSet::new();
            for c in compositions(nu) {
                assert_eq!(c.weight(), u64::from(nu));
                for p in c.parts() {
                    assert!(p.size() >= 1 && p.colour() >= 1 && p.colour() <= p.size());
                }
                assert!(seen.insert(c), "duplicate composition at nu={nu}");
            }
        }
    }

    #[test]
    fn self_inverse_filter_matches_oracle() {
        for nu in 0..=12u32 {
            let filtered: Vec<Composition> = compositions(nu)
                .filter(Composition::is_self_inverse)
                .collect();
            assert_eq!(enumerate_self_inverse(nu), filtered);
        }
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!("".parse::<Composition>().is_err());
        assert!("3".parse::<Composition>().is_err());
        assert!("3_x".parse::<Composition>().is_err());
        assert!("3_4".parse::<Composition>().is_err());
        assert!("2_1  1_1".parse::<Composition>().is_err());
    }

    proptest! {
        #[test]
        fn text_form_round_trips(raw in proptest::collection::vec((1u32..=9, 1u32..=9), 1..8)) {
            let pairs: Vec<(u32, u32)> = raw
                .into_iter()
                .map(|(s, c)| (s, c.min(s)))
                .collect();
            let c = Composition::from_pairs(&pairs).unwrap();
            let parsed: Composition = c.to_string().parse().unwrap();
            prop_assert_eq!(parsed, c);
        }

        #[test]
        fn reversal_flips_self_inverse_detection(raw in proptest::collection::vec((1u32..=6, 1u32..=6), 1..7)) {
            let pairs: Vec<(u32, u32)> = raw
                .into_iter()
                .map(|(s, c)| (s, c.min(s)))
                .collect();
            let c = Composition::from_pairs(&pairs).unwrap();
            let reversed: Vec<(u32, u32)> = pairs.iter().rev().copied().collect();
            let r = Composition::from_pairs(&reversed).unwrap();
            prop_assert_eq!(c.is_self_inverse(), c == r);
        }
    }
}
