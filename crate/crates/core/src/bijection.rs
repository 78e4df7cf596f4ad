//! The three-class bijection behind `x_n + x_{n-2} = 3 * x_{n-1}` for
//! self-inverse compositions of odd weight.
//!
//! For a fixed `n >= 2` the domain is the union of all self-inverse
//! compositions of weight `2n+1` (tagged [`Origin::IndexN`]) and of weight
//! `2n-3` (tagged [`Origin::IndexNMinus2`]). [`classify`] splits that
//! union into three classes, and [`forward`] maps each class bijectively
//! onto the full set of self-inverse compositions of weight `2n-1`.
//! Running it exhaustively therefore re-derives the recurrence by
//! counting: three classes, each of size `a_{n-1}`.
//!
//! The class rules, written with `h` for an extreme part's size and `t`
//! for its colour:
//!
//! - class I: weight `2n+1`, extremes `1_1`. Forward deletes both
//!   extremes.
//! - class II: weight `2n+1`, extremes `h_t` with `t <= h-1`, plus the
//!   single parts `(2n+1)_t` with `t <= 2n-1`. Forward shrinks the
//!   extremes by one (by two for the single part), keeping the colour.
//! - class III: weight `2n+1`, extremes `h_h`, plus the single parts
//!   `(2n+1)_{2n}` and `(2n+1)_{2n+1}`, plus every weight `2n-3` source.
//!   Forward shrinks `h_h` extremes to `(h-1)_{h-1}`, sends the two
//!   special single parts to `(2n-1)_{2n-2}` and `(2n-1)_{2n-1}`, and
//!   grows the weight `2n-3` sources (extremes `+1`, single part `+2`).

use num_bigint::BigUint;
use std::collections::HashSet;
use std::fmt;

use crate::composition::{enumerate_self_inverse, ColouredPart, Composition};
use crate::error::Error;
use crate::sequences::{seq, SequenceId};

/// Which of the two counted families a source composition comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Weight `2n+1`.
    IndexN,
    /// Weight `2n-3`.
    IndexNMinus2,
}

impl Origin {
    pub fn weight(self, n: u32) -> u64 {
        match self {
            Origin::IndexN => 2 * u64::from(n) + 1,
            Origin::IndexNMinus2 => 2 * u64::from(n) - 3,
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::IndexN => f.write_str("n"),
            Origin::IndexNMinus2 => f.write_str("n-2"),
        }
    }
}

/// A source composition tagged with its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedSource {
    pub origin: Origin,
    pub composition: Composition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    ClassI,
    ClassII,
    ClassIII,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [ClassLabel::ClassI, ClassLabel::ClassII, ClassLabel::ClassIII];

    fn index(self) -> usize {
        match self {
            ClassLabel::ClassI => 0,
            ClassLabel::ClassII => 1,
            ClassLabel::ClassIII => 2,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::ClassI => f.write_str("I"),
            ClassLabel::ClassII => f.write_str("II"),
            ClassLabel::ClassIII => f.write_str("III"),
        }
    }
}

fn check_instance(n: u32) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::BijectionIndex(u64::from(n)));
    }
    Ok(())
}

fn check_source(source: &TaggedSource, n: u32) -> Result<(), Error> {
    check_instance(n)?;
    let expected = source.origin.weight(n);
    let actual = source.composition.weight();
    if actual != expected {
        return Err(Error::WeightMismatch { expected, actual });
    }
    if !source.composition.is_self_inverse() {
        return Err(Error::NotSelfInverse);
    }
    Ok(())
}

fn check_target(target: &Composition, n: u32) -> Result<(), Error> {
    check_instance(n)?;
    let expected = 2 * u64::from(n) - 1;
    if target.weight() != expected {
        return Err(Error::WeightMismatch {
            expected,
            actual: target.weight(),
        });
    }
    if !target.is_self_inverse() {
        return Err(Error::NotSelfInverse);
    }
    Ok(())
}

/// Assigns a source its unique class. Total on the valid domain: every
/// weight `2n-3` source is class III, and a weight `2n+1` source is split
/// by the colour of its extreme part.
pub fn classify(source: &TaggedSource, n: u32) -> Result<ClassLabel, Error> {
    check_source(source, n)?;
    if source.origin == Origin::IndexNMinus2 {
        return Ok(ClassLabel::ClassIII);
    }
    let parts = source.composition.parts();
    if parts.len() == 1 {
        let colour = parts[0].colour();
        if colour < 2 * n {
            Ok(ClassLabel::ClassII)
        } else {
            Ok(ClassLabel::ClassIII)
        }
    } else {
        let extreme = parts[0];
        if extreme.size() == 1 {
            Ok(ClassLabel::ClassI)
        } else if extreme.colour() < extreme.size() {
            Ok(ClassLabel::ClassII)
        } else {
            Ok(ClassLabel::ClassIII)
        }
    }
}

fn replace_extremes(parts: &[ColouredPart], end: ColouredPart) -> Composition {
    let mut parts = parts.to_vec();
    parts[0] = end;
    *parts.last_mut().expect("non-empty") = end;
    Composition::new(parts).expect("non-empty")
}

fn part(size: u32, colour: u32) -> ColouredPart {
    ColouredPart::new(size, colour).expect("constructed within bounds")
}

/// Maps a source to its image of weight `2n-1` under its class rule.
pub fn forward(source: &TaggedSource, n: u32) -> Result<Composition, Error> {
    let class = classify(source, n)?;
    let parts = source.composition.parts();
    let image = match (class, source.origin) {
        (ClassLabel::ClassI, _) => {
            Composition::new(parts[1..parts.len() - 1].to_vec()).expect("middle is non-empty")
        }
        (ClassLabel::ClassII, _) => {
            if parts.len() == 1 {
                let single = parts[0];
                Composition::new(vec![part(single.size() - 2, single.colour())]).expect("one part")
            } else {
                let extreme = parts[0];
                replace_extremes(parts, part(extreme.size() - 1, extreme.colour()))
            }
        }
        (ClassLabel::ClassIII, Origin::IndexN) => {
            if parts.len() == 1 {
                let colour = parts[0].colour();
                // (2n+1)_{2n} -> (2n-1)_{2n-2}, (2n+1)_{2n+1} -> (2n-1)_{2n-1}
                Composition::new(vec![part(2 * n - 1, colour - 2)]).expect("one part")
            } else {
                let extreme = parts[0];
                replace_extremes(parts, part(extreme.size() - 1, extreme.colour() - 1))
            }
        }
        (ClassLabel::ClassIII, Origin::IndexNMinus2) => {
            if parts.len() == 1 {
                let single = parts[0];
                Composition::new(vec![part(single.size() + 2, single.colour())]).expect("one part")
            } else {
                let extreme = parts[0];
                replace_extremes(parts, part(extreme.size() + 1, extreme.colour()))
            }
        }
    };
    debug_assert_eq!(image.weight(), 2 * u64::from(n) - 1);
    debug_assert!(image.is_self_inverse());
    Ok(image)
}

/// Reconstructs the unique source in `class` that maps onto `target`.
/// The class III sub-rule is recovered from the target's shape: extreme
/// colour equal to the size points back to weight `2n+1`, a smaller colour
/// points back to weight `2n-3`, and single parts split on the colour
/// thresholds `2n-2` and `2n-1`.
pub fn inverse(target: &Composition, class: ClassLabel, n: u32) -> Result<TaggedSource, Error> {
    check_target(target, n)?;
    let parts = target.parts();
    let source = match class {
        ClassLabel::ClassI => {
            let mut grown = Vec::with_capacity(parts.len() + 2);
            grown.push(part(1, 1));
            grown.extend_from_slice(parts);
            grown.push(part(1, 1));
            TaggedSource {
                origin: Origin::IndexN,
                composition: Composition::new(grown).expect("non-empty"),
            }
        }
        ClassLabel::ClassII => {
            let composition = if parts.len() == 1 {
                let single = parts[0];
                Composition::new(vec![part(single.size() + 2, single.colour())]).expect("one part")
            } else {
                let extreme = parts[0];
                replace_extremes(parts, part(extreme.size() + 1, extreme.colour()))
            };
            TaggedSource {
                origin: Origin::IndexN,
                composition,
            }
        }
        ClassLabel::ClassIII => {
            if parts.len() == 1 {
                let single = parts[0];
                if single.colour() >= 2 * n - 2 {
                    TaggedSource {
                        origin: Origin::IndexN,
                        composition: Composition::new(vec![part(2 * n + 1, single.colour() + 2)])
                            .expect("one part"),
                    }
                } else {
                    TaggedSource {
                        origin: Origin::IndexNMinus2,
                        composition: Composition::new(vec![part(2 * n - 3, single.colour())])
                            .expect("one part"),
                    }
                }
            } else {
                let extreme = parts[0];
                if extreme.colour() == extreme.size() {
                    TaggedSource {
                        origin: Origin::IndexN,
                        composition: replace_extremes(
                            parts,
                            part(extreme.size() + 1, extreme.colour() + 1),
                        ),
                    }
                } else {
                    TaggedSource {
                        origin: Origin::IndexNMinus2,
                        composition: replace_extremes(
                            parts,
                            part(extreme.size() - 1, extreme.colour()),
                        ),
                    }
                }
            }
        }
    };
    debug_assert!(check_source(&source, n).is_ok());
    Ok(source)
}

/// The full tagged domain for instance `n`: every self-inverse composition
/// of weight `2n+1`, then every one of weight `2n-3`.
pub fn domain(n: u32) -> Result<Vec<TaggedSource>, Error> {
    check_instance(n)?;
    let mut sources: Vec<TaggedSource> = enumerate_self_inverse(2 * n + 1)
        .into_iter()
        .map(|composition| TaggedSource {
            origin: Origin::IndexN,
            composition,
        })
        .collect();
    sources.extend(
        enumerate_self_inverse(2 * n - 3)
            .into_iter()
            .map(|composition| TaggedSource {
                origin: Origin::IndexNMinus2,
                composition,
            }),
    );
    Ok(sources)
}

/// Outcome of running the bijection exhaustively for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionSummary {
    pub n: u32,
    /// `a_{n-1}`, the size every class must hit.
    pub expected: BigUint,
    /// Sources per class, in label order I, II, III.
    pub class_counts: [usize; 3],
    /// Whether the forward image of each class is exactly the set of
    /// self-inverse compositions of weight `2n-1`, without repeats.
    pub image_matches: [bool; 3],
    /// Sources for which `inverse(forward(s))` failed to reproduce `s`.
    pub round_trip_failures: usize,
}

impl BijectionSummary {
    pub fn is_valid(&self) -> bool {
        self.round_trip_failures == 0
            && self.image_matches.iter().all(|&m| m)
            && self
                .class_counts
                .iter()
                .all(|&c| BigUint::from(c as u64) == self.expected)
    }
}

/// Classifies and maps the whole domain, checking that each class lands
/// bijectively on the weight `2n-1` set and that the inverse map undoes
/// the forward map source by source.
pub fn verify_bijection(n: u32) -> Result<BijectionSummary, Error> {
    check_instance(n)?;
    let target_set: HashSet<Composition> =
        enumerate_self_inverse(2 * n - 1).into_iter().collect();
    let mut class_images: [Vec<Composition>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut round_trip_failures = 0usize;

    for source in domain(n)? {
        let class = classify(&source, n)?;
        let image = forward(&source, n)?;
        let recovered = inverse(&image, class, n)?;
        if recovered != source {
            round_trip_failures += 1;
        }
        class_images[class.index()].push(image);
    }

    let class_counts = [
        class_images[0].len(),
        class_images[1].len(),
        class_images[2].len(),
    ];
    let image_matches = class_images.map(|images| {
        let distinct: HashSet<Composition> = images.iter().cloned().collect();
        distinct.len() == images.len() && distinct == target_set
    });

    Ok(BijectionSummary {
        n,
        expected: seq(SequenceId::A, u64::from(n) - 1).expect("n >= 2"),
        class_counts,
        image_matches,
        round_trip_failures,
    })
}
