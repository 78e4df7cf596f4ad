//! Exact power-series expansion of integer rational functions.
//!
//! A `RationalSeries` is a pair of integer polynomials expanded around
//! `q = 0` by the convolution recurrence
//! `c_n = (num_n - sum_{k>=1} den_k * c_{n-k}) / den_0`.
//! Every division is checked; a nonzero remainder is an error rather than
//! a rounded coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::formulas::binomial;
use crate::sequences::SequenceId;

/// Dense integer polynomial in ascending degree order. Trailing zero
/// coefficients are stripped on construction; the zero polynomial is the
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficient of `q^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Plain convolution product, used by the round-trip checks.
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// A rational function `numerator / denominator` viewed as a formal power
/// series. The denominator must have a nonzero constant term so the series
/// exists around `q = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self, Error> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }
}

/// First `count` power-series coefficients of `series`.
///
/// Fails with [`Error::InexactDivision`] if the denominator's constant term
/// does not divide some intermediate exactly (impossible when the constant
/// term is `1` or `-1`, which covers every series this crate constructs).
pub fn expand(series: &RationalSeries, count: usize) -> Result<Vec<BigInt>, Error> {
    let den = &series.denominator;
    let den0 = den.coeff(0);
    let deg = den.degree().unwrap_or(0);
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = series.numerator.coeff(n);
        for k in 1..=deg.min(n) {
            acc -= den.coeff(k) * &out[n - k];
        }
        let (quot, rem) = acc.div_rem(&den0);
        if !rem.is_zero() {
            return Err(Error::InexactDivision { index: n });
        }
        out.push(quot);
    }
    Ok(out)
}

/// The generating function of the selected counting sequence. All four
/// share the denominator `1 - 3q + q^2`; only the numerator differs.
pub fn gf_of(id: SequenceId) -> RationalSeries {
    let numerator = match id {
        SequenceId::A => IntPolynomial::from_i64(&[1, 1]),
        SequenceId::B => IntPolynomial::from_i64(&[0, 1]),
        SequenceId::C => IntPolynomial::from_i64(&[0, 2]),
        SequenceId::D => IntPolynomial::from_i64(&[0, 3]),
    };
    let denominator = IntPolynomial::from_i64(&[1, -3, 1]);
    RationalSeries::new(numerator, denominator).expect("constant term is 1")
}

/// Generating function `q^m / (1-q)^(2m)` counting coloured compositions
/// with exactly `m` parts by weight. The denominator is expanded up front
/// by binomial coefficients with alternating signs.
pub fn gf_compositions_m(m: u32) -> RationalSeries {
    debug_assert!(m >= 1);
    let mut numerator = vec![BigInt::zero(); m as usize];
    numerator.push(BigInt::from(1));

    let power = 2 * i64::from(m);
    let denominator: Vec<BigInt> = (0..=power)
        .map(|k| {
            let magnitude = BigInt::from(binomial(power, k));
            if k % 2 == 0 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect();

    RationalSeries::new(IntPolynomial::new(numerator), IntPolynomial::new(denominator))
        .expect("constant term is 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::binomial;
    use crate::sequences::seq;
    use proptest::prelude::*;

    fn series(num: &[i64], den: &[i64]) -> RationalSeries {
        RationalSeries::new(IntPolynomial::from_i64(num), IntPolynomial::from_i64(den)).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn polynomial_normalization() {
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 0]), IntPolynomial::from_i64(&[1]));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::from_i64(&[]).degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[1, -3, 1]).degree(), Some(2));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            expand(&series(&[1, 1], &[1, -3, 1]), 5).unwrap(),
            ints(&[1, 4, 11, 29, 76])
        );
        assert_eq!(
            expand(&series(&[0, 1], &[1, -3, 1]), 5).unwrap(),
            ints(&[0, 1, 3, 8, 21])
        );
        assert_eq!(expand(&series(&[1], &[1, -1]), 4).unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(expand(&series(&[1], &[1, -1]), 0).unwrap(), ints(&[]));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let err = RationalSeries::new(
            IntPolynomial::from_i64(&[1]),
            IntPolynomial::from_i64(&[0, 1]),
        )
        .unwrap_err();
        assert_eq!(err, Error::ZeroConstantTerm);
        assert!(RationalSeries::new(
            IntPolynomial::from_i64(&[1]),
            IntPolynomial::from_i64(&[]),
        )
        .is_err());
    }

    #[test]
    fn inexact_division_is_reported() {
        // 1 / (2 - q): c_0 would be 1/2.
        assert_eq!(
            expand(&series(&[1], &[2, -1]), 3).unwrap_err(),
            Error::InexactDivision { index: 0 }
        );
        // (2 + 4q) / 2 divides exactly even though the constant term is 2.
        assert_eq!(expand(&series(&[2, 4], &[2]), 3).unwrap(), ints(&[1, 2, 0]));
        // Negative unit constant term never needs a remainder.
        assert_eq!(
            expand(&series(&[-1], &[-1, 1]), 4).unwrap(),
            ints(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn named_series_shapes() {
        let a = gf_of(SequenceId::A);
        assert_eq!(a.numerator(), &IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(a.denominator(), &IntPolynomial::from_i64(&[1, -3, 1]));
        let d = gf_of(SequenceId::D);
        assert_eq!(d.numerator(), &IntPolynomial::from_i64(&[0, 3]));
        assert_eq!(
            expand(&gf_of(SequenceId::C), 4).unwrap(),
            ints(&[0, 2, 6, 16])
        );
    }

    #[test]
    fn named_series_match_recurrences() {
        for id in SequenceId::ALL {
            let coeffs = expand(&gf_of(id), 51).unwrap();
            for n in id.first_index()..=50 {
                let expected = BigInt::from(seq(id, n).unwrap());
                assert_eq!(coeffs[n as usize], expected, "{id} at {n}");
            }
            if id.first_index() == 1 {
                assert!(coeffs[0].is_zero());
            }
        }
    }

    #[test]
    fn series_for_b_and_c_add_to_d() {
        let b = expand(&gf_of(SequenceId::B), 50).unwrap();
        let c = expand(&gf_of(SequenceId::C), 50).unwrap();
        let d = expand(&gf_of(SequenceId::D), 50).unwrap();
        for n in 0..50 {
            assert_eq!(b[n].clone() + &c[n], d[n]);
        }
    }

    #[test]
    fn part_count_series_examples() {
        assert_eq!(
            expand(&gf_compositions_m(1), 5).unwrap(),
            ints(&[0, 1, 2, 3, 4])
        );
        assert_eq!(expand(&gf_compositions_m(2), 5).unwrap()[4], BigInt::from(10));
        assert_eq!(expand(&gf_compositions_m(3), 3).unwrap()[2], BigInt::from(0));
    }

    #[test]
    fn part_count_series_matches_binomial_formula() {
        for m in 1..=6u32 {
            let coeffs = expand(&gf_compositions_m(m), 21).unwrap();
            for (nu, coeff) in coeffs.iter().enumerate() {
                let expected =
                    BigInt::from(binomial(nu as i64 + i64::from(m) - 1, 2 * i64::from(m) - 1));
                assert_eq!(*coeff, expected, "m={m} nu={nu}");
            }
        }
    }

    #[test]
    fn expansion_round_trips_through_convolution() {
        for id in SequenceId::ALL {
            let series = gf_of(id);
            let coeffs = expand(&series, 50).unwrap();
            assert_convolution_recovers_numerator(&series, &coeffs);
        }
    }

    fn assert_convolution_recovers_numerator(series: &RationalSeries, coeffs: &[BigInt]) {
        let truncated = IntPolynomial::new(coeffs.to_vec());
        let product = series.denominator().mul(&truncated);
        for n in 0..coeffs.len() {
            assert_eq!(product.coeff(n), series.numerator().coeff(n), "term {n}");
        }
    }

    proptest! {
        #[test]
        fn random_unit_series_round_trip(
            num in proptest::collection::vec(-9i64..=9, 0..6),
            den_tail in proptest::collection::vec(-9i64..=9, 0..5),
            negate in any::<bool>(),
        ) {
            let mut den = vec![if negate { -1i64 } else { 1 }];
            den.extend(den_tail);
            let series = series(&num, &den);
            let coeffs = expand(&series, 24).unwrap();
            let truncated = IntPolynomial::new(coeffs.clone());
            let product = series.denominator().mul(&truncated);
            for n in 0..24 {
                prop_assert_eq!(product.coeff(n), series.numerator().coeff(n));
            }
        }
    }
}
