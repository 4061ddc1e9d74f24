//! Expansion of `N(x) / (1 - x)^m` and comparison against product closed forms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::ppartition::binomial;

/// Coefficients `c_0..=c_T` of `N(x) / (1 - x)^m`.
///
/// `c_t = sum_j N_j C(t - j + m - 1, m - 1)`; terms with `j > t` vanish. With
/// `m = 0` this is just `N` padded or truncated to `T + 1` terms.
pub fn expand_rational(numerator: &Polynomial, m: u32, truncation: u64) -> Vec<BigInt> {
    (0..=truncation)
        .map(|t| {
            numerator
                .coeffs()
                .iter()
                .enumerate()
                .take_while(|(j, _)| *j as u64 <= t)
                .map(|(j, c)| {
                    let gap = t - j as u64;
                    let weight = if m == 0 {
                        BigInt::from(u8::from(gap == 0))
                    } else {
                        BigInt::from(binomial(gap + u64::from(m) - 1, u64::from(m) - 1))
                    };
                    c * weight
                })
                .sum()
        })
        .collect()
}

/// `(s t + 1)^a (2 s t + 1)^b ((s t + 2) / 2)^c` for integer `t >= 0`, where
/// `s` is the argument scale (1, or 2 for `t -> 2t` substitutions).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub scale: u64,
}

impl ClosedForm {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        ClosedForm { a, b, c, scale: 1 }
    }

    pub fn scaled(self, scale: u64) -> Self {
        ClosedForm { scale, ..self }
    }

    /// `(t+1)^{⌈n/2⌉} (2t+1)^{⌊n/2⌋}`, the series of the ascent polynomial
    /// under `s = (1, 4, 3, 8, ...)`.
    pub fn paper_i(n: u32) -> Self {
        ClosedForm::new(n.div_ceil(2), n / 2, 0)
    }

    /// `(t+1)^{⌊n/2⌋} (2t+1)^{⌈n/2⌉}`, the same for `s = (2, 2, 6, 4, ...)`.
    pub fn paper_i_prime(n: u32) -> Self {
        ClosedForm::new(n / 2, n.div_ceil(2), 0)
    }

    /// `(t+1)^{⌈n/2⌉} ((t+2)/2)^{⌊n/2⌋}`, the lattice count under
    /// `s = (1, 1, 3, 2, ...)`.
    pub fn halved_i_prime(n: u32) -> Self {
        ClosedForm::new(n.div_ceil(2), 0, n / 2)
    }

    pub fn eval(&self, t: u64) -> BigRational {
        let st = BigInt::from(self.scale) * BigInt::from(t);
        let one = BigInt::one();
        let lin = BigRational::from_integer(&st + &one);
        let odd = BigRational::from_integer(BigInt::from(2) * &st + &one);
        let half = BigRational::new(&st + BigInt::from(2), BigInt::from(2));
        num_traits::pow(lin, self.a as usize)
            * num_traits::pow(odd, self.b as usize)
            * num_traits::pow(half, self.c as usize)
    }

    /// The value at `t`, which must be an integer.
    pub fn eval_integer(&self, t: u64) -> Result<BigInt> {
        let v = self.eval(t);
        if !v.is_integer() {
            return Err(Error::NonIntegral(t));
        }
        Ok(v.to_integer())
    }
}

/// First index where two coefficient sequences disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub t: u64,
    pub expansion: BigInt,
    pub expected: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCheck {
    pub truncation: u64,
    pub first_failure: Option<SeriesMismatch>,
}

impl SeriesCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `deg(N) + m + 5`.
pub fn default_truncation(numerator: &Polynomial, m: u32) -> u64 {
    numerator.degree().unwrap_or(0) as u64 + u64::from(m) + 5
}

/// Compares the expansion of `N / (1 - x)^m` with `expected[t]` for every `t`.
pub fn compare_expansion(numerator: &Polynomial, m: u32, expected: &[BigInt]) -> SeriesCheck {
    let truncation = expected.len().saturating_sub(1) as u64;
    let expansion = expand_rational(numerator, m, truncation);
    let first_failure = expansion
        .into_iter()
        .zip(expected)
        .enumerate()
        .find(|(_, (lhs, rhs))| lhs != *rhs)
        .map(|(t, (lhs, rhs))| SeriesMismatch { t: t as u64, expansion: lhs, expected: rhs.clone() });
    SeriesCheck { truncation, first_failure }
}

/// Checks `N(x) / (1 - x)^m = sum_t form(t) x^t` through degree `T`
/// (default [`default_truncation`]). Exact; a non-integral form value is an
/// error.
pub fn verify_series_identity(
    numerator: &Polynomial,
    m: u32,
    form: &ClosedForm,
    truncation: Option<u64>,
) -> Result<SeriesCheck> {
    let truncation = truncation.unwrap_or_else(|| default_truncation(numerator, m));
    let expected = (0..=truncation).map(|t| form.eval_integer(t)).collect::<Result<Vec<_>>>()?;
    Ok(compare_expansion(numerator, m, &expected))
}

/// Coefficients of `(1 - x)^m`.
pub fn one_minus_x_pow(m: u32) -> Polynomial {
    Polynomial::from_i64s(&[1, -1]).pow(m)
}

/// Truncated product of two coefficient sequences.
pub fn truncated_product(a: &[BigInt], b: &Polynomial, len: usize) -> Vec<BigInt> {
    (0..len)
        .map(|k| {
            (0..=k)
                .filter(|&j| j < a.len())
                .map(|j| &a[j] * b.coeff(k - j))
                .fold(BigInt::zero(), |acc, x| acc + x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand_rational(&Polynomial::one(), 3, 3), ints(&[1, 3, 6, 10]));
        assert_eq!(expand_rational(&Polynomial::from_i64s(&[1, 3]), 3, 2), ints(&[1, 6, 15]));
        assert_eq!(expand_rational(&Polynomial::from_i64s(&[0, 1]), 2, 2), ints(&[0, 1, 2]));
        assert_eq!(expand_rational(&Polynomial::from_i64s(&[4, 5]), 0, 2), ints(&[4, 5, 0]));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(ClosedForm::new(1, 1, 0).eval_integer(2).unwrap(), BigInt::from(15));
        // (t+1)(t+2)/2 at t = 1 is 3; the scaled form at t = 1 reads t = 2
        assert_eq!(ClosedForm::halved_i_prime(2).eval_integer(1).unwrap(), BigInt::from(3));
        assert_eq!(ClosedForm::halved_i_prime(2).scaled(2).eval_integer(1).unwrap(), BigInt::from(6));
        assert_eq!(ClosedForm::new(0, 0, 1).eval_integer(1), Err(Error::NonIntegral(1)));
        assert_eq!(ClosedForm::paper_i(3), ClosedForm::new(2, 1, 0));
        assert_eq!(ClosedForm::paper_i_prime(3), ClosedForm::new(1, 2, 0));
    }

    #[test]
    fn identity_examples() {
        let i2 = Polynomial::from_i64s(&[1, 3]);
        let check = verify_series_identity(&i2, 3, &ClosedForm::new(1, 1, 0), None).unwrap();
        assert!(check.holds());
        assert_eq!(check.truncation, 1 + 3 + 5);

        let p2 = Polynomial::from_i64s(&[1, 31, 55, 9]);
        assert!(verify_series_identity(&p2, 5, &ClosedForm::new(2, 2, 0), None).unwrap().holds());

        let bad = verify_series_identity(&i2, 3, &ClosedForm::new(2, 0, 0), None).unwrap();
        assert_eq!(
            bad.first_failure,
            Some(SeriesMismatch { t: 1, expansion: 6.into(), expected: 4.into() })
        );
        assert!(verify_series_identity(&i2, 3, &ClosedForm::new(0, 0, 1), None).is_err());
    }

    proptest! {
        #[test]
        fn multiplying_back_recovers_numerator(
            coeffs in proptest::collection::vec(-20i64..20, 0..6),
            m in 0u32..6,
            extra in 0usize..6,
        ) {
            let n = Polynomial::from_i64s(&coeffs);
            let len = coeffs.len() + extra + 1;
            let series = expand_rational(&n, m, len as u64 - 1);
            let back = truncated_product(&series, &one_minus_x_pow(m), len);
            let mut expect = n.coeffs().to_vec();
            expect.resize(len, BigInt::zero());
            prop_assert_eq!(back, expect);
        }
    }

    #[test]
    fn one_minus_x_cubed() {
        assert_eq!(one_minus_x_pow(3), Polynomial::from_i64s(&[1, -3, 3, -1]));
        assert_eq!(one_minus_x_pow(0), Polynomial::one());
    }
}
