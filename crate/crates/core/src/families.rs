//! The named polynomial families, addressable by a short name.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::error::{Error, Result};
use crate::forest::{forest_descent_polynomial, LabelingFamily};
use crate::genfunc::Polynomial;
use crate::inversion::{ascent_polynomial, AscentStatistic, SRule};
use crate::signedperm::{descent_polynomial, SignedFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Ascents over inversion sequences for `(1, 4, 3, 8, ...)`.
    I,
    /// Ascents over inversion sequences for `(2, 2, 6, 4, ...)`.
    Iprime,
    /// Type D ascents over inversion sequences for `(2, 4, 6, ...)`.
    T,
    /// Type D descents over even-signed permutations.
    D,
    P,
    U,
    V,
    F,
    Fprime,
    G,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::I,
        Family::Iprime,
        Family::T,
        Family::D,
        Family::P,
        Family::U,
        Family::V,
        Family::F,
        Family::Fprime,
        Family::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::Iprime => "Iprime",
            Family::T => "T",
            Family::D => "D",
            Family::P => "P",
            Family::U => "U",
            Family::V => "V",
            Family::F => "F",
            Family::Fprime => "Fprime",
            Family::G => "G",
        }
    }

    /// True for the families built by enumerating signed multiset words or
    /// forest extensions, whose size grows much faster in `n`.
    pub fn is_multiset_based(self) -> bool {
        matches!(self, Family::P | Family::U | Family::V | Family::F | Family::Fprime | Family::G)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The polynomial of `family` at size `n >= 1`.
pub fn family_polynomial(family: Family, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    match family {
        Family::I => ascent_polynomial(&SRule::PaperI, n, AscentStatistic::Asc),
        Family::Iprime => ascent_polynomial(&SRule::PaperIPrime, n, AscentStatistic::Asc),
        Family::T => ascent_polynomial(&SRule::Doubled, n, AscentStatistic::AscD),
        Family::D => descent_polynomial(SignedFamily::D, n),
        Family::P => descent_polynomial(SignedFamily::P, n),
        Family::U => descent_polynomial(SignedFamily::U, n),
        Family::V => descent_polynomial(SignedFamily::V, n),
        Family::F => forest_descent_polynomial(LabelingFamily::Pairs, n),
        Family::Fprime => forest_descent_polynomial(LabelingFamily::PairsNegativeSingleton, n),
        Family::G => forest_descent_polynomial(LabelingFamily::PairsSignedSingleton, n),
    }
}
