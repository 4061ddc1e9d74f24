//! s-inversion sequences and their ascent statistics.
//!
//! For a sequence `s = (s_1, s_2, ...)` of positive integers, an s-inversion
//! sequence of length `n` is `e = (e_1, ..., e_n)` with `0 <= e_i < s_i`.
//! Index `i` in `0..n` is an ascent when `e_i / s_i < e_{i+1} / s_{i+1}`, reading
//! `e_0 = 0` and `s_0 = 1`. Every ratio comparison is done by integer
//! cross-multiplication; nothing here touches floating point.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::genfunc::Polynomial;

/// A rule producing the sequence `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SRule {
    /// `s_i = i`
    Natural,
    /// `s_i = 2i`
    Doubled,
    /// `(1, 4, 3, 8, 5, 12, ...)`: `s_{2i-1} = 2i-1`, `s_{2i} = 4i`
    PaperI,
    /// `(2, 2, 6, 4, 10, 6, ...)`: `s_{2i-1} = 4i-2`, `s_{2i} = 2i`
    PaperIPrime,
    /// `(1, 1, 3, 2, 5, 3, ...)`, half of [`SRule::PaperIPrime`]
    HalvedIPrime,
    /// A finite list; terms beyond its length are undefined.
    Explicit(Vec<u64>),
}

impl SRule {
    /// `s_i`, 1-based.
    pub fn term(&self, i: usize) -> Result<u64> {
        if i == 0 {
            return Err(Error::OutOfRange { index: 0, len: self.len_hint() });
        }
        let k = i as u64;
        let odd = i % 2 == 1;
        Ok(match self {
            SRule::Natural => k,
            SRule::Doubled => 2 * k,
            SRule::PaperI => {
                if odd {
                    k
                } else {
                    2 * k
                }
            }
            SRule::PaperIPrime => {
                if odd {
                    2 * k
                } else {
                    k
                }
            }
            SRule::HalvedIPrime => {
                if odd {
                    k
                } else {
                    k / 2
                }
            }
            SRule::Explicit(values) => {
                let v = *values
                    .get(i - 1)
                    .ok_or(Error::OutOfRange { index: i, len: values.len() })?;
                if v == 0 {
                    return Err(Error::NonPositiveTerm { index: i });
                }
                v
            }
        })
    }

    /// `(s_1, ..., s_n)`.
    pub fn terms(&self, n: usize) -> Result<Vec<u64>> {
        (1..=n).map(|i| self.term(i)).collect()
    }

    fn len_hint(&self) -> usize {
        match self {
            SRule::Explicit(v) => v.len(),
            _ => usize::MAX,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SRule::Natural => "natural",
            SRule::Doubled => "doubled",
            SRule::PaperI => "paper-I",
            SRule::PaperIPrime => "paper-Iprime",
            SRule::HalvedIPrime => "halved-Iprime",
            SRule::Explicit(_) => "explicit",
        }
    }

    /// The rules with infinitely many terms.
    pub const BUILT_IN: [SRule; 5] = [
        SRule::Natural,
        SRule::Doubled,
        SRule::PaperI,
        SRule::PaperIPrime,
        SRule::HalvedIPrime,
    ];
}

impl fmt::Display for SRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SRule::Explicit(values) => {
                f.write_str("explicit:")?;
                for (k, v) in values.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Accepts the names printed by `Display`, e.g. `paper-I` or `explicit:1,4,3`.
impl FromStr for SRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(list) = s.strip_prefix("explicit:") {
            let values = list
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<u64>().map_err(|_| Error::UnknownName(s.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if let Some(pos) = values.iter().position(|&v| v == 0) {
                return Err(Error::NonPositiveTerm { index: pos + 1 });
            }
            return Ok(SRule::Explicit(values));
        }
        SRule::BUILT_IN
            .iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .cloned()
            .ok_or_else(|| Error::UnknownName(String::from(s)))
    }
}

/// Positions `i` in `0..n` with `e_i / s_i < e_{i+1} / s_{i+1}`.
///
/// `entries` and `terms` must have equal length; sentinel `e_0 = 0, s_0 = 1`.
pub fn ascents<'a>(entries: &'a [u64], terms: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
    debug_assert_eq!(entries.len(), terms.len());
    (0..entries.len()).filter(move |&i| {
        let (e_prev, s_prev) = if i == 0 { (0, 1) } else { (entries[i - 1], terms[i - 1]) };
        // e_prev / s_prev < e_i / s_i
        (e_prev as u128) * (terms[i] as u128) < (entries[i] as u128) * (s_prev as u128)
    })
}

#[inline]
pub fn ascent_count(entries: &[u64], terms: &[u64]) -> usize {
    let mut count = 0;
    let (mut e_prev, mut s_prev) = (0u128, 1u128);
    for (&e, &s) in entries.iter().zip(terms) {
        let (e, s) = (e as u128, s as u128);
        if e_prev * s < e * s_prev {
            count += 1;
        }
        e_prev = e;
        s_prev = s;
    }
    count
}

/// Type D ascents of a sequence under `s = (2, 4, 6, ...)`.
///
/// Internal positions compare `e_i / i` with `e_{i+1} / (i+1)`; position 0 is
/// an ascent when `2 e_1 + e_2 >= 3`, reading a missing `e_2` as 0.
pub fn type_d_ascents(entries: &[u64]) -> impl Iterator<Item = usize> + '_ {
    let n = entries.len();
    let zero = n >= 1 && 2 * entries[0] + entries.get(1).copied().unwrap_or(0) >= 3;
    zero.then_some(0).into_iter().chain((1..n).filter(move |&i| {
        // e_i / i < e_{i+1} / (i + 1), entries[i - 1] is e_i
        (entries[i - 1] as u128) * (i as u128 + 1) < (entries[i] as u128) * (i as u128)
    }))
}

#[inline]
pub fn type_d_ascent_count(entries: &[u64]) -> usize {
    type_d_ascents(entries).count()
}

/// An s-inversion sequence together with the rule it was built under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSequence {
    entries: Vec<u64>,
    terms: Vec<u64>,
    rule: SRule,
}

impl InversionSequence {
    pub fn new(rule: SRule, entries: Vec<u64>) -> Result<Self> {
        let terms = rule.terms(entries.len())?;
        for (i, (&e, &s)) in entries.iter().zip(&terms).enumerate() {
            if e >= s {
                return Err(Error::EntryOutOfBounds { index: i + 1, value: e, bound: s });
            }
        }
        Ok(InversionSequence { entries, terms, rule })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn rule(&self) -> &SRule {
        &self.rule
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ascent_set(&self) -> Vec<usize> {
        ascents(&self.entries, &self.terms).collect()
    }

    pub fn asc(&self) -> usize {
        ascent_count(&self.entries, &self.terms)
    }

    /// `sum over ascents i of (n - i)`
    pub fn amaj(&self) -> usize {
        let n = self.len();
        ascents(&self.entries, &self.terms).map(|i| n - i).sum()
    }

    /// Lecture hall statistic `-|e| + sum over ascents i of (s_{i+1} + ... + s_n)`.
    pub fn lhp(&self) -> i64 {
        // suffix[i] = s_{i+1} + ... + s_n, with terms[i] holding s_{i+1}
        let mut suffix = vec![0u64; self.len() + 1];
        for i in (0..self.len()).rev() {
            suffix[i] = suffix[i + 1] + self.terms[i];
        }
        let tail: u64 = ascents(&self.entries, &self.terms).map(|i| suffix[i]).sum();
        tail as i64 - self.weight() as i64
    }

    /// `|e| = e_1 + ... + e_n`
    pub fn weight(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn ascent_set_d(&self) -> Result<Vec<usize>> {
        self.check_type_d()?;
        let mut set: Vec<usize> = type_d_ascents(&self.entries).collect();
        set.sort_unstable();
        Ok(set)
    }

    pub fn asc_d(&self) -> Result<usize> {
        self.check_type_d()?;
        Ok(type_d_ascent_count(&self.entries))
    }

    fn check_type_d(&self) -> Result<()> {
        if self.rule != SRule::Doubled {
            return Err(Error::WrongRule);
        }
        if self.is_empty() {
            return Err(Error::ZeroSize);
        }
        Ok(())
    }
}

/// Lexicographic stream of all s-inversion sequences of a given length,
/// optionally restricted to those starting with a fixed prefix.
///
/// [`InversionSequences::advance`] reuses one buffer; the `Iterator` impl
/// allocates an owned [`InversionSequence`] per item.
#[derive(Clone, Debug)]
pub struct InversionSequences {
    rule: SRule,
    terms: Vec<u64>,
    current: Vec<u64>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl InversionSequences {
    pub fn new(rule: SRule, n: usize) -> Result<Self> {
        Self::with_prefix(rule, n, &[])
    }

    /// Only sequences whose first entries equal `prefix`.
    pub fn with_prefix(rule: SRule, n: usize, prefix: &[u64]) -> Result<Self> {
        let terms = rule.terms(n)?;
        if prefix.len() > n {
            return Err(Error::OutOfRange { index: prefix.len(), len: n });
        }
        for (i, (&e, &s)) in prefix.iter().zip(&terms).enumerate() {
            if e >= s {
                return Err(Error::EntryOutOfBounds { index: i + 1, value: e, bound: s });
            }
        }
        let mut current = vec![0; n];
        current[..prefix.len()].copy_from_slice(prefix);
        Ok(InversionSequences {
            rule,
            terms,
            current,
            fixed: prefix.len(),
            started: false,
            done: false,
        })
    }

    /// All valid prefixes of length `depth`, in lexicographic order.
    pub fn prefixes(rule: &SRule, depth: usize) -> Result<Vec<Vec<u64>>> {
        let mut it = InversionSequences::new(rule.clone(), depth)?;
        let mut out = Vec::new();
        while let Some(p) = it.advance() {
            out.push(p.to_vec());
        }
        Ok(out)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Next sequence, written into the internal buffer.
    pub fn advance(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let mut i = self.current.len();
        loop {
            if i == self.fixed {
                self.done = true;
                return None;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.terms[i] {
                return Some(&self.current);
            }
            self.current[i] = 0;
        }
    }
}

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let entries = self.advance()?.to_vec();
        Some(InversionSequence { entries, terms: self.terms.clone(), rule: self.rule.clone() })
    }
}

/// Which ascent statistic a distribution is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AscentStatistic {
    Asc,
    /// Type D ascents; needs the doubled rule.
    AscD,
}

/// Distribution of a statistic over the sequences with the given prefix.
pub fn ascent_distribution(
    rule: &SRule,
    n: usize,
    statistic: AscentStatistic,
    prefix: &[u64],
) -> Result<Distribution> {
    if statistic == AscentStatistic::AscD {
        if *rule != SRule::Doubled {
            return Err(Error::WrongRule);
        }
        if n == 0 {
            return Err(Error::ZeroSize);
        }
    }
    let mut stream = InversionSequences::with_prefix(rule.clone(), n, prefix)?;
    let terms = stream.terms().to_vec();
    let mut dist = Distribution::new();
    while let Some(e) = stream.advance() {
        dist.record(match statistic {
            AscentStatistic::Asc => ascent_count(e, &terms),
            AscentStatistic::AscD => type_d_ascent_count(e),
        });
    }
    Ok(dist)
}

/// `sum over length-n sequences e of x^{stat(e)}`.
pub fn ascent_polynomial(rule: &SRule, n: usize, statistic: AscentStatistic) -> Result<Polynomial> {
    Ok(ascent_distribution(rule, n, statistic, &[])?.to_polynomial())
}
