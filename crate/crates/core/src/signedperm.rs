//! Signed permutations of multisets, even-signed permutations and their
//! descent statistics.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::genfunc::Polynomial;

/// A finite word of nonzero signed integers. Absolute values may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(Vec<i32>);

impl SignedWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(SignedWord(letters))
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn reverse_negate(&self) -> SignedWord {
        SignedWord(reverse_negate(&self.0))
    }

    pub fn des_b_set(&self) -> Result<Vec<usize>> {
        des_b_set(&self.0)
    }

    pub fn des_b(&self) -> Result<usize> {
        des_b(&self.0)
    }

    pub fn des_alt(&self) -> Result<usize> {
        des_alt(&self.0)
    }

    pub fn des_d(&self) -> Result<usize> {
        des_d(&self.0)
    }
}

impl Deref for SignedWord {
    type Target = [i32];

    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for SignedWord {
    type Error = Error;

    fn try_from(letters: Vec<i32>) -> Result<Self> {
        SignedWord::new(letters)
    }
}

/// Space-separated signed decimals, e.g. `2 -1 1 -2`.
impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Internal descents `i` (1-based) with `w_i > w_{i+1}`.
fn internal_descents(w: &[i32]) -> impl Iterator<Item = usize> + '_ {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1)
}

/// Descent count under the `Des_B` convention without validation.
#[inline]
pub fn des_b_count(w: &[i32]) -> usize {
    let internal = w.windows(2).filter(|p| p[0] > p[1]).count();
    internal + usize::from(w.last().is_some_and(|&a| a > 0))
}

/// `{i : w_i > w_{i+1}} ∪ {n if w_n > 0}`
pub fn des_b_set(w: &[i32]) -> Result<Vec<usize>> {
    let last = *w.last().ok_or(Error::EmptyWord)?;
    let mut set: Vec<usize> = internal_descents(w).collect();
    if last > 0 {
        set.push(w.len());
    }
    Ok(set)
}

pub fn des_b(w: &[i32]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(des_b_count(w))
}

/// Descent count under the leading-sign convention: internal descents plus
/// position 0 when `w_1 < 0`.
pub fn des_alt(w: &[i32]) -> Result<usize> {
    let first = *w.first().ok_or(Error::EmptyWord)?;
    Ok(internal_descents(w).count() + usize::from(first < 0))
}

/// `(-w_n)(-w_{n-1})...(-w_1)`, which carries [`des_alt`] to [`des_b`].
pub fn reverse_negate(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&a| -a).collect()
}

/// Type D descent count of an even-signed permutation of `1..=n`: internal
/// descents plus position 0 when `w_1 + w_2 < 0`. For `n = 1` only internal
/// descents count, so the value is always 0.
pub fn des_d(w: &[i32]) -> Result<usize> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut seen = vec![false; n + 1];
    for &a in w {
        let v = a.unsigned_abs() as usize;
        if v == 0 || v > n || seen[v] {
            return Err(Error::NotSignedPermutation(n));
        }
        seen[v] = true;
    }
    if w.iter().filter(|&&a| a < 0).count() % 2 == 1 {
        return Err(Error::OddNegatives);
    }
    Ok(des_d_count(w))
}

#[inline]
fn des_d_count(w: &[i32]) -> usize {
    let internal = w.windows(2).filter(|p| p[0] > p[1]).count();
    internal + usize::from(w.len() >= 2 && w[0] + w[1] < 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// A multiset of positive values with optional forced signs per value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetSpec {
    base: BTreeMap<u32, u32>,
    forced: BTreeMap<u32, Sign>,
}

impl MultisetSpec {
    pub fn new(base: BTreeMap<u32, u32>) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidMultiset("empty multiset".into()));
        }
        if let Some((v, _)) = base.iter().find(|(&v, &m)| v == 0 || m == 0) {
            return Err(Error::InvalidMultiset(format!("value {v} has zero value or multiplicity")));
        }
        Ok(MultisetSpec { base, forced: BTreeMap::new() })
    }

    /// Forces every occurrence of `value` to carry `sign`.
    pub fn with_forced_sign(mut self, value: u32, sign: Sign) -> Result<Self> {
        if !self.base.contains_key(&value) {
            return Err(Error::InvalidMultiset(format!("constrained value {value} not in base")));
        }
        self.forced.insert(value, sign);
        Ok(self)
    }

    /// `{1^2, 2^2, ..., n^2}`
    pub fn p(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        MultisetSpec::new((1..=n as u32).map(|v| (v, 2)).collect())
    }

    /// `{1^2, ..., (n-1)^2, n}`
    pub fn u(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let n = n as u32;
        MultisetSpec::new((1..=n).map(|v| (v, if v < n { 2 } else { 1 })).collect())
    }

    /// [`MultisetSpec::u`] with the single `n` forced negative.
    pub fn v(n: usize) -> Result<Self> {
        MultisetSpec::u(n)?.with_forced_sign(n as u32, Sign::Negative)
    }

    pub fn base(&self) -> &BTreeMap<u32, u32> {
        &self.base
    }

    pub fn forced(&self) -> &BTreeMap<u32, Sign> {
        &self.forced
    }

    /// Total number of occurrences.
    pub fn len(&self) -> usize {
        self.base.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Number of signed permutations: multinomial times `2^free`.
    pub fn cardinality(&self) -> u128 {
        let mut count: u128 = 1;
        let mut placed: u128 = 0;
        for &m in self.base.values() {
            for k in 1..=m as u128 {
                placed += 1;
                // running binomial product stays integral at every step
                count = count * placed / k;
            }
        }
        let free: u32 = self
            .base
            .iter()
            .filter(|(v, _)| !self.forced.contains_key(v))
            .map(|(_, &m)| m)
            .sum();
        count << free
    }

    /// The multiset as a sorted list of values.
    pub fn sorted_values(&self) -> Vec<u32> {
        self.base.iter().flat_map(|(&v, &m)| core::iter::repeat_n(v, m as usize)).collect()
    }

    /// Distinct length-`depth` prefixes of arrangements, in lexicographic order.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        fn go(
            remaining: &mut BTreeMap<u32, u32>,
            depth: usize,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if cur.len() == depth {
                out.push(cur.clone());
                return;
            }
            let keys: Vec<u32> =
                remaining.iter().filter(|(_, &m)| m > 0).map(|(&v, _)| v).collect();
            for v in keys {
                *remaining.get_mut(&v).unwrap() -= 1;
                cur.push(v);
                go(remaining, depth, cur, out);
                cur.pop();
                *remaining.get_mut(&v).unwrap() += 1;
            }
        }
        let mut out = Vec::new();
        let mut remaining = self.base.clone();
        go(&mut remaining, depth.min(self.len()), &mut Vec::new(), &mut out);
        out
    }
}

/// Rearranges `a` into the next lexicographically larger arrangement of the
/// same multiset. Returns false (leaving `a` sorted) after the last one.
pub fn next_arrangement<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Stream of all signed permutations of a multiset.
///
/// Arrangements of absolute values come in lexicographic order; within one
/// arrangement the free occurrences are signed by a binary counter whose
/// least significant bit is the leftmost free position, so `{1^2}` yields
/// `1 1`, `-1 1`, `1 -1`, `-1 -1`.
#[derive(Clone, Debug)]
pub struct SignedWords {
    spec: MultisetSpec,
    arrangement: Vec<u32>,
    fixed: usize,
    free: Vec<usize>,
    mask: u64,
    word: Vec<i32>,
    started: bool,
    done: bool,
}

impl SignedWords {
    pub fn new(spec: MultisetSpec) -> Self {
        Self::with_prefix(spec, &[]).expect("empty prefix is always admissible")
    }

    /// Only words whose absolute values start with `prefix`.
    pub fn with_prefix(spec: MultisetSpec, prefix: &[u32]) -> Result<Self> {
        let mut remaining = spec.base.clone();
        for &v in prefix {
            match remaining.get_mut(&v) {
                Some(m) if *m > 0 => *m -= 1,
                _ => {
                    return Err(Error::InvalidMultiset(format!(
                        "prefix value {v} exceeds the multiset"
                    )))
                }
            }
        }
        let mut arrangement = prefix.to_vec();
        arrangement
            .extend(remaining.iter().flat_map(|(&v, &m)| core::iter::repeat_n(v, m as usize)));
        let n = arrangement.len();
        assert!(n < 64, "signed words are limited to 63 letters");
        let mut it = SignedWords {
            spec,
            arrangement,
            fixed: prefix.len(),
            free: Vec::with_capacity(n),
            mask: 0,
            word: vec![0; n],
            started: false,
            done: false,
        };
        it.load_arrangement();
        Ok(it)
    }

    fn load_arrangement(&mut self) {
        self.free.clear();
        for (p, v) in self.arrangement.iter().enumerate() {
            match self.spec.forced.get(v) {
                Some(Sign::Positive) => self.word[p] = *v as i32,
                Some(Sign::Negative) => self.word[p] = -(*v as i32),
                None => {
                    self.free.push(p);
                    self.word[p] = *v as i32;
                }
            }
        }
        self.mask = 0;
    }

    fn apply_mask(&mut self) {
        for (bit, &p) in self.free.iter().enumerate() {
            let v = self.arrangement[p] as i32;
            self.word[p] = if self.mask >> bit & 1 == 1 { -v } else { v };
        }
    }

    pub fn advance(&mut self) -> Option<&[i32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.word);
        }
        self.mask += 1;
        if self.mask >> self.free.len() != 0 {
            let fixed = self.fixed;
            if !next_arrangement(&mut self.arrangement[fixed..]) {
                self.done = true;
                return None;
            }
            self.load_arrangement();
        } else {
            self.apply_mask();
        }
        Some(&self.word)
    }
}

impl Iterator for SignedWords {
    type Item = SignedWord;

    fn next(&mut self) -> Option<SignedWord> {
        self.advance().map(|w| SignedWord(w.to_vec()))
    }
}

/// Stream of the even-signed permutations of `1..=n`: permutations in
/// lexicographic order, each with every sign pattern having an even number
/// of minus signs.
#[derive(Clone, Debug)]
pub struct EvenSignedPermutations {
    perm: Vec<u32>,
    mask: u64,
    word: Vec<i32>,
    started: bool,
    done: bool,
}

impl EvenSignedPermutations {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        assert!(n < 64, "signed words are limited to 63 letters");
        let perm: Vec<u32> = (1..=n as u32).collect();
        let word = perm.iter().map(|&v| v as i32).collect();
        Ok(EvenSignedPermutations { perm, mask: 0, word, started: false, done: false })
    }

    pub fn advance(&mut self) -> Option<&[i32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.word);
        }
        let n = self.perm.len();
        loop {
            self.mask += 1;
            if self.mask >> n != 0 {
                if !next_arrangement(&mut self.perm) {
                    self.done = true;
                    return None;
                }
                self.mask = 0;
            }
            if self.mask.count_ones().is_multiple_of(2) {
                break;
            }
        }
        for (p, &v) in self.perm.iter().enumerate() {
            let v = v as i32;
            self.word[p] = if self.mask >> p & 1 == 1 { -v } else { v };
        }
        Some(&self.word)
    }
}

impl Iterator for EvenSignedPermutations {
    type Item = SignedWord;

    fn next(&mut self) -> Option<SignedWord> {
        self.advance().map(|w| SignedWord(w.to_vec()))
    }
}

/// The signed-permutation classes with a named descent generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignedFamily {
    /// `{1^2, ..., n^2}`
    P,
    /// `{1^2, ..., (n-1)^2, n}`
    U,
    /// `U` with `n` negative
    V,
    /// Even-signed permutations of `1..=n`, counted by type D descents.
    D,
}

impl SignedFamily {
    /// The multiset behind `P`, `U` or `V`; `None` for `D`.
    pub fn spec(self, n: usize) -> Result<Option<MultisetSpec>> {
        Ok(match self {
            SignedFamily::P => Some(MultisetSpec::p(n)?),
            SignedFamily::U => Some(MultisetSpec::u(n)?),
            SignedFamily::V => Some(MultisetSpec::v(n)?),
            SignedFamily::D => None,
        })
    }
}

/// `des_B` distribution over the words of `spec` starting with `prefix`.
pub fn signed_word_distribution(spec: &MultisetSpec, prefix: &[u32]) -> Result<Distribution> {
    let mut words = SignedWords::with_prefix(spec.clone(), prefix)?;
    let mut dist = Distribution::new();
    while let Some(w) = words.advance() {
        dist.record(des_b_count(w));
    }
    Ok(dist)
}

pub fn even_signed_distribution(n: usize) -> Result<Distribution> {
    let mut perms = EvenSignedPermutations::new(n)?;
    let mut dist = Distribution::new();
    while let Some(w) = perms.advance() {
        dist.record(des_d_count(w));
    }
    Ok(dist)
}

/// `sum over the family of x^{des}`, with `des_B` for `P`, `U`, `V` and `des_D` for `D`.
pub fn descent_polynomial(family: SignedFamily, n: usize) -> Result<Polynomial> {
    let dist = match family.spec(n)? {
        Some(spec) => signed_word_distribution(&spec, &[])?,
        None => even_signed_distribution(n)?,
    };
    Ok(dist.to_polynomial())
}
