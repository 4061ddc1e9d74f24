//! Lattice-point counts `f_n^{(s)}(t)`: integer sequences with
//! `0 <= λ_1/s_1 <= ... <= λ_n/s_n <= t`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::series::{compare_expansion, SeriesCheck};
use crate::error::Result;
use crate::inversion::{ascent_polynomial, AscentStatistic, SRule};

/// `f_n^{(s)}(t)`, computed by a dynamic program over the last entry.
///
/// `ways[v]` is the number of valid prefixes ending in `λ_i = v`; the next
/// entry `u` may follow `v` exactly when `v s_{i+1} <= u s_i`.
pub fn f_count(rule: &SRule, n: usize, t: u64) -> Result<BigUint> {
    let s = rule.terms(n)?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    let mut ways = vec![BigUint::one(); (t * s[0] + 1) as usize];
    for i in 1..n {
        let (prev, next) = (u128::from(s[i - 1]), u128::from(s[i]));
        let mut updated = vec![BigUint::zero(); (t * s[i] + 1) as usize];
        // the admissible v for a given u form a prefix 0..=floor(u s_i / s_{i+1})
        let mut acc = BigUint::zero();
        let mut taken = 0usize;
        for (u, slot) in updated.iter_mut().enumerate() {
            let limit = (u as u128 * prev / next) as usize;
            while taken <= limit && taken < ways.len() {
                acc += &ways[taken];
                taken += 1;
            }
            *slot = acc.clone();
        }
        ways = updated;
    }
    Ok(ways.into_iter().sum())
}

/// Compares `sum_{t <= T} f_count(rule, n, t) x^t` with the expansion of the
/// ascent polynomial over `(1 - x)^{n+1}`.
pub fn verify_fcount_transform(rule: &SRule, n: usize, t_max: u64) -> Result<SeriesCheck> {
    let numerator = ascent_polynomial(rule, n, AscentStatistic::Asc)?;
    let counts = (0..=t_max)
        .map(|t| f_count(rule, n, t).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(compare_expansion(&numerator, n as u32 + 1, &counts))
}
