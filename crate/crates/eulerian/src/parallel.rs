//! Multi-threaded versions of the exhaustive distributions.
//!
//! Each class is split into disjoint parts (by prefix, or by labeling), the
//! parts are folded on a rayon pool and the partial distributions are merged.
//! Merging is a coefficientwise sum, so the result does not depend on the
//! number of threads or on scheduling.

use eulerian_core::families::{family_polynomial, Family};
use eulerian_core::forest::{labeled_forest_distribution, LabelingFamily};
use eulerian_core::inversion::{ascent_distribution, AscentStatistic, InversionSequences, SRule};
use eulerian_core::signedperm::{signed_word_distribution, MultisetSpec, SignedFamily};
use eulerian_core::{Distribution, Error, Polynomial, Result};
use rayon::prelude::*;

/// Number of parts to aim for per worker thread.
const PARTS_PER_THREAD: usize = 8;

fn target_parts() -> usize {
    rayon::current_num_threads() * PARTS_PER_THREAD
}

fn merge_all(parts: Vec<Result<Distribution>>) -> Result<Distribution> {
    parts.into_iter().try_fold(Distribution::new(), |acc, d| Ok(acc.merged(d?)))
}

pub fn par_ascent_distribution(rule: &SRule, n: usize, statistic: AscentStatistic) -> Result<Distribution> {
    let target = target_parts();
    let mut depth = 0;
    let mut prefixes = vec![Vec::new()];
    while depth < n && prefixes.len() < target {
        depth += 1;
        prefixes = InversionSequences::prefixes(rule, depth)?;
    }
    let parts = prefixes
        .par_iter()
        .map(|p| ascent_distribution(rule, n, statistic, p))
        .collect();
    merge_all(parts)
}

pub fn par_signed_word_distribution(spec: &MultisetSpec) -> Result<Distribution> {
    let target = target_parts();
    let mut depth = 0;
    let mut prefixes = vec![Vec::new()];
    while depth < spec.len() && prefixes.len() < target {
        depth += 1;
        prefixes = spec.prefixes(depth);
    }
    let parts = prefixes.par_iter().map(|p| signed_word_distribution(spec, p)).collect();
    merge_all(parts)
}

pub fn par_forest_distribution(family: LabelingFamily, n: usize) -> Result<Distribution> {
    let forest = family.forest(n)?;
    let labelings: Vec<_> = family.labelings(n)?.collect();
    let parts = labelings.par_iter().map(|w| labeled_forest_distribution(&forest, w)).collect();
    merge_all(parts)
}

/// Same value as [`family_polynomial`], computed on the current rayon pool.
pub fn par_family_polynomial(family: Family, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let dist = match family {
        Family::I => par_ascent_distribution(&SRule::PaperI, n, AscentStatistic::Asc)?,
        Family::Iprime => par_ascent_distribution(&SRule::PaperIPrime, n, AscentStatistic::Asc)?,
        Family::T => par_ascent_distribution(&SRule::Doubled, n, AscentStatistic::AscD)?,
        Family::P | Family::U | Family::V => {
            let class = match family {
                Family::P => SignedFamily::P,
                Family::U => SignedFamily::U,
                _ => SignedFamily::V,
            };
            let spec = class.spec(n)?.expect("multiset class");
            par_signed_word_distribution(&spec)?
        }
        Family::F => par_forest_distribution(LabelingFamily::Pairs, n)?,
        Family::Fprime => par_forest_distribution(LabelingFamily::PairsNegativeSingleton, n)?,
        Family::G => par_forest_distribution(LabelingFamily::PairsSignedSingleton, n)?,
        // at most 8! * 2^7 objects under the default guard; not worth splitting
        Family::D => return family_polynomial(family, n),
    };
    Ok(dist.to_polynomial())
}

/// Runs `f` on a pool with `jobs` threads, or on the global pool for `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
