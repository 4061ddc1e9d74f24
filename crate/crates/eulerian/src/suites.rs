//! Named groups of checks, as run by `eulerian verify`.

use std::fmt;
use std::str::FromStr;

use eulerian_core::families::Family;

use crate::checks;
use crate::report::VerificationReport;

/// Largest `n` for the signed multiset and forest families without
/// `--allow-huge`.
pub const MULTISET_GUARD: usize = 4;
/// Largest `n` for the inversion-sequence and type D families without
/// `--allow-huge`.
pub const SEQUENCE_GUARD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Conj327,
    Thm31,
    Thm33,
    Ppartition,
    Series,
    Realroots,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Conj327,
        Suite::Thm31,
        Suite::Thm33,
        Suite::Ppartition,
        Suite::Series,
        Suite::Realroots,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Conj327 => "conj327",
            Suite::Thm31 => "thm31",
            Suite::Thm33 => "thm33",
            Suite::Ppartition => "ppartition",
            Suite::Series => "series",
            Suite::Realroots => "realroots",
            Suite::All => "all",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Conj327 | Suite::Thm31 | Suite::Thm33 => 4,
            Suite::Ppartition => 3,
            Suite::Series => 8,
            Suite::Realroots => 6,
            Suite::All => 0,
        }
    }

    /// The concrete suites this one runs, in order.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..6].to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides each suite's default size.
    pub n_max: Option<usize>,
    /// Overrides the series truncation.
    pub truncation: Option<u64>,
    pub allow_huge: bool,
    /// Seed for the random forest samples.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: None, truncation: None, allow_huge: false, seed: DEFAULT_SEED }
    }
}

pub const DEFAULT_SEED: u64 = 20_240_327;

impl SuiteOptions {
    fn n_max(&self, suite: Suite) -> usize {
        self.n_max.unwrap_or(suite.default_n_max())
    }

    /// Multiset-based families follow `n_max` but stop at the guard unless
    /// huge sizes are allowed.
    fn multiset_n_max(&self, suite: Suite) -> usize {
        let n = self.n_max(suite);
        if self.allow_huge {
            n
        } else {
            n.min(MULTISET_GUARD)
        }
    }
}

/// Rejects sizes over the guards unless `allow_huge` is set.
pub fn validate(suite: Suite, opts: &SuiteOptions) -> Result<(), String> {
    if opts.n_max == Some(0) {
        return Err("--n-max must be at least 1".into());
    }
    if opts.allow_huge {
        return Ok(());
    }
    for s in suite.members() {
        let n = opts.n_max(s);
        let (limit, what) = match s {
            Suite::Conj327 | Suite::Thm31 | Suite::Thm33 => (MULTISET_GUARD, "signed multiset classes"),
            Suite::Series | Suite::Realroots => (SEQUENCE_GUARD, "inversion-sequence families"),
            Suite::Ppartition => (3, "forest checks"),
            Suite::All => unreachable!(),
        };
        if n > limit {
            return Err(format!(
                "suite {s}: n = {n} exceeds the default limit {limit} for {what}; pass --allow-huge to run it"
            ));
        }
    }
    Ok(())
}

/// Runs `suite`, handing each report to `sink` as soon as it is complete.
pub fn run_suite(suite: Suite, opts: &SuiteOptions, sink: &mut dyn FnMut(VerificationReport)) {
    for s in suite.members() {
        run_one(s, opts, sink);
    }
}

fn run_one(suite: Suite, opts: &SuiteOptions, sink: &mut dyn FnMut(VerificationReport)) {
    let n_max = opts.n_max(suite);
    let mut emit_all = |reports: Vec<VerificationReport>| reports.into_iter().for_each(&mut *sink);
    match suite {
        Suite::Conj327 => (1..=n_max).for_each(|n| emit_all(vec![checks::conj327(n)])),
        Suite::Thm31 => (1..=n_max).for_each(|n| emit_all(vec![checks::thm31(n)])),
        Suite::Thm33 => {
            (1..=n_max).for_each(|n| emit_all(checks::thm33(n)));
            // the alternative descent convention, exhaustively up to n = 3
            (1..=n_max.min(3)).for_each(|n| emit_all(vec![checks::convention_equivalence(n)]));
        }
        Suite::Ppartition => {
            let t = opts.truncation.unwrap_or(12);
            (1..=n_max).for_each(|n| emit_all(checks::phi_bijection(n)));
            emit_all(checks::omega_series(n_max, t, opts.seed));
            emit_all(checks::decomposition(n_max.min(2), opts.seed));
            emit_all(checks::omega_formulas(opts.seed));
        }
        Suite::Series => {
            emit_all(checks::type_d(n_max));
            emit_all(checks::series_formulas(n_max, opts.multiset_n_max(suite), opts.truncation));
            emit_all(checks::lattice_counts(n_max.min(5), 5, opts.truncation.unwrap_or(8)));
        }
        Suite::Realroots => {
            for family in [Family::I, Family::Iprime, Family::T, Family::D] {
                (1..=n_max).for_each(|n| emit_all(vec![checks::real_rooted(family, n)]));
            }
            for family in [Family::P, Family::U, Family::V] {
                (1..=opts.multiset_n_max(suite)).for_each(|n| emit_all(vec![checks::real_rooted(family, n)]));
            }
        }
        Suite::All => unreachable!("expanded by members()"),
    }
}
