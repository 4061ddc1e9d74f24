//! Type B `(F, w)`-partitions of signed labeled plane forests and the
//! compatible maps they decompose into.
//!
//! A type B partition is a map `f: V -> N` with, for every proper ancestor
//! `x` of `y`:
//!
//! * `f(x) <= f(y)`,
//! * `f(x) < f(y)` when `w(x) < w(y)`,
//!
//! and `f(r) >= 1` at every root `r` with `w(r) > 0`. `Ω_F(w, t)` counts the
//! partitions bounded by `t`.
//!
//! For a signed word `σ`, a σ-compatible map is a sequence
//! `g_1 >= g_2 >= ... >= g_n` that drops strictly at every descent
//! `σ_i > σ_{i+1}` and ends at least 1 when `σ_n > 0`. Every partition of
//! `(F, w)` is compatible with exactly one linear extension of `(F, w)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{PlaneForest, SignedLabeling};
use crate::signedperm::{des_b_count, SignedWord};

/// Checks the partition conditions on every comparable pair.
///
/// Returns false if `f` does not have one value per vertex.
pub fn is_partition(forest: &PlaneForest, w: &SignedLabeling, f: &[u64]) -> bool {
    if f.len() != forest.len() || w.labels().len() != forest.len() {
        return false;
    }
    for y in 0..forest.len() {
        for x in forest.ancestors(y) {
            if f[x] > f[y] || (w.label(x) < w.label(y) && f[x] == f[y]) {
                return false;
            }
        }
    }
    roots_ok(forest, w, f)
}

/// Same result as [`is_partition`], checking parent-child pairs only.
pub fn is_partition_by_edges(forest: &PlaneForest, w: &SignedLabeling, f: &[u64]) -> bool {
    if f.len() != forest.len() || w.labels().len() != forest.len() {
        return false;
    }
    for y in 0..forest.len() {
        if let Some(x) = forest.parent(y) {
            if f[x] > f[y] || (w.label(x) < w.label(y) && f[x] == f[y]) {
                return false;
            }
        }
    }
    roots_ok(forest, w, f)
}

fn roots_ok(forest: &PlaneForest, w: &SignedLabeling, f: &[u64]) -> bool {
    forest.roots().iter().all(|&r| w.label(r) < 0 || f[r] >= 1)
}

/// `Ω_F(w, t)` by trying every map `V -> {0..t}`. Exponential in `|V|`;
/// meant as an oracle for forests of at most 8 vertices.
pub fn omega_bruteforce(forest: &PlaneForest, w: &SignedLabeling, t: u64) -> BigUint {
    let n = forest.len();
    let mut f = vec![0u64; n];
    let mut count: u64 = 0;
    loop {
        if is_partition(forest, w, &f) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return BigUint::from(count);
            }
            f[i] += 1;
            if f[i] <= t {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// `Ω_F(w, t)` by dynamic programming over each tree.
///
/// For each vertex `v` and value `a`, `ways[v][a]` counts fillings of the
/// subtree of `v` with `f(v) = a`. A child `c` may take any value `>= a`,
/// or `> a` when `w(v) < w(c)`; suffix sums make each step linear in `t`.
/// Trees multiply.
pub fn omega(forest: &PlaneForest, w: &SignedLabeling, t: u64) -> BigUint {
    assert_eq!(w.labels().len(), forest.len(), "labeling does not match forest");
    let width = t as usize + 1;
    // suffix[v][a] = sum of ways[v][b] for b >= a, with suffix[v][t + 1] = 0
    let mut suffix: Vec<Vec<BigUint>> = vec![Vec::new(); forest.len()];
    // children carry larger preorder ids, so reverse preorder is bottom-up
    for v in (0..forest.len()).rev() {
        let mut ways = vec![BigUint::one(); width];
        for &c in forest.children(v) {
            let strict = w.label(v) < w.label(c);
            for (a, slot) in ways.iter_mut().enumerate() {
                *slot *= &suffix[c][a + usize::from(strict)];
            }
        }
        let mut s = vec![BigUint::zero(); width + 1];
        for a in (0..width).rev() {
            s[a] = &s[a + 1] + &ways[a];
        }
        suffix[v] = s;
        for &c in forest.children(v) {
            suffix[c] = Vec::new();
        }
    }
    forest
        .roots()
        .iter()
        .map(|&r| {
            let lo = usize::from(w.label(r) > 0);
            suffix[r].get(lo).cloned().unwrap_or_default()
        })
        .product()
}

fn check_distinct(sigma: &[i32]) -> Result<()> {
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::RepeatedLetters);
    }
    Ok(())
}

/// Whether `g` is σ-compatible.
pub fn is_compatible(sigma: &[i32], g: &[u64]) -> bool {
    if sigma.len() != g.len() {
        return false;
    }
    for i in 1..g.len() {
        if g[i - 1] < g[i] || (sigma[i - 1] > sigma[i] && g[i - 1] == g[i]) {
            return false;
        }
    }
    !(sigma.last().is_some_and(|&a| a > 0) && g.last() == Some(&0))
}

/// `Ω_σ(t)`, the number of σ-compatible maps with `g_1 <= t`, from the
/// closed form `C(n + t - des_B(σ), n)`.
pub fn omega_sigma(sigma: &[i32], t: u64) -> Result<BigUint> {
    check_distinct(sigma)?;
    let n = sigma.len() as u64;
    let des = des_b_count(sigma) as u64;
    if t < des {
        return Ok(BigUint::zero());
    }
    Ok(binomial(n + t - des, n))
}

/// `Ω_σ(t)` counted straight from the compatibility conditions, position by
/// position, without the closed form.
pub fn omega_sigma_count(sigma: &[i32], t: u64) -> Result<BigUint> {
    check_distinct(sigma)?;
    let width = t as usize + 1;
    if sigma.is_empty() {
        return Ok(BigUint::one());
    }
    // ways[v]: valid prefixes ending in g_i = v
    let mut ways = vec![BigUint::one(); width];
    for i in 1..sigma.len() {
        let drop = usize::from(sigma[i - 1] > sigma[i]);
        let mut next = vec![BigUint::zero(); width];
        let mut acc = BigUint::zero();
        for v in (0..width).rev() {
            // next[v] = sum of ways[u] over u >= v + drop
            if v + drop < width {
                acc += &ways[v + drop];
            }
            next[v] = acc.clone();
        }
        ways = next;
    }
    let lo = usize::from(*sigma.last().unwrap() > 0);
    Ok(ways.into_iter().skip(lo).sum())
}

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of `Des_B` positions `j >= i` (1-based).
pub fn d_statistic(sigma: &[i32], i: usize) -> Result<usize> {
    let n = sigma.len();
    if i == 0 || i > n {
        return Err(Error::OutOfRange { index: i, len: n });
    }
    let internal = (i..n).filter(|&j| sigma[j - 1] > sigma[j]).count();
    Ok(internal + usize::from(sigma[n - 1] > 0))
}

/// `λ_i = g_i - d_i`: sends a σ-compatible map with `g_1 <= t` to a weakly
/// decreasing sequence with first part at most `t - des_B(σ)`.
pub fn partition_shift(sigma: &[i32], g: &[u64]) -> Result<Vec<u64>> {
    if !is_compatible(sigma, g) {
        return Err(Error::NotCompatible);
    }
    (1..=sigma.len())
        .map(|i| {
            let d = d_statistic(sigma, i)? as u64;
            g[i - 1].checked_sub(d).ok_or(Error::Internal("compatible value below its descent count"))
        })
        .collect()
}

/// The linear extension a partition decomposes along, with the partition
/// read in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub vertices: Vec<usize>,
    pub word: SignedWord,
    pub values: Vec<u64>,
}

/// Finds the linear extension σ of `(F, w)` such that `f` read along σ is
/// σ-compatible.
///
/// Vertices are ordered by decreasing `f`, ties by increasing label. The
/// result is checked to be a linear extension and compatible; failure means
/// a bug, reported as [`Error::Internal`].
pub fn decompose(forest: &PlaneForest, w: &SignedLabeling, f: &[u64]) -> Result<Decomposition> {
    if !is_partition(forest, w, f) {
        return Err(Error::NotAPartition);
    }
    let mut vertices: Vec<usize> = (0..forest.len()).collect();
    vertices.sort_by(|&a, &b| f[b].cmp(&f[a]).then(w.label(a).cmp(&w.label(b))));

    let mut pos = vec![0; forest.len()];
    for (k, &v) in vertices.iter().enumerate() {
        pos[v] = k;
    }
    if (0..forest.len()).any(|v| forest.parent(v).is_some_and(|p| pos[p] < pos[v])) {
        return Err(Error::Internal("decomposition order is not a linear extension"));
    }
    let letters: Vec<i32> = vertices.iter().map(|&v| w.label(v)).collect();
    let values: Vec<u64> = vertices.iter().map(|&v| f[v]).collect();
    if !is_compatible(&letters, &values) {
        return Err(Error::Internal("partition is not compatible with its extension"));
    }
    Ok(Decomposition { vertices, word: SignedWord::new(letters)?, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{linear_extensions_labeled, LabelingFamily, LabelingType, Tree};
    use alloc::vec::Vec;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f1(t: LabelingType) -> (PlaneForest, SignedLabeling) {
        (PlaneForest::two_vertex_trees(1).unwrap(), SignedLabeling::from_types(&[t], None))
    }

    fn singleton(label: i32) -> (PlaneForest, SignedLabeling) {
        let f = PlaneForest::from_trees(&[Tree::leaf()]);
        let w = SignedLabeling::new(&f, vec![label]).unwrap();
        (f, w)
    }

    fn random_tree(rng: &mut ChaCha8Rng, size: usize) -> Tree {
        // split size - 1 vertices among a random number of children
        let mut rest = size - 1;
        let mut children = Vec::new();
        while rest > 0 {
            let k = rng.gen_range(1..=rest);
            children.push(random_tree(rng, k));
            rest -= k;
        }
        Tree::with_children(children)
    }

    fn random_labeled_forest(rng: &mut ChaCha8Rng, max: usize) -> (PlaneForest, SignedLabeling) {
        let n = rng.gen_range(1..=max);
        let mut rest = n;
        let mut trees = Vec::new();
        while rest > 0 {
            let k = rng.gen_range(1..=rest);
            trees.push(random_tree(rng, k));
            rest -= k;
        }
        let forest = PlaneForest::from_trees(&trees);
        let mut labels: Vec<i32> = (1..=n as i32).collect();
        labels.shuffle(rng);
        for a in labels.iter_mut() {
            if rng.gen_bool(0.5) {
                *a = -*a;
            }
        }
        let w = SignedLabeling::new(&forest, labels).unwrap();
        (forest, w)
    }

    /// Every map `V -> {0..t}`.
    fn all_maps(n: usize, t: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut f = vec![0u64; n];
        'outer: loop {
            out.push(f.clone());
            for slot in f.iter_mut() {
                *slot += 1;
                if *slot <= t {
                    continue 'outer;
                }
                *slot = 0;
            }
            return out;
        }
    }

    #[test]
    fn partition_examples() {
        let (f, w) = f1(LabelingType::Type1);
        assert!(is_partition(&f, &w, &[1, 1]));
        let (f, w) = f1(LabelingType::Type3);
        assert!(!is_partition(&f, &w, &[1, 1]));
        let (f, w) = f1(LabelingType::Type4);
        assert!(is_partition(&f, &w, &[0, 0]));
        assert!(!is_partition(&f, &w, &[0]));
    }

    #[test]
    fn bruteforce_examples() {
        let (f, w) = f1(LabelingType::Type4);
        assert_eq!(omega_bruteforce(&f, &w, 1), 3u32.into());
        let (f, w) = f1(LabelingType::Type1);
        assert_eq!(omega_bruteforce(&f, &w, 2), 3u32.into());
        assert_eq!(omega_bruteforce(&f, &w, 0), 0u32.into());
    }

    #[test]
    fn two_vertex_tree_counts() {
        for t in 0..=10u64 {
            let tri = binomial(t + 1, 2);
            let total: BigUint = LabelingType::ALL
                .iter()
                .map(|&ty| {
                    let (f, w) = f1(ty);
                    let expect = if ty == LabelingType::Type4 { binomial(t + 2, 2) } else { tri.clone() };
                    assert_eq!(omega(&f, &w, t), expect, "{ty:?} t={t}");
                    omega(&f, &w, t)
                })
                .sum();
            assert_eq!(total, BigUint::from((t + 1) * (2 * t + 1)));
            let (f, w) = singleton(-3);
            assert_eq!(omega(&f, &w, t), BigUint::from(t + 1));
            let (f, w) = singleton(3);
            assert_eq!(omega(&f, &w, t), BigUint::from(t));
        }
        assert_eq!(omega(&singleton(-5).0, &singleton(-5).1, 3), 4u32.into());
        assert_eq!(omega(&singleton(5).0, &singleton(5).1, 3), 3u32.into());
    }

    #[test]
    fn empty_forest_has_one_partition() {
        let f = PlaneForest::empty();
        let w = SignedLabeling::new(&f, Vec::new()).unwrap();
        assert_eq!(omega(&f, &w, 3), BigUint::one());
        assert_eq!(omega_bruteforce(&f, &w, 3), BigUint::one());
    }

    #[test]
    fn dp_matches_bruteforce_on_random_forests() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (f, w) = random_labeled_forest(&mut rng, 6);
            for t in 0..=4 {
                assert_eq!(omega(&f, &w, t), omega_bruteforce(&f, &w, t), "{f} {:?} t={t}", w.labels());
            }
        }
    }

    #[test]
    fn edge_check_equals_pair_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let (f, w) = random_labeled_forest(&mut rng, 6);
            for m in all_maps(f.len(), 2) {
                assert_eq!(is_partition(&f, &w, &m), is_partition_by_edges(&f, &w, &m));
            }
        }
    }

    #[test]
    fn product_over_components() {
        for n in 1..=3 {
            let forest = PlaneForest::two_vertex_trees(n).unwrap();
            for w in LabelingFamily::Pairs.labelings(n).unwrap() {
                for t in 0..=3 {
                    let product: BigUint = (0..forest.num_trees())
                        .map(|k| omega(&forest.component(k), &w.restrict(&forest, k), t))
                        .product();
                    assert_eq!(omega(&forest, &w, t), product);
                }
            }
        }
    }

    #[test]
    fn omega_sigma_examples() {
        assert_eq!(omega_sigma(&[1, 2], 2).unwrap(), 3u32.into());
        assert_eq!(omega_sigma(&[-2, -1], 1).unwrap(), 3u32.into());
        assert_eq!(omega_sigma(&[2, -1, 1, -3], 1).unwrap(), BigUint::zero());
        assert_eq!(omega_sigma(&[1, 1], 3), Err(Error::RepeatedLetters));
        assert_eq!(omega_sigma_count(&[1, 1], 3), Err(Error::RepeatedLetters));
        for sigma in [&[1, 2][..], &[-2, -1], &[2, -1, 1, -3], &[3, 1, -2]] {
            for t in 0..6 {
                assert_eq!(omega_sigma(sigma, t).unwrap(), omega_sigma_count(sigma, t).unwrap());
            }
        }
    }

    #[test]
    fn d_statistic_examples() {
        assert_eq!(d_statistic(&[1, 2], 1).unwrap(), 1);
        assert_eq!(d_statistic(&[1, 2], 2).unwrap(), 1);
        assert_eq!(d_statistic(&[-3, -2, -1], 2).unwrap(), 0);
        assert_eq!(d_statistic(&[2, -1, 1, -2], 2).unwrap(), 1);
        assert_eq!(d_statistic(&[2, -1, 1, -2], 1).unwrap(), 2);
        assert!(d_statistic(&[1], 0).is_err());
        assert!(d_statistic(&[1], 2).is_err());
    }

    #[test]
    fn shift_gives_bounded_partitions() {
        let sigma = [3, -1, 2, -4];
        let des = des_b_count(&sigma) as u64;
        let t = 5;
        let mut count = 0u32;
        for g in all_maps(4, t) {
            if !is_compatible(&sigma, &g) || g[0] > t {
                assert!(partition_shift(&sigma, &g).is_err() || g[0] > t);
                continue;
            }
            count += 1;
            let lambda = partition_shift(&sigma, &g).unwrap();
            assert!(lambda.windows(2).all(|p| p[0] >= p[1]));
            assert!(lambda[0] <= t - des);
        }
        assert_eq!(BigUint::from(count), omega_sigma(&sigma, t).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let (f, w) = f1(LabelingType::Type1);
        let d = decompose(&f, &w, &[1, 2]).unwrap();
        assert_eq!(d.word.letters(), &[1, 2]);
        assert_eq!(d.values, [2, 1]);
        assert_eq!(d.vertices, [1, 0]);

        let (f, w) = singleton(-4);
        let d = decompose(&f, &w, &[0]).unwrap();
        assert_eq!((d.word.letters(), d.values.as_slice()), (&[-4][..], &[0u64][..]));

        let (f, w) = f1(LabelingType::Type3);
        assert_eq!(decompose(&f, &w, &[1, 1]), Err(Error::NotAPartition));
    }

    #[test]
    fn decompose_f2_type4_constant() {
        let f = PlaneForest::two_vertex_trees(2).unwrap();
        let w = SignedLabeling::from_types(&[LabelingType::Type4, LabelingType::Type4], None);
        let values = [1, 1, 1, 1];
        let d = decompose(&f, &w, &values).unwrap();
        let compatible: Vec<SignedWord> = linear_extensions_labeled(&f, &w)
            .unwrap()
            .filter(|s| is_compatible(s, &[1, 1, 1, 1]))
            .collect();
        assert_eq!(compatible, core::slice::from_ref(&d.word));
        assert_eq!(d.word.letters(), &[-4, -3, -2, -1]);
    }

    /// Exhaustive: every bounded partition lands in exactly one extension and
    /// the per-extension counts add up to Ω.
    #[test]
    fn decomposition_is_a_partition_of_the_partitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut cases: Vec<(PlaneForest, SignedLabeling)> = Vec::new();
        for n in 1..=2 {
            let forest = PlaneForest::two_vertex_trees(n).unwrap();
            cases.extend(LabelingFamily::Pairs.labelings(n).unwrap().map(|w| (forest.clone(), w)));
        }
        for _ in 0..30 {
            cases.push(random_labeled_forest(&mut rng, 5));
        }
        let t = 3;
        for (f, w) in &cases {
            let extensions: Vec<Vec<usize>> = f.linear_extensions().collect();
            let words: Vec<SignedWord> = linear_extensions_labeled(f, w).unwrap().collect();
            let mut hits = vec![0u64; words.len()];
            for m in all_maps(f.len(), t) {
                if !is_partition(f, w, &m) {
                    continue;
                }
                let d = decompose(f, w, &m).unwrap();
                let matching: Vec<usize> = (0..words.len())
                    .filter(|&k| {
                        let along: Vec<u64> = extensions[k].iter().map(|&v| m[v]).collect();
                        is_compatible(&words[k], &along)
                    })
                    .collect();
                assert_eq!(matching.len(), 1, "{f} {:?} {m:?}", w.labels());
                assert_eq!(words[matching[0]], d.word);
                hits[matching[0]] += 1;
            }
            for (word, &h) in words.iter().zip(&hits) {
                assert_eq!(BigUint::from(h), omega_sigma(word, t).unwrap());
            }
            assert_eq!(BigUint::from(hits.iter().sum::<u64>()), omega(f, w, t));
        }
    }

    proptest! {
        #[test]
        fn binomial_matches_pascal(n in 0u64..40, k in 0u64..40) {
            let pascal = if n == 0 || k == 0 { BigUint::from(u8::from(k == 0)) }
                else { binomial(n - 1, k - 1) + binomial(n - 1, k) };
            prop_assert_eq!(binomial(n, k), pascal);
        }

        #[test]
        fn closed_form_matches_direct_count(
            raw in proptest::sample::subsequence((1..=9).collect::<Vec<i32>>(), 1..=7),
            signs in proptest::collection::vec(any::<bool>(), 7),
            seed in any::<u64>(),
            t in 0u64..9,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut sigma: Vec<i32> = raw.iter().zip(&signs)
                .map(|(&a, &neg)| if neg { -a } else { a }).collect();
            sigma.shuffle(&mut rng);
            prop_assert_eq!(omega_sigma(&sigma, t).unwrap(), omega_sigma_count(&sigma, t).unwrap());
        }
    }
}
