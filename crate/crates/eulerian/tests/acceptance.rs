//! Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p eulerian --test acceptance`. Each criterion is
//! computed directly from the core library, sequentially, so this target is
//! independent of the CLI suites and of the thread pool.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use eulerian::random::random_labeled_forest;
use eulerian_core::families::{family_polynomial, Family};
use eulerian_core::forest::{
    forest_descent_polynomial, linear_extensions_labeled, phi, LabelingFamily, LabelingType, PlaneForest,
    SignedLabeling,
};
use eulerian_core::genfunc::{
    expand_rational, f_count, is_real_rooted, verify_fcount_transform, verify_series_identity, ClosedForm,
};
use eulerian_core::inversion::{ascent_polynomial, AscentStatistic, SRule};
use eulerian_core::ppartition::{
    binomial, decompose, is_compatible, is_partition, omega, omega_bruteforce, omega_sigma, omega_sigma_count,
};
use eulerian_core::signedperm::{
    des_alt, des_b, descent_polynomial, reverse_negate, MultisetSpec, SignedFamily, SignedWords,
};
use eulerian_core::{Distribution, Polynomial};
use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(what: &str, lhs: &Polynomial, rhs: &Polynomial) -> Result<(), String> {
    ensure(lhs == rhs, || format!("{what}: {lhs} != {rhs}"))
}

fn asc(rule: SRule, n: usize) -> Polynomial {
    ascent_polynomial(&rule, n, AscentStatistic::Asc).unwrap()
}

fn des(class: SignedFamily, n: usize) -> Polynomial {
    descent_polynomial(class, n).unwrap()
}

fn total(p: &Polynomial) -> u64 {
    p.coeffs().iter().map(|c| u64::try_from(c).unwrap()).sum()
}

fn pairs_instances(n: usize) -> Vec<(PlaneForest, SignedLabeling)> {
    let forest = PlaneForest::two_vertex_trees(n).unwrap();
    LabelingFamily::Pairs.labelings(n).unwrap().map(|w| (forest.clone(), w)).collect()
}

fn random_forests(seed: u64, count: usize, max_vertices: usize) -> Vec<(PlaneForest, SignedLabeling)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_labeled_forest(&mut rng, max_vertices)).collect()
}

fn criterion_1() -> Outcome {
    same("anchor P_1", &des(SignedFamily::P, 1), &poly(&[1, 3]))?;
    same("anchor I_2", &asc(SRule::PaperI, 2), &poly(&[1, 3]))?;
    let mut objects = 0;
    for n in 1..=4 {
        let (p, i) = (des(SignedFamily::P, n), asc(SRule::PaperI, 2 * n));
        same(&format!("P_{n} vs I_{}", 2 * n), &p, &i)?;
        objects += total(&p) + total(&i);
    }
    Ok(format!("P_n(x) = I_2n(x) for n = 1..4 ({objects} objects)"))
}

fn criterion_2() -> Outcome {
    same("anchor V_2", &des(SignedFamily::V, 2), &poly(&[1, 8, 3]))?;
    for n in 1..=4 {
        same(&format!("V_{n} vs I_{}", 2 * n - 1), &des(SignedFamily::V, n), &asc(SRule::PaperI, 2 * n - 1))?;
    }
    Ok("V_n(x) = I_(2n-1)(x) for n = 1..4".into())
}

fn criterion_3() -> Outcome {
    same("anchor U_1", &des(SignedFamily::U, 1), &poly(&[1, 1]))?;
    same("anchor I'_1", &asc(SRule::PaperIPrime, 1), &poly(&[1, 1]))?;
    for n in 1..=4 {
        same(&format!("P_{n} vs I'_{}", 2 * n), &des(SignedFamily::P, n), &asc(SRule::PaperIPrime, 2 * n))?;
        same(
            &format!("U_{n} vs I'_{}", 2 * n - 1),
            &des(SignedFamily::U, n),
            &asc(SRule::PaperIPrime, 2 * n - 1),
        )?;
    }
    Ok("P_n(x) = I'_2n(x) and U_n(x) = I'_(2n-1)(x) for n = 1..4".into())
}

fn criterion_4() -> Outcome {
    let t = |n| ascent_polynomial(&SRule::Doubled, n, AscentStatistic::AscD).unwrap();
    same("T_3", &t(3), &poly(&[2, 22, 22, 2]))?;
    for n in 1..=5 {
        same(&format!("T_{n} vs 2 D_{n}"), &t(n), &des(SignedFamily::D, n).scale(&BigInt::from(2)))?;
    }
    Ok("T_3(x) = 2 + 22x + 22x^2 + 2x^3 and T_n(x) = 2 D_n(x) for n = 1..5".into())
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        let forest = PlaneForest::two_vertex_trees(n).unwrap();
        let p_n = MultisetSpec::p(n).unwrap();
        let members: HashSet<Vec<i32>> = SignedWords::new(p_n.clone()).map(|w| w.into_letters()).collect();
        let mut images = HashSet::new();
        for w in LabelingFamily::Pairs.labelings(n).unwrap() {
            for sigma in linear_extensions_labeled(&forest, &w).unwrap() {
                checked += 1;
                let tau = phi(&sigma).map_err(|e| format!("phi({sigma}): {e}"))?;
                ensure(des_b(&sigma).unwrap() == des_b(&tau).unwrap(), || {
                    format!("des_B changes under phi: {sigma} -> {tau}")
                })?;
                ensure(members.contains(tau.letters()), || format!("phi({sigma}) = {tau} is not in P_{n}"))?;
                ensure(images.insert(tau.into_letters()), || format!("phi is not injective at {sigma}"))?;
            }
        }
        ensure(images.len() == members.len(), || format!("phi misses {} words of P_{n}", members.len() - images.len()))?;
        same(
            &format!("F_{n} vs P_{n}"),
            &forest_descent_polynomial(LabelingFamily::Pairs, n).unwrap(),
            &des(SignedFamily::P, n),
        )?;
    }
    Ok(format!("phi is a des_B-preserving bijection onto P_n, and F_n(x) = P_n(x), n = 1..3 ({checked} words)"))
}

const SERIES_T: u64 = 12;

/// Series identity for one labeled forest, plus the
/// per-extension identity for every extension met.
fn omega_series(forest: &PlaneForest, w: &SignedLabeling) -> Result<usize, String> {
    let m = forest.len() as u32 + 1;
    let mut dist = Distribution::new();
    let mut extensions = 0;
    for sigma in linear_extensions_labeled(forest, w).unwrap() {
        extensions += 1;
        let d = des_b(&sigma).unwrap();
        dist.record(d);
        let expansion = expand_rational(&Polynomial::monomial(BigInt::from(1), d), m, SERIES_T);
        for (t, e) in expansion.iter().enumerate() {
            let direct = BigInt::from(omega_sigma_count(&sigma, t as u64).unwrap());
            ensure(direct == *e, || format!("Omega_sigma series for {sigma} at t = {t}: {direct} != {e}"))?;
        }
    }
    let expansion = expand_rational(&dist.to_polynomial(), m, SERIES_T);
    for (t, e) in expansion.iter().enumerate() {
        let o = BigInt::from(omega(forest, w, t as u64));
        ensure(o == *e, || format!("Omega series for {forest} {:?} at t = {t}: {o} != {e}", w.labels()))?;
    }
    Ok(extensions)
}

fn criterion_6() -> Outcome {
    let mut extensions = 0;
    for n in 1..=3 {
        for (f, w) in pairs_instances(n) {
            extensions += omega_series(&f, &w)?;
        }
    }
    for (f, w) in random_forests(6, 50, 6) {
        extensions += omega_series(&f, &w)?;
    }
    Ok(format!(
        "Omega series = des_B series through degree {SERIES_T} on L(F_n), n <= 3, and 50 random forests; \
         per-extension identity on {extensions} extensions"
    ))
}

fn decomposition(forest: &PlaneForest, w: &SignedLabeling, t_max: u64) -> Result<u64, String> {
    let orders: Vec<Vec<usize>> = forest.linear_extensions().collect();
    let size = forest.len();
    let mut valid = 0;
    let total = (t_max + 1).pow(size as u32);
    for code in 0..total {
        let f: Vec<u64> = (0..size).map(|k| code / (t_max + 1).pow(k as u32) % (t_max + 1)).collect();
        if !is_partition(forest, w, &f) {
            continue;
        }
        valid += 1;
        let compatible: Vec<&Vec<usize>> = orders
            .iter()
            .filter(|order| {
                let letters: Vec<i32> = order.iter().map(|&v| w.label(v)).collect();
                let values: Vec<u64> = order.iter().map(|&v| f[v]).collect();
                is_compatible(&letters, &values)
            })
            .collect();
        ensure(compatible.len() == 1, || {
            format!("{forest} {:?} f = {f:?}: {} compatible extensions", w.labels(), compatible.len())
        })?;
        let d = decompose(forest, w, &f).map_err(|e| format!("decompose failed on {f:?}: {e}"))?;
        ensure(d.vertices == *compatible[0], || format!("decompose picked the wrong extension for {f:?}"))?;
    }
    let sum: BigUint = linear_extensions_labeled(forest, w).unwrap().map(|s| omega_sigma(&s, t_max).unwrap()).sum();
    ensure(sum == omega(forest, w, t_max), || format!("sum of Omega_sigma != Omega on {forest}"))?;
    Ok(valid)
}

fn criterion_7() -> Outcome {
    let mut valid = 0;
    for n in 1..=2 {
        for (f, w) in pairs_instances(n) {
            valid += decomposition(&f, &w, 4)?;
        }
    }
    for (f, w) in random_forests(7, 50, 6) {
        valid += decomposition(&f, &w, 4)?;
    }
    Ok(format!("each of {valid} partitions with values <= 4 has exactly one compatible extension"))
}

fn criterion_8() -> Outcome {
    let tree = PlaneForest::two_vertex_trees(1).unwrap();
    let single = PlaneForest::two_vertex_trees_plus_singleton(1).unwrap();
    let neg = SignedLabeling::new(&single, vec![-1]).unwrap();
    let pos = SignedLabeling::new(&single, vec![1]).unwrap();
    for t in 0..=10u64 {
        let mut sum = BigUint::from(0u8);
        for ty in LabelingType::ALL {
            let o = omega(&tree, &SignedLabeling::from_types(&[ty], None), t);
            let want = if ty == LabelingType::Type4 { binomial(t + 2, 2) } else { binomial(t + 1, 2) };
            ensure(o == want, || format!("{ty:?} at t = {t}: {o} != {want}"))?;
            sum += o;
        }
        ensure(sum == BigUint::from((t + 1) * (2 * t + 1)), || format!("sum over types at t = {t}"))?;
        ensure(omega(&single, &neg, t) == BigUint::from(t + 1), || format!("negative singleton at t = {t}"))?;
        ensure(omega(&single, &pos, t) == BigUint::from(t), || format!("positive singleton at t = {t}"))?;
    }
    let mut corpus: Vec<_> = (1..=3).flat_map(pairs_instances).collect();
    for n in 2..=3 {
        let forest = LabelingFamily::PairsSignedSingleton.forest(n).unwrap();
        corpus.extend(LabelingFamily::PairsSignedSingleton.labelings(n).unwrap().map(|w| (forest.clone(), w)));
    }
    corpus.extend(random_forests(8, 200, 6));
    for (f, w) in &corpus {
        for t in 0..=4 {
            let (dp, brute) = (omega(f, w, t), omega_bruteforce(f, w, t));
            ensure(dp == brute, || format!("omega {f} {:?} t = {t}: {dp} != {brute}", w.labels()))?;
        }
    }
    Ok(format!("two-vertex and singleton formulas for t <= 10; omega = brute force on {} instances", corpus.len()))
}

fn criterion_9() -> Outcome {
    let check = |name: &str, p: &Polynomial, m: u32, form: ClosedForm| -> Result<(), String> {
        let r = verify_series_identity(p, m, &form, None).map_err(|e| format!("{name}: {e}"))?;
        match r.first_failure {
            None => Ok(()),
            Some(f) => Err(format!("{name}: t = {} gives {} != {}", f.t, f.expansion, f.expected)),
        }
    };
    for n in 1..=8usize {
        let k = n as u32;
        check(&format!("I_{n}"), &asc(SRule::PaperI, n), k + 1, ClosedForm::paper_i(k))?;
        check(&format!("I'_{n}"), &asc(SRule::PaperIPrime, n), k + 1, ClosedForm::paper_i_prime(k))?;
    }
    for n in 1..=4usize {
        let k = n as u32;
        let f_n = family_polynomial(Family::F, n).unwrap();
        check(&format!("F_{n}"), &f_n, 2 * k + 1, ClosedForm::new(k, k, 0))?;
        check(&format!("I_{}", 2 * n), &asc(SRule::PaperI, 2 * n), 2 * k + 1, ClosedForm::new(k, k, 0))?;
        check(&format!("V_{n}"), &des(SignedFamily::V, n), 2 * k, ClosedForm::new(k, k - 1, 0))?;
        check(&format!("U_{n}"), &des(SignedFamily::U, n), 2 * k, ClosedForm::new(k - 1, k, 0))?;
        for (family, form) in [
            (LabelingFamily::PairsNegativeSingleton, ClosedForm::new(k, k - 1, 0)),
            (LabelingFamily::PairsSignedSingleton, ClosedForm::new(k - 1, k, 0)),
        ] {
            let forest = family.forest(n).unwrap();
            let labelings: Vec<_> = family.labelings(n).unwrap().collect();
            for t in 0..=SERIES_T {
                let sum: BigUint = labelings.iter().map(|w| omega(&forest, w, t)).sum();
                let want = form.eval_integer(t).unwrap();
                ensure(BigInt::from(sum.clone()) == want, || {
                    format!("sum of Omega over {family:?}, n = {n}, t = {t}: {sum} != {want}")
                })?;
            }
        }
    }
    Ok("I_n, I'_n series for n = 1..8; F_n, I_2n, V_n, U_n series and Omega sums for n = 1..4".into())
}

fn criterion_10() -> Outcome {
    for n in 0..=5usize {
        for t in 0..=5u64 {
            let want = ClosedForm::halved_i_prime(n as u32).eval_integer(t).unwrap();
            let got = BigInt::from(f_count(&SRule::HalvedIPrime, n, t).unwrap());
            ensure(got == want, || format!("f_{n}(t = {t}) for s': {got} != {want}"))?;
            let (s, s_half) = (f_count(&SRule::PaperIPrime, n, t).unwrap(), f_count(&SRule::HalvedIPrime, n, 2 * t).unwrap());
            ensure(s == s_half, || format!("f_{n}^(s)({t}) = {s} but f_{n}^(s')({}) = {s_half}", 2 * t))?;
        }
    }
    for rule in [SRule::Natural, SRule::PaperI, SRule::PaperIPrime] {
        for n in 1..=5 {
            let r = verify_fcount_transform(&rule, n, 8).unwrap();
            ensure(r.holds(), || format!("lattice transform fails for {rule}, n = {n}: {:?}", r.first_failure))?;
        }
    }
    Ok("lattice counts for s' match the closed form, f^(s)(t) = f^(s')(2t), transform holds, n <= 5".into())
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for (family, n_max) in [
        (Family::I, 6),
        (Family::Iprime, 6),
        (Family::T, 6),
        (Family::D, 6),
        (Family::P, 4),
        (Family::U, 4),
        (Family::V, 4),
    ] {
        for n in 1..=n_max {
            let p = family_polynomial(family, n).unwrap();
            ensure(is_real_rooted(&p).unwrap(), || format!("{family}_{n} = {p} is not real-rooted"))?;
            count += 1;
        }
    }
    Ok(format!("{count} family polynomials are real-rooted"))
}

fn criterion_12() -> Outcome {
    let mut words = 0;
    for n in 1..=3 {
        for spec in [MultisetSpec::p(n).unwrap(), MultisetSpec::u(n).unwrap()] {
            for w in SignedWords::new(spec) {
                words += 1;
                let (a, b) = (des_alt(&w).unwrap(), des_b(&reverse_negate(&w)).unwrap());
                ensure(a == b, || format!("{w}: des_alt = {a}, des_B(reverse_negate) = {b}"))?;
            }
        }
    }
    Ok(format!("des_alt = des_B after reverse-negation on {words} words of P_n, U_n, n <= 3"))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failures = 0;
    for (k, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {k:>2}: PASS ({ms} ms) {detail}"),
            Err(why) => {
                failures += 1;
                println!("criterion {k:>2}: FAIL ({ms} ms) {why}");
            }
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
