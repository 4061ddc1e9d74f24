//! The individual identity checks, each producing one or more reports.
//!
//! Checks never panic on a mathematical mismatch: the first failing instance
//! (in enumeration order, independent of thread scheduling) is recorded in the
//! report.

use std::collections::HashSet;

use eulerian_core::families::Family;
use eulerian_core::forest::{
    linear_extensions_labeled, phi, LabelingFamily, LabelingType, PlaneForest, SignedLabeling,
};
use eulerian_core::genfunc::{
    expand_rational, f_count, is_real_rooted, verify_fcount_transform, verify_series_identity,
    ClosedForm, SeriesCheck,
};
use eulerian_core::inversion::SRule;
use eulerian_core::ppartition::{
    binomial, decompose, is_compatible, is_partition, omega, omega_bruteforce, omega_sigma,
    omega_sigma_count,
};
use eulerian_core::signedperm::{des_alt, des_b, des_b_count, reverse_negate, MultisetSpec, SignedWords};
use eulerian_core::{Distribution, Polynomial};
use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::parallel::par_family_polynomial;
use crate::random::random_labeled_forest;
use crate::report::{Check, VerificationReport};

/// Sum of the coefficients, i.e. the number of objects a polynomial counts.
fn total(p: &Polynomial) -> u64 {
    p.coeffs().iter().map(|c| u64::try_from(c).unwrap_or(u64::MAX)).fold(0, u64::saturating_add)
}

fn series_failure(check: &mut Check, at: Value, result: &SeriesCheck) {
    if let Some(m) = &result.first_failure {
        let mut at = at;
        at["t"] = m.t.into();
        check.fail(at, m.expansion.to_string(), m.expected.to_string());
    }
}

/// `lhs_family(lhs_n) == rhs_family(rhs_n)` coefficientwise.
pub fn family_identity(
    name: &str,
    lhs: (Family, usize),
    rhs: (Family, usize),
    n: usize,
) -> VerificationReport {
    let mut check = Check::new(name)
        .param("n", n)
        .param("lhs", format!("{}_{}", lhs.0, lhs.1))
        .param("rhs", format!("{}_{}", rhs.0, rhs.1));
    match (par_family_polynomial(lhs.0, lhs.1), par_family_polynomial(rhs.0, rhs.1)) {
        (Ok(a), Ok(b)) => {
            check.count(total(&a) + total(&b));
            check.expect_poly_eq(json!({ "n": n }), &a, &b);
        }
        (Err(e), _) | (_, Err(e)) => check.error(json!({ "n": n }), e),
    }
    check.finish()
}

/// Criterion 1: `P_n(x) = I_{2n}(x)`.
pub fn conj327(n: usize) -> VerificationReport {
    family_identity("conj327.P_n=I_2n", (Family::P, n), (Family::I, 2 * n), n)
}

/// Criterion 2: `V_n(x) = I_{2n-1}(x)`.
pub fn thm31(n: usize) -> VerificationReport {
    family_identity("thm31.V_n=I_2n-1", (Family::V, n), (Family::I, 2 * n - 1), n)
}

/// Criterion 3: `P_n(x) = I'_{2n}(x)` and `U_n(x) = I'_{2n-1}(x)`.
pub fn thm33(n: usize) -> Vec<VerificationReport> {
    vec![
        family_identity("thm33.P_n=Iprime_2n", (Family::P, n), (Family::Iprime, 2 * n), n),
        family_identity("thm33.U_n=Iprime_2n-1", (Family::U, n), (Family::Iprime, 2 * n - 1), n),
    ]
}

/// Criterion 12: `des_alt(σ) = des_B(reverse_negate(σ))` pointwise over `P_n`
/// and `U_n`, and hence `des_alt` has the same distribution as `des_B`.
pub fn convention_equivalence(n: usize) -> VerificationReport {
    let mut check = Check::new("thm33.des_alt=des_B∘reverse_negate").param("n", n);
    for (class, spec) in [("P", MultisetSpec::p(n)), ("U", MultisetSpec::u(n))] {
        let spec = match spec {
            Ok(s) => s,
            Err(e) => {
                check.error(json!({ "class": class }), e);
                continue;
            }
        };
        let mut alt = Distribution::new();
        let mut b = Distribution::new();
        let mut words = SignedWords::new(spec);
        while let Some(w) = words.advance() {
            check.count(1);
            let lhs = des_alt(w).expect("nonempty word");
            let rhs = des_b(&reverse_negate(w)).expect("nonempty word");
            if lhs != rhs {
                check.fail(json!({ "class": class, "word": w }), lhs, rhs);
            }
            alt.record(lhs);
            b.record(des_b_count(w));
        }
        check.expect_poly_eq(
            json!({ "class": class, "distribution": true }),
            &alt.to_polynomial(),
            &b.to_polynomial(),
        );
    }
    check.finish()
}

/// Criterion 4: the constant `T_3(x) = 2 + 22x + 22x^2 + 2x^3` and
/// `T_n(x) = 2 D_n(x)`.
pub fn type_d(n_max: usize) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let mut check = Check::new("series.T_3").param("n", 3);
    match par_family_polynomial(Family::T, 3) {
        Ok(t3) => {
            check.count(total(&t3));
            check.expect_poly_eq(json!({}), &t3, &Polynomial::from_i64s(&[2, 22, 22, 2]));
        }
        Err(e) => check.error(json!({}), e),
    }
    out.push(check.finish());
    for n in 1..=n_max {
        let mut check = Check::new("series.T_n=2D_n").param("n", n);
        match (par_family_polynomial(Family::T, n), par_family_polynomial(Family::D, n)) {
            (Ok(t), Ok(d)) => {
                check.count(total(&t) + total(&d));
                check.expect_poly_eq(json!({ "n": n }), &t, &d.scale(&BigInt::from(2)));
            }
            (Err(e), _) | (_, Err(e)) => check.error(json!({ "n": n }), e),
        }
        out.push(check.finish());
    }
    out
}

/// Criterion 5: `φ` maps the labeled extensions of `F_n` bijectively onto
/// `P_n`, preserving `des_B`; and `F_n(x) = P_n(x)`.
pub fn phi_bijection(n: usize) -> Vec<VerificationReport> {
    let mut check = Check::new("ppartition.phi_bijection").param("n", n);
    let forest = PlaneForest::two_vertex_trees(n).expect("n >= 1");
    let spec = MultisetSpec::p(n).expect("n >= 1");
    let expected_abs = spec.sorted_values();
    let mut images = HashSet::new();
    for w in LabelingFamily::Pairs.labelings(n).expect("n >= 1") {
        let mut words = linear_extensions_labeled(&forest, &w).expect("complete labeling");
        while let Some(sigma) = words.advance() {
            check.count(1);
            let tau = match phi(sigma) {
                Ok(t) => t,
                Err(e) => {
                    check.error(json!({ "sigma": sigma }), e);
                    continue;
                }
            };
            let mut abs: Vec<u32> = tau.iter().map(|a| a.unsigned_abs()).collect();
            abs.sort_unstable();
            if abs != expected_abs {
                check.fail(json!({ "sigma": sigma, "reason": "image not in P_n" }), json!(*tau), Value::Null);
            }
            let (d_sigma, d_tau) = (des_b_count(sigma), des_b_count(&tau));
            if d_sigma != d_tau {
                check.fail(json!({ "sigma": sigma, "tau": *tau, "statistic": "des_B" }), d_sigma, d_tau);
            }
            if !images.insert(tau.into_letters()) {
                check.fail(json!({ "sigma": sigma, "reason": "image repeated" }), Value::Null, Value::Null);
            }
        }
    }
    let card = spec.cardinality() as u64;
    check.expect_eq(json!({ "reason": "image size vs |P_n|" }), &(images.len() as u64), &card);
    let mut out = vec![check.finish()];
    out.push(family_identity("ppartition.F_n=P_n", (Family::F, n), (Family::P, n), n));
    out
}

/// Series of `Ω_F(w, t)` for `t <= T` against the expansion of the `des_B`
/// distribution of `L(F, w)` over `(1 - x)^{|F|+1}`, plus the per-extension
/// identity for `Ω_σ`. Returns `(extensions seen, failure)`.
fn omega_series_instance(
    forest: &PlaneForest,
    w: &SignedLabeling,
    truncation: u64,
) -> (u64, Option<(Value, Value, Value)>) {
    let m = forest.len() as u32 + 1;
    let mut dist = Distribution::new();
    let mut seen = 0;
    let mut words = linear_extensions_labeled(forest, w).expect("complete labeling");
    while let Some(sigma) = words.advance() {
        seen += 1;
        let d = des_b_count(sigma);
        dist.record(d);
        let expansion = expand_rational(&Polynomial::monomial(BigInt::from(1), d), m, truncation);
        for (t, e) in expansion.iter().enumerate() {
            let direct = omega_sigma_count(sigma, t as u64).expect("distinct letters");
            let closed = omega_sigma(sigma, t as u64).expect("distinct letters");
            if BigInt::from(direct.clone()) != *e || direct != closed {
                return (
                    seen,
                    Some((
                        json!({ "sigma": sigma, "t": t, "identity": "omega_sigma" }),
                        json!({ "direct": direct.to_string(), "closed_form": closed.to_string() }),
                        json!(e.to_string()),
                    )),
                );
            }
        }
    }
    let expansion = expand_rational(&dist.to_polynomial(), m, truncation);
    for (t, e) in expansion.iter().enumerate() {
        let o = BigInt::from(omega(forest, w, t as u64));
        if o != *e {
            return (
                seen,
                Some((
                    json!({ "forest": forest.to_string(), "labels": w.labels(), "t": t }),
                    json!(o.to_string()),
                    json!(e.to_string()),
                )),
            );
        }
    }
    (seen, None)
}

fn run_instances<F>(check: &mut Check, instances: &[(PlaneForest, SignedLabeling)], f: F)
where
    F: Fn(&PlaneForest, &SignedLabeling) -> (u64, Option<(Value, Value, Value)>) + Sync,
{
    let results: Vec<_> = instances.par_iter().map(|(forest, w)| f(forest, w)).collect();
    for (seen, failure) in results {
        check.count(seen);
        if let Some((at, lhs, rhs)) = failure {
            check.fail(at, lhs, rhs);
        }
    }
}

fn pairs_instances(n: usize) -> Vec<(PlaneForest, SignedLabeling)> {
    let forest = PlaneForest::two_vertex_trees(n).expect("n >= 1");
    LabelingFamily::Pairs.labelings(n).expect("n >= 1").map(|w| (forest.clone(), w)).collect()
}

/// `count` random labeled forests with at most `max_vertices` vertices.
pub fn random_instances(seed: u64, count: usize, max_vertices: usize) -> Vec<(PlaneForest, SignedLabeling)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_labeled_forest(&mut rng, max_vertices)).collect()
}

/// Criterion 6.
pub fn omega_series(n_max: usize, truncation: u64, seed: u64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut check = Check::new("ppartition.omega_series.F_n").param("n", n).param("T", truncation);
        run_instances(&mut check, &pairs_instances(n), |f, w| omega_series_instance(f, w, truncation));
        out.push(check.finish());
    }
    let mut check = Check::new("ppartition.omega_series.random")
        .param("forests", 50)
        .param("max_vertices", 6)
        .param("seed", seed)
        .param("T", truncation);
    run_instances(&mut check, &random_instances(seed, 50, 6), |f, w| {
        omega_series_instance(f, w, truncation)
    });
    out.push(check.finish());
    out
}

/// Every valid `f` with values at most `t_max` is compatible with exactly
/// one labeled extension, the one `decompose` returns, and the `Ω_σ` add up
/// to `Ω_F`.
fn decomposition_instance(
    forest: &PlaneForest,
    w: &SignedLabeling,
    t_max: u64,
) -> (u64, Option<(Value, Value, Value)>) {
    let orders: Vec<Vec<usize>> = forest.linear_extensions().collect();
    let size = forest.len();
    let mut f = vec![0u64; size];
    let mut valid = 0u64;
    let mut letters = vec![0i32; size];
    let mut values = vec![0u64; size];
    loop {
        if is_partition(forest, w, &f) {
            valid += 1;
            let mut compatible = Vec::new();
            for order in &orders {
                for (k, &v) in order.iter().enumerate() {
                    letters[k] = w.label(v);
                    values[k] = f[v];
                }
                if is_compatible(&letters, &values) {
                    compatible.push(order);
                }
            }
            let at = || json!({ "forest": forest.to_string(), "labels": w.labels(), "f": f });
            if compatible.len() != 1 {
                return (valid, Some((at(), json!(compatible.len()), json!(1))));
            }
            match decompose(forest, w, &f) {
                Ok(d) if d.vertices == *compatible[0] => {}
                Ok(d) => return (valid, Some((at(), json!(d.vertices), json!(compatible[0])))),
                Err(e) => return (valid, Some((at(), json!(format!("error: {e}")), Value::Null))),
            }
        }
        let mut k = 0;
        loop {
            if k == size {
                // sum identity at the largest bound
                let sum: BigUint = linear_extensions_labeled(forest, w)
                    .expect("complete labeling")
                    .map(|s| omega_sigma(&s, t_max).expect("distinct letters"))
                    .sum();
                let o = omega(forest, w, t_max);
                if sum != o {
                    let at = json!({ "forest": forest.to_string(), "labels": w.labels(), "t": t_max });
                    return (valid, Some((at, json!(sum.to_string()), json!(o.to_string()))));
                }
                return (valid, None);
            }
            if f[k] < t_max {
                f[k] += 1;
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}

/// Criterion 7.
pub fn decomposition(n_max: usize, seed: u64) -> Vec<VerificationReport> {
    const T_MAX: u64 = 4;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut check = Check::new("ppartition.decomposition.F_n").param("n", n).param("t_max", T_MAX);
        run_instances(&mut check, &pairs_instances(n), |f, w| decomposition_instance(f, w, T_MAX));
        out.push(check.finish());
    }
    let mut check = Check::new("ppartition.decomposition.random")
        .param("forests", 50)
        .param("max_vertices", 6)
        .param("seed", seed)
        .param("t_max", T_MAX);
    // a different stream from the series check
    run_instances(&mut check, &random_instances(seed ^ 0x7, 50, 6), |f, w| {
        decomposition_instance(f, w, T_MAX)
    });
    out.push(check.finish());
    out
}

/// Criterion 8: the two-vertex and singleton formulas for `t <= 10`, and the
/// dynamic program against brute force on a fixed corpus.
pub fn omega_formulas(seed: u64) -> Vec<VerificationReport> {
    let mut check = Check::new("ppartition.omega_formulas").param("t_max", 10);
    let tree = PlaneForest::two_vertex_trees(1).expect("n >= 1");
    let singleton = PlaneForest::two_vertex_trees_plus_singleton(1).expect("n >= 1");
    let neg = SignedLabeling::new(&singleton, vec![-1]).expect("valid");
    let pos = SignedLabeling::new(&singleton, vec![1]).expect("valid");
    for t in 0..=10u64 {
        let mut sum = BigUint::from(0u8);
        for ty in LabelingType::ALL {
            let w = SignedLabeling::from_types(&[ty], None);
            let o = omega(&tree, &w, t);
            check.count(1);
            let expected = if ty == LabelingType::Type4 { binomial(t + 2, 2) } else { binomial(t + 1, 2) };
            check.expect_eq(json!({ "type": format!("{ty:?}"), "t": t }), &o, &expected);
            sum += o;
        }
        let skn = BigUint::from((t + 1) * (2 * t + 1));
        check.expect_eq(json!({ "sum_over_types": true, "t": t }), &sum, &skn);
        check.expect_eq(json!({ "singleton": -1, "t": t }), &omega(&singleton, &neg, t), &BigUint::from(t + 1));
        check.expect_eq(json!({ "singleton": 1, "t": t }), &omega(&singleton, &pos, t), &BigUint::from(t));
        check.count(2);
    }
    let mut out = vec![check.finish()];

    let mut check = Check::new("ppartition.omega=bruteforce").param("t_max", 4).param("seed", seed);
    let corpus = oracle_corpus(seed);
    let results: Vec<_> = corpus
        .par_iter()
        .map(|(forest, w)| {
            (0..=4u64).find_map(|t| {
                let (dp, brute) = (omega(forest, w, t), omega_bruteforce(forest, w, t));
                (dp != brute).then(|| {
                    (
                        json!({ "forest": forest.to_string(), "labels": w.labels(), "t": t }),
                        dp.to_string(),
                        brute.to_string(),
                    )
                })
            })
        })
        .collect();
    for r in results {
        check.count(1);
        if let Some((at, lhs, rhs)) = r {
            check.fail(at, lhs, rhs);
        }
    }
    out.push(check.finish());
    out
}

/// Every labeling of `F_1..F_3`, `F'_2`, `F'_3` (both singleton signs), plus
/// 200 random forests on at most 6 vertices.
pub fn oracle_corpus(seed: u64) -> Vec<(PlaneForest, SignedLabeling)> {
    let mut corpus = Vec::new();
    for n in 1..=3 {
        corpus.extend(pairs_instances(n));
    }
    for n in 2..=3 {
        let forest = LabelingFamily::PairsSignedSingleton.forest(n).expect("n >= 1");
        corpus.extend(
            LabelingFamily::PairsSignedSingleton.labelings(n).expect("n >= 1").map(|w| (forest.clone(), w)),
        );
    }
    corpus.extend(random_instances(seed ^ 0x8, 200, 6));
    corpus
}

fn closed_form_value(form: &ClosedForm) -> String {
    format!("(t+1)^{} (2t+1)^{} ((t+2)/2)^{} at scale {}", form.a, form.b, form.c, form.scale)
}

/// `N(x) / (1 - x)^m` against a product closed form.
pub fn series_identity(
    name: &str,
    family: Family,
    n: usize,
    m: u32,
    form: ClosedForm,
    truncation: Option<u64>,
) -> VerificationReport {
    let mut check = Check::new(name)
        .param("n", n)
        .param("numerator", format!("{family}_{n}"))
        .param("m", m)
        .param("form", closed_form_value(&form));
    match par_family_polynomial(family, n) {
        Ok(p) => {
            check.count(total(&p));
            match verify_series_identity(&p, m, &form, truncation) {
                Ok(result) => {
                    check = check.param("T", result.truncation);
                    series_failure(&mut check, json!({ "n": n }), &result);
                }
                Err(e) => check.error(json!({ "n": n }), e),
            }
        }
        Err(e) => check.error(json!({ "n": n }), e),
    }
    check.finish()
}

/// `sum over w in the family of Ω_{F'_n}(w, t)` against a closed form, `t <= T`.
pub fn omega_sum_identity(
    name: &str,
    family: LabelingFamily,
    n: usize,
    form: ClosedForm,
    truncation: u64,
) -> VerificationReport {
    let mut check = Check::new(name).param("n", n).param("T", truncation).param("form", closed_form_value(&form));
    let forest = family.forest(n).expect("n >= 1");
    let labelings: Vec<_> = family.labelings(n).expect("n >= 1").collect();
    check.count(labelings.len() as u64);
    for t in 0..=truncation {
        let sum: BigUint = labelings.par_iter().map(|w| omega(&forest, w, t)).sum();
        let expected = form.eval_integer(t).expect("integral closed form");
        if BigInt::from(sum.clone()) != expected {
            check.fail(json!({ "n": n, "t": t }), sum.to_string(), expected.to_string());
            break;
        }
    }
    check.finish()
}

/// Criterion 9. Multiset-based families run up to `multiset_n_max`.
pub fn series_formulas(n_max: usize, multiset_n_max: usize, truncation: Option<u64>) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let m = n as u32 + 1;
        let k = n as u32;
        out.push(series_identity("series.I_n", Family::I, n, m, ClosedForm::paper_i(k), truncation));
        out.push(series_identity("series.Iprime_n", Family::Iprime, n, m, ClosedForm::paper_i_prime(k), truncation));
    }
    let omega_t = truncation.unwrap_or(12);
    for n in 1..=multiset_n_max {
        let k = n as u32;
        let both = ClosedForm::new(k, k, 0);
        out.push(series_identity("series.F_n", Family::F, n, 2 * k + 1, both, truncation));
        out.push(series_identity("series.I_2n", Family::I, 2 * n, 2 * k + 1, both, truncation));
        let v_form = ClosedForm::new(k, k - 1, 0);
        let u_form = ClosedForm::new(k - 1, k, 0);
        out.push(series_identity("series.V_n", Family::V, n, 2 * k, v_form, truncation));
        out.push(omega_sum_identity(
            "series.omega_sum.L(F'_n)",
            LabelingFamily::PairsNegativeSingleton,
            n,
            v_form,
            omega_t,
        ));
        out.push(series_identity("series.U_n", Family::U, n, 2 * k, u_form, truncation));
        out.push(omega_sum_identity(
            "series.omega_sum.Lbar(F'_n)",
            LabelingFamily::PairsSignedSingleton,
            n,
            u_form,
            omega_t,
        ));
    }
    out
}

/// Criterion 10.
pub fn lattice_counts(n_max: usize, t_max: u64, transform_truncation: u64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let mut check = Check::new("series.f_count.halved").param("n_max", n_max).param("t_max", t_max);
    'outer: for n in 0..=n_max {
        for t in 0..=t_max {
            let form = ClosedForm::halved_i_prime(n as u32);
            let (halved, expected) = match (f_count(&SRule::HalvedIPrime, n, t), form.eval_integer(t)) {
                (Ok(h), Ok(e)) => (h, e),
                (Err(e), _) | (_, Err(e)) => {
                    check.error(json!({ "n": n, "t": t }), e);
                    break 'outer;
                }
            };
            check.count(1);
            if BigInt::from(halved.clone()) != expected {
                check.fail(json!({ "n": n, "t": t }), halved.to_string(), expected.to_string());
                break 'outer;
            }
            let doubled = f_count(&SRule::HalvedIPrime, n, 2 * t).expect("valid rule");
            let prime = f_count(&SRule::PaperIPrime, n, t).expect("valid rule");
            if prime != doubled {
                check.fail(json!({ "n": n, "t": t, "identity": "f_s(t) = f_s'(2t)" }), prime.to_string(), doubled.to_string());
                break 'outer;
            }
        }
    }
    out.push(check.finish());
    for rule in [SRule::Natural, SRule::PaperI, SRule::PaperIPrime] {
        for n in 1..=n_max {
            let mut check = Check::new("series.f_count.transform")
                .param("rule", rule.to_string())
                .param("n", n)
                .param("T", transform_truncation);
            match verify_fcount_transform(&rule, n, transform_truncation) {
                Ok(result) => series_failure(&mut check, json!({ "n": n }), &result),
                Err(e) => check.error(json!({ "n": n }), e),
            }
            check.count(transform_truncation + 1);
            out.push(check.finish());
        }
    }
    out
}

/// Criterion 11 for one family and size.
pub fn real_rooted(family: Family, n: usize) -> VerificationReport {
    let mut check = Check::new("realroots").param("family", family.name()).param("n", n);
    match par_family_polynomial(family, n) {
        Ok(p) => {
            check.count(total(&p));
            match is_real_rooted(&p) {
                Ok(true) => {}
                Ok(false) => check.fail(
                    json!({ "family": family.name(), "n": n, "poly": crate::report::coeff_strings(&p) }),
                    "not real-rooted",
                    "real-rooted",
                ),
                Err(e) => check.error(json!({ "n": n }), e),
            }
        }
        Err(e) => check.error(json!({ "n": n }), e),
    }
    check.finish()
}
