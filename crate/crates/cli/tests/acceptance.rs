//! Acceptance suite: every release gate in one place, one pass/fail line per
//! criterion (visible with `--nocapture`). Tolerances are pinned here, not
//! configurable.

use std::time::Instant;

use hyperbounds::bounds::{self, BoundKind, CorollaryMode};
use hyperbounds::exact;
use hyperbounds::spectral::{self, Operator, SpectralConfig};
use hyperbounds::Hypergraph;
use hyperbounds_cli::campaign::{self, CampaignConfig, InstanceSource};
use hyperbounds_cli::identities;
use hyperbounds_cli::output;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(id: &str, ok: bool, detail: &str) {
    println!("acceptance {id}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance {id} failed: {detail}");
}

fn p3() -> Hypergraph {
    Hypergraph::parse("3 2 2\n1 2\n2 3").unwrap()
}

fn star4() -> Hypergraph {
    Hypergraph::parse("4 2 3\n1 2\n1 3\n1 4").unwrap()
}

fn random_degree_sequence(rng: &mut ChaCha8Rng) -> (Vec<u64>, usize) {
    let n = rng.gen_range(2..=50usize);
    let k = rng.gen_range(2..=n.min(8));
    let mut degrees: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=40)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    (degrees, k)
}

fn random_connected(rng: &mut ChaCha8Rng, ks: &[usize], max_n: usize) -> Hypergraph {
    loop {
        let k = ks[rng.gen_range(0..ks.len())];
        let n = rng.gen_range(k..=max_n);
        let total = usize::try_from(&exact::binom(n as i64, k as i64)).unwrap();
        let lo = (n - 1).div_ceil(k - 1);
        let hi = (total / 2).clamp(lo, total);
        let m = rng.gen_range(lo..=hi);
        if let Ok(h) = Hypergraph::random_connected(n, k, m, rng.gen()) {
            return h;
        }
    }
}

/// Criterion 1: exact identity sweep over 3 <= s < n <= 25, 2 <= k <= 8,
/// zero tolerance, with the documented middle-expression mismatch at
/// (5, 3, 3), in under 10 seconds.
#[test]
fn acceptance_01_identity_sweep() {
    let start = Instant::now();
    let rows = identities::sweep(25, 8);
    let outer_ok = rows.iter().all(|r| r.first_eq_third && r.eq3_holds);
    let witness = rows
        .iter()
        .find(|r| (r.n, r.s, r.k) == (5, 3, 3))
        .expect("sweep covers (5,3,3)");
    let witness_ok = witness.middle == 5.into()
        && witness.third == 3.into()
        && !witness.middle_eq_third;
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "01 identity sweep",
        outer_ok && witness_ok && elapsed < 10.0,
        &format!(
            "{} rows, outer+eq3 exact: {outer_ok}, (5,3,3) middle=5 vs 3: {witness_ok}, {elapsed:.2}s",
            rows.len()
        ),
    );
}

/// Criterion 2: phi_1 = d_1 and psi_1 = 2 d_1 exactly on 200 random degree
/// sequences with n <= 50.
#[test]
fn acceptance_02_closed_form_collapse() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc_0002);
    let mut exact_hits = 0;
    for _ in 0..200 {
        let (degrees, k) = random_degree_sequence(&mut rng);
        let d1 = degrees[0] as f64;
        if bounds::phi(&degrees, k, 1).unwrap() == d1
            && bounds::psi(&degrees, k, 1).unwrap() == 2.0 * d1
        {
            exact_hits += 1;
        }
    }
    report(
        "02 closed-form collapse",
        exact_hits == 200,
        &format!("{exact_hits}/200 sequences collapse exactly"),
    );
}

/// Criterion 3: quadratic residual below 1e-9 relative for every s on 200
/// random degree sequences, both bound families.
#[test]
fn acceptance_03_quadratic_residual() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc_0003);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (degrees, k) = random_degree_sequence(&mut rng);
        let adjacency = bounds::adjacency_bound(&degrees, k).unwrap();
        let signless = bounds::signless_bound(&degrees, k).unwrap();
        worst = worst
            .max(adjacency.exact_quadratic_residual)
            .max(signless.exact_quadratic_residual);
    }
    report(
        "03 quadratic residual",
        worst < 1e-9,
        &format!("max relative residual {worst:.3e}"),
    );
}

/// Criterion 4: analytic spectra, 1e-6 except where noted, within 5 seconds.
#[test]
fn acceptance_04_analytic_spectra() {
    let start = Instant::now();
    let config = SpectralConfig::default();
    let rho = |h: &Hypergraph| spectral::spectral_radius(h, Operator::Adjacency, &config)
        .unwrap()
        .value;
    let q = |h: &Hypergraph| spectral::spectral_radius(h, Operator::Signless, &config)
        .unwrap()
        .value;

    let mut checks: Vec<(String, f64, f64, f64)> = Vec::new();
    for k in [2usize, 3, 4] {
        let edge = Hypergraph::single_edge(k, k).unwrap();
        checks.push((format!("single {k}-edge rho"), rho(&edge), 1.0, 1e-8));
        checks.push((format!("single {k}-edge q"), q(&edge), 2.0, 1e-6));
    }
    checks.push(("P3 rho".into(), rho(&p3()), 2.0f64.sqrt(), 1e-6));
    checks.push(("P3 q".into(), q(&p3()), 3.0, 1e-6));
    checks.push(("K13 rho".into(), rho(&star4()), 3.0f64.sqrt(), 1e-6));
    let complete34 = Hypergraph::complete(4, 3).unwrap();
    checks.push(("complete 3-uniform rho".into(), rho(&complete34), 3.0, 1e-6));
    checks.push(("complete 3-uniform q".into(), q(&complete34), 6.0, 1e-6));
    let k4 = Hypergraph::complete(4, 2).unwrap();
    checks.push(("K4 rho".into(), rho(&k4), 3.0, 1e-6));
    checks.push(("K4 q".into(), q(&k4), 6.0, 1e-6));

    let failures: Vec<String> = checks
        .iter()
        .filter(|(_, got, want, tol)| (got - want).abs() > *tol)
        .map(|(name, got, want, _)| format!("{name}: {got} vs {want}"))
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "04 analytic spectra",
        failures.is_empty() && elapsed < 5.0,
        &format!("{} checks, failures: {failures:?}, {elapsed:.2}s", checks.len()),
    );
}

/// Criterion 5: the minimum adjacency bound reproduces the exact spectral
/// radius of P3 and K_{1,3} within 1e-9.
#[test]
fn acceptance_05_tight_bound_reproduction() {
    let config = SpectralConfig::default();
    let mut ok = true;
    let mut details = Vec::new();
    for (h, closed_form, name) in [
        (p3(), 2.0f64.sqrt(), "P3"),
        (star4(), 3.0f64.sqrt(), "K13"),
    ] {
        let bound = bounds::adjacency_bound(h.degree_sequence().degrees(), 2)
            .unwrap()
            .min_value;
        let radius = spectral::spectral_radius(&h, Operator::Adjacency, &config)
            .unwrap()
            .value;
        ok &= (bound - closed_form).abs() < 1e-9 && (radius - closed_form).abs() < 1e-9;
        details.push(format!("{name}: bound {bound:.12}, rho {radius:.12}"));
    }
    report("05 tight bounds", ok, &details.join("; "));
}

/// Criterion 6: adjacency campaign over 1000 random connected hypergraphs
/// (n <= 12, k in {2,3,4}, m from the connectivity threshold to half
/// density), spectral tolerance 1e-10, violation threshold 1e-6: zero
/// violations and the all-ones degree bracket holds on every trial, in
/// under 3 minutes.
#[test]
fn acceptance_06_adjacency_campaign() {
    let start = Instant::now();
    let mut configs = Vec::new();
    for k in [2usize, 3, 4] {
        for n in k.max(4)..=12 {
            configs.push((n, k));
        }
    }
    let per_config = 1000 / configs.len();
    let mut leftover = 1000 % configs.len();

    let mut trials = 0;
    let mut violations = 0;
    let mut bracket_failures = 0;
    let mut generation_failures = 0;
    let mut non_converged = 0;
    let mut min_margin = f64::INFINITY;
    for (index, &(n, k)) in configs.iter().enumerate() {
        let extra = if leftover > 0 { 1 } else { 0 };
        leftover = leftover.saturating_sub(1);
        let total = usize::try_from(&exact::binom(n as i64, k as i64)).unwrap();
        let lo = (n - 1).div_ceil(k - 1);
        let hi = (total / 2).clamp(lo, total);
        let config = CampaignConfig {
            kind: BoundKind::Adjacency,
            trials: per_config + extra,
            seed: 0x600d_0000 + index as u64 * 10_000,
            spectral: SpectralConfig::default(),
            source: InstanceSource::Random {
                n,
                k,
                m_range: (lo, hi),
            },
        };
        let result = campaign::run_campaign(&config).unwrap();
        trials += result.trials;
        violations += result.violations.len();
        bracket_failures += result.degree_bracket_failures;
        generation_failures += result.generation_failures;
        non_converged += result.non_converged;
        if let Some(stats) = result.margin_stats {
            min_margin = min_margin.min(stats.min);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let ok = trials == 1000
        && violations == 0
        && bracket_failures == 0
        && generation_failures == 0
        && min_margin >= -1e-6
        && elapsed < 180.0;
    report(
        "06 adjacency campaign",
        ok,
        &format!(
            "{trials} trials, {violations} violations, {bracket_failures} bracket failures, \
             {generation_failures} generation failures, {non_converged} non-converged, \
             min margin {min_margin:.3e}, {elapsed:.1}s"
        ),
    );
}

/// Criterion 7: the signless validator on P3 reports exactly one violation
/// with bound (1+sqrt(17))/2 and computed q = 3, and the rendered campaign
/// output carries the row.
#[test]
fn acceptance_07_signless_discrepancy() {
    let config = CampaignConfig {
        kind: BoundKind::Signless,
        trials: 1,
        seed: 0,
        spectral: SpectralConfig::default(),
        source: InstanceSource::Fixed(p3()),
    };
    let result = campaign::run_campaign(&config).unwrap();
    let expected_bound = (1.0 + 17.0f64.sqrt()) / 2.0;
    let structural = result.violations.len() == 1
        && (result.violations[0].bound - expected_bound).abs() < 1e-9
        && (result.violations[0].computed - 3.0).abs() < 1e-6;

    let rendered = output::campaign_json(&result);
    let json: serde_json::Value = serde_json::from_str(&rendered).unwrap();
    let rows = json["violations"].as_array().unwrap();
    let surfaced = rows.len() == 1
        && (rows[0]["bound"].as_f64().unwrap() - expected_bound).abs() < 1e-6;
    report(
        "07 signless discrepancy",
        structural && surfaced,
        &format!(
            "violations: {}, bound {:.6}, computed {:.6}, surfaced in JSON: {surfaced}",
            result.violations.len(),
            result.violations[0].bound,
            result.violations[0].computed
        ),
    );
}

/// Criterion 8: the minimum-degree corollary in theorem-consistent mode
/// matches phi_n on P3 inputs; the as-printed mode yields (1+sqrt(13))/2.
#[test]
fn acceptance_08_corollary_consistency() {
    let consistent = bounds::corollary_rho(3, 2, 1, 2, CorollaryMode::TheoremConsistent).unwrap();
    let phi3 = bounds::phi(&[2, 1, 1], 2, 3).unwrap();
    let printed = bounds::corollary_rho(3, 2, 1, 2, CorollaryMode::AsPrinted).unwrap();
    let ok = (consistent - 2.0f64.sqrt()).abs() < 1e-9
        && (consistent - phi3).abs() < 1e-9
        && (printed - (1.0 + 13.0f64.sqrt()) / 2.0).abs() < 1e-9;
    report(
        "08 corollary consistency",
        ok,
        &format!("theorem-consistent {consistent:.12}, phi_3 {phi3:.12}, as-printed {printed:.12}"),
    );
}

/// Criterion 9: conjugating by random positive diagonals with entries in
/// [1/4, 4] moves the computed radius by less than 2e-6, 100 instances.
#[test]
fn acceptance_09_similarity_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc_0009);
    let config = SpectralConfig::default();
    let mut worst = 0.0f64;
    for trial in 0..100 {
        let h = random_connected(&mut rng, &[2, 3, 4], 10);
        let z: Vec<f64> = (0..h.vertex_count())
            .map(|_| rng.gen_range(0.25..=4.0))
            .collect();
        let operator = if trial % 2 == 0 {
            Operator::Adjacency
        } else {
            Operator::Signless
        };
        let plain = spectral::power_iteration(&h, operator, &config).unwrap();
        let scaled = spectral::power_iteration_scaled(&h, operator, &z, &config).unwrap();
        worst = worst.max((plain.value - scaled.value).abs());
    }
    report(
        "09 similarity invariance",
        worst < 2e-6,
        &format!("max |scaled - unscaled| = {worst:.3e} over 100 instances"),
    );
}

/// Criterion 10: on 200 random connected graphs (k = 2, n <= 12) the power
/// iteration agrees with the repeated-squaring matrix oracle within 1e-6 for
/// both operators.
#[test]
fn acceptance_10_matrix_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc_0010);
    let config = SpectralConfig::default();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let h = random_connected(&mut rng, &[2], 12);
        for operator in [Operator::Adjacency, Operator::Signless] {
            let iterated = spectral::spectral_radius(&h, operator, &config).unwrap();
            let oracle = spectral::matrix_oracle(&h, operator).unwrap();
            worst = worst.max((iterated.value - oracle).abs());
        }
    }
    report(
        "10 matrix oracle equivalence",
        worst < 1e-6,
        &format!("max |power iteration - oracle| = {worst:.3e} over 200 graphs"),
    );
}
