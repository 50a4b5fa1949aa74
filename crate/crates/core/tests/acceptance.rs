//! Acceptance suite: one pass/fail line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use qec_efficiency::analysis::{
    self, envelope, envelope_crossover, existing_codes, hypothetical_codes,
};
use qec_efficiency::bounds::{
    extrapolate_k, hamming_is_perfect, hamming_satisfied, max_k_hamming, pure_bound_satisfied,
    singleton_satisfied,
};
use qec_efficiency::code_model::builtin_registry;
use qec_efficiency::combinatorics::{pow2, syndromes_needed};
use qec_efficiency::efficiency::{
    boosted_efficiency, efficiency, failure_probability, success_probability, syndrome_budget,
};
use qec_efficiency::verification::{brute_force_success, mc_success};
use qec_efficiency::{CodeParams, CodeStatus, ErrorProbability, Grid, RegistryQuery};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn prob(p: f64) -> ErrorProbability {
    ErrorProbability::new(p).expect("probability in range")
}

fn code(n: usize, k: usize, d: usize) -> CodeParams {
    CodeParams::new(n, k, d).expect("valid triple")
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn perfect_codes() -> Outcome {
    let registry = builtin_registry();
    let perfect: Vec<CodeParams> = registry
        .records()
        .iter()
        .map(|r| r.params)
        .filter(|p| hamming_is_perfect(p.n(), p.k(), p.t()).unwrap())
        .collect();
    let expected = vec![code(5, 1, 3), code(21, 15, 3), code(85, 77, 3)];
    let identities = [(5usize, 1usize, 16u32), (21, 15, 64), (85, 77, 256)]
        .iter()
        .all(|&(n, k, value)| {
            let v = BigUint::from(value);
            pow2(n - k) == v && syndromes_needed(n, 1) == v
        });
    check(
        perfect == expected && identities,
        format!("perfect = {perfect:?}, identities 16/64/256 hold = {identities}"),
    )
}

fn max_k_matches() -> Outcome {
    let cases = [
        (64, 2, 49),
        (256, 2, 237),
        (170, 2, 153),
        (256, 3, 229),
        (170, 1, 161),
    ];
    let got: Vec<_> = cases
        .iter()
        .map(|&(n, t, _)| max_k_hamming(n, t).unwrap())
        .collect();
    let ok = cases.iter().zip(&got).all(|(c, g)| *g == Some(c.2));
    check(ok, format!("got {got:?}"))
}

fn syndrome_budget_128() -> Outcome {
    let b = syndrome_budget(&code(128, 110, 5)).map_err(|e| e.to_string())?;
    let coefficient = b.efficiency_boost_coefficient();
    let ok = b.total == BigUint::from(262_144u32)
        && b.used == BigUint::from(73_537u32)
        && b.leftover_r == BigUint::from(188_607u32)
        && b.next_order_q == BigUint::from(9_217_152u32)
        && (coefficient.round() - 6003.0).abs() <= 1.0;
    check(
        ok,
        format!(
            "total {} used {} leftover {} q {} coefficient {coefficient:.4}",
            b.total, b.used, b.leftover_r, b.next_order_q
        ),
    )
}

fn crossover_approximations() -> Outcome {
    let a = analysis::approx_crossover(256, 246, 233).unwrap().p_c;
    let b = analysis::approx_crossover(256, 246, 237).unwrap().p_c;
    check(
        (a - 0.0013).abs() <= 5e-5 && (b - 0.0011).abs() <= 5e-5,
        format!("p_c(246,233) = {a:.6}, p_c(246,237) = {b:.6}"),
    )
}

fn success_probability_128() -> Outcome {
    let value = success_probability(128, 1, prob(0.0035)).unwrap();
    check((value - 0.93).abs() <= 0.01, format!("P = {value:.6}"))
}

fn envelope_dominance() -> Outcome {
    let start = Instant::now();
    let registry = builtin_registry();
    let grid = Grid::log(1e-5, 0.3, 500).unwrap();
    let t1 = envelope(&existing_codes(&registry, 1), &grid).unwrap();
    let t2 = envelope(&existing_codes(&registry, 2), &grid).unwrap();
    let t3 = envelope(&existing_codes(&registry, 3), &grid).unwrap();
    let mut violations = 0;
    let mut margin = f64::INFINITY;
    for ((a, b), c) in t1.iter().zip(&t2).zip(&t3) {
        let gap = a.efficiency - b.efficiency.max(c.efficiency);
        margin = margin.min(gap);
        if gap < 0.0 {
            violations += 1;
        }
    }
    let elapsed = start.elapsed();
    check(
        violations == 0 && elapsed < Duration::from_secs(1),
        format!("{violations} violations, min margin {margin:.3e}, {elapsed:.2?}"),
    )
}

fn envelope_crossover_t1_t2() -> Outcome {
    let registry = builtin_registry();
    let t1 = existing_codes(&registry, 1);
    let t2 = hypothetical_codes(&registry, 2);
    match envelope_crossover(&t1, &t2, 1e-4, 0.01, analysis::DEFAULT_TOLERANCE) {
        Ok(result) => check(
            (result.p_c - 0.0025).abs() <= 0.0005,
            format!("p_c = {:.6} (target 0.0025 +/- 0.0005)", result.p_c),
        ),
        Err(e) => Err(e.to_string()),
    }
}

fn extrapolation() -> Outcome {
    let registry = builtin_registry();
    let points = |t: usize| -> Vec<(usize, usize)> {
        registry
            .query(&RegistryQuery::depth(t).with_status(CodeStatus::Hypothetical))
            .iter()
            .filter(|r| r.params.n() <= 128)
            .map(|r| (r.params.n(), r.params.k()))
            .collect()
    };
    let (t2, t3) = (points(2), points(3));
    let a = extrapolate_k(&t2, 170).unwrap();
    let b = extrapolate_k(&t2, 256).unwrap();
    let c = extrapolate_k(&t3, 256).unwrap();
    check(
        (a - 151).abs() <= 1 && (b - 233).abs() <= 1 && (c - 223).abs() <= 1,
        format!("t=2: n=170 -> {a}, n=256 -> {b}; t=3: n=256 -> {c}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=8usize {
        for t in 0..=n {
            for p in [0.01, 0.1, 0.3, 0.9] {
                let brute = brute_force_success(n, t, prob(p)).unwrap();
                let closed = success_probability(n, t, prob(p)).unwrap();
                worst = worst.max((brute - closed).abs());
            }
        }
    }
    check(worst <= 1e-12, format!("max |difference| = {worst:.3e}"))
}

fn monte_carlo_consistency() -> Outcome {
    let exact = success_probability(128, 1, prob(0.0035)).unwrap();
    let within = (0..20u64)
        .filter(|&seed| {
            let r = mc_success(128, 1, prob(0.0035), 1_000_000, 1000 + seed).unwrap();
            (r.estimate - exact).abs() <= 4.0 * r.std_error
        })
        .count();
    check(
        within >= 19,
        format!("{within} of 20 runs within 4 standard errors"),
    )
}

fn bound_implications() -> Outcome {
    let mut implication_failures = 0;
    let mut coincidence_failures = 0;
    for n in 1..=256usize {
        for t in 0..=5usize.min(n) {
            for k in 0..=n {
                let singleton = singleton_satisfied(n, k, t).unwrap();
                if hamming_satisfied(n, k, t).unwrap() && !singleton {
                    implication_failures += 1;
                }
                if singleton != pure_bound_satisfied(n, k, 2 * t + 1).unwrap() {
                    coincidence_failures += 1;
                }
            }
        }
    }
    check(
        implication_failures == 0 && coincidence_failures == 0,
        format!(
            "{implication_failures} implication and {coincidence_failures} coincidence failures"
        ),
    )
}

fn small_p_scaling() -> Outcome {
    let grid = Grid::log(1e-6, 1e-4, 21).unwrap();
    let mut slopes = Vec::new();
    for t in 1..=3usize {
        let xs: Vec<f64> = grid.points().iter().map(|p| p.ln()).collect();
        let ys: Vec<f64> = grid
            .points()
            .iter()
            .map(|&p| failure_probability(64, t, prob(p)).unwrap().ln())
            .collect();
        let m = xs.len() as f64;
        let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        slopes.push(sxy / sxx);
    }
    let ok = slopes
        .iter()
        .enumerate()
        .all(|(i, s)| (s - (i + 2) as f64).abs() <= 0.05);
    check(ok, format!("slopes for t = 1, 2, 3: {slopes:.4?}"))
}

fn boost_indistinguishable() -> Outcome {
    let c = code(128, 110, 5);
    let grid = Grid::figure_default();
    let mut worst: f64 = 0.0;
    for &p in grid.points().iter().filter(|&&p| p <= 0.01) {
        let gap = boosted_efficiency(&c, prob(p)).unwrap() - efficiency(&c, prob(p));
        worst = worst.max(gap);
    }
    let at_001 = boosted_efficiency(&c, prob(0.001)).unwrap() - efficiency(&c, prob(0.001));
    check(
        worst <= 6e-3 && at_001 <= 1e-5,
        format!("max gap for p <= 0.01: {worst:.3e}; gap at p = 0.001: {at_001:.3e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("perfect-code equality", perfect_codes),
        ("max_k_hamming exact matches", max_k_matches),
        ("syndrome budget of [[128,110,5]]", syndrome_budget_128),
        ("crossover approximations", crossover_approximations),
        (
            "success probability of [[128,119,3]]",
            success_probability_128,
        ),
        ("existing t=1 envelope dominance", envelope_dominance),
        (
            "existing t=1 vs hypothetical t=2 envelope crossover",
            envelope_crossover_t1_t2,
        ),
        ("linear extrapolation", extrapolation),
        ("brute-force oracle equivalence", oracle_equivalence),
        ("Monte Carlo consistency", monte_carlo_consistency),
        (
            "Hamming implies Singleton; Singleton equals pure bound",
            bound_implications,
        ),
        ("small-p scaling", small_p_scaling),
        (
            "boosted [[128,110,5]] indistinguishable",
            boost_indistinguishable,
        ),
    ];
    let mut failed = 0;
    for (index, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let elapsed = start.elapsed();
        let (tag, detail) = match &outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => {
                failed += 1;
                ("FAIL", detail)
            }
        };
        println!("[{tag}] {:>2}. {name}: {detail} ({elapsed:.2?})", index + 1);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
