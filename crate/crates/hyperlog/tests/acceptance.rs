//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its assertions hold (run with `--nocapture` to see them). Tolerances are
//! pinned here, not configurable.

use std::time::Instant;

use hyperlog::analysis::{beta_root, gamma_root, x0_root};
use hyperlog::hyp2f1::{f21, HypParams};
use hyperlog::logtype::{omega, PhiExponents, ZeroBalancedPair};
use hyperlog::special_fn::{beta, r_constant, EULER_GAMMA};
use hyperlog::verify::{run_check, CheckConfig, Status};

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn passed(n: u32, what: &str) {
    println!("ACCEPTANCE {n}: PASS — {what}");
}

fn assert_check_passes(id: &str) {
    let rep = run_check(id, &cfg()).unwrap();
    assert_eq!(
        rep.status,
        Status::Pass,
        "{id}: worst_margin {}, first violation {:?}",
        rep.worst_margin,
        rep.violations.first()
    );
}

#[test]
fn criterion_01_golden_constants() {
    let r_half = r_constant(0.5, 0.5).unwrap();
    assert!(
        (r_half - 16.0f64.ln()).abs() <= 1e-12,
        "R(1/2,1/2) = {r_half}"
    );
    let b_half = beta(0.5, 0.5).unwrap();
    assert!(
        (b_half - std::f64::consts::PI).abs() <= 1e-12,
        "B(1/2,1/2) = {b_half}"
    );
    assert!((EULER_GAMMA - 0.577215).abs() < 1e-6);
    passed(
        1,
        "golden constants R(1/2,1/2) = log 16, B(1/2,1/2) = π, γ to 6 digits",
    );
}

#[test]
fn criterion_02_closed_form_cross_check() {
    let start = Instant::now();
    let p = HypParams::new(1.0, 1.0, 2.0).unwrap();
    let n = 1000;
    let lo = 1e-6;
    let hi = 1.0 - 1e-4;
    for i in 0..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let got = x * f21(&p, x).unwrap().value;
        let want = -(-x).ln_1p();
        assert!(
            (got - want).abs() <= 1e-10 * want.abs(),
            "x = {x}: {got} vs {want}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    passed(
        2,
        "x·F(1,1;2;x) matches log(1/(1−x)) at 1e-10 relative over 1000 points",
    );
}

#[test]
fn criterion_03_omega_remark_values() {
    let unit = ZeroBalancedPair::new(1.0, 1.0).unwrap();
    let w1 = omega(&unit, 1.0, 4.0).unwrap();
    let w2 = omega(&unit, 2.0, 4.0).unwrap();
    let w4 = omega(&unit, 4.0, 4.0).unwrap();
    assert!((w1 - 1.61).abs() <= 5e-3, "omega(1) = {w1}");
    assert!((w2 - 1.68).abs() <= 5e-3, "omega(2) = {w2}");
    assert!((w4 - 1.53).abs() <= 5e-3, "omega(4) = {w4}");
    // Non-monotone in p outside the unit interval: up then down.
    assert!(w2 > w1 && w4 < w2);
    passed(
        3,
        "ω(1,1;p;4) hits log 5, √(log 17), (log 257)^¼ and is non-monotone in p",
    );
}

#[test]
fn criterion_04_named_roots() {
    let x0 = x0_root().unwrap();
    assert!((x0 - 2.4555).abs() <= 5e-4, "x0 = {x0}");

    let unit = ZeroBalancedPair::new(1.0, 1.0).unwrap();
    let g = gamma_root(&unit).unwrap();
    assert!(
        (g - (std::f64::consts::E - 1.0)).abs() <= 1e-9,
        "gamma = {g}"
    );

    let e = PhiExponents::new(1.0, 1.0).unwrap();
    let b = beta_root(&unit, &e).unwrap();
    assert!((b - (1.0 - (-1.0f64).exp())).abs() <= 1e-9, "beta = {b}");
    passed(
        4,
        "roots: x₀ ≈ 2.4555 ± 5e-4, γ(1,1) = e−1, β(1,1,1,1) = 1−1/e to 1e-9",
    );
}

#[test]
fn criterion_05_omega_monotone_suite() {
    let start = Instant::now();
    let rep = run_check("2ndmain", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
    assert_eq!(rep.params["n_pairs"], 50);
    assert_eq!(rep.grids["r"].n_points, 20);
    assert_eq!(rep.grids["p"].n_points, 64);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    passed(
        5,
        "ω nondecreasing in p over 50 admissible pairs × 20 r × 64 p (under 60 s)",
    );
}

#[test]
fn criterion_06_concavity_iff() {
    let rep = run_check("ssthm5", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
    assert_eq!(rep.params["n_pairs"], 25);

    let rep = run_check("myrmk43", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
    assert_eq!(rep.params["n_pairs"], 10);
    // Every a₀ > 1 pair carries a located positive second difference.
    for w in rep.params["witnesses"].as_array().unwrap() {
        assert!(w["positive_second_difference_at"].is_number(), "{w}");
        assert!(w["negative_second_difference_at"].is_number(), "{w}");
    }
    passed(
        6,
        "G concave for 25 admissible pairs; inflection located for 10 pairs with a₀ > 1",
    );
}

#[test]
fn criterion_07_ratio_coefficients() {
    let rep = run_check("kuLemma", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
    assert_eq!(rep.params["n_triples"], 20);
    assert_eq!(rep.params["n_coeffs"], 50);
    assert_eq!(rep.tolerance, 1e-12);
    passed(
        7,
        "F′/F coefficients nonincreasing and convex (N = 50, slack 1e-12) with reconstruction",
    );
}

#[test]
fn criterion_08_monotone_ratio_suite() {
    for part in 1..=7 {
        assert_check_passes(&format!("1.57-{part}"));
    }
    passed(8, "f₁ increasing, f₂ decreasing onto (R, B) within 1e-3, f₄ monotone by regime, f₄ ≡ 1 at (1,1)");
}

#[test]
fn criterion_09_piecewise_ratio_bounds() {
    assert_check_passes("ssthm2");
    passed(9, "piecewise ratios within [(log 2)^{p(1−a)}, 1] and [(log 2·log(1+log 2))^{1−a}, 1], minima at x = 1");
}

#[test]
fn criterion_10_final_bound_theorems() {
    for id in ["T-bound", "ssthm7"] {
        let rep = run_check(id, &cfg()).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{id}: {:?}",
            rep.violations.first()
        );
        assert_eq!(rep.params["n_combos"], 20, "{id}");
        let s = &rep.grids["s"];
        assert_eq!((s.lo, s.hi), (1e-4, 1e4), "{id}");
        assert!(s.n_points >= 512, "{id}");
    }
    passed(
        10,
        "T(s) ≤ b/a and t(s) ≤ b over 20 admissible (c,d,a,b) combinations",
    );
}

#[test]
fn criterion_11_log_lemma_suite() {
    for id in ["logcor", "logcor1", "logconlemma", "mylemma1", "mylemma2"] {
        assert_check_passes(id);
    }
    passed(11, "superadditivity/ratio corollaries, witness positivity, and substitution chain hold at 1e-9");
}

#[test]
fn criterion_12_addition_ratio_recorded() {
    let rep = run_check("myq3", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Exploratory);
    // Recorded, not asserted: print the empirical extrema per pair.
    for entry in rep.params["per_pair"].as_array().unwrap() {
        let c = entry["c"].as_f64().unwrap();
        let d = entry["d"].as_f64().unwrap();
        let min_h = entry["min_h"].as_f64().unwrap();
        let max_h = entry["max_h"].as_f64().unwrap();
        println!("  myq3 record: (c,d)=({c},{d}) min h = {min_h:.9}, max h = {max_h:.9}");
    }
    passed(
        12,
        "addition-ratio sweeps recorded (exploratory, non-gating)",
    );
}
