//! Integration coverage for the verification registry: every check runs,
//! theorem-backed claims pass on their default grids, and the report
//! invariants hold.

use hyperlog::verify::{check_ids, run_check, CheckConfig, Status};

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn assert_report_invariants(rep: &hyperlog::verify::VerificationReport) {
    match rep.status {
        Status::Fail => assert!(
            !rep.violations.is_empty(),
            "{}: Fail must carry violations",
            rep.theorem_id
        ),
        Status::Pass => assert!(
            rep.worst_margin >= -rep.tolerance,
            "{}: Pass needs worst_margin {} >= -{}",
            rep.theorem_id,
            rep.worst_margin,
            rep.tolerance
        ),
        Status::Exploratory => {}
    }
}

#[test]
fn unknown_id_is_an_error() {
    assert!(run_check("bogus", &cfg()).is_err());
}

#[test]
fn bern_passes() {
    let rep = run_check("bern", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
    assert_report_invariants(&rep);
}

#[test]
fn kmvthm_passes() {
    let rep = run_check("kmvthm", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn ssthm2_passes() {
    let rep = run_check("ssthm2", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn ssthm_classifier_matches_numerics() {
    let rep = run_check("ssthm", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn secondmain_passes_and_alias_works() {
    let rep = run_check("2ndmain", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
    let alias = run_check("ssthm4", &cfg()).unwrap();
    assert_eq!(alias.status, Status::Pass);
}

#[test]
fn secondmain_single_pair_example() {
    let mut c = cfg();
    c.c = Some(0.7);
    c.d = Some(0.9);
    let rep = run_check("2ndmain", &c).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn ratio_suite_passes() {
    for part in 1..=7 {
        let id = format!("1.57-{part}");
        let rep = run_check(&id, &cfg()).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{id}: {:?}",
            rep.violations.first()
        );
        assert_report_invariants(&rep);
    }
}

#[test]
fn pvlem_passes() {
    let rep = run_check("pvlem", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
}

#[test]
fn kulemma_passes() {
    let rep = run_check("kuLemma", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
    assert_eq!(rep.tolerance, 1e-12);
}

#[test]
fn mylemma1_passes() {
    let rep = run_check("mylemma1", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn mylemma2_passes() {
    let rep = run_check("mylemma2", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
}

#[test]
fn ssthm5_passes_both_sides() {
    let rep = run_check("ssthm5", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());

    // Negative claim: (3,3) is expected non-concave and must still Pass.
    let mut c = cfg();
    c.c = Some(3.0);
    c.d = Some(3.0);
    let rep = run_check("ssthm5", &c).unwrap();
    assert_eq!(rep.status, Status::Pass);
    let verdicts = rep.params["verdicts"].as_array().unwrap();
    assert_eq!(verdicts[0]["verdict"], "Neither");
    assert!(verdicts[0]["inflection_witness"].is_number());
}

#[test]
fn myrmk43_finds_inflections() {
    let rep = run_check("myrmk43", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
}

#[test]
fn ssthm55_threshold_agrees_with_beta() {
    let rep = run_check("ssthm55", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.violations.first());
    assert!(rep.params["n_inconclusive"].as_u64().unwrap() > 0);
}

#[test]
fn my49_passes() {
    let rep = run_check("my49", &cfg()).unwrap();
    assert_eq!(rep.status, Status::Pass);
}

#[test]
fn log_lemma_and_corollaries_pass() {
    for id in ["logconlemma", "logcor", "logcor1"] {
        let rep = run_check(id, &cfg()).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{id}: {:?}",
            rep.violations.first()
        );
    }
}

#[test]
fn final_bounds_pass() {
    for id in ["T-bound", "ssthm7"] {
        let rep = run_check(id, &cfg()).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{id}: {:?}",
            rep.violations.first()
        );
    }
}

#[test]
fn exploratory_checks_never_gate() {
    for id in ["myq3", "my44", "my46"] {
        let rep = run_check(id, &cfg()).unwrap();
        assert_eq!(rep.status, Status::Exploratory, "{id}");
    }
}

#[test]
fn full_registry_runs() {
    let mut small = cfg();
    small.grid_n = Some(32);
    for id in check_ids() {
        let rep = run_check(id, &small).unwrap();
        assert_report_invariants(&rep);
        assert_ne!(
            rep.status,
            Status::Fail,
            "{id} failed at reduced resolution: {:?}",
            rep.violations.first()
        );
    }
}
