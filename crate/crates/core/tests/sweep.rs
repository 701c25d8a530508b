use kronecker::report::{checks, VerificationReport};
use kronecker::sweep::{recheck, to_json_lines};
use kronecker::*;

#[test]
fn exhaustive_sweep_up_to_four_vertices() {
    let reports = run_sweep(&SweepConfig::exhaustive(4, vec![3])).unwrap();
    assert!(reports.iter().all(VerificationReport::passed));
    let theorem = reports
        .iter()
        .filter(|r| r.check_name == checks::THEOREM_EQUALITY)
        .count();
    assert_eq!(theorem, 1 + 2 + 8 + 64);
}

#[test]
fn exhaustive_sweep_with_both_oracles() {
    let config = SweepConfig {
        oracle: Oracle::Both,
        brute_cap: 16,
        ..SweepConfig::exhaustive(5, vec![3])
    };
    let reports = run_sweep(&config).unwrap();
    assert!(reports.iter().all(VerificationReport::passed));
    let brute_checked = reports
        .iter()
        .filter(|r| r.get_int("direct_brute").is_some())
        .count();
    // products on up to 15 vertices, all within the cap
    assert_eq!(brute_checked, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn random_sweep_on_eight_vertices() {
    let config = SweepConfig {
        min_vertices: 8,
        ..SweepConfig::random(8, vec![3], 1000, 2024)
    };
    let reports = run_sweep(&config).unwrap();
    assert!(reports.iter().all(VerificationReport::passed));
    assert!(reports
        .iter()
        .filter(|r| r.check_name == checks::THEOREM_EQUALITY)
        .all(|r| r.inputs.graph6.starts_with('G')));
}

#[test]
fn reports_survive_json_and_recheck() {
    let config = SweepConfig {
        lemma_samples: 2,
        oracle: Oracle::Both,
        ..SweepConfig::random(7, vec![3, 4], 60, 5)
    };
    let reports = run_sweep(&config).unwrap();
    let text = to_json_lines(&reports);
    let parsed: Vec<VerificationReport> = text
        .lines()
        .map(|l| VerificationReport::from_json_line(l).unwrap())
        .collect();
    assert_eq!(parsed, reports);
    for report in &parsed {
        assert_eq!(recheck(report).unwrap(), report.verdict);
    }
    let lemma = parsed
        .iter()
        .filter(|r| r.check_name == checks::QUOTIENT_CONNECTED)
        .find(|r| r.inputs.separator.as_ref().is_some_and(|s| !s.is_empty()))
        .expect("some nonempty sampled separator");
    assert!(lemma.inputs.seed.is_some());
}

#[test]
fn recheck_catches_tampered_inputs() {
    let report =
        theorem::check_theorem_equality(&graph::named::cycle(5), 3, Oracle::Flow, 12).unwrap();
    assert!(report.passed());
    let mut forged = report.clone();
    forged.verdict = Verdict::Fail;
    assert_eq!(recheck(&forged).unwrap(), Verdict::Pass);
    let mut unknown = report;
    unknown.check_name = "nonsense".into();
    assert!(matches!(recheck(&unknown), Err(Error::UnknownCheck(_))));
}

#[test]
fn timing_is_opt_in() {
    let quiet = run_sweep(&SweepConfig::exhaustive(3, vec![3])).unwrap();
    assert!(quiet.iter().all(|r| r.elapsed_ms == 0));
    let timed = SweepConfig {
        record_timing: true,
        ..SweepConfig::exhaustive(3, vec![3])
    };
    assert_eq!(run_sweep(&timed).unwrap().len(), quiet.len());
}

#[test]
fn invalid_config_is_rejected() {
    assert!(matches!(
        run_sweep(&SweepConfig::exhaustive(8, vec![3])),
        Err(Error::Config(_))
    ));
}
