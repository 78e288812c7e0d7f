use extri_core::axiomlab::{check_names, replay, run_suite, sample_for, Sample, Suite, TrialConfig, MAX_PAYLOADS};

fn config(trials: u64, seed: u64) -> TrialConfig {
    TrialConfig {
        trials,
        seed,
        ..TrialConfig::default()
    }
}

#[test]
fn identical_configs_give_identical_reports() {
    let cfg = config(6, 11);
    let a = run_suite(&cfg).to_json();
    let b = run_suite(&cfg).to_json();
    assert_eq!(a, b);
}

#[test]
fn seeds_change_the_digest() {
    assert_ne!(run_suite(&config(6, 0)).digest, run_suite(&config(6, 1)).digest);
}

#[test]
fn zero_trials_is_an_empty_pass() {
    let r = run_suite(&config(0, 0));
    assert!(r.all_passed());
    assert_eq!((r.passed, r.failed), (0, 0));
    assert_eq!(r.checks.len(), check_names().len());
    assert!(r.checks.iter().all(|c| c.passed == 0 && c.failures.is_empty()));
}

#[test]
fn small_suite_passes() {
    let r = run_suite(&config(12, 5));
    let bad: Vec<_> = r.checks.iter().filter(|c| c.failed > 0).map(|c| (&c.name, &c.failures[0].message)).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(r.passed, 12 * check_names().len() as u64);
}

#[test]
fn suites_select_their_checks() {
    for (suite, prefix) in [(Suite::Base, "base."), (Suite::Karoubi, "karoubi."), (Suite::Weak, "weak.")] {
        let cfg = TrialConfig {
            suite,
            ..config(1, 0)
        };
        let r = run_suite(&cfg);
        assert!(!r.checks.is_empty());
        assert!(r.checks.iter().all(|c| c.name.starts_with(prefix)), "{suite:?}");
    }
}

#[test]
fn every_check_fails_when_tampered_and_replays() {
    let cfg = TrialConfig {
        tamper: vec!["all".into()],
        ..config(12, 0)
    };
    let r = run_suite(&cfg);
    for c in &r.checks {
        assert!(c.failed > 0, "{} never noticed the corruption", c.name);
        assert!(c.failures.len() <= MAX_PAYLOADS);
        for p in &c.failures {
            assert!(p.tamper);
            assert_eq!(replay(p).unwrap().as_deref(), Some(p.message.as_str()), "{} trial {}", p.check, p.trial);
        }
    }
}

#[test]
fn tampering_one_check_leaves_the_others_alone() {
    let cfg = TrialConfig {
        suite: Suite::Karoubi,
        tamper: vec!["karoubi.idem_fill".into()],
        ..config(8, 2)
    };
    let r = run_suite(&cfg);
    for c in &r.checks {
        if c.name == "karoubi.idem_fill" {
            assert_eq!(c.failed, 8);
        } else {
            assert_eq!(c.failed, 0, "{}", c.name);
        }
    }
}

#[test]
fn untampered_payload_replays_as_pass() {
    let cfg = TrialConfig {
        tamper: vec!["base.et3".into()],
        suite: Suite::Base,
        ..config(3, 0)
    };
    let r = run_suite(&cfg);
    let mut p = r.check("base.et3").unwrap().failures[0].clone();
    p.tamper = false;
    assert_eq!(replay(&p).unwrap(), None);
}

#[test]
fn invalid_configs_are_rejected() {
    let empty = TrialConfig {
        primes: vec![],
        ..config(1, 0)
    };
    assert!(empty.validate().is_err());
    let composite = TrialConfig {
        primes: vec![4],
        ..config(1, 0)
    };
    assert!(composite.validate().is_err());
    let unknown = TrialConfig {
        tamper: vec!["base.nothing".into()],
        ..config(1, 0)
    };
    assert!(unknown.validate().is_err());
    assert!(config(1, 0).validate().is_ok());
}

#[test]
fn first_sample_is_frozen() {
    let golden: Sample = serde_json::from_str(include_str!("golden/first_sample.json")).unwrap();
    let s = sample_for(&TrialConfig::default(), "base.realization", 0).unwrap();
    assert_eq!(s, golden);
}

#[test]
fn report_round_trips_through_json() {
    let r = run_suite(&config(2, 9));
    let back: extri_core::axiomlab::Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back.to_json(), r.to_json());
}
