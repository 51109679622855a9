//! The suites must be able to fail. Mutations are process global, so every
//! test here takes the same lock.

use std::sync::Mutex;

use w22_core::mutation::{with_mutation, Mutation};
use w22_core::verify::{
    all_passed, default_configs, run_all, run_suite, suite_lie, CheckStatus, Options, SuiteId,
};
use w22_core::{GenKind, TwistConfig};

static LOCK: Mutex<()> = Mutex::new(());

fn locked<T>(f: impl FnOnce() -> T) -> T {
    let _guard = LOCK.lock().unwrap_or_else(|e| e.into_inner());
    f()
}

#[test]
fn every_mutation_fails_some_suite() {
    locked(|| {
        let opts = Options::default();
        assert!(all_passed(&run_all(&default_configs(3), &opts)));
        for m in Mutation::ALL {
            let reports = with_mutation(m, || run_all(&default_configs(3), &opts));
            let failing: Vec<String> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.summary())
                .collect();
            assert!(!failing.is_empty(), "{m:?} went undetected");
        }
        assert!(all_passed(&run_all(&default_configs(3), &opts)));
    });
}

#[test]
fn dropped_twist_term_breaks_the_cocycle_at_degree_two() {
    locked(|| {
        let cfg = TwistConfig::new(1, GenKind::L, 3).unwrap();
        let report = with_mutation(Mutation::DropTwistT2, || {
            run_suite(SuiteId::Lemma2_4, &cfg, &Options::default()).unwrap()
        });
        let check = report.check("cocycle").unwrap();
        assert_eq!(check.status, CheckStatus::Fail);
        assert_eq!(check.detail["first_failure"]["degree"], 2);
    });
}

#[test]
fn bracket_sign_flip_breaks_jacobi() {
    locked(|| {
        let report = with_mutation(Mutation::BracketSignFlip, || suite_lie(&Options::default()));
        assert_eq!(report.check("jacobi").unwrap().status, CheckStatus::Fail);
        assert_eq!(
            report.check("antisymmetry").unwrap().status,
            CheckStatus::Fail
        );
    });
}

#[test]
fn wrong_swap_breaks_the_commutator() {
    locked(|| {
        let report = with_mutation(Mutation::WrongSwap, || suite_lie(&Options::default()));
        assert_eq!(
            report.check("commutator").unwrap().status,
            CheckStatus::Fail
        );
    });
}
