//! Verification suites, one per lemma or theorem, each producing a
//! [`VerificationReport`].
//!
//! A suite is a list of named sub-checks, one per equation. Each sub-check
//! sweeps an exhaustive parameter box and records the first failing tuple
//! together with the first differing coefficient. Where the source formulas
//! admit more than one reading, every reading is evaluated and the report
//! records which ones hold.

mod classical;
mod factorial;
mod lemmas;
mod lie;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{GenKind, TwistConfig};
use crate::error::Error;
use crate::ring::{Ring, TermDiff};
use crate::scalar::{self, int, rat, Scalar};
use crate::series::TruncatedSeries;

pub use classical::suite_hopf_classical;
pub use factorial::suite_lemma_1_1;
pub use lemmas::{
    suite_lemma_2_1, suite_lemma_2_2, suite_lemma_2_3, suite_lemma_2_4, suite_lemma_2_5,
    suite_lemma_2_6,
};
pub use lie::suite_lie;
pub use theorems::{suite_theorem_1_4, suite_theorem_1_5};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub params: Value,
    pub status: CheckStatus,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cfg: Option<TwistConfig>,
    pub status: CheckStatus,
    pub checks: Vec<Check>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One line per report: `PASS thm1.4 [X=L_1, n0=1, N=4] 23 checks`.
    pub fn summary(&self) -> String {
        let cfg = self.cfg.map(|c| format!(" [{c}]")).unwrap_or_default();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let failed: Vec<&str> = self.failures().map(|c| c.id.as_str()).collect();
        let mut line = format!(
            "{status} {}{cfg} {} checks in {:.0} ms",
            self.suite,
            self.checks.len(),
            self.wall_time_ms
        );
        if !failed.is_empty() {
            line.push_str(&format!(" (failed: {})", failed.join(", ")));
        }
        line
    }
}

/// Every suite the verifier knows, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    Lie,
    Lemma1_1,
    HopfClassical,
    Lemma2_1,
    Lemma2_2,
    Lemma2_3,
    Lemma2_4,
    Lemma2_5,
    Lemma2_6,
    Theorem1_4,
    Theorem1_5,
}

impl SuiteId {
    pub const ALL: [SuiteId; 11] = [
        SuiteId::Lie,
        SuiteId::Lemma1_1,
        SuiteId::HopfClassical,
        SuiteId::Lemma2_1,
        SuiteId::Lemma2_2,
        SuiteId::Lemma2_3,
        SuiteId::Lemma2_4,
        SuiteId::Lemma2_5,
        SuiteId::Lemma2_6,
        SuiteId::Theorem1_4,
        SuiteId::Theorem1_5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Lie => "lie",
            SuiteId::Lemma1_1 => "1.1",
            SuiteId::HopfClassical => "hopf0",
            SuiteId::Lemma2_1 => "2.1",
            SuiteId::Lemma2_2 => "2.2",
            SuiteId::Lemma2_3 => "2.3",
            SuiteId::Lemma2_4 => "2.4",
            SuiteId::Lemma2_5 => "2.5",
            SuiteId::Lemma2_6 => "2.6",
            SuiteId::Theorem1_4 => "thm1.4",
            SuiteId::Theorem1_5 => "thm1.5",
        }
    }

    /// Suites that only make sense for one twist kind.
    pub fn required_kind(self) -> Option<GenKind> {
        match self {
            SuiteId::Lemma2_5 | SuiteId::Theorem1_4 => Some(GenKind::L),
            SuiteId::Lemma2_6 | SuiteId::Theorem1_5 => Some(GenKind::W),
            _ => None,
        }
    }

    /// Suites whose result does not depend on the twist configuration.
    pub fn config_free(self) -> bool {
        matches!(
            self,
            SuiteId::Lie | SuiteId::Lemma1_1 | SuiteId::HopfClassical
        )
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Sweep boxes. Defaults are the desk-scale boxes every suite is specified
/// against.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    /// Seed for the randomized ring-law checks.
    pub seed: u64,
    /// `|index|` bound for the Lie-law sweeps.
    pub lie_index: i64,
    /// Random Jacobi triples.
    pub jacobi_samples: usize,
    /// Random associativity triples.
    pub assoc_samples: usize,
    /// `m + n` bound for the factorial identities.
    pub factorial_total: u32,
    /// Witness-ring parameters for the factorial identities.
    pub factorial_params: Vec<Scalar>,
    /// `|m|, |n|` bound for the exchange and product identities.
    pub exchange_index: i64,
    /// `i, k` bound for the exchange and product identities.
    pub exchange_power: u32,
    /// Twist parameters `b, c`.
    pub twist_params: Vec<Scalar>,
    /// `i` bound for the coproduct of `ħ^{[i]}`.
    pub coproduct_power: u32,
    /// `|n|` bound for closed-form comparisons.
    pub closed_form_index: i64,
    /// `|n|` bound for the twisted Hopf axioms.
    pub axiom_index: i64,
    /// Truncation cap for identities in the triple tensor power.
    pub tensor3_order: usize,
    /// Random elements for the classical Hopf laws.
    pub classical_samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0x5eed,
            lie_index: 6,
            jacobi_samples: 200,
            assoc_samples: 100,
            factorial_total: 6,
            factorial_params: vec![int(0), int(1), int(-1), rat(1, 2), rat(-1, 2), int(2)],
            exchange_index: 3,
            exchange_power: 4,
            twist_params: vec![int(0), int(1), int(-1), rat(1, 2)],
            coproduct_power: 6,
            closed_form_index: 3,
            axiom_index: 2,
            tensor3_order: 3,
            classical_samples: 100,
        }
    }
}

impl Options {
    pub fn with_seed(seed: u64) -> Self {
        Options {
            seed,
            ..Self::default()
        }
    }
}

/// Runs one suite for one configuration.
pub fn run_suite(
    id: SuiteId,
    cfg: &TwistConfig,
    opts: &Options,
) -> Result<VerificationReport, Error> {
    if let Some(kind) = id.required_kind() {
        if cfg.twist_kind() != kind {
            return Err(Error::TwistKindMismatch {
                suite: id.name().to_string(),
                expected: kind.to_string(),
            });
        }
    }
    Ok(match id {
        SuiteId::Lie => suite_lie(opts),
        SuiteId::Lemma1_1 => suite_lemma_1_1(opts),
        SuiteId::HopfClassical => suite_hopf_classical(opts),
        SuiteId::Lemma2_1 => suite_lemma_2_1(cfg, opts),
        SuiteId::Lemma2_2 => suite_lemma_2_2(cfg, opts),
        SuiteId::Lemma2_3 => suite_lemma_2_3(cfg, opts),
        SuiteId::Lemma2_4 => suite_lemma_2_4(cfg, opts),
        SuiteId::Lemma2_5 => suite_lemma_2_5(cfg, opts)?,
        SuiteId::Lemma2_6 => suite_lemma_2_6(cfg, opts)?,
        SuiteId::Theorem1_4 => suite_theorem_1_4(cfg, opts)?,
        SuiteId::Theorem1_5 => suite_theorem_1_5(cfg, opts)?,
    })
}

/// The default configuration list: both twist kinds, `n0 ∈ {1, 2, -1}`.
pub fn default_configs(order: usize) -> Vec<TwistConfig> {
    let mut out = Vec::new();
    for kind in [GenKind::L, GenKind::W] {
        for n0 in [1, 2, -1] {
            out.push(TwistConfig::new(n0, kind, order).expect("nonzero n0"));
        }
    }
    out
}

/// Every applicable suite over every configuration. Configuration-free
/// suites run once. Reports are ordered by suite, then configuration.
pub fn run_all(cfgs: &[TwistConfig], opts: &Options) -> Vec<VerificationReport> {
    if cfgs.is_empty() {
        return Vec::new();
    }
    let mut jobs: Vec<(SuiteId, TwistConfig)> = Vec::new();
    for id in SuiteId::ALL {
        if id.config_free() {
            jobs.push((id, cfgs[0]));
            continue;
        }
        let mut seen = Vec::new();
        for cfg in cfgs {
            if id.required_kind().is_some_and(|k| k != cfg.twist_kind()) || seen.contains(cfg) {
                continue;
            }
            seen.push(*cfg);
            jobs.push((id, *cfg));
        }
    }
    jobs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    jobs.iter()
        .map(|(id, cfg)| run_suite(*id, cfg, opts).expect("kind filtered above"))
        .collect()
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

/// Where a comparison first went wrong.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub degree: Option<usize>,
    pub diff: Box<TermDiff>,
}

impl Mismatch {
    fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "term": self.diff.term,
            "lhs": scalar::to_text(&self.diff.lhs),
            "rhs": scalar::to_text(&self.diff.rhs),
        })
    }
}

pub type Outcome = Result<(), Mismatch>;

pub fn compare<R: Ring>(lhs: &R, rhs: &R) -> Outcome {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some(diff) => Err(Mismatch {
            degree: None,
            diff: Box::new(diff),
        }),
    }
}

pub fn compare_series<R: Ring>(lhs: &TruncatedSeries<R>, rhs: &TruncatedSeries<R>) -> Outcome {
    assert_eq!(
        lhs.order(),
        rhs.order(),
        "comparing series of different order"
    );
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((k, diff)) => Err(Mismatch {
            degree: Some(k),
            diff: Box::new(diff),
        }),
    }
}

pub fn compare_scalars(what: &str, lhs: &Scalar, rhs: &Scalar) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch {
            degree: None,
            diff: Box::new(TermDiff {
                term: what.to_string(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
        })
    }
}

/// Which readings decide a check's status. `Only` requires every reading to
/// hold; `AnyOf` passes iff at least one listed reading holds on every tuple.
pub(crate) enum Decide {
    Only,
    AnyOf(Vec<String>),
}

/// Runs `f` over every tuple (in parallel, aggregated in tuple order).
/// `f` returns one outcome per named reading; plain checks return a single
/// reading named `""`.
pub(crate) fn sweep<T, F>(id: &str, params: Value, tuples: &[T], decide: Decide, f: F) -> Check
where
    T: Serialize + Sync,
    F: Fn(&T) -> Vec<(String, Outcome)> + Sync,
{
    let results: Vec<Vec<(String, Outcome)>> = tuples.par_iter().map(&f).collect();
    let mut readings: BTreeMap<String, Option<Value>> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    for (tuple, outcomes) in tuples.iter().zip(&results) {
        for (name, outcome) in outcomes {
            let slot = readings.entry(name.clone()).or_insert_with(|| {
                order.push(name.clone());
                None
            });
            if let (None, Err(m)) = (&slot, outcome) {
                let mut fail = m.to_json();
                fail["params"] = serde_json::to_value(tuple).expect("tuple serializes");
                *slot = Some(fail);
            }
        }
    }
    let holds = |name: &str| readings.get(name).is_some_and(Option::is_none);
    let passed = match decide {
        Decide::Only => readings.values().all(Option::is_none),
        Decide::AnyOf(ref names) => names.iter().any(|n| holds(n)),
    };
    let detail = if matches!(decide, Decide::Only) && order.len() <= 1 {
        json!({
            "tuples": tuples.len(),
            "first_failure": readings.values().next().cloned().flatten(),
        })
    } else {
        let per: serde_json::Map<String, Value> = order
            .iter()
            .map(|name| {
                let fail = readings[name].clone();
                (
                    name.clone(),
                    json!({ "holds": fail.is_none(), "first_failure": fail }),
                )
            })
            .collect();
        let matching: Vec<&String> = order.iter().filter(|n| holds(n)).collect();
        json!({ "tuples": tuples.len(), "readings": per, "matching": matching })
    };
    Check {
        id: id.to_string(),
        params,
        status: if passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        detail,
    }
}

/// A sweep with a single reading.
pub(crate) fn sweep_plain<T, F>(id: &str, params: Value, tuples: &[T], f: F) -> Check
where
    T: Serialize + Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    sweep(id, params, tuples, Decide::Only, |t| {
        vec![(String::new(), f(t))]
    })
}

pub(crate) struct ReportBuilder {
    suite: &'static str,
    cfg: Option<TwistConfig>,
    started: Instant,
    checks: Vec<Check>,
}

impl ReportBuilder {
    pub(crate) fn new(suite: SuiteId, cfg: Option<TwistConfig>) -> Self {
        ReportBuilder {
            suite: suite.name(),
            cfg,
            started: Instant::now(),
            checks: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let status = if self.checks.iter().all(|c| c.status == CheckStatus::Pass) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        VerificationReport {
            suite: self.suite.to_string(),
            cfg: self.cfg,
            status,
            checks: self.checks,
            wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// A rational inside a sweep tuple, serialized in short form (`"-1/2"`).
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Q(pub Scalar);

impl Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&scalar::display(&self.0))
    }
}

pub(crate) fn qs(values: &[Scalar]) -> Vec<Q> {
    values.iter().cloned().map(Q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>(), Ok(id));
        }
        assert!("2.7".parse::<SuiteId>().is_err());
    }

    #[test]
    fn empty_config_list_gives_empty_report() {
        assert!(run_all(&[], &Options::default()).is_empty());
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let cfg = TwistConfig::new(1, GenKind::W, 1).unwrap();
        assert!(matches!(
            run_suite(SuiteId::Theorem1_4, &cfg, &Options::default()),
            Err(Error::TwistKindMismatch { .. })
        ));
    }

    #[test]
    fn sweep_records_first_failing_tuple() {
        let tuples: Vec<i64> = (0..10).collect();
        let check = sweep_plain("t", json!({}), &tuples, |&n| {
            compare_scalars("n", &int(n.min(4)), &int(n))
        });
        assert_eq!(check.status, CheckStatus::Fail);
        assert_eq!(check.detail["first_failure"]["params"], json!(5));
        assert_eq!(check.detail["tuples"], json!(10));
    }

    #[test]
    fn readings_decide_status() {
        let tuples = [1i64, 2, 3];
        let check = sweep(
            "r",
            json!({}),
            &tuples,
            Decide::AnyOf(vec!["a".into(), "b".into()]),
            |&n| {
                vec![
                    ("a".into(), compare_scalars("x", &int(n), &int(2))),
                    ("b".into(), Ok(())),
                ]
            },
        );
        assert_eq!(check.status, CheckStatus::Pass);
        assert_eq!(check.detail["matching"], json!(["b"]));
        assert_eq!(check.detail["readings"]["a"]["holds"], json!(false));
    }
}
