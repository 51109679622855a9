//! Hopf axioms of the undeformed structure on random elements.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::lie::random_element;
use super::{compare, compare_scalars, sweep_plain, Options, ReportBuilder, SuiteId};
use crate::algebra::{multiply, AlgebraElement};
use crate::hopf::{
    delta0, delta0_left, delta0_right, eps, eps_left, eps_right, mu, s0, s0_left, s0_right,
};

pub fn suite_hopf_classical(opts: &Options) -> super::VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::HopfClassical, None);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x4f9f);
    let samples: Vec<[AlgebraElement; 2]> = (0..opts.classical_samples)
        .map(|_| [random_element(&mut rng, 3), random_element(&mut rng, 3)])
        .collect();
    let indices: Vec<usize> = (0..samples.len()).collect();
    let params = json!({ "samples": opts.classical_samples, "seed": opts.seed, "word_length": 3 });

    report.push(sweep_plain(
        "coassociativity",
        params.clone(),
        &indices,
        |&i| {
            let d = delta0(&samples[i][0]);
            compare(&delta0_left(&d), &delta0_right(&d))
        },
    ));
    report.push(sweep_plain("counit", params.clone(), &indices, |&i| {
        let a = &samples[i][0];
        let d = delta0(a);
        compare(&eps_left(&d), a).and(compare(&eps_right(&d), a))
    }));
    report.push(sweep_plain("antipode", params.clone(), &indices, |&i| {
        let a = &samples[i][0];
        let d = delta0(a);
        let unit = AlgebraElement::scalar(eps(a));
        compare(&mu(&s0_left(&d)), &unit).and(compare(&mu(&s0_right(&d)), &unit))
    }));
    report.push(sweep_plain(
        "coproduct.multiplicative",
        params.clone(),
        &indices,
        |&i| {
            let [a, b] = &samples[i];
            compare(&delta0(&multiply(a, b)), &delta0(a).mul(&delta0(b)))
        },
    ));
    report.push(sweep_plain(
        "antipode.anti_multiplicative",
        params.clone(),
        &indices,
        |&i| {
            let [a, b] = &samples[i];
            compare(&s0(&multiply(a, b)), &multiply(&s0(b), &s0(a)))
        },
    ));
    report.push(sweep_plain(
        "counit.multiplicative",
        params,
        &indices,
        |&i| {
            let [a, b] = &samples[i];
            compare_scalars("ε(ab)", &eps(&multiply(a, b)), &(eps(a) * eps(b)))
        },
    ));
    report.finish()
}
