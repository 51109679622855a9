//! Closed forms of the twisted coproduct and antipode against conjugation,
//! and the Hopf axioms of the twisted structure.

use serde_json::json;

use super::lemmas::{product_coeff, require, weight_readings};
use super::{
    compare, compare_scalars, compare_series, sweep, sweep_plain, Decide, Options, Outcome,
    ReportBuilder, SuiteId, VerificationReport,
};
use crate::algebra::{multiply, AlgebraElement, GenKind, Generator, TwistConfig};
use crate::error::Error;
use crate::hopf::{delta0, eps_left, eps_right, s0};
use crate::scalar::int;
use crate::tensor::Tensor;
use crate::twist::{AlgSeries, FactorialVariant, Quantization};

fn generators(bound: i64) -> Vec<Generator> {
    [GenKind::L, GenKind::W]
        .into_iter()
        .flat_map(|k| (-bound..=bound).map(move |n| Generator::new(k, n)))
        .collect()
}

/// The coefficient of `t^k` in the printed closed forms, before the
/// `ħ`-factorial: `b_k G_{n+k n0}` with `G` as printed.
fn printed_coeff(q: &Quantization, g: Generator, k: u32) -> AlgebraElement {
    match (q.cfg().twist_kind(), g.kind) {
        (GenKind::L, kind) => product_coeff(q, k, g.index, kind),
        (GenKind::W, GenKind::L) => product_coeff(q, k, g.index, GenKind::W),
        (GenKind::W, GenKind::W) if k == 0 => AlgebraElement::generator(g),
        (GenKind::W, GenKind::W) => AlgebraElement::zero(),
    }
}

const ADOPTED: &str = "adjoint|nn=adopted";

type Coefficients<'a> = Box<dyn Fn(u32) -> AlgebraElement + 'a>;

fn coefficient_readings(q: &Quantization, g: Generator) -> [(&'static str, Coefficients<'_>); 2] {
    [
        ("adjoint", Box::new(move |k| q.ad_term(k, g))),
        ("printed", Box::new(move |k| printed_coeff(q, g, k))),
    ]
}

fn theorem_suite(
    id: SuiteId,
    cfg: &TwistConfig,
    opts: &Options,
) -> Result<VerificationReport, Error> {
    require(cfg, id)?;
    let mut report = ReportBuilder::new(id, Some(*cfg));
    let q = Quantization::new(*cfg);
    let n = cfg.order();
    let closed = generators(opts.closed_form_index);
    let axioms = generators(opts.axiom_index);
    let closed_params = json!({ "|n|": opts.closed_form_index, "order": n });
    let axiom_params = json!({ "|n|": opts.axiom_index, "order": n });

    report.push(sweep(
        "delta.closed_form",
        closed_params.clone(),
        &closed,
        Decide::AnyOf(vec![ADOPTED.into()]),
        |&g| {
            let conj = q.delta(&AlgebraElement::generator(g));
            let mut out: Vec<(String, Outcome)> = Vec::new();
            for (cname, coeff) in coefficient_readings(&q, g) {
                for (wname, nn) in weight_readings(&q, g) {
                    let cf = q.closed_form_delta_with(g, &nn, &coeff);
                    out.push((format!("{cname}|nn={wname}"), compare_series(&conj, &cf)));
                }
            }
            out
        },
    ));

    let antipode_status = FactorialVariant::BOTH
        .iter()
        .map(|v| format!("{ADOPTED}|{}", v.name()))
        .collect();
    report.push(sweep(
        "antipode.closed_form",
        closed_params.clone(),
        &closed,
        Decide::AnyOf(antipode_status),
        |&g| {
            let conj = q.antipode(&AlgebraElement::generator(g));
            let mut out: Vec<(String, Outcome)> = Vec::new();
            for (cname, coeff) in coefficient_readings(&q, g) {
                for (wname, nn) in weight_readings(&q, g) {
                    for v in FactorialVariant::BOTH {
                        let cf = q.closed_form_antipode_with(&nn, v, &coeff);
                        out.push((
                            format!("{cname}|nn={wname}|{}", v.name()),
                            compare_series(&conj, &cf),
                        ));
                    }
                }
            }
            out
        },
    ));

    report.push(sweep_plain(
        "specialization.t0",
        closed_params.clone(),
        &closed,
        |&g| {
            let a = AlgebraElement::generator(g);
            compare(q.delta(&a).coeff(0), &delta0(&a))
                .and(compare(q.antipode(&a).coeff(0), &s0(&a)))
        },
    ));

    // deg t = -n0 makes every coefficient homogeneous of degree n + j n0.
    report.push(sweep_plain(
        "degree",
        closed_params.clone(),
        &closed,
        |&g| {
            let a = AlgebraElement::generator(g);
            let delta = q.delta(&a);
            let anti = q.antipode(&a);
            for j in 0..=n {
                let expected = int(g.index + j as i64 * cfg.n0());
                for (key, _) in delta.coeff(j).terms() {
                    let total: i64 = Tensor::<2>::slot_degrees(key).iter().sum();
                    let term = format!("t^{j}: {} ⊗ {}", key[0], key[1]);
                    compare_scalars(&term, &int(total), &expected)?;
                }
                for (m, _) in anti.coeff(j).terms() {
                    compare_scalars(&format!("t^{j}: {m}"), &int(m.degree()), &expected)?;
                }
            }
            Ok(())
        },
    ));

    let n3 = n.min(opts.tensor3_order);
    let q3 = Quantization::new(cfg.with_order(n3));
    report.push(sweep_plain(
        "coassociativity",
        json!({ "|n|": opts.axiom_index, "order": n3 }),
        &axioms,
        |&g| {
            let d = q3.delta(&AlgebraElement::generator(g));
            compare_series(&q3.delta_id(&d), &q3.id_delta(&d))
        },
    ));
    report.push(sweep_plain("counit", axiom_params.clone(), &axioms, |&g| {
        let a = AlgebraElement::generator(g);
        let d = q.delta(&a);
        let expected = AlgSeries::constant(n, a);
        compare_series(&d.map(eps_left), &expected)
            .and(compare_series(&d.map(eps_right), &expected))
    }));
    report.push(sweep_plain(
        "antipode",
        axiom_params.clone(),
        &axioms,
        |&g| {
            let d = q.delta(&AlgebraElement::generator(g));
            let zero = AlgSeries::zero(n);
            compare_series(&q.mu_s_id(&d), &zero).and(compare_series(&q.mu_id_s(&d), &zero))
        },
    ));

    let pairs: Vec<(Generator, Generator)> = axioms
        .iter()
        .flat_map(|&g| axioms.iter().map(move |&h| (g, h)))
        .collect();
    report.push(sweep_plain(
        "coproduct.multiplicative",
        axiom_params.clone(),
        &pairs,
        |&(g, h)| {
            let (a, b) = (AlgebraElement::generator(g), AlgebraElement::generator(h));
            let lhs = q.delta(&multiply(&a, &b));
            let rhs = q.delta(&a).mul(&q.delta(&b)).expect("same order");
            compare_series(&lhs, &rhs)
        },
    ));
    report.push(sweep_plain(
        "antipode.anti_multiplicative",
        axiom_params,
        &pairs,
        |&(g, h)| {
            let (a, b) = (AlgebraElement::generator(g), AlgebraElement::generator(h));
            let lhs = q.antipode(&multiply(&a, &b));
            let rhs = q.antipode(&b).mul(&q.antipode(&a)).expect("same order");
            compare_series(&lhs, &rhs)
        },
    ));

    let unit = [()];
    report.push(sweep_plain(
        "U.inverse",
        json!({ "order": n }),
        &unit,
        |_| {
            let base = q.base();
            let inv = base.u.invert().expect("unit constant term");
            compare_series(&inv, &base.v)
        },
    ));
    Ok(report.finish())
}

pub fn suite_theorem_1_4(cfg: &TwistConfig, opts: &Options) -> Result<VerificationReport, Error> {
    theorem_suite(SuiteId::Theorem1_4, cfg, opts)
}

pub fn suite_theorem_1_5(cfg: &TwistConfig, opts: &Options) -> Result<VerificationReport, Error> {
    theorem_suite(SuiteId::Theorem1_5, cfg, opts)
}
