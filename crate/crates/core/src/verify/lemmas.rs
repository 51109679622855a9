//! Exchange relations, twist inverses, the coproduct of `ħ^{[i]}`, the
//! cocycle condition and the commutation of generators with the twist
//! elements.

use num_traits::{One, Zero};
use serde_json::json;

use super::{
    compare, compare_series, qs, sweep, sweep_plain, Decide, Options, Outcome, ReportBuilder,
    SuiteId, VerificationReport, Q,
};
use crate::algebra::{multiply, AlgebraElement, GenKind, Generator, TwistConfig};
use crate::error::Error;
use crate::hopf::{delta0, delta0_left, delta0_right, eps_left, eps_right};
use crate::scalar::{binomial, factorial, int, rat, Scalar};
use crate::series::TruncatedSeries;
use crate::tensor::{embed, tensor2, SlotPattern, Tensor2};
use crate::twist::{
    bk_product_formula, AlgSeries, FactorialVariant, Quantization, T2Series, WeightReading,
};

pub(super) fn sign(k: u32) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// The weight of `g` under `ad ħ` as computed, followed by the two printed
/// conventions.
pub(super) fn weight_readings(q: &Quantization, g: Generator) -> Vec<(String, Scalar)> {
    let mut out = vec![("adopted".to_string(), q.weight(g))];
    for w in WeightReading::BOTH {
        out.push((w.name().to_string(), w.value(g.index, q.cfg().n0())));
    }
    out
}

/// `b_k · G_{n + k n0}` with `b_k` from the product formula and the
/// generator kind as printed.
pub(super) fn product_coeff(q: &Quantization, k: u32, n: i64, kind: GenKind) -> AlgebraElement {
    let n0 = q.cfg().n0();
    let b = bk_product_formula(&int(n0), n, k);
    AlgebraElement::generator(Generator::new(kind, n + k as i64 * n0)).scale(&b)
}

fn gen(g: Generator) -> AlgebraElement {
    AlgebraElement::generator(g)
}

fn generators(bound: i64) -> Vec<Generator> {
    [GenKind::L, GenKind::W]
        .into_iter()
        .flat_map(|k| (-bound..=bound).map(move |n| Generator::new(k, n)))
        .collect()
}

fn const2(order: usize, x: Tensor2) -> T2Series {
    TruncatedSeries::constant(order, x)
}

fn mul<R: crate::ring::Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    a.mul(b).expect("series built at one order")
}

/// `Σ_k (-1)^k i!/(k!(i-k)!) Π_{p<k}((1-p)m - n) G_m^{i-k} H_{n+km}`.
fn printed_power_product(
    first: GenKind,
    m: i64,
    n: i64,
    i: u32,
    result: GenKind,
) -> AlgebraElement {
    let gm = gen(Generator::new(first, m));
    let mut out = AlgebraElement::zero();
    for k in 0..=i {
        let mut c = sign(k) * binomial(&int(i as i64), k);
        for p in 0..k as i64 {
            c *= int((1 - p) * m - n);
        }
        let term = multiply(
            &gm.pow(i - k),
            &gen(Generator::new(result, n + k as i64 * m)),
        );
        out.add_scaled(&term, &c);
    }
    out
}

/// `a · Y^i = Σ_k (-1)^k binom(i,k) Y^{i-k} (ad Y)^k (a)`.
fn adjoint_power_product(a: Generator, y: Generator, i: u32) -> AlgebraElement {
    let ya = gen(y);
    let mut out = AlgebraElement::zero();
    for k in 0..=i {
        let c = sign(k) * binomial(&int(i as i64), k);
        let ad = crate::algebra::ad_power(&ya, k, &gen(a));
        out.add_scaled(&multiply(&ya.pow(i - k), &ad), &c);
    }
    out
}

pub fn suite_lemma_2_1(cfg: &TwistConfig, opts: &Options) -> VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lemma2_1, Some(*cfg));
    let q = Quantization::new(cfg.with_order(0));
    let x = q.x();
    let pmax = opts.exchange_power;
    let bound = opts.exchange_index;
    let params = json!({ "b": qs(&opts.twist_params), "i,k": pmax, "|m|,|n|": bound });

    let bik: Vec<(Q, u32, u32)> = opts
        .twist_params
        .iter()
        .flat_map(|b| (0..=pmax).flat_map(move |i| (0..=pmax).map(move |k| (Q(b.clone()), i, k))))
        .collect();
    for variant in FactorialVariant::BOTH {
        let fact = |b: &Scalar, i: u32| match variant {
            FactorialVariant::Rising => q.hbar_rising(b, i),
            FactorialVariant::Falling => q.hbar_falling(b, i),
        };
        report.push(sweep_plain(
            &format!("x_power.{}", variant.name()),
            params.clone(),
            &bik,
            |(b, i, k)| {
                let xk = x.pow(*k);
                let lhs = &xk * &fact(&b.0, *i);
                let rhs = &fact(&(&b.0 - int(*k as i64)), *i) * &xk;
                compare(&lhs, &rhs)
            },
        ));
    }

    let gbi: Vec<(Generator, Q, u32)> = generators(bound)
        .into_iter()
        .flat_map(|g| {
            opts.twist_params
                .iter()
                .flat_map(move |b| (0..=pmax).map(move |i| (g, Q(b.clone()), i)))
        })
        .collect();
    for variant in FactorialVariant::BOTH {
        let fact = |b: &Scalar, i: u32| match variant {
            FactorialVariant::Rising => q.hbar_rising(b, i),
            FactorialVariant::Falling => q.hbar_falling(b, i),
        };
        report.push(sweep(
            &format!("generator.{}", variant.name()),
            params.clone(),
            &gbi,
            Decide::AnyOf(vec!["adopted".into()]),
            |(g, b, i)| {
                let ga = gen(*g);
                let lhs = &ga * &fact(&b.0, *i);
                weight_readings(&q, *g)
                    .into_iter()
                    .map(|(name, nn)| {
                        let rhs = &fact(&(&b.0 - &nn), *i) * &ga;
                        (name, compare(&lhs, &rhs))
                    })
                    .collect()
            },
        ));
    }

    let mni: Vec<(i64, i64, u32)> = (-bound..=bound)
        .flat_map(|m| (-bound..=bound).flat_map(move |n| (0..=pmax).map(move |i| (m, n, i))))
        .collect();
    let products = [
        ("product.LL", GenKind::L, GenKind::L, GenKind::L),
        ("product.LW", GenKind::L, GenKind::W, GenKind::W),
        ("product.WL", GenKind::W, GenKind::L, GenKind::W),
    ];
    for (id, left, right, printed) in products {
        report.push(sweep(
            id,
            params.clone(),
            &mni,
            Decide::AnyOf(vec!["adjoint".into()]),
            |&(m, n, i)| {
                let a = Generator::new(left, n);
                let y = Generator::new(right, m);
                let lhs = multiply(&gen(a), &gen(y).pow(i));
                vec![
                    (
                        "adjoint".into(),
                        compare(&lhs, &adjoint_power_product(a, y, i)),
                    ),
                    (
                        "printed".into(),
                        compare(&lhs, &printed_power_product(right, m, n, i, printed)),
                    ),
                ]
            },
        ));
    }
    report.finish()
}

pub fn suite_lemma_2_2(cfg: &TwistConfig, opts: &Options) -> VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lemma2_2, Some(*cfg));
    let q = Quantization::new(*cfg);
    let n = cfg.order();
    let params = json!({ "b,c": qs(&opts.twist_params), "order": n });
    let twists: Vec<_> = opts.twist_params.iter().map(|b| q.twist(b)).collect();
    let neg: Vec<_> = opts
        .twist_params
        .iter()
        .map(|b| q.twist(&-b.clone()))
        .collect();
    let idx = |b: &Q| {
        opts.twist_params
            .iter()
            .position(|x| *x == b.0)
            .expect("sweep value")
    };
    let bc: Vec<(Q, Q)> = opts
        .twist_params
        .iter()
        .flat_map(|b| {
            opts.twist_params
                .iter()
                .map(move |c| (Q(b.clone()), Q(c.clone())))
        })
        .collect();
    let bs: Vec<Q> = qs(&opts.twist_params);

    report.push(sweep_plain("D_b.C_c", params.clone(), &bc, |(b, c)| {
        let lhs = mul(&twists[idx(b)].d, &twists[idx(c)].c);
        let rhs = q
            .one_minus_xt(&(&b.0 - &c.0))
            .map(|p| tensor2(&AlgebraElement::one(), p));
        compare_series(&lhs, &rhs)
    }));
    report.push(sweep_plain("V_b.U_c", params.clone(), &bc, |(b, c)| {
        let lhs = mul(&twists[idx(b)].v, &twists[idx(c)].u);
        let rhs = q.one_minus_xt(&(-&b.0 - &c.0));
        compare_series(&lhs, &rhs)
    }));
    report.push(sweep_plain("D_b.inverse", params.clone(), &bs, |b| {
        let t = &twists[idx(b)];
        let one = T2Series::one(n);
        compare_series(&mul(&t.d, &t.c), &one).and(compare_series(&mul(&t.c, &t.d), &one))
    }));
    report.push(sweep_plain("U_b.inverse", params, &bs, |b| {
        let i = idx(b);
        let one = AlgSeries::one(n);
        compare_series(&mul(&twists[i].u, &neg[i].v), &one)
            .and(compare_series(&mul(&neg[i].v, &twists[i].u), &one))
    }));
    report.finish()
}

pub fn suite_lemma_2_3(cfg: &TwistConfig, opts: &Options) -> VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lemma2_3, Some(*cfg));
    let q = Quantization::new(cfg.with_order(0));
    let imax = opts.coproduct_power;
    let bi: Vec<(Q, u32)> = opts
        .twist_params
        .iter()
        .flat_map(|b| (0..=imax).map(move |i| (Q(b.clone()), i)))
        .collect();
    report.push(sweep_plain(
        "coproduct.hbar_falling",
        json!({ "b": qs(&opts.twist_params), "i": imax }),
        &bi,
        |(b, i)| {
            let lhs = delta0(&q.hbar_falling(&Scalar::zero(), *i));
            let mut rhs = Tensor2::zero();
            for k in 0..=*i {
                let t = tensor2(
                    &q.hbar_falling(&-b.0.clone(), k),
                    &q.hbar_falling(&b.0, i - k),
                );
                rhs.add_scaled(&t, &binomial(&int(*i as i64), k));
            }
            compare(&lhs, &rhs)
        },
    ));
    report.finish()
}

pub fn suite_lemma_2_4(cfg: &TwistConfig, opts: &Options) -> VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lemma2_4, Some(*cfg));
    let n3 = cfg.order().min(opts.tensor3_order);
    let q3 = Quantization::new(cfg.with_order(n3));
    let unit = [()];
    report.push(sweep_plain(
        "cocycle",
        json!({ "order": n3 }),
        &unit,
        |_| {
            let d = &q3.base().d;
            let lhs = mul(&d.map(|x| embed(SlotPattern::Left, x)), &d.map(delta0_left));
            let rhs = mul(
                &d.map(|x| embed(SlotPattern::Right, x)),
                &d.map(delta0_right),
            );
            compare_series(&lhs, &rhs)
        },
    ));
    let q = Quantization::new(*cfg);
    let one = AlgSeries::one(cfg.order());
    report.push(sweep_plain(
        "counit",
        json!({ "order": cfg.order() }),
        &unit,
        |_| {
            let d = &q.base().d;
            compare_series(&d.map(eps_left), &one).and(compare_series(&d.map(eps_right), &one))
        },
    ));
    report.finish()
}

/// `Σ_k (-1)^k C_{b+k} (ħ_b^{<k>} ⊗ Y_k t^k)`.
fn c_right_rhs(q: &Quantization, b: &Scalar, coeff: impl Fn(u32) -> AlgebraElement) -> T2Series {
    let n = q.order();
    let mut out = T2Series::zero(n);
    for k in 0..=n as u32 {
        let y = coeff(k);
        if y.is_zero() {
            continue;
        }
        let inner = TruncatedSeries::monomial(
            n,
            k as usize,
            tensor2(&q.hbar_rising(b, k), &y).scale(&sign(k)),
        );
        let shifted = q.twist(&(b + int(k as i64)));
        out = out.add(&mul(&shifted.c, &inner)).expect("same order");
    }
    out
}

/// `U_{b+nn} Σ_k Y_k F_k t^k` with `F_k = ħ_{k-b}^{<k>}` or `ħ_{k-b}^{[k]}`.
fn u_left_rhs(
    q: &Quantization,
    b: &Scalar,
    nn: &Scalar,
    variant: FactorialVariant,
    coeff: impl Fn(u32) -> AlgebraElement,
) -> AlgSeries {
    let n = q.order();
    let mut sum = AlgSeries::zero(n);
    for k in 0..=n as u32 {
        let y = coeff(k);
        if y.is_zero() {
            continue;
        }
        let shift = int(k as i64) - b;
        let f = match variant {
            FactorialVariant::Rising => q.hbar_rising(&shift, k),
            FactorialVariant::Falling => q.hbar_falling(&shift, k),
        };
        sum = sum
            .add(&AlgSeries::monomial(n, k as usize, &y * &f))
            .expect("same order");
    }
    mul(&q.twist(&(b + nn)).u, &sum)
}

type GenParam = (Generator, Q);

fn gen_params(bound: i64, kinds: &[GenKind], params: &[Scalar]) -> Vec<GenParam> {
    kinds
        .iter()
        .flat_map(|&kind| {
            (-bound..=bound).flat_map(move |n| {
                params
                    .iter()
                    .map(move |b| (Generator::new(kind, n), Q(b.clone())))
            })
        })
        .collect()
}

/// `(G_n ⊗ 1) C_b = C_{b-nn} (G_n ⊗ 1)`, every weight reading.
fn check_c_left(
    q: &Quantization,
    id: &str,
    params: serde_json::Value,
    tuples: &[GenParam],
) -> super::Check {
    let n = q.order();
    sweep(
        id,
        params,
        tuples,
        Decide::AnyOf(vec!["adopted".into()]),
        |(g, b)| {
            let gl = const2(n, tensor2(&gen(*g), &AlgebraElement::one()));
            let lhs = mul(&gl, &q.twist(&b.0).c);
            weight_readings(q, *g)
                .into_iter()
                .map(|(name, nn)| {
                    let rhs = mul(&q.twist(&(&b.0 - &nn)).c, &gl);
                    (name, compare_series(&lhs, &rhs))
                })
                .collect()
        },
    )
}

/// `(1 ⊗ G_n) C_b = Σ_k (-1)^k C_{b+k} (ħ_b^{<k>} ⊗ Y_k t^k)`, with `Y_k`
/// from the adjoint action or from the printed product formula.
fn check_c_right(
    q: &Quantization,
    id: &str,
    params: serde_json::Value,
    tuples: &[GenParam],
    printed: GenKind,
) -> super::Check {
    let n = q.order();
    sweep(
        id,
        params,
        tuples,
        Decide::AnyOf(vec!["adjoint".into()]),
        |(g, b)| {
            let gr = const2(n, tensor2(&AlgebraElement::one(), &gen(*g)));
            let lhs = mul(&gr, &q.twist(&b.0).c);
            let adjoint = c_right_rhs(q, &b.0, |k| q.ad_term(k, *g));
            let product = c_right_rhs(q, &b.0, |k| product_coeff(q, k, g.index, printed));
            vec![
                ("adjoint".into(), compare_series(&lhs, &adjoint)),
                ("product".into(), compare_series(&lhs, &product)),
            ]
        },
    )
}

/// `G_n U_b = U_{b+nn} Σ_k Y_k F_k t^k`, over coefficient and factorial
/// readings. The weight is the adopted one.
fn check_u_left(
    q: &Quantization,
    id: &str,
    params: serde_json::Value,
    tuples: &[GenParam],
    printed: GenKind,
) -> super::Check {
    let decide = Decide::AnyOf(
        FactorialVariant::BOTH
            .iter()
            .map(|v| format!("adjoint/{}", v.name()))
            .collect(),
    );
    sweep(id, params, tuples, decide, |(g, b)| {
        let nn = q.weight(*g);
        let lhs = q.twist(&b.0).u.mul_left(&gen(*g));
        let mut out: Vec<(String, Outcome)> = Vec::new();
        for v in FactorialVariant::BOTH {
            let adjoint = u_left_rhs(q, &b.0, &nn, v, |k| q.ad_term(k, *g));
            out.push((
                format!("adjoint/{}", v.name()),
                compare_series(&lhs, &adjoint),
            ));
            let product = u_left_rhs(q, &b.0, &nn, v, |k| product_coeff(q, k, g.index, printed));
            out.push((
                format!("product/{}", v.name()),
                compare_series(&lhs, &product),
            ));
        }
        out
    })
}

/// Oracle `b_k` (from `(ad X)^k`) against the two printed products.
fn check_bk(q: &Quantization, id: &str, bound: i64) -> super::Check {
    let n0 = q.cfg().n0();
    let kmax = q.order() as u32;
    let nk: Vec<(i64, u32)> = (-bound..=bound)
        .flat_map(|n| (0..=kmax).map(move |k| (n, k)))
        .collect();
    let decide = Decide::AnyOf(vec!["(1-p)n0-n".into(), "(1-p)nn-n".into()]);
    sweep(
        id,
        json!({ "|n|": bound, "k": kmax }),
        &nk,
        decide,
        |&(n, k)| {
            let oracle = q
                .ad_term(k, Generator::l(n))
                .as_scaled_generator()
                .map(|(c, _)| c)
                .unwrap_or_else(Scalar::zero);
            let nn = rat(n, n0);
            let mut weighted = Scalar::one();
            for p in 0..k as i64 {
                weighted *= (int(1) - int(p)) * &nn - int(n);
            }
            weighted /= factorial(k);
            vec![
                (
                    "(1-p)n0-n".into(),
                    super::compare_scalars("b_k", &oracle, &bk_product_formula(&int(n0), n, k)),
                ),
                (
                    "(1-p)nn-n".into(),
                    super::compare_scalars("b_k", &oracle, &weighted),
                ),
            ]
        },
    )
}

pub(super) fn require(cfg: &TwistConfig, id: SuiteId) -> Result<(), Error> {
    match id.required_kind() {
        Some(kind) if kind != cfg.twist_kind() => Err(Error::TwistKindMismatch {
            suite: id.name().to_string(),
            expected: kind.to_string(),
        }),
        _ => Ok(()),
    }
}

pub fn suite_lemma_2_5(cfg: &TwistConfig, opts: &Options) -> Result<VerificationReport, Error> {
    require(cfg, SuiteId::Lemma2_5)?;
    let mut report = ReportBuilder::new(SuiteId::Lemma2_5, Some(*cfg));
    let q = Quantization::new(*cfg);
    let bound = opts.exchange_index;
    let params = json!({ "b": qs(&opts.twist_params), "|n|": bound, "order": cfg.order() });
    for kind in [GenKind::L, GenKind::W] {
        let tuples = gen_params(bound, &[kind], &opts.twist_params);
        report.push(check_c_right(
            &q,
            &format!("C.right.{kind}"),
            params.clone(),
            &tuples,
            kind,
        ));
        report.push(check_c_left(
            &q,
            &format!("C.left.{kind}"),
            params.clone(),
            &tuples,
        ));
        report.push(check_u_left(
            &q,
            &format!("U.left.{kind}"),
            params.clone(),
            &tuples,
            kind,
        ));
    }
    report.push(check_bk(&q, "b_k", bound));
    Ok(report.finish())
}

pub fn suite_lemma_2_6(cfg: &TwistConfig, opts: &Options) -> Result<VerificationReport, Error> {
    require(cfg, SuiteId::Lemma2_6)?;
    let mut report = ReportBuilder::new(SuiteId::Lemma2_6, Some(*cfg));
    let q = Quantization::new(*cfg);
    let n = cfg.order();
    let bound = opts.exchange_index;
    let params = json!({ "b": qs(&opts.twist_params), "|n|": bound, "order": n });
    let ls = gen_params(bound, &[GenKind::L], &opts.twist_params);
    let ws = gen_params(bound, &[GenKind::W], &opts.twist_params);

    report.push(check_c_left(&q, "C.left.L", params.clone(), &ls));
    report.push(check_c_left(&q, "C.left.W", params.clone(), &ws));
    report.push(sweep_plain("C.right.W", params.clone(), &ws, |(g, b)| {
        let gr = const2(n, tensor2(&AlgebraElement::one(), &gen(*g)));
        let c = &q.twist(&b.0).c;
        compare_series(&mul(&gr, c), &mul(c, &gr))
    }));
    report.push(check_u_left(
        &q,
        "U.left.L",
        params.clone(),
        &ls,
        GenKind::W,
    ));
    report.push(check_c_right(
        &q,
        "C.right.L",
        params.clone(),
        &ls,
        GenKind::W,
    ));
    report.push(sweep(
        "U.left.W",
        params.clone(),
        &ws,
        Decide::AnyOf(vec!["adopted".into()]),
        |(g, b)| {
            let ga = gen(*g);
            let lhs = q.twist(&b.0).u.mul_left(&ga);
            weight_readings(&q, *g)
                .into_iter()
                .map(|(name, nn)| {
                    let rhs = q.twist(&(&b.0 + &nn)).u.mul_right(&ga);
                    (name, compare_series(&lhs, &rhs))
                })
                .collect()
        },
    ));
    // With X = W_{n0} the adjoint action of X on L_n stops after one step.
    let nk: Vec<(i64, u32)> = (-bound..=bound)
        .flat_map(|m| (0..=n as u32).map(move |k| (m, k)))
        .collect();
    report.push(sweep_plain(
        "ad_X.L",
        json!({ "|n|": bound, "k": n }),
        &nk,
        |&(m, k)| {
            let expected = match k {
                0 => gen(Generator::l(m)),
                1 => product_coeff(&q, 1, m, GenKind::W),
                _ => AlgebraElement::zero(),
            };
            compare(&q.ad_term(k, Generator::l(m)), &expected)
        },
    ));
    Ok(report.finish())
}
