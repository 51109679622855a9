//! Random expression trees and values shared by the round-trip tests.

use proptest::prelude::*;
use w22_cli::eval::{Data, Value};
use w22_cli::expr::{Expr, MapName, TwistName};
use w22_core::scalar::{rat, Scalar};
use w22_core::{AlgebraElement, GenKind, Generator, Monomial, Tensor, TruncatedSeries};

fn nonneg() -> impl Strategy<Value = Scalar> {
    (0i64..20, 1i64..5).prop_map(|(p, q)| rat(p, q))
}

fn signed() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..5).prop_map(|(p, q)| rat(p, q))
}

fn kind() -> impl Strategy<Value = GenKind> {
    prop_oneof![Just(GenKind::L), Just(GenKind::W)]
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        nonneg().prop_map(Expr::Num),
        (kind(), -6i64..=6).prop_map(|(k, i)| Expr::Gen(k, i)),
        Just(Expr::Hbar),
        Just(Expr::T),
        (signed(), 0u32..5).prop_map(|(b, k)| Expr::HbarRising(b, k)),
        (signed(), 0u32..5).prop_map(|(b, k)| Expr::HbarFalling(b, k)),
        (prop::sample::select(TwistName::ALL.to_vec()), signed())
            .prop_map(|(t, b)| Expr::Twist(t, b)),
    ]
}

pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 40, 3, |inner| {
        prop_oneof![
            (prop::sample::select(MapName::ALL.to_vec()), inner.clone())
                .prop_map(|(m, e)| Expr::Apply(m, Box::new(e))),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Expr::Tensor),
            (inner, 0u32..4).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
        ]
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((kind(), -4i64..=4), 0..4)
        .prop_map(|gs| Monomial::from_generators(gs.into_iter().map(|(k, i)| Generator::new(k, i))))
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(), signed()), 0..4).prop_map(AlgebraElement::from_terms)
}

fn tensor<const K: usize>() -> impl Strategy<Value = Tensor<K>> {
    prop::collection::vec((prop::collection::vec(monomial(), K), signed()), 0..4).prop_map(
        |terms| {
            let mut t = Tensor::<K>::zero();
            for (key, c) in terms {
                t.add_term(key.try_into().expect("K slots"), c);
            }
            t
        },
    )
}

pub fn value() -> impl Strategy<Value = Value> {
    let data = (0usize..4).prop_flat_map(|n| {
        prop_oneof![
            prop::collection::vec(element(), n + 1)
                .prop_map(move |c| Data::Algebra(TruncatedSeries::new(n, c))),
            prop::collection::vec(tensor::<2>(), n + 1)
                .prop_map(move |c| Data::Tensor2(TruncatedSeries::new(n, c))),
            prop::collection::vec(tensor::<3>(), n + 1)
                .prop_map(move |c| Data::Tensor3(TruncatedSeries::new(n, c))),
        ]
    });
    (data, any::<bool>()).prop_map(|(data, series)| {
        let data = if series { data } else { data.coefficient(0) };
        Value { series, data }
    })
}
