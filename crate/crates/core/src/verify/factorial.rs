//! Product and summation identities for shifted factorials, checked in a free
//! commuting witness ring and again with `y = ħ` inside the enveloping
//! algebra.

use num_traits::{One, Zero};
use serde_json::json;

use super::{compare, qs, sweep_plain, Mismatch, Options, Outcome, ReportBuilder, SuiteId, Q};
use crate::algebra::{
    falling_factorial, hbar, rising_factorial, AlgebraElement, GenKind, TwistConfig,
};
use crate::poly::PolyWitness;
use crate::ring::TermDiff;
use crate::scalar::{binomial, factorial, int, Scalar};

fn compare_poly(lhs: &PolyWitness, rhs: &PolyWitness) -> Outcome {
    let n = lhs.coeffs().len().max(rhs.coeffs().len());
    let zero = Scalar::zero();
    for i in 0..n {
        let a = lhs.coeffs().get(i).unwrap_or(&zero);
        let b = rhs.coeffs().get(i).unwrap_or(&zero);
        if a != b {
            return Err(Mismatch {
                degree: None,
                diff: Box::new(TermDiff {
                    term: format!("y^{i}"),
                    lhs: a.clone(),
                    rhs: b.clone(),
                }),
            });
        }
    }
    Ok(())
}

fn sign(n: u32) -> Scalar {
    if n.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// The factorial identities over an abstract commutative `y`.
trait Witness: Sized {
    fn rising(b: &Scalar, i: u32) -> Self;
    fn falling(b: &Scalar, i: u32) -> Self;
    fn constant(c: Scalar) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn add_scaled(&mut self, other: &Self, c: &Scalar);
    fn compare(&self, other: &Self) -> Outcome;
}

impl Witness for PolyWitness {
    fn rising(b: &Scalar, i: u32) -> Self {
        PolyWitness::rising(b, i)
    }
    fn falling(b: &Scalar, i: u32) -> Self {
        PolyWitness::falling(b, i)
    }
    fn constant(c: Scalar) -> Self {
        PolyWitness::constant(c)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        *self = &*self + &other.scale(c);
    }
    fn compare(&self, other: &Self) -> Outcome {
        compare_poly(self, other)
    }
}

/// `y = ħ` in the enveloping algebra.
struct Hbar(AlgebraElement);

fn hbar_elem() -> AlgebraElement {
    hbar(&TwistConfig::new(1, GenKind::L, 0).expect("nonzero n0"))
}

impl Witness for Hbar {
    fn rising(b: &Scalar, i: u32) -> Self {
        Hbar(rising_factorial(&hbar_elem(), b, i))
    }
    fn falling(b: &Scalar, i: u32) -> Self {
        Hbar(falling_factorial(&hbar_elem(), b, i))
    }
    fn constant(c: Scalar) -> Self {
        Hbar(AlgebraElement::scalar(c))
    }
    fn mul(&self, other: &Self) -> Self {
        Hbar(&self.0 * &other.0)
    }
    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        self.0.add_scaled(&other.0, c);
    }
    fn compare(&self, other: &Self) -> Outcome {
        compare(&self.0, &other.0)
    }
}

fn rising_product<Y: Witness>(b: &Scalar, m: u32, n: u32) -> Outcome {
    let lhs = Y::rising(b, m + n);
    let rhs = Y::rising(b, m).mul(&Y::rising(&(b + int(m as i64)), n));
    lhs.compare(&rhs)
}

fn falling_product<Y: Witness>(b: &Scalar, m: u32, n: u32) -> Outcome {
    let lhs = Y::falling(b, m + n);
    let rhs = Y::falling(b, m).mul(&Y::falling(&(b - int(m as i64)), n));
    lhs.compare(&rhs)
}

fn falling_as_rising<Y: Witness>(b: &Scalar, m: u32) -> Outcome {
    let shift = b - int(m as i64) + int(1);
    Y::falling(b, m).compare(&Y::rising(&shift, m))
}

/// `Σ_{m+n=k} (-1)^n/(m! n!) y_b^{[m]} second(m, n) = binom(top, k)`.
fn convolution<Y: Witness>(
    b: &Scalar,
    k: u32,
    second: impl Fn(u32, u32) -> Y,
    top: Scalar,
) -> Outcome {
    let mut lhs = Y::constant(Scalar::zero());
    for m in 0..=k {
        let n = k - m;
        let c = sign(n) / (factorial(m) * factorial(n));
        lhs.add_scaled(&Y::falling(b, m).mul(&second(m, n)), &c);
    }
    lhs.compare(&Y::constant(binomial(&top, k)))
}

fn vandermonde_rising<Y: Witness>(b: &Scalar, c: &Scalar, k: u32) -> Outcome {
    convolution::<Y>(b, k, |_, n| Y::rising(c, n), b - c)
}

fn vandermonde_falling<Y: Witness>(b: &Scalar, c: &Scalar, k: u32) -> Outcome {
    convolution::<Y>(
        b,
        k,
        |m, n| Y::falling(&(c - int(m as i64)), n),
        b - c + int(k as i64) - int(1),
    )
}

fn push_identities<Y: Witness>(
    report: &mut ReportBuilder,
    prefix: &str,
    params: &[Scalar],
    total: u32,
) {
    let box_params = json!({
        "m+n": total,
        "b": qs(params).iter().map(|q| serde_json::to_value(q).unwrap()).collect::<Vec<_>>(),
    });
    let mn: Vec<(Q, u32, u32)> = params
        .iter()
        .flat_map(|b| {
            (0..=total).flat_map(move |m| (0..=total - m).map(move |n| (Q(b.clone()), m, n)))
        })
        .collect();
    let bm: Vec<(Q, u32)> = params
        .iter()
        .flat_map(|b| (0..=total).map(move |m| (Q(b.clone()), m)))
        .collect();
    let bck: Vec<(Q, Q, u32)> = params
        .iter()
        .flat_map(|b| {
            params
                .iter()
                .flat_map(move |c| (0..=total).map(move |k| (Q(b.clone()), Q(c.clone()), k)))
        })
        .collect();

    report.push(sweep_plain(
        &format!("{prefix}rising.product"),
        box_params.clone(),
        &mn,
        |(b, m, n)| rising_product::<Y>(&b.0, *m, *n),
    ));
    report.push(sweep_plain(
        &format!("{prefix}falling.product"),
        box_params.clone(),
        &mn,
        |(b, m, n)| falling_product::<Y>(&b.0, *m, *n),
    ));
    report.push(sweep_plain(
        &format!("{prefix}falling.as_rising"),
        box_params.clone(),
        &bm,
        |(b, m)| falling_as_rising::<Y>(&b.0, *m),
    ));
    report.push(sweep_plain(
        &format!("{prefix}sum.rising"),
        box_params.clone(),
        &bck,
        |(b, c, k)| vandermonde_rising::<Y>(&b.0, &c.0, *k),
    ));
    report.push(sweep_plain(
        &format!("{prefix}sum.falling"),
        box_params,
        &bck,
        |(b, c, k)| vandermonde_falling::<Y>(&b.0, &c.0, *k),
    ));
}

pub fn suite_lemma_1_1(opts: &Options) -> super::VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lemma1_1, None);
    push_identities::<PolyWitness>(
        &mut report,
        "",
        &opts.factorial_params,
        opts.factorial_total,
    );
    push_identities::<Hbar>(
        &mut report,
        "hbar.",
        &opts.factorial_params,
        opts.factorial_total.min(4),
    );
    report.finish()
}
