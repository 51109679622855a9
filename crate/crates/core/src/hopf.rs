//! The undeformed Hopf structure: `Δ°(x) = x⊗1 + 1⊗x`, `S°(x) = -x`,
//! `ε(x) = 0` on generators, extended (anti)multiplicatively.

use std::str::FromStr;

use num_traits::One;

use crate::algebra::{multiply, AlgebraElement, Monomial};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;
use crate::tensor::{tensor2, Tensor2, Tensor3};

fn delta0_monomial(m: &Monomial) -> Tensor2 {
    let one = AlgebraElement::one();
    m.generators().iter().fold(Tensor2::one(), |acc, &g| {
        let x = AlgebraElement::generator(g);
        let primitive = &tensor2(&x, &one) + &tensor2(&one, &x);
        acc.mul(&primitive)
    })
}

/// Classical coproduct.
pub fn delta0(a: &AlgebraElement) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&delta0_monomial(m), c);
    }
    out
}

fn s0_monomial(m: &Monomial) -> AlgebraElement {
    let sign = if m.len().is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    m.generators()
        .iter()
        .rev()
        .fold(AlgebraElement::one(), |acc, &g| {
            multiply(&acc, &AlgebraElement::generator(g))
        })
        .scale(&sign)
}

/// Classical antipode: reverses words and negates each generator.
pub fn s0(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&s0_monomial(m), c);
    }
    out
}

/// Counit: every generator is killed, so only the constant term survives.
pub fn eps(a: &AlgebraElement) -> Scalar {
    a.constant_term()
}

/// `(Δ° ⊗ Id)`
pub fn delta0_left(x: &Tensor2) -> Tensor3 {
    x.map_slot(0, |m| {
        delta0_monomial(m)
            .terms()
            .map(|([a, b], c)| (vec![a.clone(), b.clone()], c.clone()))
            .collect()
    })
}

/// `(Id ⊗ Δ°)`
pub fn delta0_right(x: &Tensor2) -> Tensor3 {
    x.map_slot(1, |m| {
        delta0_monomial(m)
            .terms()
            .map(|([a, b], c)| (vec![a.clone(), b.clone()], c.clone()))
            .collect()
    })
}

/// `(ε ⊗ Id)`
pub fn eps_left(x: &Tensor2) -> AlgebraElement {
    AlgebraElement::from_terms(
        x.terms()
            .filter(|([a, _], _)| a.is_unit())
            .map(|([_, b], c)| (b.clone(), c.clone())),
    )
}

/// `(Id ⊗ ε)`
pub fn eps_right(x: &Tensor2) -> AlgebraElement {
    AlgebraElement::from_terms(
        x.terms()
            .filter(|([_, b], _)| b.is_unit())
            .map(|([a, _], c)| (a.clone(), c.clone())),
    )
}

fn s0_slot(x: &Tensor2, slot: usize) -> Tensor2 {
    x.map_slot(slot, |m| {
        s0_monomial(m)
            .terms()
            .map(|(w, c)| (vec![w.clone()], c.clone()))
            .collect()
    })
}

/// `(S° ⊗ Id)`
pub fn s0_left(x: &Tensor2) -> Tensor2 {
    s0_slot(x, 0)
}

/// `(Id ⊗ S°)`
pub fn s0_right(x: &Tensor2) -> Tensor2 {
    s0_slot(x, 1)
}

/// Multiplication `μ(a ⊗ b) = ab`.
pub fn mu(x: &Tensor2) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ([a, b], c) in x.terms() {
        out.add_scaled(&crate::algebra::multiply_monomials(a, b), c);
    }
    out
}

/// Slotwise maps that can be lifted to series of order-2 tensors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotMap {
    Delta0Id,
    IdDelta0,
    EpsId,
    IdEps,
    S0Id,
    IdS0,
}

impl FromStr for SlotMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "Delta0⊗Id" | "Delta0oxId" | "Δ°⊗Id" => Ok(SlotMap::Delta0Id),
            "Id⊗Delta0" | "IdoxDelta0" | "Id⊗Δ°" => Ok(SlotMap::IdDelta0),
            "eps⊗Id" | "epsoxId" | "ε⊗Id" => Ok(SlotMap::EpsId),
            "Id⊗eps" | "Idoxeps" | "Id⊗ε" => Ok(SlotMap::IdEps),
            "S0⊗Id" | "S0oxId" | "S°⊗Id" => Ok(SlotMap::S0Id),
            "Id⊗S0" | "IdoxS0" | "Id⊗S°" => Ok(SlotMap::IdS0),
            _ => Err(Error::UnsupportedMap(s.to_string())),
        }
    }
}

/// Result of lifting a [`SlotMap`] to a series; the coefficient ring depends
/// on the map.
#[derive(Clone, Debug, PartialEq)]
pub enum Lifted {
    Algebra(TruncatedSeries<AlgebraElement>),
    Tensor2(TruncatedSeries<Tensor2>),
    Tensor3(TruncatedSeries<Tensor3>),
}

/// Applies `map` degree by degree.
pub fn lift(map: SlotMap, x: &TruncatedSeries<Tensor2>) -> Lifted {
    match map {
        SlotMap::Delta0Id => Lifted::Tensor3(x.map(delta0_left)),
        SlotMap::IdDelta0 => Lifted::Tensor3(x.map(delta0_right)),
        SlotMap::EpsId => Lifted::Algebra(x.map(eps_left)),
        SlotMap::IdEps => Lifted::Algebra(x.map(eps_right)),
        SlotMap::S0Id => Lifted::Tensor2(x.map(s0_left)),
        SlotMap::IdS0 => Lifted::Tensor2(x.map(s0_right)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hbar_falling, GenKind, Generator, TwistConfig};
    use crate::ring::Ring;
    use crate::scalar::{binomial, int};
    use crate::tensor::tensor3;

    fn g(x: Generator) -> AlgebraElement {
        AlgebraElement::generator(x)
    }

    #[test]
    fn delta0_examples() {
        let one = AlgebraElement::one();
        let l = g(Generator::l(-4));
        assert_eq!(delta0(&l), &tensor2(&l, &one) + &tensor2(&one, &l));
        assert_eq!(delta0(&one), Tensor2::one());

        let cfg = TwistConfig::new(1, GenKind::L, 4).unwrap();
        let zero = int(0);
        let mut expected = Tensor2::zero();
        for k in 0..=2 {
            let t = tensor2(
                &hbar_falling(&cfg, &zero, k),
                &hbar_falling(&cfg, &zero, 2 - k),
            );
            expected.add_scaled(&t, &binomial(&int(2), k));
        }
        assert_eq!(delta0(&hbar_falling(&cfg, &zero, 2)), expected);
    }

    #[test]
    fn s0_examples() {
        assert_eq!(s0(&g(Generator::w(3))), -&g(Generator::w(3)));
        assert_eq!(s0(&AlgebraElement::one()), AlgebraElement::one());
        // S°(L_2 L_1) = L_1 L_2 reordered: S°(L_1 L_2) = L_2 L_1 = L_1 L_2 + L_3
        let w = &g(Generator::l(1)) * &g(Generator::l(2));
        assert_eq!(s0(&w), &g(Generator::l(2)) * &g(Generator::l(1)));
    }

    #[test]
    fn eps_examples() {
        assert_eq!(eps(&g(Generator::l(5))), int(0));
        assert_eq!(eps(&AlgebraElement::one()), int(1));
        let e = &AlgebraElement::scalar(int(3))
            + &(&g(Generator::l(1)) * &g(Generator::w(2))).scale(&int(2));
        assert_eq!(eps(&e), int(3));
    }

    #[test]
    fn lift_examples() {
        let one = TruncatedSeries::<Tensor2>::one(3);
        assert_eq!(
            lift(SlotMap::Delta0Id, &one),
            Lifted::Tensor3(TruncatedSeries::one(3))
        );
        let a = &g(Generator::l(2)) + &g(Generator::w(0));
        let s = TruncatedSeries::new(2, [tensor2(&a, &AlgebraElement::one()), tensor2(&a, &a)]);
        assert_eq!(
            lift(SlotMap::IdEps, &s),
            Lifted::Algebra(TruncatedSeries::new(2, [a.clone()]))
        );
        assert!("Delta⊗Delta".parse::<SlotMap>().is_err());
        assert_eq!("eps ⊗ Id".parse::<SlotMap>(), Ok(SlotMap::EpsId));
    }

    #[test]
    fn delta0_right_matches_definition() {
        let a = g(Generator::l(1));
        let b = g(Generator::w(-1));
        let t = tensor2(&a, &b);
        let one = AlgebraElement::one();
        let expected = &tensor3(&a, &b, &one) + &tensor3(&a, &one, &b);
        assert_eq!(delta0_right(&t), expected);
        assert!(Ring::is_zero(
            &(&delta0_left(&t) - &(&tensor3(&a, &one, &b) + &tensor3(&one, &a, &b)))
        ));
    }
}
