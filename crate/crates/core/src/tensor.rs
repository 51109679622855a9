//! Tensor powers `U ⊗ U` and `U ⊗ U ⊗ U` with slotwise multiplication
//! `(a⊗b)(c⊗d) = ac ⊗ bd`. There are no grading signs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{multiply_monomials, AlgebraElement, Monomial};
use crate::error::Error;
use crate::ring::{Ring, TermDiff};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const K: usize> {
    terms: BTreeMap<[Monomial; K], Scalar>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const K: usize> Default for Tensor<K> {
    fn default() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }
}

impl<const K: usize> Tensor<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(std::array::from_fn(|_| Monomial::unit()), Scalar::one())
    }

    pub fn term(key: [Monomial; K], c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    /// Outer product of `K` algebra elements.
    pub fn outer(factors: [&AlgebraElement; K]) -> Self {
        let mut partial: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::with_capacity(partial.len() * f.len());
            for (key, c) in &partial {
                for (m, d) in f.terms() {
                    let mut k = key.clone();
                    k.push(m.clone());
                    next.push((k, c * d));
                }
            }
            partial = next;
        }
        let mut out = Self::zero();
        for (key, c) in partial {
            out.add_term(to_array(key), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial; K], &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[Monomial; K]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: [Monomial; K], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Per-slot degrees of a term, summed over slots.
    pub fn slot_degrees(key: &[Monomial; K]) -> [i64; K] {
        std::array::from_fn(|i| key[i].degree())
    }

    /// Applies a linear map monomial-by-monomial to one slot, collecting into
    /// a tensor of order `M`. `f` returns the image of a monomial in slot
    /// `slot`; the other slots are carried through and spliced around it.
    pub fn map_slot<const M: usize>(
        &self,
        slot: usize,
        f: impl Fn(&Monomial) -> Vec<(Vec<Monomial>, Scalar)>,
    ) -> Tensor<M> {
        let mut out = Tensor::<M>::zero();
        for (key, c) in &self.terms {
            for (image, d) in f(&key[slot]) {
                let mut k: Vec<Monomial> = Vec::with_capacity(M);
                k.extend_from_slice(&key[..slot]);
                k.extend(image);
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(to_array(k), c * &d);
            }
        }
        out
    }

    /// Slotwise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let slots: [AlgebraElement; K] =
                    std::array::from_fn(|i| multiply_monomials(&ka[i], &kb[i]));
                let refs: [&AlgebraElement; K] = std::array::from_fn(|i| &slots[i]);
                out.add_scaled(&Tensor::outer(refs), &(ca * cb));
            }
        }
        out
    }
}

fn to_array<const K: usize>(v: Vec<Monomial>) -> [Monomial; K] {
    v.try_into()
        .unwrap_or_else(|v: Vec<Monomial>| panic!("expected {K} slots, got {}", v.len()))
}

pub fn tensor2(a: &AlgebraElement, b: &AlgebraElement) -> Tensor2 {
    Tensor::outer([a, b])
}

pub fn tensor3(a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> Tensor3 {
    Tensor::outer([a, b, c])
}

pub fn mul2(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    x.mul(y)
}

pub fn mul3(x: &Tensor3, y: &Tensor3) -> Tensor3 {
    x.mul(y)
}

/// Where an order-2 tensor lands inside an order-3 one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotPattern {
    /// `x ⊗ 1`
    Left,
    /// `1 ⊗ x`
    Right,
}

impl std::str::FromStr for SlotPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.replace(' ', "").as_str() {
            "x⊗1" | "xox1" | "D⊗1" | "Dox1" | "left" => Ok(SlotPattern::Left),
            "1⊗x" | "1oxx" | "1⊗D" | "1oxD" | "right" => Ok(SlotPattern::Right),
            _ => Err(Error::InvalidSlotPattern(s.to_string())),
        }
    }
}

pub fn embed(pattern: SlotPattern, x: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ([a, b], c) in x.terms() {
        let key = match pattern {
            SlotPattern::Left => [a.clone(), b.clone(), Monomial::unit()],
            SlotPattern::Right => [Monomial::unit(), a.clone(), b.clone()],
        };
        out.add_term(key, c.clone());
    }
    out
}

impl<const K: usize> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let neg = scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{} ", scalar::display(&abs))?;
            }
            let slots: Vec<String> = key.iter().map(|m| m.to_string()).collect();
            f.write_str(&slots.join(" ⊗ "))?;
        }
        Ok(())
    }
}

impl<const K: usize> Add for &Tensor<K> {
    type Output = Tensor<K>;
    fn add(self, rhs: &Tensor<K>) -> Tensor<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<const K: usize> Sub for &Tensor<K> {
    type Output = Tensor<K>;
    fn sub(self, rhs: &Tensor<K>) -> Tensor<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<const K: usize> Mul for &Tensor<K> {
    type Output = Tensor<K>;
    fn mul(self, rhs: &Tensor<K>) -> Tensor<K> {
        Tensor::mul(self, rhs)
    }
}

impl<const K: usize> Neg for &Tensor<K> {
    type Output = Tensor<K>;
    fn neg(self) -> Tensor<K> {
        self.scale(&-Scalar::one())
    }
}

impl<const K: usize> Ring for Tensor<K> {
    fn zero() -> Self {
        Tensor::zero()
    }
    fn one() -> Self {
        Tensor::one()
    }
    fn is_zero(&self) -> bool {
        Tensor::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        Tensor::mul(self, other)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }
    fn first_difference(&self, other: &Self) -> Option<TermDiff> {
        crate::algebra::first_difference(&self.terms, &other.terms, |k| {
            k.iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" ⊗ ")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hbar, GenKind, Generator, TwistConfig};
    use crate::scalar::int;

    fn g(x: Generator) -> AlgebraElement {
        AlgebraElement::generator(x)
    }

    #[test]
    fn tensor2_examples() {
        let one = AlgebraElement::one();
        let t = tensor2(&g(Generator::l(1)), &one);
        assert_eq!(
            t,
            Tensor2::term(
                [
                    Monomial::from_generators([Generator::l(1)]),
                    Monomial::unit()
                ],
                int(1)
            )
        );
        assert!(tensor2(&AlgebraElement::zero(), &g(Generator::w(2))).is_zero());

        let cfg = TwistConfig::new(1, GenKind::L, 3).unwrap();
        let expected = tensor2(&g(Generator::l(0)).scale(&int(-1)), &g(Generator::l(1)));
        assert_eq!(tensor2(&hbar(&cfg), &g(cfg.x())), expected);
    }

    #[test]
    fn mul2_examples() {
        let one = AlgebraElement::one();
        let a = &g(Generator::l(2)) + &g(Generator::w(-1));
        let b = g(Generator::l(-3));
        assert_eq!(
            mul2(&tensor2(&a, &one), &tensor2(&one, &b)),
            tensor2(&a, &b)
        );

        let cfg = TwistConfig::new(2, GenKind::L, 3).unwrap();
        let h = hbar(&cfg);
        let ln = g(Generator::l(5));
        assert_eq!(
            mul2(&tensor2(&one, &ln), &tensor2(&h, &one)),
            tensor2(&h, &ln)
        );

        let x = g(cfg.x());
        let hx = tensor2(&h, &x);
        assert_eq!(mul2(&hx, &hx), tensor2(&(&h * &h), &(&x * &x)));
    }

    #[test]
    fn embed_examples() {
        let a = g(Generator::l(1));
        let b = g(Generator::w(2));
        let one = AlgebraElement::one();
        let t = tensor2(&a, &b);
        assert_eq!(embed(SlotPattern::Left, &t), tensor3(&a, &b, &one));
        assert_eq!(embed(SlotPattern::Right, &t), tensor3(&one, &a, &b));
        assert_eq!("D ⊗ 1".parse::<SlotPattern>(), Ok(SlotPattern::Left));
        assert!("1⊗1⊗x".parse::<SlotPattern>().is_err());
    }
}
