//! The enveloping algebra U(W(2,2)) over ℚ in PBW normal form.
//!
//! Generators are ordered with every `L` before every `W` and by ascending
//! index within a kind. A monomial is a non-decreasing word in that order.
//! Products are straightened by swapping adjacent out-of-order generators,
//! `h·g = g·h + [h, g]`, until every word is sorted.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::Error;
use crate::mutation::{self, Mutation};
use crate::ring::{Ring, TermDiff};
use crate::scalar::{self, int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    L,
    W,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::L => "L",
            GenKind::W => "W",
        })
    }
}

impl std::str::FromStr for GenKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "L" | "l" => Ok(GenKind::L),
            "W" | "w" => Ok(GenKind::W),
            _ => Err(Error::Malformed(format!("unknown generator kind `{s}`"))),
        }
    }
}

/// A basis vector `L_n` or `W_n` of the Lie algebra. The derived order is the
/// PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: i64,
}

impl Generator {
    pub const fn l(index: i64) -> Self {
        Generator {
            kind: GenKind::L,
            index,
        }
    }

    pub const fn w(index: i64) -> Self {
        Generator {
            kind: GenKind::W,
            index,
        }
    }

    pub const fn new(kind: GenKind, index: i64) -> Self {
        Generator { kind, index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if (0..10).contains(&self.index) {
            write!(f, "{}_{}", self.kind, self.index)
        } else {
            write!(f, "{}_{{{}}}", self.kind, self.index)
        }
    }
}

/// Serialized as its display form, e.g. `"W_{-2}"`.
impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A sorted word of generators. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[Generator; 6]>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn from_generators(gens: impl IntoIterator<Item = Generator>) -> Self {
        let mut word: SmallVec<[Generator; 6]> = gens.into_iter().collect();
        word.sort_unstable();
        Monomial(word)
    }

    /// Builds a monomial from `(generator, exponent)` pairs in any order.
    pub fn from_powers(powers: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        Self::from_generators(
            powers
                .into_iter()
                .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize)),
        )
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// ℤ-degree: the sum of generator indices.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|g| g.index).sum()
    }

    /// Run-length form `[(g, e), ...]` in PBW order.
    pub fn powers(&self) -> Vec<(Generator, u32)> {
        let mut out: Vec<(Generator, u32)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    fn last(&self) -> Option<Generator> {
        self.0.last().copied()
    }

    fn pushed(&self, g: Generator) -> Self {
        let mut word = self.0.clone();
        word.push(g);
        Monomial(word)
    }

    fn popped(&self) -> Self {
        Monomial(SmallVec::from_slice(&self.0[..self.0.len() - 1]))
    }
}

// Graded lexicographic: shorter words first, so the unit leads.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.powers().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite ℚ-linear combination of PBW monomials. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(Monomial::unit(), s)
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Monomial::from_generators([g]), Scalar::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::unit())
    }

    /// `Some(d)` when every term has degree `d`; the zero element is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// If the element is `c·g` for a single generator, returns `(c, g)`.
    pub fn as_scaled_generator(&self) -> Option<(Scalar, Generator)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        match m.generators() {
            [g] => Some((c.clone(), *g)),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| multiply(&acc, self))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_unit() {
                f.write_str(&scalar::display(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", scalar::display(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        multiply(self, rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(AlgebraElement, Add add, Sub sub, Mul mul);

impl Ring for AlgebraElement {
    fn zero() -> Self {
        AlgebraElement::zero()
    }
    fn one() -> Self {
        AlgebraElement::one()
    }
    fn is_zero(&self) -> bool {
        AlgebraElement::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        multiply(self, other)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }
    fn first_difference(&self, other: &Self) -> Option<TermDiff> {
        first_difference(&self.terms, &other.terms, |m| m.to_string())
    }
}

pub(crate) fn first_difference<K: Ord>(
    a: &BTreeMap<K, Scalar>,
    b: &BTreeMap<K, Scalar>,
    name: impl Fn(&K) -> String,
) -> Option<TermDiff> {
    let mut keys: Vec<&K> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let lhs = a.get(k).cloned().unwrap_or_else(Scalar::zero);
        let rhs = b.get(k).cloned().unwrap_or_else(Scalar::zero);
        (lhs != rhs).then(|| TermDiff {
            term: name(k),
            lhs,
            rhs,
        })
    })
}

/// Structure constants: `[g, h] = c · k` as `Some((c, k))`, or `None` when the
/// bracket vanishes.
fn structure(g: Generator, h: Generator) -> Option<(i64, Generator)> {
    let (m, n) = (g.index, h.index);
    let c = if mutation::is_active(Mutation::BracketSignFlip) {
        m + n
    } else {
        m - n
    };
    let kind = match (g.kind, h.kind) {
        (GenKind::L, GenKind::L) => GenKind::L,
        (GenKind::L, GenKind::W) | (GenKind::W, GenKind::L) => GenKind::W,
        (GenKind::W, GenKind::W) => return None,
    };
    (c != 0).then_some((c, Generator::new(kind, m + n)))
}

/// The Lie bracket of two basis vectors as an algebra element.
pub fn bracket_basis(g: Generator, h: Generator) -> AlgebraElement {
    match structure(g, h) {
        Some((c, k)) => AlgebraElement::term(Monomial::from_generators([k]), int(c)),
        None => AlgebraElement::zero(),
    }
}

const CACHE_LIMIT: usize = 1 << 21;

#[derive(Default)]
struct MulCache {
    epoch: u64,
    right: HashMap<(Monomial, Generator), AlgebraElement>,
}

thread_local! {
    static CACHE: RefCell<MulCache> = RefCell::new(MulCache::default());
}

fn cached(w: &Monomial, g: Generator) -> Option<AlgebraElement> {
    let epoch = mutation::epoch();
    CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.epoch != epoch {
            c.right.clear();
            c.epoch = epoch;
        }
        c.right.get(&(w.clone(), g)).cloned()
    })
}

fn store(w: &Monomial, g: Generator, value: &AlgebraElement) {
    CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.right.len() >= CACHE_LIMIT {
            c.right.clear();
        }
        c.right.insert((w.clone(), g), value.clone());
    })
}

/// `w · g` in normal form.
fn right_mul_generator(w: &Monomial, g: Generator) -> AlgebraElement {
    let h = match w.last() {
        Some(h) if h > g => h,
        _ => return AlgebraElement::monomial(w.pushed(g)),
    };
    if let Some(hit) = cached(w, g) {
        return hit;
    }
    // w'·h·g = (w'·g)·h + w'·[h, g]
    let prefix = w.popped();
    let mut out = AlgebraElement::zero();
    for (m, c) in right_mul_generator(&prefix, g).terms() {
        out.add_scaled(&right_mul_generator(m, h), c);
    }
    if !mutation::is_active(Mutation::WrongSwap) {
        if let Some((c, k)) = structure(h, g) {
            out.add_scaled(&right_mul_generator(&prefix, k), &int(c));
        }
    }
    store(w, g, &out);
    out
}

/// Product of two PBW words.
pub fn multiply_monomials(a: &Monomial, b: &Monomial) -> AlgebraElement {
    match (a.last(), b.generators().first()) {
        (None, _) => return AlgebraElement::monomial(b.clone()),
        (_, None) => return AlgebraElement::monomial(a.clone()),
        (Some(x), Some(&y)) if x <= y => {
            let mut word = a.0.clone();
            word.extend_from_slice(&b.0);
            return AlgebraElement::monomial(Monomial(word));
        }
        _ => {}
    }
    let mut acc = AlgebraElement::monomial(a.clone());
    for &g in b.generators() {
        let mut next = AlgebraElement::zero();
        for (m, c) in acc.terms() {
            next.add_scaled(&right_mul_generator(m, g), c);
        }
        acc = next;
    }
    acc
}

/// Product in U(W(2,2)), returned in PBW normal form.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.add_scaled(&multiply_monomials(ma, mb), &(ca * cb));
        }
    }
    out
}

/// Commutator `ab - ba`.
pub fn bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    &multiply(a, b) - &multiply(b, a)
}

/// `(ad x)^k (y)`.
pub fn ad_power(x: &AlgebraElement, k: u32, y: &AlgebraElement) -> AlgebraElement {
    (0..k).fold(y.clone(), |acc, _| bracket(x, &acc))
}

/// Twist parameters: `n0 ≠ 0`, which generator plays `X`, and the
/// truncation order `N` in `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistConfig {
    n0: i64,
    twist_kind: GenKind,
    order: usize,
}

impl TwistConfig {
    pub fn new(n0: i64, twist_kind: GenKind, order: usize) -> Result<Self, Error> {
        if n0 == 0 {
            return Err(Error::ZeroN0);
        }
        Ok(TwistConfig {
            n0,
            twist_kind,
            order,
        })
    }

    pub fn n0(&self) -> i64 {
        self.n0
    }

    pub fn twist_kind(&self) -> GenKind {
        self.twist_kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn with_order(self, order: usize) -> Self {
        TwistConfig { order, ..self }
    }

    /// `X = L_{n0}` or `W_{n0}`.
    pub fn x(&self) -> Generator {
        Generator::new(self.twist_kind, self.n0)
    }
}

impl fmt::Display for TwistConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={}, n0={}, N={}", self.x(), self.n0, self.order)
    }
}

/// `ħ = -L_0 / n0`.
pub fn hbar(cfg: &TwistConfig) -> AlgebraElement {
    AlgebraElement::generator(Generator::l(0)).scale(&scalar::rat(-1, cfg.n0()))
}

/// `y_b^{<i>} = (y+b)(y+b+1)...(y+b+i-1)`.
pub fn rising_factorial(y: &AlgebraElement, b: &Scalar, i: u32) -> AlgebraElement {
    shifted_product(y, b, i, 1)
}

/// `y_b^{[i]} = (y+b)(y+b-1)...(y+b-i+1)`.
pub fn falling_factorial(y: &AlgebraElement, b: &Scalar, i: u32) -> AlgebraElement {
    shifted_product(y, b, i, -1)
}

fn shifted_product(y: &AlgebraElement, b: &Scalar, i: u32, step: i64) -> AlgebraElement {
    (0..i as i64).fold(AlgebraElement::one(), |acc, k| {
        let factor = y + &AlgebraElement::scalar(b + int(step * k));
        multiply(&acc, &factor)
    })
}

pub fn hbar_rising(cfg: &TwistConfig, b: &Scalar, i: u32) -> AlgebraElement {
    rising_factorial(&hbar(cfg), b, i)
}

pub fn hbar_falling(cfg: &TwistConfig, b: &Scalar, i: u32) -> AlgebraElement {
    falling_factorial(&hbar(cfg), b, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn g(x: Generator) -> AlgebraElement {
        AlgebraElement::generator(x)
    }

    fn word(gens: &[Generator]) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::from_generators(gens.iter().copied()))
    }

    #[test]
    fn generator_order() {
        assert!(Generator::l(100) < Generator::w(-100));
        assert!(Generator::l(-1) < Generator::l(0));
        assert!(Generator::w(2) < Generator::w(3));
        assert_ne!(Generator::l(1), Generator::w(1));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            bracket_basis(Generator::l(2), Generator::l(1)),
            g(Generator::l(3))
        );
        assert!(bracket_basis(Generator::l(4), Generator::l(4)).is_zero());
        assert!(bracket_basis(Generator::w(1), Generator::w(5)).is_zero());
        assert_eq!(
            bracket_basis(Generator::l(1), Generator::w(-1)),
            g(Generator::w(0)).scale(&int(2))
        );
        // [W_m, L_n] = -(n-m) W_{m+n}
        assert_eq!(
            bracket_basis(Generator::w(3), Generator::l(1)),
            g(Generator::w(4)).scale(&int(2))
        );
    }

    #[test]
    fn multiply_examples() {
        let l1 = g(Generator::l(1));
        let l2 = g(Generator::l(2));
        let expected = &word(&[Generator::l(1), Generator::l(2)]) + &g(Generator::l(3));
        assert_eq!(multiply(&l2, &l1), expected);

        let w3 = g(Generator::w(3));
        let wm3 = g(Generator::w(-3));
        assert_eq!(
            multiply(&w3, &wm3),
            word(&[Generator::w(-3), Generator::w(3)])
        );
        assert_eq!(multiply(&AlgebraElement::one(), &l2), l2);
        assert_eq!(multiply(&l2, &AlgebraElement::one()), l2);
    }

    #[test]
    fn w_before_l_straightens() {
        // W_1 L_0 = L_0 W_1 + [W_1, L_0] = L_0 W_1 + W_1
        let lhs = multiply(&g(Generator::w(1)), &g(Generator::l(0)));
        let rhs = &word(&[Generator::l(0), Generator::w(1)]) + &g(Generator::w(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_power_examples() {
        let out = ad_power(&g(Generator::l(1)), 2, &g(Generator::l(3)));
        assert_eq!(out, g(Generator::l(5)).scale(&int(6)));
        let y = g(Generator::l(-2));
        assert_eq!(ad_power(&g(Generator::l(7)), 0, &y), y);
        assert!(ad_power(&g(Generator::w(1)), 2, &g(Generator::l(0))).is_zero());
    }

    #[test]
    fn hbar_examples() {
        let c1 = TwistConfig::new(1, GenKind::L, 4).unwrap();
        assert_eq!(hbar(&c1), g(Generator::l(0)).scale(&int(-1)));
        let c2 = TwistConfig::new(-2, GenKind::L, 4).unwrap();
        assert_eq!(hbar(&c2), g(Generator::l(0)).scale(&rat(1, 2)));
        let c3 = TwistConfig::new(3, GenKind::L, 4).unwrap();
        let x = g(c3.x());
        assert_eq!(bracket(&hbar(&c3), &x), x);
        assert_eq!(TwistConfig::new(0, GenKind::W, 1), Err(Error::ZeroN0));
    }

    #[test]
    fn factorial_examples() {
        let cfg = TwistConfig::new(1, GenKind::L, 4).unwrap();
        let b = rat(1, 2);
        assert_eq!(hbar_rising(&cfg, &b, 0), AlgebraElement::one());
        assert_eq!(hbar_falling(&cfg, &b, 0), AlgebraElement::one());
        assert_eq!(
            hbar_rising(&cfg, &b, 1),
            &hbar(&cfg) + &AlgebraElement::scalar(b.clone())
        );
        // y_b^{[m]} = y_{b-m+1}^{<m>} at (b, m) = (2, 3)
        assert_eq!(
            hbar_falling(&cfg, &int(2), 3),
            hbar_rising(&cfg, &int(0), 3)
        );
    }

    #[test]
    fn display_forms() {
        let w = word(&[Generator::l(1), Generator::l(1), Generator::w(-2)]).scale(&rat(-3, 2));
        let e = &w + &AlgebraElement::scalar(int(2));
        assert_eq!(e.to_string(), "2 - 3/2 L_1^2 W_{-2}");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
    }
}
