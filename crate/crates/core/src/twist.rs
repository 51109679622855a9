//! Twist elements and the twisted Hopf structure.
//!
//! For a fixed [`TwistConfig`] with `X = L_{n0}` or `W_{n0}` and `ħ = -L_0/n0`:
//!
//! ```text
//! C_b = Σ_k (1/k!)      ħ_b^{<k>} ⊗ X^k t^k      U_b = μ(S° ⊗ Id)(C_b)
//! D_b = Σ_k ((-1)^k/k!) ħ_b^{[k]} ⊗ X^k t^k      V_b = μ(Id ⊗ S°)(D_b)
//! ```
//!
//! The twisted coproduct is `Δ(a) = D Δ°(a) D⁻¹` with `D⁻¹ = C` and the
//! twisted antipode is `S(a) = U⁻¹ S°(a) U` with `U⁻¹ = V`, where
//! `C, D, U, V` are the `b = 0` elements.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    ad_power, bracket, falling_factorial, hbar, rising_factorial, AlgebraElement, Generator,
    Monomial, TwistConfig,
};
use crate::hopf::{self, delta0, mu, s0};
use crate::mutation::{self, Mutation};
use crate::scalar::{factorial, int, rat, Scalar};
use crate::series::{one_minus_xt_power_with, x_powers, TruncatedSeries};
use crate::tensor::{tensor2, Tensor2, Tensor3};

pub type AlgSeries = TruncatedSeries<AlgebraElement>;
pub type T2Series = TruncatedSeries<Tensor2>;
pub type T3Series = TruncatedSeries<Tensor3>;

#[derive(Clone, Debug, PartialEq)]
pub struct TwistElements {
    pub cfg: TwistConfig,
    pub b: Scalar,
    pub c: T2Series,
    pub d: T2Series,
    pub u: AlgSeries,
    pub v: AlgSeries,
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Builds `C_b, D_b, U_b, V_b` truncated at `cfg.order()`.
pub fn build_twist(cfg: &TwistConfig, b: &Scalar) -> TwistElements {
    build_twist_with(cfg, &x_powers(cfg), b)
}

fn build_twist_with(cfg: &TwistConfig, powers: &[AlgebraElement], b: &Scalar) -> TwistElements {
    let h = hbar(cfg);
    let n = cfg.order();
    let c = TruncatedSeries::new(
        n,
        (0..=n).map(|k| {
            let coeff = Scalar::one() / factorial(k as u32);
            tensor2(&rising_factorial(&h, b, k as u32), &powers[k]).scale(&coeff)
        }),
    );
    let d = TruncatedSeries::new(
        n,
        (0..=n).map(|k| {
            if k == 2 && mutation::is_active(Mutation::DropTwistT2) {
                return Tensor2::zero();
            }
            let coeff = sign(k) / factorial(k as u32);
            tensor2(&falling_factorial(&h, b, k as u32), &powers[k]).scale(&coeff)
        }),
    );
    let u = c.map(|t| mu(&hopf::s0_left(t)));
    let v = d.map(|t| mu(&hopf::s0_right(t)));
    TwistElements {
        cfg: *cfg,
        b: b.clone(),
        c,
        d,
        u,
        v,
    }
}

/// Which factorial the printed antipode formulas multiply by:
/// `ħ_k^{<k>}` as printed in the theorems, or `ħ_k^{[k]}` as produced at the
/// end of the corresponding derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorialVariant {
    Rising,
    Falling,
}

impl FactorialVariant {
    pub const BOTH: [FactorialVariant; 2] = [FactorialVariant::Rising, FactorialVariant::Falling];

    pub fn name(self) -> &'static str {
        match self {
            FactorialVariant::Rising => "rising",
            FactorialVariant::Falling => "falling",
        }
    }
}

/// The two printed sign conventions for the `ad ħ` weight of `L_n`, `W_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightReading {
    /// `n / n0`
    Plus,
    /// `-n / n0`
    Minus,
}

impl WeightReading {
    pub const BOTH: [WeightReading; 2] = [WeightReading::Plus, WeightReading::Minus];

    pub fn value(self, n: i64, n0: i64) -> Scalar {
        match self {
            WeightReading::Plus => rat(n, n0),
            WeightReading::Minus => rat(-n, n0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightReading::Plus => "+n/n0",
            WeightReading::Minus => "-n/n0",
        }
    }
}

/// `b_k` for one `n`, read off from the iterated adjoint action.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistCoefficients {
    pub n: i64,
    pub values: Vec<Scalar>,
}

/// `(1/k!) Π_{p<k} ((1-p) n0 - n)`, the product with `p` as running index.
pub fn bk_product_formula(n0: &Scalar, n: i64, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for p in 0..k as i64 {
        acc *= (int(1) - int(p)) * n0 - int(n);
    }
    acc / factorial(k)
}

/// A quantization context: configuration, `ħ`, powers of `X` and the
/// `b = 0` twist elements.
#[derive(Clone, Debug)]
pub struct Quantization {
    cfg: TwistConfig,
    hbar: AlgebraElement,
    powers: Vec<AlgebraElement>,
    base: TwistElements,
}

impl Quantization {
    pub fn new(cfg: TwistConfig) -> Self {
        let powers = x_powers(&cfg);
        let base = build_twist_with(&cfg, &powers, &Scalar::zero());
        Quantization {
            cfg,
            hbar: hbar(&cfg),
            powers,
            base,
        }
    }

    pub fn cfg(&self) -> &TwistConfig {
        &self.cfg
    }

    pub fn order(&self) -> usize {
        self.cfg.order()
    }

    pub fn hbar(&self) -> &AlgebraElement {
        &self.hbar
    }

    pub fn x(&self) -> AlgebraElement {
        AlgebraElement::generator(self.cfg.x())
    }

    pub fn x_power(&self, k: usize) -> &AlgebraElement {
        &self.powers[k]
    }

    pub fn base(&self) -> &TwistElements {
        &self.base
    }

    pub fn twist(&self, b: &Scalar) -> TwistElements {
        if b.is_zero() {
            return self.base.clone();
        }
        build_twist_with(&self.cfg, &self.powers, b)
    }

    pub fn one_minus_xt(&self, q: &Scalar) -> AlgSeries {
        one_minus_xt_power_with(&self.powers, q)
    }

    pub fn hbar_rising(&self, b: &Scalar, i: u32) -> AlgebraElement {
        rising_factorial(&self.hbar, b, i)
    }

    pub fn hbar_falling(&self, b: &Scalar, i: u32) -> AlgebraElement {
        falling_factorial(&self.hbar, b, i)
    }

    /// The eigenvalue `λ` in `[ħ, g] = λ g`. Every basis vector is an
    /// eigenvector of `ad ħ`, so this always exists.
    pub fn weight(&self, g: Generator) -> Scalar {
        let x = AlgebraElement::generator(g);
        let image = bracket(&self.hbar, &x);
        if image.is_zero() {
            return Scalar::zero();
        }
        match image.as_scaled_generator() {
            Some((c, h)) if h == g => c,
            _ => panic!("{g} is not an ad-eigenvector of ħ: [ħ, {g}] = {image}"),
        }
    }

    /// `(ad X)^k (g) / k!`, which is `b_k` times the generator of index
    /// `n + k n0` (zero once the action leaves the algebra's support).
    pub fn ad_term(&self, k: u32, g: Generator) -> AlgebraElement {
        ad_power(&self.x(), k, &AlgebraElement::generator(g)).scale(&(Scalar::one() / factorial(k)))
    }

    /// `b_0, ..., b_kmax` for `L_n`, from the adjoint action.
    pub fn bk_coefficients(&self, n: i64, kmax: u32) -> TwistCoefficients {
        let values = (0..=kmax)
            .map(|k| {
                let term = self.ad_term(k, Generator::l(n));
                term.as_scaled_generator()
                    .map(|(c, _)| c)
                    .unwrap_or_else(Scalar::zero)
            })
            .collect();
        TwistCoefficients { n, values }
    }

    /// `D Δ°(a) D⁻¹`.
    pub fn delta(&self, a: &AlgebraElement) -> T2Series {
        let n = self.order();
        let mid = TruncatedSeries::constant(n, delta0(a));
        self.base
            .d
            .mul(&mid)
            .and_then(|s| s.mul(&self.base.c))
            .expect("orders agree by construction")
    }

    /// `U⁻¹ S°(a) U` with `U⁻¹ = V`.
    pub fn antipode(&self, a: &AlgebraElement) -> AlgSeries {
        let n = self.order();
        let mid = TruncatedSeries::constant(n, s0(a));
        self.base
            .v
            .mul(&mid)
            .and_then(|s| s.mul(&self.base.u))
            .expect("orders agree by construction")
    }

    /// Closed form for `Δ(g)` with weight `nn`:
    /// `g ⊗ (1-Xt)^nn + Σ_k (-1)^k ħ^{<k>} ⊗ (1-Xt)^{-k} Y_k t^k` with
    /// `Y_k = (ad X)^k(g)/k!`.
    pub fn closed_form_delta(&self, g: Generator, nn: &Scalar) -> T2Series {
        self.closed_form_delta_with(g, nn, |k| self.ad_term(k, g))
    }

    /// [`Self::closed_form_delta`] with the coefficients `Y_k` supplied.
    pub fn closed_form_delta_with(
        &self,
        g: Generator,
        nn: &Scalar,
        coeff: impl Fn(u32) -> AlgebraElement,
    ) -> T2Series {
        let n = self.order();
        let ga = AlgebraElement::generator(g);
        let mut out = self.one_minus_xt(nn).map(|p| tensor2(&ga, p));
        for k in 0..=n {
            let y = coeff(k as u32);
            if y.is_zero() {
                continue;
            }
            let left = self.hbar_rising(&Scalar::zero(), k as u32).scale(&sign(k));
            let right = self.one_minus_xt(&-int(k as i64)).mul_right(&y);
            let term = right.map(|r| tensor2(&left, r)).shift(k);
            out = out.add(&term).expect("same order");
        }
        out
    }

    /// Closed form for `S(g)` with weight `nn`:
    /// `-(1-Xt)^{-nn} Σ_k Y_k F_k t^k` where `F_k` is `ħ_k^{<k>}` or
    /// `ħ_k^{[k]}`.
    pub fn closed_form_antipode(
        &self,
        g: Generator,
        nn: &Scalar,
        variant: FactorialVariant,
    ) -> AlgSeries {
        self.closed_form_antipode_with(nn, variant, |k| self.ad_term(k, g))
    }

    /// [`Self::closed_form_antipode`] with the coefficients `Y_k` supplied.
    pub fn closed_form_antipode_with(
        &self,
        nn: &Scalar,
        variant: FactorialVariant,
        coeff: impl Fn(u32) -> AlgebraElement,
    ) -> AlgSeries {
        let n = self.order();
        let mut sum = AlgSeries::zero(n);
        for k in 0..=n {
            let y = coeff(k as u32);
            if y.is_zero() {
                continue;
            }
            let shift = int(k as i64);
            let f = match variant {
                FactorialVariant::Rising => self.hbar_rising(&shift, k as u32),
                FactorialVariant::Falling => self.hbar_falling(&shift, k as u32),
            };
            let term = AlgSeries::monomial(n, k, &y * &f);
            sum = sum.add(&term).expect("same order");
        }
        self.one_minus_xt(&-nn.clone())
            .mul(&sum)
            .expect("same order")
            .neg()
    }

    fn delta_memo<'a>(
        &self,
        memo: &'a mut HashMap<Monomial, T2Series>,
        m: &Monomial,
    ) -> &'a T2Series {
        memo.entry(m.clone())
            .or_insert_with(|| self.delta(&AlgebraElement::monomial(m.clone())))
    }

    /// `(Δ ⊗ Id)` on a series of order-2 tensors.
    pub fn delta_id(&self, x: &T2Series) -> T3Series {
        self.delta_slot(x, 0)
    }

    /// `(Id ⊗ Δ)` on a series of order-2 tensors.
    pub fn id_delta(&self, x: &T2Series) -> T3Series {
        self.delta_slot(x, 1)
    }

    fn delta_slot(&self, x: &T2Series, slot: usize) -> T3Series {
        let n = x.order();
        assert_eq!(n, self.order(), "series order must match the context");
        let mut memo = HashMap::new();
        let mut coeffs = vec![Tensor3::zero(); n + 1];
        for (j, coeff) in x.coeffs().iter().enumerate() {
            for (key, c) in coeff.terms() {
                let image = self.delta_memo(&mut memo, &key[slot]).clone();
                for (l, part) in image.coeffs()[..=n - j].iter().enumerate() {
                    for ([p, q], d) in part.terms() {
                        let k3 = if slot == 0 {
                            [p.clone(), q.clone(), key[1].clone()]
                        } else {
                            [key[0].clone(), p.clone(), q.clone()]
                        };
                        coeffs[j + l].add_term(k3, c * d);
                    }
                }
            }
        }
        TruncatedSeries::new(n, coeffs)
    }

    /// `μ (S ⊗ Id)` on a series of order-2 tensors.
    pub fn mu_s_id(&self, x: &T2Series) -> AlgSeries {
        self.mu_antipode_slot(x, 0)
    }

    /// `μ (Id ⊗ S)` on a series of order-2 tensors.
    pub fn mu_id_s(&self, x: &T2Series) -> AlgSeries {
        self.mu_antipode_slot(x, 1)
    }

    fn mu_antipode_slot(&self, x: &T2Series, slot: usize) -> AlgSeries {
        let n = x.order();
        assert_eq!(n, self.order(), "series order must match the context");
        let mut memo: HashMap<Monomial, AlgSeries> = HashMap::new();
        let mut out = AlgSeries::zero(n);
        for (j, coeff) in x.coeffs().iter().enumerate() {
            for ([a, b], c) in coeff.terms() {
                let target = if slot == 0 { a } else { b };
                let image = memo
                    .entry(target.clone())
                    .or_insert_with(|| self.antipode(&AlgebraElement::monomial(target.clone())))
                    .clone();
                let other = AlgebraElement::monomial(if slot == 0 { b.clone() } else { a.clone() });
                let product = if slot == 0 {
                    image.mul_right(&other)
                } else {
                    image.mul_left(&other)
                };
                out = out.add(&product.shift(j).scale(c)).expect("same order");
            }
        }
        out
    }
}

/// `D Δ°(a) D⁻¹` for a fresh context.
pub fn twisted_delta(cfg: &TwistConfig, a: &AlgebraElement) -> T2Series {
    Quantization::new(*cfg).delta(a)
}

/// `U⁻¹ S°(a) U` for a fresh context.
pub fn twisted_antipode(cfg: &TwistConfig, a: &AlgebraElement) -> AlgSeries {
    Quantization::new(*cfg).antipode(a)
}

pub fn bk_coefficients(cfg: &TwistConfig, n: i64, kmax: u32) -> TwistCoefficients {
    Quantization::new(cfg.with_order(0)).bk_coefficients(n, kmax)
}

/// Closed-form `Δ(g)` with the weight taken from `ad ħ`.
pub fn closed_form_delta(cfg: &TwistConfig, g: Generator) -> T2Series {
    let q = Quantization::new(*cfg);
    let nn = q.weight(g);
    q.closed_form_delta(g, &nn)
}

/// Closed-form `S(g)` with the weight taken from `ad ħ`.
pub fn closed_form_antipode(
    cfg: &TwistConfig,
    g: Generator,
    variant: FactorialVariant,
) -> AlgSeries {
    let q = Quantization::new(*cfg);
    let nn = q.weight(g);
    q.closed_form_antipode(g, &nn, variant)
}
