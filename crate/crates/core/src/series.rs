//! Truncated formal power series in the deformation parameter `t`.
//!
//! A series carries its truncation order `N` and exactly `N + 1` coefficients.
//! Binary operations refuse to mix orders.

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, Monomial, TwistConfig};
use crate::error::Error;
use crate::ring::{Ring, TermDiff};
use crate::scalar::{binomial, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = R>) -> Self {
        let mut coeffs: Vec<R> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, R::one())
    }

    pub fn constant(order: usize, r: R) -> Self {
        Self::new(order, [r])
    }

    /// `r · t^k`, or zero when `k > order`.
    pub fn monomial(order: usize, k: usize, r: R) -> Self {
        let mut out = Self::zero(order);
        if k <= order {
            out.coeffs[k] = r;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.zip(other, R::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.zip(other, R::minus))
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Cauchy product cut at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let n = self.order;
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Ok(TruncatedSeries { order: n, coeffs })
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|c| c.scaled(s))
    }

    /// `self · r` with `r` constant in `t`.
    pub fn mul_right(&self, r: &R) -> Self {
        self.map(|c| c.times(r))
    }

    /// `r · self` with `r` constant in `t`.
    pub fn mul_left(&self, r: &R) -> Self {
        self.map(|c| r.times(c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.order, coeffs)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies a series-valued map coefficientwise and re-sums, so that
    /// `Σ_j c_j t^j ↦ Σ_j f(c_j) t^j`.
    pub fn flat_map<S: Ring>(
        &self,
        f: impl Fn(&R) -> TruncatedSeries<S>,
    ) -> Result<TruncatedSeries<S>, Error> {
        let mut out = TruncatedSeries::<S>::zero(self.order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&f(c).shift(j))?;
        }
        Ok(out)
    }

    /// Drops to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise truncation order");
        Self::new(order, self.coeffs.iter().cloned())
    }

    /// Inverse of a series whose constant term is the unit.
    pub fn invert(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        // y_0 = 1, y_k = -Σ_{j=1..k} x_j y_{k-j}
        let mut inv: Vec<R> = Vec::with_capacity(self.order + 1);
        inv.push(R::one());
        for k in 1..=self.order {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&inv[k - j]));
                }
            }
            inv.push(acc.negated());
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Lowest degree where the two series differ and the first differing term.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, TermDiff)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find_map(|(k, (a, b))| a.first_difference(b).map(|d| (k, d)))
    }
}

/// `1, X, X^2, ..., X^order`.
pub fn x_powers(cfg: &TwistConfig) -> Vec<AlgebraElement> {
    (0..=cfg.order() as u32)
        .map(|k| AlgebraElement::monomial(Monomial::from_powers([(cfg.x(), k)])))
        .collect()
}

/// `(1 - X t)^q = Σ_k (-1)^k (q choose k) X^k t^k`, for rational `q`.
pub fn one_minus_xt_power(cfg: &TwistConfig, q: &Scalar) -> TruncatedSeries<AlgebraElement> {
    one_minus_xt_power_with(&x_powers(cfg), q)
}

/// Same as [`one_minus_xt_power`] with `X` powers supplied; the order is
/// `powers.len() - 1`.
pub fn one_minus_xt_power_with(
    powers: &[AlgebraElement],
    q: &Scalar,
) -> TruncatedSeries<AlgebraElement> {
    let order = powers.len() - 1;
    TruncatedSeries::new(
        order,
        powers.iter().enumerate().map(|(k, xk)| {
            let sign = if k.is_multiple_of(2) {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            xk.scale(&(sign * binomial(q, k as u32)))
        }),
    )
}

impl<R: Ring> TruncatedSeries<R> {
    /// Whether every coefficient above degree 0 vanishes and the constant is `r`.
    pub fn is_constant(&self, r: &R) -> bool {
        self.coeffs[0] == *r && self.coeffs[1..].iter().all(R::is_zero)
    }
}

impl TruncatedSeries<AlgebraElement> {
    pub fn scalar_coeffs(&self) -> Option<Vec<Scalar>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Some(Scalar::zero())
                } else if c.len() == 1 && !c.constant_term().is_zero() {
                    Some(c.constant_term())
                } else {
                    None
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GenKind, Generator};
    use crate::scalar::{int, rat};

    type S = TruncatedSeries<AlgebraElement>;

    fn x() -> AlgebraElement {
        AlgebraElement::generator(Generator::l(1))
    }

    fn cfg(order: usize) -> TwistConfig {
        TwistConfig::new(1, GenKind::L, order).unwrap()
    }

    #[test]
    fn product_examples() {
        let one = AlgebraElement::one();
        let plus = S::new(2, [one.clone(), x()]);
        let minus = S::new(2, [one.clone(), -&x()]);
        let expected = S::new(2, [one.clone(), AlgebraElement::zero(), -&(&x() * &x())]);
        assert_eq!(plus.mul(&minus).unwrap(), expected);
        assert_eq!(plus.mul(&S::one(2)).unwrap(), plus);

        let n = 5;
        let geometric = S::new(n, (0..=n as u32).map(|k| x().pow(k)));
        assert_eq!(
            geometric.mul(&S::new(n, [one.clone(), -&x()])).unwrap(),
            S::one(n)
        );
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(S::one(2).mul(&S::one(3)), Err(Error::OrderMismatch(2, 3)));
        assert!(S::one(2).add(&S::one(1)).is_err());
    }

    #[test]
    fn invert_examples() {
        let n = 4;
        let one_minus = S::new(n, [AlgebraElement::one(), -&x()]);
        let geometric = S::new(n, (0..=n as u32).map(|k| x().pow(k)));
        assert_eq!(one_minus.invert().unwrap(), geometric);
        assert_eq!(S::one(n).invert().unwrap(), S::one(n));
        assert_eq!(
            S::constant(n, AlgebraElement::scalar(int(2))).invert(),
            Err(Error::NonUnitConstant)
        );
    }

    #[test]
    fn binomial_powers() {
        let c = cfg(4);
        assert_eq!(one_minus_xt_power(&c, &int(0)), S::one(4));
        assert_eq!(
            one_minus_xt_power(&c, &int(1)),
            S::new(4, [AlgebraElement::one(), -&x()])
        );
        let inv = S::new(4, [AlgebraElement::one(), -&x()]).invert().unwrap();
        assert_eq!(one_minus_xt_power(&c, &int(-1)), inv);
        let half = one_minus_xt_power(&c, &rat(1, 2));
        assert_eq!(*half.coeff(2), x().pow(2).scale(&rat(-1, 8)));
    }

    #[test]
    fn integer_power_agrees_with_repeated_products() {
        let c = cfg(5);
        let base = S::new(5, [AlgebraElement::one(), -&x()]);
        let cube = base.mul(&base).unwrap().mul(&base).unwrap();
        assert_eq!(one_minus_xt_power(&c, &int(3)), cube);
    }

    #[test]
    fn shift_and_truncate() {
        let s = S::new(3, [x(), AlgebraElement::one()]);
        let shifted = s.shift(2);
        assert_eq!(*shifted.coeff(2), x());
        assert_eq!(*shifted.coeff(3), AlgebraElement::one());
        assert!(s.shift(7).is_zero());
        assert_eq!(s.truncate(0), S::constant(0, x()));
    }
}
