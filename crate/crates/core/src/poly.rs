//! Univariate polynomials over ℚ in a free commuting indeterminate `y`, used
//! as a witness ring for factorial identities.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::{int, Scalar};

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyWitness {
    coeffs: Vec<Scalar>,
}

impl PolyWitness {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyWitness { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// `y + c`
    pub fn y_plus(c: Scalar) -> Self {
        Self::new(vec![c, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, y: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * y + c)
    }

    /// `y_b^{<i>}`
    pub fn rising(b: &Scalar, i: u32) -> Self {
        (0..i as i64).fold(Self::one(), |acc, k| &acc * &Self::y_plus(b + int(k)))
    }

    /// `y_b^{[i]}`
    pub fn falling(b: &Scalar, i: u32) -> Self {
        (0..i as i64).fold(Self::one(), |acc, k| &acc * &Self::y_plus(b - int(k)))
    }
}

impl Add for &PolyWitness {
    type Output = PolyWitness;
    fn add(self, rhs: &PolyWitness) -> PolyWitness {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        PolyWitness::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &PolyWitness {
    type Output = PolyWitness;
    fn sub(self, rhs: &PolyWitness) -> PolyWitness {
        self + &rhs.scale(&-Scalar::one())
    }
}

impl Mul for &PolyWitness {
    type Output = PolyWitness;
    fn mul(self, rhs: &PolyWitness) -> PolyWitness {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyWitness::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyWitness::new(out)
    }
}
