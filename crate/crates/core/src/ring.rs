use std::fmt::Debug;

use crate::scalar::Scalar;

/// A coefficient ring for truncated series: the enveloping algebra and its
/// tensor powers.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, s: &Scalar) -> Self;

    /// The first basis term (in canonical order) where `self` and `other`
    /// differ, as `(term, lhs coefficient, rhs coefficient)`.
    fn first_difference(&self, other: &Self) -> Option<TermDiff>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TermDiff {
    pub term: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}
