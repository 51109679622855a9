//! Canonical JSON forms.
//!
//! * algebra element: `[{"coeff": "p/q", "monomial": [["L", 1, 2], ["W", -3, 1]]}, ...]`
//! * order-2/3 tensor: same, with `"monomial"` an array of 2 or 3 such words
//! * series: `{"order": N, "coeffs": [...]}`
//!
//! Terms appear in canonical monomial order, so equal values serialize to
//! identical bytes.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraElement, GenKind, Generator, Monomial};
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::series::TruncatedSeries;
use crate::tensor::Tensor;

type WordRepr = Vec<(GenKind, i64, u32)>;

#[derive(Serialize, Deserialize)]
struct TermRepr<M> {
    coeff: String,
    monomial: M,
}

fn word_repr(m: &Monomial) -> WordRepr {
    m.powers()
        .into_iter()
        .map(|(g, e)| (g.kind, g.index, e))
        .collect()
}

fn word_from(repr: WordRepr) -> Monomial {
    Monomial::from_powers(
        repr.into_iter()
            .map(|(kind, index, e)| (Generator::new(kind, index), e)),
    )
}

fn coeff_from<E: serde::de::Error>(text: &str) -> Result<Scalar, E> {
    scalar::parse(text).map_err(E::custom)
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<WordRepr>> = self
            .terms()
            .map(|(m, c)| TermRepr {
                coeff: scalar::to_text(c),
                monomial: word_repr(m),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr<WordRepr>>::deserialize(d)?;
        let mut out = AlgebraElement::zero();
        for t in terms {
            out.add_term(word_from(t.monomial), coeff_from(&t.coeff)?);
        }
        Ok(out)
    }
}

impl<const K: usize> Serialize for Tensor<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<Vec<WordRepr>>> = self
            .terms()
            .map(|(key, c)| TermRepr {
                coeff: scalar::to_text(c),
                monomial: key.iter().map(word_repr).collect(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, const K: usize> Deserialize<'de> for Tensor<K> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr<Vec<WordRepr>>>::deserialize(d)?;
        let mut out = Tensor::<K>::zero();
        for t in terms {
            let slots = t.monomial.len();
            let key: [Monomial; K] = t
                .monomial
                .into_iter()
                .map(word_from)
                .collect::<Vec<_>>()
                .try_into()
                .map_err(|_| D::Error::custom(format!("expected {K} slots, got {slots}")))?;
            out.add_term(key, coeff_from(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring + Serialize> Serialize for TruncatedSeries<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for TruncatedSeries<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::<R>::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "series of order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        Ok(TruncatedSeries::new(repr.order, repr.coeffs))
    }
}
