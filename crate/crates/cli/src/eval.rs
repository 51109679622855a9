//! Evaluation of expressions to tagged values, and their JSON form.

use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::json;
use w22_core::hopf::{delta0, eps, s0};
use w22_core::scalar::Scalar;
use w22_core::twist::{AlgSeries, T2Series, T3Series};
use w22_core::{
    AlgebraElement, Generator, Quantization, Ring, Tensor, TruncatedSeries, TwistConfig,
};

use crate::error::CliError;
use crate::expr::{Expr, MapName, TwistName};

/// A truncated series over one of the coefficient rings.
#[derive(Clone, Debug, PartialEq)]
pub enum Data {
    Algebra(AlgSeries),
    Tensor2(T2Series),
    Tensor3(T3Series),
}

/// An evaluated expression. `series` records whether `t` entered the
/// computation; when it did not, only the constant coefficient can be
/// nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Value {
    pub series: bool,
    pub data: Data,
}

impl Data {
    pub fn kind(&self) -> &'static str {
        match self {
            Data::Algebra(_) => "algebra",
            Data::Tensor2(_) => "tensor2",
            Data::Tensor3(_) => "tensor3",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Data::Algebra(s) => s.order(),
            Data::Tensor2(s) => s.order(),
            Data::Tensor3(s) => s.order(),
        }
    }

    fn one_like(&self) -> Data {
        let n = self.order();
        match self {
            Data::Algebra(_) => Data::Algebra(TruncatedSeries::one(n)),
            Data::Tensor2(_) => Data::Tensor2(TruncatedSeries::one(n)),
            Data::Tensor3(_) => Data::Tensor3(TruncatedSeries::one(n)),
        }
    }

    /// Rendered coefficients `(k, text)` for every nonzero `t^k`.
    pub fn coefficient_texts(&self) -> Vec<(usize, String)> {
        fn texts<R: Ring + std::fmt::Display>(s: &TruncatedSeries<R>) -> Vec<(usize, String)> {
            s.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_string()))
                .collect()
        }
        match self {
            Data::Algebra(s) => texts(s),
            Data::Tensor2(s) => texts(s),
            Data::Tensor3(s) => texts(s),
        }
    }

    /// The coefficient of `t^k` as a constant of the same kind and order.
    pub fn coefficient(&self, k: usize) -> Data {
        fn pick<R: Ring>(s: &TruncatedSeries<R>, k: usize) -> TruncatedSeries<R> {
            TruncatedSeries::constant(s.order(), s.coeff(k).clone())
        }
        match self {
            Data::Algebra(s) => Data::Algebra(pick(s, k)),
            Data::Tensor2(s) => Data::Tensor2(pick(s, k)),
            Data::Tensor3(s) => Data::Tensor3(pick(s, k)),
        }
    }
}

fn mismatch(op: &str, a: &Data, b: &Data) -> CliError {
    CliError::KindMismatch(format!("cannot {op} {} and {}", a.kind(), b.kind()))
}

/// A scalar-valued algebra series promoted to the unit of the order-`K`
/// tensor power.
fn promote<const K: usize>(s: &AlgSeries) -> Option<TruncatedSeries<Tensor<K>>> {
    let scalars = s.scalar_coeffs()?;
    Some(TruncatedSeries::new(
        s.order(),
        scalars.iter().map(|c| Tensor::<K>::one().scale(c)),
    ))
}

fn add(a: &Data, b: &Data, sign: &Scalar) -> Result<Data, CliError> {
    Ok(match (a, b) {
        (Data::Algebra(x), Data::Algebra(y)) => Data::Algebra(x.add(&y.scale(sign))?),
        (Data::Tensor2(x), Data::Tensor2(y)) => Data::Tensor2(x.add(&y.scale(sign))?),
        (Data::Tensor3(x), Data::Tensor3(y)) => Data::Tensor3(x.add(&y.scale(sign))?),
        _ => return Err(mismatch("add", a, b)),
    })
}

fn mul(a: &Data, b: &Data) -> Result<Data, CliError> {
    Ok(match (a, b) {
        (Data::Algebra(x), Data::Algebra(y)) => Data::Algebra(x.mul(y)?),
        (Data::Tensor2(x), Data::Tensor2(y)) => Data::Tensor2(x.mul(y)?),
        (Data::Tensor3(x), Data::Tensor3(y)) => Data::Tensor3(x.mul(y)?),
        (Data::Algebra(x), Data::Tensor2(y)) => match promote::<2>(x) {
            Some(x) => Data::Tensor2(x.mul(y)?),
            None => return Err(mismatch("multiply", a, b)),
        },
        (Data::Tensor2(x), Data::Algebra(y)) => match promote::<2>(y) {
            Some(y) => Data::Tensor2(x.mul(&y)?),
            None => return Err(mismatch("multiply", a, b)),
        },
        (Data::Algebra(x), Data::Tensor3(y)) => match promote::<3>(x) {
            Some(x) => Data::Tensor3(x.mul(y)?),
            None => return Err(mismatch("multiply", a, b)),
        },
        (Data::Tensor3(x), Data::Algebra(y)) => match promote::<3>(y) {
            Some(y) => Data::Tensor3(x.mul(&y)?),
            None => return Err(mismatch("multiply", a, b)),
        },
        _ => return Err(mismatch("multiply", a, b)),
    })
}

fn outer<const K: usize>(factors: &[&AlgSeries]) -> TruncatedSeries<Tensor<K>> {
    let n = factors[0].order();
    let mut coeffs = vec![Tensor::<K>::zero(); n + 1];
    let mut stack: Vec<(usize, usize, Vec<&AlgebraElement>)> = vec![(0, 0, Vec::new())];
    while let Some((slot, deg, picked)) = stack.pop() {
        if slot == K {
            let parts: [&AlgebraElement; K] = picked.try_into().expect("K factors");
            coeffs[deg] = &coeffs[deg] + &Tensor::outer(parts);
            continue;
        }
        for (j, c) in factors[slot].coeffs()[..=n - deg].iter().enumerate() {
            if !c.is_zero() {
                let mut next = picked.clone();
                next.push(c);
                stack.push((slot + 1, deg + j, next));
            }
        }
    }
    TruncatedSeries::new(n, coeffs)
}

pub struct Evaluator {
    q: Quantization,
}

impl Evaluator {
    pub fn new(cfg: TwistConfig) -> Self {
        Evaluator {
            q: Quantization::new(cfg),
        }
    }

    pub fn quantization(&self) -> &Quantization {
        &self.q
    }

    fn order(&self) -> usize {
        self.q.order()
    }

    fn constant(&self, a: AlgebraElement) -> Value {
        Value {
            series: false,
            data: Data::Algebra(TruncatedSeries::constant(self.order(), a)),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        let n = self.order();
        Ok(match e {
            Expr::Num(q) => self.constant(AlgebraElement::scalar(q.clone())),
            Expr::Gen(kind, i) => {
                self.constant(AlgebraElement::generator(Generator::new(*kind, *i)))
            }
            Expr::Hbar => self.constant(self.q.hbar().clone()),
            Expr::T => Value {
                series: true,
                data: Data::Algebra(TruncatedSeries::monomial(n, 1, AlgebraElement::one())),
            },
            Expr::HbarRising(b, k) => self.constant(self.q.hbar_rising(b, *k)),
            Expr::HbarFalling(b, k) => self.constant(self.q.hbar_falling(b, *k)),
            Expr::Twist(name, b) => {
                let tw = self.q.twist(b);
                let data = match name {
                    TwistName::C => Data::Tensor2(tw.c),
                    TwistName::D => Data::Tensor2(tw.d),
                    TwistName::U => Data::Algebra(tw.u),
                    TwistName::V => Data::Algebra(tw.v),
                };
                Value { series: true, data }
            }
            Expr::Apply(map, arg) => self.apply(*map, &self.eval(arg)?)?,
            Expr::Neg(x) => {
                let v = self.eval(x)?;
                let data = match &v.data {
                    Data::Algebra(s) => Data::Algebra(s.neg()),
                    Data::Tensor2(s) => Data::Tensor2(s.neg()),
                    Data::Tensor3(s) => Data::Tensor3(s.neg()),
                };
                Value {
                    series: v.series,
                    data,
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let sign = if matches!(e, Expr::Add(..)) {
                    Scalar::one()
                } else {
                    -Scalar::one()
                };
                Value {
                    series: x.series || y.series,
                    data: add(&x.data, &y.data, &sign)?,
                }
            }
            Expr::Mul(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                Value {
                    series: x.series || y.series,
                    data: mul(&x.data, &y.data)?,
                }
            }
            Expr::Pow(x, k) => {
                let v = self.eval(x)?;
                let mut data = v.data.one_like();
                for _ in 0..*k {
                    data = mul(&data, &v.data)?;
                }
                Value {
                    series: v.series && *k > 0,
                    data,
                }
            }
            Expr::Tensor(factors) => {
                let values = factors
                    .iter()
                    .map(|f| self.eval(f))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut algs = Vec::new();
                for v in &values {
                    match &v.data {
                        Data::Algebra(s) => algs.push(s),
                        other => {
                            return Err(CliError::KindMismatch(format!(
                                "tensor factors must be algebra elements, got {}",
                                other.kind()
                            )))
                        }
                    }
                }
                let data = match algs.len() {
                    2 => Data::Tensor2(outer::<2>(&algs)),
                    3 => Data::Tensor3(outer::<3>(&algs)),
                    k => {
                        return Err(CliError::KindMismatch(format!(
                            "tensor product of {k} factors is not supported"
                        )))
                    }
                };
                Value {
                    series: values.iter().any(|v| v.series),
                    data,
                }
            }
        })
    }

    fn apply(&self, map: MapName, v: &Value) -> Result<Value, CliError> {
        let Data::Algebra(s) = &v.data else {
            return Err(CliError::KindMismatch(format!(
                "{} expects an algebra element, got {}",
                map.name(),
                v.data.kind()
            )));
        };
        let (series, data) = match map {
            MapName::Delta0 => (v.series, Data::Tensor2(s.map(delta0))),
            MapName::S0 => (v.series, Data::Algebra(s.map(s0))),
            MapName::Eps => (
                v.series,
                Data::Algebra(s.map(|a| AlgebraElement::scalar(eps(a)))),
            ),
            MapName::Delta => (true, Data::Tensor2(s.flat_map(|a| self.q.delta(a))?)),
            MapName::S => (true, Data::Algebra(s.flat_map(|a| self.q.antipode(a))?)),
        };
        Ok(Value { series, data })
    }
}

pub fn evaluate(e: &Expr, cfg: &TwistConfig) -> Result<Value, CliError> {
    Evaluator::new(*cfg).eval(e)
}

#[derive(Serialize, Deserialize)]
struct ValueRepr {
    kind: String,
    series: bool,
    order: usize,
    value: serde_json::Value,
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        fn body<R: Ring + Serialize>(s: &TruncatedSeries<R>, series: bool) -> serde_json::Value {
            if series {
                serde_json::to_value(s).expect("serializable")
            } else {
                serde_json::to_value(s.coeff(0)).expect("serializable")
            }
        }
        let value = match &self.data {
            Data::Algebra(s) => body(s, self.series),
            Data::Tensor2(s) => body(s, self.series),
            Data::Tensor3(s) => body(s, self.series),
        };
        json!({
            "kind": self.data.kind(),
            "series": self.series,
            "order": self.data.order(),
            "value": value,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Value, CliError> {
        fn body<R: Ring + for<'de> Deserialize<'de>>(
            repr: &ValueRepr,
        ) -> Result<TruncatedSeries<R>, CliError> {
            let err = |e: serde_json::Error| CliError::Json(e.to_string());
            if repr.series {
                let s: TruncatedSeries<R> =
                    serde_json::from_value(repr.value.clone()).map_err(err)?;
                if s.order() != repr.order {
                    return Err(CliError::Json(format!(
                        "order {} disagrees with series order {}",
                        repr.order,
                        s.order()
                    )));
                }
                Ok(s)
            } else {
                let c: R = serde_json::from_value(repr.value.clone()).map_err(err)?;
                Ok(TruncatedSeries::constant(repr.order, c))
            }
        }
        let repr: ValueRepr =
            serde_json::from_value(v.clone()).map_err(|e| CliError::Json(e.to_string()))?;
        let data = match repr.kind.as_str() {
            "algebra" => Data::Algebra(body(&repr)?),
            "tensor2" => Data::Tensor2(body(&repr)?),
            "tensor3" => Data::Tensor3(body(&repr)?),
            other => return Err(CliError::Json(format!("unknown kind `{other}`"))),
        };
        Ok(Value {
            series: repr.series,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use w22_core::scalar::int;
    use w22_core::GenKind;

    fn cfg(kind: GenKind, order: usize) -> TwistConfig {
        TwistConfig::new(1, kind, order).unwrap()
    }

    fn eval(text: &str, c: TwistConfig) -> Result<Value, CliError> {
        evaluate(&parse(text).unwrap(), &c)
    }

    #[test]
    fn counit_of_generator_is_zero() {
        let v = eval("eps(L(5))", cfg(GenKind::L, 4)).unwrap();
        assert_eq!(v.data, Data::Algebra(TruncatedSeries::zero(4)));
        assert!(!v.series);
    }

    #[test]
    fn twist_times_inverse_is_one() {
        for kind in [GenKind::L, GenKind::W] {
            let v = eval("D(0)*C(0)", cfg(kind, 4)).unwrap();
            assert_eq!(v.data, Data::Tensor2(TruncatedSeries::one(4)));
        }
    }

    #[test]
    fn antipode_of_w_under_w_twist() {
        let c = cfg(GenKind::W, 4);
        let v = eval("S(W(2))", c).unwrap();
        let q = Quantization::new(c);
        let expected = q
            .one_minus_xt(&int(-2))
            .mul_right(&AlgebraElement::generator(Generator::w(2)))
            .neg();
        assert_eq!(v.data, Data::Algebra(expected));
    }

    #[test]
    fn scalars_scale_tensors() {
        let v = eval("2 * (L(1) ox 1) - L(1) ox 2", cfg(GenKind::L, 2)).unwrap();
        assert_eq!(v.data, Data::Tensor2(TruncatedSeries::zero(2)));
        let v = eval("t * C(0)", cfg(GenKind::L, 2)).unwrap();
        assert!(v.series);
    }

    #[test]
    fn kind_errors() {
        let c = cfg(GenKind::L, 2);
        assert!(matches!(
            eval("(L(1) ox L(2)) + L(1)", c),
            Err(CliError::KindMismatch(_))
        ));
        assert!(matches!(
            eval("Delta(C(0))", c),
            Err(CliError::KindMismatch(_))
        ));
        assert!(matches!(
            eval("L(1) * C(0)", c),
            Err(CliError::KindMismatch(_))
        ));
        assert!(matches!(
            eval("(1 ox 1) ox 1", c),
            Err(CliError::KindMismatch(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let c = cfg(GenKind::W, 3);
        for text in [
            "Delta(L(2))",
            "L(1) * W(-1) + 1/2",
            "L(1) ox hb ox W(0)",
            "U(1/2)",
        ] {
            let v = eval(text, c).unwrap();
            let back = Value::from_json(&v.to_json()).unwrap();
            assert_eq!(back, v, "{text}");
        }
    }
}
