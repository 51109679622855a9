//! Text and LaTeX renderings of evaluated values.

use num_traits::{One, Signed, Zero};
use w22_core::scalar::Scalar;
use w22_core::{AlgebraElement, Generator, Monomial, Quantization, Ring, Tensor, TruncatedSeries};

use crate::eval::{Data, Value};
use crate::expr::{Expr, MapName};

pub fn text(v: &Value) -> String {
    let coeffs = v.data.coefficient_texts();
    if !v.series {
        return coeffs
            .into_iter()
            .next()
            .map(|(_, s)| s)
            .unwrap_or_else(|| "0".to_string());
    }
    let mut out = String::new();
    for (k, s) in &coeffs {
        out.push_str(&format!("t^{k}: {s}\n"));
    }
    if coeffs.is_empty() {
        out.push_str("0\n");
    }
    out.push_str(&format!("O(t^{{{}}})", v.data.order() + 1));
    out
}

fn latex_scalar(q: &Scalar) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

fn latex_generator(g: Generator) -> String {
    format!("{}_{{{}}}", g.kind, g.index)
}

fn latex_monomial(m: &Monomial) -> String {
    if m.is_unit() {
        return "1".to_string();
    }
    m.powers()
        .into_iter()
        .map(|(g, e)| {
            if e == 1 {
                latex_generator(g)
            } else {
                format!("{}^{{{e}}}", latex_generator(g))
            }
        })
        .collect()
}

/// A signed summand: the sign is rendered by [`join`].
struct Summand {
    negative: bool,
    body: String,
}

/// `c · body` with the coefficient dropped when it is `±1` and the body is
/// not the unit.
fn summand(c: &Scalar, body: String, is_unit: bool) -> Summand {
    let a = c.abs();
    let body = if is_unit {
        latex_scalar(&a)
    } else if a.is_one() {
        body
    } else {
        format!("{}{body}", latex_scalar(&a))
    };
    Summand {
        negative: c.is_negative(),
        body,
    }
}

fn join(terms: &[Summand]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push('-'),
            (_, false) => out.push('+'),
        }
        out.push_str(&t.body);
    }
    out
}

fn element_summands(a: &AlgebraElement) -> Vec<Summand> {
    a.terms()
        .map(|(m, c)| summand(c, latex_monomial(m), m.is_unit()))
        .collect()
}

fn tensor_summands<const K: usize>(x: &Tensor<K>) -> Vec<Summand> {
    x.terms()
        .map(|(key, c)| {
            let body = key
                .iter()
                .map(latex_monomial)
                .collect::<Vec<_>>()
                .join("\\otimes ");
            summand(c, body, false)
        })
        .collect()
}

fn t_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{{{k}}}"),
    }
}

fn big_o(order: usize) -> Summand {
    Summand {
        negative: false,
        body: format!("O({})", t_power(order + 1)),
    }
}

fn series_summands<R: Ring>(
    s: &TruncatedSeries<R>,
    series: bool,
    parts: impl Fn(&R) -> Vec<Summand>,
) -> Vec<Summand> {
    let mut out = Vec::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        let terms = parts(c);
        match terms.len() {
            0 => {}
            _ if k == 0 => out.extend(terms),
            1 => {
                let t = &terms[0];
                let body = if t.body == "1" {
                    t_power(k)
                } else if t.body.contains("\\otimes") {
                    format!("({}){}", t.body, t_power(k))
                } else {
                    format!("{}{}", t.body, t_power(k))
                };
                out.push(Summand {
                    negative: t.negative,
                    body,
                });
            }
            _ => out.push(Summand {
                negative: false,
                body: format!("\\left({}\\right){}", join(&terms), t_power(k)),
            }),
        }
    }
    if series {
        out.push(big_o(s.order()));
    }
    out
}

/// Generic LaTeX for any value: the expanded `t`-series.
pub fn latex_value(v: &Value) -> String {
    let terms = match &v.data {
        Data::Algebra(s) => series_summands(s, v.series, element_summands),
        Data::Tensor2(s) => series_summands(s, v.series, tensor_summands),
        Data::Tensor3(s) => series_summands(s, v.series, tensor_summands),
    };
    join(&terms)
}

fn one_minus_xt(exponent: &Scalar) -> String {
    format!("(1-\\mathcal{{X}}t)^{{{}}}", latex_scalar(exponent))
}

/// `Y_k = (ad X)^k(g)/k!` as `(b_k, generator)`, or `None` once it vanishes.
fn adjoint_term(q: &Quantization, g: Generator, k: u32) -> Option<(Scalar, Generator)> {
    let y = q.ad_term(k, g);
    if y.is_zero() {
        return None;
    }
    Some(
        y.as_scaled_generator()
            .expect("ad X maps generators to multiples of generators"),
    )
}

/// `Δ(g) = g ⊗ (1-Xt)^𝕟 + Σ_k (-1)^k b_k ħ^{<k>} ⊗ (1-Xt)^{-k} G_{n+k n0} t^k`.
pub fn latex_delta(q: &Quantization, g: Generator) -> String {
    let n = q.order();
    let nn = q.weight(g);
    let gl = latex_generator(g);
    let mut terms = vec![Summand {
        negative: false,
        body: if nn.is_zero() {
            format!("{gl}\\otimes 1")
        } else {
            format!("{gl}\\otimes{}", one_minus_xt(&nn))
        },
    }];
    for k in 0..=n as u32 {
        let Some((c, h)) = adjoint_term(q, g, k) else {
            continue;
        };
        let c = if k.is_multiple_of(2) { c } else { -c };
        let hl = latex_generator(h);
        let body = if k == 0 {
            format!("1\\otimes {hl}")
        } else {
            format!(
                "\\hbar^{{\\langle {k}\\rangle}}\\otimes{}{hl}{}",
                one_minus_xt(&-Scalar::from_integer(k.into())),
                t_power(k as usize)
            )
        };
        terms.push(summand(&c, body, false));
    }
    if adjoint_term(q, g, n as u32 + 1).is_some() {
        terms.push(big_o(n));
    }
    join(&terms)
}

/// `S(g) = -(1-Xt)^{-𝕟} Σ_k b_k G_{n+k n0} ħ_k^{[k]} t^k`.
pub fn latex_antipode(q: &Quantization, g: Generator) -> String {
    let n = q.order();
    let nn = q.weight(g);
    let mut terms = Vec::new();
    for k in 0..=n as u32 {
        let Some((c, h)) = adjoint_term(q, g, k) else {
            continue;
        };
        let hl = latex_generator(h);
        let body = if k == 0 {
            hl
        } else {
            format!("{hl}\\hbar_{{{k}}}^{{[{k}]}}{}", t_power(k as usize))
        };
        terms.push(summand(&c, body, false));
    }
    if adjoint_term(q, g, n as u32 + 1).is_some() {
        terms.push(big_o(n));
    }
    let sum = if terms.len() == 1 {
        join(&terms)
    } else {
        format!("\\left({}\\right)", join(&terms))
    };
    if nn.is_zero() {
        format!("-{sum}")
    } else {
        format!("-{}{sum}", one_minus_xt(&-nn))
    }
}

/// LaTeX for an expression: the closed form when it is `Δ` or `S` of a
/// single generator, the expanded series otherwise.
pub fn latex(e: &Expr, q: &Quantization, v: &Value) -> String {
    match e {
        Expr::Apply(MapName::Delta, arg) => match **arg {
            Expr::Gen(kind, i) => latex_delta(q, Generator::new(kind, i)),
            _ => latex_value(v),
        },
        Expr::Apply(MapName::S, arg) => match **arg {
            Expr::Gen(kind, i) => latex_antipode(q, Generator::new(kind, i)),
            _ => latex_value(v),
        },
        _ => latex_value(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::Evaluator;
    use crate::expr::parse;
    use w22_core::{GenKind, TwistConfig};

    fn render(text: &str, kind: GenKind, order: usize) -> String {
        let ev = Evaluator::new(TwistConfig::new(1, kind, order).unwrap());
        let e = parse(text).unwrap();
        let v = ev.eval(&e).unwrap();
        latex(&e, ev.quantization(), &v)
    }

    #[test]
    fn w_twist_closed_forms() {
        assert_eq!(
            render("Delta(W(2))", GenKind::W, 4),
            "W_{2}\\otimes(1-\\mathcal{X}t)^{2}+1\\otimes W_{2}"
        );
        assert_eq!(
            render("S(W(2))", GenKind::W, 4),
            "-(1-\\mathcal{X}t)^{-2}W_{2}"
        );
    }

    #[test]
    fn l_twist_closed_forms_mark_truncation() {
        let d = render("Delta(L(-3))", GenKind::L, 2);
        assert!(
            d.starts_with("L_{-3}\\otimes(1-\\mathcal{X}t)^{-3}+1\\otimes L_{-3}"),
            "{d}"
        );
        assert!(d.contains("\\hbar^{\\langle 1\\rangle}"), "{d}");
        assert!(d.ends_with("+O(t^{3})"), "{d}");
        let s = render("S(L(-1))", GenKind::L, 1);
        assert!(s.starts_with("-(1-\\mathcal{X}t)^{1}\\left(L_{-1}"), "{s}");
    }

    #[test]
    fn generic_series() {
        assert_eq!(
            render("1/2 * L(1)^2 - W(-3)", GenKind::L, 2),
            "-W_{-3}+\\frac{1}{2}L_{1}^{2}"
        );
        assert_eq!(
            render("t * (L(1) ox 1)", GenKind::L, 2),
            "(L_{1}\\otimes 1)t+O(t^{3})"
        );
        assert_eq!(render("0", GenKind::L, 2), "0");
    }

    #[test]
    fn text_lists_coefficients() {
        let ev = Evaluator::new(TwistConfig::new(1, GenKind::W, 2).unwrap());
        let v = ev.eval(&parse("S(W(2))").unwrap()).unwrap();
        assert_eq!(
            text(&v),
            "t^0: -W_2\nt^1: -2 W_1 W_2\nt^2: -3 W_1^2 W_2\nO(t^{3})"
        );
    }
}
