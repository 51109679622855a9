//! Ring-level laws of the bracket and the PBW product.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{compare, compare_scalars, sweep_plain, Options, ReportBuilder, SuiteId};
use crate::algebra::{bracket, bracket_basis, multiply, AlgebraElement, GenKind, Generator};
use crate::scalar::{int, rat};

fn generators(bound: i64) -> Vec<Generator> {
    [GenKind::L, GenKind::W]
        .into_iter()
        .flat_map(|k| (-bound..=bound).map(move |i| Generator::new(k, i)))
        .collect()
}

fn random_generator(rng: &mut ChaCha8Rng, bound: i64) -> Generator {
    let kind = if rng.gen_bool(0.5) {
        GenKind::L
    } else {
        GenKind::W
    };
    Generator::new(kind, rng.gen_range(-bound..=bound))
}

/// A product of up to three generators taken in random (unsorted) order.
fn random_word(rng: &mut ChaCha8Rng, bound: i64) -> AlgebraElement {
    let len = rng.gen_range(0..=3);
    (0..len).fold(AlgebraElement::one(), |acc, _| {
        multiply(
            &acc,
            &AlgebraElement::generator(random_generator(rng, bound)),
        )
    })
}

/// A short random combination of words with small rational coefficients.
pub(crate) fn random_element(rng: &mut ChaCha8Rng, bound: i64) -> AlgebraElement {
    let terms = rng.gen_range(1..=3);
    let mut out = AlgebraElement::zero();
    for _ in 0..terms {
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        out.add_scaled(&random_word(rng, bound), &c);
    }
    out
}

/// `[g, e]` for `e` a combination of generators, using the structure
/// constants only.
fn lie_bracket(g: Generator, e: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in e.terms() {
        match m.generators() {
            [h] => out.add_scaled(&bracket_basis(g, *h), c),
            _ => panic!("not a Lie algebra element: {e}"),
        }
    }
    out
}

pub fn suite_lie(opts: &Options) -> super::VerificationReport {
    let mut report = ReportBuilder::new(SuiteId::Lie, None);
    let bound = opts.lie_index;
    let gens = generators(bound);
    let pairs: Vec<(Generator, Generator)> = gens
        .iter()
        .flat_map(|&g| gens.iter().map(move |&h| (g, h)))
        .collect();

    report.push(sweep_plain(
        "antisymmetry",
        json!({ "index_bound": bound }),
        &pairs,
        |&(g, h)| compare(&bracket_basis(g, h), &-&bracket_basis(h, g)),
    ));

    report.push(sweep_plain(
        "commutator",
        json!({ "index_bound": bound }),
        &pairs,
        |&(g, h)| {
            let (a, b) = (AlgebraElement::generator(g), AlgebraElement::generator(h));
            compare(&bracket(&a, &b), &bracket_basis(g, h))
        },
    ));

    report.push(sweep_plain(
        "grading",
        json!({ "index_bound": bound }),
        &pairs,
        |&(g, h)| {
            let e = bracket_basis(g, h);
            let got = e.homogeneous_degree().unwrap_or(g.index + h.index);
            compare_scalars(
                &format!("deg [{g}, {h}]"),
                &int(got),
                &int(g.index + h.index),
            )
        },
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let triples: Vec<[Generator; 3]> = (0..opts.jacobi_samples)
        .map(|_| std::array::from_fn(|_| random_generator(&mut rng, bound)))
        .collect();
    report.push(sweep_plain(
        "jacobi",
        json!({ "samples": opts.jacobi_samples, "seed": opts.seed, "index_bound": bound }),
        &triples,
        |&[x, y, z]| {
            let mut sum = lie_bracket(x, &bracket_basis(y, z));
            sum = &sum + &lie_bracket(y, &bracket_basis(z, x));
            sum = &sum + &lie_bracket(z, &bracket_basis(x, y));
            compare(&sum, &AlgebraElement::zero())
        },
    ));
    report.push(sweep_plain(
        "jacobi.enveloping",
        json!({ "samples": opts.jacobi_samples, "seed": opts.seed, "index_bound": bound }),
        &triples,
        |t| {
            let [x, y, z] = t.map(AlgebraElement::generator);
            let mut sum = bracket(&x, &bracket(&y, &z));
            sum = &sum + &bracket(&y, &bracket(&z, &x));
            sum = &sum + &bracket(&z, &bracket(&x, &y));
            compare(&sum, &AlgebraElement::zero())
        },
    ));

    let elements: Vec<[AlgebraElement; 3]> = (0..opts.assoc_samples)
        .map(|_| std::array::from_fn(|_| random_element(&mut rng, 3)))
        .collect();
    let indices: Vec<usize> = (0..elements.len()).collect();
    report.push(sweep_plain(
        "associativity",
        json!({ "samples": opts.assoc_samples, "seed": opts.seed, "word_length": 3 }),
        &indices,
        |&i| {
            let [a, b, c] = &elements[i];
            compare(&multiply(&multiply(a, b), c), &multiply(a, &multiply(b, c)))
        },
    ));
    report.push(sweep_plain(
        "unit",
        json!({ "samples": opts.assoc_samples, "seed": opts.seed }),
        &indices,
        |&i| {
            let a = &elements[i][0];
            let one = AlgebraElement::one();
            compare(&multiply(&one, a), a).and(compare(&multiply(a, &one), a))
        },
    ));
    report.push(sweep_plain(
        "grading.product",
        json!({ "samples": opts.assoc_samples, "seed": opts.seed }),
        &indices,
        |&i| {
            let [a, b, _] = &elements[i];
            for (ma, _) in a.terms() {
                for (mb, _) in b.terms() {
                    let expected = ma.degree() + mb.degree();
                    let p = crate::algebra::multiply_monomials(ma, mb);
                    for (m, _) in p.terms() {
                        compare_scalars(
                            &format!("deg {m} in {ma} · {mb}"),
                            &int(m.degree()),
                            &int(expected),
                        )?;
                    }
                }
            }
            Ok(())
        },
    ));
    report.finish()
}
