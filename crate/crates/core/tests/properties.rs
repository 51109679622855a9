use proptest::prelude::*;
use w22_core::hopf::{delta0, eps, eps_left, eps_right, s0};
use w22_core::scalar::{binomial, int, rat, Scalar};
use w22_core::series::one_minus_xt_power;
use w22_core::tensor::{embed, tensor2, SlotPattern};
use w22_core::twist::AlgSeries;
use w22_core::{
    bracket, multiply, AlgebraElement, GenKind, Generator, Monomial, Quantization, Tensor2,
    TruncatedSeries, TwistConfig,
};

fn kind() -> impl Strategy<Value = GenKind> {
    prop_oneof![Just(GenKind::L), Just(GenKind::W)]
}

fn generator(bound: i64) -> impl Strategy<Value = Generator> {
    (kind(), -bound..=bound).prop_map(|(k, i)| Generator::new(k, i))
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rat(p, q))
}

/// Short combinations of unsorted words, so that multiplication has real
/// straightening work to do.
fn element() -> impl Strategy<Value = AlgebraElement> {
    let word = prop::collection::vec(generator(3), 0..=3).prop_map(|gs| {
        gs.into_iter().fold(AlgebraElement::one(), |acc, g| {
            multiply(&acc, &AlgebraElement::generator(g))
        })
    });
    prop::collection::vec((word, coeff()), 1..=3).prop_map(|terms| {
        let mut out = AlgebraElement::zero();
        for (w, c) in terms {
            out.add_scaled(&w, &c);
        }
        out
    })
}

fn series(order: usize) -> impl Strategy<Value = AlgSeries> {
    prop::collection::vec(element(), order + 1).prop_map(move |c| TruncatedSeries::new(order, c))
}

fn unit_series(order: usize) -> impl Strategy<Value = AlgSeries> {
    series(order).prop_map(move |s| {
        let mut c = s.into_coeffs();
        c[0] = AlgebraElement::one();
        TruncatedSeries::new(order, c)
    })
}

fn gen(g: Generator) -> AlgebraElement {
    AlgebraElement::generator(g)
}

fn cfg(kind: GenKind, n0: i64, order: usize) -> TwistConfig {
    TwistConfig::new(n0, kind, order).unwrap()
}

fn twist_cfg() -> impl Strategy<Value = TwistConfig> {
    (kind(), prop::sample::select(vec![1i64, 2, -1])).prop_map(|(k, n0)| cfg(k, n0, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_in_the_enveloping_algebra(x in generator(8), y in generator(8), z in generator(8)) {
        let (x, y, z) = (gen(x), gen(y), gen(z));
        let sum = &(&bracket(&x, &bracket(&y, &z)) + &bracket(&y, &bracket(&z, &x)))
            + &bracket(&z, &bracket(&x, &y));
        prop_assert!(sum.is_zero(), "{}", sum);
    }

    #[test]
    fn product_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
    }

    #[test]
    fn product_is_bilinear(a in element(), b in element(), c in element(), s in coeff()) {
        let lhs = multiply(&(&a + &b.scale(&s)), &c);
        let rhs = &multiply(&a, &c) + &multiply(&b, &c).scale(&s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_ring_laws(a in series(2), b in series(2), c in series(2)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul(&AlgSeries::one(2)).unwrap(), a);
    }

    #[test]
    fn inverse_of_inverse(a in unit_series(3)) {
        let inv = a.invert().unwrap();
        prop_assert!(a.mul(&inv).unwrap().is_constant(&AlgebraElement::one()));
        prop_assert!(inv.mul(&a).unwrap().is_constant(&AlgebraElement::one()));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn truncation_commutes_with_products(a in series(3), b in series(3), m in 0usize..=3) {
        let lhs = a.mul(&b).unwrap().truncate(m);
        let rhs = a.truncate(m).mul(&b.truncate(m)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_minus_xt_power_law(c in twist_cfg(), p in coeff(), q in coeff()) {
        let c = c.with_order(4);
        let lhs = one_minus_xt_power(&c, &p).mul(&one_minus_xt_power(&c, &q)).unwrap();
        prop_assert_eq!(lhs, one_minus_xt_power(&c, &(&p + &q)));
    }

    #[test]
    fn coproduct_of_hbar_factorials(c in twist_cfg(), b in coeff(), i in 0u32..=4) {
        let q = Quantization::new(c.with_order(0));
        let lhs = delta0(&q.hbar_falling(&int(0), i));
        let mut rhs = Tensor2::zero();
        for k in 0..=i {
            let t = tensor2(&q.hbar_falling(&-b.clone(), k), &q.hbar_falling(&b, i - k));
            rhs.add_scaled(&t, &binomial(&int(i as i64), k));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classical_hopf_maps_are_compatible(a in element(), b in element()) {
        let ab = multiply(&a, &b);
        prop_assert_eq!(delta0(&ab), delta0(&a).mul(&delta0(&b)));
        prop_assert_eq!(s0(&ab), multiply(&s0(&b), &s0(&a)));
        prop_assert_eq!(eps(&ab), eps(&a) * eps(&b));
    }

    #[test]
    fn slot_embeddings_are_homomorphisms(a in element(), b in element(), c in element(), d in element()) {
        let x = tensor2(&a, &b);
        let y = tensor2(&c, &d);
        for pattern in [SlotPattern::Left, SlotPattern::Right] {
            prop_assert_eq!(embed(pattern, &x.mul(&y)), embed(pattern, &x).mul(&embed(pattern, &y)));
        }
    }

    #[test]
    fn tensor_is_bilinear(a in element(), b in element(), c in element(), s in coeff()) {
        let lhs = tensor2(&(&a + &b.scale(&s)), &c);
        let mut rhs = tensor2(&a, &c);
        rhs.add_scaled(&tensor2(&b, &c), &s);
        prop_assert_eq!(&lhs, &rhs);
        let lhs = tensor2(&c, &(&a + &b.scale(&s)));
        let mut rhs = tensor2(&c, &a);
        rhs.add_scaled(&tensor2(&c, &b), &s);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn twisted_structure_on_random_elements(c in twist_cfg(), a in element(), b in element()) {
        let q = Quantization::new(c);
        let da = q.delta(&a);
        prop_assert_eq!(q.delta_id(&da), q.id_delta(&da));
        let expected = AlgSeries::constant(2, a.clone());
        prop_assert_eq!(da.map(eps_left), expected.clone());
        prop_assert_eq!(da.map(eps_right), expected);
        let counit = AlgSeries::constant(2, AlgebraElement::scalar(eps(&a)));
        prop_assert_eq!(q.mu_s_id(&da), counit.clone());
        prop_assert_eq!(q.mu_id_s(&da), counit);
        let ab = multiply(&a, &b);
        prop_assert_eq!(q.delta(&ab), da.mul(&q.delta(&b)).unwrap());
        prop_assert_eq!(q.antipode(&ab), q.antipode(&b).mul(&q.antipode(&a)).unwrap());
    }
}

#[test]
fn ordered_words_are_pbw_monomials() {
    let w = Monomial::from_generators([Generator::w(1), Generator::l(2), Generator::l(-1)]);
    let gens = w.generators();
    assert!(gens.windows(2).all(|p| p[0] <= p[1]));
    assert_eq!(gens[0], Generator::l(-1));
}
