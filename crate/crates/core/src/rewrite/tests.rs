use alloc::sync::Arc;
use alloc::vec::Vec;

use super::*;
use crate::abelian::{AbelianGroup, CartanType, LiftingSpec, YDDatum};
use crate::testdata::*;
use crate::exactnum::{Cyclotomic, Rational};
use crate::qcalc::{gqb_expand, q_int, NuParams};

fn word(alg: &Algebra, text: &str) -> Element {
    alg.normalize_text(text).unwrap()
}

#[test]
fn expansion_products() {
    let q = zeta(5);
    let lam = c(3);
    let p = expansion_algebra(&q, &c(2), &lam).unwrap();
    let alg = Algebra::new(p);
    let (x, t, z) = (alg.gen("x").unwrap(), alg.gen("t").unwrap(), alg.gen("z").unwrap());
    let expect = &alg.mul(&t, &x).scale(&q) + &alg.mul(&z, &z).scale(&lam);
    assert_eq!(alg.mul(&x, &t), expect);
    assert_eq!(alg.render(&alg.mul(&x, &t)), "3*z^2 + (zeta(5))*t*x");
    assert_eq!(alg.mul(&alg.one(), &x), x);
    assert_eq!(alg.pow(&x, 0), alg.one());
}

#[test]
fn expansion_is_confluent_and_unbounded() {
    for q in [zeta(3), zeta(12), c(2)] {
        let p = expansion_algebra(&q, &c(1), &c(-2)).unwrap();
        let report = confluence_check(&Algebra::new(p.clone()));
        assert!(report.confluent, "{report:?}");
        assert!(report.checked > 0);
        assert!(matches!(enumerate_basis(&p), Err(crate::Error::InfiniteDimensional(_))));
    }
}

#[test]
fn corrupted_rules_fail_on_named_overlap() {
    let p = corrupted_expansion(&zeta(5), &c(1)).unwrap();
    let report = confluence_check(&Algebra::new(p));
    assert!(!report.confluent);
    assert_eq!(report.failures.len(), 1);
    assert_eq!(report.failures[0].overlap, "x z t");
    assert_eq!(report.failures[0].kind, OverlapKind::SwapSwap);
}

#[test]
fn order_violations_are_rejected() {
    let gens = alloc::vec![Generator::plain("a", 1), Generator::plain("b", 1)];
    let mut p = Presentation::new("bad", gens, AbelianGroup::trivial(), None).unwrap();
    let rhs = Element::monomial(alloc::vec![], alloc::vec![1, 0]);
    assert!(matches!(p.add_swap(0, 1, rhs, "ab = ba"), Err(crate::Error::OrderViolation(_))));
}

#[test]
fn xt_power_formula() {
    let q = zeta(7);
    let lam = &c(2) - &zeta(7);
    let p = expansion_algebra(&q, &c(0), &lam).unwrap();
    let alg = Algebra::new(p);
    let (x, t, z) = (alg.gen("x").unwrap(), alg.gen("t").unwrap(), alg.gen("z").unwrap());
    for n in 1..=8u32 {
        let lhs = alg.mul(&x, &alg.pow(&t, n));
        let mut rhs = alg.mul(&alg.pow(&t, n), &x).scale(&q.powu(n as u64));
        let tail = alg.product(&[alg.pow(&t, n - 1), z.clone(), z.clone()]);
        rhs.add_scaled(&tail, &(&(&lam * &q.powu(n as u64 - 1)) * &q_int(n as i64, &q)));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

/// `(x + b z + t)ⁿ` as a table indexed like `GqbTable`.
fn expansion_matches(q: &Cyclotomic, b: &Cyclotomic, lam: &Cyclotomic, n: usize) -> bool {
    let p = expansion_algebra(q, b, lam).unwrap();
    let alg = Algebra::new(p);
    let base = alg.parse("x + b*z + t").unwrap();
    let lhs = alg.pow(&base, n as u32);
    let table = gqb_expand(n, &NuParams { b: b.clone(), lambda: lam.clone(), q: q.clone() });
    let mut rhs = Element::zero();
    for (i, j, coeff) in table.iter() {
        let mut w = Vec::new();
        w.extend(core::iter::repeat(0u8).take(j));
        w.extend(core::iter::repeat(1u8).take(i - j));
        w.extend(core::iter::repeat(2u8).take(n - i));
        rhs.add_term(Monomial::new(alloc::vec![], w), coeff);
    }
    lhs == rhs
}

#[test]
fn generalized_binomial_expansion() {
    let q = zeta(5);
    let b = &c(1) + &zeta(5);
    let lam = c(-3);
    for n in 0..=6 {
        assert!(expansion_matches(&q, &b, &lam, n), "n = {n}");
    }
    let half = Cyclotomic::rational(Rational::new(1, 2).unwrap());
    assert!(expansion_matches(&c(2), &half, &c(5), 5));
}

#[test]
fn sum_power_collapse() {
    for n in [3u32, 5, 7] {
        let q = zeta(n);
        let p = s_variant_algebra(&q, &(&c(1) - &zeta(n))).unwrap();
        let alg = Algebra::new(p.clone());
        assert!(confluence_check(&alg).confluent);
        let (x, t) = (alg.gen("x").unwrap(), alg.gen("t").unwrap());
        let lhs = alg.pow(&(&x + &t), n);
        assert_eq!(lhs, &alg.pow(&x, n) + &alg.pow(&t, n), "n = {n}");
    }
}

fn skew_power_algebra(alpha: &Cyclotomic, beta: &Cyclotomic) -> Algebra {
    let gens = alloc::vec![Generator::plain("X", 1), Generator::plain("Z", 2), Generator::plain("Y", 1)];
    let mut p = Presentation::new("skew-power", gens, AbelianGroup::trivial(), None).unwrap();
    let id = p.identity();
    let yx: Element = [
        (Monomial::new(id.clone(), alloc::vec![0, 2]), alpha.clone()),
        (Monomial::new(id.clone(), alloc::vec![1]), c(1)),
    ]
    .into_iter()
    .collect();
    p.add_swap(2, 0, yx, "YX = a XY + Z").unwrap();
    p.add_swap(1, 0, Element::term(beta.clone(), Monomial::new(id, alloc::vec![0, 1])), "ZX = b XZ").unwrap();
    Algebra::new(Arc::new(p))
}

#[test]
fn skew_power_identity() {
    let (alpha, beta) = (zeta(9), zeta(9).powu(4));
    let alg = skew_power_algebra(&alpha, &beta);
    assert!(confluence_check(&alg).confluent);
    let (x, y, z) = (alg.gen("X").unwrap(), alg.gen("Y").unwrap(), alg.gen("Z").unwrap());
    for n in 1..=8u32 {
        let lhs = alg.mul(&y, &alg.pow(&x, n));
        let mut rhs = alg.mul(&alg.pow(&x, n), &y).scale(&alpha.powu(n as u64));
        let mut s = c(0);
        for i in 0..n as u64 {
            s = &s + &(&alpha.powu(i) * &beta.powu(n as u64 - 1 - i));
        }
        rhs.add_scaled(&alg.mul(&alg.pow(&x, n - 1), &z), &s);
        assert_eq!(lhs, rhs, "n = {n}");
    }
    // α ≠ β with αⁿ = βⁿ: the tail vanishes.
    let (alpha, beta) = (zeta(5), zeta(5).powu(3));
    let alg = skew_power_algebra(&alpha, &beta);
    let (x, y) = (alg.gen("X").unwrap(), alg.gen("Y").unwrap());
    let lhs = alg.mul(&y, &alg.pow(&x, 5));
    assert_eq!(lhs, alg.mul(&alg.pow(&x, 5), &y).scale(&alpha.powu(5)));
}

#[test]
fn b2_uplus_rules() {
    let d = b2_z33();
    let p = b2_uplus(&d).unwrap();
    assert_eq!(p.swap_rules().count(), 6);
    let alg = Algebra::new(p);
    let report = confluence_check(&alg);
    assert!(report.confluent, "{report:?}");
    let b = |i, j| d.b(i, j).clone();
    let (x1, x2, z, u) = (alg.gen("x1").unwrap(), alg.gen("x2").unwrap(), alg.gen("z").unwrap(), alg.gen("u").unwrap());
    // x1 x2 = b21⁻¹ x2 x1 − b21⁻¹ z
    let b21i = b(2, 1).inv().unwrap();
    assert_eq!(alg.mul(&x1, &x2), &alg.mul(&x2, &x1).scale(&b21i) - &z.scale(&b21i));
    assert_eq!(alg.mul(&x1, &z), word(&alg, "z x1").scale(&b(1, 2)));
    assert_eq!(alg.mul(&z, &u), word(&alg, "u z").scale(&(&b(1, 1) * &b(2, 1)).inv().unwrap()));
    // the defining combinations reproduce z and u
    assert_eq!(&word(&alg, "x2 x1") - &word(&alg, "x1 x2").scale(&b(2, 1)), z);
    assert_eq!(&word(&alg, "x2 z") - &word(&alg, "z x2").scale(&(&b(2, 1) * &b(2, 2))), u);
}

#[test]
fn biproduct_group_passage() {
    let d = b2_z33();
    let p = biproduct(&d, CartanType::B2).unwrap();
    let alg = Algebra::new(p.clone());
    assert!(confluence_check(&alg).confluent);
    for h in d.group().elements() {
        let he = alg.group_elem(h.clone()).unwrap();
        for (i, name) in [(1usize, "x1"), (2, "x2")] {
            let x = alg.gen(name).unwrap();
            let chi = d.chi(i).eval(&h).unwrap();
            assert_eq!(alg.mul(&x, &he), alg.mul(&he, &x).scale(&chi.inv().unwrap()));
        }
    }
    let b11i = d.b(1, 1).inv().unwrap();
    assert_eq!(alg.render(&word(&alg, "x1 g1")), alloc::format!("{}*g[1,0]*x1", b11i.to_factor_string()));
}

/// The twelve power commutations and `x1 x2ⁿ = b12ⁿ x2ⁿ x1` in U⁺.
fn commutation_suite(d: &YDDatum) {
    let n = d.n();
    let alg = Algebra::new(b2_uplus(d).unwrap());
    let b = |i, j| d.b(i, j).clone();
    let bn = |i, j, k: u32| b(i, j).powu((k * n) as u64);
    let g = |s: &str| alg.gen(s).unwrap();
    let cases: [(&str, &str, Cyclotomic); 12] = [
        ("x2", "x1", bn(2, 1, 1)),
        ("z", "x1", bn(2, 1, 1)),
        ("u", "x1", bn(2, 1, 2)),
        ("z", "x2", bn(1, 2, 1)),
        ("u", "x2", bn(1, 2, 1)),
        ("x1", "z", bn(1, 2, 1)),
        ("x2", "z", bn(2, 1, 1)),
        ("u", "z", bn(2, 1, 1)),
        ("x1", "u", bn(1, 2, 2)),
        ("x2", "u", bn(2, 1, 1)),
        ("z", "u", bn(1, 2, 1)),
        ("x1", "x2", bn(1, 2, 1)),
    ];
    for (y, x, coeff) in cases {
        let xn = alg.pow(&g(x), n);
        let lhs = alg.mul(&g(y), &xn);
        let rhs = alg.mul(&xn, &g(y)).scale(&coeff);
        assert_eq!(lhs, rhs, "{y} {x}^{n}");
    }
}

#[test]
fn power_commutations_n3() {
    commutation_suite(&b2_z33());
}

#[test]
fn power_commutations_n7() {
    let d = b2_n7();
    assert_eq!(d.n(), 7);
    assert!(confluence_check(&Algebra::new(b2_uplus(&d).unwrap())).confluent);
    commutation_suite(&d);
}

#[test]
fn derived_relations_hold() {
    let d = b2_n7();
    let alg = Algebra::new(b2_uplus(&d).unwrap());
    let b = |i, j| d.b(i, j).clone();
    let q = d.q().clone();
    let comm = |a: &str, bb: &str, k: &Cyclotomic| {
        alg.commutator(&alg.gen(a).unwrap(), &alg.gen(bb).unwrap(), k)
    };
    assert!(comm("x1", "z", &b(1, 2)).is_zero());
    assert!(comm("u", "x2", &b(1, 2)).is_zero());
    assert!(comm("z", "u", &b(1, 2)).is_zero());
    let b2122 = &b(2, 1) * &b(2, 2);
    let mut da1 = comm("u", "x1", &(&b2122 * &b2122));
    da1.add_scaled(&word(&alg, "z z"), &-&(&b2122 * &(&q - &c(1))));
    assert!(da1.is_zero(), "{}", alg.render(&da1));
}

#[test]
fn a2_presentations() {
    for d in [a2_z33(), a2_z49()] {
        for p in [a2_free(&d).unwrap(), biproduct(&d, CartanType::A2).unwrap()] {
            let report = confluence_check(&Algebra::new(p.clone()));
            assert!(report.confluent, "{}: {report:?}", p.name());
        }
    }
    let d = a2_z33();
    let p = biproduct(&d, CartanType::A2).unwrap();
    assert_eq!(p.swap_rules().count(), 3);
    assert!(biproduct(&d, CartanType::B2).is_err());
}

#[test]
fn lifting_dimensions() {
    let d = b2_z33();
    let spec = LiftingSpec::zero(&d, CartanType::B2);
    let p = lifting_quotient(&spec, VCoefficient::QSquaredMinusOne).unwrap();
    let alg = Algebra::new(p.clone());
    assert!(confluence_check(&alg).confluent);
    for g in ["x1", "x2", "z", "u"] {
        assert!(alg.pow(&alg.gen(g).unwrap(), 3).is_zero(), "{g}^3");
    }
    assert_eq!(enumerate_basis(&p).unwrap().dimension, 729);

    let d = a2_z49();
    let spec = LiftingSpec::a2(&d, 1, 1, c(1), c(0), c(0));
    let p = lifting_quotient(&spec, VCoefficient::QMinusOne).unwrap();
    assert_eq!(enumerate_basis(&p).unwrap().dimension, 16807);
}

#[test]
fn a2_gamma_rule() {
    let d = a2_z33();
    let g = c(2);
    let spec = LiftingSpec::a2(&d, 0, 0, c(0), g.clone(), c(0));
    let p = lifting_quotient(&spec, VCoefficient::QMinusOne).unwrap();
    let alg = Algebra::new(p.clone());
    assert!(confluence_check(&alg).confluent);
    let q = d.q().clone();
    let lhs = word(&alg, "z x1");
    let mut rhs = word(&alg, "x1 z").scale(&q);
    rhs.add_scaled(&alg.parse("g1^2*g2 - 1").unwrap(), &g);
    assert_eq!(lhs, rhs);
    assert_eq!(enumerate_basis(&p).unwrap().dimension, 27 * 9);
}

#[test]
fn parse_render_roundtrip() {
    let d = b2_z33();
    let alg = Algebra::new(biproduct(&d, CartanType::B2).unwrap());
    let e = alg.parse("(x1 + g1*z)^2 - 3*u*x2 + b12*g2").unwrap();
    let text = alg.render(&e);
    assert_eq!(alg.parse(&text).unwrap(), e);
    assert!(alg.parse("x1 + w").is_err());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn presentations() -> Vec<Arc<Presentation>> {
        let b2 = b2_z33();
        let a2 = a2_z33();
        let b2_lift = LiftingSpec::b2(&b2, 0, 0, c(0), c(0));
        let a2_lift = LiftingSpec::a2(&a2, 0, 0, c(0), c(1), c(2));
        alloc::vec![
            expansion_algebra(&zeta(12), &c(1), &c(2)).unwrap(),
            s_variant_algebra(&zeta(5), &c(-1)).unwrap(),
            b2_uplus(&b2).unwrap(),
            biproduct(&b2, CartanType::B2).unwrap(),
            a2_free(&a2).unwrap(),
            biproduct(&a2, CartanType::A2).unwrap(),
            lifting_quotient(&b2_lift, VCoefficient::QSquaredMinusOne).unwrap(),
            lifting_quotient(&a2_lift, VCoefficient::QMinusOne).unwrap(),
        ]
    }

    /// Random element: up to three terms, each a small coefficient times a
    /// group element and a word of length ≤ 4.
    fn element(alg: &Algebra, spec: &[(i64, u32, Vec<u8>)]) -> Element {
        let pres = alg.presentation();
        let els = pres.group().elements();
        let mut out = Element::zero();
        for (k, gi, w) in spec {
            let word: Vec<u8> = w.iter().map(|&x| x % pres.ngens() as u8).collect();
            let g = els[*gi as usize % els.len()].clone();
            out.add_term(Monomial::new(g, word), &c(*k));
        }
        alg.reduce(&out)
    }

    fn spec() -> impl Strategy<Value = Vec<(i64, u32, Vec<u8>)>> {
        proptest::collection::vec((-3i64..=3, 0u32..81, proptest::collection::vec(0u8..4, 0..4)), 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn normal_forms_are_idempotent(which in 0usize..8, s in spec()) {
            let alg = Algebra::new(presentations()[which].clone());
            let e = element(&alg, &s);
            prop_assert_eq!(alg.reduce(&e), e.clone());
            prop_assert_eq!(alg.parse(&alg.render(&e)).unwrap(), e);
        }

        #[test]
        fn multiplication_is_associative(which in 0usize..8, a in spec(), b in spec(), cc in spec()) {
            let alg = Algebra::new(presentations()[which].clone());
            let (a, b, cc) = (element(&alg, &a), element(&alg, &b), element(&alg, &cc));
            let left = alg.mul(&alg.mul(&a, &b), &cc);
            let right = alg.mul(&a, &alg.mul(&b, &cc));
            prop_assert_eq!(left, right);
        }
    }
}
