use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::algebra::Algebra;
use super::element::{Element, Monomial, Word};
use super::presentation::{CoproductRule, Generator, Presentation};
use crate::abelian::{AbelianGroup, CartanType, LiftingSpec, YDDatum};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;

/// Coefficient of `μ₂ x₁ⁿ` in the B2 generator `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VCoefficient {
    /// `(q − 1)ⁿ`
    QMinusOne,
    /// `(q² − 1)ⁿ`
    QSquaredMinusOne,
}

impl VCoefficient {
    pub fn value(self, q: &Cyclotomic, n: u32) -> Cyclotomic {
        let one = Cyclotomic::one();
        match self {
            VCoefficient::QMinusOne => (q - &one).powu(n as u64),
            VCoefficient::QSquaredMinusOne => (&(q * q) - &one).powu(n as u64),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VCoefficient::QMinusOne => "(q-1)^n",
            VCoefficient::QSquaredMinusOne => "(q^2-1)^n",
        }
    }
}

fn c(x: &Cyclotomic) -> Cyclotomic {
    x.clone()
}

fn inv(x: &Cyclotomic) -> Cyclotomic {
    x.inv().expect("braiding scalars are roots of unity")
}

/// Element `Σ c·w` with trivial group prefixes.
fn lin(pres: &Presentation, terms: &[(Cyclotomic, &[u8])]) -> Element {
    terms.iter().map(|(c, w)| (Monomial::new(pres.identity(), w.to_vec()), c.clone())).collect()
}

/// `A(q, λ)`: generators `t < z < x` with `xz = q zx`, `zt = q tz`,
/// `xt = q tx + λ z²`. The scalar `b` is recorded as parameter `b` for
/// expansions of `(x + b z + t)ⁿ`.
pub fn expansion_algebra(q: &Cyclotomic, b: &Cyclotomic, lambda: &Cyclotomic) -> Result<Arc<Presentation>> {
    let gens = ["t", "z", "x"].iter().map(|n| Generator::plain(n, 1)).collect();
    let mut p = Presentation::new("expansion", gens, AbelianGroup::trivial(), None)?;
    let (t, z, x) = (0u8, 1u8, 2u8);
    let xz = lin(&p, &[(c(q), &[z, x])]);
    let zt = lin(&p, &[(c(q), &[t, z])]);
    let xt = lin(&p, &[(c(q), &[t, x]), (c(lambda), &[z, z])]);
    p.add_swap(x, z, xz, "x z = q z x")?;
    p.add_swap(z, t, zt, "z t = q t z")?;
    p.add_swap(x, t, xt, "x t = q t x + lambda z^2")?;
    p.set_param("q", q.clone());
    p.set_param("b", b.clone());
    p.set_param("lambda", lambda.clone());
    Ok(Arc::new(p))
}

/// The variant with `s` in place of `z²`: `xs = q² sx`, `st = q² ts`,
/// `xt = q tx + λ s`.
pub fn s_variant_algebra(q: &Cyclotomic, lambda: &Cyclotomic) -> Result<Arc<Presentation>> {
    let gens = alloc::vec![Generator::plain("t", 1), Generator::plain("s", 2), Generator::plain("x", 1)];
    let mut p = Presentation::new("s-variant", gens, AbelianGroup::trivial(), None)?;
    let (t, s, x) = (0u8, 1u8, 2u8);
    let q2 = q * q;
    let xs = lin(&p, &[(q2.clone(), &[s, x])]);
    let st = lin(&p, &[(q2, &[t, s])]);
    let xt = lin(&p, &[(c(q), &[t, x]), (c(lambda), &[s])]);
    p.add_swap(x, s, xs, "x s = q^2 s x")?;
    p.add_swap(s, t, st, "s t = q^2 t s")?;
    p.add_swap(x, t, xt, "x t = q t x + lambda s")?;
    p.set_param("q", q.clone());
    p.set_param("lambda", lambda.clone());
    Ok(Arc::new(p))
}

/// The expansion algebra with `xz = q² zx`; with `λ ≠ 0` the overlap
/// `x z t` does not resolve.
pub fn corrupted_expansion(q: &Cyclotomic, lambda: &Cyclotomic) -> Result<Arc<Presentation>> {
    let gens = ["t", "z", "x"].iter().map(|n| Generator::plain(n, 1)).collect();
    let mut p = Presentation::new("corrupted", gens, AbelianGroup::trivial(), None)?;
    let (t, z, x) = (0u8, 1u8, 2u8);
    p.add_swap(x, z, lin(&p, &[(q * q, &[z, x])]), "x z = q^2 z x")?;
    p.add_swap(z, t, lin(&p, &[(c(q), &[t, z])]), "z t = q t z")?;
    p.add_swap(x, t, lin(&p, &[(c(q), &[t, x]), (c(lambda), &[z, z])]), "x t = q t x + lambda z^2")?;
    p.set_param("q", q.clone());
    p.set_param("lambda", lambda.clone());
    Ok(Arc::new(p))
}

// B2 generator positions: x2 < u < z < x1.
const B2_X2: u8 = 0;
const B2_U: u8 = 1;
const B2_Z: u8 = 2;
const B2_X1: u8 = 3;

// A2 generator positions: x1 < z < x2.
const A2_X1: u8 = 0;
const A2_Z: u8 = 1;
const A2_X2: u8 = 2;

fn b2_generators(datum: &YDDatum, with_group: bool) -> Vec<Generator> {
    let ch = |a: i64, b: i64| if with_group { datum.chi_word(a, b).exps().to_vec() } else { Vec::new() };
    let b21 = datum.b(2, 1);
    let b21b22 = b21 * datum.b(2, 2);
    let (g1, g2) = if with_group {
        (CoproductRule::SkewPrimitive(datum.g(1).clone()), CoproductRule::SkewPrimitive(datum.g(2).clone()))
    } else {
        (CoproductRule::None, CoproductRule::None)
    };
    let (cz, cu) = if with_group {
        (
            CoproductRule::Defined(alloc::vec![(Cyclotomic::one(), alloc::vec![B2_X2, B2_X1]), (-b21, alloc::vec![B2_X1, B2_X2])]),
            CoproductRule::Defined(alloc::vec![(Cyclotomic::one(), alloc::vec![B2_X2, B2_Z]), (-b21b22, alloc::vec![B2_Z, B2_X2])]),
        )
    } else {
        (CoproductRule::None, CoproductRule::None)
    };
    alloc::vec![
        Generator { name: "x2".into(), weight: 1, character: ch(0, 1), coproduct: g2 },
        Generator { name: "u".into(), weight: 3, character: ch(1, 2), coproduct: cu },
        Generator { name: "z".into(), weight: 2, character: ch(1, 1), coproduct: cz },
        Generator { name: "x1".into(), weight: 1, character: ch(1, 0), coproduct: g1 },
    ]
}

fn add_b2_rules(p: &mut Presentation, datum: &YDDatum) -> Result<()> {
    let b = |i, j| datum.b(i, j).clone();
    let (x2, u, z, x1) = (B2_X2, B2_U, B2_Z, B2_X1);
    let b21i = inv(&b(2, 1));
    let r_x1x2 = lin(p, &[(b21i.clone(), &[x2, x1]), (-&b21i, &[z])]);
    let b21b22i = inv(&(&b(2, 1) * &b(2, 2)));
    let r_zx2 = lin(p, &[(b21b22i.clone(), &[x2, z]), (-&b21b22i, &[u])]);
    let r_x1z = lin(p, &[(b(1, 2), &[z, x1])]);
    let r_ux2 = lin(p, &[(inv(&(&b(2, 1) * &(&b(2, 2) * &b(2, 2)))), &[x2, u])]);
    let r_zu = lin(p, &[(inv(&(&b(1, 1) * &b(2, 1))), &[u, z])]);
    let tail = &b21i * &(&inv(&b(2, 2)) - &Cyclotomic::one());
    let r_x1u = lin(p, &[(&b21i * &b(1, 2), &[u, x1]), (tail, &[z, z])]);
    p.add_swap(x1, x2, r_x1x2, "z = x2 x1 - b21 x1 x2")?;
    p.add_swap(z, x2, r_zx2, "u = x2 z - b21 b22 z x2")?;
    p.add_swap(x1, z, r_x1z, "x1 z = b12 z x1")?;
    p.add_swap(u, x2, r_ux2, "x2 u = b21 b22^2 u x2")?;
    p.add_swap(z, u, r_zu, "u z = b11 b21 z u")?;
    p.add_swap(x1, u, r_x1u, "x1 u = b21^-1 b12 u x1 + b21^-1 (b22^-1 - 1) z^2")?;
    Ok(())
}

fn set_datum_params(p: &mut Presentation, datum: &YDDatum) {
    p.set_param("q", datum.q().clone());
    for i in 1..=2 {
        for j in 1..=2 {
            p.set_param(&alloc::format!("b{i}{j}"), datum.b(i, j).clone());
        }
    }
}

fn add_aliases(p: &mut Presentation, datum: &YDDatum) -> Result<()> {
    p.add_alias("g1", datum.g(1).clone())?;
    p.add_alias("g2", datum.g(2).clone())
}

fn require_type(datum: &YDDatum, kind: CartanType) -> Result<()> {
    let found = crate::abelian::cartan_type(datum);
    if found != kind {
        return Err(Error::WrongType(alloc::format!("datum has type {found}, expected {kind}")));
    }
    Ok(())
}

/// `U⁺` of type B2: generators `x2 < u < z < x1` with the six straightening
/// rules; no group part.
pub fn b2_uplus(datum: &YDDatum) -> Result<Arc<Presentation>> {
    require_type(datum, CartanType::B2)?;
    let mut p = Presentation::new("b2-uplus", b2_generators(datum, false), AbelianGroup::trivial(), Some(datum.clone()))?;
    add_b2_rules(&mut p, datum)?;
    set_datum_params(&mut p, datum);
    Ok(Arc::new(p))
}

fn a2_generators(datum: &YDDatum) -> Vec<Generator> {
    let b12 = datum.b(1, 2);
    let ch = |a: i64, b: i64| datum.chi_word(a, b).exps().to_vec();
    alloc::vec![
        Generator {
            name: "x1".into(),
            weight: 1,
            character: ch(1, 0),
            coproduct: CoproductRule::SkewPrimitive(datum.g(1).clone()),
        },
        Generator {
            name: "z".into(),
            weight: 2,
            character: ch(1, 1),
            coproduct: CoproductRule::Defined(alloc::vec![
                (Cyclotomic::one(), alloc::vec![A2_X1, A2_X2]),
                (-b12, alloc::vec![A2_X2, A2_X1]),
            ]),
        },
        Generator {
            name: "x2".into(),
            weight: 1,
            character: ch(0, 1),
            coproduct: CoproductRule::SkewPrimitive(datum.g(2).clone()),
        },
    ]
}

/// The biproduct of the free algebra on `x1, x2` with the group, written
/// with `z = x1 x2 − b12 x2 x1` as an extra generator (`x1 < z < x2`).
pub fn a2_free(datum: &YDDatum) -> Result<Arc<Presentation>> {
    require_type(datum, CartanType::A2)?;
    let mut p = Presentation::new("a2-free", a2_generators(datum), datum.group().clone(), Some(datum.clone()))?;
    let b12i = inv(datum.b(1, 2));
    let r = lin(&p, &[(b12i.clone(), &[A2_X1, A2_X2]), (-&b12i, &[A2_Z])]);
    p.add_swap(A2_X2, A2_X1, r, "z = x1 x2 - b12 x2 x1")?;
    add_aliases(&mut p, datum)?;
    set_datum_params(&mut p, datum);
    Ok(Arc::new(p))
}

/// `U = U⁺ # kΓ` for a datum of the given type.
pub fn biproduct(datum: &YDDatum, kind: CartanType) -> Result<Arc<Presentation>> {
    require_type(datum, kind)?;
    match kind {
        CartanType::B2 => {
            let mut p = Presentation::new("b2-biproduct", b2_generators(datum, true), datum.group().clone(), Some(datum.clone()))?;
            add_b2_rules(&mut p, datum)?;
            add_aliases(&mut p, datum)?;
            set_datum_params(&mut p, datum);
            Ok(Arc::new(p))
        }
        CartanType::A2 => {
            let free = a2_free(datum)?;
            let alg = Algebra::new(free.clone());
            let rels = [
                ("z x1 = b21 x1 z", alg.parse("z*x1 - b21*x1*z")?),
                ("x2 z = b21 z x2", alg.parse("x2*z - b21*z*x2")?),
            ];
            with_relations(&free, "a2-biproduct", &rels)
        }
        CartanType::Other => Err(Error::WrongType("no presentation for this type".into())),
    }
}

/// Adds relations to a presentation: each is normalized by the rules so
/// far and oriented by its leading monomial into a swap or power rule.
/// Relations that normalize to zero are dropped.
pub fn with_relations(base: &Arc<Presentation>, name: &str, relations: &[(&str, Element)]) -> Result<Arc<Presentation>> {
    let mut current = base.clone();
    for (label, rel) in relations {
        let alg = Algebra::new(current.clone());
        let normal = alg.reduce(rel);
        let Some((lead, coeff)) = current.leading(&normal) else {
            continue;
        };
        let (lead, coeff) = (lead.clone(), coeff.clone());
        let group = current.group();
        let hinv = group.inv(&lead.group);
        let scale = -coeff.inv()?;
        let mut rhs = Element::zero();
        for (m, v) in normal.iter() {
            if *m == lead {
                continue;
            }
            rhs.add_term(Monomial::new(group.mul(&hinv, &m.group), m.word.clone()), &(v * &scale));
        }
        let w: &Word = &lead.word;
        let mut next = (*current).clone();
        if w.len() >= 2 && w.iter().all(|&x| x == w[0]) {
            next.add_power(w[0], w.len() as u32, rhs, label)?;
        } else if w.len() == 2 {
            next.add_swap(w[0], w[1], rhs, label)?;
        } else {
            return Err(Error::NotExpressible(alloc::format!(
                "relation `{label}` has leading word {} which is neither a pair nor a power",
                current.render_word(w)
            )));
        }
        current = Arc::new(next);
    }
    let mut out = (*current).clone();
    out.set_name(name);
    Ok(Arc::new(out))
}

/// Generators of the ideal `J` for a lifting, as labelled elements of the
/// (free, for A2) biproduct.
pub fn lifting_relations(spec: &LiftingSpec, vcoef: VCoefficient) -> Result<(Arc<Presentation>, Vec<(String, Element)>)> {
    spec.ensure_admissible()?;
    let d = &spec.datum;
    let n = spec.n();
    let q = d.q().clone();
    let one = Cyclotomic::one();
    let mu = |m: u8| Cyclotomic::from_int(m as i64);
    let base = match spec.kind {
        CartanType::B2 => biproduct(d, CartanType::B2)?,
        CartanType::A2 => a2_free(d)?,
        CartanType::Other => return Err(Error::WrongType("no lifting for this type".into())),
    };
    let alg = Algebra::new(base.clone());
    let x1 = alg.gen("x1")?;
    let x2 = alg.gen("x2")?;
    let z = alg.gen("z")?;
    let gl = |a: i64, b: i64| -> Element {
        let mut e = Element::monomial(d.g_word(a, b), Word::new());
        e.add_term(Monomial::new(d.group().identity(), Word::new()), &-&one);
        e
    };
    let nn = n as i64;
    let pw = |e: &Element| alg.pow(e, n);
    let mut rels = Vec::new();
    let y1 = &pw(&x1) - &gl(nn, 0).scale(&mu(spec.mu1));
    let y2 = &pw(&x2) - &gl(0, nn).scale(&mu(spec.mu2));
    match spec.kind {
        CartanType::B2 => {
            let u = alg.gen("u")?;
            rels.push(("y1".into(), y1));
            rels.push(("y2".into(), y2));
            let mut v = pw(&z);
            v.add_scaled(&pw(&x1), &(&vcoef.value(&q, n) * &mu(spec.mu2)));
            v.add_scaled(&gl(nn, nn), &-&spec.lambda);
            rels.push(("v".into(), v));
            let qm1n = (&q - &one).powu(n as u64);
            let q2m1n = (&(&q * &q) - &one).powu(n as u64);
            let mut w = pw(&u);
            w.add_scaled(&pw(&z), &(&Cyclotomic::from_int(2) * &(&qm1n * &mu(spec.mu2))));
            w.add_scaled(&pw(&x1), &(&(&q2m1n * &qm1n) * &mu(spec.mu2 * spec.mu2)));
            w.add_scaled(&gl(nn, 2 * nn), &-&spec.gamma);
            rels.push(("w".into(), w));
        }
        _ => {
            let b21 = d.b(2, 1);
            let mut c1 = &alg.mul(&z, &x1) - &alg.mul(&x1, &z).scale(b21);
            c1.add_scaled(&gl(2, 1), &-&spec.gamma1);
            let comm2 = &alg.mul(&z, &x2) - &alg.mul(&x2, &z).scale(&inv(b21));
            let mut c2 = comm2.clone();
            c2.add_scaled(&gl(1, 2), &-&spec.gamma2);
            rels.push(("z x1".into(), c1));
            rels.push(("z x2".into(), c2));
            rels.push(("y1".into(), y1));
            rels.push(("y2".into(), y2));
            let mut v = pw(&z);
            v.add_scaled(&pw(&x2), &(&(&q - &one).powu(n as u64) * &mu(spec.mu1)));
            v.add_scaled(&comm2, &(&(&one - &q) * &spec.gamma1));
            v.add_scaled(&gl(nn, nn), &-&spec.lambda);
            rels.push(("v".into(), v));
        }
    }
    Ok((base, rels))
}

/// `U/J` for an admissible lifting spec. Lifting quotients of type A2 are
/// built on the free biproduct so the `γ` deformations enter as rules.
pub fn lifting_quotient(spec: &LiftingSpec, vcoef: VCoefficient) -> Result<Arc<Presentation>> {
    let (base, rels) = lifting_relations(spec, vcoef)?;
    let named: Vec<(&str, Element)> = rels.iter().map(|(l, e)| (l.as_str(), e.clone())).collect();
    let name = match spec.kind {
        CartanType::B2 => "b2-lifting",
        _ => "a2-lifting",
    };
    with_relations(&base, name, &named)
}
