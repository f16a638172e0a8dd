use alloc::string::String;
use alloc::vec::Vec;

use super::coalgebra::Coalgebra;
use crate::abelian::{CartanType, LiftingSpec, YDDatum};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::rewrite::{
    biproduct, confluence_check, lifting_relations, with_relations, Algebra, Element, Monomial, VCoefficient, Word,
};

/// Outcome of the `ε`, `Δ`, `S` checks for one ideal generator.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorCheck {
    pub name: String,
    /// Neutral identifier of the checked identity, e.g. `ideal.b2.v`.
    pub anchor: String,
    pub counit_ok: bool,
    pub delta_ok: bool,
    pub antipode_ok: bool,
    /// Rendered image of `Δ(j)` in `(U/J) ⊗ (U/J)` (`0` on success).
    pub delta_residue: String,
    /// Rendered image of `S(j)` in `U/J`.
    pub antipode_residue: String,
}

impl GeneratorCheck {
    pub fn passed(&self) -> bool {
        self.counit_ok && self.delta_ok && self.antipode_ok
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfIdealReport {
    pub vcoef: VCoefficient,
    pub confluent: bool,
    pub generators: Vec<GeneratorCheck>,
}

impl HopfIdealReport {
    pub fn passed(&self) -> bool {
        self.confluent && self.generators.iter().all(GeneratorCheck::passed)
    }
}

/// Checks that every generator `j` of `J` has `ε(j) = 0`, `Δ(j) ↦ 0` in
/// `(U/J) ⊗ (U/J)` and `S(j) ↦ 0` in `U/J`, for a given `v`-coefficient.
pub fn hopf_ideal_check_with(spec: &LiftingSpec, vcoef: VCoefficient) -> Result<HopfIdealReport> {
    let (base, rels) = lifting_relations(spec, vcoef)?;
    let named: Vec<(&str, Element)> = rels.iter().map(|(l, e)| (l.as_str(), e.clone())).collect();
    let quotient = with_relations(&base, "lifting", &named)?;
    let confluent = confluence_check(&Algebra::new(quotient.clone())).confluent;
    let on_base = Coalgebra::new(base);
    let on_quot = Coalgebra::new(quotient);
    let kind = if spec.kind == CartanType::B2 { "b2" } else { "a2" };
    let mut generators = Vec::new();
    for (name, j) in &rels {
        let eps = on_base.counit(j)?;
        let d = on_quot.delta(j)?;
        let s = on_quot.antipode(j)?;
        generators.push(GeneratorCheck {
            name: name.clone(),
            anchor: alloc::format!("ideal.{kind}.{}", name.replace(' ', "_")),
            counit_ok: eps.is_zero(),
            delta_ok: d.is_zero(),
            antipode_ok: s.is_zero(),
            delta_residue: on_quot.render(&d),
            antipode_residue: on_quot.algebra().render(&s),
        });
    }
    Ok(HopfIdealReport { vcoef, confluent, generators })
}

/// Which `v`-coefficient makes `zⁿ + C·μ₂x₁ⁿ` primitive modulo `y₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct VAdjudication {
    /// `C` read off from `Δ(zⁿ)` in `U`: the defect of `zⁿ` is
    /// `C·g₁ⁿx₂ⁿ ⊗ x₁ⁿ`, which modulo `y₂` is cancelled exactly by `C·μ₂x₁ⁿ`.
    pub required: Cyclotomic,
    /// `(candidate, equals required)` for both candidates.
    pub candidates: Vec<(VCoefficient, bool)>,
    /// Direct check in `U/(x₂ⁿ − (g₂ⁿ − 1))`, when that quotient is
    /// available for the datum: `(candidate, skew-primitive)`.
    pub direct: Option<Vec<(VCoefficient, bool)>>,
    /// `ω` is `((g₁g₂²)ⁿ, 1)`-primitive in the same quotient.
    pub omega_primitive: Option<bool>,
    pub chosen: VCoefficient,
}

/// `(zⁿ, x₁ⁿ, uⁿ)` data of a B2 datum's biproduct.
fn b2_powers(alg: &Algebra, n: u32) -> Result<(Element, Element, Element, Element)> {
    let pw = |name: &str| -> Result<Element> { Ok(alg.pow(&alg.gen(name)?, n)) };
    Ok((pw("z")?, pw("x1")?, pw("x2")?, pw("u")?))
}

/// `ω = uⁿ + 2(q−1)ⁿμ₂zⁿ + (q²−1)ⁿ(q−1)ⁿμ₂²x₁ⁿ` with `μ₂ = mu2`.
pub fn b2_omega(datum: &YDDatum, alg: &Algebra, mu2: u8) -> Result<Element> {
    let n = datum.n();
    let q = datum.q();
    let one = Cyclotomic::one();
    let qm1 = (q - &one).powu(n as u64);
    let q2m1 = (&(q * q) - &one).powu(n as u64);
    let mu = Cyclotomic::from_int(mu2 as i64);
    let (zn, x1n, _, un) = b2_powers(alg, n)?;
    let mut w = un;
    w.add_scaled(&zn, &(&Cyclotomic::from_int(2) * &(&qm1 * &mu)));
    w.add_scaled(&x1n, &(&(&q2m1 * &qm1) * &(&mu * &mu)));
    Ok(w)
}

/// `υ = zⁿ + C·μ₂x₁ⁿ`.
pub fn b2_upsilon(datum: &YDDatum, alg: &Algebra, mu2: u8, vcoef: VCoefficient) -> Result<Element> {
    let n = datum.n();
    let (zn, x1n, _, _) = b2_powers(alg, n)?;
    let mut v = zn;
    v.add_scaled(&x1n, &(&vcoef.value(datum.q(), n) * &Cyclotomic::from_int(mu2 as i64)));
    Ok(v)
}

/// Decides the coefficient of `μ₂x₁ⁿ` in the B2 generator `v` by computing
/// `Δ(zⁿ)` in the biproduct; when the datum admits `μ₂ = 1`, also checks
/// both candidates and `ω` directly in `U/(y₂)`.
pub fn adjudicate_v(datum: &YDDatum) -> Result<VAdjudication> {
    let base = biproduct(datum, CartanType::B2)?;
    let n = datum.n();
    let nn = n as i64;
    let co = Coalgebra::new(base.clone());
    let alg = co.algebra();
    let (zn, x1n, x2n, _) = b2_powers(alg, n)?;
    let defect = co.primitive_defect(&zn, &datum.g_word(nn, nn))?;
    let g1n = datum.g_word(nn, 0);
    let expected_left = alg.mul(&Element::monomial(g1n, Word::new()), &x2n);
    let mut required = None;
    if let Some((lead, c)) = alg.leading(&expected_left) {
        let c0 = c.clone();
        let key = lead.clone();
        let x1n_mono = x1n.iter().next().map(|(m, _)| m.clone());
        if let (Some(right), 1) = (x1n_mono, expected_left.len()) {
            let terms: Vec<_> = defect.iter().collect();
            if terms.len() == 1 && *terms[0].0 == key && *terms[0].1 == right {
                required = Some(terms[0].2 * &c0);
            }
        }
    }
    let Some(required) = required else {
        return Err(Error::HopfIdealFailure(alloc::format!(
            "Δ(z^{n}) − (g1g2)^{n}⊗z^{n} − z^{n}⊗1 is not a multiple of g1^{n}x2^{n}⊗x1^{n}: {}",
            co.render(&defect)
        )));
    };
    let all = [VCoefficient::QMinusOne, VCoefficient::QSquaredMinusOne];
    let candidates: Vec<(VCoefficient, bool)> = all.iter().map(|&v| (v, v.value(datum.q(), n) == required)).collect();
    let chosen = match candidates.iter().find(|(_, ok)| *ok) {
        Some((v, _)) => *v,
        None => {
            return Err(Error::HopfIdealFailure(alloc::format!(
                "neither candidate equals the required coefficient {}",
                required.to_expr_string()
            )))
        }
    };

    let spec = LiftingSpec::b2(datum, 0, 1, Cyclotomic::zero(), Cyclotomic::zero());
    let (direct, omega_primitive) = if spec.admissible().is_ok() {
        let one = Cyclotomic::one();
        let mut y2 = x2n.clone();
        y2.add_term(Monomial::new(datum.g_word(0, nn), Word::new()), &-&one);
        y2.add_term(Monomial::new(datum.group().identity(), Word::new()), &one);
        let m = with_relations(&base, "b2-mod-y2", &[("y2", y2)])?;
        let cm = Coalgebra::new(m);
        let mut rows = Vec::new();
        for v in all {
            let ups = b2_upsilon(datum, alg, 1, v)?;
            rows.push((v, cm.primitive_defect(&ups, &datum.g_word(nn, nn))?.is_zero()));
        }
        let omega = b2_omega(datum, alg, 1)?;
        let w_ok = cm.primitive_defect(&omega, &datum.g_word(nn, 2 * nn))?.is_zero();
        (Some(rows), Some(w_ok))
    } else {
        (None, None)
    };
    Ok(VAdjudication { required, candidates, direct, omega_primitive, chosen })
}

/// The `v`-coefficient used for a spec: adjudicated for B2, irrelevant
/// (reported as `(q²−1)ⁿ`, the only value `v` could take) for A2.
pub fn vcoefficient_for(spec: &LiftingSpec) -> Result<VCoefficient> {
    match spec.kind {
        CartanType::B2 => Ok(adjudicate_v(&spec.datum)?.chosen),
        _ => Ok(VCoefficient::QSquaredMinusOne),
    }
}

/// Full check of a lifting: adjudication (B2) and the generator checks
/// with the adjudicated coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealCheck {
    pub adjudication: Option<VAdjudication>,
    pub report: HopfIdealReport,
}

pub fn hopf_ideal_check(spec: &LiftingSpec) -> Result<IdealCheck> {
    spec.ensure_admissible()?;
    let adjudication = match spec.kind {
        CartanType::B2 => Some(adjudicate_v(&spec.datum)?),
        _ => None,
    };
    let vcoef = adjudication.as_ref().map(|a| a.chosen).unwrap_or(VCoefficient::QSquaredMinusOne);
    let report = hopf_ideal_check_with(spec, vcoef)?;
    Ok(IdealCheck { adjudication, report })
}
