use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::report::expected_dimension;
use crate::abelian::{CartanType, LiftingSpec};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::hopf::{conjugate_by, left_translate, vcoefficient_for, AlgebraMap, Subalgebra};
use crate::rewrite::{
    confluence_check, enumerate_basis, lifting_relations, with_relations, Algebra, Element, Presentation, VCoefficient,
};

/// One conjugation: inside `ambient = U/(ambient relations)`, the algebra
/// map `ψ` on `K = kΓ'[source generators]` carries the ideal of `low` onto
/// the ideal of `high`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessStep {
    pub low: LiftingSpec,
    pub high: LiftingSpec,
    /// Labels of the relations already imposed in the ambient algebra.
    pub ambient: Vec<String>,
    /// `(name, rendered element)` generators of `K` besides the grouplikes.
    pub subalgebra: Vec<(String, String)>,
    /// `ψ` on those generators; grouplikes go to 1.
    pub psi: Vec<Cyclotomic>,
    /// `ψ⁻¹ k ψ` for each generator, rendered.
    pub conjugated: Vec<String>,
    /// Each conjugate equals the corresponding target generator exactly.
    pub generators_match: bool,
    /// The conjugated ideal and the target ideal agree (mutual reduction).
    pub ideals_equal: bool,
    pub conjugated_dimension: Option<u64>,
    /// Dimension of `ambient/(ψ ⇀ J)`.
    pub twisted_dimension: Option<u64>,
    pub target_dimension: u64,
    pub verified: bool,
}

/// A step as used in a chain; `reversed` means it is walked from `high`
/// to `low` (conjugation by `ψ⁻¹`).
#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub step: Arc<WitnessStep>,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuasiIsoWitness {
    pub source: LiftingSpec,
    pub target: LiftingSpec,
    /// Empty when source and target coincide (`ψ = ε`).
    pub chain: Vec<ChainStep>,
}

impl QuasiIsoWitness {
    pub fn verified(&self) -> bool {
        self.chain.iter().all(|s| s.step.verified)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuasiIso {
    Witness(QuasiIsoWitness),
    Absent { note: String },
}

/// What a step needs: the two ends, which of `low`'s relations form the
/// ambient algebra, and the values of `ψ` on `low`'s other generators.
struct StepPlan {
    low: LiftingSpec,
    high: LiftingSpec,
    ambient: &'static [&'static str],
    values: Vec<Cyclotomic>,
}

fn key(s: &LiftingSpec) -> String {
    alloc::format!(
        "{}|{}|{}|{}|{}|{}|{}",
        s.kind,
        s.mu1,
        s.mu2,
        s.lambda.to_expr_string(),
        s.gamma.to_expr_string(),
        s.gamma1.to_expr_string(),
        s.gamma2.to_expr_string()
    )
}

fn mu(m: u8) -> Cyclotomic {
    Cyclotomic::from_int(m as i64)
}

/// Next node towards the hub, with the step connecting them (`node` is
/// the step's `high` end).
fn toward_hub(s: &LiftingSpec) -> Option<StepPlan> {
    let zero = Cyclotomic::zero();
    match s.kind {
        CartanType::B2 => {
            if s.mu1 != 0 || !s.lambda.is_zero() || !s.gamma.is_zero() {
                let low = LiftingSpec::b2(&s.datum, 0, s.mu2, zero.clone(), zero);
                let values = alloc::vec![mu(s.mu1), s.lambda.clone(), s.gamma.clone()];
                Some(StepPlan { low, high: s.clone(), ambient: &["y2"], values })
            } else if s.mu2 != 0 {
                let low = s.with_zero_parameters();
                Some(StepPlan { low, high: s.clone(), ambient: &["y1"], values: alloc::vec![mu(1), zero.clone(), zero] })
            } else {
                None
            }
        }
        _ => {
            let (g1, g2) = (s.gamma1.clone(), s.gamma2.clone());
            if s.mu2 != 0 || !s.lambda.is_zero() {
                let low = LiftingSpec::a2(&s.datum, s.mu1, 0, zero, g1, g2);
                let values = alloc::vec![mu(s.mu2), s.lambda.clone()];
                Some(StepPlan { low, high: s.clone(), ambient: &["z x1", "z x2", "y1"], values })
            } else if s.mu1 != 0 {
                let low = LiftingSpec::a2(&s.datum, 0, 0, zero.clone(), g1, g2);
                Some(StepPlan { low, high: s.clone(), ambient: &["z x1", "z x2", "y2"], values: alloc::vec![mu(1), zero] })
            } else if !g1.is_zero() && g2.is_zero() {
                let low = s.with_zero_parameters();
                Some(StepPlan { low, high: s.clone(), ambient: &["z x2", "y1", "y2", "v"], values: alloc::vec![g1] })
            } else if g1.is_zero() && !g2.is_zero() {
                let low = s.with_zero_parameters();
                Some(StepPlan { low, high: s.clone(), ambient: &["z x1", "y1", "y2", "v"], values: alloc::vec![g2] })
            } else {
                None
            }
        }
    }
}

fn path_to_hub(s: &LiftingSpec) -> Vec<(LiftingSpec, Option<StepPlan>)> {
    let mut out = Vec::new();
    let mut cur = s.clone();
    loop {
        let plan = toward_hub(&cur);
        let next = plan.as_ref().map(|p| p.low.clone());
        out.push((cur, plan));
        match next {
            Some(n) => cur = n,
            None => return out,
        }
    }
}

fn dim_of(p: &Arc<Presentation>) -> Option<u64> {
    enumerate_basis(p).ok().map(|b| b.dimension)
}

fn reduces_to_zero(p: &Arc<Presentation>, elems: &[Element]) -> bool {
    let alg = Algebra::new(p.clone());
    elems.iter().all(|e| alg.reduce(e).is_zero())
}

fn named<'a>(rels: &'a [(String, Element)], pick: impl Fn(&str) -> bool) -> Vec<(&'a str, Element)> {
    rels.iter().filter(|(n, _)| pick(n)).map(|(n, e)| (n.as_str(), e.clone())).collect()
}

fn verify_step(plan: &StepPlan, vcoef: VCoefficient) -> Result<WitnessStep> {
    let d = &plan.low.datum;
    let in_ambient = |n: &str| plan.ambient.contains(&n);
    let (base, low_rels) = lifting_relations(&plan.low, vcoef)?;
    let (_, high_rels) = lifting_relations(&plan.high, vcoef)?;
    let ambient = with_relations(&base, "ambient", &named(&low_rels, in_ambient))?;
    let source = named(&low_rels, |n| !in_ambient(n));
    let target = named(&high_rels, |n| !in_ambient(n));

    let gens: Vec<(String, Element)> = source.iter().map(|(n, e)| ((*n).into(), e.clone())).collect();
    let k = Subalgebra::new(ambient.clone(), &[d.g(1).clone(), d.g(2).clone()], gens)?;
    let psi = AlgebraMap::new(&k, plan.values.clone())?;
    let alg = k.coalgebra().algebra();

    let mut conjugated = Vec::new();
    let mut twisted = Vec::new();
    for (_, j) in &source {
        conjugated.push(conjugate_by(&k, &psi, j)?);
        twisted.push(left_translate(&k, &psi, j)?);
    }
    let generators_match = conjugated.iter().zip(&target).all(|(c, (_, t))| *c == alg.reduce(t));

    let label = |i: usize, s: &str| alloc::format!("{s} {}", source[i].0);
    let conj_named: Vec<(String, Element)> = conjugated.iter().enumerate().map(|(i, e)| (label(i, "conj"), e.clone())).collect();
    let conj_refs: Vec<(&str, Element)> = conj_named.iter().map(|(n, e)| (n.as_str(), e.clone())).collect();
    let q_conj = with_relations(&ambient, "conjugated", &conj_refs)?;
    let q_target = with_relations(&ambient, "target", &target)?;
    let target_elems: Vec<Element> = target.iter().map(|(_, e)| e.clone()).collect();
    let high_elems: Vec<Element> = high_rels.iter().map(|(_, e)| e.clone()).collect();
    let ideals_equal = confluence_check(&Algebra::new(q_conj.clone())).confluent
        && confluence_check(&Algebra::new(q_target.clone())).confluent
        && reduces_to_zero(&q_target, &conjugated)
        && reduces_to_zero(&q_conj, &target_elems)
        && reduces_to_zero(&q_target, &high_elems);

    let tw_named: Vec<(String, Element)> = twisted.iter().enumerate().map(|(i, e)| (label(i, "twist"), e.clone())).collect();
    let tw_refs: Vec<(&str, Element)> = tw_named.iter().map(|(n, e)| (n.as_str(), e.clone())).collect();
    let q_twisted = with_relations(&ambient, "twisted", &tw_refs)?;
    let twisted_dimension = if confluence_check(&Algebra::new(q_twisted.clone())).confluent { dim_of(&q_twisted) } else { None };
    let conjugated_dimension = dim_of(&q_conj);
    let target_dimension = expected_dimension(&plan.high);
    let verified = ideals_equal
        && conjugated_dimension == Some(target_dimension)
        && dim_of(&q_target) == Some(target_dimension)
        && twisted_dimension == Some(target_dimension);
    Ok(WitnessStep {
        low: plan.low.clone(),
        high: plan.high.clone(),
        ambient: plan.ambient.iter().map(|s| String::from(*s)).collect(),
        subalgebra: k.generators().iter().map(|(n, e)| (n.clone(), alg.render(e))).collect(),
        psi: plan.values.clone(),
        conjugated: conjugated.iter().map(|e| alg.render(e)).collect(),
        generators_match,
        ideals_equal,
        conjugated_dimension,
        twisted_dimension,
        target_dimension,
        verified,
    })
}

/// Builds and verifies witness chains, reusing verified steps.
#[derive(Default)]
pub struct WitnessBuilder {
    steps: BTreeMap<(String, String), Arc<WitnessStep>>,
    vcoef: BTreeMap<String, VCoefficient>,
}

impl WitnessBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn step(&mut self, plan: &StepPlan) -> Result<Arc<WitnessStep>> {
        let k = (key(&plan.low), key(&plan.high));
        if let Some(s) = self.steps.get(&k) {
            return Ok(s.clone());
        }
        let dkey = alloc::format!("{:?}", plan.low.datum);
        let vcoef = match self.vcoef.get(&dkey) {
            Some(v) => *v,
            None => {
                let v = vcoefficient_for(&plan.low)?;
                self.vcoef.insert(dkey, v);
                v
            }
        };
        let s = Arc::new(verify_step(plan, vcoef)?);
        self.steps.insert(k, s.clone());
        Ok(s)
    }

    /// Conjugation data relating two liftings of one datum, routed through
    /// the all-zero lifting (B2) or the `γ`-hubs (A2).
    pub fn witness(&mut self, source: &LiftingSpec, target: &LiftingSpec) -> Result<QuasiIso> {
        if source.datum != target.datum || source.kind != target.kind {
            return Err(Error::WrongDatum("source and target must share datum and type".into()));
        }
        source.ensure_admissible()?;
        target.ensure_admissible()?;
        let up = path_to_hub(source);
        let down = path_to_hub(target);
        let meet = up.iter().position(|(s, _)| down.iter().any(|(t, _)| key(t) == key(s)));
        let Some(i) = meet else {
            let note = if source.kind == CartanType::A2 {
                "no witness: a lifting with both gamma1 and gamma2 nonzero is only connected to liftings with the same gammas"
            } else {
                "no witness between these liftings"
            };
            return Ok(QuasiIso::Absent { note: note.into() });
        };
        let meet_key = key(&up[i].0);
        let j = down.iter().position(|(t, _)| key(t) == meet_key).expect("meeting node");
        let mut chain = Vec::new();
        for (_, plan) in &up[..i] {
            let plan = plan.as_ref().expect("non-terminal node has a step");
            chain.push(ChainStep { step: self.step(plan)?, reversed: true });
        }
        for (_, plan) in down[..j].iter().rev() {
            let plan = plan.as_ref().expect("non-terminal node has a step");
            chain.push(ChainStep { step: self.step(plan)?, reversed: false });
        }
        Ok(QuasiIso::Witness(QuasiIsoWitness { source: source.clone(), target: target.clone(), chain }))
    }
}

/// One-off form of [`WitnessBuilder::witness`].
pub fn quasi_iso_witness(source: &LiftingSpec, target: &LiftingSpec) -> Result<QuasiIso> {
    WitnessBuilder::new().witness(source, target)
}
