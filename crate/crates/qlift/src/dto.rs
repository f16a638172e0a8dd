//! JSON shapes for data, lifting specs and presentations.

use std::path::Path;
use std::sync::Arc;

use qlift_core::abelian::{AbelianGroup, CartanType, LiftingSpec, YDDatum};
use qlift_core::rewrite::{
    a2_free, expansion_algebra, b2_uplus, biproduct, corrupted_expansion, lifting_quotient, s_variant_algebra,
    with_relations, Algebra, Presentation,
};
use qlift_core::Cyclotomic;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDto {
    pub invariant_factors: Vec<u32>,
    pub g1: Vec<i64>,
    pub g2: Vec<i64>,
    pub chi1: Vec<i64>,
    pub chi2: Vec<i64>,
}

impl DatumDto {
    pub fn from_datum(d: &YDDatum) -> Self {
        let ints = |v: &[u32]| v.iter().map(|&x| x as i64).collect();
        DatumDto {
            invariant_factors: d.group().factors().to_vec(),
            g1: ints(d.g(1)),
            g2: ints(d.g(2)),
            chi1: ints(d.chi(1).exps()),
            chi2: ints(d.chi(2).exps()),
        }
    }

    pub fn to_datum(&self) -> Result<YDDatum, CliError> {
        let group = AbelianGroup::new(self.invariant_factors.clone())?;
        Ok(YDDatum::new(&group, &self.g1, &self.g2, &self.chi1, &self.chi2)?)
    }
}

fn zero_str() -> String {
    "0".into()
}

/// `{"datum": {...}, "type": "B2", "mu1": 0, "mu2": 1, "lambda": "...", "gamma": "..."}`;
/// A2 specs carry `gamma1`/`gamma2` instead of `gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDto {
    pub datum: DatumDto,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub mu1: u8,
    #[serde(default)]
    pub mu2: u8,
    #[serde(default = "zero_str")]
    pub lambda: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma2: Option<String>,
}

pub fn parse_scalar(field: &str, text: &str) -> Result<Cyclotomic, CliError> {
    Cyclotomic::parse(text).map_err(|e| CliError::Validation(format!("{field}: {e}")))
}

pub fn scalar_string(c: &Cyclotomic) -> String {
    c.to_expr_string()
}

impl SpecDto {
    pub fn from_spec(s: &LiftingSpec) -> Self {
        let a2 = s.kind == CartanType::A2;
        SpecDto {
            datum: DatumDto::from_datum(&s.datum),
            kind: s.kind.to_string(),
            mu1: s.mu1,
            mu2: s.mu2,
            lambda: scalar_string(&s.lambda),
            gamma: (!a2).then(|| scalar_string(&s.gamma)),
            gamma1: a2.then(|| scalar_string(&s.gamma1)),
            gamma2: a2.then(|| scalar_string(&s.gamma2)),
        }
    }

    pub fn to_spec(&self) -> Result<LiftingSpec, CliError> {
        let datum = self.datum.to_datum()?;
        let kind: CartanType = self.kind.parse()?;
        let opt = |field: &str, v: &Option<String>| match v {
            Some(t) => parse_scalar(field, t),
            None => Ok(Cyclotomic::zero()),
        };
        let lambda = parse_scalar("lambda", &self.lambda)?;
        let spec = match kind {
            CartanType::B2 => {
                if self.gamma1.is_some() || self.gamma2.is_some() {
                    return Err(CliError::Validation("B2 specs take `gamma`, not `gamma1`/`gamma2`".into()));
                }
                LiftingSpec::b2(&datum, self.mu1, self.mu2, lambda, opt("gamma", &self.gamma)?)
            }
            _ => {
                if self.gamma.is_some() {
                    return Err(CliError::Validation("A2 specs take `gamma1`/`gamma2`, not `gamma`".into()));
                }
                LiftingSpec::a2(&datum, self.mu1, self.mu2, lambda, opt("gamma1", &self.gamma1)?, opt("gamma2", &self.gamma2)?)
            }
        };
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDto {
    pub label: String,
    /// Element text in the base presentation's generators, e.g. `x1^3 - g1^3 + 1`.
    pub element: String,
}

/// A built-in presentation, optionally with extra relations imposed on top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builtin", rename_all = "snake_case")]
pub enum PresBase {
    Expansion { q: String, b: String, lambda: String },
    SVariant { q: String, lambda: String },
    CorruptedExpansion { q: String, lambda: String },
    B2Uplus { datum: DatumDto },
    A2Free { datum: DatumDto },
    Biproduct { datum: DatumDto, #[serde(rename = "type")] kind: String },
    /// The lifting quotient of a spec, with the adjudicated v-coefficient.
    Lifting { spec: SpecDto },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresDto {
    #[serde(flatten)]
    pub base: PresBase,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDto>,
}

impl PresDto {
    pub fn build(&self) -> Result<Arc<Presentation>, CliError> {
        let s = parse_scalar;
        let base = match &self.base {
            PresBase::Expansion { q, b, lambda } => expansion_algebra(&s("q", q)?, &s("b", b)?, &s("lambda", lambda)?)?,
            PresBase::SVariant { q, lambda } => s_variant_algebra(&s("q", q)?, &s("lambda", lambda)?)?,
            PresBase::CorruptedExpansion { q, lambda } => corrupted_expansion(&s("q", q)?, &s("lambda", lambda)?)?,
            PresBase::B2Uplus { datum } => b2_uplus(&datum.to_datum()?)?,
            PresBase::A2Free { datum } => a2_free(&datum.to_datum()?)?,
            PresBase::Biproduct { datum, kind } => biproduct(&datum.to_datum()?, kind.parse()?)?,
            PresBase::Lifting { spec } => {
                let spec = spec.to_spec()?;
                spec.ensure_admissible()?;
                lifting_quotient(&spec, qlift_core::hopf::vcoefficient_for(&spec)?)?
            }
        };
        if self.relations.is_empty() {
            return Ok(base);
        }
        let alg = Algebra::new(base.clone());
        let mut rels = Vec::new();
        for r in &self.relations {
            rels.push((r.label.as_str(), alg.parse(&r.element)?));
        }
        Ok(with_relations(&base, "custom", &rels)?)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline; field order follows the structs,
/// so output is byte-stable.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}
