use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{CartanType, LiftingSpec};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::hopf::{hopf_ideal_check, IdealCheck};
use crate::rewrite::{
    confluence_check, enumerate_basis, lifting_quotient, lifting_relations, Algebra, Element, Presentation, VCoefficient,
};

/// One verified identity: `lhs − rhs` reduced by the engine.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    /// Stable identifier of the identity, e.g. `b2.commute.x1_z^n`.
    pub anchor: String,
    pub passed: bool,
    /// Normal form of `lhs − rhs` (`0` on success) or a short note.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub spec: LiftingSpec,
    pub vcoef: VCoefficient,
    pub checks: Vec<Check>,
    pub dimension: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// A lifting quotient together with its Hopf-ideal check.
#[derive(Clone, Debug)]
pub struct Lifting {
    pub spec: LiftingSpec,
    pub presentation: Arc<Presentation>,
    pub ideal: IdealCheck,
}

impl Lifting {
    pub fn vcoef(&self) -> VCoefficient {
        self.ideal.report.vcoef
    }
}

/// `U/J` for an admissible spec, after the Hopf-ideal check. A failing
/// generator is an error.
pub fn build_lifting(spec: &LiftingSpec) -> Result<Lifting> {
    let ideal = hopf_ideal_check(spec)?;
    if !ideal.report.passed() {
        let failed: Vec<String> = ideal
            .report
            .generators
            .iter()
            .filter(|g| !g.passed())
            .map(|g| g.name.clone())
            .collect();
        let why = if ideal.report.confluent { String::new() } else { "quotient not confluent; ".into() };
        return Err(Error::HopfIdealFailure(alloc::format!("{why}generators failing: {}", failed.join(", "))));
    }
    let presentation = lifting_quotient(spec, ideal.report.vcoef)?;
    Ok(Lifting { spec: spec.clone(), presentation, ideal })
}

/// Expected dimension: `n⁴|Γ|` for B2, `n³|Γ|` for A2.
pub fn expected_dimension(spec: &LiftingSpec) -> u64 {
    let n = spec.n() as u64;
    let order = spec.datum.group().order();
    match spec.kind {
        CartanType::B2 => n.pow(4) * order,
        _ => n.pow(3) * order,
    }
}

/// Basis count of the lifting quotient.
pub fn dimension(spec: &LiftingSpec) -> Result<u64> {
    spec.ensure_admissible()?;
    let vcoef = crate::hopf::vcoefficient_for(spec)?;
    let pres = lifting_quotient(spec, vcoef)?;
    Ok(enumerate_basis(&pres)?.dimension)
}

struct Table<'a> {
    alg: &'a Algebra,
    checks: Vec<Check>,
}

impl Table<'_> {
    fn zero(&mut self, name: &str, anchor: &str, diff: Element) {
        let diff = self.alg.reduce(&diff);
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            passed: diff.is_zero(),
            detail: self.alg.render(&diff),
        });
    }

    fn flag(&mut self, name: &str, anchor: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), anchor: anchor.into(), passed, detail });
    }

    fn g(&self, name: &str) -> Element {
        self.alg.gen(name).expect("generator of a built-in presentation")
    }

    /// `y·xᵏ − c·xᵏ·y`.
    fn power_commutation(&mut self, y: &str, x: &str, k: u32, c: &Cyclotomic, prefix: &str) {
        let xk = self.alg.pow(&self.g(x), k);
        let diff = self.alg.commutator(&self.g(y), &xk, c);
        let name = alloc::format!("{y} {x}^{k} = {} {x}^{k} {y}", c.to_factor_string());
        self.zero(&name, &alloc::format!("{prefix}.commute.{y}_{x}^n"), diff);
    }
}

/// Verifies the relation suite of a lifting: straightening identities,
/// power commutations, ideal generators, Hopf-ideal checks, confluence and
/// the dimension.
pub fn verify_relations(spec: &LiftingSpec) -> Result<VerificationReport> {
    spec.ensure_admissible()?;
    let ideal = hopf_ideal_check(spec)?;
    let vcoef = ideal.report.vcoef;
    let pres = lifting_quotient(spec, vcoef)?;
    let alg = Algebra::new(pres.clone());
    let d = &spec.datum;
    let n = spec.n();
    let b = |i, j| d.b(i, j).clone();
    let bn = |i, j, k: u32| b(i, j).powu((k * n) as u64);
    let one = Cyclotomic::one();
    let mut t = Table { alg: &alg, checks: Vec::new() };

    t.zero("1*1 - 1", "sanity.unit", &alg.mul(&alg.one(), &alg.one()) - &alg.one());
    match spec.kind {
        CartanType::B2 => {
            let (x1, x2, z, u) = (t.g("x1"), t.g("x2"), t.g("z"), t.g("u"));
            let z_def = &alg.commutator(&x2, &x1, &b(2, 1)) - &z;
            t.zero("z = x2 x1 - b21 x1 x2", "b2.define.z", z_def);
            let u_def = &alg.commutator(&x2, &z, &(&b(2, 1) * &b(2, 2))) - &u;
            t.zero("u = x2 z - b21 b22 z x2", "b2.define.u", u_def);
            t.zero("x1 z = b12 z x1", "b2.derived.x1_z", alg.commutator(&x1, &z, &b(1, 2)));
            t.zero("u x2 = b12 x2 u", "b2.derived.u_x2", alg.commutator(&u, &x2, &b(1, 2)));
            t.zero("z u = b12 u z", "b2.derived.z_u", alg.commutator(&z, &u, &b(1, 2)));
            let b2122 = &b(2, 1) * &b(2, 2);
            let mut da1 = alg.commutator(&u, &x1, &(&b2122 * &b2122));
            da1.add_scaled(&alg.mul(&z, &z), &-&(&b2122 * &(d.q() - &one)));
            t.zero("u x1 = (b21 b22)^2 x1 u + b21 b22 (q - 1) z^2", "b2.derived.u_x1", da1);
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
            for (y, x, c) in cases {
                t.power_commutation(y, x, n, &c, "b2");
            }
        }
        _ => {
            let (x1, x2, z) = (t.g("x1"), t.g("x2"), t.g("z"));
            let z_def = &alg.commutator(&x1, &x2, &b(1, 2)) - &z;
            t.zero("z = x1 x2 - b12 x2 x1", "a2.define.z", z_def);
            let gl = |text: &str| alg.parse(text).expect("group word");
            let mut c1 = alg.commutator(&z, &x1, &b(2, 1));
            c1.add_scaled(&gl("g1^2*g2 - 1"), &-&spec.gamma1);
            t.zero("z x1 = b21 x1 z + gamma1 (g1^2 g2 - 1)", "a2.commute.z_x1", c1);
            let mut c2 = alg.commutator(&z, &x2, &b(2, 1).inv()?);
            c2.add_scaled(&gl("g1*g2^2 - 1"), &-&spec.gamma2);
            t.zero("z x2 = b21^-1 x2 z + gamma2 (g1 g2^2 - 1)", "a2.commute.z_x2", c2);
            t.power_commutation("x2", "x1", n, &bn(2, 1, 1), "a2");
            t.power_commutation("x1", "x2", n, &bn(1, 2, 1), "a2");
        }
    }

    let (base, rels) = lifting_relations(spec, vcoef)?;
    let base_alg = Algebra::new(base);
    let kind = if spec.kind == CartanType::B2 { "b2" } else { "a2" };
    for (name, j) in &rels {
        let label = name.replace(' ', "_");
        t.zero(
            &alloc::format!("{name}: {} = 0", base_alg.render(j)),
            &alloc::format!("{kind}.ideal.{label}"),
            j.clone(),
        );
    }
    for g in &ideal.report.generators {
        let detail = alloc::format!(
            "counit {}, coproduct residue {}, antipode residue {}",
            if g.counit_ok { "0" } else { "nonzero" },
            g.delta_residue,
            g.antipode_residue
        );
        t.flag(&alloc::format!("{} generates a Hopf ideal", g.name), &g.anchor, g.passed(), detail);
    }
    if let Some(adj) = &ideal.adjudication {
        t.flag(
            "coefficient of mu2 x1^n in v",
            "b2.v_coefficient",
            true,
            alloc::format!("{} (required {})", adj.chosen.as_str(), adj.required.to_expr_string()),
        );
    }
    let report = confluence_check(&alg);
    let detail = match report.failures.first() {
        None => alloc::format!("{} critical pairs resolve", report.checked),
        Some(f) => alloc::format!("overlap {} leaves {}", f.overlap, f.difference),
    };
    t.flag("confluence", "rewrite.confluence", report.confluent, detail);
    let dim = enumerate_basis(&pres)?.dimension;
    let expected = expected_dimension(spec);
    t.flag("dimension", &alloc::format!("{kind}.dimension"), dim == expected, alloc::format!("{dim} (expected {expected})"));
    Ok(VerificationReport { spec: spec.clone(), vcoef, checks: t.checks, dimension: Some(dim) })
}
