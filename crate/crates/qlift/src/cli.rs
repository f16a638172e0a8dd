//! Argument parsing and command dispatch for the `qlift` binary.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qlift_core::abelian::{datum_search, AbelianGroup, CartanType, LiftingSpec};
use qlift_core::hopf::{hopf_ideal_check, Coalgebra};
use qlift_core::liftings::{build_lifting, dimension, expected_dimension, verify_relations, QuasiIso, WitnessBuilder, WitnessStep};
use qlift_core::qcalc::{gqb_expand, nu_sequence, NuParams};
use qlift_core::rewrite::{confluence_check, Algebra, Presentation};
use serde::Serialize;

use crate::dto::{parse_scalar, read_json, scalar_string, to_json, DatumDto, PresDto, SpecDto};
use crate::error::CliError;
use crate::report::{CheckEntry, Report};
use crate::suites;

#[derive(Parser, Debug)]
#[command(name = "qlift", version, about = "Exact verification of lifted pointed Hopf algebras of type A2 and B2")]
pub struct Cli {
    /// Seed for randomized parameter choices.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Worker threads for independent checks (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// q-binomial identities and the generalized expansion.
    #[command(subcommand)]
    Qbinom(QbinomCmd),
    /// The coefficient function nu.
    #[command(subcommand)]
    Nu(NuCmd),
    /// Normal forms and confluence of presentations.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Coproducts and Hopf-ideal checks.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Yetter-Drinfeld data.
    #[command(subcommand)]
    Datum(DatumCmd),
    /// Lifting quotients.
    #[command(subcommand)]
    Lift(LiftCmd),
}

#[derive(Subcommand, Debug)]
pub enum QbinomCmd {
    /// Engine expansion vs closed form, collapse at roots of unity, q-Pascal.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum NuCmd {
    /// nu(0..=n) and the expansion table of (x + b z + t)^n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Args, Debug)]
pub struct PresArg {
    /// Presentation file, or a lifting spec file.
    #[arg(long)]
    pub pres: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum AlgCmd {
    Normalize {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long)]
        word: String,
    },
    Confluence {
        #[command(flatten)]
        pres: PresArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum HopfCmd {
    Delta {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long)]
        elt: String,
    },
    IdealCheck {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum DatumCmd {
    Search {
        /// Invariant factors, e.g. `3,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u32>,
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum LiftCmd {
    Build {
        #[arg(long)]
        spec: PathBuf,
    },
    Verify {
        #[arg(long)]
        spec: PathBuf,
    },
    Dim {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Witness between `--spec` and `--target`, or between all pairs of
    /// {0,1}-parameter liftings over the datum of `--spec` with `--all`.
    Quasi {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, conflicts_with = "all")]
        target: Option<PathBuf>,
        #[arg(long)]
        all: bool,
    },
}

/// What a command produced: both renderings and whether every check passed.
pub struct Outcome {
    pub json: String,
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn from_report(r: &Report) -> Self {
        Outcome { json: to_json(r), text: r.render_text(), passed: r.passed }
    }

    fn value<T: Serialize>(v: &T, text: String, passed: bool) -> Self {
        Outcome { json: to_json(v), text, passed }
    }

    pub fn rendered(&self, format: Format) -> &str {
        match format {
            Format::Json => &self.json,
            Format::Text => &self.text,
        }
    }
}

fn load_spec(path: &Path) -> Result<LiftingSpec, CliError> {
    let spec = read_json::<SpecDto>(path)?.to_spec()?;
    spec.ensure_admissible()?;
    Ok(spec)
}

/// A presentation file, falling back to the lifting quotient of a spec file.
fn load_pres(path: &Path) -> Result<std::sync::Arc<Presentation>, CliError> {
    match read_json::<PresDto>(path) {
        Ok(p) => p.build(),
        Err(pres_err) => match read_json::<SpecDto>(path) {
            Ok(_) => Ok(build_lifting(&load_spec(path)?)?.presentation),
            Err(_) => Err(pres_err),
        },
    }
}

#[derive(Serialize)]
struct NuTable {
    q: String,
    b: String,
    lambda: String,
    nu: Vec<String>,
    expansion: Vec<GqbEntry>,
}

#[derive(Serialize)]
struct GqbEntry {
    /// Coefficient of `t^j z^(i-j) x^(n-i)`.
    i: usize,
    j: usize,
    coeff: String,
}

#[derive(Serialize)]
struct NormalForm {
    presentation: String,
    input: String,
    normal_form: String,
}

#[derive(Serialize)]
struct OverlapDto {
    kind: &'static str,
    overlap: String,
    rules: [String; 2],
    difference: String,
}

#[derive(Serialize)]
struct ConfluenceDto {
    presentation: String,
    confluent: bool,
    checked: usize,
    failures: Vec<OverlapDto>,
}

#[derive(Serialize)]
struct TensorTerm {
    left: String,
    right: String,
    coeff: String,
}

#[derive(Serialize)]
struct DeltaDto {
    presentation: String,
    element: String,
    delta: String,
    terms: Vec<TensorTerm>,
}

#[derive(Serialize)]
struct GeneratorDto {
    name: String,
    anchor: String,
    passed: bool,
    counit_ok: bool,
    delta_ok: bool,
    antipode_ok: bool,
    delta_residue: String,
    antipode_residue: String,
}

#[derive(Serialize)]
struct AdjudicationDto {
    chosen: &'static str,
    required: String,
    /// Whether each candidate equals the required coefficient.
    candidates: Vec<(&'static str, bool)>,
    /// Hopf-ideal check of the full lifting with each candidate, when the
    /// datum allows μ2 = 1.
    direct: Option<Vec<(&'static str, bool)>>,
    omega_primitive: Option<bool>,
}

#[derive(Serialize)]
struct IdealDto {
    spec: SpecDto,
    passed: bool,
    v_coefficient: &'static str,
    adjudication: Option<AdjudicationDto>,
    confluent: bool,
    generators: Vec<GeneratorDto>,
}

#[derive(Serialize)]
struct BuildDto {
    spec: SpecDto,
    presentation: String,
    generators: Vec<String>,
    swap_rules: usize,
    power_rules: usize,
    v_coefficient: &'static str,
    hopf_ideal: bool,
}

#[derive(Serialize)]
struct VerifyDto {
    spec: SpecDto,
    v_coefficient: &'static str,
    dimension: Option<u64>,
    report: Report,
}

#[derive(Serialize)]
struct StepDto {
    low: SpecDto,
    high: SpecDto,
    reversed: bool,
    ambient: Vec<String>,
    subalgebra: Vec<(String, String)>,
    psi: Vec<String>,
    conjugated: Vec<String>,
    generators_match: bool,
    ideals_equal: bool,
    conjugated_dimension: Option<u64>,
    twisted_dimension: Option<u64>,
    target_dimension: u64,
    verified: bool,
}

impl StepDto {
    fn new(s: &WitnessStep, reversed: bool) -> Self {
        StepDto {
            low: SpecDto::from_spec(&s.low),
            high: SpecDto::from_spec(&s.high),
            reversed,
            ambient: s.ambient.clone(),
            subalgebra: s.subalgebra.clone(),
            psi: s.psi.iter().map(scalar_string).collect(),
            conjugated: s.conjugated.clone(),
            generators_match: s.generators_match,
            ideals_equal: s.ideals_equal,
            conjugated_dimension: s.conjugated_dimension,
            twisted_dimension: s.twisted_dimension,
            target_dimension: s.target_dimension,
            verified: s.verified,
        }
    }
}

#[derive(Serialize)]
struct WitnessDto {
    source: SpecDto,
    target: SpecDto,
    status: &'static str,
    verified: bool,
    note: Option<String>,
    chain: Vec<StepDto>,
}

fn qbinom_verify(n_max: usize, seed: u64) -> Outcome {
    let r = Report::merge(
        "qbinom verify",
        vec![
            suites::expansion_suite(n_max, seed),
            suites::collapse_suite(seed),
            suites::q_identity_suite(12, seed),
        ],
    );
    Outcome::from_report(&r)
}

fn nu_table(n: usize, q: &str, b: &str, lambda: &str) -> Result<Outcome, CliError> {
    let p = NuParams { b: parse_scalar("b", b)?, lambda: parse_scalar("lambda", lambda)?, q: parse_scalar("q", q)? };
    let nu: Vec<String> = nu_sequence(n, &p).iter().map(scalar_string).collect();
    let table = gqb_expand(n, &p);
    let expansion: Vec<GqbEntry> =
        table.nonzero().map(|(i, j, c)| GqbEntry { i, j, coeff: scalar_string(c) }).collect();
    let mut text = String::new();
    for (k, v) in nu.iter().enumerate() {
        text.push_str(&format!("nu({k}) = {v}\n"));
    }
    for e in &expansion {
        text.push_str(&format!("t^{} z^{} x^{}: {}\n", e.j, e.i - e.j, n - e.i, e.coeff));
    }
    let out = NuTable { q: scalar_string(&p.q), b: scalar_string(&p.b), lambda: scalar_string(&p.lambda), nu, expansion };
    Ok(Outcome::value(&out, text, true))
}

fn alg_normalize(pres: &Path, word: &str) -> Result<Outcome, CliError> {
    let alg = Algebra::new(load_pres(pres)?);
    let nf = alg.normalize_text(word)?;
    let out = NormalForm { presentation: alg.presentation().name().into(), input: word.into(), normal_form: alg.render(&nf) };
    let text = format!("{}\n", out.normal_form);
    Ok(Outcome::value(&out, text, true))
}

fn alg_confluence(pres: &Path) -> Result<Outcome, CliError> {
    let alg = Algebra::new(load_pres(pres)?);
    let r = confluence_check(&alg);
    let out = ConfluenceDto {
        presentation: alg.presentation().name().into(),
        confluent: r.confluent,
        checked: r.checked,
        failures: r
            .failures
            .iter()
            .map(|f| OverlapDto {
                kind: f.kind.as_str(),
                overlap: f.overlap.clone(),
                rules: [f.rules.0.clone(), f.rules.1.clone()],
                difference: f.difference.clone(),
            })
            .collect(),
    };
    let mut text = format!("{}: {} critical pairs, {}\n", out.presentation, out.checked, if out.confluent { "confluent" } else { "NOT confluent" });
    for f in &out.failures {
        text.push_str(&format!("  {} overlap {} ({} / {}): {}\n", f.kind, f.overlap, f.rules[0], f.rules[1], f.difference));
    }
    Ok(Outcome::value(&out, text, r.confluent))
}

fn hopf_delta(pres: &Path, elt: &str) -> Result<Outcome, CliError> {
    let co = Coalgebra::new(load_pres(pres)?);
    let alg = co.algebra();
    let e = alg.normalize_text(elt)?;
    let d = co.delta(&e)?;
    let p = alg.presentation();
    let terms = d
        .iter()
        .map(|(l, r, c)| TensorTerm { left: p.render_monomial(l), right: p.render_monomial(r), coeff: scalar_string(c) })
        .collect();
    let out = DeltaDto { presentation: p.name().into(), element: alg.render(&e), delta: co.render(&d), terms };
    let text = format!("Delta({}) = {}\n", out.element, out.delta);
    Ok(Outcome::value(&out, text, true))
}

fn hopf_ideal(spec_path: &Path) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_path)?;
    let ic = hopf_ideal_check(&spec)?;
    let generators: Vec<GeneratorDto> = ic
        .report
        .generators
        .iter()
        .map(|g| GeneratorDto {
            name: g.name.clone(),
            anchor: g.anchor.clone(),
            passed: g.passed(),
            counit_ok: g.counit_ok,
            delta_ok: g.delta_ok,
            antipode_ok: g.antipode_ok,
            delta_residue: g.delta_residue.clone(),
            antipode_residue: g.antipode_residue.clone(),
        })
        .collect();
    let adjudication = ic.adjudication.as_ref().map(|a| AdjudicationDto {
        chosen: a.chosen.as_str(),
        required: scalar_string(&a.required),
        candidates: a.candidates.iter().map(|(c, ok)| (c.as_str(), *ok)).collect(),
        direct: a.direct.as_ref().map(|v| v.iter().map(|(c, ok)| (c.as_str(), *ok)).collect()),
        omega_primitive: a.omega_primitive,
    });
    let passed = ic.report.passed();
    let mut text = format!("v coefficient: {}\n", ic.report.vcoef.as_str());
    for g in &generators {
        text.push_str(&format!(
            "{} {:<12} counit {} delta {} antipode {}\n",
            if g.passed { "ok  " } else { "FAIL" },
            g.name,
            g.counit_ok,
            g.delta_ok,
            g.antipode_ok
        ));
    }
    let out = IdealDto {
        spec: SpecDto::from_spec(&spec),
        passed,
        v_coefficient: ic.report.vcoef.as_str(),
        adjudication,
        confluent: ic.report.confluent,
        generators,
    };
    Ok(Outcome::value(&out, text, passed))
}

fn datum_search_cmd(group: &[u32], kind: &str, n: u32) -> Result<Outcome, CliError> {
    let g = AbelianGroup::new(group.to_vec())?;
    let kind: CartanType = kind.parse()?;
    let hits: Vec<DatumDto> = datum_search(&g, kind, n).iter().map(DatumDto::from_datum).collect();
    let text = hits
        .iter()
        .map(|d| format!("g1={:?} g2={:?} chi1={:?} chi2={:?}\n", d.g1, d.g2, d.chi1, d.chi2))
        .collect::<String>()
        + &format!("{} data\n", hits.len());
    Ok(Outcome::value(&hits, text, true))
}

fn lift_build(spec_path: &Path) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_path)?;
    let l = build_lifting(&spec)?;
    let p = &l.presentation;
    let out = BuildDto {
        spec: SpecDto::from_spec(&spec),
        presentation: p.name().into(),
        generators: p.generators().iter().map(|g| g.name.clone()).collect(),
        swap_rules: p.swap_rules().count(),
        power_rules: p.power_rules().count(),
        v_coefficient: l.vcoef().as_str(),
        hopf_ideal: l.ideal.report.passed(),
    };
    let text = format!(
        "{}: generators {}, {} swap rules, {} power rules, v coefficient {}\n",
        out.presentation,
        out.generators.join(" "),
        out.swap_rules,
        out.power_rules,
        out.v_coefficient
    );
    Ok(Outcome::value(&out, text, out.hopf_ideal))
}

fn lift_verify(spec_path: &Path) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_path)?;
    let r = verify_relations(&spec)?;
    let report = Report::new("lift verify", r.checks.into_iter().map(CheckEntry::from).collect());
    let text = report.render_text();
    let passed = report.passed;
    let out = VerifyDto { spec: SpecDto::from_spec(&spec), v_coefficient: r.vcoef.as_str(), dimension: r.dimension, report };
    Ok(Outcome::value(&out, text, passed))
}

fn lift_dim(spec_path: &Path) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_path)?;
    let dim = dimension(&spec)?;
    Ok(Outcome { json: format!("{dim}\n"), text: format!("{dim}\n"), passed: dim == expected_dimension(&spec) })
}

fn lift_quasi(spec_path: &Path, target: Option<&Path>, all: bool) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_path)?;
    if all {
        let specs = match spec.kind {
            CartanType::B2 => suites::b2_binary_specs(&spec.datum),
            _ => suites::a2_binary_specs(&spec.datum),
        };
        return Ok(Outcome::from_report(&suites::quasi_suite(&specs)));
    }
    let target = target.ok_or_else(|| CliError::Usage("lift quasi needs --target <file> or --all".into()))?;
    let target = load_spec(target)?;
    let w = WitnessBuilder::new().witness(&spec, &target)?;
    let (status, verified, note, chain) = match &w {
        QuasiIso::Witness(w) => {
            ("witness", w.verified(), None, w.chain.iter().map(|c| StepDto::new(&c.step, c.reversed)).collect::<Vec<_>>())
        }
        QuasiIso::Absent { note } => ("absent", false, Some(note.clone()), Vec::new()),
    };
    let mut text = format!("{status}, {} step(s)\n", chain.len());
    for s in &chain {
        text.push_str(&format!(
            "  {} psi = [{}], ambient ({}): {}\n",
            if s.reversed { "inverse of" } else { "forward" },
            s.psi.join(", "),
            s.ambient.join(", "),
            if s.verified { "verified" } else { "NOT verified" }
        ));
    }
    if let Some(n) = &note {
        text.push_str(&format!("  {n}\n"));
    }
    // An absent witness is a reported outcome, not a failed check.
    let passed = status == "absent" || verified;
    let out = WitnessDto { source: SpecDto::from_spec(&spec), target: SpecDto::from_spec(&target), status, verified, note, chain };
    Ok(Outcome::value(&out, text, passed))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Qbinom(QbinomCmd::Verify { n_max }) => Ok(qbinom_verify(*n_max, cli.seed)),
        Command::Nu(NuCmd::Table { n, q, b, lambda }) => nu_table(*n, q, b, lambda),
        Command::Alg(AlgCmd::Normalize { pres, word }) => alg_normalize(&pres.pres, word),
        Command::Alg(AlgCmd::Confluence { pres }) => alg_confluence(&pres.pres),
        Command::Hopf(HopfCmd::Delta { pres, elt }) => hopf_delta(&pres.pres, elt),
        Command::Hopf(HopfCmd::IdealCheck { spec }) => hopf_ideal(spec),
        Command::Datum(DatumCmd::Search { group, kind, n }) => datum_search_cmd(group, kind, *n),
        Command::Lift(LiftCmd::Build { spec }) => lift_build(spec),
        Command::Lift(LiftCmd::Verify { spec }) => lift_verify(spec),
        Command::Lift(LiftCmd::Dim { spec }) => lift_dim(spec),
        Command::Lift(LiftCmd::Quasi { spec, target, all }) => lift_quasi(spec, target.as_deref(), *all),
    }
}
