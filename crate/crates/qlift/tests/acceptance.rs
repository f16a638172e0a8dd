//! Acceptance run: one PASS/FAIL line per criterion. Every comparison is
//! exact; the only tolerances are the wall-clock limits below.

use std::time::{Duration, Instant};

use qlift::fixtures::{self, A2_Z3Z3, A2_Z49, B2_Z3Z3, B2_Z9Z9, CORRUPTED, SPEC_FIXTURES};
use qlift::suites;
use qlift::Report;
use qlift_core::abelian::{CartanType, LiftingSpec};
use qlift_core::liftings::{build_lifting, QuasiIso, WitnessBuilder};

const SEED: u64 = 7;
const EXPANSION_LIMIT: Duration = Duration::from_secs(10);
const HOPF_IDEAL_LIMIT: Duration = Duration::from_secs(300);
const DIMENSION_LIMIT: Duration = Duration::from_secs(120);

struct Outcome {
    passed: bool,
    summary: String,
}

fn from_report(r: &Report, extra: &str) -> Outcome {
    let mut summary = format!("{}/{} checks", r.total - r.failed, r.total);
    if !extra.is_empty() {
        summary.push_str(&format!("; {extra}"));
    }
    for f in r.failures().take(3) {
        summary.push_str(&format!("\n    failed {} {}: {}", f.anchor, f.name, f.detail));
    }
    Outcome { passed: r.passed, summary }
}

fn within(limit: Duration, elapsed: Duration, mut o: Outcome) -> Outcome {
    if elapsed > limit {
        o.passed = false;
        o.summary.push_str(&format!("; over the {}s limit", limit.as_secs()));
    }
    o
}

fn spec(name: &str) -> LiftingSpec {
    fixtures::load_spec(name).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

fn expansion() -> Outcome {
    let start = Instant::now();
    let r = suites::expansion_suite(8, SEED);
    let triples = suites::seeded_triples(SEED);
    let qs: Vec<String> = triples.iter().map(|p| p.q.to_expr_string()).collect();
    within(EXPANSION_LIMIT, start.elapsed(), from_report(&r, &format!("n <= 8, q in {{{}}}", qs.join(", "))))
}

fn collapse() -> Outcome {
    from_report(&suites::collapse_suite(SEED), "n in {3, 5, 7}")
}

fn nu_coherence() -> Outcome {
    from_report(&suites::nu_suite(SEED), "")
}

fn coproducts() -> Outcome {
    from_report(&suites::coproduct_suite(&spec(B2_Z3Z3).datum, &spec(A2_Z3Z3).datum), "")
}

fn hopf_ideals() -> Outcome {
    let start = Instant::now();
    let specs = suites::b2_binary_specs(&spec(B2_Z9Z9).datum);
    let r = suites::hopf_ideal_suite(&specs);
    let v = r.checks.iter().find(|c| c.anchor == "b2.v_coefficient").map(|c| c.detail.clone()).unwrap_or_default();
    let mut o = from_report(&r, &format!("{} admissible tuples; {v}", specs.len()));
    if specs.len() != 16 {
        o.passed = false;
        o.summary.push_str("; expected all 16 tuples admissible");
    }
    within(HOPF_IDEAL_LIMIT, start.elapsed(), o)
}

fn dimensions() -> Outcome {
    let cases = [(spec(B2_Z3Z3), 729u64), (spec(B2_Z9Z9), 6561), (spec(A2_Z49), 16807)];
    let mut passed = true;
    let mut parts = Vec::new();
    for (sp, pinned) in cases {
        let start = Instant::now();
        let r = suites::dimension_suite(&[(sp, Some(pinned))]);
        let elapsed = start.elapsed();
        let ok = r.passed && elapsed <= DIMENSION_LIMIT;
        passed &= ok;
        parts.push(format!("{} ({:.1}s){}", r.checks[0].detail, elapsed.as_secs_f64(), if ok { "" } else { " FAIL" }));
    }
    Outcome { passed, summary: parts.join(", ") }
}

fn commutations() -> Outcome {
    let n7 = suites::b2_square_datum(7).expect("a B2 datum over Z7 x Z7");
    let uplus = [spec(B2_Z3Z3).datum, n7];
    let liftings = [spec(B2_Z3Z3), spec(B2_Z9Z9), spec(A2_Z3Z3)];
    from_report(&suites::commutation_suite(&uplus, &liftings), "U+ at n = 3 and 7, fixture quotients")
}

fn confluence() -> Outcome {
    let n7 = suites::b2_square_datum(7).expect("a B2 datum over Z7 x Z7");
    let b2 = [spec(B2_Z3Z3).datum, spec(B2_Z9Z9).datum, n7];
    let a2 = [spec(A2_Z3Z3).datum, spec(A2_Z49).datum];
    let mut presentations = match suites::builtin_presentations(&b2, &a2) {
        Ok(p) => p,
        Err(e) => return Outcome { passed: false, summary: e.to_string() },
    };
    for name in SPEC_FIXTURES {
        match build_lifting(&spec(name)) {
            Ok(l) => presentations.push((format!("fixture quotient {name}"), l.presentation)),
            Err(e) => return Outcome { passed: false, summary: format!("{name}: {e}") },
        }
    }
    let corrupted = match fixtures::load_pres(CORRUPTED).and_then(|p| p.build()) {
        Ok(p) => p,
        Err(e) => return Outcome { passed: false, summary: e.to_string() },
    };
    let r = suites::confluence_suite(&presentations, &corrupted);
    let note = r.checks.last().map(|c| c.detail.clone()).unwrap_or_default();
    from_report(&r, &note)
}

fn quasi_isomorphisms() -> Outcome {
    let b2 = suites::b2_binary_specs(&spec(B2_Z9Z9).datum);
    let a2 = suites::a2_binary_specs(&spec(A2_Z3Z3).datum);
    let z49 = spec(A2_Z49).datum;
    let b2_report = suites::quasi_suite(&b2);
    let a2_report = suites::quasi_suite(&a2);
    let probe = suites::probe_suite(&z49, &suites::probe_lambdas(&z49));
    let absent = a2_report.checks.iter().filter(|c| c.detail.starts_with("absent")).count();

    // Each B2 lifting reaches the trivial one in at most two conjugations.
    let mut builder = WitnessBuilder::new();
    let mut long_legs = Vec::new();
    for sp in &b2 {
        let zero = LiftingSpec::zero(&sp.datum, CartanType::B2);
        match builder.witness(sp, &zero) {
            Ok(QuasiIso::Witness(w)) if w.chain.len() <= 2 => {}
            _ => long_legs.push(format!("mu=({},{})", sp.mu1, sp.mu2)),
        }
    }
    let r = Report::merge("quasi", vec![b2_report, a2_report, probe]);
    let mut o = from_report(
        &r,
        &format!("{} B2 pairs, {} A2 pairs ({absent} absent with note), probe on {} lambdas", b2.len() * b2.len(), a2.len() * a2.len(), suites::probe_lambdas(&z49).len()),
    );
    if absent == 0 || !long_legs.is_empty() {
        o.passed = false;
        o.summary.push_str(&format!("; absent pairs {absent}, legs longer than two steps: {long_legs:?}"));
    }
    o
}

fn q_identities() -> Outcome {
    from_report(&suites::q_identity_suite(12, SEED), "indices <= 12, 5 values of q")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("generalized q-binomial expansion", expansion),
        ("root-of-unity collapse", collapse),
        ("nu coherence", nu_coherence),
        ("coproduct formulas", coproducts),
        ("Hopf ideals over Z9 x Z9", hopf_ideals),
        ("dimensions", dimensions),
        ("commutation relations", commutations),
        ("confluence", confluence),
        ("quasi-isomorphism witnesses", quasi_isomorphisms),
        ("q-identities", q_identities),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name} [{:.1}s]: {}", i + 1, start.elapsed().as_secs_f64(), o.summary);
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
