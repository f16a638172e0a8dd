//! Verification suites shared by the CLI and the acceptance run. Each
//! returns a [`Report`]; nothing here panics on a failed identity.

use std::sync::Arc;

use qlift_core::abelian::{datum_search, AbelianGroup, CartanType, LiftingSpec, YDDatum};
use qlift_core::hopf::{adjudicate_v, hopf_ideal_check, Coalgebra, TensorElement};
use qlift_core::liftings::{a2_isomorphism_probe, dimension, expected_dimension, verify_relations, QuasiIso, WitnessBuilder};
use qlift_core::qcalc::{gqb_expand, nu_b_zero, nu_closed_roots, nu_q1, nu_recursive, q_int, NuParams, QBinomials};
use qlift_core::rewrite::{
    expansion_algebra, b2_uplus, biproduct, confluence_check, s_variant_algebra, with_relations, Algebra, Element,
    Generator, Monomial, Presentation, VCoefficient,
};
use qlift_core::{Cyclotomic, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{CheckEntry, Report};

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn zeta(n: u32) -> Cyclotomic {
    Cyclotomic::zeta(n).expect("positive conductor")
}

fn s(c: &Cyclotomic) -> String {
    c.to_expr_string()
}

fn params_label(p: &NuParams) -> String {
    format!("q={} b={} lambda={}", s(&p.q), s(&p.b), s(&p.lambda))
}

fn spec_label(sp: &LiftingSpec) -> String {
    match sp.kind {
        CartanType::B2 => format!("mu=({},{}) lambda={} gamma={}", sp.mu1, sp.mu2, s(&sp.lambda), s(&sp.gamma)),
        _ => format!(
            "mu=({},{}) lambda={} gamma=({},{})",
            sp.mu1,
            sp.mu2,
            s(&sp.lambda),
            s(&sp.gamma1),
            s(&sp.gamma2)
        ),
    }
}

fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Cyclotomic {
    int(rng.gen_range(lo..=hi))
}

/// Five `(q, b, λ)` triples: q runs over ζ3, ζ5, ζ12, 2 and one seeded root
/// of unity; `b` and `λ` are seeded small combinations of powers of `q`.
pub fn seeded_triples(seed: u64) -> Vec<NuParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extra = [7u32, 8, 9][rng.gen_range(0..3)];
    [zeta(3), zeta(5), zeta(12), int(2), zeta(extra)]
        .into_iter()
        .map(|q| {
            let k = rng.gen_range(0..4u64);
            let b = &small(&mut rng, -3, 3) + &(&small(&mut rng, -2, 2) * &q.powu(k));
            let lambda = &small(&mut rng, -3, 3) + &(&small(&mut rng, 1, 2) * &q);
            NuParams { b, lambda, q }
        })
        .collect()
}

/// Engine expansion of `(x + b z + t)ⁿ` against the closed-form table.
fn expansion_check(p: &NuParams, n: usize) -> Result<bool, qlift_core::Error> {
    let alg = Algebra::new(expansion_algebra(&p.q, &p.b, &p.lambda)?);
    let lhs = alg.pow(&alg.parse("x + b*z + t")?, n as u32);
    let (t, z, x) = (alg.presentation().gen_index("t")?, alg.presentation().gen_index("z")?, alg.presentation().gen_index("x")?);
    let table = gqb_expand(n, p);
    let mut rhs = Element::zero();
    for (i, j, coeff) in table.iter() {
        let mut w = vec![t; j];
        w.extend(std::iter::repeat(z).take(i - j));
        w.extend(std::iter::repeat(x).take(n - i));
        rhs.add_term(Monomial::new(alg.presentation().identity(), w), coeff);
    }
    Ok(lhs == rhs)
}

pub fn expansion_suite(n_max: usize, seed: u64) -> Report {
    let triples = seeded_triples(seed);
    let jobs: Vec<(usize, usize)> = (0..triples.len()).flat_map(|k| (0..=n_max).map(move |n| (k, n))).collect();
    let checks = jobs
        .par_iter()
        .map(|&(k, n)| {
            let p = &triples[k];
            let name = format!("(x + b z + t)^{n}, {}", params_label(p));
            match expansion_check(p, n) {
                Ok(ok) => CheckEntry::new(name, "gqb.expansion", ok, if ok { "equal" } else { "tables differ" }),
                Err(e) => CheckEntry::new(name, "gqb.expansion", false, e.to_string()),
            }
        })
        .collect();
    Report::new("generalized q-binomial expansion", checks)
}

/// At q a primitive n-th root the expansion keeps only `xⁿ + ν(n)zⁿ + tⁿ`;
/// in the algebra with `tx = q xt` and no `z`, `(x+t)ⁿ = xⁿ + tⁿ`.
pub fn collapse_suite(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut checks = Vec::new();
    for n in [3u32, 5, 7] {
        let q = zeta(n);
        let b = &small(&mut rng, 1, 3) + &q;
        let lambda = &small(&mut rng, -3, 3) - &q.powu(2);
        let p = NuParams { b: b.clone(), lambda: lambda.clone(), q: q.clone() };
        let outcome = (|| -> Result<bool, qlift_core::Error> {
            let alg = Algebra::new(expansion_algebra(&q, &b, &lambda)?);
            let lhs = alg.pow(&alg.parse("x + b*z + t")?, n);
            let mut rhs = &alg.pow(&alg.gen("x")?, n) + &alg.pow(&alg.gen("t")?, n);
            rhs.add_scaled(&alg.pow(&alg.gen("z")?, n), &nu_recursive(n as usize, &p));
            Ok(lhs == rhs)
        })();
        let name = format!("(x + b z + t)^{n} = x^{n} + nu({n}) z^{n} + t^{n}, {}", params_label(&p));
        checks.push(entry(name, "gqb.root_of_unity_collapse", outcome));

        let lam = &int(1) - &q;
        let outcome = (|| -> Result<bool, qlift_core::Error> {
            let alg = Algebra::new(s_variant_algebra(&q, &lam)?);
            let (x, t) = (alg.gen("x")?, alg.gen("t")?);
            Ok(alg.pow(&(&x + &t), n) == &alg.pow(&x, n) + &alg.pow(&t, n))
        })();
        checks.push(entry(format!("(x + t)^{n} = x^{n} + t^{n}, q=zeta({n})"), "gqb.sum_collapse", outcome));
    }
    Report::new("root-of-unity collapse", checks)
}

fn entry(name: String, anchor: &str, outcome: Result<bool, qlift_core::Error>) -> CheckEntry {
    match outcome {
        Ok(ok) => CheckEntry::new(name, anchor, ok, if ok { "holds" } else { "differs" }),
        Err(e) => CheckEntry::new(name, anchor, false, e.to_string()),
    }
}

fn first_mismatch(pairs: impl Iterator<Item = (usize, Cyclotomic, Cyclotomic)>) -> Option<String> {
    for (n, a, b) in pairs {
        if a != b {
            return Some(format!("n={n}: {} vs {}", s(&a), s(&b)));
        }
    }
    None
}

fn mismatch_entry(name: String, anchor: &str, m: Option<String>) -> CheckEntry {
    match m {
        None => CheckEntry::new(name, anchor, true, "all equal"),
        Some(d) => CheckEntry::new(name, anchor, false, d),
    }
}

pub fn nu_suite(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0a0b);
    let mut checks = Vec::new();
    for _ in 0..3 {
        let (b, lambda) = (small(&mut rng, -3, 3), small(&mut rng, -3, 3));
        let p = NuParams { b: b.clone(), lambda: lambda.clone(), q: int(1) };
        let m = first_mismatch((0..=20).map(|n| (n, nu_recursive(n, &p), nu_q1(n, &b, &lambda))));
        checks.push(mismatch_entry(format!("nu at q=1, b={} lambda={}", s(&b), s(&lambda)), "nu.q_equals_one", m));
    }
    for p in seeded_triples(seed) {
        let alpha = &small(&mut rng, 1, 3) + &p.q;
        let beta = small(&mut rng, -2, 2);
        let lambda = &(&p.q - &int(1)) * &(&alpha * &beta);
        let pp = NuParams { b: &alpha + &beta, lambda, q: p.q.clone() };
        let m = first_mismatch((0..=20).map(|n| {
            let closed = nu_closed_roots(n, &alpha, &beta, &pp.q).unwrap_or_else(|_| Cyclotomic::zero());
            (n, nu_recursive(n, &pp), closed)
        }));
        let name = format!("nu by roots, alpha={} beta={} q={}", s(&alpha), s(&beta), s(&p.q));
        checks.push(mismatch_entry(name, "nu.closed_roots", m));
    }
    for n in [3usize, 5, 7] {
        let q = zeta(n as u32);
        let alpha = &int(2) + &q;
        let beta = &int(-1) + &q.powu(3);
        let p = NuParams { b: &alpha + &beta, lambda: &(&q - &int(1)) * &(&alpha * &beta), q: q.clone() };
        let lhs = nu_recursive(n, &p);
        let rhs = &alpha.powu(n as u64) + &beta.powu(n as u64);
        let ok = lhs == rhs;
        checks.push(CheckEntry::new(
            format!("nu({n}) = alpha^{n} + beta^{n} at q=zeta({n})"),
            "nu.root_of_unity",
            ok,
            if ok { "equal".into() } else { format!("{} vs {}", s(&lhs), s(&rhs)) },
        ));
    }
    for p in seeded_triples(seed) {
        let zero_b = NuParams { b: Cyclotomic::zero(), ..p.clone() };
        let m = first_mismatch((0..=12).map(|n| (n, nu_recursive(n, &zero_b), nu_b_zero(n, &p.lambda, &p.q))));
        checks.push(mismatch_entry(format!("nu at b=0, q={} lambda={}", s(&p.q), s(&p.lambda)), "nu.b_zero", m));
        let odd = (1..=12).step_by(2).all(|n| nu_recursive(n, &zero_b).is_zero());
        checks.push(CheckEntry::new(format!("nu(odd) = 0 at b=0, q={}", s(&p.q)), "nu.b_zero_odd", odd, ""));
    }
    Report::new("nu coherence", checks)
}

/// Gaussian binomial by counting inversions over k-subsets: the
/// coefficient of `q^m` is the number of 0/1 words with `k` ones and `m`
/// inversions. Independent of the Pascal recursion.
pub fn brute_q_binomial(n: i64, k: i64, q: &Cyclotomic) -> Cyclotomic {
    if n < 0 || k < 0 || k > n {
        return Cyclotomic::zero();
    }
    let n = n as u32;
    let mut counts = vec![0i64; (n * n + 1) as usize];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as i64 != k {
            continue;
        }
        let mut inv = 0usize;
        let mut ones_seen = 0usize;
        for bit in 0..n {
            if mask & (1 << bit) != 0 {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        counts[inv] += 1;
    }
    counts.iter().enumerate().filter(|(_, &c)| c != 0).fold(Cyclotomic::zero(), |acc, (m, &c)| &acc + &(&int(c) * &q.powu(m as u64)))
}

pub fn q_identity_suite(max: i64, seed: u64) -> Report {
    let qs: Vec<Cyclotomic> = seeded_triples(seed).into_iter().map(|p| p.q).collect();
    let checks = qs
        .par_iter()
        .flat_map_iter(|q| {
            let t = QBinomials::new(q, max as usize + 1);
            let mut out = Vec::new();
            let mut oracle = None;
            'outer: for n in 0..=max {
                for k in 0..=n {
                    let (a, b) = (t.get(n, k), brute_q_binomial(n, k, q));
                    if a != b {
                        oracle = Some(format!("C({n},{k}): {} vs {}", s(&a), s(&b)));
                        break 'outer;
                    }
                }
            }
            out.push(mismatch_entry(format!("q-binomial vs inversion count, q={}", s(q)), "qbinom.oracle", oracle));
            let mut pascal = None;
            for n in 1..=max {
                for k in 1..=n {
                    let lhs = t.get(n, k);
                    let first = &t.get(n - 1, k - 1) + &(&q.powu(k as u64) * &t.get(n - 1, k));
                    let second = &t.get(n - 1, k) + &(&q.powu((n - k) as u64) * &t.get(n - 1, k - 1));
                    if lhs != first || lhs != second {
                        pascal.get_or_insert(format!("n={n} k={k}"));
                    }
                }
            }
            out.push(mismatch_entry(format!("q-Pascal, both forms, q={}", s(q)), "qbinom.pascal", pascal));
            let mut three = None;
            for n in 0..max {
                for i in 0..=n {
                    for j in 0..=i {
                        let lhs = &t.get(n + 1, i) * &t.get(i, j);
                        let rhs = &(&(&t.get(n, i - 1) * &t.get(i - 1, j - 1))
                            + &(&q.powu(i as u64) * &(&t.get(n, i) * &t.get(i, j))))
                            + &(&q.powu(j as u64) * &(&t.get(n, i - 1) * &t.get(i - 1, j)));
                        if lhs != rhs {
                            three.get_or_insert(format!("n={n} i={i} j={j}"));
                        }
                    }
                }
            }
            out.push(mismatch_entry(format!("three-term product identity, q={}", s(q)), "qbinom.three_term", three));
            out
        })
        .collect();
    Report::new("q-identities", checks)
}

fn nt(alg: &Algebra, text: &str) -> Result<Element, qlift_core::Error> {
    alg.normalize_text(text)
}

/// `Δ(z)`, `Δ(u)` in the B2 biproduct and `Δ(z³)` for A2 at n = 3 against
/// their closed formulas.
pub fn coproduct_suite(b2: &YDDatum, a2: &YDDatum) -> Report {
    let mut checks = Vec::new();
    let b2_part = (|| -> Result<(bool, bool), qlift_core::Error> {
        let co = Coalgebra::new(biproduct(b2, CartanType::B2)?);
        let alg = co.algebra();
        let q = b2.q().clone();
        let one = int(1);
        let qi = q.inv()?;
        let a = &one - &(&qi * &qi);
        let t = TensorElement::pure;
        let (z, u, x1) = (alg.gen("z")?, alg.gen("u")?, alg.gen("x1")?);
        let mut dz = t(&nt(alg, "g1 g2")?, &z);
        dz.add_scaled(&t(&z, &alg.one()), &one);
        dz.add_scaled(&t(&nt(alg, "x2 g1")?, &x1), &a);
        let mut du = t(&u, &alg.one());
        du.add_scaled(&t(&nt(alg, "g1 g2 g2")?, &u), &one);
        du.add_scaled(&t(&nt(alg, "x2 g1 g2")?, &z), &(&q * &a));
        du.add_scaled(&t(&nt(alg, "x2 x2 g1")?, &x1), &(&a * &(&one - &qi)));
        Ok((co.delta(&z)? == dz, co.delta(&u)? == du))
    })();
    match b2_part {
        Ok((dz, du)) => {
            checks.push(CheckEntry::new("Delta(z) = g1g2 (x) z + z (x) 1 + (1-q^-2) x2g1 (x) x1", "b2.delta.z", dz, ""));
            let name = "Delta(u) = u (x) 1 + g1g2^2 (x) u + q(1-q^-2) x2g1g2 (x) z + (1-q^-2)(1-q^-1) x2^2g1 (x) x1";
            checks.push(CheckEntry::new(name, "b2.delta.u", du, ""));
        }
        Err(e) => checks.push(CheckEntry::new("B2 coproducts", "b2.delta", false, e.to_string())),
    }
    let a2_part = (|| -> Result<bool, qlift_core::Error> {
        let (g1v, g2v) = (int(2), int(5));
        let spec = LiftingSpec::a2(a2, 0, 0, int(0), g1v.clone(), g2v.clone());
        let (base, rels) = qlift_core::rewrite::lifting_relations(&spec, VCoefficient::QSquaredMinusOne)?;
        let comm: Vec<(&str, Element)> =
            rels.iter().filter(|(n, _)| n.starts_with("z ")).map(|(n, e)| (n.as_str(), e.clone())).collect();
        let co = Coalgebra::new(with_relations(&base, "a2-gamma", &comm)?);
        let alg = co.algebra();
        let q = a2.q().clone();
        let one = int(1);
        let t = TensorElement::pure;
        let z3 = alg.pow(&alg.gen("z")?, 3);
        let gm = |w: &str| -> Result<Element, qlift_core::Error> { Ok(&nt(alg, w)? - &alg.one()) };
        let mut expect = t(&nt(alg, "g1 g2 g1 g2 g1 g2")?, &z3);
        expect.add_scaled(&t(&z3, &alg.one()), &one);
        expect.add_scaled(&t(&nt(alg, "x1 x1 x1 g2 g2 g2")?, &nt(alg, "x2 x2 x2")?), &(&q - &one).powu(3));
        let left = alg.mul(&nt(alg, "g1 g2 g2")?, &gm("g1 g1 g2")?);
        expect.add_scaled(&t(&left, &gm("g1 g2 g2")?), &(&(&one - &q) * &(&g1v * &g2v)));
        Ok(co.delta(&z3)? == expect)
    })();
    let name = "Delta(z^3) four-term formula, A2 n=3, gamma=(2,5)";
    checks.push(match a2_part {
        Ok(ok) => CheckEntry::new(name, "a2.delta.z_cubed", ok, ""),
        Err(e) => CheckEntry::new(name, "a2.delta.z_cubed", false, e.to_string()),
    });
    Report::new("coproduct formulas", checks)
}

/// Every admissible B2 spec over `d` with all four parameters in {0, 1}.
pub fn b2_binary_specs(d: &YDDatum) -> Vec<LiftingSpec> {
    let mut out = Vec::new();
    for mu1 in 0..2u8 {
        for mu2 in 0..2u8 {
            for lambda in 0..2 {
                for gamma in 0..2 {
                    let sp = LiftingSpec::b2(d, mu1, mu2, int(lambda), int(gamma));
                    if sp.admissible().is_ok() {
                        out.push(sp);
                    }
                }
            }
        }
    }
    out
}

/// Every admissible A2 spec over `d` with all five parameters in {0, 1}.
pub fn a2_binary_specs(d: &YDDatum) -> Vec<LiftingSpec> {
    let mut out = Vec::new();
    for bits in 0..32u32 {
        let b = |i: u32| (bits >> i) & 1;
        let sp = LiftingSpec::a2(d, b(0) as u8, b(1) as u8, int(b(2) as i64), int(b(3) as i64), int(b(4) as i64));
        if sp.admissible().is_ok() {
            out.push(sp);
        }
    }
    out
}

/// Hopf-ideal checks for every spec, plus the v-coefficient adjudication
/// of the datum when it is of type B2.
pub fn hopf_ideal_suite(specs: &[LiftingSpec]) -> Report {
    let mut checks: Vec<CheckEntry> = specs
        .par_iter()
        .map(|sp| match hopf_ideal_check(sp) {
            Ok(ic) => {
                let mut out: Vec<CheckEntry> = ic
                    .report
                    .generators
                    .iter()
                    .map(|g| {
                        let detail = format!(
                            "counit {}, delta {}, antipode {}",
                            ok_str(g.counit_ok),
                            ok_str(g.delta_ok),
                            ok_str(g.antipode_ok)
                        );
                        CheckEntry::new(format!("{} generates a Hopf ideal, {}", g.name, spec_label(sp)), &g.anchor, g.passed(), detail)
                    })
                    .collect();
                if !ic.report.confluent {
                    out.push(CheckEntry::new(format!("quotient confluent, {}", spec_label(sp)), "rewrite.confluence", false, ""));
                }
                out
            }
            Err(e) => vec![CheckEntry::new(format!("Hopf ideal, {}", spec_label(sp)), "hopf.ideal", false, e.to_string())],
        })
        .flatten()
        .collect();
    if let Some(sp) = specs.iter().find(|sp| sp.kind == CartanType::B2) {
        checks.push(v_coefficient_entry(&sp.datum));
    }
    Report::new("Hopf ideals", checks)
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "fails"
    }
}

/// Records the adjudicated coefficient of `μ2 x1ⁿ` in `v`. Passes when the
/// chosen candidate matches the coefficient forced by `Δ(zⁿ)` and, where a
/// direct check is possible, passes it.
pub fn v_coefficient_entry(d: &YDDatum) -> CheckEntry {
    match adjudicate_v(d) {
        Ok(adj) => {
            let direct_ok = adj.direct.as_ref().map_or(true, |v| v.iter().any(|(c, ok)| *c == adj.chosen && *ok));
            let mut detail = format!("chosen {}, required {}", adj.chosen.as_str(), s(&adj.required));
            for (c, ok) in &adj.candidates {
                detail.push_str(&format!("; {} {}", c.as_str(), if *ok { "matches" } else { "does not match" }));
            }
            if let Some(direct) = &adj.direct {
                for (c, ok) in direct {
                    detail.push_str(&format!("; direct check with {} {}", c.as_str(), ok_str(*ok)));
                }
            }
            if let Some(om) = adj.omega_primitive {
                detail.push_str(&format!("; omega primitive: {om}"));
            }
            let passed = direct_ok && adj.candidates.iter().any(|(c, ok)| *c == adj.chosen && *ok);
            CheckEntry::new("coefficient of mu2 x1^n in v", "b2.v_coefficient", passed, detail)
        }
        Err(e) => CheckEntry::new("coefficient of mu2 x1^n in v", "b2.v_coefficient", false, e.to_string()),
    }
}

/// Basis counts against `n⁴|Γ|` (B2) or `n³|Γ|` (A2) and, where given, a
/// pinned value.
pub fn dimension_suite(cases: &[(LiftingSpec, Option<u64>)]) -> Report {
    let checks = cases
        .par_iter()
        .map(|(sp, pinned)| {
            let expected = pinned.unwrap_or_else(|| expected_dimension(sp));
            let anchor = if sp.kind == CartanType::B2 { "b2.dimension" } else { "a2.dimension" };
            let name = format!("dim over {:?}, {}", sp.datum.group().factors(), spec_label(sp));
            match dimension(sp) {
                Ok(dim) => CheckEntry::new(
                    name,
                    anchor,
                    dim == expected && dim == expected_dimension(sp),
                    format!("{dim} (expected {expected})"),
                ),
                Err(e) => CheckEntry::new(name, anchor, false, e.to_string()),
            }
        })
        .collect();
    Report::new("dimensions", checks)
}

fn power_commutations(d: &YDDatum) -> Result<Vec<CheckEntry>, qlift_core::Error> {
    let n = d.n();
    let alg = Algebra::new(b2_uplus(d)?);
    let bn = |i, j, k: u32| d.b(i, j).powu((k * n) as u64);
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
    let mut out = Vec::new();
    for (y, x, c) in cases {
        let xn = alg.pow(&alg.gen(x)?, n);
        let diff = alg.commutator(&alg.gen(y)?, &xn, &c);
        out.push(CheckEntry::new(
            format!("{y} {x}^{n} = {} {x}^{n} {y} in U+", c.to_factor_string()),
            format!("b2.commute.{y}_{x}^n"),
            diff.is_zero(),
            alg.render(&diff),
        ));
    }
    Ok(out)
}

/// `Y Xⁿ = αⁿ Xⁿ Y + (Σ αⁱβⁿ⁻¹⁻ⁱ) Xⁿ⁻¹ Z` in `⟨X, Y, Z | YX = αXY + Z, ZX = βXZ⟩`.
fn skew_power_identity(alpha: &Cyclotomic, beta: &Cyclotomic, n_max: u32) -> Result<Option<u32>, qlift_core::Error> {
    let gens = vec![Generator::plain("X", 1), Generator::plain("Z", 2), Generator::plain("Y", 1)];
    let mut p = Presentation::new("skew-power", gens, AbelianGroup::trivial(), None)?;
    let id = p.identity();
    let yx: Element =
        [(Monomial::new(id.clone(), vec![0, 2]), alpha.clone()), (Monomial::new(id.clone(), vec![1]), int(1))].into_iter().collect();
    p.add_swap(2, 0, yx, "YX = a XY + Z")?;
    p.add_swap(1, 0, Element::term(beta.clone(), Monomial::new(id, vec![0, 1])), "ZX = b XZ")?;
    let alg = Algebra::new(Arc::new(p));
    let (x, y, z) = (alg.gen("X")?, alg.gen("Y")?, alg.gen("Z")?);
    for n in 1..=n_max {
        let lhs = alg.mul(&y, &alg.pow(&x, n));
        let mut rhs = alg.mul(&alg.pow(&x, n), &y).scale(&alpha.powu(n as u64));
        let sum = (0..n as u64).fold(int(0), |acc, i| &acc + &(&alpha.powu(i) * &beta.powu(n as u64 - 1 - i)));
        rhs.add_scaled(&alg.mul(&alg.pow(&x, n - 1), &z), &sum);
        if lhs != rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `x tⁿ = qⁿ tⁿ x + λ qⁿ⁻¹ (n)_q tⁿ⁻¹ z²` in the expansion algebra with b = 0.
fn xt_identity(q: &Cyclotomic, lambda: &Cyclotomic, n_max: u32) -> Result<Option<u32>, qlift_core::Error> {
    let alg = Algebra::new(expansion_algebra(q, &int(0), lambda)?);
    let (x, t, z) = (alg.gen("x")?, alg.gen("t")?, alg.gen("z")?);
    for n in 1..=n_max {
        let lhs = alg.mul(&x, &alg.pow(&t, n));
        let mut rhs = alg.mul(&alg.pow(&t, n), &x).scale(&q.powu(n as u64));
        let tail = alg.product(&[alg.pow(&t, n - 1), z.clone(), z.clone()]);
        rhs.add_scaled(&tail, &(&(lambda * &q.powu(n as u64 - 1)) * &q_int(n as i64, q)));
        if lhs != rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn failing_n(name: String, anchor: &str, r: Result<Option<u32>, qlift_core::Error>) -> CheckEntry {
    match r {
        Ok(None) => CheckEntry::new(name, anchor, true, "n = 1..8"),
        Ok(Some(n)) => CheckEntry::new(name, anchor, false, format!("fails at n = {n}")),
        Err(e) => CheckEntry::new(name, anchor, false, e.to_string()),
    }
}

/// Power commutations in U⁺ for each datum, the relation suite of each
/// lifting, and the two auxiliary power identities for n ≤ 8.
pub fn commutation_suite(uplus: &[YDDatum], liftings: &[LiftingSpec]) -> Report {
    let mut checks = Vec::new();
    for d in uplus {
        match power_commutations(d) {
            Ok(c) => checks.extend(c),
            Err(e) => checks.push(CheckEntry::new("power commutations", "b2.commute", false, e.to_string())),
        }
    }
    let reports: Vec<Vec<CheckEntry>> = liftings
        .par_iter()
        .map(|sp| match verify_relations(sp) {
            Ok(r) => r.checks.into_iter().map(CheckEntry::from).collect(),
            Err(e) => vec![CheckEntry::new(format!("relations, {}", spec_label(sp)), "lifting.relations", false, e.to_string())],
        })
        .collect();
    checks.extend(reports.into_iter().flatten());
    let (alpha, beta) = (zeta(9), zeta(9).powu(4));
    checks.push(failing_n("Y X^n with YX = aXY + Z, ZX = bXZ".into(), "skew.power", skew_power_identity(&alpha, &beta, 8)));
    let (alpha, beta) = (zeta(5), zeta(5).powu(3));
    checks.push(failing_n("same, a^5 = b^5 so the tail cancels at n = 5".into(), "skew.power", skew_power_identity(&alpha, &beta, 8)));
    let q = zeta(7);
    checks.push(failing_n("x t^n in the expansion algebra".into(), "gqb.xt", xt_identity(&q, &(&int(2) - &q), 8)));
    Report::new("commutation relations", checks)
}

/// Critical-pair checks for the built-in presentations and fixture
/// quotients; `corrupted` must fail with a named overlap.
pub fn confluence_suite(builtins: &[(String, Arc<Presentation>)], corrupted: &Arc<Presentation>) -> Report {
    let mut checks: Vec<CheckEntry> = builtins
        .par_iter()
        .map(|(name, p)| {
            let r = confluence_check(&Algebra::new(p.clone()));
            let detail = match r.failures.first() {
                None => format!("{} critical pairs", r.checked),
                Some(f) => format!("overlap {} ({}) leaves {}", f.overlap, f.kind.as_str(), f.difference),
            };
            CheckEntry::new(format!("{name} is confluent"), "rewrite.confluence", r.confluent, detail)
        })
        .collect();
    let r = confluence_check(&Algebra::new(corrupted.clone()));
    let (passed, detail) = match r.failures.first() {
        Some(f) if !r.confluent => (true, format!("fails on overlap {} between {} and {}", f.overlap, f.rules.0, f.rules.1)),
        _ => (false, "corrupted rules unexpectedly confluent".into()),
    };
    checks.push(CheckEntry::new("corrupted rule set is rejected", "rewrite.corrupted", passed, detail));
    Report::new("confluence", checks)
}

/// The built-in presentations over the given data: the expansion and
/// two-term algebras at a few q, U⁺ and the biproducts.
pub fn builtin_presentations(b2: &[YDDatum], a2: &[YDDatum]) -> Result<Vec<(String, Arc<Presentation>)>, qlift_core::Error> {
    let mut out = Vec::new();
    for q in [zeta(3), zeta(5), zeta(12), int(2)] {
        out.push((format!("expansion algebra q={}", s(&q)), expansion_algebra(&q, &int(1), &int(-2))?));
    }
    for n in [3u32, 5, 7] {
        out.push((format!("two-term algebra q=zeta({n})"), s_variant_algebra(&zeta(n), &(&int(1) - &zeta(n)))?));
    }
    for d in b2 {
        out.push((format!("U+ of B2 over {:?}", d.group().factors()), b2_uplus(d)?));
        out.push((format!("B2 biproduct over {:?}", d.group().factors()), biproduct(d, CartanType::B2)?));
    }
    for d in a2 {
        out.push((format!("A2 free part over {:?}", d.group().factors()), qlift_core::rewrite::a2_free(d)?));
        out.push((format!("A2 biproduct over {:?}", d.group().factors()), biproduct(d, CartanType::A2)?));
    }
    Ok(out)
}

/// Witnesses between all pairs of `specs`. A pair is expected to have no
/// witness exactly when it is A2 with differing γ-pairs, one of which has
/// both entries nonzero.
pub fn quasi_suite(specs: &[LiftingSpec]) -> Report {
    let mut builder = WitnessBuilder::new();
    let mut checks = Vec::new();
    for a in specs {
        for b in specs {
            let expect_absent = a.kind == CartanType::A2
                && (a.gamma1 != b.gamma1 || a.gamma2 != b.gamma2)
                && [a, b].iter().any(|x| !x.gamma1.is_zero() && !x.gamma2.is_zero());
            let name = format!("{} ~ {}", spec_label(a), spec_label(b));
            let anchor = if a.kind == CartanType::B2 { "b2.quasi" } else { "a2.quasi" };
            let entry = match builder.witness(a, b) {
                Ok(QuasiIso::Witness(w)) => {
                    let failing: Vec<String> = w
                        .chain
                        .iter()
                        .filter(|c| !c.step.verified)
                        .map(|c| format!("{} -> {}", spec_label(&c.step.low), spec_label(&c.step.high)))
                        .collect();
                    let detail = if failing.is_empty() {
                        format!("{} conjugation step(s) verified", w.chain.len())
                    } else {
                        format!("unverified steps: {}", failing.join("; "))
                    };
                    CheckEntry::new(name, anchor, !expect_absent && w.verified(), detail)
                }
                Ok(QuasiIso::Absent { note }) => CheckEntry::new(name, anchor, expect_absent, format!("absent: {note}")),
                Err(e) => CheckEntry::new(name, anchor, false, e.to_string()),
            };
            checks.push(entry);
        }
    }
    Report::new("quasi-isomorphism witnesses", checks)
}

/// Isomorphism probe on the order-49 datum: isomorphic exactly when the
/// two λ agree.
pub fn probe_suite(d: &YDDatum, lambdas: &[Cyclotomic]) -> Report {
    let pairs: Vec<(usize, usize)> = (0..lambdas.len()).flat_map(|i| (0..lambdas.len()).map(move |j| (i, j))).collect();
    let checks = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (l1, l2) = (&lambdas[i], &lambdas[j]);
            let name = format!("A({}) vs A({})", s(l1), s(l2));
            match a2_isomorphism_probe(l1, l2, d) {
                Ok(iso) => CheckEntry::new(name, "a2.z49.isomorphism", iso == (l1 == l2), if iso { "isomorphic" } else { "not isomorphic" }),
                Err(e) => CheckEntry::new(name, "a2.z49.isomorphism", false, e.to_string()),
            }
        })
        .collect();
    Report::new("order-49 isomorphism probe", checks)
}

/// Sample λ values for the probe, in ℚ(ζ_49).
pub fn probe_lambdas(d: &YDDatum) -> Vec<Cyclotomic> {
    let z7 = d.root(7);
    vec![int(0), int(1), int(2), int(-1), z7.clone(), &int(1) + &z7.powu(3), Cyclotomic::from(Rational::new(1, 2).expect("nonzero"))]
}

/// First B2 datum over `Z_n × Z_n` with `ord(q) = n`.
pub fn b2_square_datum(n: u32) -> Option<YDDatum> {
    let g = AbelianGroup::new(vec![n, n]).ok()?;
    datum_search(&g, CartanType::B2, n).into_iter().next()
}
