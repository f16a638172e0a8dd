use alloc::string::String;
use alloc::vec::Vec;

use super::algebra::Algebra;
use super::element::{Element, Word};
use super::presentation::Symbol;
use crate::exactnum::Cyclotomic;

/// Which pair of rules produced an overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `a b c` with rules on `a b` and `b c`.
    SwapSwap,
    /// `a b^n` or `a^n b`.
    SwapPower,
    /// `a^(n+k)`, `0 < k < n`.
    PowerPower,
    /// A rule's left side followed by a group generator.
    Group,
}

impl OverlapKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OverlapKind::SwapSwap => "swap-swap",
            OverlapKind::SwapPower => "swap-power",
            OverlapKind::PowerPower => "power-power",
            OverlapKind::Group => "group",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OverlapFailure {
    pub kind: OverlapKind,
    /// Rendered overlap word, e.g. `x*z*t`.
    pub overlap: String,
    /// Labels of the two rules involved.
    pub rules: (String, String),
    /// Rendered difference of the two reductions.
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub checked: usize,
    pub failures: Vec<OverlapFailure>,
}

/// One critical pair: the overlap word and its two one-step reductions.
struct CriticalPair {
    kind: OverlapKind,
    overlap: Vec<Symbol>,
    rules: (String, String),
    left: Element,
    right: Element,
}

fn critical_pairs(alg: &Algebra) -> Vec<CriticalPair> {
    let pres = alg.presentation().clone();
    let word = |w: &[u8]| Element::monomial(pres.identity(), w.to_vec());
    let gens = |w: &[u8]| w.iter().map(|&x| Symbol::Gen(x)).collect::<Vec<_>>();
    let mut out = Vec::new();

    let swaps: Vec<_> = pres.swap_rules().cloned().collect();
    let powers: Vec<_> = pres.power_rules().cloned().collect();

    for r1 in &swaps {
        for r2 in swaps.iter().filter(|r2| r2.left == r1.right) {
            let c = r2.right;
            out.push(CriticalPair {
                kind: OverlapKind::SwapSwap,
                overlap: gens(&[r1.left, r1.right, c]),
                rules: (r1.label.clone(), r2.label.clone()),
                left: alg.mul(&r1.rhs, &word(&[c])),
                right: alg.mul(&word(&[r1.left]), &r2.rhs),
            });
        }
        for p in &powers {
            let n = p.exponent as usize;
            if p.gen == r1.right {
                let mut w = alloc::vec![r1.left];
                w.extend(core::iter::repeat(p.gen).take(n));
                out.push(CriticalPair {
                    kind: OverlapKind::SwapPower,
                    overlap: gens(&w),
                    rules: (r1.label.clone(), p.label.clone()),
                    left: alg.mul(&r1.rhs, &word(&w[2..])),
                    right: alg.mul(&word(&[r1.left]), &p.rhs),
                });
            }
            if p.gen == r1.left {
                let mut w: Word = core::iter::repeat(p.gen).take(n).collect();
                w.push(r1.right);
                out.push(CriticalPair {
                    kind: OverlapKind::SwapPower,
                    overlap: gens(&w),
                    rules: (p.label.clone(), r1.label.clone()),
                    left: alg.mul(&p.rhs, &word(&[r1.right])),
                    right: alg.mul(&word(&w[..n - 1]), &r1.rhs),
                });
            }
        }
    }
    for p in &powers {
        let n = p.exponent as usize;
        for k in 1..n {
            let tail: Word = core::iter::repeat(p.gen).take(k).collect();
            out.push(CriticalPair {
                kind: OverlapKind::PowerPower,
                overlap: gens(&alloc::vec![p.gen; n + k]),
                rules: (p.label.clone(), p.label.clone()),
                left: alg.mul(&p.rhs, &word(&tail)),
                right: alg.mul(&word(&tail), &p.rhs),
            });
        }
    }

    let group = pres.group();
    if group.rank() > 0 {
        let lhs_rules = swaps
            .iter()
            .map(|r| (alloc::vec![r.left, r.right], &r.rhs, &r.label))
            .chain(powers.iter().map(|p| (alloc::vec![p.gen; p.exponent as usize], &p.rhs, &p.label)));
        for (lhs, rhs, label) in lhs_rules {
            for h in group.generators() {
                let he = Element::monomial(h.clone(), Word::new());
                let k = pres.word_char_exp(&lhs, &h) as i64;
                let mut overlap = gens(&lhs);
                overlap.push(Symbol::Group(h.clone()));
                out.push(CriticalPair {
                    kind: OverlapKind::Group,
                    overlap,
                    rules: (label.clone(), String::from("group")),
                    left: alg.mul(rhs, &he),
                    right: alg.mul(&he, rhs).scale(pres.zeta(-k)),
                });
            }
        }
    }
    out
}

fn render_symbols(alg: &Algebra, symbols: &[Symbol]) -> String {
    let pres = alg.presentation();
    let parts: Vec<String> = symbols
        .iter()
        .map(|s| match s {
            Symbol::Gen(x) => pres.generators()[*x as usize].name.clone(),
            Symbol::Group(g) => pres.render_monomial(&super::Monomial::new(g.clone(), Word::new())),
        })
        .collect();
    parts.join(" ")
}

/// Resolves every critical pair of the rule system.
pub fn confluence_check(alg: &Algebra) -> ConfluenceReport {
    let pairs = critical_pairs(alg);
    let checked = pairs.len();
    let mut failures = Vec::new();
    for cp in pairs {
        let mut diff = cp.left;
        diff.add_scaled(&cp.right, &Cyclotomic::from_int(-1));
        if !diff.is_zero() {
            failures.push(OverlapFailure {
                kind: cp.kind,
                overlap: render_symbols(alg, &cp.overlap),
                rules: cp.rules,
                difference: alg.render(&diff),
            });
        }
    }
    ConfluenceReport { confluent: failures.is_empty(), checked, failures }
}
