use alloc::string::String;
use alloc::vec::Vec;

use super::element::{Monomial, Word};
use super::presentation::Presentation;
use crate::abelian::GroupElem;
use crate::error::{Error, Result};

/// Normal words of a bounded presentation, times the group.
#[derive(Clone, Debug)]
pub struct Basis {
    pub dimension: u64,
    pub group_elements: Vec<GroupElem>,
    pub words: Vec<Word>,
}

impl Basis {
    /// All normal monomials, group prefix varying slowest.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.group_elements
            .iter()
            .flat_map(move |g| self.words.iter().map(move |w| Monomial::new(g.clone(), w.clone())))
    }
}

/// Enumerates normal monomials. Every generator needs a power rule, and the
/// letters allowed to follow each other (no swap rule) must not cycle.
pub fn enumerate_basis(pres: &Presentation) -> Result<Basis> {
    let n = pres.ngens();
    let unbounded: Vec<String> = (0..n as u8)
        .filter(|&x| pres.power_rule(x).is_none())
        .map(|x| pres.generators()[x as usize].name.clone())
        .collect();
    if !unbounded.is_empty() {
        return Err(Error::InfiniteDimensional(alloc::format!("no power rule for {}", unbounded.join(", "))));
    }
    let allowed = |a: u8, b: u8| a != b && pres.swap_rule(a, b).is_none();
    // Depth-first cycle search on the transition graph.
    let mut state = alloc::vec![0u8; n];
    fn visit(v: usize, n: usize, state: &mut [u8], allowed: &dyn Fn(u8, u8) -> bool) -> bool {
        state[v] = 1;
        for w in 0..n {
            if allowed(v as u8, w as u8) {
                if state[w] == 1 || (state[w] == 0 && visit(w, n, state, allowed)) {
                    return true;
                }
            }
        }
        state[v] = 2;
        false
    }
    for v in 0..n {
        if state[v] == 0 && visit(v, n, &mut state, &allowed) {
            return Err(Error::InfiniteDimensional("unordered generators can alternate without bound".into()));
        }
    }

    let bound = |x: u8| pres.power_rule(x).map(|r| r.exponent as usize).unwrap_or(0);
    let mut words = Vec::new();
    let mut stack: Vec<Word> = alloc::vec![Word::new()];
    while let Some(w) = stack.pop() {
        for x in 0..n as u8 {
            let ok = match w.last() {
                None => true,
                Some(&last) if last == x => w.iter().rev().take_while(|&&y| y == x).count() + 1 < bound(x),
                Some(&last) => allowed(last, x),
            };
            if ok {
                let mut next = w.clone();
                next.push(x);
                stack.push(next);
            }
        }
        words.push(w);
    }
    words.sort_by(|a, b| pres.cmp_words(a, b));
    let group_elements = pres.group().elements();
    let dimension = group_elements.len() as u64 * words.len() as u64;
    Ok(Basis { dimension, group_elements, words })
}
