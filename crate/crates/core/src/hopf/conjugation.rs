use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::coalgebra::{apply_left, apply_right, Coalgebra};
use crate::abelian::GroupElem;
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::rewrite::{Element, Monomial, Presentation, Word};

/// A commutative subalgebra `K = kΓ'[k₁, …, k_r]` of an ambient algebra,
/// where `Γ'` is generated by the given grouplikes and each `kᵢ` has a
/// single top term. Elements of `K` are decomposed by peeling off top
/// words, so `K` must be free on the `kᵢ` over `kΓ'`; products that
/// degenerate or collide are reported as errors when met.
#[derive(Debug)]
pub struct Subalgebra {
    co: Coalgebra,
    group: BTreeSet<GroupElem>,
    group_gens: Vec<GroupElem>,
    gens: Vec<(String, Element)>,
    tops: Vec<Word>,
    products: RefCell<BTreeMap<Vec<u32>, Element>>,
}

/// One term of a decomposition: `c · h · Π kᵢ^{aᵢ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct KTerm {
    pub coeff: Cyclotomic,
    pub group: GroupElem,
    pub exponents: Vec<u32>,
}

fn top_word(pres: &Presentation, e: &Element) -> Option<Word> {
    e.iter().map(|(m, _)| &m.word).max_by(|a, b| pres.cmp_words(a, b)).cloned()
}

fn top_part(pres: &Presentation, e: &Element) -> Vec<(Monomial, Cyclotomic)> {
    match top_word(pres, e) {
        None => Vec::new(),
        Some(w) => e.iter().filter(|(m, _)| m.word == w).map(|(m, c)| (m.clone(), c.clone())).collect(),
    }
}

impl Subalgebra {
    /// Validates commutativity (generators with each other and with `Γ'`)
    /// and single top terms.
    pub fn new(pres: Arc<Presentation>, group_gens: &[GroupElem], gens: Vec<(String, Element)>) -> Result<Self> {
        let co = Coalgebra::new(pres.clone());
        let alg = co.algebra();
        let grp = pres.group();
        let mut group = BTreeSet::new();
        let mut frontier = alloc::vec![pres.identity()];
        group.insert(pres.identity());
        while let Some(h) = frontier.pop() {
            for g in group_gens {
                grp.check(g)?;
                let next = grp.mul(&h, g);
                if group.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let gens: Vec<(String, Element)> = gens.into_iter().map(|(n, e)| (n, alg.reduce(&e))).collect();
        let mut tops = Vec::new();
        for (name, k) in &gens {
            let top = top_part(&pres, k);
            if top.len() != 1 || top[0].0.word.is_empty() {
                return Err(Error::InvalidAlgebraMap(alloc::format!(
                    "subalgebra generator `{name}` = {} needs a single non-scalar top term",
                    alg.render(k)
                )));
            }
            tops.push(top[0].0.word.clone());
            for g in group_gens {
                let ge = Element::monomial(g.clone(), Word::new());
                if alg.mul(&ge, k) != alg.mul(k, &ge) {
                    return Err(Error::InvalidAlgebraMap(alloc::format!(
                        "`{name}` does not commute with {}",
                        pres.render_monomial(&Monomial::new(g.clone(), Word::new()))
                    )));
                }
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if alg.commutator(&gens[i].1, &gens[j].1, &Cyclotomic::one()) != Element::zero() {
                    return Err(Error::InvalidAlgebraMap(alloc::format!(
                        "`{}` and `{}` do not commute",
                        gens[i].0, gens[j].0
                    )));
                }
            }
        }
        Ok(Subalgebra { co, group, group_gens: group_gens.to_vec(), gens, tops, products: RefCell::new(BTreeMap::new()) })
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.co
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.gens
    }

    pub fn group_generators(&self) -> &[GroupElem] {
        &self.group_gens
    }

    fn pres(&self) -> &Arc<Presentation> {
        self.co.presentation()
    }

    fn product(&self, a: &[u32]) -> Element {
        if let Some(p) = self.products.borrow().get(a) {
            return p.clone();
        }
        let alg = self.co.algebra();
        let mut p = alg.one();
        for (i, &k) in a.iter().enumerate() {
            if k > 0 {
                p = alg.mul(&p, &alg.pow(&self.gens[i].1, k));
            }
        }
        self.products.borrow_mut().insert(a.to_vec(), p.clone());
        p
    }

    /// Exponent vectors whose product has the given top word.
    fn match_word(&self, w: &Word) -> Result<Vec<u32>> {
        let pres = self.pres().clone();
        let target = pres.weight(w);
        let weights: Vec<u64> = self.tops.iter().map(|t| pres.weight(t)).collect();
        let mut found: Option<Vec<u32>> = None;
        let mut a = alloc::vec![0u32; weights.len()];
        // Enumerate all exponent vectors of total weight `target`.
        fn rec(
            i: usize,
            left: u64,
            weights: &[u64],
            a: &mut Vec<u32>,
            visit: &mut dyn FnMut(&[u32]) -> Result<()>,
        ) -> Result<()> {
            if i == weights.len() {
                return if left == 0 { visit(a) } else { Ok(()) };
            }
            let mut k = 0u32;
            loop {
                let used = weights[i] * k as u64;
                if used > left {
                    break;
                }
                a[i] = k;
                rec(i + 1, left - used, weights, a, visit)?;
                k += 1;
            }
            a[i] = 0;
            Ok(())
        }
        let mut visit = |a: &[u32]| -> Result<()> {
            let p = self.product(a);
            let top = top_part(&pres, &p);
            let expected: u64 = a.iter().zip(&weights).map(|(&k, &wt)| k as u64 * wt).sum();
            if top.len() != 1 || pres.weight(&top[0].0.word) != expected {
                return Err(Error::InvalidAlgebraMap(alloc::format!(
                    "subalgebra is not free: product with exponents {a:?} degenerates to {}",
                    self.co.algebra().render(&p)
                )));
            }
            if top[0].0.word == *w {
                if found.is_some() {
                    return Err(Error::InvalidAlgebraMap(alloc::format!(
                        "two products share the top word {}",
                        pres.render_word(w)
                    )));
                }
                found = Some(a.to_vec());
            }
            Ok(())
        };
        rec(0, target, &weights, &mut a, &mut visit)?;
        found.ok_or_else(|| Error::NotExpressible(alloc::format!("{} is not a top word of the subalgebra", pres.render_word(w))))
    }

    /// Writes an element of `K` as `Σ c · h · Π kᵢ^{aᵢ}`.
    pub fn decompose(&self, e: &Element) -> Result<Vec<KTerm>> {
        let pres = self.pres().clone();
        let grp = pres.group().clone();
        let alg = self.co.algebra();
        let mut rest = alg.reduce(e);
        let mut out = Vec::new();
        while let Some(w) = top_word(&pres, &rest) {
            let a = if w.is_empty() { alloc::vec![0u32; self.gens.len()] } else { self.match_word(&w)? };
            let p = self.product(&a);
            let top = top_part(&pres, &p);
            let (h0, d) = (&top[0].0.group, &top[0].1);
            let h0inv = grp.inv(h0);
            let terms: Vec<(Monomial, Cyclotomic)> =
                rest.iter().filter(|(m, _)| m.word == w).map(|(m, c)| (m.clone(), c.clone())).collect();
            for (m, c) in terms {
                let h = grp.mul(&m.group, &h0inv);
                if !self.group.contains(&h) {
                    return Err(Error::NotExpressible(alloc::format!(
                        "group part {} lies outside the subalgebra",
                        pres.render_monomial(&Monomial::new(h, Word::new()))
                    )));
                }
                let coeff = c.checked_div(d)?;
                let shifted = alg.mul(&Element::monomial(h.clone(), Word::new()), &p);
                rest.add_scaled(&shifted, &-&coeff);
                out.push(KTerm { coeff, group: h, exponents: a.clone() });
            }
            if rest.iter().any(|(m, _)| m.word == w) {
                return Err(Error::NotExpressible("top word did not cancel".into()));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.decompose(e).is_ok()
    }
}

/// An algebra map `ψ: K → k`, given by its values on the generators of
/// `K`; grouplikes go to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMap {
    pub values: Vec<Cyclotomic>,
}

impl AlgebraMap {
    /// The counit of `K`.
    pub fn counit(k: &Subalgebra) -> Result<Self> {
        let values = k.gens.iter().map(|(_, e)| k.co.counit(e)).collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMap { values })
    }

    pub fn new(k: &Subalgebra, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != k.gens.len() {
            return Err(Error::InvalidAlgebraMap(alloc::format!(
                "{} values for {} generators",
                values.len(),
                k.gens.len()
            )));
        }
        Ok(AlgebraMap { values })
    }

    pub fn eval(&self, k: &Subalgebra, e: &Element) -> Result<Cyclotomic> {
        let mut s = Cyclotomic::zero();
        for t in k.decompose(e)? {
            let mut v = t.coeff.clone();
            for (val, &a) in self.values.iter().zip(&t.exponents) {
                if a > 0 {
                    v = &v * &val.powu(a as u64);
                }
            }
            s = &s + &v;
        }
        Ok(s)
    }

    /// `ψ⁻¹ = ψ ∘ S`.
    pub fn eval_inverse(&self, k: &Subalgebra, e: &Element) -> Result<Cyclotomic> {
        self.eval(k, &k.co.antipode(e)?)
    }
}

/// `(ψ ⊗ id ⊗ ψ⁻¹) Δ²(a)` for `a ∈ K`.
pub fn conjugate_by(k: &Subalgebra, psi: &AlgebraMap, a: &Element) -> Result<Element> {
    let co = &k.co;
    let inner = apply_right(&co.delta(a)?, |r| psi.eval_inverse(k, r))?;
    apply_left(&co.delta(&inner)?, |l| psi.eval(k, l))
}

/// `ψ ⇀ a = (id ⊗ ψ) Δ(a)`.
pub fn left_translate(k: &Subalgebra, psi: &AlgebraMap, a: &Element) -> Result<Element> {
    apply_right(&k.co.delta(a)?, |r| psi.eval(k, r))
}

/// `(ψ * φ)(x) = (ψ ⊗ φ) Δ(x)`, on the generators of `K`.
pub fn convolution(k: &Subalgebra, psi: &AlgebraMap, phi: &AlgebraMap) -> Result<AlgebraMap> {
    let mut values = Vec::new();
    for (_, g) in &k.gens {
        let partial = apply_right(&k.co.delta(g)?, |r| phi.eval(k, r))?;
        values.push(psi.eval(k, &partial)?);
    }
    Ok(AlgebraMap { values })
}
