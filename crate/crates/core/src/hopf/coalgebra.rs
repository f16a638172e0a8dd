use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::tensor::{TensorElement, TensorSquare};
use crate::abelian::GroupElem;
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::rewrite::{Algebra, CoproductRule, Element, Monomial, Presentation, Word};

/// Coproduct, counit and antipode of the bosonized algebra given by a
/// presentation. Grouplikes have `Δ(h) = h ⊗ h`; generators carry their
/// rule from the presentation.
///
/// Inputs are read as products of their letters, so an element of a base
/// presentation can be pushed into a quotient by evaluating it there:
/// `Δ` and `S` of the image come out with legs already reduced.
#[derive(Debug)]
pub struct Coalgebra {
    alg: Algebra,
    word_delta: RefCell<BTreeMap<Word, TensorElement>>,
    gen_antipode: RefCell<BTreeMap<u8, Element>>,
    gen_counit: RefCell<BTreeMap<u8, Cyclotomic>>,
}

impl Coalgebra {
    pub fn new(pres: Arc<Presentation>) -> Self {
        Self::from_algebra(Algebra::new(pres))
    }

    pub fn from_algebra(alg: Algebra) -> Self {
        Coalgebra {
            alg,
            word_delta: RefCell::new(BTreeMap::new()),
            gen_antipode: RefCell::new(BTreeMap::new()),
            gen_counit: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.alg.presentation()
    }

    pub fn square(&self) -> TensorSquare<'_> {
        TensorSquare::new(&self.alg, &self.alg)
    }

    fn rule(&self, x: u8) -> &CoproductRule {
        &self.presentation().generators()[x as usize].coproduct
    }

    fn missing(&self, x: u8) -> Error {
        let name = &self.presentation().generators()[x as usize].name;
        Error::NotExpressible(alloc::format!("generator `{name}` has no coproduct"))
    }

    fn grouplike(&self, h: &GroupElem) -> TensorElement {
        let e = Element::monomial(h.clone(), Word::new());
        TensorElement::pure(&e, &e)
    }

    fn gen_delta(&self, x: u8) -> Result<TensorElement> {
        let one = Element::monomial(self.presentation().identity(), Word::new());
        let gx = Element::monomial(self.presentation().identity(), alloc::vec![x]);
        match self.rule(x).clone() {
            CoproductRule::None => Err(self.missing(x)),
            CoproductRule::SkewPrimitive(g) => {
                let mut t = TensorElement::pure(&Element::monomial(g, Word::new()), &gx);
                t.add_scaled(&TensorElement::pure(&gx, &one), &Cyclotomic::one());
                Ok(t)
            }
            CoproductRule::Defined(terms) => {
                let mut t = TensorElement::zero();
                for (c, w) in &terms {
                    t.add_scaled(&self.delta_word(w)?, c);
                }
                Ok(t)
            }
        }
    }

    /// `Δ` of a product of letters, memoized on prefixes.
    pub fn delta_word(&self, w: &[u8]) -> Result<TensorElement> {
        if let Some(t) = self.word_delta.borrow().get(w) {
            return Ok(t.clone());
        }
        let t = match w.len() {
            0 => self.square().one(),
            1 => self.gen_delta(w[0])?,
            k => {
                let head = self.delta_word(&w[..k - 1])?;
                let last = self.delta_word(&w[k - 1..])?;
                self.square().mul(&head, &last)
            }
        };
        self.word_delta.borrow_mut().insert(w.to_vec(), t.clone());
        Ok(t)
    }

    pub fn delta(&self, e: &Element) -> Result<TensorElement> {
        let sq = self.square();
        let mut out = TensorElement::zero();
        for (m, c) in e.iter() {
            let dw = self.delta_word(&m.word)?;
            out.add_scaled(&sq.mul(&self.grouplike(&m.group), &dw), c);
        }
        Ok(out)
    }

    fn counit_gen(&self, x: u8) -> Result<Cyclotomic> {
        if let Some(c) = self.gen_counit.borrow().get(&x) {
            return Ok(c.clone());
        }
        let c = match self.rule(x).clone() {
            CoproductRule::None => return Err(self.missing(x)),
            CoproductRule::SkewPrimitive(_) => Cyclotomic::zero(),
            CoproductRule::Defined(terms) => {
                let mut s = Cyclotomic::zero();
                for (c, w) in &terms {
                    s = &s + &(c * &self.counit_word(w)?);
                }
                s
            }
        };
        self.gen_counit.borrow_mut().insert(x, c.clone());
        Ok(c)
    }

    fn counit_word(&self, w: &[u8]) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::one();
        for &x in w {
            acc = &acc * &self.counit_gen(x)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn counit(&self, e: &Element) -> Result<Cyclotomic> {
        let mut s = Cyclotomic::zero();
        for (m, c) in e.iter() {
            s = &s + &(c * &self.counit_word(&m.word)?);
        }
        Ok(s)
    }

    fn antipode_gen(&self, x: u8) -> Result<Element> {
        if let Some(s) = self.gen_antipode.borrow().get(&x) {
            return Ok(s.clone());
        }
        let pres = self.presentation().clone();
        let s = match self.rule(x).clone() {
            CoproductRule::None => return Err(self.missing(x)),
            // S(x) = −g⁻¹x
            CoproductRule::SkewPrimitive(g) => {
                let ginv = pres.group().inv(&g);
                self.alg.mul(&Element::monomial(ginv, Word::new()), &self.alg.gen_at(x)).scale(&Cyclotomic::from_int(-1))
            }
            CoproductRule::Defined(terms) => {
                let mut s = Element::zero();
                for (c, w) in &terms {
                    s.add_scaled(&self.antipode_word(w)?, c);
                }
                s
            }
        };
        self.gen_antipode.borrow_mut().insert(x, s.clone());
        Ok(s)
    }

    fn antipode_word(&self, w: &[u8]) -> Result<Element> {
        let mut acc = self.alg.one();
        for &x in w.iter().rev() {
            acc = self.alg.mul(&acc, &self.antipode_gen(x)?);
        }
        Ok(acc)
    }

    /// Anti-multiplicative, `S(h) = h⁻¹`.
    pub fn antipode(&self, e: &Element) -> Result<Element> {
        let group = self.presentation().group().clone();
        let mut out = Element::zero();
        for (m, c) in e.iter() {
            let sw = self.antipode_word(&m.word)?;
            let hinv = Element::monomial(group.inv(&m.group), Word::new());
            out.add_scaled(&self.alg.mul(&sw, &hinv), c);
        }
        Ok(out)
    }

    /// `(g, h)` with `Δ(a) = g ⊗ a + a ⊗ h`, when `a` is nonzero and such a
    /// pair of grouplikes exists. `h = 1` is tried first.
    pub fn is_skew_primitive(&self, a: &Element) -> Result<Option<(GroupElem, GroupElem)>> {
        let a = self.alg.reduce(a);
        if a.is_zero() {
            return Ok(None);
        }
        let d = self.delta(&a)?;
        let pure = |m: &Monomial| m.word.is_empty();
        let mut lefts = BTreeSet::new();
        let mut rights = BTreeSet::new();
        for (l, r, _) in d.iter() {
            if pure(l) {
                lefts.insert(l.group.clone());
            }
            if pure(r) {
                rights.insert(r.group.clone());
            }
        }
        let id = self.presentation().identity();
        let mut hs: Vec<GroupElem> = Vec::new();
        if rights.remove(&id) {
            hs.push(id);
        }
        hs.extend(rights);
        for h in &hs {
            for g in &lefts {
                let ge = Element::monomial(g.clone(), Word::new());
                let he = Element::monomial(h.clone(), Word::new());
                let mut expect = TensorElement::pure(&ge, &a);
                expect.add_scaled(&TensorElement::pure(&a, &he), &Cyclotomic::one());
                if expect == d {
                    return Ok(Some((g.clone(), h.clone())));
                }
            }
        }
        Ok(None)
    }

    /// `Δ(a) − g ⊗ a − a ⊗ 1`; zero iff `a` is `(g, 1)`-primitive.
    pub fn primitive_defect(&self, a: &Element, g: &GroupElem) -> Result<TensorElement> {
        let red = self.alg.reduce(a);
        let d = self.delta(a)?;
        let ge = Element::monomial(g.clone(), Word::new());
        let mut expect = TensorElement::pure(&ge, &red);
        expect.add_scaled(&TensorElement::pure(&red, &self.alg.one()), &Cyclotomic::one());
        Ok(d.sub(&expect))
    }

    pub fn render(&self, t: &TensorElement) -> String {
        self.square().render(t)
    }
}

/// `Σ_l l · f(R_l)` for `T = Σ_l l ⊗ R_l`.
pub fn apply_right(t: &TensorElement, mut f: impl FnMut(&Element) -> Result<Cyclotomic>) -> Result<Element> {
    let mut out = Element::zero();
    for (l, r) in t.by_left() {
        out.add_term(l, &f(&r)?);
    }
    Ok(out)
}

/// `Σ_r f(L_r) · r` for `T = Σ_r L_r ⊗ r`.
pub fn apply_left(t: &TensorElement, mut f: impl FnMut(&Element) -> Result<Cyclotomic>) -> Result<Element> {
    let mut out = Element::zero();
    for (r, l) in t.by_right() {
        out.add_term(r, &f(&l)?);
    }
    Ok(out)
}
