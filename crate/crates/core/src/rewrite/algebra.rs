use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::cell::RefCell;

use super::element::{Element, Monomial, Word};
use super::presentation::{Presentation, Symbol};
use crate::abelian::GroupElem;
use crate::error::{Error, Result};
use crate::exactnum::parse::{eval, ExprCtx};
use crate::exactnum::Cyclotomic;

/// Multiplication in the algebra defined by a presentation.
///
/// Normal forms are sums of `c · h · w` with `w` avoiding every rule's
/// left side. Products of a normal word with one generator are memoized,
/// so one `Algebra` should be reused for a batch of computations.
#[derive(Debug)]
pub struct Algebra {
    pres: Arc<Presentation>,
    cache: RefCell<BTreeMap<(Word, u8), Element>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.pres.clone())
    }
}

impl Algebra {
    pub fn new(pres: Arc<Presentation>) -> Self {
        Algebra { pres, cache: RefCell::new(BTreeMap::new()) }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn one(&self) -> Element {
        self.scalar(Cyclotomic::one())
    }

    pub fn scalar(&self, c: Cyclotomic) -> Element {
        Element::term(c, Monomial::new(self.pres.identity(), Word::new()))
    }

    pub fn gen(&self, name: &str) -> Result<Element> {
        Ok(self.gen_at(self.pres.gen_index(name)?))
    }

    pub fn gen_at(&self, i: u8) -> Element {
        Element::monomial(self.pres.identity(), alloc::vec![i])
    }

    pub fn group_elem(&self, g: GroupElem) -> Result<Element> {
        self.pres.group().check(&g)?;
        Ok(Element::monomial(g, Word::new()))
    }

    /// Group element by alias (`g1`) or literal (`g[1,0]`).
    pub fn group_named(&self, name: &str) -> Result<Element> {
        match self.pres.parse_word(name)?.as_slice() {
            [Symbol::Group(g)] => self.group_elem(g.clone()),
            _ => Err(Error::UnknownSymbol(name.to_string())),
        }
    }

    /// Whether a word avoids every rule's left side.
    pub fn is_normal_word(&self, w: &[u8]) -> bool {
        if w.windows(2).any(|p| self.pres.swap_rule(p[0], p[1]).is_some()) {
            return false;
        }
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            if let Some(r) = self.pres.power_rule(w[i]) {
                if j - i >= r.exponent as usize {
                    return false;
                }
            }
            i = j;
        }
        true
    }

    /// Normal form of `w · x` for a normal word `w`.
    pub fn mul_word_gen(&self, w: &[u8], x: u8) -> Element {
        let key = (w.to_vec(), x);
        if let Some(e) = self.cache.borrow().get(&key) {
            return e.clone();
        }
        let out = self.mul_word_gen_uncached(w, x);
        self.cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn mul_word_gen_uncached(&self, w: &[u8], x: u8) -> Element {
        let id = self.pres.identity();
        if let Some(&last) = w.last() {
            if let Some(rule) = self.pres.swap_rule(last, x) {
                return self.mul_word_elem(&w[..w.len() - 1], &rule.rhs);
            }
        }
        if let Some(rule) = self.pres.power_rule(x) {
            let run = 1 + w.iter().rev().take_while(|&&y| y == x).count();
            if run >= rule.exponent as usize {
                let keep = w.len() + 1 - rule.exponent as usize;
                return self.mul_word_elem(&w[..keep], &rule.rhs);
            }
        }
        let mut word = w.to_vec();
        word.push(x);
        Element::monomial(id, word)
    }

    /// Normal form of `w · e` for a normal word `w` and normal `e`.
    pub fn mul_word_elem(&self, w: &[u8], e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.iter() {
            let k = self.pres.word_char_exp(w, &m.group);
            let coeff = if k == 0 { c.clone() } else { c * self.pres.zeta(-(k as i64)) };
            let prod = self.mul_word_word(w, &m.word);
            self.add_shifted(&mut out, &prod, &m.group, &coeff);
        }
        out
    }

    /// Normal form of `w · v` for a normal word `w` and any word `v`.
    pub fn mul_word_word(&self, w: &[u8], v: &[u8]) -> Element {
        let mut acc = Element::monomial(self.pres.identity(), w.to_vec());
        for &x in v {
            acc = self.mul_elem_gen(&acc, x);
        }
        acc
    }

    /// `e · x` for normal `e`.
    pub fn mul_elem_gen(&self, e: &Element, x: u8) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.iter() {
            let prod = self.mul_word_gen(&m.word, x);
            self.add_shifted(&mut out, &prod, &m.group, c);
        }
        out
    }

    /// `out += c · h · prod`.
    fn add_shifted(&self, out: &mut Element, prod: &Element, h: &[u32], c: &Cyclotomic) {
        let group = self.pres.group();
        let trivial = group.is_identity(h);
        for (m, v) in prod.iter() {
            let g = if trivial { m.group.clone() } else { group.mul(h, &m.group) };
            out.add_term(Monomial::new(g, m.word.clone()), &(v * c));
        }
    }

    fn check(&self, e: &Element) -> Result<()> {
        let n = self.pres.ngens();
        let group = self.pres.group();
        for (m, _) in e.iter() {
            if !group.contains(&m.group) || m.word.iter().any(|&x| x as usize >= n) {
                return Err(Error::PresentationMismatch);
            }
        }
        Ok(())
    }

    /// Product of normal elements.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let group = self.pres.group();
        let mut out = Element::zero();
        for (mb, cb) in b.iter() {
            for (ma, ca) in a.iter() {
                let k = self.pres.word_char_exp(&ma.word, &mb.group);
                let mut c = ca * cb;
                if k != 0 {
                    c = &c * self.pres.zeta(-(k as i64));
                }
                let h = group.mul(&ma.group, &mb.group);
                let prod = self.mul_word_word(&ma.word, &mb.word);
                self.add_shifted(&mut out, &prod, &h, &c);
            }
        }
        out
    }

    /// Product after validating both operands against this presentation.
    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(&self.reduce(a), &self.reduce(b)))
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut result = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Normal form of an element whose words may be non-normal.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.iter() {
            let prod = self.mul_word_word(&[], &m.word);
            self.add_shifted(&mut out, &prod, &m.group, c);
        }
        out
    }

    /// Normal form of a word of generator and group symbols.
    pub fn normalize(&self, symbols: &[Symbol]) -> Element {
        let group = self.pres.group();
        let mut acc = self.one();
        for s in symbols {
            acc = match s {
                Symbol::Gen(x) => self.mul_elem_gen(&acc, *x),
                Symbol::Group(g) => acc
                    .iter()
                    .map(|(m, c)| {
                        let k = self.pres.word_char_exp(&m.word, g);
                        let c = if k == 0 { c.clone() } else { c * self.pres.zeta(-(k as i64)) };
                        (Monomial::new(group.mul(&m.group, g), m.word.clone()), c)
                    })
                    .collect(),
            };
        }
        acc
    }

    /// Normal form of a word such as `x1 x2 x2` or `g1*z^2`.
    pub fn normalize_text(&self, text: &str) -> Result<Element> {
        Ok(self.normalize(&self.pres.parse_word(text)?))
    }

    /// `a b − c · b a`.
    pub fn commutator(&self, a: &Element, b: &Element, c: &Cyclotomic) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        let mut out = ab;
        out.add_scaled(&ba, &-c);
        out
    }

    /// Parses a linear combination such as `x2*x1 - (zeta(3))*z + 2*g1 - 2`.
    /// Identifiers resolve to generators, group aliases, then named
    /// parameters of the presentation.
    pub fn parse(&self, text: &str) -> Result<Element> {
        eval(self, text)
    }

    pub fn render(&self, e: &Element) -> String {
        self.pres.render(e)
    }

    /// Leading term in the termination order.
    pub fn leading<'a>(&self, e: &'a Element) -> Option<(&'a Monomial, &'a Cyclotomic)> {
        self.pres.leading(e)
    }

    /// Number of memoized word-times-generator products.
    pub fn cached_products(&self) -> usize {
        self.cache.borrow().len()
    }
}

impl ExprCtx for Algebra {
    type V = Element;

    fn scalar(&self, c: Cyclotomic) -> Element {
        Algebra::scalar(self, c)
    }

    fn ident(&self, name: &str, _pos: usize) -> Result<Element> {
        if let Ok(i) = self.pres.gen_index(name) {
            return Ok(self.gen_at(i));
        }
        if let Some(g) = self.pres.alias(name) {
            return Ok(Element::monomial(g.clone(), Word::new()));
        }
        if let Some(c) = self.pres.params().get(name) {
            return Ok(Algebra::scalar(self, c.clone()));
        }
        Err(Error::UnknownSymbol(name.to_string()))
    }

    fn group(&self, exps: &[i64], _pos: usize) -> Result<Element> {
        Ok(Element::monomial(self.pres.group().elem(exps)?, Word::new()))
    }

    fn add(&self, a: Element, b: Element) -> Element {
        &a + &b
    }

    fn neg(&self, a: Element) -> Element {
        -&a
    }

    fn mul(&self, a: Element, b: Element) -> Result<Element> {
        Ok(Algebra::mul(self, &a, &b))
    }

    fn as_scalar(&self, v: &Element) -> Option<Cyclotomic> {
        v.as_scalar()
    }
}
