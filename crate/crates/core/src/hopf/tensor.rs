use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::Cyclotomic;
use crate::rewrite::{Algebra, Element, Monomial};

/// Element of `A ⊗ A` as a finite sum of `c · m ⊗ m'`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Cyclotomic>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    /// `a ⊗ b`.
    pub fn pure(a: &Element, b: &Element) -> Self {
        let mut t = Self::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                t.add_term(ma.clone(), mb.clone(), &(ca * cb));
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Cyclotomic) {
        for ((l, r), v) in &other.terms {
            self.add_term(l.clone(), r.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &TensorElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Cyclotomic::from_int(-1));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Cyclotomic)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    /// `Σ_l l ⊗ R_l`, grouped by left monomial.
    pub fn by_left(&self) -> BTreeMap<Monomial, Element> {
        let mut out: BTreeMap<Monomial, Element> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(l.clone()).or_default().add_term(r.clone(), c);
        }
        out
    }

    /// `Σ_r L_r ⊗ r`, grouped by right monomial.
    pub fn by_right(&self) -> BTreeMap<Monomial, Element> {
        let mut out: BTreeMap<Monomial, Element> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(r.clone()).or_default().add_term(l.clone(), c);
        }
        out
    }

    /// Applies a linear map to both legs, one monomial at a time.
    pub fn map_legs(&self, mut left: impl FnMut(&Monomial) -> Element, mut right: impl FnMut(&Monomial) -> Element) -> Self {
        let mut lc: BTreeMap<Monomial, Element> = BTreeMap::new();
        let mut rc: BTreeMap<Monomial, Element> = BTreeMap::new();
        let mut out = Self::zero();
        for ((l, r), c) in &self.terms {
            let le = lc.entry(l.clone()).or_insert_with(|| left(l)).clone();
            let re = rc.entry(r.clone()).or_insert_with(|| right(r)).clone();
            out.add_scaled(&TensorElement::pure(&le, &re), c);
        }
        out
    }
}

/// `A ⊗ B` with componentwise multiplication.
pub struct TensorSquare<'a> {
    pub left: &'a Algebra,
    pub right: &'a Algebra,
}

impl<'a> TensorSquare<'a> {
    pub fn new(left: &'a Algebra, right: &'a Algebra) -> Self {
        TensorSquare { left, right }
    }

    pub fn one(&self) -> TensorElement {
        TensorElement::pure(&self.left.one(), &self.right.one())
    }

    pub fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((al, ar), ac) in &a.terms {
            let al = Element::term(Cyclotomic::one(), al.clone());
            let ar = Element::term(Cyclotomic::one(), ar.clone());
            for ((bl, br), bc) in &b.terms {
                let l = self.left.mul(&al, &Element::term(Cyclotomic::one(), bl.clone()));
                let r = self.right.mul(&ar, &Element::term(Cyclotomic::one(), br.clone()));
                out.add_scaled(&TensorElement::pure(&l, &r), &(ac * bc));
            }
        }
        out
    }

    pub fn pow(&self, a: &TensorElement, k: u32) -> TensorElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Reduces both legs (e.g. after changing to a quotient algebra).
    pub fn reduce(&self, t: &TensorElement) -> TensorElement {
        t.map_legs(
            |m| self.left.reduce(&Element::term(Cyclotomic::one(), m.clone())),
            |m| self.right.reduce(&Element::term(Cyclotomic::one(), m.clone())),
        )
    }

    /// `Σ c · l ⊗ r` rendered with `(x) ⊗ (y)` factors.
    pub fn render(&self, t: &TensorElement) -> String {
        if t.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = t
            .by_right()
            .into_iter()
            .rev()
            .map(|(r, l)| {
                let r = self.right.render(&Element::term(Cyclotomic::one(), r));
                alloc::format!("({}) ⊗ ({})", self.left.render(&l), r)
            })
            .collect();
        parts.join(" + ")
    }
}
