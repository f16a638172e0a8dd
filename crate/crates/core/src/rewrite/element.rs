use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::abelian::GroupElem;
use crate::exactnum::Cyclotomic;

/// Generator indices in multiplication order.
pub type Word = Vec<u8>;

/// `h · w` with `h` a group element and `w` a word in the generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub group: GroupElem,
    pub word: Word,
}

impl Monomial {
    pub fn new(group: GroupElem, word: Word) -> Self {
        Monomial { group, word }
    }

    /// Exponent vector over `ngens` generators, when the word is sorted in
    /// generator order (as every PBW normal word is).
    pub fn exponents(&self, ngens: usize) -> Option<Vec<u32>> {
        if self.word.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        let mut e = alloc::vec![0u32; ngens];
        for &x in &self.word {
            e[x as usize] += 1;
        }
        Some(e)
    }
}

/// Finite linear combination of monomials; zero coefficients are never
/// stored, so structural equality is equality of elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn term(c: Cyclotomic, m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn monomial(group: GroupElem, word: Word) -> Self {
        Self::term(Cyclotomic::one(), Monomial { group, word })
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (m, v) in &other.terms {
            if one {
                self.add_term(m.clone(), v);
            } else {
                self.add_term(m.clone(), &(v * c));
            }
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
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

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// The scalar value if every term is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                (m.word.is_empty() && m.group.iter().all(|&e| e == 0)).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest word length among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.word.len()).max().unwrap_or(0)
    }
}

impl FromIterator<(Monomial, Cyclotomic)> for Element {
    fn from_iter<I: IntoIterator<Item = (Monomial, Cyclotomic)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, &c);
        }
        e
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyclotomic::one());
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyclotomic::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Cyclotomic::from_int(-1))
    }
}
