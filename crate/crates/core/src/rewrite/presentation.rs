use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;

use super::element::{Element, Monomial, Word};
use crate::abelian::{AbelianGroup, GroupElem, YDDatum};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;

/// How the coproduct of a generator is obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum CoproductRule {
    /// No coalgebra structure assigned.
    None,
    /// `Δ(x) = g ⊗ x + x ⊗ 1`.
    SkewPrimitive(GroupElem),
    /// Linear combination of words in other generators; `Δ` is obtained by
    /// multiplying out their coproducts.
    Defined(Vec<(Cyclotomic, Word)>),
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// Weight in the termination order.
    pub weight: u32,
    /// Character exponents governing `x h = χ(h)^{-1} h x`; empty when the
    /// presentation has no group part.
    pub character: Vec<u32>,
    pub coproduct: CoproductRule,
}

impl Generator {
    pub fn plain(name: &str, weight: u32) -> Self {
        Generator { name: name.to_string(), weight, character: Vec::new(), coproduct: CoproductRule::None }
    }
}

/// `left · right → rhs`.
#[derive(Clone, Debug)]
pub struct SwapRule {
    pub left: u8,
    pub right: u8,
    pub rhs: Element,
    pub label: String,
}

/// `gen^exponent → rhs`.
#[derive(Clone, Debug)]
pub struct PowerRule {
    pub gen: u8,
    pub exponent: u32,
    pub rhs: Element,
    pub label: String,
}

/// Input symbol for [`super::Algebra::normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    Gen(u8),
    Group(GroupElem),
}

/// Ordered generators, an optional group part, and oriented rewrite rules.
///
/// Words are ordered by total weight, then length, then lexicographically
/// on generator positions; every rule must strictly decrease this order.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    group: AbelianGroup,
    datum: Option<YDDatum>,
    aliases: BTreeMap<String, GroupElem>,
    swaps: BTreeMap<(u8, u8), SwapRule>,
    powers: BTreeMap<u8, PowerRule>,
    params: BTreeMap<String, Cyclotomic>,
    zeta: Vec<Cyclotomic>,
}

const RESERVED: &[&str] = &["g", "zeta"];

impl Presentation {
    pub fn new(name: &str, generators: Vec<Generator>, group: AbelianGroup, datum: Option<YDDatum>) -> Result<Self> {
        if generators.is_empty() || generators.len() > 64 {
            return Err(Error::Invalid("a presentation needs 1..=64 generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.name.is_empty() || RESERVED.contains(&g.name.as_str()) {
                return Err(Error::Invalid(alloc::format!("invalid generator name `{}`", g.name)));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Invalid(alloc::format!("duplicate generator `{}`", g.name)));
            }
            if g.weight == 0 {
                return Err(Error::Invalid(alloc::format!("generator `{}` needs positive weight", g.name)));
            }
            let chars_ok = if group.rank() == 0 { g.character.is_empty() } else { group.contains(&g.character) };
            if !chars_ok {
                return Err(Error::GroupMismatch(alloc::format!("character of `{}`", g.name)));
            }
            if let CoproductRule::SkewPrimitive(h) = &g.coproduct {
                group.check(h)?;
            }
        }
        let field = group.root_field();
        let zeta = (0..group.exponent() as i64).map(|k| Cyclotomic::zeta_pow_in(&field, k)).collect();
        Ok(Presentation {
            name: name.to_string(),
            generators,
            group,
            datum,
            aliases: BTreeMap::new(),
            swaps: BTreeMap::new(),
            powers: BTreeMap::new(),
            params: BTreeMap::new(),
            zeta,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn datum(&self) -> Option<&YDDatum> {
        self.datum.as_ref()
    }

    pub fn identity(&self) -> GroupElem {
        self.group.identity()
    }

    pub fn gen_index(&self, name: &str) -> Result<u8> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn alias(&self, name: &str) -> Option<&GroupElem> {
        self.aliases.get(name)
    }

    pub fn aliases(&self) -> &BTreeMap<String, GroupElem> {
        &self.aliases
    }

    pub fn add_alias(&mut self, name: &str, g: GroupElem) -> Result<()> {
        self.group.check(&g)?;
        if self.gen_index(name).is_ok() || RESERVED.contains(&name) {
            return Err(Error::Invalid(alloc::format!("alias `{name}` clashes with a generator")));
        }
        self.aliases.insert(name.to_string(), g);
        Ok(())
    }

    pub fn params(&self) -> &BTreeMap<String, Cyclotomic> {
        &self.params
    }

    pub fn set_param(&mut self, name: &str, value: Cyclotomic) {
        self.params.insert(name.to_string(), value);
    }

    pub fn swap_rules(&self) -> impl Iterator<Item = &SwapRule> {
        self.swaps.values()
    }

    pub fn swap_rule(&self, left: u8, right: u8) -> Option<&SwapRule> {
        self.swaps.get(&(left, right))
    }

    pub fn power_rules(&self) -> impl Iterator<Item = &PowerRule> {
        self.powers.values()
    }

    pub fn power_rule(&self, gen: u8) -> Option<&PowerRule> {
        self.powers.get(&gen)
    }

    pub fn set_coproduct(&mut self, gen: u8, rule: CoproductRule) {
        self.generators[gen as usize].coproduct = rule;
    }

    pub fn weight(&self, w: &[u8]) -> u64 {
        w.iter().map(|&x| self.generators[x as usize].weight as u64).sum()
    }

    /// Termination order on words.
    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then(a.len().cmp(&b.len())).then_with(|| a.cmp(b))
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_words(&a.word, &b.word).then_with(|| a.group.cmp(&b.group))
    }

    /// Largest term in the termination order.
    pub fn leading<'a>(&self, e: &'a Element) -> Option<(&'a Monomial, &'a Cyclotomic)> {
        e.iter().max_by(|x, y| self.cmp_monomials(x.0, y.0))
    }

    fn check_element(&self, e: &Element) -> Result<()> {
        for (m, _) in e.iter() {
            self.group.check(&m.group)?;
            if m.word.iter().any(|&x| x as usize >= self.generators.len()) {
                return Err(Error::PresentationMismatch);
            }
        }
        Ok(())
    }

    fn check_decreasing(&self, lhs: &[u8], rhs: &Element, label: &str) -> Result<()> {
        self.check_element(rhs)?;
        for (m, _) in rhs.iter() {
            if self.cmp_words(&m.word, lhs) != Ordering::Less {
                return Err(Error::OrderViolation(alloc::format!(
                    "rule `{label}`: {} is not below {}",
                    self.render_word(&m.word),
                    self.render_word(lhs)
                )));
            }
        }
        Ok(())
    }

    pub fn add_swap(&mut self, left: u8, right: u8, rhs: Element, label: &str) -> Result<()> {
        if left == right || left as usize >= self.ngens() || right as usize >= self.ngens() {
            return Err(Error::Invalid(alloc::format!("rule `{label}` needs two distinct generators")));
        }
        if self.swaps.contains_key(&(left, right)) {
            return Err(Error::Invalid(alloc::format!(
                "a rule for {} already exists",
                self.render_word(&[left, right])
            )));
        }
        self.check_decreasing(&[left, right], &rhs, label)?;
        self.swaps.insert((left, right), SwapRule { left, right, rhs, label: label.to_string() });
        Ok(())
    }

    pub fn add_swap_named(&mut self, left: &str, right: &str, rhs: Element, label: &str) -> Result<()> {
        let (l, r) = (self.gen_index(left)?, self.gen_index(right)?);
        self.add_swap(l, r, rhs, label)
    }

    pub fn add_power(&mut self, gen: u8, exponent: u32, rhs: Element, label: &str) -> Result<()> {
        if exponent < 2 || gen as usize >= self.ngens() {
            return Err(Error::Invalid(alloc::format!("power rule `{label}` needs exponent ≥ 2")));
        }
        if self.powers.contains_key(&gen) {
            return Err(Error::Invalid(alloc::format!(
                "a power rule for {} already exists",
                self.generators[gen as usize].name
            )));
        }
        let lhs: Word = alloc::vec![gen; exponent as usize];
        self.check_decreasing(&lhs, &rhs, label)?;
        self.powers.insert(gen, PowerRule { gen, exponent, rhs, label: label.to_string() });
        Ok(())
    }

    /// Exponent `k` with `χ_x(h) = ζ_L^k`.
    pub fn char_exp(&self, gen: u8, h: &[u32]) -> u32 {
        if self.group.rank() == 0 {
            return 0;
        }
        self.group.pairing(&self.generators[gen as usize].character, h)
    }

    /// Exponent of `χ_w(h)` for the product character of a word.
    pub fn word_char_exp(&self, w: &[u8], h: &[u32]) -> u32 {
        if self.group.rank() == 0 || self.group.is_identity(h) {
            return 0;
        }
        let l = self.group.exponent() as u64;
        (w.iter().map(|&x| self.char_exp(x, h) as u64).sum::<u64>() % l) as u32
    }

    /// Character exponents of a word (product of generator characters).
    pub fn word_character(&self, w: &[u8]) -> GroupElem {
        let mut acc = self.group.identity();
        for &x in w {
            self.group.mul_into(&mut acc, &self.generators[x as usize].character);
        }
        acc
    }

    /// ζ_L^k.
    pub fn zeta(&self, k: i64) -> &Cyclotomic {
        let l = self.zeta.len() as i64;
        &self.zeta[k.rem_euclid(l) as usize]
    }

    pub fn render_word(&self, w: &[u8]) -> String {
        let mut s = String::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.generators[w[i] as usize].name);
            if j - i > 1 {
                let _ = write!(s, "^{}", j - i);
            }
            i = j;
        }
        s
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let g = !self.group.is_identity(&m.group);
        let mut s = String::new();
        if g {
            s.push_str("g[");
            for (i, e) in m.group.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{e}");
            }
            s.push(']');
        }
        if !m.word.is_empty() {
            if g {
                s.push('*');
            }
            s.push_str(&self.render_word(&m.word));
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Terms in decreasing termination order, e.g. `3*x2^2*z - (zeta(3))*g[1,0]`.
    pub fn render(&self, e: &Element) -> String {
        let mut terms: Vec<(&Monomial, &Cyclotomic)> = e.iter().collect();
        terms.sort_by(|a, b| self.cmp_monomials(b.0, a.0));
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mono = self.render_monomial(m);
            let unit = m.word.is_empty() && self.group.is_identity(&m.group);
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, Cyclotomic::rational(-r)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if unit {
                s.push_str(&mag.to_factor_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", mag.to_factor_string(), mono);
            }
        }
        s
    }

    /// Tokens separated by spaces or `*`: generator names with optional
    /// `^k`, group aliases, or literals `g[e1,...]`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Symbol>> {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            let (base, k) = match tok.rsplit_once('^') {
                Some((b, k)) if !b.ends_with(']') || tok.ends_with(|c: char| c.is_ascii_digit()) => {
                    (b, k.parse::<usize>().map_err(|_| Error::parse(0, alloc::format!("bad exponent in `{tok}`")))?)
                }
                _ => (tok, 1),
            };
            let sym = if let Some(inner) = base.strip_prefix("g[").and_then(|r| r.strip_suffix(']')) {
                let exps: Result<Vec<i64>> = inner
                    .split(',')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| p.trim().parse::<i64>().map_err(|_| Error::parse(0, alloc::format!("bad group literal `{base}`"))))
                    .collect();
                Symbol::Group(self.group.elem(&exps?)?)
            } else if let Some(g) = self.aliases.get(base) {
                Symbol::Group(g.clone())
            } else {
                Symbol::Gen(self.gen_index(base)?)
            };
            for _ in 0..k {
                out.push(sym.clone());
            }
        }
        Ok(out)
    }
}

