use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::group::{AbelianGroup, Character, GroupElem};
use crate::error::{Error, Result, Violation, Violations};
use crate::exactnum::{gcd, CycloField, Cyclotomic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A2,
    B2,
    Other,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::A2 => "A2",
            CartanType::B2 => "B2",
            CartanType::Other => "other",
        })
    }
}

impl core::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A2" | "a2" => Ok(CartanType::A2),
            "B2" | "b2" => Ok(CartanType::B2),
            _ => Err(Error::Invalid(alloc::format!("unknown Cartan type `{s}`"))),
        }
    }
}

/// Group `Γ`, elements `g1, g2` and characters `χ1, χ2`, with the braiding
/// matrix `b_ij = χ_j(g_i)` stored both as exponents of ζ_L and as scalars.
#[derive(Clone, Debug)]
pub struct YDDatum {
    group: AbelianGroup,
    g: [GroupElem; 2],
    chi: [Character; 2],
    field: Arc<CycloField>,
    b_exp: [[u32; 2]; 2],
    b: [[Cyclotomic; 2]; 2],
    n: u32,
}

impl PartialEq for YDDatum {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.g == other.g && self.chi == other.chi
    }
}

impl Eq for YDDatum {}

impl YDDatum {
    pub fn new(group: &AbelianGroup, g1: &[i64], g2: &[i64], chi1: &[i64], chi2: &[i64]) -> Result<Self> {
        let g = [group.elem(g1)?, group.elem(g2)?];
        let chi = [Character::new(group, chi1)?, Character::new(group, chi2)?];
        Ok(Self::from_parts(group.clone(), g, chi))
    }

    pub(crate) fn from_parts(group: AbelianGroup, g: [GroupElem; 2], chi: [Character; 2]) -> Self {
        let field = group.root_field();
        let l = group.exponent();
        let e = |i: usize, j: usize| group.pairing(chi[j].exps(), &g[i]);
        let b_exp = [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]];
        let z = |k: u32| Cyclotomic::zeta_pow_in(&field, k as i64);
        let b = [[z(b_exp[0][0]), z(b_exp[0][1])], [z(b_exp[1][0]), z(b_exp[1][1])]];
        let n = l / gcd(b_exp[1][1] as u64, l as u64) as u32;
        YDDatum { group, g, chi, field, b_exp, b, n }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// `g_i` for `i ∈ {1, 2}`.
    pub fn g(&self, i: usize) -> &GroupElem {
        &self.g[i - 1]
    }

    /// `χ_i` for `i ∈ {1, 2}`.
    pub fn chi(&self, i: usize) -> &Character {
        &self.chi[i - 1]
    }

    /// `b_ij = χ_j(g_i)`, 1-based.
    pub fn b(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.b[i - 1][j - 1]
    }

    /// Exponent `k` with `b_ij = ζ_L^k`.
    pub fn b_exp(&self, i: usize, j: usize) -> u32 {
        self.b_exp[i - 1][j - 1]
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.b[1][1]
    }

    /// Multiplicative order of `q = b22`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `L`, the group exponent; all braiding scalars live in ℚ(ζ_L).
    pub fn exponent(&self) -> u32 {
        self.group.exponent()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// ζ_L^k.
    pub fn root(&self, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow_in(&self.field, k)
    }

    /// `g1^a g2^b`.
    pub fn g_word(&self, a: i64, b: i64) -> GroupElem {
        self.group.mul(&self.group.pow(&self.g[0], a), &self.group.pow(&self.g[1], b))
    }

    /// Whether `χ1^a χ2^b` is trivial.
    pub fn chi_word_trivial(&self, a: i64, b: i64) -> bool {
        self.chi[0].pow(a).mul(&self.chi[1].pow(b)).expect("same group").is_trivial()
    }

    pub fn chi_word(&self, a: i64, b: i64) -> Character {
        self.chi[0].pow(a).mul(&self.chi[1].pow(b)).expect("same group")
    }
}

fn exp_order(k: u32, l: u32) -> u32 {
    l / gcd(k as u64, l as u64) as u32
}

fn classify(b: &[[u32; 2]; 2], l: u32) -> CartanType {
    let m = |x: u64| (x % l as u64) as u32;
    let (b11, b12, b21, b22) = (b[0][0] as u64, b[0][1] as u64, b[1][0] as u64, b[1][1] as u64);
    let n = exp_order(b[1][1], l);
    if n <= 1 {
        return CartanType::Other;
    }
    let r1 = m(b12 + b21 + b11) == 0;
    if r1 && m(b21 + b12 + 2 * b22) == 0 && m(b11) == m(2 * b22) && n % 2 == 1 {
        return CartanType::B2;
    }
    if r1 && m(b21 + b12 + b22) == 0 && b11 == b22 {
        return CartanType::A2;
    }
    CartanType::Other
}

/// B2 needs the three braiding relations with `q = b22` of odd order `n > 1`;
/// A2 needs `b12 b21 b11 = 1 = b21 b12 b22`, `b11 = b22 = q ≠ 1`.
pub fn cartan_type(datum: &YDDatum) -> CartanType {
    classify(&datum.b_exp, datum.exponent())
}

/// Deformation parameters. B2 uses `gamma`; A2 uses `gamma1`, `gamma2`
/// (nonzero only when `n = 3`). Unused fields must be zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftingSpec {
    pub datum: YDDatum,
    pub kind: CartanType,
    pub mu1: u8,
    pub mu2: u8,
    pub lambda: Cyclotomic,
    pub gamma: Cyclotomic,
    pub gamma1: Cyclotomic,
    pub gamma2: Cyclotomic,
}

impl LiftingSpec {
    pub fn zero(datum: &YDDatum, kind: CartanType) -> Self {
        LiftingSpec {
            datum: datum.clone(),
            kind,
            mu1: 0,
            mu2: 0,
            lambda: Cyclotomic::zero(),
            gamma: Cyclotomic::zero(),
            gamma1: Cyclotomic::zero(),
            gamma2: Cyclotomic::zero(),
        }
    }

    pub fn b2(datum: &YDDatum, mu1: u8, mu2: u8, lambda: Cyclotomic, gamma: Cyclotomic) -> Self {
        LiftingSpec { mu1, mu2, lambda, gamma, ..Self::zero(datum, CartanType::B2) }
    }

    pub fn a2(datum: &YDDatum, mu1: u8, mu2: u8, lambda: Cyclotomic, gamma1: Cyclotomic, gamma2: Cyclotomic) -> Self {
        LiftingSpec { mu1, mu2, lambda, gamma1, gamma2, ..Self::zero(datum, CartanType::A2) }
    }

    pub fn n(&self) -> u32 {
        self.datum.n()
    }

    /// Same datum and type, all parameters zero.
    pub fn with_zero_parameters(&self) -> Self {
        Self::zero(&self.datum, self.kind)
    }

    pub fn is_zero(&self) -> bool {
        self.mu1 == 0
            && self.mu2 == 0
            && self.lambda.is_zero()
            && self.gamma.is_zero()
            && self.gamma1.is_zero()
            && self.gamma2.is_zero()
    }

    pub fn admissible(&self) -> core::result::Result<(), Violations> {
        admissible(self)
    }

    pub fn ensure_admissible(&self) -> Result<()> {
        admissible(self).map_err(Error::Inadmissible)
    }
}

fn violation(out: &mut Vec<Violation>, code: &'static str, message: String) {
    out.push(Violation { code, message });
}

/// Checks every parameter constraint and returns all violations.
pub fn admissible(spec: &LiftingSpec) -> core::result::Result<(), Violations> {
    let d = &spec.datum;
    let grp = d.group();
    let n = d.n() as i64;
    let mut out = Vec::new();
    let ty = cartan_type(d);
    if spec.kind == CartanType::Other {
        violation(&mut out, "type", "lifting type must be A2 or B2".into());
    } else if ty != spec.kind {
        violation(&mut out, "type", alloc::format!("datum has Cartan type {ty}, spec declares {}", spec.kind));
    }
    if n % 2 == 0 {
        violation(&mut out, "n_odd", alloc::format!("order of q is {n}, which is even"));
    }
    if spec.kind == CartanType::B2 && n == 5 {
        violation(&mut out, "b2_n5", "type B2 excludes n = 5".into());
    }
    for (i, mu) in [(1usize, spec.mu1), (2, spec.mu2)] {
        if mu > 1 {
            violation(&mut out, "mu_range", alloc::format!("mu{i} = {mu} is not 0 or 1"));
        }
        if mu != 0 {
            if grp.is_identity(&grp.pow(d.g(i), n)) {
                violation(&mut out, "mu_g", alloc::format!("mu{i} ≠ 0 but g{i}^n = 1"));
            }
            if !d.chi(i).pow(n).is_trivial() {
                violation(&mut out, "mu_chi", alloc::format!("mu{i} ≠ 0 but chi{i}^n ≠ ε"));
            }
        }
    }
    if !spec.lambda.is_zero() {
        if grp.is_identity(&d.g_word(n, n)) {
            violation(&mut out, "lambda_g", "lambda ≠ 0 but g1^n g2^n = 1".into());
        }
        if !d.chi_word_trivial(n, n) {
            violation(&mut out, "lambda_chi", "lambda ≠ 0 but (chi1 chi2)^n ≠ ε".into());
        }
    }
    match spec.kind {
        CartanType::B2 => {
            if !spec.gamma.is_zero() {
                if grp.is_identity(&d.g_word(n, 2 * n)) {
                    violation(&mut out, "gamma_g", "gamma ≠ 0 but (g1 g2^2)^n = 1".into());
                }
                if !d.chi_word_trivial(n, 2 * n) {
                    violation(&mut out, "gamma_chi", "gamma ≠ 0 but (chi1 chi2^2)^n ≠ ε".into());
                }
            }
            if !spec.gamma1.is_zero() || !spec.gamma2.is_zero() {
                violation(&mut out, "gamma_i_b2", "gamma1/gamma2 only exist for type A2".into());
            }
        }
        CartanType::A2 => {
            if !spec.gamma.is_zero() {
                violation(&mut out, "gamma_a2", "gamma only exists for type B2; use gamma1/gamma2".into());
            }
            for (i, j, gi) in [(1usize, 2usize, &spec.gamma1), (2, 1, &spec.gamma2)] {
                if gi.is_zero() {
                    continue;
                }
                if n != 3 {
                    violation(&mut out, "gamma_i_n", alloc::format!("gamma{i} ≠ 0 requires n = 3"));
                }
                let gw = grp.mul(&grp.pow(d.g(i), 2), d.g(j));
                if grp.is_identity(&gw) {
                    violation(&mut out, "gamma_i_g", alloc::format!("gamma{i} ≠ 0 but g{i}^2 g{j} = 1"));
                }
                let cw = d.chi(i).pow(2).mul(d.chi(j)).expect("same group");
                if !cw.is_trivial() {
                    violation(&mut out, "gamma_i_chi", alloc::format!("gamma{i} ≠ 0 but chi{i}^2 chi{j} ≠ ε"));
                }
            }
        }
        CartanType::Other => {}
    }
    // b12^n ≠ 1 forces every parameter to vanish
    let l = d.exponent() as u64;
    if (d.b_exp(1, 2) as u64 * n as u64) % l != 0 {
        let params = [
            ("mu1", spec.mu1 != 0),
            ("mu2", spec.mu2 != 0),
            ("lambda", !spec.lambda.is_zero()),
            ("gamma", !spec.gamma.is_zero()),
            ("gamma1", !spec.gamma1.is_zero()),
            ("gamma2", !spec.gamma2.is_zero()),
        ];
        for (name, nonzero) in params {
            if nonzero {
                violation(&mut out, "b12n", alloc::format!("b12^n ≠ 1 forces {name} = 0"));
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(Violations(out))
    }
}

/// Every `(g1, g2, χ1, χ2)` over `group` of the given type with `ord(q) = n`,
/// in lexicographic order of `(g1, g2, χ1, χ2)` exponent vectors.
pub fn datum_search(group: &AbelianGroup, kind: CartanType, n: u32) -> Vec<YDDatum> {
    if kind == CartanType::Other {
        return Vec::new();
    }
    let els = group.elements();
    let l = group.exponent();
    let size = els.len();
    let pair: Vec<u32> = if size * size <= 1 << 24 {
        let mut t = Vec::with_capacity(size * size);
        for c in &els {
            for g in &els {
                t.push(group.pairing(c, g));
            }
        }
        t
    } else {
        Vec::new()
    };
    let p = |c: usize, g: usize| -> u32 {
        if pair.is_empty() {
            group.pairing(&els[c], &els[g])
        } else {
            pair[c * size + g]
        }
    };
    let mut hits: Vec<(usize, usize, usize, usize)> = Vec::new();
    for g2 in 0..size {
        for c2 in 0..size {
            let b22 = p(c2, g2);
            if exp_order(b22, l) != n {
                continue;
            }
            for g1 in 0..size {
                let b12 = p(c2, g1);
                for c1 in 0..size {
                    let b = [[p(c1, g1), b12], [p(c1, g2), b22]];
                    if classify(&b, l) == kind {
                        hits.push((g1, g2, c1, c2));
                    }
                }
            }
        }
    }
    hits.sort_unstable();
    hits.dedup();
    hits.into_iter()
        .map(|(g1, g2, c1, c2)| {
            let chi = |c: usize| {
                let e: Vec<i64> = els[c].iter().map(|&x| x as i64).collect();
                Character::new(group, &e).expect("element of the group")
            };
            YDDatum::from_parts(group.clone(), [els[g1].clone(), els[g2].clone()], [chi(c1), chi(c2)])
        })
        .collect()
}
