use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::{gcd, CycloField, Cyclotomic};

/// Exponent vector of a group element relative to the invariant factors.
pub type GroupElem = Vec<u32>;

/// `Z/d_1 ⊕ … ⊕ Z/d_r` with `d_1 | d_2 | … | d_r`, every `d_k ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidGroup(alloc::format!("invariant factors must be ≥ 2: {factors:?}")));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidGroup(alloc::format!("not a divisibility chain: {factors:?}")));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 1 {
            return Ok(Self::trivial());
        }
        Self::new(vec![n])
    }

    /// `Z/o_1 × … × Z/o_k` in invariant-factor form, with the images of the
    /// standard generators.
    pub fn from_orders(orders: &[u32]) -> Result<(Self, Vec<GroupElem>)> {
        let rels: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, &o)| {
                let mut r = vec![0i64; orders.len()];
                r[i] = o as i64;
                r
            })
            .collect();
        Self::from_relations(&rels, orders.len())
    }

    /// The quotient of `Z^ngens` by the row span of `relations`, normalised
    /// by Smith normal form. Returns the group and the images of the
    /// standard generators.
    pub fn from_relations(relations: &[Vec<i64>], ngens: usize) -> Result<(Self, Vec<GroupElem>)> {
        if relations.iter().any(|r| r.len() != ngens) {
            return Err(Error::InvalidGroup("relation length differs from generator count".into()));
        }
        let (diag, v) = smith_normal_form(relations.to_vec(), ngens);
        if diag.iter().any(|&d| d == 0) {
            return Err(Error::InvalidGroup("relations present an infinite group".into()));
        }
        let keep: Vec<usize> = (0..ngens).filter(|&t| diag[t] > 1).collect();
        let group = AbelianGroup::new(keep.iter().map(|&t| diag[t] as u32).collect())?;
        let images = (0..ngens)
            .map(|j| keep.iter().map(|&t| v[j][t].rem_euclid(diag[t]) as u32).collect())
            .collect();
        Ok((group, images))
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&d| d as u64).product()
    }

    /// Least common multiple of the invariant factors.
    pub fn exponent(&self) -> u32 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn identity(&self) -> GroupElem {
        vec![0; self.rank()]
    }

    pub fn is_identity(&self, g: &[u32]) -> bool {
        g.iter().all(|&e| e == 0)
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        g.len() == self.rank() && g.iter().zip(&self.factors).all(|(&e, &d)| e < d)
    }

    pub fn check(&self, g: &[u32]) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(alloc::format!("{g:?} is not an element of Z{:?}", self.factors)))
        }
    }

    /// Reduces arbitrary integer exponents.
    pub fn elem(&self, exps: &[i64]) -> Result<GroupElem> {
        if exps.len() != self.rank() {
            return Err(Error::GroupMismatch(alloc::format!(
                "expected {} exponents, got {}",
                self.rank(),
                exps.len()
            )));
        }
        Ok(exps.iter().zip(&self.factors).map(|(&e, &d)| e.rem_euclid(d as i64) as u32).collect())
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> GroupElem {
        a.iter().zip(b).zip(&self.factors).map(|((&x, &y), &d)| (x + y) % d).collect()
    }

    pub fn mul_into(&self, a: &mut [u32], b: &[u32]) {
        for ((x, &y), &d) in a.iter_mut().zip(b).zip(&self.factors) {
            *x = (*x + y) % d;
        }
    }

    pub fn inv(&self, a: &[u32]) -> GroupElem {
        a.iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect()
    }

    pub fn pow(&self, a: &[u32], k: i64) -> GroupElem {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as i64 * k).rem_euclid(d as i64)) as u32)
            .collect()
    }

    pub fn elem_order(&self, a: &[u32]) -> u64 {
        a.iter().zip(&self.factors).fold(1u64, |acc, (&x, &d)| {
            let o = d as u64 / gcd(x as u64, d as u64);
            acc / gcd(acc, o) * o
        })
    }

    /// All elements in lexicographic order of exponent vectors.
    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = self.identity();
        loop {
            out.push(cur.clone());
            let mut k = self.rank();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.factors[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// Standard generators `e_k`.
    pub fn generators(&self) -> Vec<GroupElem> {
        (0..self.rank())
            .map(|k| {
                let mut e = self.identity();
                e[k] = 1;
                e
            })
            .collect()
    }

    /// ζ_L for `L` the exponent, as a shared field.
    pub fn root_field(&self) -> Arc<CycloField> {
        Arc::new(CycloField::new(self.exponent()).expect("positive exponent"))
    }

    /// Exponent `k` with `χ(g) = ζ_L^k` for the character with exponents
    /// `chi`.
    pub fn pairing(&self, chi: &[u32], g: &[u32]) -> u32 {
        let l = self.exponent() as u64;
        let mut acc = 0u64;
        for ((&c, &e), &d) in chi.iter().zip(g).zip(&self.factors) {
            acc += (c as u64 * e as u64 % d as u64) * (l / d as u64);
        }
        (acc % l) as u32
    }
}

/// Character `g ↦ ζ_L^{Σ c_k e_k L/d_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    group: AbelianGroup,
    exps: Vec<u32>,
}

impl Character {
    pub fn new(group: &AbelianGroup, exps: &[i64]) -> Result<Self> {
        Ok(Character { group: group.clone(), exps: group.elem(exps)? })
    }

    pub fn trivial(group: &AbelianGroup) -> Self {
        Character { group: group.clone(), exps: group.identity() }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_identity(&self.exps)
    }

    /// `k` with `χ(g) = ζ_L^k`, `0 ≤ k < L`.
    pub fn eval_exp(&self, g: &[u32]) -> Result<u32> {
        self.group.check(g)?;
        Ok(self.group.pairing(&self.exps, g))
    }

    pub fn eval_exp_in(&self, group: &AbelianGroup, g: &[u32]) -> Result<u32> {
        if group != &self.group {
            return Err(Error::GroupMismatch("character belongs to a different group".into()));
        }
        self.eval_exp(g)
    }

    pub fn eval(&self, g: &[u32]) -> Result<Cyclotomic> {
        let k = self.eval_exp(g)?;
        Ok(Cyclotomic::zeta_pow_in(&self.group.root_field(), k as i64))
    }

    pub fn mul(&self, other: &Character) -> Result<Character> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("characters of different groups".into()));
        }
        Ok(Character { group: self.group.clone(), exps: self.group.mul(&self.exps, &other.exps) })
    }

    pub fn pow(&self, k: i64) -> Character {
        Character { group: self.group.clone(), exps: self.group.pow(&self.exps, k) }
    }
}

/// Smith normal form `U A V = D`; returns the diagonal (length `ncols`,
/// zero where the column is free) and `V`.
pub(crate) fn smith_normal_form(mut a: Vec<Vec<i64>>, ncols: usize) -> (Vec<i64>, Vec<Vec<i64>>) {
    let m = a.len();
    let mut v: Vec<Vec<i64>> = (0..ncols)
        .map(|i| {
            let mut r = vec![0i64; ncols];
            r[i] = 1;
            r
        })
        .collect();
    let swap_cols = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };
    // col_j -= k * col_i
    let col_sub = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, j: usize, i: usize, k: i64| {
        for row in a.iter_mut() {
            row[j] -= k * row[i];
        }
        for row in v.iter_mut() {
            row[j] -= k * row[i];
        }
    };
    let mut t = 0;
    while t < m.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..ncols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let k = a[i][t] / a[t][t];
                    for j in 0..ncols {
                        a[i][j] -= k * a[t][j];
                    }
                    if a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    let k = a[t][j] / a[t][t];
                    col_sub(&mut a, &mut v, j, t, k);
                    if a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder into the pivot
                let mut best = (t, t);
                for i in t..m {
                    if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..ncols {
                    if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut a, &mut v, t, best.1);
                }
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..m).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..ncols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let diag = (0..ncols).map(|k| if k < m.min(ncols) { a[k][k].abs() } else { 0 }).collect();
    (diag, v)
}
