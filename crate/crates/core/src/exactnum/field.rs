use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first. Computed by exact division of `x^n - 1` by every `Φ_d`, `d | n`,
/// `d < n`.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    let mut memo: Vec<Option<Vec<i64>>> = vec![None; n as usize + 1];
    Ok(phi_poly(n, &mut memo))
}

fn phi_poly(n: u32, memo: &mut Vec<Option<Vec<i64>>>) -> Vec<i64> {
    if let Some(p) = &memo[n as usize] {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = phi_poly(d, memo);
            num = div_exact_monic(&num, &den);
        }
    }
    memo[n as usize] = Some(num.clone());
    num
}

/// Quotient of `num` by the monic `den`; the remainder must vanish.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

#[cfg(test)]
fn polymul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The field ℚ(ζ_N) as ℚ[x]/Φ_N with a reduction table for `x^k`,
/// `φ(N) ≤ k < N`.
#[derive(Debug)]
pub struct CycloField {
    n: u32,
    phi: usize,
    poly: Vec<i64>,
    high: Vec<Vec<i64>>,
}

impl CycloField {
    pub fn new(n: u32) -> Result<Self> {
        let poly = cyclotomic_polynomial(n)?;
        let phi = poly.len() - 1;
        let mut high = Vec::with_capacity(n as usize - phi);
        if (n as usize) > phi {
            // x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1})
            let mut cur: Vec<i64> = poly[..phi].iter().map(|c| -c).collect();
            high.push(cur.clone());
            for _ in phi + 1..n as usize {
                let top = cur[phi - 1];
                let mut next = vec![0i64; phi];
                next[1..phi].copy_from_slice(&cur[..phi - 1]);
                if top != 0 {
                    for (k, slot) in next.iter_mut().enumerate() {
                        *slot = slot
                            .checked_sub(top.checked_mul(poly[k]).expect("cyclotomic table overflow"))
                            .expect("cyclotomic table overflow");
                    }
                }
                cur = next;
                high.push(cur.clone());
            }
        }
        Ok(CycloField { n, phi, poly, high })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// Dense coefficients of `x^k mod Φ_N` for `phi ≤ k < N`.
    pub(crate) fn high_power(&self, k: usize) -> &[i64] {
        &self.high[k - self.phi]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3).unwrap(), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=60u32 {
            let mut prod = vec![1i64];
            for d in 1..=n {
                if n % d == 0 {
                    prod = polymul(&prod, &cyclotomic_polynomial(d).unwrap());
                }
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).unwrap().len() - 1, totient(n) as usize);
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let p = cyclotomic_polynomial(105).unwrap();
        assert!(p.iter().any(|&c| c == -2));
    }
}
