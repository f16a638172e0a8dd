//! q-integers, Gaussian binomials, and the coefficient function ν of the
//! generalized q-binomial expansion of `(x + b z + t)^n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};

/// Parameters `(b, λ, q)` of ν.
#[derive(Clone, Debug, PartialEq)]
pub struct NuParams {
    pub b: Cyclotomic,
    pub lambda: Cyclotomic,
    pub q: Cyclotomic,
}

/// `(n)_q = 1 + q + ... + q^{n-1}`; extended to negative `n` by
/// `(n)_q = -q^n (-n)_q`, which keeps `(n)_q = (q^n - 1)/(q - 1)`.
pub fn q_int(n: i64, q: &Cyclotomic) -> Cyclotomic {
    if n < 0 {
        let pos = q_int(-n, q);
        return -(&q.pow(n).expect("q is invertible when used with negative n") * &pos);
    }
    let mut acc = Cyclotomic::zero();
    let mut p = Cyclotomic::one();
    for _ in 0..n {
        acc = &acc + &p;
        p = &p * q;
    }
    acc
}

pub fn q_factorial(n: u64, q: &Cyclotomic) -> Cyclotomic {
    (1..=n as i64).fold(Cyclotomic::one(), |acc, k| &acc * &q_int(k, q))
}

/// Rows `0..=n` of the q-Pascal triangle at a fixed `q`.
///
/// Built by `C(m,k) = C(m-1,k-1) + q^k C(m-1,k)`, so it is valid at roots
/// of unity where factorial quotients are undefined.
#[derive(Clone, Debug)]
pub struct QBinomials {
    q: Cyclotomic,
    rows: Vec<Vec<Cyclotomic>>,
}

impl QBinomials {
    pub fn new(q: &Cyclotomic, n: usize) -> Self {
        let mut t = QBinomials { q: q.clone(), rows: vec![vec![Cyclotomic::one()]] };
        t.extend_to(n);
        t
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    pub fn extend_to(&mut self, n: usize) {
        let qpows: Vec<Cyclotomic> = (0..=n).map(|k| self.q.powu(k as u64)).collect();
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 present");
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(Cyclotomic::one());
            for k in 1..m {
                row.push(&prev[k - 1] + &(&qpows[k] * &prev[k]));
            }
            row.push(Cyclotomic::one());
            self.rows.push(row);
        }
    }

    /// Zero outside `0 ≤ i ≤ n`.
    pub fn get(&self, n: i64, i: i64) -> Cyclotomic {
        if n < 0 || i < 0 || i > n {
            return Cyclotomic::zero();
        }
        match self.rows.get(n as usize) {
            Some(row) => row[i as usize].clone(),
            None => {
                let mut t = self.clone();
                t.extend_to(n as usize);
                t.rows[n as usize][i as usize].clone()
            }
        }
    }
}

pub fn q_binomial(n: i64, i: i64, q: &Cyclotomic) -> Cyclotomic {
    if n < 0 || i < 0 || i > n {
        return Cyclotomic::zero();
    }
    QBinomials::new(q, n as usize).get(n, i)
}

/// `ν(0), …, ν(n)` by the defining recursion.
pub fn nu_sequence(n: usize, p: &NuParams) -> Vec<Cyclotomic> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Cyclotomic::one());
    if n >= 1 {
        out.push(p.b.clone());
    }
    for m in 2..=n {
        let next = &(&p.b * &out[m - 1]) + &(&(&p.lambda * &q_int(m as i64 - 1, &p.q)) * &out[m - 2]);
        out.push(next);
    }
    out
}

pub fn nu_recursive(n: usize, p: &NuParams) -> Cyclotomic {
    nu_sequence(n, p).pop().expect("nonempty")
}

/// `Σ_i C(n,i)_q β^i α^{n-i}`, the closed form when `b = α + β` and
/// `λ = (q-1)αβ`.
pub fn nu_closed_roots(n: usize, alpha: &Cyclotomic, beta: &Cyclotomic, q: &Cyclotomic) -> Result<Cyclotomic> {
    if q.is_one() {
        return Err(Error::QEqualsOne);
    }
    let table = QBinomials::new(q, n);
    let mut acc = Cyclotomic::zero();
    for i in 0..=n {
        let term = &(&table.get(n as i64, i as i64) * &beta.powu(i as u64)) * &alpha.powu((n - i) as u64);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// ν at `q = 1`: `Σ_i C(n,2i) (2i-1)!! b^{n-2i} λ^i`. For `b = 0` this is
/// routed to [`nu_b_zero`].
pub fn nu_q1(n: usize, b: &Cyclotomic, lambda: &Cyclotomic) -> Cyclotomic {
    if b.is_zero() {
        return nu_b_zero(n, lambda, &Cyclotomic::one());
    }
    let mut acc = Cyclotomic::zero();
    let mut binom = vec![Rational::ONE; n + 1];
    // ordinary binomials C(n, k)
    for k in 1..=n {
        binom[k] = &(&binom[k - 1] * &Rational::from_int((n - k + 1) as i64)) / &Rational::from_int(k as i64);
    }
    let mut double_fact = Rational::ONE;
    for i in 0..=n / 2 {
        if i > 0 {
            double_fact = &double_fact * &Rational::from_int(2 * i as i64 - 1);
        }
        let coef = &binom[2 * i] * &double_fact;
        let term = (&b.powu((n - 2 * i) as u64) * &lambda.powu(i as u64)).scale(&coef);
        acc = &acc + &term;
    }
    acc
}

/// ν for `b = 0`: zero at odd `n`, `λ^{n/2} (n-1)_q (n-3)_q ⋯ (1)_q` at even `n`.
pub fn nu_b_zero(n: usize, lambda: &Cyclotomic, q: &Cyclotomic) -> Cyclotomic {
    if n % 2 == 1 {
        return Cyclotomic::zero();
    }
    let mut acc = lambda.powu((n / 2) as u64);
    let mut k = n as i64 - 1;
    while k >= 1 {
        acc = &acc * &q_int(k, q);
        k -= 2;
    }
    acc
}

/// Coefficients of `t^j z^{i-j} x^{n-i}` in `(x + b z + t)^n`, for
/// `0 ≤ j ≤ i ≤ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GqbTable {
    n: usize,
    entries: Vec<Vec<Cyclotomic>>,
}

impl GqbTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Cyclotomic> {
        self.entries.get(i).and_then(|row| row.get(j))
    }

    /// `(i, j, coefficient)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Cyclotomic)> {
        self.entries.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Cyclotomic)> {
        self.iter().filter(|(_, _, c)| !c.is_zero())
    }
}

pub fn gqb_expand(n: usize, p: &NuParams) -> GqbTable {
    let table = QBinomials::new(&p.q, n);
    let nu = nu_sequence(n, p);
    let entries = (0..=n)
        .map(|i| {
            let outer = table.get(n as i64, i as i64);
            (0..=i).map(|j| &(&outer * &table.get(i as i64, j as i64)) * &nu[i - j]).collect()
        })
        .collect();
    GqbTable { n, entries }
}

/// Roots `(α, β)` of `Y² - bY + λ/(q-1)` chosen among `candidates` for the
/// square root of the discriminant. Never extends the field: if no
/// candidate squares to the discriminant the call fails.
pub fn nu_roots_among(
    b: &Cyclotomic,
    lambda: &Cyclotomic,
    q: &Cyclotomic,
    candidates: &[Cyclotomic],
) -> Result<(Cyclotomic, Cyclotomic)> {
    if q.is_one() {
        return Err(Error::QEqualsOne);
    }
    let c = lambda.checked_div(&(q - &Cyclotomic::one()))?;
    let disc = &(b * b) - &c.scale(&Rational::from_int(4));
    let half = Rational::new(1, 2).expect("nonzero");
    for s in candidates {
        if &(s * s) == &disc {
            let alpha = (b + s).scale(&half);
            let beta = (b - s).scale(&half);
            return Ok((alpha, beta));
        }
    }
    Err(Error::NoRoots(alloc::format!("no candidate square root of the discriminant {disc}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Cyclotomic {
        Cyclotomic::zeta(n).unwrap()
    }

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn q_integers() {
        let q = z(7);
        assert!(q_int(0, &q).is_zero());
        assert!(q_int(3, &z(3)).is_zero());
        for n in 0..10 {
            assert_eq!(q_int(n, &c(1)), c(n));
        }
        assert_eq!(q_factorial(0, &q), c(1));
        assert_eq!(q_factorial(4, &c(1)), c(24));
        // (n)_q (q - 1) = q^n - 1 also for negative n
        for n in -5..6 {
            assert_eq!(&q_int(n, &q) * &(&q - &c(1)), &q.pow(n).unwrap() - &c(1));
        }
    }

    #[test]
    fn binomial_examples() {
        let q = z(5);
        assert_eq!(q_binomial(3, 1, &q), &(&c(1) + &q) + &q.powu(2));
        assert!(q_binomial(3, 1, &z(3)).is_zero());
        assert!(q_binomial(2, -1, &q).is_zero());
        assert!(q_binomial(-1, 0, &q).is_zero());
        assert!(q_binomial(2, 3, &q).is_zero());
        assert_eq!(q_binomial(6, 3, &c(1)), c(20));
    }

    #[test]
    fn binomial_matches_factorial_quotient_off_roots_of_unity() {
        let q = c(2);
        for n in 0..10u64 {
            for i in 0..=n {
                let quo = q_factorial(n, &q)
                    .checked_div(&(&q_factorial(i, &q) * &q_factorial(n - i, &q)))
                    .unwrap();
                assert_eq!(q_binomial(n as i64, i as i64, &q), quo);
            }
        }
    }

    #[test]
    fn nu_examples() {
        let p = NuParams { b: c(3), lambda: c(5), q: z(5) };
        assert_eq!(nu_recursive(0, &p), c(1));
        assert_eq!(nu_recursive(1, &p), c(3));
        assert_eq!(nu_recursive(2, &p), c(14));
        let p0 = NuParams { b: c(0), lambda: c(2), q: z(9) };
        assert!(nu_recursive(3, &p0).is_zero());
        assert_eq!(nu_recursive(4, &p0), &c(4) * &q_int(3, &z(9)));
        assert_eq!(nu_q1(0, &c(3), &c(5)), c(1));
        assert_eq!(nu_q1(2, &c(3), &c(5)), c(14));
        assert_eq!(nu_closed_roots(3, &c(1), &c(2), &c(1)).unwrap_err(), Error::QEqualsOne);
    }

    #[test]
    fn gqb_small_tables() {
        let p = NuParams { b: c(3), lambda: c(5), q: z(4) };
        let t = gqb_expand(1, &p);
        let got: Vec<(usize, usize, Cyclotomic)> = t.iter().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(got, vec![(0, 0, c(1)), (1, 0, c(3)), (1, 1, c(1))]);
        let q5 = z(5);
        let p5 = NuParams { b: &c(2) - &q5, lambda: q5.powu(3), q: q5 };
        let t5 = gqb_expand(5, &p5);
        let nz: Vec<(usize, usize)> = t5.nonzero().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(nz, vec![(0, 0), (5, 0), (5, 5)]);
        assert_eq!(t5.get(5, 0).unwrap(), &nu_recursive(5, &p5));
    }

    #[test]
    fn roots_helper_stays_in_field() {
        let q = z(3);
        let (a, b) = (c(2), z(3));
        let lam = &(&q - &c(1)) * &(&a * &b);
        let s = &a - &b;
        let (x, y) = nu_roots_among(&(&a + &b), &lam, &q, &[c(1), s.clone()]).unwrap();
        assert_eq!((x, y), (a.clone(), b.clone()));
        assert!(nu_roots_among(&(&a + &b), &lam, &q, &[c(1)]).is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn scalar() -> impl Strategy<Value = Cyclotomic> {
        (proptest::sample::select(&[1u32, 3, 5, 8][..]), proptest::collection::vec(-3i64..=3, 1..4)).prop_map(|(n, cs)| {
            let v: Vec<Rational> = cs.into_iter().map(Rational::from_int).collect();
            Cyclotomic::new(n, &v).unwrap()
        })
    }

    fn nonzero_q() -> impl Strategy<Value = Cyclotomic> {
        prop_oneof![
            (1u32..=12, 0i64..12).prop_map(|(n, k)| Cyclotomic::zeta(n).unwrap().powu(k as u64)),
            (-4i64..=4).prop_filter("nonzero", |x| *x != 0).prop_map(Cyclotomic::from_int),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn q_pascal_both_forms(q in nonzero_q()) {
            let t = QBinomials::new(&q, 12);
            for n in 1..=12i64 {
                for k in 1..=n {
                    let lhs = t.get(n, k);
                    prop_assert_eq!(&lhs, &(&t.get(n - 1, k - 1) + &(&q.powu(k as u64) * &t.get(n - 1, k))));
                    prop_assert_eq!(&lhs, &(&t.get(n - 1, k) + &(&q.powu((n - k) as u64) * &t.get(n - 1, k - 1))));
                }
            }
        }

        #[test]
        fn three_term_pascal(q in nonzero_q()) {
            let t = QBinomials::new(&q, 11);
            for n in 0..=10i64 {
                for i in 0..=n {
                    for j in 0..=i {
                        let lhs = &t.get(n + 1, i) * &t.get(i, j);
                        let rhs = &(&(&t.get(n, i - 1) * &t.get(i - 1, j - 1))
                            + &(&q.powu(i as u64) * &(&t.get(n, i) * &t.get(i, j))))
                            + &(&q.powu(j as u64) * &(&t.get(n, i - 1) * &t.get(i - 1, j)));
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }

        #[test]
        fn closed_roots_match_recursion(alpha in scalar(), beta in scalar(), q in nonzero_q()) {
            prop_assume!(!q.is_one());
            let p = NuParams { b: &alpha + &beta, lambda: &(&q - &Cyclotomic::one()) * &(&alpha * &beta), q: q.clone() };
            let seq = nu_sequence(20, &p);
            for n in 0..=20 {
                prop_assert_eq!(&nu_closed_roots(n, &alpha, &beta, &q).unwrap(), &seq[n]);
            }
        }

        #[test]
        fn q1_form_matches_recursion(b in scalar(), lambda in scalar()) {
            let p = NuParams { b: b.clone(), lambda: lambda.clone(), q: Cyclotomic::one() };
            let seq = nu_sequence(20, &p);
            for n in 0..=20 {
                prop_assert_eq!(&nu_q1(n, &b, &lambda), &seq[n]);
            }
        }

        #[test]
        fn b_zero_forms(lambda in scalar(), q in nonzero_q()) {
            let p = NuParams { b: Cyclotomic::zero(), lambda: lambda.clone(), q: q.clone() };
            let seq = nu_sequence(21, &p);
            for n in 0..=10 {
                prop_assert!(seq[2 * n + 1].is_zero());
            }
            for n in 0..=8 {
                prop_assert_eq!(&nu_b_zero(2 * n, &lambda, &q), &seq[2 * n]);
            }
        }
    }
}
