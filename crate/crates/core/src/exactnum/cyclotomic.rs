use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::field::{lcm, CycloField};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Exact element of ℚ(ζ_N), stored as coefficients of `1, ζ, …, ζ^{φ(N)-1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

fn rational_field() -> Arc<CycloField> {
    Arc::new(CycloField::new(1).expect("conductor 1"))
}

impl Cyclotomic {
    /// Reduces `Σ coeffs[k] ζ_N^k` to canonical form.
    pub fn new(n: u32, coeffs: &[Rational]) -> Result<Self> {
        let field = Arc::new(CycloField::new(n)?);
        Ok(Self::from_powers(&field, coeffs.iter().enumerate().map(|(k, c)| (k as u64, c))))
    }

    pub fn new_in(field: &Arc<CycloField>, coeffs: &[Rational]) -> Self {
        Self::from_powers(field, coeffs.iter().enumerate().map(|(k, c)| (k as u64, c)))
    }

    fn from_powers<'a>(field: &Arc<CycloField>, terms: impl Iterator<Item = (u64, &'a Rational)>) -> Self {
        let n = field.conductor() as u64;
        let mut acc = vec![Rational::ZERO; n as usize];
        for (k, c) in terms {
            if !c.is_zero() {
                let slot = &mut acc[(k % n) as usize];
                *slot = &*slot + c;
            }
        }
        Self::fold(field, acc)
    }

    /// Folds a length-N accumulator (exponents already reduced mod N).
    fn fold(field: &Arc<CycloField>, mut acc: Vec<Rational>) -> Self {
        let phi = field.degree();
        for k in phi..acc.len() {
            if acc[k].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut acc[k]);
            for (j, &t) in field.high_power(k).iter().enumerate() {
                if t != 0 {
                    acc[j] = &acc[j] + &(&c * &Rational::from_int(t));
                }
            }
        }
        acc.truncate(phi);
        Cyclotomic { field: field.clone(), coeffs: acc }
    }

    pub fn zeta(n: u32) -> Result<Self> {
        let field = Arc::new(CycloField::new(n)?);
        Ok(Self::zeta_pow_in(&field, 1))
    }

    /// ζ_N^k in the given field.
    pub fn zeta_pow_in(field: &Arc<CycloField>, k: i64) -> Self {
        let n = field.conductor() as i64;
        let e = k.rem_euclid(n) as u64;
        Self::from_powers(field, core::iter::once((e, &Rational::ONE)))
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic { field: rational_field(), coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into ℚ(ζ_M) for a multiple `M` of the conductor.
    pub fn lift_to(&self, field: &Arc<CycloField>) -> Result<Self> {
        let n = self.conductor();
        let m = field.conductor();
        if m % n != 0 {
            return Err(Error::Invalid(alloc::format!("cannot embed conductor {n} into {m}")));
        }
        if n == m {
            return Ok(Cyclotomic { field: field.clone(), coeffs: self.coeffs.clone() });
        }
        let step = (m / n) as u64;
        Ok(Self::from_powers(field, self.coeffs.iter().enumerate().map(|(k, c)| (k as u64 * step, c))))
    }

    pub fn lift_to_conductor(&self, m: u32) -> Result<Self> {
        let field = Arc::new(CycloField::new(m)?);
        self.lift_to(&field)
    }

    fn common_field(a: &Self, b: &Self) -> Arc<CycloField> {
        let (n, m) = (a.conductor(), b.conductor());
        if n == m || m % n == 0 {
            b.field.clone()
        } else if n % m == 0 {
            a.field.clone()
        } else {
            Arc::new(CycloField::new(lcm(n as u64, m as u64) as u32).expect("positive conductor"))
        }
    }

    fn lifted(&self, field: &Arc<CycloField>) -> Self {
        if Arc::ptr_eq(&self.field, field) || self.conductor() == field.conductor() {
            Cyclotomic { field: field.clone(), coeffs: self.coeffs.clone() }
        } else {
            self.lift_to(field).expect("conductor divides")
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nz: Vec<usize> = (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect();
        if nz.len() == 1 {
            let k = nz[0];
            let c = self.coeffs[k].recip()?;
            return Ok(Self::zeta_pow_in(&self.field, -(k as i64)).scale(&c));
        }
        self.inv_linear()
    }

    /// Inverse by solving `self * y = 1` in the power basis.
    fn inv_linear(&self) -> Result<Self> {
        let phi = self.field.degree();
        // column j: coefficients of self * ζ^j
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi);
        let mut cur = self.clone();
        let z = Self::zeta_pow_in(&self.field, 1);
        for _ in 0..phi {
            cols.push(cur.coeffs.clone());
            cur = &cur * &z;
        }
        // augmented row-major matrix [M | e0]
        let mut m: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let inv = m[col][col].recip()?;
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let sub = &f * &m[col][c];
                        m[r][c] = &m[r][c] - &sub;
                    }
                }
            }
        }
        let coeffs = m.into_iter().map(|row| row[phi].clone()).collect();
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic { field: self.field.clone(), coeffs: Self::one().lifted(&self.field).coeffs };
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `pow` for non-negative exponents, which cannot fail.
    pub fn powu(&self, e: u64) -> Self {
        self.pow(e as i64).expect("non-negative exponent")
    }

    /// Multiplicative order when the element is a root of unity.
    ///
    /// Every root of unity in ℚ(ζ_N) has order dividing lcm(2, N), so one
    /// power test decides membership.
    pub fn root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm(2, self.conductor() as u64);
        if !self.powu(bound).is_one() {
            return None;
        }
        (1..=bound).filter(|d| bound % d == 0).find(|&d| self.powu(d).is_one())
    }

    fn write_terms(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    f.write_str(var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }

    /// Self-contained expression using `zeta(N)` atoms, suitable for
    /// embedding in larger expressions.
    pub fn to_expr_string(&self) -> String {
        let mut s = String::new();
        let var = alloc::format!("zeta({})", self.conductor());
        self.write_terms(&mut s, &var).expect("string write");
        s
    }

    /// Like [`Self::to_expr_string`] but wrapped in parentheses unless it is a
    /// single non-negative rational.
    pub fn to_factor_string(&self) -> String {
        match self.as_rational() {
            Some(r) if !r.is_negative() => alloc::format!("{r}"),
            _ => alloc::format!("({})", self.to_expr_string()),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.coeffs == other.coeffs;
        }
        let f = Self::common_field(self, other);
        self.lifted(&f).coeffs == other.lifted(&f).coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor() == 1 {
            let mut out = self.clone();
            out.coeffs[0] = &out.coeffs[0] + &rhs.coeffs[0];
            return out;
        }
        if self.conductor() == 1 {
            return rhs + self;
        }
        let f = Cyclotomic::common_field(self, rhs);
        let (a, b) = (self.lifted(&f), rhs.lifted(&f));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { field: f, coeffs }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let f = Cyclotomic::common_field(self, rhs);
        let (a, b) = (self.lifted(&f), rhs.lifted(&f));
        let n = f.conductor() as usize;
        let mut acc = vec![Rational::ZERO; n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                acc[k] = &acc[k] + &(x * y);
            }
        }
        Cyclotomic::fold(&f, acc)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// `a0 + a1*z + a2*z^2 @ zeta(N)`; rationals print without annotation.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, "z")?;
        if self.conductor() > 1 {
            write!(f, " @ zeta({})", self.conductor())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn cy(n: u32, c: &[i64]) -> Cyclotomic {
        let v: Vec<Rational> = c.iter().map(|&x| q(x)).collect();
        Cyclotomic::new(n, &v).unwrap()
    }

    #[test]
    fn construction_examples() {
        assert!(cy(3, &[1, 1, 1]).is_zero());
        assert_eq!(cy(4, &[0, 0, 1]), Cyclotomic::from_int(-1));
        assert_eq!(cy(1, &[5]), Cyclotomic::from_int(5));
        assert_eq!(Cyclotomic::new(0, &[]).unwrap_err(), Error::ZeroConductor);
    }

    #[test]
    fn arithmetic_examples() {
        let i = Cyclotomic::zeta(4).unwrap();
        let one = Cyclotomic::one();
        assert_eq!(&(&one + &i) * &(&one - &i), Cyclotomic::from_int(2));
        for n in 1..=30 {
            let z = Cyclotomic::zeta(n).unwrap();
            assert!(z.powu(n as u64).is_one());
        }
        let z7 = Cyclotomic::zeta(7).unwrap();
        assert_eq!(z7.pow(-1).unwrap(), z7.powu(6));
        assert_eq!(Cyclotomic::zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn root_order_examples() {
        assert_eq!(Cyclotomic::one().root_order(), Some(1));
        assert_eq!(Cyclotomic::from_int(-1).root_order(), Some(2));
        let z6 = Cyclotomic::zeta(6).unwrap();
        assert_eq!(z6.powu(2).root_order(), Some(3));
        let z3 = Cyclotomic::zeta(3).unwrap();
        let w = &Cyclotomic::one() + &z3;
        assert_eq!(w, -z3.powu(2));
        assert_eq!(w.root_order(), Some(6));
        assert_eq!(Cyclotomic::from_int(2).root_order(), None);
        assert_eq!((&z3 + &z3).root_order(), None);
        assert_eq!(Cyclotomic::zero().root_order(), None);
        // odd conductor still sees the sign: -ζ_7 has order 14
        assert_eq!((-Cyclotomic::zeta(7).unwrap()).root_order(), Some(14));
    }

    #[test]
    fn conductor_merge() {
        let z3 = Cyclotomic::zeta(3).unwrap();
        let z4 = Cyclotomic::zeta(4).unwrap();
        let p = &z3 * &z4;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta(12).unwrap().powu(7));
        let z9 = Cyclotomic::zeta(9).unwrap();
        assert_eq!(z9.powu(3), z3);
        assert_eq!(z3.lift_to_conductor(9).unwrap(), z9.powu(3));
        assert!(z9.lift_to_conductor(12).is_err());
    }

    #[test]
    fn general_inverse() {
        let z7 = Cyclotomic::zeta(7).unwrap();
        let a = &(&z7 + &Cyclotomic::from_int(3)) - &z7.powu(5);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        let z49 = Cyclotomic::zeta(49).unwrap();
        let b = &(&z49.powu(45) + &Cyclotomic::from_int(2)) + &z49.powu(7);
        assert!((&b * &b.inv().unwrap()).is_one());
    }

    #[test]
    fn rendering() {
        let z5 = Cyclotomic::zeta(5).unwrap();
        let a = &(&z5.powu(2).scale(&q(3)) - &z5) + &Cyclotomic::from_int(1);
        assert_eq!(a.to_string(), "1 - z + 3*z^2 @ zeta(5)");
        assert_eq!(a.to_expr_string(), "1 - zeta(5) + 3*zeta(5)^2");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::rational(Rational::new(-3, 4).unwrap()).to_string(), "-3/4");
    }
}
