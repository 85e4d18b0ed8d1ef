//! Rational functions with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::IntPoly;

/// `num / den` in lowest terms, with `den` having a positive leading coefficient.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    fn reduced(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        } else {
            (num, den)
        };
        let mut c = num.content().gcd(&den.content());
        if den.lead().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0) && self.den.lead().is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Order of the pole at `a` (negative for a zero).
    pub fn pole_order_at(&self, a: i64) -> i64 {
        pole_order(&self.num, &self.den, a)
    }

    /// First `n` Taylor coefficients at `T = 0`.
    ///
    /// Fails when the constant term of the denominator does not divide the recursion.
    pub fn series(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Unsupported("pole at T = 0".into()));
        }
        let mut c: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                acc -= self.den.coeff(j) * &c[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            c.push(q);
        }
        Ok(c)
    }

    pub fn eval(&self, x: &BigInt) -> Option<crate::Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| crate::Rational::new(self.num.eval(x), d))
    }
}

/// `mult_a(den) - mult_a(num)` for a nonzero numerator, on unreduced data.
pub fn pole_order(num: &IntPoly, den: &IntPoly, a: i64) -> i64 {
    let a = BigInt::from(a);
    let m_den = den.root_multiplicity(&a).expect("nonzero denominator") as i64;
    let m_num = num.root_multiplicity(&a).map_or(0, |m| m as i64);
    m_den - m_num
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
