//! Dense univariate polynomials in `T` over a [`Scalar`] ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `T`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(
            cs.iter()
                .map(|&c| T::from_i64(c).expect("integer fits in scalar"))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `T^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lead(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_usize(k).expect("degree fits"))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// `f(T^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut v = vec![T::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// `f(-T)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negate() } else { c.clone() })
                .collect(),
        )
    }

    /// `T^deg f(1/T)`.
    pub fn reciprocal(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Fails when a leading coefficient quotient leaves the ring.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(&lc).ok_or(Error::InexactDivision)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.exact_div(self).is_some()
    }

    /// Multiplicity of `a` as a root; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, a: &T) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Self::new(vec![a.negate(), T::one()]);
        let mut f = self.clone();
        let mut m = 0;
        while let Some(q) = f.exact_div(&lin) {
            f = q;
            m += 1;
        }
        Some(m)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

/// `T^{deg q} q(T + 1/T)`.
///
/// For a polynomial `q` of degree `d` this is a palindromic polynomial of degree `2d`.
pub fn represent_transform<T: Scalar>(q: &Poly<T>) -> Poly<T> {
    let Some(d) = q.degree() else {
        return Poly::zero();
    };
    // (T^2 + 1)^k * T^(d-k), built incrementally.
    let t2p1 = Poly::new(vec![T::one(), T::zero(), T::one()]);
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for (k, c) in q.coeffs().iter().enumerate() {
        acc = &acc + &power.shift(d - k).scale(c);
        if k < d {
            power = &power * &t2p1;
        }
    }
    acc
}

/// Inverse of [`represent_transform`] for a palindromic `f` of even degree `2k`:
/// the `h` of degree `k` with `T^k h(T + 1/T) = f`.
pub fn unrepresent<T: Scalar>(f: &Poly<T>) -> Option<Poly<T>> {
    let d = f.degree()?;
    if d % 2 == 1 {
        return None;
    }
    let k = d / 2;
    let t2p1 = Poly::new(vec![T::one(), T::zero(), T::one()]);
    let mut g = f.clone();
    let mut h = vec![T::zero(); k + 1];
    for j in (0..=k).rev() {
        let c = g.coeff(k + j);
        if !c.is_zero() {
            g = &g - &t2p1.pow(j as u32).shift(k - j).scale(&c);
        }
        h[j] = c;
    }
    g.is_zero().then(|| Poly::new(h))
}

impl Poly<BigInt> {
    /// Gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divide out the positive content, keeping signs.
    pub fn remove_content(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `lc(d)^(deg f - deg d + 1) f mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo remainder by zero");
        let lc = d.lead();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.pop().expect("nonempty");
            let k = r.len() - dd;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                    r[k + j] -= &top * dc;
                }
            }
        }
        Self::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Yun decomposition `f = c * prod a_i^i` into pairwise coprime squarefree
    /// primitive factors. Trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn to_rat(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Sign of `f(a/b)` computed without leaving the integers.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval_homogeneous(x.numer(), x.denom());
        sign_of(&v)
    }

    /// `b^deg f(a/b)`.
    pub fn eval_homogeneous(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }
}

impl Poly<BigRational> {
    /// A positive integer `m` and integer polynomial `p` with `self = p / m`.
    pub fn clear_denominators(&self) -> (Poly<BigInt>, BigInt) {
        let m = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = Poly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(m.clone())).to_integer())
                .collect(),
        );
        (p, m)
    }

    /// Exact integer coefficients, if all are integral.
    pub fn to_int(&self) -> Option<Poly<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(v)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(Scalar::negate).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> { (&self).$m(&rhs) }
        }
        impl<'a, T: Scalar> $tr<&'a Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

impl<T: Scalar> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

/// Ascending pretty form, e.g. `1 + T - 2T^3`.
impl<T: Scalar + fmt::Display + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match k {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "T")?,
                1 => write!(f, "{a}T")?,
                _ if unit => write!(f, "T^{k}")?,
                _ => write!(f, "{a}T^{k}")?,
            }
        }
        Ok(())
    }
}
