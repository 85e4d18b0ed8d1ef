//! Cyclotomic polynomials, the polynomials `v_n`, and extraction of cyclotomic factors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::IntPoly;

/// `v_n = 1 + T + ... + T^(n-1)`, with `v_0 = 0`.
pub fn v_poly(n: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n])
}

/// `T^n - 1`.
fn t_pow_minus_one(n: usize) -> IntPoly {
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = BigInt::from(-1);
    v[n] = BigInt::one();
    IntPoly::new(v)
}

pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(p, e)` pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: usize) -> i32 {
    assert!(n >= 1);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn totient(n: usize) -> usize {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// The `n`-th cyclotomic polynomial, `n >= 1`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic index starts at 1");
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    let p = num.exact_div(&den).expect("cyclotomic quotient is exact");
    cache.lock().expect("cache lock").insert(n, p.clone());
    p
}

/// `phi_n(2)`, used as a cheap divisibility filter.
fn cyclotomic_at_two(n: usize) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<usize, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&n) {
        return v.clone();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in divisors(n) {
        let v = (BigInt::one() << d) - 1;
        match mobius(n / d) {
            1 => num *= v,
            -1 => den *= v,
            _ => {}
        }
    }
    let v = num / den;
    cache.lock().expect("cache lock").insert(n, v.clone());
    v
}

/// All `n` with `totient(n) <= m`, increasing.
fn indices_with_totient_at_most(m: usize) -> Vec<usize> {
    static CACHE: OnceLock<Mutex<(usize, Vec<(usize, usize)>)>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new((0, Vec::new())));
    let mut guard = cache.lock().expect("cache lock");
    if guard.0 < m {
        // totient(n) >= sqrt(n / 2), so n <= 2 m^2 covers everything.
        let bound = 2 * m.max(1) * m.max(1);
        let mut phi: Vec<usize> = (0..=bound).collect();
        for p in 2..=bound {
            if phi[p] == p {
                for k in (p..=bound).step_by(p) {
                    phi[k] -= phi[k] / p;
                }
            }
        }
        guard.1 = (1..=bound)
            .map(|n| (n, phi[n]))
            .filter(|&(_, t)| t <= m)
            .collect();
        guard.0 = m;
    }
    guard
        .1
        .iter()
        .filter(|&&(_, t)| t <= m)
        .map(|&(n, _)| n)
        .collect()
}

/// `f = remainder * prod phi_n^e`, where the remainder has no cyclotomic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub factors: BTreeMap<usize, u32>,
    pub remainder: IntPoly,
}

impl CycloFactorization {
    pub fn is_fully_cyclotomic(&self) -> bool {
        self.remainder.is_one()
    }

    pub fn exponent(&self, n: usize) -> u32 {
        self.factors.get(&n).copied().unwrap_or(0)
    }

    pub fn product(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(self.remainder.clone(), |acc, (&n, &e)| {
                &acc * &cyclotomic(n).pow(e)
            })
    }

    pub fn max_index(&self) -> Option<usize> {
        self.factors.keys().next_back().copied()
    }

    /// Least common multiple of the indices present.
    pub fn lcm_of_indices(&self) -> usize {
        self.factors.keys().fold(1, |acc, &n| acc.lcm(&n))
    }

    /// Degree of the cyclotomic part.
    pub fn cyclotomic_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(&n, &e)| totient(n) * e as usize)
            .sum()
    }
}

/// Compact notation such as `phi2^2 phi22`, with a non-trivial remainder in parentheses.
impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    format!("phi{n}")
                } else {
                    format!("phi{n}^{e}")
                }
            })
            .collect();
        if !self.remainder.is_one() {
            parts.push(format!("({})", self.remainder));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Strip every cyclotomic factor from a nonzero `f` by trial division.
pub fn factor_cyclotomic(f: &IntPoly) -> CycloFactorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rem = f.clone();
    let mut factors = BTreeMap::new();
    let mut deg = rem.degree().unwrap_or(0);
    if deg == 0 {
        return CycloFactorization {
            factors,
            remainder: rem,
        };
    }
    let mut at_two = rem.eval_i64(2);
    for n in indices_with_totient_at_most(deg) {
        if totient(n) > deg {
            continue;
        }
        loop {
            let c2 = cyclotomic_at_two(n);
            if !at_two.is_zero() && !(&at_two % &c2).is_zero() {
                break;
            }
            match rem.exact_div(&cyclotomic(n)) {
                Some(q) => {
                    *factors.entry(n).or_insert(0) += 1;
                    rem = q;
                    at_two = rem.eval_i64(2);
                    deg = rem.degree().unwrap_or(0);
                }
                None => break,
            }
            if totient(n) > deg {
                break;
            }
        }
        if deg == 0 {
            break;
        }
    }
    CycloFactorization {
        factors,
        remainder: rem,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_by_iterated_division() {
        // phi_n = (T^n - 1) / prod_{d | n, d < n} phi_d, built from scratch.
        let mut table: Vec<IntPoly> = vec![IntPoly::zero()];
        for n in 1..=60 {
            let mut q = t_pow_minus_one(n);
            for d in divisors(n).into_iter().filter(|&d| d < n) {
                q = q.exact_div(&table[d]).unwrap();
            }
            assert_eq!(q, cyclotomic(n), "n = {n}");
            assert_eq!(q.degree(), Some(totient(n)));
            table.push(q);
        }
    }

    #[test]
    fn v_is_product_of_cyclotomics() {
        for n in 1..30 {
            let prod: IntPoly = divisors(n)
                .into_iter()
                .filter(|&d| d > 1)
                .map(cyclotomic)
                .product();
            assert_eq!(prod, v_poly(n));
        }
        assert!(v_poly(0).is_zero());
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(totient(36), 12);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn factor_mixed_polynomial() {
        let extra = p(&[1, 1, 0, 1]);
        let f = &(&cyclotomic(2).pow(2) * &cyclotomic(22)) * &extra;
        let fac = factor_cyclotomic(&f);
        assert_eq!(fac.exponent(2), 2);
        assert_eq!(fac.exponent(22), 1);
        assert_eq!(fac.remainder, extra);
        assert_eq!(fac.product(), f);
        assert_eq!(fac.to_string(), "phi2^2 phi22 (1 + T + T^3)");
    }

    #[test]
    fn remainder_keeps_sign() {
        let f = -(&cyclotomic(3) * &cyclotomic(1));
        let fac = factor_cyclotomic(&f);
        assert_eq!(fac.remainder, p(&[-1]));
        assert_eq!(fac.lcm_of_indices(), 3);
    }
}
