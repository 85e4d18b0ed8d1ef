//! Coxeter polynomials of star, canonical and extended canonical algebras, by
//! closed formula and by Coxeter matrices, together with root location,
//! spectral radius and period of the Coxeter transformation.

pub mod cartan;
pub mod tree;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{cyclotomic, divisors, factor_cyclotomic, CycloFactorization};
use crate::poly::unrepresent;
use crate::roots::{
    all_roots_in_disk, cauchy_bound, count_in_closed_interval, isolate_roots, root_modulus_bracket,
};
use crate::{IntPoly, Rational, WeightSequence};

pub use cartan::{
    canonical_vertices, cartan_canonical, cartan_extended, cartan_extended_default, coxeter_matrix,
    euler_form, tits_form, wildness_witness, CartanData, Vertex,
};
pub use tree::{tree_coxeter_poly, Tree};

/// `f * v_n`, a sliding window sum over the coefficients of `f`.
fn mul_v(f: &IntPoly, n: u32) -> IntPoly {
    let n = n as usize;
    if n == 0 || f.is_zero() {
        return IntPoly::zero();
    }
    let c = f.coeffs();
    let len = c.len() + n - 1;
    let mut out = Vec::with_capacity(len);
    let mut acc = BigInt::zero();
    for k in 0..len {
        if let Some(x) = c.get(k) {
            acc += x;
        }
        if k >= n {
            acc -= &c[k - n];
        }
        out.push(acc.clone());
    }
    IntPoly::new(out)
}

/// `(prod v_{a_i}, sum_i v_{a_i - 1} prod_{j != i} v_{a_j})`.
fn star_parts(arms: &[u32]) -> (IntPoly, IntPoly) {
    let mut prod = IntPoly::one();
    let mut sum = IntPoly::zero();
    for &a in arms {
        sum = &mul_v(&sum, a) + &mul_v(&prod, a - 1);
        prod = mul_v(&prod, a);
    }
    (prod, sum)
}

/// Coxeter polynomial of the star with arms of `a_i - 1` vertices around one center.
///
/// `(T+1) prod v_{a_i} - T sum_i v_{a_i - 1} prod_{j != i} v_{a_j}`; arms with `a_i = 1` are empty.
pub fn star_coxeter_poly_arms(arms: &[u32]) -> IntPoly {
    let (prod, sum) = star_parts(arms);
    &(&prod + &prod.shift(1)) - &sum.shift(1)
}

pub fn star_coxeter_poly(p: &WeightSequence) -> IntPoly {
    star_coxeter_poly_arms(p.parts())
}

/// `f_C = (T-1)^2 prod v_{p_i}`.
pub fn canonical_coxeter_poly(p: &WeightSequence) -> IntPoly {
    let (prod, _) = star_parts(p.parts());
    &IntPoly::from_i64s(&[1, -2, 1]) * &prod
}

/// `f_hat = (T+1) f_C - T f_star`.
pub fn extended_coxeter_poly(p: &WeightSequence) -> IntPoly {
    let (prod, sum) = star_parts(p.parts());
    let fc = &IntPoly::from_i64s(&[1, -2, 1]) * &prod;
    let star = &(&prod + &prod.shift(1)) - &sum.shift(1);
    &(&fc + &fc.shift(1)) - &star.shift(1)
}

/// Arms of the double-extended star for the domestic triples of exceptional type:
/// the affine star is the tubular type above `p`, then its longest arm grows by one.
/// `None` for every other weight.
pub fn double_extended_star(p: &WeightSequence) -> Option<Vec<u32>> {
    let affine: &[u32] = match p.parts() {
        [2, 3, 3] => &[3, 3, 3],
        [2, 3, 4] => &[2, 4, 4],
        [2, 3, 5] => &[2, 3, 6],
        _ => return None,
    };
    let mut arms = affine.to_vec();
    *arms.last_mut().expect("three arms") += 1;
    Some(arms)
}

/// `p` with its largest weight increased by one.
pub fn incremented(p: &WeightSequence) -> WeightSequence {
    let mut parts = p.parts().to_vec();
    *parts.last_mut().expect("at least two weights") += 1;
    WeightSequence::of(&parts)
}

/// Characteristic polynomial of the path on `n` vertices' adjacency matrix.
fn path_adjacency_poly(n: usize) -> IntPoly {
    let x = IntPoly::x();
    let mut a = IntPoly::one();
    let mut b = x.clone();
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = &(&x * &b) - &a;
        a = b;
        b = c;
    }
    b
}

/// `(prod P_{m_i}, sum_i P_{m_i - 1} prod_{j != i} P_{m_j})` with `m_i = p_i - 1`.
fn path_parts(p: &WeightSequence) -> (IntPoly, IntPoly) {
    let mut prod = IntPoly::one();
    let mut sum = IntPoly::zero();
    for &x in p.parts() {
        let m = x as usize - 1;
        let pm = path_adjacency_poly(m);
        sum = &(&sum * &pm) + &(&prod * &path_adjacency_poly(m - 1));
        prod = &prod * &pm;
    }
    (prod, sum)
}

/// Characteristic polynomial of the star's 0/1 adjacency matrix, via deletion of the center.
pub fn star_adjacency_poly(p: &WeightSequence) -> IntPoly {
    let (prod, sum) = path_parts(p);
    &prod.shift(1) - &sum
}

/// The 0/1 adjacency matrix of the star, center first.
pub fn star_adjacency_matrix(p: &WeightSequence) -> crate::IntMatrix {
    let t = Tree::star(p.parts());
    let n = t.vertex_count();
    let mut m = crate::IntMatrix::zeros(n, n);
    for &(a, b) in t.edges() {
        m[(a, b)] = BigInt::one();
        m[(b, a)] = BigInt::one();
    }
    m
}

/// `q = T (T^2 - 4) prod P_{p_i - 1} - chi_star`, with `T^{deg q} q(T + 1/T) = f_hat(T^2)`.
///
/// `P_n` is the adjacency characteristic polynomial of the path on `n` vertices, which
/// represents `v_{n+1}`; `T (T^2 - 4)` represents `(T + 1)(T - 1)^2` up to the factor `T`.
pub fn q_poly(p: &WeightSequence) -> IntPoly {
    let (prod, sum) = path_parts(p);
    &(&IntPoly::from_i64s(&[0, -5, 0, 1]) * &prod) + &sum
}

/// Number of real roots of `q` in `[-2, 2]` with multiplicity.
///
/// `q` has the parity of its degree, so `q = x^e r(x^2)` and the count is
/// `e + 2 * #roots of r in (0, 4]`.
pub fn q_roots_in_interval(q: &IntPoly) -> usize {
    let d = q.degree().expect("q is nonzero");
    let parity_ok = q
        .coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| (k % 2 == d % 2) || c.is_zero());
    let two = Rational::from_integer(BigInt::from(2));
    if !parity_ok {
        return count_in_closed_interval(q, &-two.clone(), &two);
    }
    let e = q
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero");
    let r = IntPoly::new(q.coeffs()[e..].iter().step_by(2).cloned().collect());
    if r.degree() == Some(0) {
        return e;
    }
    let four = Rational::from_integer(BigInt::from(4));
    e + 2 * count_in_closed_interval(&r, &Rational::zero(), &four)
}

/// Cyclotomic factor of `f_hat` forced by repeated divisors: `phi_d^(k-1)` when `d`
/// divides `k >= 2` of the weights, since then `phi_d^k | f_C` and `phi_d^(k-1) | f_star`.
pub fn forced_cyclotomic_factor(p: &WeightSequence) -> Vec<(usize, u32)> {
    let max = p.max_weight() as usize;
    (2..=max)
        .filter_map(|d| {
            let k = p
                .parts()
                .iter()
                .filter(|&&x| (x as usize).is_multiple_of(d))
                .count() as u32;
            (k >= 2).then(|| (d, k - 1))
        })
        .collect()
}

/// Polynomial representing `phi_d`, i.e. `h` with `T^{deg h} h(T + 1/T) = phi_d(T^2)`.
pub fn cyclotomic_representative(d: usize) -> IntPoly {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().expect("cache lock").get(&d) {
        return h.clone();
    }
    let h = unrepresent(&cyclotomic(d).compose_power(2)).expect("phi_d(T^2) is palindromic");
    cache.lock().expect("cache lock").insert(d, h.clone());
    h
}

/// `q` with the representative of the forced cyclotomic factor divided out.
///
/// All roots of the removed factor lie in `(-2, 2)`.
pub fn q_poly_reduced(p: &WeightSequence) -> (IntPoly, usize) {
    let mut q = q_poly(p);
    let mut removed = 0;
    for (d, e) in forced_cyclotomic_factor(p) {
        let h = cyclotomic_representative(d);
        for _ in 0..e {
            q = q.exact_div(&h).expect("forced factor divides q");
            removed += h.degree().unwrap_or(0);
        }
    }
    (q, removed)
}

/// Whether every root of `f_hat` lies on the unit circle, decided by Sturm counting on `q`.
pub fn roots_on_circle(p: &WeightSequence) -> bool {
    off_circle_count(p) == 0
}

/// Roots of `f_hat` off the unit circle, with multiplicity.
///
/// Roots of `f_hat` correspond one to one with roots of `q` via `lambda = T^2`,
/// `x = T + 1/T`, and those on the circle are exactly those with `x` in `[-2, 2]`.
pub fn off_circle_count(p: &WeightSequence) -> usize {
    let (q, _) = q_poly_reduced(p);
    q.degree().expect("nonzero") - q_roots_in_interval(&q)
}

/// How the spectral radius was certified.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusMode {
    /// All roots on the unit circle; the radius is exactly 1.
    OnCircle,
    /// Off-circle roots are real; the radius is the largest real root of `f_hat`.
    RealPair,
    /// Some off-circle roots are non-real; the radius is bracketed by disk tests.
    ComplexQuadruple,
}

/// `lo <= rho <= hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralRadius {
    pub lo: Rational,
    pub hi: Rational,
    pub mode: RadiusMode,
}

impl SpectralRadius {
    pub fn midpoint_f64(&self) -> f64 {
        let m = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        rational_to_f64(&m)
    }

    /// Whether the exact value is certified within `eps` of `x`.
    pub fn within(&self, x: &Rational, eps: &Rational) -> bool {
        (x - eps) <= self.lo && self.hi <= (x + eps)
    }
}

pub(crate) fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Spectral radius of the Coxeter transformation of the extended canonical algebra.
pub fn spectral_radius(p: &WeightSequence, tol: &Rational) -> SpectralRadius {
    let (q, _) = q_poly_reduced(p);
    let deg = q.degree().expect("nonzero");
    let inside = q_roots_in_interval(&q);
    if inside == deg {
        return SpectralRadius {
            lo: Rational::one(),
            hi: Rational::one(),
            mode: RadiusMode::OnCircle,
        };
    }
    let f = extended_coxeter_poly(p);
    let bound = cauchy_bound(&q);
    let real_total = count_in_closed_interval(&q, &-bound.clone(), &bound);
    if real_total == deg {
        let fb = cauchy_bound(&f);
        let roots = isolate_roots(&f, &Rational::one(), &fb, tol);
        let (lo, hi) = roots.last().cloned().expect("a real root above 1 exists");
        return SpectralRadius {
            lo,
            hi,
            mode: RadiusMode::RealPair,
        };
    }
    let (lo, hi) = root_modulus_bracket(&f, Rational::one(), tol);
    SpectralRadius {
        lo,
        hi,
        mode: RadiusMode::ComplexQuadruple,
    }
}

/// Certified radius by disk tests alone, regardless of root reality.
pub fn spectral_radius_by_disks(p: &WeightSequence, tol: &Rational) -> (Rational, Rational) {
    let f = extended_coxeter_poly(p);
    if all_roots_in_disk(&f, &(Rational::one() + tol)) {
        return (Rational::one(), Rational::one());
    }
    root_modulus_bracket(&f, Rational::one(), tol)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Period {
    Finite(u64),
    Infinite,
}

impl Period {
    pub fn is_finite(self) -> bool {
        matches!(self, Period::Finite(_))
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(n) => write!(f, "{n}"),
            Period::Infinite => write!(f, "inf"),
        }
    }
}

/// Least `d >= 1` with `Phi^d = 1` for the extended algebra's Coxeter matrix.
pub fn period(p: &WeightSequence) -> Period {
    period_from(p, &factor_cyclotomic(&extended_coxeter_poly(p)))
}

pub fn period_from(p: &WeightSequence, fac: &CycloFactorization) -> Period {
    if !fac.is_fully_cyclotomic() {
        return Period::Infinite;
    }
    let phi = coxeter_matrix(&cartan_extended_default(p));
    let l = fac.lcm_of_indices();
    if !phi.pow(l as u64).is_identity() {
        return Period::Infinite;
    }
    divisors(l)
        .into_iter()
        .find(|&d| phi.pow(d as u64).is_identity())
        .map(|d| Period::Finite(d as u64))
        .expect("L itself works")
}

/// Aggregate Coxeter data for one weight sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterReport {
    pub weight: WeightSequence,
    pub f_c: IntPoly,
    pub f_hat: IntPoly,
    pub factorization: CycloFactorization,
    pub roots_on_circle: bool,
    pub off_circle_count: usize,
    pub spectral_radius: SpectralRadius,
    pub period: Period,
}

pub fn coxeter_report(p: &WeightSequence, tol: &Rational) -> CoxeterReport {
    let f_hat = extended_coxeter_poly(p);
    let factorization = factor_cyclotomic(&f_hat);
    let off = off_circle_count(p);
    let period = period_from(p, &factorization);
    CoxeterReport {
        weight: p.clone(),
        f_c: canonical_coxeter_poly(p),
        f_hat,
        factorization,
        roots_on_circle: off == 0,
        off_circle_count: off,
        spectral_radius: spectral_radius(p, tol),
        period,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::v_poly;

    fn w(s: &str) -> WeightSequence {
        s.parse().unwrap()
    }

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn star_small_cases() {
        assert_eq!(star_coxeter_poly(&w("2,3")), v_poly(5));
        let a3 = star_coxeter_poly(&w("2,2"));
        assert_eq!(a3.degree(), Some(3));
        assert!(a3.is_palindromic());
        assert_eq!(a3, v_poly(4));
        assert_eq!(star_coxeter_poly_arms(&[1, 4]), v_poly(5));
    }

    #[test]
    fn star_matches_tree_recursion() {
        for s in ["2,3,7", "2,2,2,2", "3,4,5", "2,5"] {
            let q = w(s);
            assert_eq!(
                star_coxeter_poly(&q),
                tree_coxeter_poly(&Tree::star(q.parts())),
                "{s}"
            );
        }
    }

    #[test]
    fn known_extended_polys() {
        assert_eq!(extended_coxeter_poly(&w("2,3,7")), cyclotomic(42));
        assert_eq!(extended_coxeter_poly(&w("3,4,5")), cyclotomic(13));
        let f = extended_coxeter_poly(&w("2,2,2,2,2,2,2"));
        assert_eq!(f, &cyclotomic(2).pow(6) * &p(&[1, -1, 3, -1, 1]));
        assert_eq!(
            canonical_coxeter_poly(&w("2,2")),
            &p(&[-1, 1]).pow(2) * &p(&[1, 1]).pow(2)
        );
    }

    #[test]
    fn adjacency_polys() {
        assert_eq!(star_adjacency_poly(&w("2,2")), p(&[0, -2, 0, 1]));
        for s in ["2,3,7", "2,2,2,2,3", "4,5"] {
            let q = w(s);
            assert_eq!(
                star_adjacency_matrix(&q).char_poly().unwrap(),
                star_adjacency_poly(&q)
            );
        }
    }

    #[test]
    fn circle_decisions() {
        assert!(roots_on_circle(&w("2,3,10")));
        assert_eq!(off_circle_count(&w("2,3,10")), 0);
        assert!(!roots_on_circle(&w("2,3,11")));
        assert_eq!(off_circle_count(&w("2,3,11")), 4);
    }

    #[test]
    fn periods() {
        assert_eq!(period(&w("2,3,7")), Period::Finite(42));
        assert_eq!(period(&w("3,3,3,3")), Period::Infinite);
        assert_eq!(period(&w("4,4,5")), Period::Finite(72));
        assert_eq!(period(&w("2,3,11")), Period::Infinite);
    }

    #[test]
    fn derived_equivalences() {
        for s in ["2,2,2,2", "3,3,3", "2,4,4", "2,3,6"] {
            let q = w(s);
            assert_eq!(
                extended_coxeter_poly(&q),
                canonical_coxeter_poly(&incremented(&q)),
                "{s}"
            );
        }
        for (s, arms) in [
            ("2,3,3", [3, 3, 4]),
            ("2,3,4", [2, 4, 5]),
            ("2,3,5", [2, 3, 7]),
        ] {
            let q = w(s);
            assert_eq!(double_extended_star(&q).unwrap(), arms);
            assert_eq!(
                tree_coxeter_poly(&Tree::star(&arms)),
                extended_coxeter_poly(&q),
                "{s}"
            );
        }
        assert_eq!(double_extended_star(&w("2,2,5")), None);
    }

    #[test]
    fn radius() {
        let tol = Rational::new(1.into(), 1_000_000.into());
        let r = spectral_radius(&w("2,3,7"), &tol);
        assert_eq!(r.mode, RadiusMode::OnCircle);
        assert!(r.lo.is_one() && r.hi.is_one());
        let r = spectral_radius(&w("2,3,11"), &tol);
        assert!(
            (r.midpoint_f64() - 1.106_471_377).abs() < 1e-5,
            "{}",
            r.midpoint_f64()
        );
    }
}
