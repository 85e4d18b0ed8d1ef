//! Poincaré series of the graded algebra attached to a wild weight sequence,
//! its support monoid, and formal generation by cyclotomic exponents.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coxeter::{
    canonical_coxeter_poly, cartan_canonical, cartan_extended_default, coxeter_matrix,
    extended_coxeter_poly, period_from, tree_coxeter_poly, Period, Tree,
};
use crate::cyclotomic::{cyclotomic, factor_cyclotomic, mobius, CycloFactorization};
use crate::error::{Error, Result};
use crate::{IntPoly, RatFunc, WeightSequence};

/// Largest number of generators searched by [`formal_decomposition`].
pub const DEFAULT_MAX_GENERATORS: usize = 8;

/// `1 - T^n`.
fn one_minus_power(n: u32) -> IntPoly {
    let mut v = vec![BigInt::zero(); n as usize + 1];
    v[0] = BigInt::from(1);
    v[n as usize] = BigInt::from(-1);
    IntPoly::new(v)
}

/// `T + 1/(1-T) + (t-2) T/(1-T)^2 - sum_i T / ((1-T)(1-T^{p_i}))`.
pub fn poincare_closed(p: &WeightSequence) -> RatFunc {
    let t = p.len() as i64;
    let one_minus_t = IntPoly::from_i64s(&[1, -1]);
    let x = IntPoly::x();
    let factors: Vec<IntPoly> = p.parts().iter().map(|&a| one_minus_power(a)).collect();
    let prod: IntPoly = factors.iter().cloned().product();
    // common denominator (1-T)^2 prod (1 - T^{p_i})
    let den = &(&one_minus_t * &one_minus_t) * &prod;
    let mut num = &(&x * &den) + &(&one_minus_t * &prod);
    num = &num + &(&x * &prod).scale(&BigInt::from(t - 2));
    for i in 0..factors.len() {
        let others: IntPoly = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f.clone())
            .product();
        num = &num - &(&(&x * &one_minus_t) * &others);
    }
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `f_A / f_C` with both sides taken as characteristic polynomials of Coxeter matrices.
pub fn poincare_via_coxeter(p: &WeightSequence) -> RatFunc {
    let f_a = coxeter_matrix(&cartan_extended_default(p))
        .char_poly()
        .expect("square");
    let f_c = coxeter_matrix(&cartan_canonical(p))
        .char_poly()
        .expect("square");
    RatFunc::new(f_a, f_c).expect("nonzero denominator")
}

/// `1 + T - T f_star / f_C`, with the star polynomial from the leaf recursion.
pub fn poincare_via_star(p: &WeightSequence) -> RatFunc {
    let f_star = tree_coxeter_poly(&Tree::star(p.parts()));
    let f_c = canonical_coxeter_poly(p);
    let num = &(&IntPoly::from_i64s(&[1, 1]) * &f_c) - &f_star.shift(1);
    RatFunc::new(num, f_c).expect("nonzero denominator")
}

/// A submonoid of `(N, +)` with finite complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    /// Minimal generators, increasing.
    pub generators: Vec<u64>,
    /// Largest integer not in the semigroup.
    pub frobenius: u64,
    pub conductor: u64,
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`, whose gcd must be 1.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let g = gens.iter().fold(0u64, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(Error::Unsupported(format!(
                "generators {gens:?} have gcd {g}"
            )));
        }
        let min = *gens.iter().min().expect("nonempty") as usize;
        let mut member = vec![true];
        let mut run = 0;
        let mut n = 0;
        // membership until `min` consecutive members appear
        while run < min {
            n += 1;
            let is = gens
                .iter()
                .any(|&a| a as usize <= n && member[n - a as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        Self::from_membership(&member).ok_or_else(|| Error::Unsupported("no stable run".into()))
    }

    /// Read off generators and Frobenius number from a membership table over `0..len`,
    /// certified by a run of `min` consecutive members at its end part.
    fn from_membership(member: &[bool]) -> Option<Self> {
        let min = (1..member.len()).find(|&n| member[n])?;
        let mut run = 0;
        let mut stable = None;
        for (n, &m) in member.iter().enumerate().skip(1) {
            run = if m { run + 1 } else { 0 };
            if run == min {
                stable = Some(n + 1 - min);
                break;
            }
        }
        let conductor = stable?;
        let mut generators = Vec::new();
        for n in 1..conductor + min {
            if member[n] && !(1..n).any(|a| member[a] && member[n - a]) {
                generators.push(n as u64);
            }
        }
        Some(NumericalSemigroup {
            generators,
            frobenius: conductor as u64 - 1,
            conductor: conductor as u64,
        })
    }

    pub fn contains(&self, n: u64) -> bool {
        if n >= self.conductor || n == 0 {
            return true;
        }
        let n = n as usize;
        let mut member = vec![false; n + 1];
        member[0] = true;
        for k in 1..=n {
            member[k] = self
                .generators
                .iter()
                .any(|&a| a as usize <= k && member[k - a as usize]);
        }
        member[n]
    }

    pub fn min_element(&self) -> u64 {
        self.generators[0]
    }
}

/// `prod (1 - T^{c_i}) / prod (1 - T^{d_j})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedForm {
    pub d: Vec<u32>,
    pub c: Vec<u32>,
}

impl GeneratedForm {
    /// Number of generators, the length of `d`.
    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let num: IntPoly = self.c.iter().map(|&c| one_minus_power(c)).product();
        let den: IntPoly = self.d.iter().map(|&d| one_minus_power(d)).product();
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// `1 + sum d = sum c`.
    pub fn degree_balanced(&self) -> bool {
        1 + self.d.iter().map(|&x| x as u64).sum::<u64>()
            == self.c.iter().map(|&x| x as u64).sum::<u64>()
    }
}

/// Expansion horizon for the support monoid.
pub fn horizon(p: &WeightSequence) -> usize {
    let deg = extended_coxeter_poly(p).degree().unwrap_or(0);
    200.max(6 * deg)
}

/// `M(p) = {n : R_n != 0}`, read from the series up to [`horizon`].
pub fn support_monoid(p: &WeightSequence) -> Result<NumericalSemigroup> {
    p.require_wild()?;
    let coeffs = poincare_closed(p).series(horizon(p) + 1)?;
    monoid_from_coeffs(p, &coeffs)
}

fn monoid_from_coeffs(p: &WeightSequence, coeffs: &[BigInt]) -> Result<NumericalSemigroup> {
    if let Some(n) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(Error::Unsupported(format!(
            "negative coefficient at T^{n} for {p}"
        )));
    }
    let member: Vec<bool> = coeffs.iter().map(|c| !c.is_zero()).collect();
    let len = member.len();
    for a in (1..len).filter(|&a| member[a]) {
        if let Some(b) = (a..len - a).find(|&b| member[b] && !member[a + b]) {
            return Err(Error::Unsupported(format!(
                "support of {p} misses {a} + {b}"
            )));
        }
    }
    let m = NumericalSemigroup::from_membership(&member).ok_or_else(|| {
        Error::Unsupported(format!("support of {p} not stable within the horizon"))
    })?;
    if m.generators.len() > 6 {
        return Err(Error::Unsupported(format!(
            "{p} has {} generators",
            m.generators.len()
        )));
    }
    Ok(m)
}

/// Exponent of `phi_k` in `f_C = (T-1)^2 prod v_{p_i}`.
fn canonical_exponent(p: &WeightSequence, k: usize) -> i64 {
    if k == 1 {
        2
    } else {
        p.parts()
            .iter()
            .filter(|&&a| (a as usize).is_multiple_of(k))
            .count() as i64
    }
}

/// Minimal formal presentation of `P_C`, or `None` when there is none with at most
/// [`DEFAULT_MAX_GENERATORS`] generators.
pub fn formal_decomposition(p: &WeightSequence) -> Result<Option<GeneratedForm>> {
    formal_decomposition_bounded(p, DEFAULT_MAX_GENERATORS)
}

/// As [`formal_decomposition`] with a custom bound on the number of generators.
///
/// Writing `P_C = prod phi_k^{a_k}`, the factor `1 - T^m` contributes to every `a_k`
/// with `k | m`, so the signed multiplicity `g(m)` of `m` in `c` minus `d` is
/// `sum_j mu(j) a_{mj}`. Presentations without a common entry in `c` and `d` are
/// therefore unique, and any other one is longer.
pub fn formal_decomposition_bounded(
    p: &WeightSequence,
    n_max: usize,
) -> Result<Option<GeneratedForm>> {
    p.require_wild()?;
    let fac = factor_cyclotomic(&extended_coxeter_poly(p));
    Ok(decomposition_from(p, &fac).filter(|g| g.n() <= n_max))
}

/// Decomposition read from the factorization of `f_hat`.
pub fn decomposition_from(p: &WeightSequence, fac: &CycloFactorization) -> Option<GeneratedForm> {
    if !fac.is_fully_cyclotomic() {
        return None;
    }
    let top = fac.max_index().unwrap_or(1).max(p.max_weight() as usize);
    let a: Vec<i64> = (0..=top)
        .map(|k| {
            if k == 0 {
                0
            } else {
                fac.exponent(k) as i64 - canonical_exponent(p, k)
            }
        })
        .collect();
    let mut c = Vec::new();
    let mut d = Vec::new();
    for m in 1..=top {
        let g: i64 = (1..=top / m).map(|j| mobius(j) as i64 * a[m * j]).sum();
        if g != 0 && m == 1 {
            return None;
        }
        let target = if g > 0 { &mut c } else { &mut d };
        target.extend(std::iter::repeat_n(m as u32, g.unsigned_abs() as usize));
    }
    (c.len() + 2 == d.len()).then_some(GeneratedForm { d, c })
}

/// Formally a complete intersection: `f_hat` is a product of cyclotomic polynomials.
pub fn is_complete_intersection_formal(p: &WeightSequence) -> Result<bool> {
    p.require_wild()?;
    Ok(factor_cyclotomic(&extended_coxeter_poly(p)).is_fully_cyclotomic())
}

pub fn three_generated(p: &WeightSequence) -> Result<bool> {
    Ok(formal_decomposition(p)?.is_some_and(|g| g.n() == 3))
}

/// The Coxeter transformation has finite period `d` and `phi_d` divides `f_hat`.
pub fn periodic_with_primitive_root(p: &WeightSequence) -> Result<bool> {
    p.require_wild()?;
    let f = extended_coxeter_poly(p);
    let fac = factor_cyclotomic(&f);
    Ok(match period_from(p, &fac) {
        Period::Finite(d) => cyclotomic(d as usize).divides(&f),
        Period::Infinite => false,
    })
}

/// Exponent of the cyclotomic factor of largest index equals 1.
pub fn top_exponent_is_one(fac: &CycloFactorization) -> bool {
    fac.factors.values().next_back() == Some(&1)
}

/// Every profile field for a wild weight sequence.
#[derive(Clone, Debug)]
pub struct PoincareProfile {
    pub weight: WeightSequence,
    pub series: RatFunc,
    /// Coefficients up to [`horizon`].
    pub coeffs: Vec<BigInt>,
    pub monoid: NumericalSemigroup,
    pub decomposition: Option<GeneratedForm>,
    pub complete_intersection: bool,
}

pub fn poincare_profile(p: &WeightSequence) -> Result<PoincareProfile> {
    p.require_wild()?;
    let series = poincare_closed(p);
    let coeffs = series.series(horizon(p) + 1)?;
    let monoid = monoid_from_coeffs(p, &coeffs)?;
    let fac = factor_cyclotomic(&extended_coxeter_poly(p));
    let decomposition = decomposition_from(p, &fac).filter(|g| g.n() <= DEFAULT_MAX_GENERATORS);
    Ok(PoincareProfile {
        weight: p.clone(),
        series,
        coeffs,
        monoid,
        decomposition,
        complete_intersection: fac.is_fully_cyclotomic(),
    })
}

/// Multiset of entries, for comparisons that ignore order.
pub fn multiset(v: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &x in v {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::enumerate_by_sum;

    fn w(s: &str) -> WeightSequence {
        s.parse().unwrap()
    }

    #[test]
    fn series_237() {
        let c = poincare_closed(&w("2,3,7")).series(15).unwrap();
        let support: Vec<usize> = (0..15).filter(|&n| !c[n].is_zero()).collect();
        // 8 is not a sum of 6, 14 and 21
        assert_eq!(support, vec![0, 6, 12, 14]);
        let form = GeneratedForm {
            d: vec![6, 14, 21],
            c: vec![42],
        };
        assert_eq!(poincare_closed(&w("2,3,7")), form.to_ratfunc());
    }

    #[test]
    fn three_routes_small() {
        for p in enumerate_by_sum(12, 6) {
            let a = poincare_closed(&p);
            assert_eq!(a, poincare_via_coxeter(&p), "{p}");
            assert_eq!(a, poincare_via_star(&p), "{p}");
        }
    }

    #[test]
    fn semigroup_oracles() {
        // two generators: ab - a - b
        for (a, b) in [(3u64, 8u64), (4, 5), (2, 9), (6, 7)] {
            let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
            assert_eq!(s.frobenius, a * b - a - b);
            assert_eq!(s.generators, vec![a, b]);
        }
        let s = NumericalSemigroup::from_generators(&[6, 14, 21, 12]).unwrap();
        assert_eq!(s.generators, vec![6, 14, 21]);
        assert_eq!(s.frobenius, 43);
        assert!(s.contains(42) && !s.contains(43) && s.contains(44));
        assert!(NumericalSemigroup::from_generators(&[4, 6]).is_err());
    }

    #[test]
    fn monoids_from_series() {
        for (p, frob, gens) in [
            ("2,3,7", 43, vec![6, 14, 21]),
            ("2,4,5", 21, vec![4, 10, 15]),
            ("2,2,3,3", 1, vec![2, 3]),
        ] {
            let m = support_monoid(&w(p)).unwrap();
            assert_eq!(m.frobenius, frob, "{p}");
            assert_eq!(m.generators, gens, "{p}");
        }
        assert!(support_monoid(&w("2,3,6")).is_err());
    }

    #[test]
    fn decompositions() {
        let g = formal_decomposition(&w("2,5,5")).unwrap().unwrap();
        assert_eq!((g.d, g.c), (vec![4, 5, 10], vec![20]));
        let g = formal_decomposition(&w("2,3,10")).unwrap().unwrap();
        assert_eq!(
            (g.d.clone(), g.c.clone()),
            (vec![6, 8, 9, 10], vec![16, 18])
        );
        assert!(g.degree_balanced());
        assert!(formal_decomposition(&w("2,3,11")).unwrap().is_none());
        assert!(three_generated(&w("2,3,8")).unwrap());
        assert!(three_generated(&w("2,2,3,3")).unwrap());
        assert!(!three_generated(&w("2,3,10")).unwrap());
        assert!(formal_decomposition_bounded(&w("2,3,10"), 3)
            .unwrap()
            .is_none());
    }

    #[test]
    fn complete_intersections() {
        assert!(is_complete_intersection_formal(&w("3,5,5")).unwrap());
        assert!(!is_complete_intersection_formal(&w("2,6,7")).unwrap());
        assert!(is_complete_intersection_formal(&w("2,2,2,3")).unwrap());
    }

    #[test]
    fn primitive_root_periodicity() {
        assert!(periodic_with_primitive_root(&w("2,3,7")).unwrap());
        assert!(!periodic_with_primitive_root(&w("2,3,10")).unwrap());
        assert!(!periodic_with_primitive_root(&w("3,3,3,3")).unwrap());
    }
}
