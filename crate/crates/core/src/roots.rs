//! Exact real root counting (Sturm chains), root refinement, and the
//! Schur–Cohn test for roots inside a disk.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::sign_of;
use crate::{IntPoly, Rational};

/// Sturm chain `f, f', -rem, ...` with each member scaled by a positive constant.
///
/// The last member is a gcd of `f` and `f'`. Members come from the subresultant
/// remainder sequence, whose exact divisions keep coefficients small without
/// content computations; a separately tracked sign turns them into Sturm members.
pub fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![f.clone()];
    if f.degree().unwrap_or(0) == 0 {
        return chain;
    }
    let mut prev = f.clone();
    let mut cur = f.derivative();
    chain.push(cur.clone());
    // Signs relating the subresultant members to Sturm members.
    let (mut eps_prev, mut eps_cur) = (1i8, 1i8);
    let mut psi = BigInt::from(-1);
    let mut first = true;
    let mut delta_prev = 0usize;
    while cur.degree().unwrap_or(0) > 0 {
        let delta = prev.degree().unwrap() - cur.degree().unwrap();
        let beta = if first {
            if delta.is_multiple_of(2) {
                BigInt::from(-1)
            } else {
                BigInt::one()
            }
        } else {
            // psi_i = (-lc(prev))^delta_prev / psi_{i-1}^(delta_prev - 1)
            let g = -prev.lead();
            let num = num_traits::pow(g, delta_prev);
            let den = num_traits::pow(psi.clone(), delta_prev - 1);
            psi = num / den;
            -prev.lead() * num_traits::pow(psi.clone(), delta)
        };
        let pr = prev.pseudo_rem(&cur);
        if pr.is_zero() {
            break;
        }
        let next = IntPoly::new(pr.coeffs().iter().map(|c| c / &beta).collect());
        let lc_sign = sign_of(&cur.lead());
        let lc_pow = if delta.is_multiple_of(2) { lc_sign } else { 1 };
        let eps_next = -eps_prev * sign_of(&beta) * lc_pow;
        chain.push(if eps_next > 0 { next.clone() } else { -&next });
        eps_prev = eps_cur;
        eps_cur = eps_next;
        prev = cur;
        cur = next;
        delta_prev = delta;
        first = false;
    }
    let _ = eps_cur;
    chain
}

/// Sign changes along the chain evaluated at `x`, zeros skipped.
pub fn sign_variations(chain: &[IntPoly], x: &Rational) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at(x)))
}

/// Sign changes at `+inf` (`positive`) or `-inf`.
pub fn sign_variations_at_infinity(chain: &[IntPoly], positive: bool) -> usize {
    count_variations(chain.iter().map(|p| {
        let s = sign_of(&p.lead());
        if !positive && p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Chain of the squarefree part of `f`.
fn squarefree_chain(f: &IntPoly) -> Vec<IntPoly> {
    let chain = sturm_chain(f);
    let g = chain.last().expect("chain is nonempty");
    if g.degree().unwrap_or(0) == 0 || chain.len() == 1 {
        return chain;
    }
    let g = g.primitive_part();
    sturm_chain(&f.exact_div(&g).expect("gcd divides f"))
}

/// Number of distinct real roots of a nonzero `f` in `(lo, hi]`.
pub fn sturm_count(f: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    assert!(
        !f.is_zero(),
        "the zero polynomial has infinitely many roots"
    );
    if lo >= hi {
        return 0;
    }
    let chain = squarefree_chain(f);
    sign_variations(&chain, lo) - sign_variations(&chain, hi)
}

/// Number of distinct real roots of a nonzero `f`.
pub fn real_root_count(f: &IntPoly) -> usize {
    let chain = squarefree_chain(f);
    sign_variations_at_infinity(&chain, false) - sign_variations_at_infinity(&chain, true)
}

/// Real roots of a nonzero `f` in the closed interval `[lo, hi]`, counted with multiplicity.
pub fn count_in_closed_interval(f: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    assert!(!f.is_zero());
    if lo > hi {
        return 0;
    }
    let chain = sturm_chain(f);
    let squarefree = chain.last().expect("nonempty").degree().unwrap_or(0) == 0;
    if squarefree {
        let at_lo = usize::from(f.sign_at(lo) == 0);
        return at_lo + sign_variations(&chain, lo) - sign_variations(&chain, hi);
    }
    f.squarefree_decomposition()
        .iter()
        .map(|(a, i)| {
            let at_lo = usize::from(a.sign_at(lo) == 0);
            i * (at_lo + sturm_count(a, lo, hi))
        })
        .sum()
}

/// Cauchy bound: every complex root has modulus below `1 + max |a_i / a_n|`.
pub fn cauchy_bound(f: &IntPoly) -> Rational {
    let lead = f.lead().abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    Rational::one() + Rational::new(max, lead)
}

/// Narrow `(lo, hi]`, which must contain exactly one distinct root, to width at most `tol`.
pub fn refine_root(
    f: &IntPoly,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> (Rational, Rational) {
    let chain = squarefree_chain(f);
    let count =
        |a: &Rational, b: &Rational| sign_variations(&chain, a) - sign_variations(&chain, b);
    assert_eq!(count(lo, hi), 1, "interval must isolate one root");
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let two = Rational::from_integer(BigInt::from(2));
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Isolating intervals `(lo, hi]` of width at most `tol` for every real root in `(lo, hi]`.
pub fn isolate_roots(
    f: &IntPoly,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> Vec<(Rational, Rational)> {
    let chain = squarefree_chain(f);
    let count =
        |a: &Rational, b: &Rational| sign_variations(&chain, a) - sign_variations(&chain, b);
    let two = Rational::from_integer(BigInt::from(2));
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match count(&a, &b) {
            0 => {}
            1 if &b - &a <= *tol => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort();
    out
}

/// Whether every complex root of `f` has modulus strictly below `r > 0`.
///
/// Runs the Schur–Cohn recursion on integer coefficients.
pub fn all_roots_in_disk(f: &IntPoly, r: &BigRational) -> bool {
    assert!(r.is_positive());
    let Some(n) = f.degree() else {
        return false;
    };
    // b^n f(a x / b)
    let (a, b) = (r.numer(), r.denom());
    let mut apow = BigInt::one();
    let mut bpows = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        bpows[k] = &bpows[k - 1] * b;
    }
    let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
    for (k, c) in f.coeffs().iter().enumerate() {
        g.push(c * &apow * &bpows[n - k]);
        apow *= a;
    }
    let mut g = IntPoly::new(g).remove_content().into_coeffs();
    loop {
        let n = g.len() - 1;
        if n == 0 {
            return true;
        }
        let an = g[n].clone();
        let a0 = g[0].clone();
        if a0.abs() >= an.abs() {
            return false;
        }
        let h: Vec<BigInt> = (1..=n).map(|k| &an * &g[k] - &a0 * &g[n - k]).collect();
        g = IntPoly::new(h).remove_content().into_coeffs();
    }
}

/// Modulus of the largest root, bracketed in `[lo, hi)` with `hi - lo <= tol`.
///
/// The caller supplies a lower bound `lo` that does not exceed the largest modulus.
pub fn root_modulus_bracket(f: &IntPoly, lo: Rational, tol: &Rational) -> (Rational, Rational) {
    let mut lo = lo;
    let mut hi = cauchy_bound(f);
    // Dyadic steps keep the scaled coefficients small.
    let two = Rational::from_integer(BigInt::from(2));
    while &hi - &lo > *tol {
        let mid = dyadic_between(&lo, &hi, &two);
        if all_roots_in_disk(f, &mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

fn dyadic_between(lo: &Rational, hi: &Rational, two: &Rational) -> Rational {
    let mid = (lo + hi) / two;
    // Round to a denominator that is a power of two, staying strictly inside.
    let width = hi - lo;
    let mut den = BigInt::one();
    while Rational::new(BigInt::one(), den.clone()) * Rational::from_integer(BigInt::from(4))
        > width
    {
        den <<= 1;
    }
    let num = (&mid * Rational::from_integer(den.clone()))
        .floor()
        .to_integer();
    let cand = Rational::new(num, den);
    if &cand > lo && &cand < hi {
        cand
    } else {
        mid
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn from_roots(rs: &[i64]) -> IntPoly {
        rs.iter().map(|&r| p(&[-r, 1])).product()
    }

    #[test]
    fn counts_distinct_roots() {
        let f = from_roots(&[-3, -1, 0, 2, 5]);
        assert_eq!(sturm_count(&f, &q(-2, 1), &q(2, 1)), 3);
        assert_eq!(sturm_count(&f, &q(-3, 1), &q(2, 1)), 3);
        assert_eq!(sturm_count(&f, &q(-4, 1), &q(5, 1)), 5);
        assert_eq!(real_root_count(&f), 5);
        assert_eq!(real_root_count(&p(&[1, 0, 1])), 0);
    }

    #[test]
    fn negative_leading_coefficients() {
        let f = -from_roots(&[-2, 1, 4]);
        assert_eq!(sturm_count(&f, &q(-5, 1), &q(5, 1)), 3);
        let g = &p(&[3, 0, -1]) * &p(&[1, 1, 1]);
        assert_eq!(real_root_count(&g), 2);
    }

    #[test]
    fn multiplicities_on_closed_interval() {
        let f = &from_roots(&[-2, -2, 1, 1, 1, 2]) * &p(&[1, 0, 1]);
        assert_eq!(count_in_closed_interval(&f, &q(-2, 1), &q(2, 1)), 6);
        assert_eq!(count_in_closed_interval(&f, &q(-1, 1), &q(3, 2)), 3);
        let g = from_roots(&[-2, 0, 2]);
        assert_eq!(count_in_closed_interval(&g, &q(-2, 1), &q(2, 1)), 3);
    }

    #[test]
    fn refinement_finds_sqrt_two() {
        let f = p(&[-2, 0, 1]);
        let (lo, hi) = refine_root(&f, &q(1, 1), &q(2, 1), &q(1, 1_000_000));
        assert!(&lo * &lo < q(2, 1) && &hi * &hi >= q(2, 1));
        let roots = isolate_roots(&f, &q(-3, 1), &q(3, 1), &q(1, 100));
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn disk_test() {
        // roots 1/2 and -1/3
        let f = p(&[-1, -1, 6]);
        assert!(all_roots_in_disk(&f, &q(1, 1)));
        assert!(!all_roots_in_disk(&f, &q(1, 2)));
        assert!(all_roots_in_disk(&f, &q(51, 100)));
        // roots on the unit circle are not strictly inside
        assert!(!all_roots_in_disk(&p(&[1, 0, 1]), &q(1, 1)));
        assert!(all_roots_in_disk(&p(&[1, 0, 1]), &q(101, 100)));
        // complex pair of modulus sqrt(5)
        let g = p(&[5, -2, 1]);
        let (lo, hi) = root_modulus_bracket(&g, q(1, 1), &q(1, 10_000));
        assert!(&lo * &lo <= q(5, 1) && &hi * &hi > q(5, 1));
    }

    /// Sturm chain over the rationals by plain Euclidean division.
    fn naive_chain(f: &IntPoly) -> Vec<crate::RatPoly> {
        let mut chain = vec![f.to_rat(), f.derivative().to_rat()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).unwrap();
            chain.push(-&r);
        }
    }

    fn naive_variations(chain: &[crate::RatPoly], x: &Rational) -> usize {
        count_variations(chain.iter().map(|p| sign_of_rat(&p.eval(x))))
    }

    fn sign_of_rat(r: &Rational) -> i8 {
        if r.is_positive() {
            1
        } else if r.is_negative() {
            -1
        } else {
            0
        }
    }

    proptest::proptest! {
        #[test]
        fn chain_matches_euclid(cs in proptest::collection::vec(-6i64..=6, 2..10), a in -8i64..8, w in 1i64..10) {
            let f = p(&cs);
            proptest::prop_assume!(f.degree().unwrap_or(0) >= 1);
            let chain = sturm_chain(&f);
            let naive = naive_chain(&f);
            proptest::prop_assert_eq!(chain.len(), naive.len());
            for (c, n) in chain.iter().zip(&naive) {
                // same member up to a positive factor
                let ratio = n.lead() / Rational::from_integer(c.lead());
                proptest::prop_assert!(ratio.is_positive());
                proptest::prop_assert_eq!(&c.to_rat().scale(&ratio), n);
            }
            let (lo, hi) = (q(a, 2), q(a + w, 2));
            proptest::prop_assert_eq!(
                sign_variations(&chain, &lo) - sign_variations(&chain, &hi),
                naive_variations(&naive, &lo) - naive_variations(&naive, &hi)
            );
        }
    }
}
