//! Named invariants checked over a bounded enumeration of weight sequences.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::coxeter::{
    canonical_coxeter_poly, canonical_vertices, cartan_canonical, cartan_extended, coxeter_matrix,
    extended_coxeter_poly, off_circle_count, period_from, q_poly, tits_form, tree_coxeter_poly,
    wildness_witness, Period, Tree,
};
use crate::cyclotomic::{cyclotomic, divisors, factor_cyclotomic};
use crate::error::Result;
use crate::poincare::{
    decomposition_from, poincare_closed, poincare_via_coxeter, poincare_via_star, support_monoid,
    top_exponent_is_one,
};
use crate::poly::represent_transform;
use crate::singularities::{corrected_registry, registry, verify_record};
use crate::tables::{table1, table2, table3, DiscrepancyKind};
use crate::weights::{enumerate_by_sum, ReprType};
use crate::{IntPoly, Rational, WeightSequence};

/// Enumeration bounds for [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_sum: u32,
    pub max_t: usize,
    /// Count every printed-table annotation as a failure.
    pub strict: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_sum: 14,
            max_t: 8,
            strict: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub name: &'static str,
    pub checked: usize,
    /// Weights (or rows) that failed, in enumeration order.
    pub failures: Vec<String>,
}

impl InvariantResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySummary {
    pub options: VerifyOptions,
    pub results: Vec<InvariantResult>,
    /// Disagreements with printed tables, each tagged with its classification.
    pub annotations: Vec<String>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.results.iter().all(InvariantResult::passed)
            && (!self.options.strict || self.annotations.is_empty())
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.options;
        writeln!(f, "weights with sum <= {} and t <= {}", o.max_sum, o.max_t)?;
        for r in &self.results {
            let status = if r.passed() { "ok  " } else { "FAIL" };
            write!(f, "{status} {:<32} {:>6} checked", r.name, r.checked)?;
            if !r.passed() {
                let shown: Vec<&str> = r.failures.iter().take(5).map(String::as_str).collect();
                write!(f, ", {} failed: {}", r.failures.len(), shown.join("; "))?;
            }
            writeln!(f)?;
        }
        let tag = if o.strict { "FAIL" } else { "note" };
        for a in &self.annotations {
            writeln!(f, "{tag} {a}")?;
        }
        Ok(())
    }
}

struct Check {
    name: &'static str,
    applies: fn(&WeightSequence) -> bool,
    holds: fn(&WeightSequence) -> Result<bool>,
}

fn any(_: &WeightSequence) -> bool {
    true
}

fn wild(p: &WeightSequence) -> bool {
    p.is_wild()
}

fn small(p: &WeightSequence) -> bool {
    p.sum() <= 12
}

fn classification(p: &WeightSequence) -> Result<bool> {
    let inv: Rational = p
        .parts()
        .iter()
        .map(|&x| Rational::new(BigInt::one(), x.into()))
        .sum();
    let below = inv < Rational::from_integer((p.len() as i64 - 2).into());
    let negative = p.euler_char().is_negative();
    Ok((p.classify() == ReprType::Wild) == negative && negative == below)
}

/// Char polys of the Coxeter matrices, the extension placed at every vertex.
fn matrix_routes(p: &WeightSequence) -> Result<bool> {
    let c = cartan_canonical(p);
    if coxeter_matrix(&c).char_poly()? != canonical_coxeter_poly(p) {
        return Ok(false);
    }
    let f = extended_coxeter_poly(p);
    for v in canonical_vertices(p) {
        if coxeter_matrix(&cartan_extended(p, v)?).char_poly()? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f_hat = (1 + T) f_C - T f_star` with `f_star` from the leaf recursion.
fn one_point_extension(p: &WeightSequence) -> Result<bool> {
    let star = tree_coxeter_poly(&Tree::star(p.parts()));
    let f_c = canonical_coxeter_poly(p);
    let rhs = &(&IntPoly::from_i64s(&[1, 1]) * &f_c) - &star.shift(1);
    Ok(rhs == extended_coxeter_poly(p))
}

fn representability(p: &WeightSequence) -> Result<bool> {
    Ok(represent_transform(&q_poly(p)) == extended_coxeter_poly(p).compose_power(2))
}

fn value_at_one(p: &WeightSequence) -> Result<bool> {
    let inv: Rational = p
        .parts()
        .iter()
        .map(|&x| Rational::new(BigInt::one(), x.into()))
        .sum();
    let expected = (Rational::from_integer((p.len() as i64 - 2).into()) - inv)
        * Rational::from_integer(p.product());
    let pole = poincare_closed(p).pole_order_at(1);
    Ok(
        Rational::from_integer(extended_coxeter_poly(p).eval(&BigInt::one())) == expected
            && pole == 2,
    )
}

fn three_poincare_routes(p: &WeightSequence) -> Result<bool> {
    let a = poincare_closed(p);
    let product =
        (&a.num().clone() * &canonical_coxeter_poly(p)) == (&extended_coxeter_poly(p) * a.den());
    Ok(product && a == poincare_via_coxeter(p) && a == poincare_via_star(p))
}

fn dynkin_index_is_min_support(p: &WeightSequence) -> Result<bool> {
    Ok(support_monoid(p)?.min_element() == p.dynkin_label()?.index() as u64)
}

fn off_circle_at_most_four(p: &WeightSequence) -> Result<bool> {
    Ok(off_circle_count(p) <= 4)
}

fn circle_list_membership(p: &WeightSequence) -> Result<bool> {
    Ok((off_circle_count(p) == 0) == p.in_circle_list()?)
}

fn decomposition_iff_circle(p: &WeightSequence) -> Result<bool> {
    let fac = factor_cyclotomic(&extended_coxeter_poly(p));
    let on_circle = off_circle_count(p) == 0;
    Ok(match decomposition_from(p, &fac) {
        Some(g) => on_circle && g.degree_balanced() && g.to_ratfunc() == poincare_closed(p),
        None => !on_circle,
    })
}

/// Period finite implies roots on the circle; periodic exactly when the top exponent is one.
fn periodicity(p: &WeightSequence) -> Result<bool> {
    let fac = factor_cyclotomic(&extended_coxeter_poly(p));
    let period = period_from(p, &fac);
    let on_circle = fac.is_fully_cyclotomic();
    if period.is_finite() && !on_circle {
        return Ok(false);
    }
    Ok(!on_circle || period.is_finite() == top_exponent_is_one(&fac))
}

/// Periodic with `phi_d | f_hat` for the period `d`, exactly when three-generated.
fn primitive_period_three_generated(p: &WeightSequence) -> Result<bool> {
    let f = extended_coxeter_poly(p);
    let fac = factor_cyclotomic(&f);
    let primitive = match period_from(p, &fac) {
        Period::Finite(d) => cyclotomic(d as usize).divides(&f),
        Period::Infinite => false,
    };
    let three = decomposition_from(p, &fac).is_some_and(|g| g.n() == 3);
    Ok(primitive == three)
}

fn registry_is_three_generated(p: &WeightSequence) -> Result<bool> {
    let fac = factor_cyclotomic(&extended_coxeter_poly(p));
    let three = decomposition_from(p, &fac).is_some_and(|g| g.n() == 3);
    Ok(three == registry().iter().any(|r| &r.weight == p))
}

fn tits_witness(p: &WeightSequence) -> Result<bool> {
    let (c, x) = wildness_witness(p);
    Ok(tits_form(&c, &x)? == BigInt::from(-1))
}

const CHECKS: [Check; 14] = [
    Check {
        name: "classification",
        applies: any,
        holds: classification,
    },
    Check {
        name: "matrix_char_poly",
        applies: small,
        holds: matrix_routes,
    },
    Check {
        name: "one_point_extension",
        applies: any,
        holds: one_point_extension,
    },
    Check {
        name: "representability",
        applies: any,
        holds: representability,
    },
    Check {
        name: "tits_witness",
        applies: any,
        holds: tits_witness,
    },
    Check {
        name: "value_at_one_and_pole_order",
        applies: wild,
        holds: value_at_one,
    },
    Check {
        name: "poincare_three_routes",
        applies: wild,
        holds: three_poincare_routes,
    },
    Check {
        name: "dynkin_index_min_support",
        applies: wild,
        holds: dynkin_index_is_min_support,
    },
    Check {
        name: "off_circle_at_most_4",
        applies: wild,
        holds: off_circle_at_most_four,
    },
    Check {
        name: "circle_list_membership",
        applies: wild,
        holds: circle_list_membership,
    },
    Check {
        name: "decomposition_iff_circle",
        applies: wild,
        holds: decomposition_iff_circle,
    },
    Check {
        name: "periodicity",
        applies: wild,
        holds: periodicity,
    },
    Check {
        name: "primitive_period_three_generated",
        applies: wild,
        holds: primitive_period_three_generated,
    },
    Check {
        name: "registry_three_generated",
        applies: |p| p.is_wild() && p.max_weight() <= 9 && p.len() <= 5,
        holds: registry_is_three_generated,
    },
];

fn cyclotomic_products() -> InvariantResult {
    let t = IntPoly::x();
    let failures = (1..=200usize)
        .filter(|&n| {
            let prod: IntPoly = divisors(n).into_iter().map(cyclotomic).product();
            prod != &t.pow(n as u32) - &IntPoly::one()
        })
        .map(|n| n.to_string())
        .collect();
    InvariantResult {
        name: "cyclotomic_products",
        checked: 200,
        failures,
    }
}

fn printed_tables(annotations: &mut Vec<String>) -> Result<Vec<InvariantResult>> {
    let mut unexplained = InvariantResult {
        name: "tables_unexplained_mismatch",
        checked: 0,
        failures: Vec::new(),
    };
    let mut note = |table: u8, weight: &WeightSequence, d: &crate::tables::Discrepancy| {
        let line = format!(
            "table {table} ({weight}) {}: computed {}, printed {} [{:?}]",
            d.field, d.computed, d.printed, d.kind
        );
        if d.kind == DiscrepancyKind::Mismatch {
            unexplained.failures.push(line.clone());
        }
        annotations.push(line);
    };
    let (t1, t2, t3) = (table1(), table2(), table3()?);
    unexplained.checked = t1.len() + t2.len() + t3.len();
    for r in &t1 {
        r.discrepancies.iter().for_each(|d| note(1, &r.weight, d));
    }
    for r in &t2 {
        r.discrepancies.iter().for_each(|d| note(2, &r.weight, d));
    }
    for r in &t3 {
        r.discrepancies.iter().for_each(|d| note(3, &r.weight, d));
    }
    let mut records = InvariantResult {
        name: "hypersurface_records",
        checked: 0,
        failures: Vec::new(),
    };
    for (printed, used) in registry().iter().zip(corrected_registry()) {
        records.checked += 1;
        if !verify_record(&used).passed() {
            records
                .failures
                .push(format!("{} ({})", used.name, used.weight));
        }
        if !verify_record(printed).passed() {
            annotations.push(format!(
                "table {} ({}) relation: printed {} fails verification, derived {} used",
                printed.table, printed.weight, printed.relation, used.relation
            ));
        }
    }
    Ok(vec![unexplained, records])
}

pub fn verify(options: VerifyOptions) -> Result<VerifySummary> {
    let weights = enumerate_by_sum(options.max_sum, options.max_t);
    let mut results = vec![cyclotomic_products()];
    for check in &CHECKS {
        let mut r = InvariantResult {
            name: check.name,
            checked: 0,
            failures: Vec::new(),
        };
        for p in weights.iter().filter(|p| (check.applies)(p)) {
            r.checked += 1;
            if !(check.holds)(p)? {
                r.failures.push(p.to_string());
            }
        }
        results.push(r);
    }
    let mut annotations = Vec::new();
    results.extend(printed_tables(&mut annotations)?);
    Ok(VerifySummary {
        options,
        results,
        annotations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let s = verify(VerifyOptions {
            max_sum: 10,
            max_t: 5,
            strict: false,
        })
        .unwrap();
        assert!(s.passed(), "{s}");
        assert!(s.results.iter().all(|r| r.checked > 0), "{s}");
        assert!(s.annotations.iter().any(|a| a.contains("(2,3,10) period")));
        let strict = VerifySummary {
            options: VerifyOptions {
                strict: true,
                ..s.options
            },
            ..s
        };
        assert!(!strict.passed());
    }
}
