//! The printed Tables 1 to 5 next to freshly computed values, with every
//! disagreement classified, and plain renderings as CSV, JSON or Markdown.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::coxeter::{
    extended_coxeter_poly, off_circle_count, period_from, spectral_radius, Period, RadiusMode,
};
use crate::cyclotomic::{cyclotomic, factor_cyclotomic, CycloFactorization};
use crate::error::{Error, Result};
use crate::poincare::{
    decomposition_from, multiset, support_monoid, GeneratedForm, NumericalSemigroup,
};
use crate::singularities::{corrected_registry, registry, verify_record, HypersurfaceRecord};
use crate::{IntPoly, Rational, WeightSequence};

/// How a printed cell relates to the computed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyKind {
    /// Printed period differs from the computed one, which is the lcm of the cyclotomic indices.
    PeriodFromLcm,
    /// The printed factorization does not multiply out to `f_hat`; the computed one does.
    PrintedProductInconsistent,
    /// Printed radius is the computed one truncated rather than rounded.
    RadiusTruncated,
    /// Printed digits are the rounded computed ones with two neighbours swapped.
    DigitTransposition,
    /// Printed row label repeats an earlier label with different values.
    LabelCollision,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub field: String,
    pub printed: String,
    pub computed: String,
    pub kind: DiscrepancyKind,
}

fn note(
    field: &str,
    printed: impl ToString,
    computed: impl ToString,
    kind: DiscrepancyKind,
) -> Discrepancy {
    Discrepancy {
        field: field.into(),
        printed: printed.to_string(),
        computed: computed.to_string(),
        kind,
    }
}

fn factors_of(list: &[(usize, u32)]) -> BTreeMap<usize, u32> {
    list.iter().copied().collect()
}

fn cyclo_product(factors: &BTreeMap<usize, u32>) -> IntPoly {
    factors
        .iter()
        .map(|(&n, &e)| cyclotomic(n).pow(e))
        .product()
}

fn show_factors(factors: &BTreeMap<usize, u32>) -> String {
    CycloFactorization {
        factors: factors.clone(),
        remainder: IntPoly::one(),
    }
    .to_string()
}

// ---------------------------------------------------------------- Table 1

/// A printed row: cyclotomic factors, the remaining printed polynomial (low degree
/// first), the radius as printed and the Dynkin index.
struct Printed1 {
    weight: &'static [u32],
    factors: &'static [(usize, u32)],
    rest: &'static [i64],
    rho: &'static str,
    index: u32,
}

const TABLE1: [Printed1; 18] = [
    Printed1 {
        weight: &[2, 3, 11],
        factors: &[],
        rest: &[1, 1, 0, -1, -1, 0, 1, 1, 0, 1, 1, 0, -1, -1, 0, 1, 1],
        rho: "1.1064",
        index: 6,
    },
    Printed1 {
        weight: &[2, 4, 9],
        factors: &[(2, 1), (5, 1)],
        rest: &[1, 1, 0, 0, 0, 1, 0, 0, 0, -1, 1],
        rho: "1.1329",
        index: 4,
    },
    Printed1 {
        weight: &[2, 5, 8],
        factors: &[],
        rest: &[1, 1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 0, 0, 1, 1],
        rho: "1.1574",
        index: 4,
    },
    Printed1 {
        weight: &[2, 6, 7],
        factors: &[],
        rest: &[1, 1, 0, 0, 1, 2, 2, 1, 1, 2, 2, 1, 0, 0, 1, 1],
        rho: "1.1669",
        index: 4,
    },
    Printed1 {
        weight: &[3, 3, 8],
        factors: &[],
        rest: &[1, 1, 1, 0, 0, 1, 2, 3, 2, 1, 0, 0, 1, 1, 1],
        rho: "1.1498",
        index: 3,
    },
    Printed1 {
        weight: &[3, 4, 7],
        factors: &[],
        rest: &[1, 1, 1, 1, 1, 2, 3, 3, 3, 2, 1, 1, 1, 1, 1],
        rho: "1.1847",
        index: 3,
    },
    Printed1 {
        weight: &[3, 5, 6],
        factors: &[(3, 1)],
        rest: &[1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1],
        rho: "1.1966",
        index: 3,
    },
    Printed1 {
        weight: &[4, 4, 6],
        factors: &[(2, 1), (4, 1)],
        rest: &[1, -1, 1, 0, 1, 0, 1, 0, 1, -1, 1],
        rho: "1.2715",
        index: 3,
    },
    Printed1 {
        weight: &[4, 5, 5],
        factors: &[(5, 1)],
        rest: &[1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 1],
        rho: "1.2277",
        index: 3,
    },
    Printed1 {
        weight: &[2, 2, 2, 7],
        factors: &[(2, 2)],
        rest: &[1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1],
        rho: "1.1670",
        index: 2,
    },
    Printed1 {
        weight: &[2, 2, 3, 6],
        factors: &[(2, 2), (3, 1)],
        rest: &[1, -1, 1, 0, 1, 0, 1, -1, 1],
        rho: "1.2196",
        index: 2,
    },
    Printed1 {
        weight: &[2, 3, 4, 4],
        factors: &[(2, 1), (4, 1)],
        rest: &[1, 0, 1, 1, 2, 1, 1, 0, 1],
        rho: "1.2874",
        index: 2,
    },
    Printed1 {
        weight: &[3, 3, 3, 4],
        factors: &[(3, 2)],
        rest: &[1, 0, 1, 2, 0, 2, 1, 0, 1],
        rho: "1.3307",
        index: 2,
    },
    // T^3 appears twice in the printed factor; read literally
    Printed1 {
        weight: &[2, 2, 2, 2, 5],
        factors: &[(2, 3)],
        rest: &[1, 0, 1, 2, 2, 0, 1, 0, 1],
        rho: "1.2874",
        index: 2,
    },
    Printed1 {
        weight: &[2, 2, 2, 3, 4],
        factors: &[(2, 3)],
        rest: &[1, 0, 2, 0, 3, 1, 2, 0, 1],
        rho: "1.3351",
        index: 2,
    },
    Printed1 {
        weight: &[2, 2, 3, 3, 3],
        factors: &[(2, 1), (3, 2)],
        rest: &[1, 0, 1, 2, 1, 0, 1],
        rho: "1.3765",
        index: 2,
    },
    Printed1 {
        weight: &[2, 2, 2, 2, 2, 3],
        factors: &[(2, 4)],
        rest: &[1, 0, 2, 1, 2, 0, 1],
        rho: "1.3395",
        index: 2,
    },
    Printed1 {
        weight: &[2, 2, 2, 2, 2, 2, 2],
        factors: &[(2, 6)],
        rest: &[1, -1, 3, -1, 1],
        rho: "1.5392",
        index: 2,
    },
];

/// The weight whose printed Table 1 factor repeats a term.
pub const TABLE1_KNOWN_TYPO: &[u32] = &[2, 2, 2, 2, 5];

#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub weight: WeightSequence,
    pub factorization: String,
    /// The non-cyclotomic factor, low degree first.
    pub salem_factor: Vec<i64>,
    pub printed_salem_factor: Vec<i64>,
    /// The printed factorization as it reads, cyclotomic part then the rest.
    pub printed_factorization: String,
    pub rho: String,
    pub rho_interval: (String, String),
    pub rho_mode: RadiusMode,
    pub printed_rho: String,
    pub dynkin_index: u32,
    pub printed_dynkin_index: u32,
    pub off_circle_count: usize,
    pub discrepancies: Vec<Discrepancy>,
}

fn small_coeffs(p: &IntPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("small coefficient"))
        .collect()
}

fn decimal(s: &str) -> Rational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let den = BigInt::from(10).pow(frac.len() as u32);
    let num: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    Rational::new(num, den)
}

/// `x` rounded to `places` decimals.
pub fn format_decimal(x: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = (x * Rational::from_integer(scale.clone()))
        .round()
        .to_integer();
    let (q, r) = (&scaled / &scale, &scaled % &scale);
    format!("{q}.{:0>width$}", r.to_string(), width = places as usize)
}

/// `b` is `a` with two neighbouring characters exchanged.
fn adjacent_swap(a: &str, b: &str) -> bool {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    a.len() == b.len()
        && (1..a.len()).any(|i| {
            let mut s = a.to_vec();
            s.swap(i - 1, i);
            s != a && s == b
        })
}

fn truncate(x: &Rational, places: u32) -> Rational {
    let scale = Rational::from_integer(BigInt::from(10).pow(places));
    (x * &scale).floor() / scale
}

pub fn table1() -> Vec<Table1Row> {
    TABLE1.iter().map(table1_row).collect()
}

fn table1_row(row: &Printed1) -> Table1Row {
    let tol = Rational::new(BigInt::from(1), BigInt::from(100_000_000));
    let half_unit = Rational::new(BigInt::from(5), BigInt::from(100_000));
    let p = WeightSequence::of(row.weight);
    let f = extended_coxeter_poly(&p);
    let fac = factor_cyclotomic(&f);
    let rest = IntPoly::from_i64s(row.rest);
    let printed_fac = factor_cyclotomic(&rest);
    let mut printed_factors = factors_of(row.factors);
    for (&n, &e) in &printed_fac.factors {
        *printed_factors.entry(n).or_insert(0) += e;
    }
    let mut discrepancies = Vec::new();
    let printed_product = &cyclo_product(&factors_of(row.factors)) * &rest;
    if printed_fac.remainder != fac.remainder {
        discrepancies.push(note(
            "salem_factor",
            &printed_fac.remainder,
            &fac.remainder,
            if printed_product != f {
                DiscrepancyKind::PrintedProductInconsistent
            } else {
                DiscrepancyKind::Mismatch
            },
        ));
    }
    if printed_factors != fac.factors {
        discrepancies.push(note(
            "cyclotomic_factors",
            show_factors(&printed_factors),
            show_factors(&fac.factors),
            if printed_product != f {
                DiscrepancyKind::PrintedProductInconsistent
            } else {
                DiscrepancyKind::Mismatch
            },
        ));
    }
    let r = spectral_radius(&p, &tol);
    let printed = decimal(row.rho);
    let close = |x: &Rational| (x - &printed).abs() <= half_unit;
    if !(close(&r.lo) && close(&r.hi)) {
        let truncated = truncate(&r.lo, 4) == printed && truncate(&r.hi, 4) == printed;
        discrepancies.push(note(
            "rho",
            row.rho,
            format_decimal(&r.lo, 6),
            if truncated {
                DiscrepancyKind::RadiusTruncated
            } else if adjacent_swap(&format_decimal(&r.lo, 4), row.rho) {
                DiscrepancyKind::DigitTransposition
            } else {
                DiscrepancyKind::Mismatch
            },
        ));
    }
    let index = p
        .dynkin_label()
        .expect("critical sequences are wild")
        .index();
    if index != row.index {
        discrepancies.push(note(
            "dynkin_index",
            row.index,
            index,
            DiscrepancyKind::Mismatch,
        ));
    }
    Table1Row {
        weight: p.clone(),
        factorization: fac.to_string(),
        salem_factor: small_coeffs(&fac.remainder),
        printed_salem_factor: small_coeffs(&printed_fac.remainder),
        printed_factorization: CycloFactorization {
            factors: factors_of(row.factors),
            remainder: rest.clone(),
        }
        .to_string(),
        rho: format_decimal(&r.lo, 4),
        rho_interval: (r.lo.to_string(), r.hi.to_string()),
        rho_mode: r.mode,
        printed_rho: row.rho.to_string(),
        dynkin_index: index,
        printed_dynkin_index: row.index,
        off_circle_count: off_circle_count(&p),
        discrepancies,
    }
}

// ---------------------------------------------------------------- Table 2

/// Row mark in Table 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mark {
    /// Arnold's exceptional unimodal singularities.
    Bullet,
    /// The hypersurface cases with at least four weights.
    Square,
    None,
}

struct Printed2 {
    mark: Mark,
    weight: &'static [u32],
    factors: &'static [(usize, u32)],
    d: &'static [u32],
    c: &'static [u32],
    /// `None` for an infinite period.
    period: Option<u64>,
}

const fn r2(
    mark: Mark,
    weight: &'static [u32],
    factors: &'static [(usize, u32)],
    d: &'static [u32],
    c: &'static [u32],
    period: Option<u64>,
) -> Printed2 {
    Printed2 {
        mark,
        weight,
        factors,
        d,
        c,
        period,
    }
}

use Mark::{Bullet, Square};

const TABLE2: [Printed2; 38] = [
    r2(
        Bullet,
        &[2, 3, 7],
        &[(42, 1)],
        &[6, 14, 21],
        &[42],
        Some(42),
    ),
    r2(
        Bullet,
        &[2, 3, 8],
        &[(2, 1), (10, 1), (30, 1)],
        &[6, 8, 15],
        &[30],
        Some(30),
    ),
    r2(
        Bullet,
        &[2, 3, 9],
        &[(3, 1), (12, 1), (24, 1)],
        &[6, 8, 9],
        &[24],
        Some(24),
    ),
    r2(
        Mark::None,
        &[2, 3, 10],
        &[(2, 1), (16, 1), (18, 1)],
        &[6, 8, 9, 10],
        &[16, 18],
        Some(72),
    ),
    r2(
        Bullet,
        &[2, 4, 5],
        &[(2, 1), (6, 1), (30, 1)],
        &[4, 10, 15],
        &[30],
        Some(30),
    ),
    r2(
        Bullet,
        &[2, 4, 6],
        &[(2, 2), (22, 1)],
        &[4, 6, 11],
        &[22],
        Some(22),
    ),
    r2(
        Bullet,
        &[2, 4, 7],
        &[(2, 1), (9, 1), (18, 1)],
        &[4, 6, 7],
        &[18],
        Some(18),
    ),
    r2(
        Mark::None,
        &[2, 4, 8],
        &[(2, 2), (4, 1), (12, 1), (14, 1)],
        &[4, 6, 7, 8],
        &[12, 14],
        Some(84),
    ),
    r2(
        Bullet,
        &[2, 5, 5],
        &[(5, 1), (20, 1)],
        &[4, 5, 10],
        &[20],
        Some(20),
    ),
    r2(
        Bullet,
        &[2, 5, 6],
        &[(2, 1), (8, 1), (16, 1)],
        &[4, 5, 6],
        &[16],
        Some(16),
    ),
    r2(
        Mark::None,
        &[2, 5, 7],
        &[(11, 1), (12, 1)],
        &[4, 5, 6, 7],
        &[11, 12],
        Some(132),
    ),
    r2(
        Mark::None,
        &[2, 6, 6],
        &[(2, 2), (3, 1), (6, 1), (10, 1), (12, 1)],
        &[4, 5, 6, 6],
        &[10, 12],
        Some(60),
    ),
    r2(
        Bullet,
        &[3, 3, 4],
        &[(3, 1), (24, 1)],
        &[3, 8, 12],
        &[24],
        Some(24),
    ),
    r2(
        Bullet,
        &[3, 3, 5],
        &[(2, 1), (3, 1), (6, 1), (18, 1)],
        &[3, 5, 9],
        &[18],
        Some(18),
    ),
    r2(
        Bullet,
        &[3, 3, 6],
        &[(3, 2), (15, 1)],
        &[3, 5, 6],
        &[15],
        Some(15),
    ),
    r2(
        Mark::None,
        &[3, 3, 7],
        &[(2, 1), (3, 1), (4, 1), (10, 1), (12, 1)],
        &[3, 5, 6, 7],
        &[10, 12],
        Some(60),
    ),
    r2(
        Bullet,
        &[3, 4, 4],
        &[(2, 1), (4, 1), (16, 1)],
        &[3, 4, 8],
        &[16],
        Some(16),
    ),
    r2(Bullet, &[3, 4, 5], &[(13, 1)], &[3, 4, 5], &[13], Some(13)),
    r2(
        Mark::None,
        &[3, 4, 6],
        &[(2, 1), (3, 1), (9, 1), (10, 1)],
        &[3, 4, 5, 6],
        &[9, 10],
        Some(90),
    ),
    r2(
        Mark::None,
        &[3, 5, 5],
        &[(2, 1), (5, 1), (8, 1), (10, 1)],
        &[3, 4, 5, 5],
        &[8, 10],
        Some(40),
    ),
    r2(
        Bullet,
        &[4, 4, 4],
        &[(2, 2), (4, 2), (6, 1), (12, 1)],
        &[3, 4, 4],
        &[12],
        Some(12),
    ),
    r2(
        Mark::None,
        &[4, 4, 5],
        &[(2, 1), (4, 1), (8, 1), (9, 1)],
        &[3, 4, 4, 5],
        &[8, 9],
        Some(72),
    ),
    r2(
        Square,
        &[2, 2, 2, 3],
        &[(2, 2), (18, 1)],
        &[2, 6, 9],
        &[18],
        Some(18),
    ),
    r2(
        Square,
        &[2, 2, 2, 4],
        &[(2, 2), (14, 1)],
        &[2, 4, 7],
        &[14],
        Some(14),
    ),
    r2(
        Square,
        &[2, 2, 2, 5],
        &[(2, 2), (3, 1), (6, 1), (12, 1)],
        &[2, 4, 5],
        &[12],
        Some(12),
    ),
    r2(
        Mark::None,
        &[2, 2, 2, 6],
        &[(2, 2), (8, 1), (10, 1)],
        &[2, 4, 5, 6],
        &[8, 10],
        Some(40),
    ),
    r2(
        Square,
        &[2, 2, 3, 3],
        &[(2, 1), (3, 1), (4, 1), (12, 1)],
        &[2, 3, 6],
        &[12],
        Some(12),
    ),
    r2(
        Square,
        &[2, 2, 3, 4],
        &[(2, 2), (5, 1), (10, 1)],
        &[2, 3, 4],
        &[10],
        Some(10),
    ),
    r2(
        Mark::None,
        &[2, 2, 3, 5],
        &[(2, 1), (7, 1), (8, 1)],
        &[2, 3, 4, 5],
        &[7, 8],
        Some(56),
    ),
    r2(
        Mark::None,
        &[2, 2, 4, 4],
        &[(2, 2), (4, 1), (6, 1), (8, 1)],
        &[2, 3, 4, 4],
        &[6, 8],
        Some(24),
    ),
    r2(
        Square,
        &[2, 3, 3, 3],
        &[(3, 2), (9, 1)],
        &[2, 3, 3],
        &[9],
        Some(9),
    ),
    r2(
        Mark::None,
        &[2, 3, 3, 4],
        &[(2, 1), (3, 1), (6, 1), (7, 1)],
        &[2, 3, 3, 4],
        &[6, 7],
        Some(42),
    ),
    r2(
        Mark::None,
        &[3, 3, 3, 3],
        &[(2, 1), (3, 3), (6, 2)],
        &[2, 3, 3, 3],
        &[6, 6],
        None,
    ),
    r2(
        Square,
        &[2, 2, 2, 2, 2],
        &[(2, 4), (10, 1)],
        &[2, 2, 5],
        &[10],
        Some(10),
    ),
    r2(
        Square,
        &[2, 2, 2, 2, 3],
        &[(2, 3), (4, 1), (8, 1)],
        &[2, 2, 3],
        &[8],
        Some(8),
    ),
    r2(
        Mark::None,
        &[2, 2, 2, 2, 4],
        &[(2, 2), (3, 1), (6, 2)],
        &[2, 2, 3, 4],
        &[6, 6],
        None,
    ),
    r2(
        Mark::None,
        &[2, 2, 2, 3, 3],
        &[(2, 2), (3, 1), (5, 1), (6, 1)],
        &[2, 2, 3, 3],
        &[5, 6],
        Some(30),
    ),
    r2(
        Mark::None,
        &[2, 2, 2, 2, 2, 2],
        &[(2, 5), (4, 1), (6, 1)],
        &[2, 2, 2, 3],
        &[4, 6],
        Some(12),
    ),
];

#[derive(Clone, Debug, Serialize)]
pub struct Table2Row {
    pub mark: Mark,
    pub weight: WeightSequence,
    pub factorization: String,
    pub factors: BTreeMap<usize, u32>,
    pub decomposition: Option<GeneratedForm>,
    pub period: Period,
    pub printed_factorization: String,
    pub printed_decomposition: GeneratedForm,
    pub printed_period: Period,
    pub discrepancies: Vec<Discrepancy>,
}

fn printed_period(p: Option<u64>) -> Period {
    p.map_or(Period::Infinite, Period::Finite)
}

pub fn table2() -> Vec<Table2Row> {
    TABLE2.iter().map(table2_row).collect()
}

fn table2_row(row: &Printed2) -> Table2Row {
    let p = WeightSequence::of(row.weight);
    let f = extended_coxeter_poly(&p);
    let fac = factor_cyclotomic(&f);
    let decomposition = decomposition_from(&p, &fac);
    let period = period_from(&p, &fac);
    let printed_factors = factors_of(row.factors);
    let printed_form = GeneratedForm {
        d: row.d.to_vec(),
        c: row.c.to_vec(),
    };
    let mut discrepancies = Vec::new();
    if printed_factors != fac.factors || !fac.is_fully_cyclotomic() {
        let consistent = cyclo_product(&printed_factors) == f;
        discrepancies.push(note(
            "factorization",
            show_factors(&printed_factors),
            &fac,
            if consistent || fac.product() != f {
                DiscrepancyKind::Mismatch
            } else {
                DiscrepancyKind::PrintedProductInconsistent
            },
        ));
    }
    let same_form = decomposition.as_ref().is_some_and(|g| {
        multiset(&g.d) == multiset(&printed_form.d) && multiset(&g.c) == multiset(&printed_form.c)
    });
    if !same_form {
        let shown = decomposition.as_ref().map_or("none".to_string(), show_form);
        discrepancies.push(note(
            "decomposition",
            show_form(&printed_form),
            shown,
            DiscrepancyKind::Mismatch,
        ));
    }
    let printed = printed_period(row.period);
    if printed != period {
        let lcm = Period::Finite(fac.lcm_of_indices() as u64);
        let kind = if period == lcm {
            DiscrepancyKind::PeriodFromLcm
        } else {
            DiscrepancyKind::Mismatch
        };
        discrepancies.push(note("period", printed, period, kind));
    }
    Table2Row {
        mark: row.mark,
        weight: p,
        factorization: fac.to_string(),
        factors: fac.factors.clone(),
        decomposition,
        period,
        printed_factorization: show_factors(&printed_factors),
        printed_decomposition: printed_form,
        printed_period: printed,
        discrepancies,
    }
}

pub fn show_form(g: &GeneratedForm) -> String {
    let join = |v: &[u32]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("({}) ({})", join(&g.d), join(&g.c))
}

// ---------------------------------------------------------------- Table 3

struct Printed3 {
    weight: &'static [u32],
    frobenius: u64,
    generators: &'static [u64],
}

const fn r3(weight: &'static [u32], frobenius: u64, generators: &'static [u64]) -> Printed3 {
    Printed3 {
        weight,
        frobenius,
        generators,
    }
}

/// Finite-weight rows in printed order; rows with an infinite weight are left out.
const TABLE3: [Printed3; 32] = [
    r3(&[2, 3, 7], 43, &[6, 14, 21]),
    r3(&[2, 3, 8], 25, &[6, 8, 15]),
    r3(&[2, 3, 9], 19, &[6, 8, 9]),
    r3(&[2, 3, 10], 13, &[6, 8, 9, 10]),
    r3(&[2, 3, 11], 13, &[6, 8, 9, 10, 11]),
    r3(&[2, 3, 12], 13, &[6, 8, 9, 10, 11]),
    r3(&[2, 3, 13], 7, &[6, 8, 9, 10, 11, 13]),
    r3(&[2, 4, 5], 21, &[4, 10, 15]),
    r3(&[2, 4, 6], 13, &[4, 6, 11]),
    r3(&[2, 4, 7], 9, &[4, 6, 7]),
    r3(&[2, 4, 8], 9, &[4, 6, 7]),
    r3(&[2, 4, 9], 5, &[4, 6, 7, 9]),
    r3(&[2, 5, 5], 11, &[4, 5]),
    r3(&[2, 5, 6], 7, &[4, 5, 6]),
    r3(&[2, 5, 7], 3, &[4, 5, 6, 7]),
    r3(&[2, 6, 6], 7, &[4, 5, 6]),
    r3(&[2, 6, 7], 3, &[4, 5, 6, 7]),
    r3(&[3, 3, 4], 13, &[3, 8]),
    r3(&[3, 3, 5], 7, &[3, 5]),
    r3(&[3, 3, 6], 7, &[3, 5]),
    r3(&[3, 3, 7], 4, &[3, 5, 7]),
    r3(&[3, 3, 4], 5, &[3, 4]),
    r3(&[3, 3, 5], 2, &[3, 4, 5]),
    r3(&[4, 4, 4], 5, &[3, 4]),
    r3(&[4, 4, 5], 2, &[3, 4, 5]),
    r3(&[2, 2, 2, 3], 7, &[2, 9]),
    r3(&[2, 2, 2, 4], 5, &[2, 7]),
    r3(&[2, 2, 2, 5], 3, &[2, 5]),
    r3(&[2, 2, 3, 3], 1, &[2, 3]),
    r3(&[2, 2, 2, 2, 2], 3, &[2, 5]),
    r3(&[2, 2, 2, 2, 3], 1, &[2, 3]),
    r3(&[2, 2, 2, 2, 2, 2], 1, &[2, 3]),
];

#[derive(Clone, Debug, Serialize)]
pub struct Table3Row {
    pub weight: WeightSequence,
    pub monoid: NumericalSemigroup,
    pub printed_frobenius: u64,
    pub printed_generators: Vec<u64>,
    /// Set when the printed label already appeared on an earlier row.
    pub label_collision: bool,
    pub discrepancies: Vec<Discrepancy>,
}

pub fn table3() -> Result<Vec<Table3Row>> {
    (0..TABLE3.len()).map(table3_row).collect()
}

fn table3_row(i: usize) -> Result<Table3Row> {
    let row = &TABLE3[i];
    let p = WeightSequence::of(row.weight);
    let collision = TABLE3[..i].iter().any(|r| r.weight == row.weight);
    let monoid = support_monoid(&p)?;
    let mut discrepancies = Vec::new();
    let kind = if collision {
        DiscrepancyKind::LabelCollision
    } else {
        DiscrepancyKind::Mismatch
    };
    if monoid.frobenius != row.frobenius {
        discrepancies.push(note("frobenius", row.frobenius, monoid.frobenius, kind));
    }
    if monoid.generators != row.generators {
        discrepancies.push(note(
            "generators",
            format!("{:?}", row.generators),
            format!("{:?}", monoid.generators),
            kind,
        ));
    }
    Ok(Table3Row {
        weight: p,
        monoid,
        printed_frobenius: row.frobenius,
        printed_generators: row.generators.to_vec(),
        label_collision: collision,
        discrepancies,
    })
}

/// Discrepancies on the printed rows labelled `p` in Tables 1 to 3, tagged with the table number.
pub fn discrepancies_for(p: &WeightSequence) -> Result<Vec<(u8, Discrepancy)>> {
    let mut out = Vec::new();
    for row in TABLE1.iter().filter(|r| r.weight == p.parts()) {
        out.extend(table1_row(row).discrepancies.into_iter().map(|d| (1, d)));
    }
    for row in TABLE2.iter().filter(|r| r.weight == p.parts()) {
        out.extend(table2_row(row).discrepancies.into_iter().map(|d| (2, d)));
    }
    for i in (0..TABLE3.len()).filter(|&i| TABLE3[i].weight == p.parts()) {
        out.extend(table3_row(i)?.discrepancies.into_iter().map(|d| (3, d)));
    }
    Ok(out)
}

// ---------------------------------------------------------------- Tables 4 and 5

#[derive(Clone, Debug, Serialize)]
pub struct HypersurfaceRow {
    pub printed: HypersurfaceRecord,
    pub homogeneous: bool,
    pub degree_sum: bool,
    pub hilbert_series: bool,
    /// The derived repair, when the printed record fails a check.
    pub corrected: Option<HypersurfaceRecord>,
}

/// Rows of Table 4 (`which = 4`) or Table 5 (`which = 5`).
pub fn hypersurface_table(which: u8) -> Vec<HypersurfaceRow> {
    let corrected = corrected_registry();
    registry()
        .into_iter()
        .zip(corrected)
        .filter(|(r, _)| r.table == which)
        .map(|(r, c)| {
            let v = verify_record(&r);
            HypersurfaceRow {
                homogeneous: v.homogeneous,
                degree_sum: v.degree_sum,
                hilbert_series: v.hilbert_series,
                corrected: (c != r).then_some(c),
                printed: r,
            }
        })
        .collect()
}

// ---------------------------------------------------------------- rendering

/// A rectangular table of display strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rendered {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Output format for [`Rendered`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl Rendered {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let err = |e: csv::Error| Error::Parse(e.to_string());
                w.write_record(&self.headers).map_err(err)?;
                for r in &self.rows {
                    w.write_record(r).map_err(err)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
            }
            Format::Json => {
                let rows: Vec<BTreeMap<&str, &str>> = self
                    .rows
                    .iter()
                    .map(|r| {
                        self.headers
                            .iter()
                            .map(String::as_str)
                            .zip(r.iter().map(String::as_str))
                            .collect()
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).map_err(|e| Error::Parse(e.to_string()))
            }
            Format::Markdown => Ok(self.to_string()),
        }
    }
}

impl fmt::Display for Rendered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "**{}**", self.title)?;
        writeln!(f)?;
        writeln!(f, "| {} |", self.headers.join(" | "))?;
        writeln!(f, "|{}", "---|".repeat(self.headers.len()))?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
            writeln!(f, "| {} |", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// `computed`, or `computed [printed: x]` when the field disagrees.
fn cell(computed: impl ToString, field: &str, ds: &[Discrepancy]) -> String {
    match ds.iter().find(|d| d.field == field) {
        Some(d) => format!("{} [printed: {}]", computed.to_string(), d.printed),
        None => computed.to_string(),
    }
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Table `which` (1 to 5), recomputed.
pub fn render_table(which: u8) -> Result<Rendered> {
    match which {
        1 => Ok(Rendered {
            title: "Table 1. Critical weight sequences".into(),
            headers: strings(&[
                "weight",
                "factorization",
                "rho",
                "dynkin_index",
                "off_circle",
                "flags",
            ]),
            rows: table1()
                .into_iter()
                .map(|r| {
                    let typo = r
                        .discrepancies
                        .iter()
                        .any(|d| d.field == "salem_factor" || d.field == "cyclotomic_factors");
                    let factor = if typo {
                        format!("{} [printed: {}]", r.factorization, r.printed_factorization)
                    } else {
                        r.factorization.clone()
                    };
                    vec![
                        r.weight.to_string(),
                        factor,
                        cell(&r.rho, "rho", &r.discrepancies),
                        cell(r.dynkin_index, "dynkin_index", &r.discrepancies),
                        r.off_circle_count.to_string(),
                        flags(&r.discrepancies),
                    ]
                })
                .collect(),
        }),
        2 => Ok(Rendered {
            title: "Table 2. Weights with spectral radius 1".into(),
            headers: strings(&[
                "mark",
                "weight",
                "factorization",
                "poincare",
                "period",
                "flags",
            ]),
            rows: table2()
                .into_iter()
                .map(|r| {
                    let mark = match r.mark {
                        Mark::Bullet => "*",
                        Mark::Square => "#",
                        Mark::None => "",
                    };
                    let form = r.decomposition.as_ref().map_or("none".into(), show_form);
                    vec![
                        mark.to_string(),
                        r.weight.to_string(),
                        cell(&r.factorization, "factorization", &r.discrepancies),
                        cell(form, "decomposition", &r.discrepancies),
                        cell(r.period, "period", &r.discrepancies),
                        flags(&r.discrepancies),
                    ]
                })
                .collect(),
        }),
        3 => Ok(Rendered {
            title: "Table 3. Support monoids".into(),
            headers: strings(&["weight", "frobenius", "generators", "flags"]),
            rows: table3()?
                .into_iter()
                .map(|r| {
                    let gens: Vec<String> =
                        r.monoid.generators.iter().map(|g| g.to_string()).collect();
                    vec![
                        r.weight.to_string(),
                        cell(r.monoid.frobenius, "frobenius", &r.discrepancies),
                        cell(
                            format!("{{{}}}", gens.join(",")),
                            "generators",
                            &r.discrepancies,
                        ),
                        flags(&r.discrepancies),
                    ]
                })
                .collect(),
        }),
        4 | 5 => Ok(Rendered {
            title: format!("Table {which}. Hypersurface presentations"),
            headers: strings(&["weight", "degrees", "relation", "degF", "name", "flags"]),
            rows: hypersurface_table(which)
                .into_iter()
                .map(|r| {
                    let [a, b, c] = r.printed.gen_degrees;
                    let mut fl = Vec::new();
                    if !r.homogeneous {
                        fl.push("inhomogeneous".to_string());
                    }
                    if !r.degree_sum {
                        fl.push("degree_sum_mismatch".to_string());
                    }
                    if !r.hilbert_series {
                        fl.push("hilbert_series_mismatch".to_string());
                    }
                    let (rel, deg) = match &r.corrected {
                        Some(c) => {
                            fl.push("derived_correction".to_string());
                            (
                                format!("{} [printed: {}]", c.relation, r.printed.relation),
                                if c.rel_degree != r.printed.rel_degree {
                                    format!("{} [printed: {}]", c.rel_degree, r.printed.rel_degree)
                                } else {
                                    c.rel_degree.to_string()
                                },
                            )
                        }
                        None => (
                            r.printed.relation.to_string(),
                            r.printed.rel_degree.to_string(),
                        ),
                    };
                    vec![
                        r.printed.weight.to_string(),
                        format!("{a},{b},{c}"),
                        rel,
                        deg,
                        r.printed.name.clone(),
                        fl.join(";"),
                    ]
                })
                .collect(),
        }),
        _ => Err(Error::Unsupported(format!("there is no table {which}"))),
    }
}

fn flags(ds: &[Discrepancy]) -> String {
    let mut kinds: Vec<String> = ds
        .iter()
        .map(|d| {
            serde_json::to_value(d.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default()
        })
        .collect();
    kinds.dedup();
    kinds.join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        assert_eq!(
            decimal("1.1064"),
            Rational::new(BigInt::from(11064), BigInt::from(10000))
        );
        let x = Rational::new(BigInt::from(110647), BigInt::from(100000));
        assert_eq!(format_decimal(&x, 4), "1.1065");
        assert_eq!(truncate(&x, 4), decimal("1.1064"));
        assert_eq!(
            format_decimal(&Rational::from_integer(BigInt::from(2)), 3),
            "2.000"
        );
        assert!(adjacent_swap("1.2175", "1.2715"));
        assert!(!adjacent_swap("1.2175", "1.2175"));
        assert!(!adjacent_swap("1.2175", "1.7125"));
    }

    #[test]
    fn formats() {
        let t = Rendered {
            title: "t".into(),
            headers: strings(&["a", "b"]),
            rows: vec![strings(&["1", "x|y"])],
        };
        assert_eq!(t.render(Format::Csv).unwrap(), "a,b\n1,x|y\n");
        assert!(t.render(Format::Markdown).unwrap().contains("x\\|y"));
        let v: serde_json::Value = serde_json::from_str(&t.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v[0]["b"], "x|y");
        assert!("xml".parse::<Format>().is_err());
        assert!(render_table(6).is_err());
    }
}
