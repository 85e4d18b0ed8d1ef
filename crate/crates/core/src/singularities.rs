//! Hypersurface presentations `k[X,Y,Z]/(F)` of the formally 3-generated cases,
//! as printed, with degree and Hilbert series checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poincare::{poincare_closed, GeneratedForm};
use crate::WeightSequence;

/// `coeff * X^a Y^b Z^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub coeff: i64,
    pub exps: [u32; 3],
}

impl Monomial {
    pub fn weighted_degree(&self, deg: [u32; 3]) -> u32 {
        self.exps.iter().zip(deg).map(|(e, d)| e * d).sum()
    }
}

fn write_powers(f: &mut fmt::Formatter<'_>, exps: [u32; 3]) -> fmt::Result {
    for (v, e) in ["X", "Y", "Z"].iter().zip(exps) {
        match e {
            0 => {}
            1 => write!(f, "{v}")?,
            _ => write!(f, "{v}^{e}")?,
        }
    }
    Ok(())
}

/// A relation written like `Z^2-Y^2Z+X^4Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation(pub Vec<Monomial>);

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if m.coeff < 0 {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if m.coeff.abs() != 1 {
                write!(f, "{}", m.coeff.abs())?;
            }
            write_powers(f, m.exps)?;
        }
        Ok(())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("relation {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut chars = s.chars().peekable();
        while chars.peek().is_some() {
            let mut sign = 1;
            if let Some(&c) = chars.peek() {
                if c == '+' || c == '-' {
                    sign = if c == '-' { -1 } else { 1 };
                    chars.next();
                }
            }
            let mut digits = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                digits.push(c);
                chars.next();
            }
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let mut exps = [0u32; 3];
            let mut any = false;
            while let Some(&c) = chars.peek().filter(|c| matches!(c, 'X' | 'Y' | 'Z')) {
                chars.next();
                let slot = (c as u8 - b'X') as usize;
                let mut e = 1;
                if chars.peek() == Some(&'^') {
                    chars.next();
                    let mut d = String::new();
                    while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                        d.push(c);
                        chars.next();
                    }
                    e = d.parse().map_err(|_| bad())?;
                }
                exps[slot] += e;
                any = true;
            }
            if !any && digits.is_empty() {
                return Err(bad());
            }
            terms.push(Monomial {
                coeff: sign * coeff,
                exps,
            });
        }
        if terms.is_empty() {
            return Err(bad());
        }
        Ok(Relation(terms))
    }
}

/// Where a record's data comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Printed,
    /// Minimal edit of a printed record that fails its checks.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceRecord {
    pub weight: WeightSequence,
    pub gen_degrees: [u32; 3],
    pub relation: Relation,
    pub rel_degree: u32,
    pub name: String,
    /// 4 for the triangle singularities, 5 for `t >= 4`.
    pub table: u8,
    pub provenance: Provenance,
}

impl HypersurfaceRecord {
    pub fn generated_form(&self) -> GeneratedForm {
        let mut d = self.gen_degrees.to_vec();
        d.sort_unstable();
        GeneratedForm {
            d,
            c: vec![self.rel_degree],
        }
    }
}

/// Outcome of the three record checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    /// Every monomial has weighted degree `rel_degree`.
    pub homogeneous: bool,
    /// `1 + d_1 + d_2 + d_3 = rel_degree`.
    pub degree_sum: bool,
    /// `(1 - T^c) / prod (1 - T^{d_i})` is the Poincaré series of the weight.
    pub hilbert_series: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.degree_sum && self.hilbert_series
    }
}

pub fn verify_record(r: &HypersurfaceRecord) -> Verification {
    let homogeneous = r
        .relation
        .0
        .iter()
        .all(|m| m.weighted_degree(r.gen_degrees) == r.rel_degree);
    let degree_sum = 1 + r.gen_degrees.iter().sum::<u32>() == r.rel_degree;
    let hilbert_series = r.generated_form().to_ratfunc() == poincare_closed(&r.weight);
    Verification {
        homogeneous,
        degree_sum,
        hilbert_series,
    }
}

const PRINTED: [(&[u32], [u32; 3], &str, u32, &str, u8); 22] = [
    (&[2, 3, 7], [6, 14, 21], "Z^2+Y^3+X^7", 42, "E_12", 4),
    (&[2, 3, 8], [6, 8, 15], "Z^2+X^5+XY^3", 30, "Z_11", 4),
    (&[2, 3, 9], [6, 8, 9], "Z^2+XZ^2+X^4", 36, "Q_10", 4),
    (&[2, 4, 5], [4, 10, 15], "Z^2+Y^3+X^5Y", 30, "E_13", 4),
    (&[2, 4, 6], [4, 6, 11], "Z^2+X^4Y+ZY^3", 22, "Z_12", 4),
    (&[2, 4, 7], [4, 6, 7], "Y^3+X^3Y+XZ^2", 18, "Q_11", 4),
    (&[2, 5, 5], [4, 5, 10], "Z^2+Y^2Z+X^5", 20, "W_12", 4),
    (&[2, 5, 6], [4, 5, 6], "XZ^2+Y^2Z+X^4", 16, "S_11", 4),
    (&[3, 3, 4], [3, 8, 12], "Z^2+Y^3+X^4Z", 24, "E_14", 4),
    (&[3, 3, 5], [3, 5, 9], "Z^2+XY^3+X^3Z", 18, "Z_13", 4),
    (&[3, 3, 6], [3, 5, 6], "Y^3+X^3Z+XZ^2", 15, "Q_12", 4),
    (&[3, 4, 4], [3, 4, 8], "Z^2-Y^2Z+X^4Y", 16, "W_13", 4),
    (&[3, 4, 5], [3, 4, 5], "X^3Y+XZ^2+Y^2Z", 13, "S_12", 4),
    (&[4, 4, 4], [3, 4, 4], "X^4-YZ^2+Y^2Z", 12, "U_12", 4),
    (&[2, 2, 2, 3], [2, 6, 9], "Z^2+Y^3+X^9", 18, "J_3,0", 5),
    (&[2, 2, 2, 4], [2, 4, 7], "Z^2+XY^3+X^7", 14, "Z_1,0", 5),
    (&[2, 2, 2, 5], [2, 4, 5], "Y^3+XZ^2+X^6", 12, "Q_2,0", 5),
    (&[2, 2, 3, 3], [2, 3, 6], "Z^2+Y^4+X^6", 12, "W_1,0", 5),
    (&[2, 2, 3, 4], [2, 3, 4], "Y^2Z+XZ^2+X^5", 10, "S_1,0", 5),
    (&[2, 3, 3, 3], [2, 3, 3], "Z^3+Y^3+X^3Y", 9, "U_1,0", 5),
    (
        &[2, 2, 2, 2, 2],
        [2, 2, 5],
        "Z^2+Y^5+X^5",
        10,
        "NA^1_0,0",
        5,
    ),
    (
        &[2, 2, 2, 2, 3],
        [2, 2, 3],
        "YZ^2+Y^4+X^4",
        8,
        "VNA^1_0,0",
        5,
    ),
];

/// The 22 records exactly as printed, 14 with `t = 3` followed by 8 with `t >= 4`.
pub fn registry() -> Vec<HypersurfaceRecord> {
    PRINTED
        .iter()
        .map(
            |&(w, gen_degrees, rel, rel_degree, name, table)| HypersurfaceRecord {
                weight: WeightSequence::of(w),
                gen_degrees,
                relation: rel.parse().expect("registry relations parse"),
                rel_degree,
                name: name.to_string(),
                table,
                provenance: Provenance::Printed,
            },
        )
        .collect()
}

pub fn lookup(p: &WeightSequence) -> Option<HypersurfaceRecord> {
    registry().into_iter().find(|r| &r.weight == p)
}

/// Exponent vectors of weighted degree `c`.
fn monomials_of_degree(deg: [u32; 3], c: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=c / deg[0] {
        for b in 0..=(c - a * deg[0]) / deg[1] {
            let rest = c - a * deg[0] - b * deg[1];
            if rest.is_multiple_of(deg[2]) {
                out.push([a, b, rest / deg[2]]);
            }
        }
    }
    out
}

/// Repair a record failing its checks: the relation degree becomes `1 + sum d_i`, and
/// each monomial of the wrong degree is replaced by the closest (in exponent distance,
/// then lexicographically) monomial of that degree not already in the relation.
///
/// `None` when the record already passes or no replacement exists.
pub fn derived_correction(r: &HypersurfaceRecord) -> Option<HypersurfaceRecord> {
    if verify_record(r).passed() {
        return None;
    }
    let c = 1 + r.gen_degrees.iter().sum::<u32>();
    let mut terms = r.relation.0.clone();
    for i in 0..terms.len() {
        if terms[i].weighted_degree(r.gen_degrees) == c {
            continue;
        }
        let old = terms[i].exps;
        let best = monomials_of_degree(r.gen_degrees, c)
            .into_iter()
            .filter(|e| terms.iter().all(|m| m.exps != *e))
            .min_by_key(|e| {
                let dist: u32 = e.iter().zip(old).map(|(&x, y)| x.abs_diff(y)).sum();
                (dist, *e)
            })?;
        terms[i].exps = best;
    }
    let fixed = HypersurfaceRecord {
        relation: Relation(terms),
        rel_degree: c,
        provenance: Provenance::Derived,
        ..r.clone()
    };
    verify_record(&fixed).passed().then_some(fixed)
}

/// Printed records, with failing ones replaced by their derived corrections.
pub fn corrected_registry() -> Vec<HypersurfaceRecord> {
    registry()
        .into_iter()
        .map(|r| derived_correction(&r).unwrap_or(r))
        .collect()
}

/// `9 <= sum p_i <= 11`, for wild `p` with at least four weights.
pub fn t4_criterion(p: &WeightSequence) -> Result<bool> {
    p.require_wild()?;
    if p.len() < 4 {
        return Err(Error::Unsupported(format!(
            "{p} has fewer than four weights"
        )));
    }
    Ok((9..=11).contains(&p.sum()))
}

#[derive(Serialize)]
struct Row {
    weight: String,
    degrees: String,
    relation: String,
    #[serde(rename = "degF")]
    deg_f: u32,
    name: String,
    flags: String,
}

fn row(r: &HypersurfaceRecord) -> Row {
    let v = verify_record(r);
    let mut flags = vec![match r.provenance {
        Provenance::Printed => "printed",
        Provenance::Derived => "derived",
    }];
    if !v.homogeneous {
        flags.push("inhomogeneous");
    }
    if !v.degree_sum {
        flags.push("degree_sum_mismatch");
    }
    if !v.hilbert_series {
        flags.push("hilbert_series_mismatch");
    }
    let [a, b, c] = r.gen_degrees;
    Row {
        weight: r.weight.to_string(),
        degrees: format!("{a},{b},{c}"),
        relation: r.relation.to_string(),
        deg_f: r.rel_degree,
        name: r.name.clone(),
        flags: flags.join(";"),
    }
}

pub fn registry_csv(records: &[HypersurfaceRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(row(r))
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn registry_json(records: &[HypersurfaceRecord]) -> Result<String> {
    let rows: Vec<Row> = records.iter().map(row).collect();
    serde_json::to_string_pretty(&rows).map_err(|e| Error::Parse(e.to_string()))
}
