//! A per-weight record combining every computed invariant, with a stable JSON form.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::coxeter::{coxeter_report, Period, RadiusMode};
use crate::error::{Error, Result};
use crate::poincare::{
    decomposition_from, poincare_closed, support_monoid, GeneratedForm, NumericalSemigroup,
};
use crate::ratfunc::RatFunc;
use crate::singularities::{corrected_registry, lookup, Provenance};
use crate::tables::{discrepancies_for, format_decimal, Discrepancy};
use crate::weights::ReprType;
use crate::{IntPoly, Rational, WeightSequence};

/// The JSON marker for a field that only makes sense for wild weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotApplicable {
    #[serde(rename = "not-applicable")]
    Marker,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Applicable<T> {
    NotApplicable(NotApplicable),
    Value(T),
}

impl<T> Applicable<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Applicable::Value(v) => Some(v),
            Applicable::NotApplicable(_) => None,
        }
    }

    fn when(wild: bool, f: impl FnOnce() -> Result<T>) -> Result<Self> {
        Ok(if wild {
            Applicable::Value(f()?)
        } else {
            Applicable::NotApplicable(NotApplicable::Marker)
        })
    }
}

impl<T: fmt::Display> fmt::Display for Applicable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicable::Value(v) => v.fmt(f),
            Applicable::NotApplicable(_) => write!(f, "not applicable"),
        }
    }
}

/// Coefficients low degree first, plus the pretty form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub coeffs: Vec<i64>,
    pub pretty: String,
}

impl PolyRecord {
    pub fn new(p: &IntPoly) -> Result<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::Unsupported(format!("coefficient {c} exceeds 64 bits")))
            })
            .collect::<Result<_>>()?;
        Ok(PolyRecord {
            coeffs,
            pretty: p.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloFactor {
    pub index: usize,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub cyclotomic: Vec<CycloFactor>,
    pub remainder: PolyRecord,
    pub pretty: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusRecord {
    /// Four decimals, rounded.
    pub decimal: String,
    pub lo: String,
    pub hi: String,
    pub mode: RadiusMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncRecord {
    pub numerator: PolyRecord,
    pub denominator: PolyRecord,
    pub pretty: String,
}

impl RatFuncRecord {
    fn new(r: &RatFunc) -> Result<Self> {
        Ok(RatFuncRecord {
            numerator: PolyRecord::new(r.num())?,
            denominator: PolyRecord::new(r.den())?,
            pretty: r.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceInfo {
    pub name: String,
    pub table: u8,
    pub degrees: [u32; 3],
    pub relation: String,
    pub relation_degree: u32,
    pub provenance: Provenance,
    /// The printed relation, when the one above is a derived repair of it.
    pub printed_relation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableNote {
    pub table: u8,
    #[serde(flatten)]
    pub discrepancy: Discrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub weight: WeightSequence,
    pub euler_char: String,
    pub repr_type: ReprType,
    pub dynkin_label: Applicable<String>,
    pub dynkin_index: Applicable<u32>,
    pub f_c: PolyRecord,
    pub f_hat: PolyRecord,
    pub factorization: FactorizationRecord,
    pub roots_on_circle: bool,
    pub off_circle_count: usize,
    pub spectral_radius: RadiusRecord,
    pub period: Period,
    pub poincare: Applicable<RatFuncRecord>,
    pub support_monoid: Applicable<NumericalSemigroup>,
    pub formal_decomposition: Applicable<Option<GeneratedForm>>,
    pub complete_intersection: Applicable<bool>,
    pub three_generated: Applicable<bool>,
    pub hypersurface: Option<HypersurfaceInfo>,
    pub discrepancies: Vec<TableNote>,
}

/// `num/den` even for integers.
pub fn rational_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn hypersurface(p: &WeightSequence) -> Option<HypersurfaceInfo> {
    let printed = lookup(p)?;
    let used = corrected_registry().into_iter().find(|r| &r.weight == p)?;
    Some(HypersurfaceInfo {
        name: used.name.clone(),
        table: used.table,
        degrees: used.gen_degrees,
        relation: used.relation.to_string(),
        relation_degree: used.rel_degree,
        provenance: used.provenance,
        printed_relation: (printed.relation != used.relation).then(|| printed.relation.to_string()),
    })
}

pub fn analyze(p: &WeightSequence) -> Result<AnalysisReport> {
    let tol = Rational::new(1.into(), 10_000_000_000u64.into());
    let cox = coxeter_report(p, &tol);
    let wild = p.is_wild();
    let label = if wild { Some(p.dynkin_label()?) } else { None };
    let factorization = FactorizationRecord {
        cyclotomic: cox
            .factorization
            .factors
            .iter()
            .map(|(&index, &exponent)| CycloFactor { index, exponent })
            .collect(),
        remainder: PolyRecord::new(&cox.factorization.remainder)?,
        pretty: cox.factorization.to_string(),
    };
    let decomposition = if wild {
        decomposition_from(p, &cox.factorization)
    } else {
        None
    };
    let r = &cox.spectral_radius;
    Ok(AnalysisReport {
        weight: p.clone(),
        euler_char: rational_string(&p.euler_char()),
        repr_type: p.classify(),
        dynkin_label: Applicable::when(wild, || Ok(label.expect("wild").to_string()))?,
        dynkin_index: Applicable::when(wild, || Ok(label.expect("wild").index()))?,
        f_c: PolyRecord::new(&cox.f_c)?,
        f_hat: PolyRecord::new(&cox.f_hat)?,
        factorization,
        roots_on_circle: cox.roots_on_circle,
        off_circle_count: cox.off_circle_count,
        spectral_radius: RadiusRecord {
            decimal: format_decimal(&r.lo, 4),
            lo: rational_string(&r.lo),
            hi: rational_string(&r.hi),
            mode: r.mode,
        },
        period: cox.period,
        poincare: Applicable::when(wild, || RatFuncRecord::new(&poincare_closed(p)))?,
        support_monoid: Applicable::when(wild, || support_monoid(p))?,
        complete_intersection: Applicable::when(wild, || Ok(decomposition.is_some()))?,
        three_generated: Applicable::when(wild, || {
            Ok(decomposition.as_ref().is_some_and(|g| g.n() == 3))
        })?,
        formal_decomposition: Applicable::when(wild, || Ok(decomposition.clone()))?,
        hypersurface: hypersurface(p),
        discrepancies: discrepancies_for(p)?
            .into_iter()
            .map(|(table, discrepancy)| TableNote { table, discrepancy })
            .collect(),
    })
}

impl AnalysisReport {
    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self).map_err(|e| Error::Parse(e.to_string()))?;
        serde_json::to_string_pretty(&value).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weight               ({})", self.weight)?;
        writeln!(f, "euler characteristic {}", self.euler_char)?;
        writeln!(f, "type                 {}", self.repr_type)?;
        match (self.dynkin_label.value(), self.dynkin_index.value()) {
            (Some(l), Some(i)) => writeln!(f, "dynkin label         {l} (index {i})")?,
            _ => writeln!(f, "dynkin label         not applicable")?,
        }
        writeln!(f, "f_C                  {}", self.f_c.pretty)?;
        writeln!(f, "f_hat                {}", self.f_hat.pretty)?;
        writeln!(f, "factorization        {}", self.factorization.pretty)?;
        writeln!(f, "roots on circle      {}", self.roots_on_circle)?;
        writeln!(f, "off-circle roots     {}", self.off_circle_count)?;
        let r = &self.spectral_radius;
        writeln!(
            f,
            "spectral radius      {} in [{}, {}]",
            r.decimal, r.lo, r.hi
        )?;
        writeln!(f, "period               {}", self.period)?;
        match self.poincare.value() {
            Some(p) => writeln!(f, "poincare series      {}", p.pretty)?,
            None => writeln!(f, "poincare series      not applicable")?,
        }
        match self.support_monoid.value() {
            Some(m) => writeln!(
                f,
                "support monoid       {:?}, frobenius {}",
                m.generators, m.frobenius
            )?,
            None => writeln!(f, "support monoid       not applicable")?,
        }
        match self.formal_decomposition.value() {
            Some(Some(g)) => writeln!(f, "decomposition        d = {:?}, c = {:?}", g.d, g.c)?,
            Some(None) => writeln!(f, "decomposition        none")?,
            None => writeln!(f, "decomposition        not applicable")?,
        }
        writeln!(f, "complete intersection {}", self.complete_intersection)?;
        writeln!(f, "three generated      {}", self.three_generated)?;
        if let Some(h) = &self.hypersurface {
            write!(
                f,
                "hypersurface         {}: {} of degree {}",
                h.name, h.relation, h.relation_degree
            )?;
            match &h.printed_relation {
                Some(pr) => writeln!(f, " (derived; printed {pr})")?,
                None => writeln!(f)?,
            }
        }
        for n in &self.discrepancies {
            let d = &n.discrepancy;
            writeln!(
                f,
                "table {} {}: computed {}, printed {} ({:?})",
                n.table, d.field, d.computed, d.printed, d.kind
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::enumerate_by_sum;

    fn w(s: &str) -> WeightSequence {
        s.parse().unwrap()
    }

    #[test]
    fn report_237() {
        let r = analyze(&w("2,3,7")).unwrap();
        assert_eq!(r.factorization.pretty, "phi42");
        assert_eq!(r.period, Period::Finite(42));
        let m = r.support_monoid.value().unwrap();
        assert_eq!((m.generators.clone(), m.frobenius), (vec![6, 14, 21], 43));
        assert_eq!(r.euler_char, "-1/42");
        assert_eq!(r.spectral_radius.decimal, "1.0000");
        assert_eq!(r.hypersurface.as_ref().unwrap().name, "E_12");
        assert_eq!(r.three_generated, Applicable::Value(true));
        assert!(r.discrepancies.is_empty());
        assert_eq!(analyze(&w("7,3,2")).unwrap(), r);
    }

    #[test]
    fn tubular_fields_not_applicable() {
        let r = analyze(&w("2,3,6")).unwrap();
        assert_eq!(r.repr_type, ReprType::Tubular);
        assert!(r.poincare.value().is_none());
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["poincare"], "not-applicable");
        assert_eq!(v["support_monoid"], "not-applicable");
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        for p in enumerate_by_sum(11, 4) {
            let r = analyze(&p).unwrap();
            let s = r.to_json().unwrap();
            assert_eq!(AnalysisReport::from_json(&s).unwrap(), r, "{p}");
            assert_eq!(AnalysisReport::from_json(&s).unwrap().to_json().unwrap(), s);
        }
        let s = analyze(&w("2,3,10")).unwrap().to_json().unwrap();
        let keys: Vec<&str> = s
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert!(s.contains("\"computed\": \"144\""));
    }

    #[test]
    fn corrected_hypersurface_is_marked() {
        let h = analyze(&w("2,3,9")).unwrap().hypersurface.unwrap();
        assert_eq!(h.provenance, Provenance::Derived);
        assert_eq!(h.printed_relation.as_deref(), Some("Z^2+XZ^2+X^4"));
    }
}
