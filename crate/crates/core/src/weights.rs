//! Weight sequences, Euler characteristic, representation type, domination
//! order, Dynkin labels and the critical list.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// A normalized weight sequence: sorted, every entry at least 2, at least two entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightSequence(Vec<u32>);

impl WeightSequence {
    /// Sort, drop 1's, and require at least two remaining entries.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidWeight("weights must be positive".into()));
        }
        parts.retain(|&p| p != 1);
        parts.sort_unstable();
        if parts.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "need at least two weights >= 2, got {}",
                parts.len()
            )));
        }
        Ok(WeightSequence(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid weight literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of weights `t`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().map(|&p| BigInt::from(p)).product()
    }

    pub fn max_weight(&self) -> u32 {
        *self.0.last().expect("nonempty")
    }

    /// `2 - sum (1 - 1/p_i)`.
    pub fn euler_char(&self) -> Rational {
        let two = Rational::from_integer(BigInt::from(2));
        self.0.iter().fold(two, |acc, &p| {
            acc - Rational::new(BigInt::from(p - 1), BigInt::from(p))
        })
    }

    pub fn classify(&self) -> ReprType {
        let chi = self.euler_char();
        if chi.is_positive() {
            ReprType::Domestic
        } else if chi.is_zero() {
            ReprType::Tubular
        } else {
            ReprType::Wild
        }
    }

    pub fn is_wild(&self) -> bool {
        self.classify() == ReprType::Wild
    }

    pub(crate) fn require_wild(&self) -> Result<()> {
        match self.classify() {
            ReprType::Wild => Ok(()),
            other => Err(Error::NotWild {
                weight: self.to_string(),
                kind: other.to_string(),
            }),
        }
    }

    /// `self <= other` in the domination order, padding the shorter with 1's on the left.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        let a = padded(&self.0, n);
        let b = padded(&other.0, n);
        a.iter().zip(&b).all(|(x, y)| x <= y)
    }

    pub fn strictly_dominated_by(&self, other: &Self) -> bool {
        self != other && self.dominated_by(other)
    }

    /// Smallest tubular type dominated by a wild sequence.
    pub fn dynkin_label(&self) -> Result<DynkinLabel> {
        self.require_wild()?;
        if self.len() >= 4 {
            return Ok(DynkinLabel::L2222);
        }
        let mut fits: Vec<DynkinLabel> = [DynkinLabel::L333, DynkinLabel::L244, DynkinLabel::L236]
            .into_iter()
            .filter(|l| l.weights().dominated_by(self))
            .collect();
        fits.sort_by_key(|l| l.weights().sum());
        if fits.len() >= 2 {
            assert_ne!(
                fits[0].weights().sum(),
                fits[1].weights().sum(),
                "label sums never tie"
            );
        }
        fits.first()
            .copied()
            .ok_or_else(|| Error::Unsupported(format!("no tubular type below {self}")))
    }

    /// Whether a wild sequence lies strictly below a critical sequence.
    pub fn in_circle_list(&self) -> Result<bool> {
        self.require_wild()?;
        Ok(critical_list()
            .iter()
            .any(|c| self.strictly_dominated_by(c)))
    }

    pub fn is_critical(&self) -> bool {
        critical_list().contains(self)
    }
}

fn padded(v: &[u32], n: usize) -> Vec<u32> {
    let mut out = vec![1; n - v.len()];
    out.extend_from_slice(v);
    out
}

impl TryFrom<Vec<u32>> for WeightSequence {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WeightSequence> for Vec<u32> {
    fn from(w: WeightSequence) -> Self {
        w.0
    }
}

impl FromStr for WeightSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("weight {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ReprType {
    Domestic,
    Tubular,
    Wild,
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReprType::Domestic => "domestic",
            ReprType::Tubular => "tubular",
            ReprType::Wild => "wild",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum DynkinLabel {
    L2222,
    L333,
    L244,
    L236,
}

impl DynkinLabel {
    pub fn index(self) -> u32 {
        match self {
            DynkinLabel::L2222 => 2,
            DynkinLabel::L333 => 3,
            DynkinLabel::L244 => 4,
            DynkinLabel::L236 => 6,
        }
    }

    /// The tubular weight type the label names.
    pub fn weights(self) -> WeightSequence {
        match self {
            DynkinLabel::L2222 => WeightSequence::of(&[2, 2, 2, 2]),
            DynkinLabel::L333 => WeightSequence::of(&[3, 3, 3]),
            DynkinLabel::L244 => WeightSequence::of(&[2, 4, 4]),
            DynkinLabel::L236 => WeightSequence::of(&[2, 3, 6]),
        }
    }
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinLabel::L2222 => "[2,2,2,2]",
            DynkinLabel::L333 => "[3,3,3]",
            DynkinLabel::L244 => "[2,4,4]",
            DynkinLabel::L236 => "[2,3,6]",
        };
        write!(f, "{s}")
    }
}

const CRITICAL: [&[u32]; 18] = [
    &[2, 3, 11],
    &[2, 4, 9],
    &[2, 5, 8],
    &[2, 6, 7],
    &[3, 3, 8],
    &[3, 4, 7],
    &[3, 5, 6],
    &[4, 4, 6],
    &[4, 5, 5],
    &[2, 2, 2, 7],
    &[2, 2, 3, 6],
    &[2, 3, 4, 4],
    &[3, 3, 3, 4],
    &[2, 2, 2, 2, 5],
    &[2, 2, 2, 3, 4],
    &[2, 2, 3, 3, 3],
    &[2, 2, 2, 2, 2, 3],
    &[2, 2, 2, 2, 2, 2, 2],
];

/// The 18 minimal wild sequences whose Coxeter polynomial has a root off the unit circle.
pub fn critical_list() -> Vec<WeightSequence> {
    CRITICAL.iter().map(|c| WeightSequence::of(c)).collect()
}

/// All wild sequences strictly below some critical sequence, sorted by length then entries.
pub fn circle_list() -> Vec<WeightSequence> {
    let mut out = BTreeSet::new();
    for c in critical_list() {
        for s in 2..=c.len() {
            for p in sorted_sequences(s, 2, c.max_weight()) {
                let w = WeightSequence(p);
                if w.is_wild() && w.strictly_dominated_by(&c) {
                    out.insert(w);
                }
            }
        }
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort_by(by_length_then_entries);
    v
}

pub fn by_length_then_entries(a: &WeightSequence, b: &WeightSequence) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

/// Nondecreasing sequences of length `len` with entries in `lo..=hi`.
pub fn sorted_sequences(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(len, x, hi, cur, out);
            cur.pop();
        }
    }
    if lo <= hi {
        rec(len, lo, hi, &mut cur, &mut out);
    }
    out
}

/// Every sequence with `2 <= t <= max_t` and entries in `2..=max_entry`.
pub fn enumerate_by_entries(max_entry: u32, max_t: usize) -> Vec<WeightSequence> {
    (2..=max_t)
        .flat_map(|t| sorted_sequences(t, 2, max_entry))
        .map(WeightSequence)
        .collect()
}

/// Every sequence with `2 <= t <= max_t` and `sum p_i <= max_sum`.
pub fn enumerate_by_sum(max_sum: u32, max_t: usize) -> Vec<WeightSequence> {
    let mut out = Vec::new();
    fn rec(t: usize, lo: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<WeightSequence>) {
        if cur.len() == t {
            out.push(WeightSequence(cur.clone()));
            return;
        }
        let left = (t - cur.len()) as u32;
        let mut x = lo;
        while x * left <= budget {
            cur.push(x);
            rec(t, x, budget - x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    for t in 2..=max_t {
        rec(t, 2, max_sum, &mut Vec::new(), &mut out);
    }
    out
}
