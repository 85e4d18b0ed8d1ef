//! Cartan matrices of canonical and extended canonical algebras, the Coxeter
//! matrix, the Euler form and the Tits form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{IntMatrix, WeightSequence};

/// A vertex of the (extended) canonical quiver.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Vertex {
    /// The source `0`.
    Source,
    /// Arm `arm` (1-based), position `pos` counted from the source, `1 <= pos <= p_arm - 1`.
    Arm { arm: usize, pos: usize },
    /// The sink `omega`.
    Sink,
    /// The extension vertex.
    Star,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Source => write!(f, "v0"),
            Vertex::Arm { arm, pos } => write!(f, "a_{arm}_{pos}"),
            Vertex::Sink => write!(f, "omega"),
            Vertex::Star => write!(f, "star"),
        }
    }
}

/// Hom-dimensions between indecomposable projectives, with the quiver that produced them.
///
/// `matrix[(x, y)]` is the number of paths `x -> y` modulo relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub weight: WeightSequence,
    pub matrix: IntMatrix,
    pub labels: Vec<Vertex>,
    /// Arrows as index pairs `(from, to)`.
    pub arrows: Vec<(usize, usize)>,
    /// Minimal relations `(from, to, count)`.
    pub relations: Vec<(usize, usize, u32)>,
}

impl CartanData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.labels.iter().position(|&l| l == v)
    }
}

/// Vertex order: source, arms in order, sink.
pub fn canonical_vertices(p: &WeightSequence) -> Vec<Vertex> {
    let mut v = vec![Vertex::Source];
    for (i, &pi) in p.parts().iter().enumerate() {
        for j in 1..pi as usize {
            v.push(Vertex::Arm { arm: i + 1, pos: j });
        }
    }
    v.push(Vertex::Sink);
    v
}

pub fn cartan_canonical(p: &WeightSequence) -> CartanData {
    let labels = canonical_vertices(p);
    let n = labels.len();
    let t = p.len() as i64;
    let paths = |x: Vertex, y: Vertex| -> i64 {
        use Vertex::*;
        match (x, y) {
            _ if x == y => 1,
            (Source, Arm { .. }) => 1,
            (Source, Sink) => 2,
            (Arm { arm: a, pos: i }, Arm { arm: b, pos: j }) if a == b && i <= j => 1,
            (Arm { .. }, Sink) => 1,
            _ => 0,
        }
    };
    let matrix = IntMatrix::from_fn(n, n, |i, j| BigInt::from(paths(labels[i], labels[j])));
    let idx = |v: Vertex| labels.iter().position(|&l| l == v).expect("vertex present");
    let mut arrows = Vec::new();
    for (i, &pi) in p.parts().iter().enumerate() {
        let arm = i + 1;
        let last = pi as usize - 1;
        arrows.push((idx(Vertex::Source), idx(Vertex::Arm { arm, pos: 1 })));
        for j in 1..last {
            arrows.push((
                idx(Vertex::Arm { arm, pos: j }),
                idx(Vertex::Arm { arm, pos: j + 1 }),
            ));
        }
        arrows.push((idx(Vertex::Arm { arm, pos: last }), idx(Vertex::Sink)));
    }
    let mut relations = Vec::new();
    if t > 2 {
        relations.push((idx(Vertex::Source), idx(Vertex::Sink), (t - 2) as u32));
    }
    CartanData {
        weight: p.clone(),
        matrix,
        labels,
        arrows,
        relations,
    }
}

/// One-point extension by the projective at `base`: a new vertex with one arrow `* -> base`.
pub fn cartan_extended(p: &WeightSequence, base: Vertex) -> Result<CartanData> {
    let c = cartan_canonical(p);
    let b = c.index_of(base).ok_or_else(|| {
        Error::InvalidWeight(format!("vertex {base} is not in the quiver of {p}"))
    })?;
    let n = c.dim();
    let matrix = IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i == n, j == n) {
        (true, true) => BigInt::one(),
        (true, false) => c.matrix[(b, j)].clone(),
        (false, true) => BigInt::zero(),
        (false, false) => c.matrix[(i, j)].clone(),
    });
    let mut labels = c.labels;
    labels.push(Vertex::Star);
    let mut arrows = c.arrows;
    arrows.push((n, b));
    Ok(CartanData {
        weight: p.clone(),
        matrix,
        labels,
        arrows,
        relations: c.relations,
    })
}

/// Extension at the sink.
pub fn cartan_extended_default(p: &WeightSequence) -> CartanData {
    cartan_extended(p, Vertex::Sink).expect("the sink always exists")
}

/// `Phi = -C^{-1} C^T`, satisfying `<v, Phi w> = -<w, v>` for `<v, w> = v^T C w`.
pub fn coxeter_matrix(c: &CartanData) -> IntMatrix {
    let inv = c
        .matrix
        .inverse_unimodular()
        .expect("Cartan matrices are unipotent");
    (&inv * &c.matrix.transpose()).neg()
}

/// `<v, w> = v^T C w`.
pub fn euler_form(c: &CartanData, v: &[BigInt], w: &[BigInt]) -> Result<BigInt> {
    if v.len() != c.dim() || w.len() != c.dim() {
        return Err(Error::Dimension(format!(
            "vectors must have length {}",
            c.dim()
        )));
    }
    Ok(c.matrix.bilinear(v, w))
}

/// `sum x_i^2 - sum_{i -> j} x_i x_j + sum r(i, j) x_i x_j`.
pub fn tits_form(c: &CartanData, x: &[BigInt]) -> Result<BigInt> {
    if x.len() != c.dim() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a quiver with {} vertices",
            x.len(),
            c.dim()
        )));
    }
    let mut q: BigInt = x.iter().map(|a| a * a).sum();
    for &(i, j) in &c.arrows {
        q -= &x[i] * &x[j];
    }
    for &(i, j, r) in &c.relations {
        q += &x[i] * &x[j] * BigInt::from(r);
    }
    Ok(q)
}

/// `2w + e_*` on the extension at the sink, with `w` all ones on the canonical part.
pub fn wildness_witness(p: &WeightSequence) -> (CartanData, Vec<BigInt>) {
    let c = cartan_extended_default(p);
    let n = c.dim();
    let mut x = vec![BigInt::from(2); n];
    x[n - 1] = BigInt::one();
    (c, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightSequence {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_22() {
        let c = cartan_canonical(&w("2,2"));
        assert_eq!(c.dim(), 4);
        assert_eq!(c.matrix[(0, 3)], BigInt::from(2));
        assert!(c.relations.is_empty());
        assert_eq!(c.arrows.len(), 4);
    }

    #[test]
    fn source_sink_entry_is_two() {
        for s in ["2,3,7", "2,2,2,2,2", "3,4"] {
            let c = cartan_canonical(&w(s));
            let n = c.dim();
            assert_eq!(c.matrix[(0, n - 1)], BigInt::from(2));
            // unipotent upper triangular
            for i in 0..n {
                assert!(c.matrix[(i, i)].is_one());
                for j in 0..i {
                    assert!(c.matrix[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn extension_row_copies_base() {
        let p = w("2,3,7");
        let c = cartan_extended(&p, Vertex::Arm { arm: 3, pos: 2 }).unwrap();
        let n = c.dim();
        let b = c.index_of(Vertex::Arm { arm: 3, pos: 2 }).unwrap();
        for j in 0..n - 1 {
            assert_eq!(c.matrix[(n - 1, j)], c.matrix[(b, j)]);
            assert!(c.matrix[(j, n - 1)].is_zero());
        }
        assert!(cartan_extended(&p, Vertex::Arm { arm: 4, pos: 1 }).is_err());
    }

    #[test]
    fn single_vertex_coxeter() {
        let c = CartanData {
            weight: w("2,2"),
            matrix: IntMatrix::identity(1),
            labels: vec![Vertex::Source],
            arrows: vec![],
            relations: vec![],
        };
        assert_eq!(coxeter_matrix(&c), IntMatrix::from_i64_rows(&[&[-1]]));
    }

    #[test]
    fn tits_values() {
        let (c, x) = wildness_witness(&w("2,3,7"));
        assert_eq!(tits_form(&c, &x).unwrap(), BigInt::from(-1));
        let mut e = vec![BigInt::zero(); c.dim()];
        e[3] = BigInt::one();
        assert_eq!(tits_form(&c, &e).unwrap(), BigInt::one());
        let t = cartan_canonical(&w("2,2,2,2"));
        let ones = vec![BigInt::one(); t.dim()];
        assert!(tits_form(&t, &ones).unwrap().is_zero());
        assert!(tits_form(&t, &ones[1..]).is_err());
    }
}
