//! Quivers and graphs of a weight sequence, emitted as DOT.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::{
    cartan_canonical, cartan_extended_default, double_extended_star, CartanData, Tree, Vertex,
};
use crate::error::{Error, Result};
use crate::weights::ReprType;
use crate::WeightSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    /// The canonical quiver with its `t - 2` relations.
    Canonical,
    /// The canonical quiver with the extension vertex hanging at `omega`.
    Extended,
    /// The star `[p_1, ..., p_t]`.
    Star,
    /// The double-extended graph of a domestic type.
    DoubleExtended,
}

impl FromStr for DiagramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(DiagramKind::Canonical),
            "extended" => Ok(DiagramKind::Extended),
            "star" => Ok(DiagramKind::Star),
            "double-extended" => Ok(DiagramKind::DoubleExtended),
            _ => Err(Error::Parse(format!("unknown diagram kind {s:?}"))),
        }
    }
}

/// A graph ready for DOT output. Undirected graphs are drawn with `dir=none`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub directed: bool,
    pub vertices: Vec<String>,
    /// `(from, to, label)`
    pub edges: Vec<(String, String, Option<String>)>,
    pub comments: Vec<String>,
}

impl Diagram {
    fn index(&self, v: &str) -> usize {
        self.vertices
            .iter()
            .position(|x| x == v)
            .expect("known vertex")
    }

    /// The underlying graph as a tree, when it is one.
    pub fn to_tree(&self) -> Result<Tree> {
        let edges = self
            .edges
            .iter()
            .map(|(a, b, _)| (self.index(a), self.index(b)))
            .collect();
        Tree::new(self.vertices.len(), edges)
    }

    pub fn relation_count(&self) -> usize {
        self.comments
            .iter()
            .filter(|c| c.starts_with("relation"))
            .count()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "digraph \"{}\" {{", self.name)?;
        for c in &self.comments {
            writeln!(f, "  // {c}")?;
        }
        if !self.directed {
            writeln!(f, "  edge [dir=none];")?;
        }
        for v in &self.vertices {
            let label = if v == "star" { "*" } else { v.as_str() };
            writeln!(f, "  {v} [label=\"{label}\"];")?;
        }
        for (a, b, label) in &self.edges {
            match label {
                Some(l) => writeln!(f, "  {a} -> {b} [label=\"{l}\"];")?,
                None => writeln!(f, "  {a} -> {b};")?,
            }
        }
        writeln!(f, "}}")
    }
}

fn arm(i: usize, j: usize) -> String {
    Vertex::Arm { arm: i, pos: j }.to_string()
}

/// Canonical relations `x_i = x_2 - lambda_i x_1` for `3 <= i <= t`, where `x_i` is the
/// composite `alpha_{i,p_i} ... alpha_{i,1}` along arm `i`.
fn relation_comments(p: &WeightSequence) -> Vec<String> {
    (3..=p.len())
        .map(|i| format!("relation: x{i} = x2 - lambda_{i} x1"))
        .collect()
}

fn from_cartan(name: String, c: &CartanData) -> Diagram {
    let vertices: Vec<String> = c.labels.iter().map(Vertex::to_string).collect();
    let edges = c
        .arrows
        .iter()
        .map(|&(a, b)| {
            let label = match (c.labels[a], c.labels[b]) {
                (Vertex::Star, _) => "beta".to_string(),
                (_, Vertex::Arm { arm, pos }) => format!("alpha_{arm}_{pos}"),
                (Vertex::Arm { arm, pos }, Vertex::Sink) => format!("alpha_{arm}_{}", pos + 1),
                _ => unreachable!("every canonical arrow enters an arm vertex or the sink"),
            };
            (vertices[a].clone(), vertices[b].clone(), Some(label))
        })
        .collect();
    let mut comments = vec![format!("weight ({})", c.weight)];
    comments.extend(relation_comments(&c.weight));
    Diagram {
        name,
        directed: true,
        vertices,
        edges,
        comments,
    }
}

/// Star with center `v0` and arm vertices `a_i_j`; the vertex named in `last` replaces the
/// final vertex of the last arm.
fn star_diagram(name: String, arms: &[u32], last: Option<&str>) -> Diagram {
    let mut vertices = vec!["v0".to_string()];
    let mut edges = Vec::new();
    for (i, &a) in arms.iter().enumerate() {
        let mut prev = "v0".to_string();
        for j in 1..a as usize {
            let v = match last {
                Some(l) if i + 1 == arms.len() && j + 1 == a as usize => l.to_string(),
                _ => arm(i + 1, j),
            };
            vertices.push(v.clone());
            edges.push((prev, v.clone(), None));
            prev = v;
        }
    }
    let shown: Vec<String> = arms.iter().map(u32::to_string).collect();
    Diagram {
        name,
        directed: false,
        vertices,
        edges,
        comments: vec![format!("star [{}]", shown.join(","))],
    }
}

/// The double-extended graph: the extended Dynkin graph of the domestic star with one
/// more edge at an extension vertex. For `(p, q)` it is the cycle through `v0` and
/// `omega` with `star` at `omega`; for `(2, 2, n)` the affine leaf is `a_4_1`.
fn double_extended(p: &WeightSequence) -> Result<Diagram> {
    let name = format!("double_extended_{}", p.to_string().replace(',', "_"));
    if p.classify() != ReprType::Domestic {
        return Err(Error::Unsupported(format!(
            "double-extended graphs need a domestic weight, ({p}) is {}",
            p.classify()
        )));
    }
    if let Some(arms) = double_extended_star(p) {
        return Ok(star_diagram(name, &arms, Some("star")));
    }
    match *p.parts() {
        [a, b] => {
            let mut vertices = vec!["v0".to_string()];
            let mut edges = Vec::new();
            for (i, len) in [a, b].into_iter().enumerate() {
                let mut prev = "v0".to_string();
                for j in 1..len as usize {
                    let v = arm(i + 1, j);
                    vertices.push(v.clone());
                    edges.push((prev, v.clone(), None));
                    prev = v;
                }
                edges.push((prev, "omega".to_string(), None));
            }
            vertices.extend(["omega".to_string(), "star".to_string()]);
            edges.push(("omega".to_string(), "star".to_string(), None));
            Ok(Diagram {
                name,
                directed: false,
                vertices,
                edges,
                comments: vec![format!("cycle of type ({p}) with star at omega")],
            })
        }
        [2, 2, n] => {
            let mut d = star_diagram(name, &[2, 2, n], None);
            let hub = if n == 2 {
                "v0".to_string()
            } else {
                arm(3, n as usize - 2)
            };
            let leaf = arm(3, n as usize - 1);
            d.vertices.extend(["a_4_1".to_string(), "star".to_string()]);
            d.edges.push((hub, "a_4_1".to_string(), None));
            d.edges.push((leaf, "star".to_string(), None));
            d.comments = vec![format!("affine type ({p}) with star at the end of arm 3")];
            Ok(d)
        }
        _ => unreachable!("domestic triples are (2,2,n) or (2,3,3..5)"),
    }
}

pub fn diagram(p: &WeightSequence, kind: DiagramKind) -> Result<Diagram> {
    let tag = p.to_string().replace(',', "_");
    match kind {
        DiagramKind::Canonical => Ok(from_cartan(
            format!("canonical_{tag}"),
            &cartan_canonical(p),
        )),
        DiagramKind::Extended => Ok(from_cartan(
            format!("extended_{tag}"),
            &cartan_extended_default(p),
        )),
        DiagramKind::Star => Ok(star_diagram(format!("star_{tag}"), p.parts(), None)),
        DiagramKind::DoubleExtended => double_extended(p),
    }
}
