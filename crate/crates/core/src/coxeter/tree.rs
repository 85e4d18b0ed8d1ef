//! Finite trees and the leaf-removal recursion for their Coxeter polynomials.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::IntPoly;

/// An undirected simple graph on `0..n`, validated as a tree where needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Build and validate: connected, `n - 1` edges, no loops or repeats.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                n,
                edges.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n || a == b {
                return Err(Error::NotATree(format!("bad edge ({a}, {b})")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::NotATree(format!("repeated edge ({a}, {b})")));
            }
        }
        let t = Tree { n, edges };
        let all: Vec<usize> = (0..n).collect();
        if t.components(&all).len() != 1 {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(t)
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("paths are trees")
    }

    /// Center `0` with arms of `a_i - 1` vertices each.
    pub fn star(arms: &[u32]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &a in arms {
            let mut prev = 0;
            for _ in 1..a {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::new(next, edges).expect("stars are trees")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn neighbors(&self, v: usize, within: &BTreeSet<usize>) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v && within.contains(&b) {
                    Some(b)
                } else if b == v && within.contains(&a) {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn components(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in verts {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                for u in self.neighbors(comp[i], &set) {
                    if seen.insert(u) {
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Coxeter polynomial of the path algebra of any orientation of `tree`.
///
/// Removing a leaf `v` with neighbour `u` gives `f = (1+T) f(tree - v) - T f(tree - v - u)`;
/// forests multiply over components and the empty forest contributes 1.
pub fn tree_coxeter_poly(tree: &Tree) -> IntPoly {
    let mut memo = HashMap::new();
    let all: Vec<usize> = (0..tree.n).collect();
    forest_poly(tree, &all, &mut memo)
}

fn forest_poly(tree: &Tree, verts: &[usize], memo: &mut HashMap<Vec<usize>, IntPoly>) -> IntPoly {
    tree.components(verts)
        .into_iter()
        .map(|c| component_poly(tree, c, memo))
        .product()
}

fn component_poly(
    tree: &Tree,
    comp: Vec<usize>,
    memo: &mut HashMap<Vec<usize>, IntPoly>,
) -> IntPoly {
    if let Some(p) = memo.get(&comp) {
        return p.clone();
    }
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    let result = if comp.len() == 1 {
        one_plus_t
    } else {
        let set: BTreeSet<usize> = comp.iter().copied().collect();
        let (leaf, nb) = comp
            .iter()
            .find_map(|&v| {
                let nbs = tree.neighbors(v, &set);
                (nbs.len() == 1).then(|| (v, nbs[0]))
            })
            .expect("a finite tree has a leaf");
        let without_leaf: Vec<usize> = comp.iter().copied().filter(|&v| v != leaf).collect();
        let without_both: Vec<usize> = without_leaf.iter().copied().filter(|&v| v != nb).collect();
        let a = forest_poly(tree, &without_leaf, memo);
        let b = forest_poly(tree, &without_both, memo);
        &(&one_plus_t * &a) - &b.shift(1)
    };
    memo.insert(comp, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::v_poly;

    #[test]
    fn paths_give_v() {
        for n in 1..10 {
            assert_eq!(tree_coxeter_poly(&Tree::path(n)), v_poly(n + 1));
        }
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::new(3, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::new(4, vec![(0, 1), (2, 3), (0, 1)]).is_err());
        assert!(Tree::new(4, vec![(0, 1), (2, 3)]).is_err());
        assert!(Tree::new(2, vec![(0, 0)]).is_err());
    }

    #[test]
    fn star_shape() {
        let s = Tree::star(&[2, 3, 7]);
        assert_eq!(s.vertex_count(), 10);
        // E8 Coxeter polynomial is phi_30
        assert_eq!(
            tree_coxeter_poly(&Tree::star(&[2, 3, 5])),
            crate::cyclotomic::cyclotomic(30)
        );
    }
}
