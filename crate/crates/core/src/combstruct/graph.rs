use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::SupportSet;
use crate::number::Rational;
use crate::{Error, Result};

/// An undirected edge `{u, v}` with a non-negative weight. Vertices are
/// 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
}

/// A loopless graph on `0..n`. Parallel edges are kept as separate entries;
/// matching-based constructions merge them by summing weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for (idx, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!("edge {idx} leaves the vertex range")));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("edge {idx} is a loop")));
            }
        }
        Ok(WeightedGraph { n, edges })
    }

    /// Unit-weight graph from vertex pairs.
    pub fn unweighted(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| Edge { u, v, weight: crate::number::int(1) })
            .collect();
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.weight.is_negative()) {
            Some(idx) => Err(Error::NegativeWeight(idx)),
            None => Ok(()),
        }
    }

    /// Edges with parallel copies merged (weights summed), endpoints ordered
    /// `u < v`, sorted by endpoints. Edges whose merged weight is zero are
    /// dropped.
    pub fn merged_edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = Vec::new();
        let mut sorted: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge { u: e.u.min(e.v), v: e.u.max(e.v), weight: e.weight.clone() })
            .collect();
        sorted.sort_by_key(|e| (e.u, e.v));
        for e in sorted {
            match out.last_mut() {
                Some(last) if last.u == e.u && last.v == e.v => last.weight += e.weight,
                _ => out.push(e),
            }
        }
        out.retain(|e| !e.weight.is_zero());
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for e in &self.edges {
                let y = if e.u == x {
                    e.v
                } else if e.v == x {
                    e.u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// All matchings of the given edge list, each as a sorted list of edge
/// indices. Includes the empty matching.
pub fn matchings(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    fn rec(
        start: usize,
        edges: &[Edge],
        covered: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for idx in start..edges.len() {
            let e = &edges[idx];
            if covered[e.u] || covered[e.v] {
                continue;
            }
            covered[e.u] = true;
            covered[e.v] = true;
            current.push(idx);
            rec(idx + 1, edges, covered, current, out);
            current.pop();
            covered[e.u] = false;
            covered[e.v] = false;
        }
    }
    let mut out = Vec::new();
    rec(0, edges, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Indicator vectors of the vertex sets covered by some matching of `graph`,
/// the empty set included.
pub fn matching_support(graph: &WeightedGraph) -> Result<SupportSet> {
    if graph.n > 16 {
        return Err(Error::SizeGuard { what: "vertex count", limit: 16, found: graph.n });
    }
    let edges = graph.merged_edges();
    let points = matchings(graph.n, &edges).into_iter().map(|m| {
        let mut p = vec![0i64; graph.n];
        for idx in m {
            p[edges[idx].u] = 1;
            p[edges[idx].v] = 1;
        }
        p
    });
    Ok(SupportSet::from_points_unchecked(graph.n, points))
}

/// Degree vectors of all spanning subgraphs `{D(H) : H ⊆ G}`.
///
/// Built edge by edge as `S ← S ∪ (S + e_u + e_v)`, which yields the same set
/// as enumerating all edge subsets.
pub fn degree_sequence_system(graph: &WeightedGraph) -> Result<SupportSet> {
    let m = graph.edges.len();
    if m > 24 {
        return Err(Error::SizeGuard { what: "edge count", limit: 24, found: m });
    }
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    set.insert(vec![0; graph.n]);
    for e in &graph.edges {
        let shifted: Vec<Vec<i64>> = set
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q[e.u] += 1;
                q[e.v] += 1;
                q
            })
            .collect();
        set.extend(shifted);
    }
    Ok(SupportSet::from_points_unchecked(graph.n, set))
}
