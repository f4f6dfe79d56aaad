//! Simple undirected graphs whose vertices are primes, plus the exact
//! searches used by the n-exact test.
//!
//! Vertices are held in ascending order and addressed internally by index;
//! every search visits vertices and neighbours in ascending prime order, so
//! all results are deterministic.

mod clique;
mod cycles;
mod hamilton;
mod iso;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::PrimeSet;

pub use clique::{is_kn_free, max_clique, CliqueCheck, CLIQUE_CAP};
pub use cycles::{is_bipartite, longest_odd_cycle_at_least, Bipartiteness, ODD_CYCLE_CAP};
pub use hamilton::{is_hamiltonian, HAMILTON_CAP};
pub use iso::{isomorphic_small, ISOMORPHISM_CAP};

/// Immutable simple graph on a set of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    vertices: PrimeSet,
    // ascending neighbour indices per vertex
    adj: Vec<Vec<usize>>,
}

impl PrimeGraph {
    /// Builds a graph; repeated edges collapse, loops and unknown endpoints are rejected.
    pub fn new(vertices: PrimeSet, edges: impl IntoIterator<Item = (u128, u128)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertices.len()];
        for (p, q) in edges {
            if p == q {
                return Err(Error::BadParameter(format!("loop at vertex {p}")));
            }
            let i = index_in(&vertices, p)?;
            let j = index_in(&vertices, q)?;
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(PrimeGraph { vertices, adj })
    }

    /// Edgeless graph.
    pub fn empty(vertices: PrimeSet) -> Self {
        let adj = vec![Vec::new(); vertices.len()];
        PrimeGraph { vertices, adj }
    }

    pub fn complete(vertices: PrimeSet) -> Self {
        let n = vertices.len();
        let adj = (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect();
        PrimeGraph { vertices, adj }
    }

    /// The cycle visiting `order` in the given sequence.
    pub fn cycle(order: &[u128]) -> Result<Self> {
        if order.len() < 3 {
            return Err(Error::BadParameter("a cycle needs at least 3 vertices".into()));
        }
        let vertices = PrimeSet::new(order.iter().copied())?;
        let edges = (0..order.len()).map(|i| (order[i], order[(i + 1) % order.len()]));
        PrimeGraph::new(vertices, edges)
    }

    pub(crate) fn from_adjacency(vertices: PrimeSet, adj: Vec<Vec<usize>>) -> Self {
        PrimeGraph { vertices, adj }
    }

    pub fn vertices(&self) -> &PrimeSet {
        &self.vertices
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges with the smaller prime first, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u128, u128)> {
        let vs = self.vertices.as_slice();
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (vs[i], vs[j])))
            .collect()
    }

    pub fn has_edge(&self, p: u128, q: u128) -> bool {
        match (self.index_of(p), self.index_of(q)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    pub fn neighbors(&self, p: u128) -> Option<impl Iterator<Item = u128> + '_> {
        let i = self.index_of(p)?;
        let vs = self.vertices.as_slice();
        Some(self.adj[i].iter().map(move |&j| vs[j]))
    }

    pub fn index_of(&self, p: u128) -> Option<usize> {
        self.vertices.as_slice().binary_search(&p).ok()
    }

    pub(crate) fn vertex(&self, i: usize) -> u128 {
        self.vertices.as_slice()[i]
    }

    pub(crate) fn adjacent_indices(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Adjacency rows as bitmasks; callers enforce `order() <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &j| m | (1 << j)))
            .collect()
    }

    pub(crate) fn ensure_order_at_most(&self, operation: &'static str, cap: usize) -> Result<()> {
        if self.order() > cap {
            Err(Error::TooLarge {
                operation,
                size: self.order(),
                cap,
            })
        } else {
            Ok(())
        }
    }
}

fn index_in(vertices: &PrimeSet, p: u128) -> Result<usize> {
    vertices
        .as_slice()
        .binary_search(&p)
        .map_err(|_| Error::UnknownVertex(p))
}

/// Simple cycle given as its vertex sequence; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    vertices: Vec<u128>,
    length: usize,
}

impl CycleWitness {
    pub(crate) fn from_sequence(vertices: Vec<u128>) -> Self {
        let length = vertices.len();
        CycleWitness { vertices, length }
    }

    pub fn vertices(&self) -> &[u128] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn vertex_set(&self) -> PrimeSet {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        PrimeSet::from_sorted_unchecked(v)
    }

    /// Checks length, distinctness and cyclic adjacency against `host`.
    pub fn validates_in(&self, host: &PrimeGraph) -> bool {
        let k = self.vertices.len();
        if k < 3 || k != self.length {
            return false;
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == k && (0..k).all(|i| host.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Same vertex set, an edge exactly where `g` has none.
pub fn complement(g: &PrimeGraph) -> PrimeGraph {
    let n = g.order();
    let adj = (0..n)
        .map(|i| {
            let row = g.adjacent_indices(i);
            (0..n).filter(|&j| j != i && row.binary_search(&j).is_err()).collect()
        })
        .collect();
    PrimeGraph::from_adjacency(g.vertices().clone(), adj)
}

pub fn induced_subgraph(g: &PrimeGraph, subset: &PrimeSet) -> Result<PrimeGraph> {
    let old: Vec<usize> = subset
        .iter()
        .map(|p| g.index_of(p).ok_or(Error::UnknownVertex(p)))
        .collect::<Result<_>>()?;
    let adj = old
        .iter()
        .map(|&i| {
            let row = g.adjacent_indices(i);
            old.iter()
                .enumerate()
                .filter(|(_, &j)| row.binary_search(&j).is_ok())
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    Ok(PrimeGraph::from_adjacency(subset.clone(), adj))
}

/// Disjoint union of `a` and `b` plus every edge between them.
pub fn join(a: &PrimeGraph, b: &PrimeGraph) -> Result<PrimeGraph> {
    let clash = a.vertices().intersection(b.vertices());
    if !clash.is_empty() {
        return Err(Error::VertexClash(clash.as_slice().to_vec()));
    }
    let vertices = a.vertices().union(b.vertices());
    let mut edges = a.edges();
    edges.extend(b.edges());
    for p in a.vertices().iter() {
        edges.extend(b.vertices().iter().map(|q| (p, q)));
    }
    PrimeGraph::new(vertices, edges)
}

/// Maximal connected vertex sets, ordered by least element.
pub fn connected_components(g: &PrimeGraph) -> Vec<PrimeSet> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.adjacent_indices(u) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(PrimeSet::from_sorted_unchecked(
            members.into_iter().map(|i| g.vertex(i)).collect(),
        ));
    }
    out
}

pub fn has_triangle(g: &PrimeGraph) -> bool {
    (0..g.order()).any(|i| {
        let row = g.adjacent_indices(i);
        row.iter().filter(|&&j| j > i).any(|&j| {
            g.adjacent_indices(j)
                .iter()
                .any(|&k| k > j && row.binary_search(&k).is_ok())
        })
    })
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    pub fn set(v: &[u128]) -> PrimeSet {
        PrimeSet::new(v.iter().copied()).unwrap()
    }

    pub fn graph(v: &[u128], e: &[(u128, u128)]) -> PrimeGraph {
        PrimeGraph::new(set(v), e.iter().copied()).unwrap()
    }

    /// Δ(PSL₂(64)): components {2}, {3,7}, {5,13}.
    pub fn psl2_64() -> PrimeGraph {
        graph(&[2, 3, 5, 7, 13], &[(3, 7), (5, 13)])
    }
}
